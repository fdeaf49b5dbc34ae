// Command-line front end: one subcommand per library operation family.
// Exit codes: 0 success, 1 domain error (bad input data, failed --assert),
// 2 usage error.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "mixbraid/algebraize.hpp"
#include "mixbraid/diagram.hpp"
#include "mixbraid/invariants.hpp"
#include "mixbraid/moves.hpp"
#include "mixbraid/normal_form.hpp"
#include "mixbraid/search.hpp"
#include "mixbraid/word.hpp"

using json = nlohmann::ordered_json;
using namespace mixbraid;

namespace {

std::string read_input(const std::string& arg) {
  if (arg == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(arg);
  if (!in) throw std::invalid_argument("cannot open file: " + arg);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

FunctionalSpec functional_by_name(const std::string& name, int g) {
  if (name == "homology") return homology_functional(g);
  if (name == "scaled") return scaled_homology_functional(g);
  if (name == "broken") return broken_functional(g);
  throw std::invalid_argument("unknown functional: " + name);
}

std::vector<BraidWord> axiom_samples(int g, int count, unsigned seed) {
  std::vector<BraidWord> samples;
  unsigned state = seed;
  auto rnd = [&state](int m) {
    state = state * 1664525u + 1013904223u;
    return static_cast<int>((state >> 16) % static_cast<unsigned>(m));
  };
  for (int k = 0; k < count; ++k) {
    int n = 1 + rnd(3);
    int len = rnd(8);
    std::vector<Generator> runs;
    for (int i = 0; i < len; ++i) {
      int s = rnd(2) ? 1 : -1;
      if (n > 1 && rnd(2))
        runs.push_back(Generator{Kind::Sigma, 1 + rnd(n - 1), s});
      else
        runs.push_back(Generator{Kind::A, 1 + rnd(g), s});
    }
    samples.push_back(make_word(g, n, runs));
  }
  return samples;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"mixbraid: braids, moves and invariants for links in a handlebody"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "emit machine-readable output");

  std::string w1, w2, conv_to = "b", func_name = "homology", input, cert_path, side = "right";
  std::string ltype = "o";
  int split = 0, strand = 1, sign = 1, index = 1;
  int depth = 10, max_n = 0;
  long long max_states = 100000;
  int samples = 100;
  unsigned seed = 1;
  bool assert_flag = false, no_omega = false, no_lmoves = false;

  CLI::App* parse_cmd = app.add_subcommand("parse", "parse a word and print its reduced form");
  parse_cmd->add_option("word", w1)->required();

  CLI::App* nf_cmd = app.add_subcommand("nf", "canonical normal form of a word");
  nf_cmd->add_option("word", w1)->required();

  CLI::App* eq_cmd = app.add_subcommand("eq", "decide equality of two words");
  eq_cmd->add_option("word1", w1)->required();
  eq_cmd->add_option("word2", w2)->required();
  eq_cmd->add_flag("--assert", assert_flag, "exit 1 when not equal");

  CLI::App* conv_cmd = app.add_subcommand("convert", "convert between the a- and b-presentations");
  conv_cmd->add_option("word", w1)->required();
  conv_cmd->add_option("--to", conv_to, "target family: a or b")->check(CLI::IsMember({"a", "b"}));

  CLI::App* embed_cmd = app.add_subcommand("embed", "image in the classical braid group on g+n strands");
  embed_cmd->add_option("word", w1)->required();

  CLI::App* lmove_cmd = app.add_subcommand("lmove", "apply an algebraic L-move");
  lmove_cmd->add_option("word", w1)->required();
  lmove_cmd->add_option("--split", split, "unit split position")->required();
  lmove_cmd->add_option("--strand", strand, "new strand position i")->required();
  lmove_cmd->add_option("--sign", sign)->check(CLI::IsMember({1, -1}));
  lmove_cmd->add_option("--type", ltype)->check(CLI::IsMember({"o", "u"}));

  CLI::App* stab_cmd = app.add_subcommand("stab", "insert a Markov twist at a split");
  stab_cmd->add_option("word", w1)->required();
  stab_cmd->add_option("--split", split)->required();
  stab_cmd->add_option("--sign", sign)->check(CLI::IsMember({1, -1}));

  CLI::App* conj_cmd = app.add_subcommand("conj", "Markov conjugation by a crossing");
  conj_cmd->add_option("word", w1)->required();
  conj_cmd->add_option("--index", index)->required();
  conj_cmd->add_option("--sign", sign)->check(CLI::IsMember({1, -1}));

  CLI::App* close_cmd = app.add_subcommand("close", "algebraic closure as a Morse diagram");
  close_cmd->add_option("word", w1)->required();

  CLI::App* braid_cmd = app.add_subcommand("braid", "braid a diagram file ('-' for stdin)");
  braid_cmd->add_option("input", input)->required();

  CLI::App* alg_cmd = app.add_subcommand("algebraize", "algebraize a geometric mixed braid file");
  alg_cmd->add_option("input", input)->required();

  CLI::App* inv_cmd = app.add_subcommand("invariant", "normalized link invariant of a word");
  inv_cmd->add_option("word", w1)->required();
  inv_cmd->add_option("--functional", func_name);

  CLI::App* ax_cmd = app.add_subcommand("axioms", "check the Markov functional axioms");
  ax_cmd->add_option("--functional", func_name);
  ax_cmd->add_option("--genus", index, "genus of the sample words")->required();
  ax_cmd->add_option("--samples", samples);
  ax_cmd->add_option("--seed", seed);
  ax_cmd->add_flag("--assert", assert_flag, "exit 1 when any axiom fails");

  CLI::App* search_cmd = app.add_subcommand("search", "search for a Markov-equivalence certificate");
  search_cmd->add_option("word1", w1)->required();
  search_cmd->add_option("word2", w2)->required();
  search_cmd->add_option("--depth", depth);
  search_cmd->add_option("--max-n", max_n);
  search_cmd->add_option("--max-states", max_states);
  search_cmd->add_flag("--no-omega", no_omega, "disable the maximal-loop macro move");
  search_cmd->add_flag("--no-l-moves", no_lmoves, "restrict to the plain Markov move set");
  search_cmd->add_flag("--assert", assert_flag, "exit 1 when no certificate is found");

  CLI::App* replay_cmd = app.add_subcommand("replay", "verify a serialized certificate");
  replay_cmd->add_option("input", cert_path)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*parse_cmd) {
      BraidWord w = parse_word(w1);
      if (as_json)
        std::cout << json{{"word", word_to_string(w)}, {"g", w.g}, {"n", w.n},
                          {"units", unit_count(w)}}.dump() << "\n";
      else
        std::cout << word_to_string(w) << "\n";
    } else if (*nf_cmd) {
      BraidWord w = parse_word(w1);
      std::string nf = normal_form(w).serialize();
      if (as_json)
        std::cout << json{{"word", word_to_string(w)}, {"normal_form", nf}}.dump() << "\n";
      else
        std::cout << nf << "\n";
    } else if (*eq_cmd) {
      BraidWord a = parse_word(w1), b = parse_word(w2);
      bool same = equal(a, b);
      if (as_json)
        std::cout << json{{"equal", same}}.dump() << "\n";
      else
        std::cout << (same ? "equal" : "not equal") << "\n";
      if (assert_flag && !same) return 1;
    } else if (*conv_cmd) {
      BraidWord w = parse_word(w1);
      BraidWord r = conv_to == "b" ? a_to_b(w) : b_to_a(w);
      std::cout << (as_json ? json{{"word", word_to_string(r)}}.dump() : word_to_string(r)) << "\n";
    } else if (*embed_cmd) {
      BraidWord r = embed(parse_word(w1));
      std::cout << (as_json ? json{{"word", word_to_string(r)}}.dump() : word_to_string(r)) << "\n";
    } else if (*lmove_cmd) {
      BraidWord r = apply_l_move(parse_word(w1), split, strand, sign,
                                 ltype == "o" ? LMoveType::Over : LMoveType::Under);
      std::cout << (as_json ? json{{"word", word_to_string(r)}}.dump() : word_to_string(r)) << "\n";
    } else if (*stab_cmd) {
      BraidWord r = stabilize(parse_word(w1), split, sign);
      std::cout << (as_json ? json{{"word", word_to_string(r)}}.dump() : word_to_string(r)) << "\n";
    } else if (*conj_cmd) {
      BraidWord r = sigma_conjugate(parse_word(w1), index, sign);
      std::cout << (as_json ? json{{"word", word_to_string(r)}}.dump() : word_to_string(r)) << "\n";
    } else if (*close_cmd) {
      MixedDiagram d = close_algebraic(parse_word(w1));
      if (as_json)
        std::cout << json{{"diagram", diagram_to_string(d)}}.dump() << "\n";
      else
        std::cout << diagram_to_string(d);
    } else if (*braid_cmd) {
      MixedDiagram d = parse_diagram(read_input(input));
      GeometricMixedBraid b = braid_diagram(d);
      if (as_json)
        std::cout << json{{"gmb", b.serialize()}}.dump() << "\n";
      else
        std::cout << b.serialize();
    } else if (*alg_cmd) {
      GeometricMixedBraid b = GeometricMixedBraid::parse(read_input(input));
      BraidWord r = algebraize(b);
      std::cout << (as_json ? json{{"word", word_to_string(r)}}.dump() : word_to_string(r)) << "\n";
    } else if (*inv_cmd) {
      BraidWord w = parse_word(w1);
      FunctionalSpec f = functional_by_name(func_name, w.g);
      RingElement val = link_invariant(w, f);
      if (as_json)
        std::cout << json{{"invariant", val.to_string()}, {"functional", f.name}}.dump() << "\n";
      else
        std::cout << val.to_string() << "\n";
    } else if (*ax_cmd) {
      FunctionalSpec f = functional_by_name(func_name, index);
      AxiomReport rep = check_axioms(f, axiom_samples(index, samples, seed));
      if (as_json) {
        json j;
        j["functional"] = f.name;
        for (int k = 0; k < 4; ++k)
          j["axiom" + std::to_string(k + 1)] = json{{"pass", rep.pass[k]}, {"checks", rep.checks[k]}};
        j["first_failure"] = rep.first_failure;
        std::cout << j.dump() << "\n";
      } else {
        std::cout << rep.to_string();
      }
      if (assert_flag && !rep.all_pass()) return 1;
    } else if (*search_cmd) {
      BraidWord a = parse_word(w1), b = parse_word(w2);
      SearchBudget budget;
      budget.max_depth = depth;
      budget.max_n = max_n;
      budget.max_states = max_states;
      budget.use_omega = !no_omega;
      budget.use_l_moves = !no_lmoves;
      SearchOutcome res = equivalence_search(a, b, budget);
      if (as_json) {
        json j{{"status", res.status_string()},
               {"depth", res.depth_reached},
               {"states", res.states_explored}};
        if (res.certificate) j["certificate"] = res.certificate->serialize();
        std::cout << j.dump() << "\n";
      } else {
        if (res.certificate) {
          std::cout << "found certificate at depth " << res.depth_reached << " ("
                    << res.states_explored << " states)\n";
          std::cout << res.certificate->serialize();
        } else {
          std::cout << "no certificate within budget (" << res.status_string() << ", depth "
                    << res.depth_reached << ", " << res.states_explored
                    << " states; evidence, not proof)\n";
        }
      }
      if (assert_flag && !res.certificate) return 1;
    } else if (*replay_cmd) {
      MoveCertificate cert = MoveCertificate::parse(read_input(cert_path));
      ReplayResult rep = replay_certificate(cert);
      if (as_json) {
        std::cout << json{{"ok", rep.ok},
                          {"failed_step", rep.failed_step},
                          {"message", rep.message}}.dump() << "\n";
      } else {
        if (rep.ok)
          std::cout << "certificate ok (" << cert.steps.size() << " steps)\n";
        else
          std::cout << "certificate invalid at step " << rep.failed_step << ": " << rep.message << "\n";
      }
      if (!rep.ok) return 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
