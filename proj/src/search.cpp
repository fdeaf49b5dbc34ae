#include "mixbraid/search.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "mixbraid/invariants.hpp"
#include "mixbraid/normal_form.hpp"

namespace mixbraid {

namespace {

struct Node {
  BraidWord word;
  int parent = -1;
  std::vector<MoveStep> steps;      // applied to the parent's word, yield this word
  std::vector<MoveStep> inv_steps;  // applied to this word, yield a word equal to the parent's
  int depth = 0;
};

struct Child {
  BraidWord word;
  std::vector<MoveStep> steps;
  std::vector<MoveStep> inv_steps;
};

MoveStep relator_to(const BraidWord& w) {
  MoveStep s;
  s.kind = MoveStep::Kind::Relator;
  s.target = w.letters;
  return s;
}

MoveStep make_step(MoveStep::Kind kind, int split, int sign) {
  MoveStep s;
  s.kind = kind;
  s.split = split;
  s.sign = sign;
  return s;
}

bool cancels(const Generator& a, const Generator& b) {
  return a.kind == b.kind && a.index == b.index && a.exponent == -b.exponent;
}

// A reduced respelling of sigma_k^e that starts with a different letter:
// through the braid relation when k >= 2, through the handle relation
// a1 s1 a1 s1 = s1 a1 s1 a1 when k = 1 and g >= 1.
std::optional<std::vector<Generator>> respell_sigma(int k, int e, int g, int n) {
  std::vector<Generator> out;
  if (k >= 2) {
    int j = k - 1;
    if (e > 0)
      out = {{Kind::Sigma, j, 1}, {Kind::Sigma, k, 1}, {Kind::Sigma, j, 1},
             {Kind::Sigma, k, -1}, {Kind::Sigma, j, -1}};
    else
      out = {{Kind::Sigma, j, 1}, {Kind::Sigma, k, 1}, {Kind::Sigma, j, -1},
             {Kind::Sigma, k, -1}, {Kind::Sigma, j, -1}};
    return out;
  }
  if (k + 1 <= n - 1) {
    int j = k + 1;
    if (e > 0)
      out = {{Kind::Sigma, j, 1}, {Kind::Sigma, k, 1}, {Kind::Sigma, j, 1},
             {Kind::Sigma, k, -1}, {Kind::Sigma, j, -1}};
    else
      out = {{Kind::Sigma, j, 1}, {Kind::Sigma, k, 1}, {Kind::Sigma, j, -1},
             {Kind::Sigma, k, -1}, {Kind::Sigma, j, -1}};
    return out;
  }
  if (g >= 1) {
    if (e > 0)
      out = {{Kind::A, 1, 1},  {Kind::Sigma, 1, 1}, {Kind::A, 1, 1}, {Kind::Sigma, 1, 1},
             {Kind::A, 1, -1}, {Kind::Sigma, 1, -1}, {Kind::A, 1, -1}};
    else
      out = {{Kind::A, 1, 1},  {Kind::Sigma, 1, 1}, {Kind::A, 1, 1}, {Kind::Sigma, 1, -1},
             {Kind::A, 1, -1}, {Kind::Sigma, 1, -1}, {Kind::A, 1, -1}};
    return out;
  }
  return std::nullopt;
}

// Respelling of the word of w that reads beta1 . B . Y with Y = B^-1 beta2,
// freely reduced and with the beta1 B prefix literally present, so that a
// Markov twist inserted after the prefix realizes an L-move as a relator
// rewrite plus a plain stabilization.
struct SpelledForm {
  BraidWord word;
  int split;  // unit position right after beta1 B
};

std::optional<SpelledForm> spell_l_form(const BraidWord& w, int split, int i, LMoveType type) {
  int n = w.n;
  if (i < 1 || i >= n) return std::nullopt;
  std::vector<Generator> units = word_units(w);
  if (split < 0 || split > static_cast<int>(units.size())) return std::nullopt;
  std::vector<Generator> beta1(units.begin(), units.begin() + split);
  std::vector<Generator> beta2(units.begin() + split, units.end());
  int conj = type == LMoveType::Over ? -1 : 1;
  std::vector<Generator> b_units;
  for (int k = i; k <= n - 1; ++k) b_units.push_back(Generator{Kind::Sigma, k, conj});

  // Y0 = reduced(B^-1 beta2)
  std::vector<Generator> y0;
  for (int k = n - 1; k >= i; --k) append_letter(y0, Generator{Kind::Sigma, k, -conj});
  for (const Generator& x : beta2) append_letter(y0, x);
  std::vector<Generator> yunits;
  {
    BraidWord tmp;
    tmp.g = w.g;
    tmp.n = n;
    tmp.letters = y0;
    yunits = word_units(tmp);
  }

  auto reduce_units = [&](std::vector<Generator> in) {
    std::vector<Generator> letters;
    for (const Generator& x : in) append_letter(letters, x);
    BraidWord tmp;
    tmp.g = w.g;
    tmp.n = n;
    tmp.letters = letters;
    return word_units(tmp);
  };
  // fix the B | Y junction
  if (!yunits.empty() && cancels(b_units.back(), yunits.front())) {
    auto sub = respell_sigma(yunits.front().index, yunits.front().exponent, w.g, n);
    if (!sub) return std::nullopt;
    std::vector<Generator> y2 = *sub;
    y2.insert(y2.end(), yunits.begin() + 1, yunits.end());
    yunits = reduce_units(std::move(y2));
    if (!yunits.empty() && cancels(b_units.back(), yunits.front())) return std::nullopt;
  }
  // fix the beta1 | B junction
  if (!beta1.empty() && cancels(beta1.back(), b_units.front())) {
    auto sub = respell_sigma(b_units.front().index, b_units.front().exponent, w.g, n);
    if (!sub) return std::nullopt;
    std::vector<Generator> b2 = *sub;
    b2.insert(b2.end(), b_units.begin() + 1, b_units.end());
    b_units = reduce_units(std::move(b2));
    if (b_units.empty() || (!beta1.empty() && cancels(beta1.back(), b_units.front())))
      return std::nullopt;
    if (!yunits.empty() && cancels(b_units.back(), yunits.front())) return std::nullopt;
  }

  std::vector<Generator> all = beta1;
  all.insert(all.end(), b_units.begin(), b_units.end());
  int cut = static_cast<int>(all.size());
  all.insert(all.end(), yunits.begin(), yunits.end());
  // verify the concatenation is freely reduced as built
  for (size_t t = 0; t + 1 < all.size(); ++t)
    if (cancels(all[t], all[t + 1])) return std::nullopt;

  SpelledForm form;
  form.word = word_from_units(w.g, n, all);
  if (unit_count(form.word) != static_cast<int>(all.size())) return std::nullopt;
  form.split = cut;
  return form;
}

void expand(const BraidWord& w, const SearchBudget& budget, int max_n, std::vector<Child>& out) {
  out.clear();
  if (budget.use_conjugate) {
    for (int i = 1; i <= w.n - 1; ++i) {
      for (int s : {1, -1}) {
        Child c;
        c.word = sigma_conjugate(w, i, s);
        MoveStep step;
        step.kind = MoveStep::Kind::SigmaConjugate;
        step.index = i;
        step.sign = s;
        c.steps = {step};
        step.sign = -s;
        c.inv_steps = {step};
        out.push_back(std::move(c));
      }
    }
  }
  if (budget.use_destabilize) {
    for (auto [split, sign] : find_destabilizations(w)) {
      Child c;
      c.word = destabilize(w, split, sign);
      c.steps = {make_step(MoveStep::Kind::Destabilize, split, sign)};
      c.inv_steps = {make_step(MoveStep::Kind::Stabilize, std::min(split, unit_count(c.word)), sign)};
      out.push_back(std::move(c));
    }
  }
  if (budget.use_stabilize && w.n < max_n) {
    int units = unit_count(w);
    for (int split = 0; split <= units; ++split) {
      for (int s : {1, -1}) {
        Child c;
        c.word = stabilize(w, split, s);
        c.steps = {make_step(MoveStep::Kind::Stabilize, split, s)};
        c.inv_steps = {make_step(MoveStep::Kind::Destabilize, split, s)};
        out.push_back(std::move(c));
      }
    }
  }
  if (budget.use_l_moves && w.n < max_n && w.n >= 2) {
    // L-moves at interior strand positions, realized as a relator rewrite
    // followed by a plain twist insertion.
    int units = unit_count(w);
    for (int split = 0; split <= units; ++split) {
      for (int i = 1; i <= w.n - 1; ++i) {
        for (auto ty : {LMoveType::Over, LMoveType::Under}) {
          auto form = spell_l_form(w, split, i, ty);
          if (!form) continue;
          for (int s : {1, -1}) {
            Child c;
            c.word = stabilize(form->word, form->split, s);
            c.steps = {relator_to(form->word), make_step(MoveStep::Kind::Stabilize, form->split, s)};
            c.inv_steps = {make_step(MoveStep::Kind::Destabilize, form->split, s),
                           relator_to(w)};
            out.push_back(std::move(c));
          }
        }
      }
    }
  }
  if (budget.use_omega && w.g >= 1 && word_family(w) != Family::BWords) {
    for (Side side : {Side::Right, Side::Left}) {
      try {
        Child c;
        c.word = omega_commute(w, side);
        MoveStep step;
        step.kind = MoveStep::Kind::OmegaCommute;
        step.side = side;
        c.steps = {step};
        step.side = side == Side::Right ? Side::Left : Side::Right;
        c.inv_steps = {step};
        out.push_back(std::move(c));
      } catch (const std::invalid_argument&) {
      }
    }
  }
}

struct Frontier {
  std::vector<Node> nodes;
  std::unordered_map<std::string, int> seen;
  std::vector<int> layer;
  int radius = 0;
};

std::vector<MoveStep> forward_chain(const Frontier& f, int idx) {
  std::vector<std::vector<MoveStep>> pieces;
  int cur = idx;
  while (f.nodes[static_cast<size_t>(cur)].parent != -1) {
    pieces.push_back(f.nodes[static_cast<size_t>(cur)].steps);
    cur = f.nodes[static_cast<size_t>(cur)].parent;
  }
  std::vector<MoveStep> steps;
  for (auto it = pieces.rbegin(); it != pieces.rend(); ++it)
    steps.insert(steps.end(), it->begin(), it->end());
  return steps;
}

// Steps taking the node's word back to the root word, with relator glue
// wherever an inverse move does not reproduce the recorded word literally.
std::vector<MoveStep> backward_chain(const Frontier& f, int idx) {
  std::vector<MoveStep> steps;
  int cur = idx;
  BraidWord word = f.nodes[static_cast<size_t>(cur)].word;
  while (f.nodes[static_cast<size_t>(cur)].parent != -1) {
    const Node& node = f.nodes[static_cast<size_t>(cur)];
    const BraidWord& parent_word = f.nodes[static_cast<size_t>(node.parent)].word;
    BraidWord replayed = word;
    for (const MoveStep& s : node.inv_steps) {
      steps.push_back(s);
      replayed = apply_step(replayed, s);
    }
    if (!(replayed == parent_word)) steps.push_back(relator_to(parent_word));
    word = parent_word;
    cur = node.parent;
  }
  return steps;
}

void soundness_check(const MoveCertificate& cert) {
  ReplayResult rep = replay_certificate(cert);
  if (!rep.ok) throw std::logic_error("search produced a non-replayable certificate: " + rep.message);
  if (cert.start.g >= 1) {
    WindingProfile a = winding_profile(cert.start);
    WindingProfile b = winding_profile(cert.end);
    if (a.vectors() != b.vectors())
      throw std::logic_error("search certificate changes the winding profile");
    FunctionalSpec mu = homology_functional(cert.start.g);
    if (!(link_invariant(cert.start, mu) == link_invariant(cert.end, mu)))
      throw std::logic_error("search certificate changes the link invariant");
  }
}

}  // namespace

bool verify_certificate(const MoveCertificate& cert) { return replay_certificate(cert).ok; }

SearchOutcome equivalence_search(const BraidWord& u, const BraidWord& v, const SearchBudget& budget) {
  if (u.g != v.g) throw std::invalid_argument("genus mismatch in search");
  if (word_family(u) == Family::BWords || word_family(v) == Family::BWords)
    throw std::invalid_argument("search expects a-generator words");
  int max_n = budget.max_n > 0 ? budget.max_n : std::max(u.n, v.n);
  if (max_n < std::max(u.n, v.n))
    throw std::invalid_argument("strand ceiling below the endpoint words");

  SearchOutcome outcome;
  auto finish_found = [&](MoveCertificate cert, int depth) {
    soundness_check(cert);
    outcome.status = SearchOutcome::Status::Found;
    outcome.certificate = std::move(cert);
    outcome.depth_reached = depth;
    return outcome;
  };

  Frontier fwd, bwd;
  auto add_root = [](Frontier& f, const BraidWord& w) {
    Node root;
    root.word = w;
    f.nodes.push_back(root);
    f.seen.emplace(canonical_key(w), 0);
    f.layer.push_back(0);
  };
  add_root(fwd, u);
  add_root(bwd, v);
  outcome.states_explored = 2;

  if (canonical_key(u) == canonical_key(v)) {
    MoveCertificate cert;
    cert.start = u;
    cert.end = v;
    if (!(u == v)) cert.steps.push_back(relator_to(v));
    return finish_found(std::move(cert), 0);
  }

  auto assemble = [&](int fwd_idx, int bwd_idx) {
    MoveCertificate cert;
    cert.start = u;
    cert.end = v;
    cert.steps = forward_chain(fwd, fwd_idx);
    const BraidWord& meet_f = fwd.nodes[static_cast<size_t>(fwd_idx)].word;
    const BraidWord& meet_b = bwd.nodes[static_cast<size_t>(bwd_idx)].word;
    if (!(meet_f == meet_b)) cert.steps.push_back(relator_to(meet_b));
    std::vector<MoveStep> back = backward_chain(bwd, bwd_idx);
    cert.steps.insert(cert.steps.end(), back.begin(), back.end());
    return cert;
  };

  std::vector<Child> children;
  bool budget_hit = false;

  auto expand_layer = [&](Frontier& self, Frontier& other, bool self_is_fwd) -> std::optional<SearchOutcome> {
    std::vector<int> next;
    for (int idx : self.layer) {
      expand(self.nodes[static_cast<size_t>(idx)].word, budget, max_n, children);
      for (Child& c : children) {
        std::string key = canonical_key(c.word);
        auto it = self.seen.find(key);
        if (it != self.seen.end()) continue;
        if (outcome.states_explored >= budget.max_states) {
          budget_hit = true;
          return std::nullopt;
        }
        Node node;
        node.word = std::move(c.word);
        node.parent = idx;
        node.steps = std::move(c.steps);
        node.inv_steps = std::move(c.inv_steps);
        node.depth = self.nodes[static_cast<size_t>(idx)].depth + 1;
        int me = static_cast<int>(self.nodes.size());
        self.nodes.push_back(std::move(node));
        self.seen.emplace(key, me);
        next.push_back(me);
        outcome.states_explored += 1;
        auto hit = other.seen.find(key);
        if (hit != other.seen.end()) {
          int fwd_idx = self_is_fwd ? me : hit->second;
          int bwd_idx = self_is_fwd ? hit->second : me;
          int depth = fwd.nodes[static_cast<size_t>(fwd_idx)].depth +
                      bwd.nodes[static_cast<size_t>(bwd_idx)].depth;
          return finish_found(assemble(fwd_idx, bwd_idx), depth);
        }
      }
    }
    self.layer = std::move(next);
    self.radius += 1;
    return std::nullopt;
  };

  bool next_forward = true;
  while (fwd.radius + bwd.radius < budget.max_depth) {
    Frontier& self = next_forward ? fwd : bwd;
    Frontier& other = next_forward ? bwd : fwd;
    if (fwd.layer.empty() && bwd.layer.empty()) break;
    if (!self.layer.empty()) {
      auto res = expand_layer(self, other, next_forward);
      if (res) return *res;
      if (budget_hit) break;
    } else {
      self.radius += 1;  // nothing to expand on this side
    }
    next_forward = !next_forward;
  }
  outcome.depth_reached = fwd.radius + bwd.radius;
  outcome.status = budget_hit ? SearchOutcome::Status::BudgetHit : SearchOutcome::Status::Exhausted;
  return outcome;
}

}  // namespace mixbraid
