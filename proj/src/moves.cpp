#include "mixbraid/moves.hpp"

#include <sstream>
#include <stdexcept>

#include "mixbraid/normal_form.hpp"

namespace mixbraid {

namespace {

std::pair<std::vector<Generator>, std::vector<Generator>> split_units(const BraidWord& u, int split) {
  std::vector<Generator> units = word_units(u);
  if (split < 0 || split > static_cast<int>(units.size()))
    throw std::invalid_argument("split position out of range");
  std::vector<Generator> left(units.begin(), units.begin() + split);
  std::vector<Generator> right(units.begin() + split, units.end());
  return {left, right};
}

void check_sign(int sign) {
  if (sign != 1 && sign != -1) throw std::invalid_argument("sign must be +1 or -1");
}

}  // namespace

BraidWord stabilize(const BraidWord& u, int split, int sign) {
  check_sign(sign);
  auto [left, right] = split_units(u, split);
  std::vector<Generator> out;
  out.reserve(left.size() + right.size() + 1);
  for (const Generator& x : left) out.push_back(x);
  out.push_back(Generator{Kind::Sigma, u.n, sign});
  for (const Generator& x : right) out.push_back(x);
  return word_from_units(u.g, u.n + 1, out);
}

std::vector<std::pair<int, int>> find_destabilizations(const BraidWord& u) {
  std::vector<std::pair<int, int>> hits;
  if (u.n < 2) return hits;
  int top = u.n - 1;
  int count = 0;
  for (const Generator& gen : u.letters)
    if (gen.kind == Kind::Sigma && gen.index == top) ++count;
  if (count != 1) return hits;
  int pos = 0;
  for (const Generator& gen : u.letters) {
    if (gen.kind == Kind::Sigma && gen.index == top) {
      if (gen.exponent == 1 || gen.exponent == -1)
        hits.emplace_back(pos, gen.exponent);
      return hits;
    }
    pos += std::abs(gen.exponent);
  }
  return hits;
}

BraidWord destabilize(const BraidWord& u, int split, int sign) {
  check_sign(sign);
  if (u.n < 2) throw std::invalid_argument("cannot destabilize below one strand");
  auto [left, right] = split_units(u, split);
  if (right.empty() || right.front().kind != Kind::Sigma || right.front().index != u.n - 1 ||
      right.front().exponent != sign)
    throw std::invalid_argument("no matching crossing at destabilization split");
  right.erase(right.begin());
  int top = u.n - 1;
  for (const Generator& gen : left)
    if (gen.kind == Kind::Sigma && gen.index == top)
      throw std::invalid_argument("extra top-index crossing left of split");
  for (const Generator& gen : right)
    if (gen.kind == Kind::Sigma && gen.index == top)
      throw std::invalid_argument("extra top-index crossing right of split");
  std::vector<Generator> out = left;
  out.insert(out.end(), right.begin(), right.end());
  return word_from_units(u.g, u.n - 1, out);
}

BraidWord sigma_conjugate(const BraidWord& u, int i, int sign) {
  check_sign(sign);
  if (i < 1 || i > u.n - 1) throw std::invalid_argument("conjugation index out of range");
  std::vector<Generator> out;
  out.push_back(Generator{Kind::Sigma, i, -sign});
  for (const Generator& gen : u.letters) out.push_back(gen);
  out.push_back(Generator{Kind::Sigma, i, sign});
  return make_word(u.g, u.n, out);
}

BraidWord apply_l_move(const BraidWord& u, int split, int i, int sign, LMoveType type) {
  check_sign(sign);
  int n = u.n;
  if (i < 1 || i > n + 1) throw std::invalid_argument("L-move strand position out of range");
  auto [left, right] = split_units(u, split);
  int conj = type == LMoveType::Over ? -1 : 1;

  std::vector<Generator> out;
  for (int k = i; k <= n; ++k) out.push_back(Generator{Kind::Sigma, k, conj});
  for (const Generator& x : left) out.push_back(x);
  for (int k = i; k <= n - 1; ++k) out.push_back(Generator{Kind::Sigma, k, conj});
  out.push_back(Generator{Kind::Sigma, n, sign});
  for (int k = n - 1; k >= i; --k) out.push_back(Generator{Kind::Sigma, k, -conj});
  for (const Generator& x : right) out.push_back(x);
  for (int k = n; k >= i; --k) out.push_back(Generator{Kind::Sigma, k, -conj});
  return word_from_units(u.g, n + 1, out);
}

BraidWord maximal_loop(int g) {
  if (g < 1) throw std::invalid_argument("maximal loop needs genus at least 1");
  BraidWord w;
  w.g = g;
  w.n = 1;
  for (int i = 1; i <= g; ++i) w.letters.push_back(Generator{Kind::A, i, 1});
  return w;
}

namespace {

std::vector<Generator> omega_units(int g) {
  std::vector<Generator> units;
  for (int i = 1; i <= g; ++i) units.push_back(Generator{Kind::A, i, 1});
  return units;
}

}  // namespace

BraidWord omega_commute(const BraidWord& u, Side side) {
  if (u.g < 1) throw std::invalid_argument("omega commutation needs genus at least 1");
  if (word_family(u) == Family::BWords)
    throw std::invalid_argument("omega commutation expects an a-generator word");
  std::vector<Generator> units = word_units(u);
  std::vector<Generator> omega = omega_units(u.g);
  if (units.size() < omega.size())
    throw std::invalid_argument("word has no literal maximal loop on that side");
  size_t k = omega.size();
  if (side == Side::Right) {
    for (size_t j = 0; j < k; ++j)
      if (units[units.size() - k + j] != omega[j])
        throw std::invalid_argument("word has no literal maximal loop suffix");
    std::vector<Generator> rest(units.begin(), units.end() - static_cast<long>(k));
    std::vector<Generator> out = omega;
    out.insert(out.end(), rest.begin(), rest.end());
    return word_from_units(u.g, u.n, out);
  }
  for (size_t j = 0; j < k; ++j)
    if (units[j] != omega[j])
      throw std::invalid_argument("word has no literal maximal loop prefix");
  std::vector<Generator> rest(units.begin() + static_cast<long>(k), units.end());
  std::vector<Generator> out = rest;
  out.insert(out.end(), omega.begin(), omega.end());
  return word_from_units(u.g, u.n, out);
}

bool is_allowed_loop_conjugator(const BraidWord& w) {
  for (const Generator& gen : w.letters)
    if (gen.kind != Kind::B)
      throw std::invalid_argument("loop conjugator test expects a b-generator word");
  if (w.letters.empty()) return true;
  std::vector<long long> v = a_exponent_vector(b_to_a(w));
  long long k = v.empty() ? 0 : v[0];
  for (long long c : v)
    if (c != k) return false;
  if (k < -1000000 || k > 1000000) throw std::invalid_argument("exponent too large");
  BraidWord candidate;
  candidate.g = w.g;
  candidate.n = w.n;
  if (k != 0) candidate.letters.push_back(Generator{Kind::B, 1, static_cast<int>(k)});
  return equal(w, candidate);
}

BraidWord label_flip_conjugator(int g, int position) {
  if (g < 1) throw std::invalid_argument("genus must be positive");
  if (position < 0 || position > g)
    throw std::invalid_argument("endpoint pair position out of range");
  BraidWord w;
  w.g = g;
  w.n = 1;
  if (position < g) w.letters.push_back(Generator{Kind::B, position + 1, 1});
  return w;
}

// --- steps and certificates ---------------------------------------------------

namespace {

const char* kind_name(MoveStep::Kind k) {
  switch (k) {
    case MoveStep::Kind::LMoveO: return "lmove_o";
    case MoveStep::Kind::LMoveU: return "lmove_u";
    case MoveStep::Kind::Stabilize: return "stab";
    case MoveStep::Kind::Destabilize: return "destab";
    case MoveStep::Kind::SigmaConjugate: return "conj";
    case MoveStep::Kind::OmegaCommute: return "omega";
    case MoveStep::Kind::Relator: return "relator";
    case MoveStep::Kind::FreeReduce: return "free_reduce";
  }
  return "?";
}

std::string sign_str(int s) { return s > 0 ? "+1" : "-1"; }

}  // namespace

std::string MoveStep::serialize() const {
  std::ostringstream out;
  out << kind_name(kind);
  switch (kind) {
    case Kind::LMoveO:
    case Kind::LMoveU:
      out << ' ' << split << ' ' << strand << ' ' << sign_str(sign);
      break;
    case Kind::Stabilize:
    case Kind::Destabilize:
      out << ' ' << split << ' ' << sign_str(sign);
      break;
    case Kind::SigmaConjugate:
      out << ' ' << index << ' ' << sign_str(sign);
      break;
    case Kind::OmegaCommute:
      out << ' ' << (side == Side::Left ? "left" : "right");
      break;
    case Kind::Relator: {
      BraidWord dummy;
      dummy.letters = target;
      std::string body = word_body_to_string(dummy);
      if (!body.empty()) out << ' ' << body;
      break;
    }
    case Kind::FreeReduce:
      break;
  }
  return out.str();
}

MoveStep MoveStep::parse(const std::string& line) {
  std::istringstream in(line);
  std::string kind;
  if (!(in >> kind)) throw std::invalid_argument("empty move step");
  MoveStep step;
  auto need_int = [&in]() {
    int v;
    if (!(in >> v)) throw std::invalid_argument("missing integer in move step");
    return v;
  };
  if (kind == "lmove_o" || kind == "lmove_u") {
    step.kind = kind == "lmove_o" ? Kind::LMoveO : Kind::LMoveU;
    step.split = need_int();
    step.strand = need_int();
    step.sign = need_int();
  } else if (kind == "stab" || kind == "destab") {
    step.kind = kind == "stab" ? Kind::Stabilize : Kind::Destabilize;
    step.split = need_int();
    step.sign = need_int();
  } else if (kind == "conj") {
    step.kind = Kind::SigmaConjugate;
    step.index = need_int();
    step.sign = need_int();
  } else if (kind == "omega") {
    step.kind = Kind::OmegaCommute;
    std::string side;
    if (!(in >> side) || (side != "left" && side != "right"))
      throw std::invalid_argument("omega step needs a side");
    step.side = side == "left" ? Side::Left : Side::Right;
  } else if (kind == "relator") {
    step.kind = Kind::Relator;
    std::string rest;
    std::getline(in, rest);
    step.target = parse_word_body(rest);
  } else if (kind == "free_reduce") {
    step.kind = Kind::FreeReduce;
  } else {
    throw std::invalid_argument("unknown move step kind '" + kind + "'");
  }
  return step;
}

BraidWord apply_step(const BraidWord& u, const MoveStep& step) {
  switch (step.kind) {
    case MoveStep::Kind::LMoveO:
      return apply_l_move(u, step.split, step.strand, step.sign, LMoveType::Over);
    case MoveStep::Kind::LMoveU:
      return apply_l_move(u, step.split, step.strand, step.sign, LMoveType::Under);
    case MoveStep::Kind::Stabilize:
      return stabilize(u, step.split, step.sign);
    case MoveStep::Kind::Destabilize:
      return destabilize(u, step.split, step.sign);
    case MoveStep::Kind::SigmaConjugate:
      return sigma_conjugate(u, step.index, step.sign);
    case MoveStep::Kind::OmegaCommute:
      return omega_commute(u, step.side);
    case MoveStep::Kind::Relator: {
      BraidWord target = make_word(u.g, u.n, step.target);
      if (!equal(u, target))
        throw std::invalid_argument("relator rewrite target is not equal to the word");
      return target;
    }
    case MoveStep::Kind::FreeReduce:
      return u;  // words are kept reduced at all times
  }
  throw std::invalid_argument("unknown step kind");
}

std::string MoveCertificate::serialize() const {
  std::ostringstream out;
  out << "cert\n";
  out << "start " << word_to_string(start) << "\n";
  for (const MoveStep& s : steps) out << "step " << s.serialize() << "\n";
  out << "end " << word_to_string(end) << "\n";
  return out.str();
}

MoveCertificate MoveCertificate::parse(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  MoveCertificate cert;
  bool have_start = false, have_end = false, have_header = false;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    if (!have_header) {
      if (line != "cert") throw std::invalid_argument("certificate must begin with 'cert'");
      have_header = true;
      continue;
    }
    if (line.rfind("start ", 0) == 0) {
      cert.start = parse_word(line.substr(6));
      have_start = true;
    } else if (line.rfind("step ", 0) == 0) {
      cert.steps.push_back(MoveStep::parse(line.substr(5)));
    } else if (line.rfind("end ", 0) == 0) {
      cert.end = parse_word(line.substr(4));
      have_end = true;
    } else {
      throw std::invalid_argument("unknown certificate line: " + line);
    }
  }
  if (!have_start || !have_end)
    throw std::invalid_argument("certificate needs start and end words");
  return cert;
}

ReplayResult replay_certificate(const MoveCertificate& cert) {
  ReplayResult res;
  BraidWord current = cert.start;
  for (size_t k = 0; k < cert.steps.size(); ++k) {
    try {
      current = apply_step(current, cert.steps[k]);
    } catch (const std::exception& e) {
      res.ok = false;
      res.failed_step = static_cast<int>(k);
      res.message = e.what();
      res.final_word = current;
      return res;
    }
  }
  res.final_word = current;
  if (current.g != cert.end.g || current.n != cert.end.n) {
    res.ok = false;
    res.failed_step = -2;
    res.message = "final signature differs from end word";
    return res;
  }
  if (!equal(current, cert.end)) {
    res.ok = false;
    res.failed_step = -2;
    res.message = "replayed word is not equal to end word";
    return res;
  }
  res.ok = true;
  return res;
}

}  // namespace mixbraid
