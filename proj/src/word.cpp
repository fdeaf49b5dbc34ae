#include "mixbraid/word.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace mixbraid {

namespace {

void check_index(const BraidWord& w, const Generator& gen) {
  if (gen.kind == Kind::Sigma) {
    if (gen.index < 1 || gen.index > w.n - 1)
      throw std::invalid_argument("sigma index " + std::to_string(gen.index) +
                                  " out of range for n=" + std::to_string(w.n));
  } else {
    if (gen.index < 1 || gen.index > w.g)
      throw std::invalid_argument("handle index " + std::to_string(gen.index) +
                                  " out of range for g=" + std::to_string(w.g));
  }
}

}  // namespace

void validate_word(const BraidWord& w) {
  if (w.g < 0) throw std::invalid_argument("genus must be nonnegative");
  if (w.n < 1) throw std::invalid_argument("moving strand count must be positive");
  bool has_a = false, has_b = false;
  for (size_t i = 0; i < w.letters.size(); ++i) {
    const Generator& gen = w.letters[i];
    if (gen.exponent == 0) throw std::invalid_argument("zero exponent letter");
    check_index(w, gen);
    if (gen.kind == Kind::A) has_a = true;
    if (gen.kind == Kind::B) has_b = true;
    if (i > 0 && w.letters[i - 1].kind == gen.kind && w.letters[i - 1].index == gen.index)
      throw std::invalid_argument("word is not run-merged");
  }
  if (has_a && has_b)
    throw std::invalid_argument("a and b generators mixed in one word");
}

Family word_family(const BraidWord& w) {
  for (const Generator& gen : w.letters) {
    if (gen.kind == Kind::A) return Family::AWords;
    if (gen.kind == Kind::B) return Family::BWords;
  }
  return Family::Neutral;
}

void append_letter(std::vector<Generator>& letters, Generator gen) {
  if (gen.exponent == 0) return;
  if (!letters.empty() && letters.back().kind == gen.kind && letters.back().index == gen.index) {
    letters.back().exponent += gen.exponent;
    if (letters.back().exponent == 0) letters.pop_back();
    return;
  }
  letters.push_back(gen);
}

BraidWord make_word(int g, int n, const std::vector<Generator>& runs) {
  BraidWord w;
  w.g = g;
  w.n = n;
  for (const Generator& gen : runs) append_letter(w.letters, gen);
  validate_word(w);
  return w;
}

int unit_count(const BraidWord& w) {
  int total = 0;
  for (const Generator& gen : w.letters) total += std::abs(gen.exponent);
  return total;
}

std::vector<Generator> word_units(const BraidWord& w) {
  std::vector<Generator> units;
  units.reserve(static_cast<size_t>(unit_count(w)));
  for (const Generator& gen : w.letters) {
    int s = gen.exponent > 0 ? 1 : -1;
    for (int k = 0; k < std::abs(gen.exponent); ++k)
      units.push_back(Generator{gen.kind, gen.index, s});
  }
  return units;
}

BraidWord word_from_units(int g, int n, const std::vector<Generator>& units) {
  BraidWord w;
  w.g = g;
  w.n = n;
  for (const Generator& gen : units) append_letter(w.letters, gen);
  validate_word(w);
  return w;
}

// --- text format ------------------------------------------------------------

namespace {

Generator parse_token(const std::string& tok) {
  if (tok.size() < 2) throw std::invalid_argument("bad token '" + tok + "'");
  Kind kind;
  switch (tok[0]) {
    case 's': kind = Kind::Sigma; break;
    case 'a': kind = Kind::A; break;
    case 'b': kind = Kind::B; break;
    default: throw std::invalid_argument("bad token '" + tok + "'");
  }
  size_t pos = 1;
  size_t caret = tok.find('^');
  std::string idx = tok.substr(pos, caret == std::string::npos ? std::string::npos : caret - pos);
  if (idx.empty() || !std::all_of(idx.begin(), idx.end(), [](unsigned char c) { return std::isdigit(c); }))
    throw std::invalid_argument("bad index in token '" + tok + "'");
  int index = std::stoi(idx);
  int exponent = 1;
  if (caret != std::string::npos) {
    std::string e = tok.substr(caret + 1);
    if (e.empty()) throw std::invalid_argument("missing exponent in token '" + tok + "'");
    size_t used = 0;
    try {
      exponent = std::stoi(e, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad exponent in token '" + tok + "'");
    }
    if (used != e.size()) throw std::invalid_argument("bad exponent in token '" + tok + "'");
  }
  return Generator{kind, index, exponent};
}

}  // namespace

std::vector<Generator> parse_word_body(const std::string& body) {
  std::vector<Generator> runs;
  std::istringstream in(body);
  std::string tok;
  while (in >> tok) runs.push_back(parse_token(tok));
  return runs;
}

BraidWord parse_word(const std::string& text) {
  size_t semi = text.find(';');
  if (semi == std::string::npos)
    throw std::invalid_argument("missing ';' after signature header");
  std::istringstream head(text.substr(0, semi));
  std::string gtok, ntok;
  if (!(head >> gtok >> ntok) || (head >> std::ws, !head.eof()))
    throw std::invalid_argument("bad signature header");
  auto parse_field = [](const std::string& tok, const char* name) {
    std::string prefix = std::string(name) + "=";
    if (tok.rfind(prefix, 0) != 0)
      throw std::invalid_argument("expected " + prefix + "<int> in header");
    size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(tok.substr(prefix.size()), &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad integer in header field " + prefix);
    }
    if (used != tok.size() - prefix.size())
      throw std::invalid_argument("bad integer in header field " + prefix);
    return value;
  };
  int g = parse_field(gtok, "g");
  int n = parse_field(ntok, "n");
  return make_word(g, n, parse_word_body(text.substr(semi + 1)));
}

namespace {

std::string token_to_string(const Generator& gen) {
  std::string s;
  switch (gen.kind) {
    case Kind::Sigma: s = "s"; break;
    case Kind::A: s = "a"; break;
    case Kind::B: s = "b"; break;
  }
  s += std::to_string(gen.index);
  if (gen.exponent != 1) s += "^" + std::to_string(gen.exponent);
  return s;
}

}  // namespace

std::string word_body_to_string(const BraidWord& w) {
  std::string out;
  for (size_t i = 0; i < w.letters.size(); ++i) {
    if (i > 0) out += ' ';
    out += token_to_string(w.letters[i]);
  }
  return out;
}

std::string word_to_string(const BraidWord& w) {
  std::string out = "g=" + std::to_string(w.g) + " n=" + std::to_string(w.n) + ";";
  std::string body = word_body_to_string(w);
  if (!body.empty()) out += " " + body;
  return out;
}

// --- group operations -------------------------------------------------------

BraidWord multiply(const BraidWord& u, const BraidWord& v) {
  if (u.g != v.g || u.n != v.n)
    throw std::invalid_argument("signature mismatch in multiply");
  Family fu = word_family(u), fv = word_family(v);
  if (fu != Family::Neutral && fv != Family::Neutral && fu != fv)
    throw std::invalid_argument("generator family mismatch in multiply");
  BraidWord w;
  w.g = u.g;
  w.n = u.n;
  w.letters = u.letters;
  for (const Generator& gen : v.letters) append_letter(w.letters, gen);
  return w;
}

BraidWord invert(const BraidWord& u) {
  BraidWord w;
  w.g = u.g;
  w.n = u.n;
  w.letters.reserve(u.letters.size());
  for (auto it = u.letters.rbegin(); it != u.letters.rend(); ++it)
    w.letters.push_back(Generator{it->kind, it->index, -it->exponent});
  return w;
}

BraidWord a_to_b(const BraidWord& u) {
  if (word_family(u) == Family::BWords)
    throw std::invalid_argument("a_to_b requires an a-generator word");
  BraidWord w;
  w.g = u.g;
  w.n = u.n;
  for (const Generator& gen : u.letters) {
    if (gen.kind != Kind::A) {
      append_letter(w.letters, gen);
      continue;
    }
    int s = gen.exponent > 0 ? 1 : -1;
    for (int k = 0; k < std::abs(gen.exponent); ++k) {
      if (s > 0) {
        append_letter(w.letters, Generator{Kind::B, gen.index, 1});
        if (gen.index < u.g) append_letter(w.letters, Generator{Kind::B, gen.index + 1, -1});
      } else {
        if (gen.index < u.g) append_letter(w.letters, Generator{Kind::B, gen.index + 1, 1});
        append_letter(w.letters, Generator{Kind::B, gen.index, -1});
      }
    }
  }
  return w;
}

BraidWord b_to_a(const BraidWord& u) {
  if (word_family(u) == Family::AWords)
    throw std::invalid_argument("b_to_a requires a b-generator word");
  BraidWord w;
  w.g = u.g;
  w.n = u.n;
  for (const Generator& gen : u.letters) {
    if (gen.kind != Kind::B) {
      append_letter(w.letters, gen);
      continue;
    }
    int s = gen.exponent > 0 ? 1 : -1;
    for (int k = 0; k < std::abs(gen.exponent); ++k) {
      if (s > 0) {
        for (int i = gen.index; i <= u.g; ++i)
          append_letter(w.letters, Generator{Kind::A, i, 1});
      } else {
        for (int i = u.g; i >= gen.index; --i)
          append_letter(w.letters, Generator{Kind::A, i, -1});
      }
    }
  }
  return w;
}

BraidWord embed(const BraidWord& u) {
  if (word_family(u) == Family::BWords)
    throw std::invalid_argument("embed requires an a-generator word; convert b first");
  int m = u.g + u.n;
  BraidWord w;
  w.g = 0;
  w.n = m;
  for (const Generator& gen : u.letters) {
    if (gen.kind == Kind::Sigma) {
      append_letter(w.letters, Generator{Kind::Sigma, u.g + gen.index, gen.exponent});
    } else {
      // positive band: the first moving strand travels behind strands
      // i+1..g, winds around strand i, and returns.
      for (int j = u.g; j > gen.index; --j)
        append_letter(w.letters, Generator{Kind::Sigma, j, 1});
      append_letter(w.letters, Generator{Kind::Sigma, gen.index, 2 * gen.exponent});
      for (int j = gen.index + 1; j <= u.g; ++j)
        append_letter(w.letters, Generator{Kind::Sigma, j, -1});
    }
  }
  return w;
}

std::vector<int> underlying_permutation(const BraidWord& u) {
  // occupant[p] = strand (named by its top position) currently at position p.
  std::vector<int> occupant(static_cast<size_t>(u.n) + 1);
  for (int p = 1; p <= u.n; ++p) occupant[static_cast<size_t>(p)] = p;
  for (const Generator& gen : u.letters) {
    if (gen.kind != Kind::Sigma) continue;
    if (std::abs(gen.exponent) % 2 == 1)
      std::swap(occupant[static_cast<size_t>(gen.index)], occupant[static_cast<size_t>(gen.index) + 1]);
  }
  std::vector<int> result(static_cast<size_t>(u.n) + 1);
  for (int p = 1; p <= u.n; ++p) result[static_cast<size_t>(occupant[static_cast<size_t>(p)])] = p;
  result[0] = 0;
  return result;
}

long long exponent_sum(const BraidWord& u) {
  long long e = 0;
  for (const Generator& gen : u.letters)
    if (gen.kind == Kind::Sigma) e += gen.exponent;
  return e;
}

std::vector<long long> a_exponent_vector(const BraidWord& u) {
  if (word_family(u) == Family::BWords)
    throw std::invalid_argument("a_exponent_vector requires an a-generator word");
  std::vector<long long> v(static_cast<size_t>(u.g), 0);
  for (const Generator& gen : u.letters)
    if (gen.kind == Kind::A) v[static_cast<size_t>(gen.index) - 1] += gen.exponent;
  return v;
}

BraidWord iota(const BraidWord& u) {
  BraidWord w = u;
  w.n = u.n + 1;
  return w;
}

}  // namespace mixbraid
