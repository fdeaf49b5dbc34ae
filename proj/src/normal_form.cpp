#include "mixbraid/normal_form.hpp"

#include <stdexcept>

namespace mixbraid {

Perm perm_identity(int m) {
  Perm p(static_cast<size_t>(m));
  for (int i = 0; i < m; ++i) p[static_cast<size_t>(i)] = i;
  return p;
}

Perm perm_compose(const Perm& a, const Perm& b) {
  Perm r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = b[static_cast<size_t>(a[i])];
  return r;
}

Perm perm_inverse(const Perm& a) {
  Perm r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[static_cast<size_t>(a[i])] = static_cast<int>(i);
  return r;
}

namespace {

bool perm_is_identity(const Perm& p) {
  for (size_t i = 0; i < p.size(); ++i)
    if (p[i] != static_cast<int>(i)) return false;
  return true;
}

bool perm_is_delta(const Perm& p) {
  int m = static_cast<int>(p.size());
  for (int i = 0; i < m; ++i)
    if (p[static_cast<size_t>(i)] != m - 1 - i) return false;
  return true;
}

// Conjugation by the half twist: tau(F) = Delta^-1 F Delta.
Perm perm_tau(const Perm& p) {
  int m = static_cast<int>(p.size());
  Perm r(p.size());
  for (int i = 0; i < m; ++i)
    r[static_cast<size_t>(i)] = m - 1 - p[static_cast<size_t>(m - 1 - i)];
  return r;
}

// s_i is a left divisor of the permutation braid F iff F has a descent at i.
bool starts_with(const Perm& f, int i) {
  return f[static_cast<size_t>(i)] > f[static_cast<size_t>(i) + 1];
}

// s_i is a right divisor of F iff F^-1 has a descent at i; cached inverse
// is not worth it at our sizes.
bool finishes_with(const Perm& f, int i) {
  Perm inv = perm_inverse(f);
  return inv[static_cast<size_t>(i)] > inv[static_cast<size_t>(i) + 1];
}

}  // namespace

std::string NormalForm::serialize() const {
  std::string out = "inf=" + std::to_string(infimum);
  for (const Perm& f : factors) {
    out += '|';
    for (size_t i = 0; i < f.size(); ++i) {
      if (i > 0) out += ' ';
      out += std::to_string(f[i] + 1);
    }
  }
  return out;
}

NormalForm left_normal_form(const std::vector<std::pair<int, int>>& units, int m) {
  if (m < 1) throw std::invalid_argument("strand count must be positive");
  NormalForm nf;
  nf.strands = m;

  Perm delta(static_cast<size_t>(m));
  for (int i = 0; i < m; ++i) delta[static_cast<size_t>(i)] = m - 1 - i;

  std::vector<Perm>& factors = nf.factors;
  for (const auto& [index, sign] : units) {
    if (index < 1 || index > m - 1) throw std::invalid_argument("crossing index out of range");
    Perm s = perm_identity(m);
    std::swap(s[static_cast<size_t>(index) - 1], s[static_cast<size_t>(index)]);
    if (sign > 0) {
      factors.push_back(s);
    } else {
      // u * s_i^-1 = Delta^(inf-1) * tau(factors) * (Delta s_i^-1)
      nf.infimum -= 1;
      for (Perm& f : factors) f = perm_tau(f);
      factors.push_back(perm_compose(delta, s));
    }
  }

  // Left-weighting sweep: slide simple prefixes of each factor into its left
  // neighbour until every adjacent pair is locally maximal.
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t j = 0; j + 1 < factors.size(); ++j) {
      for (int i = 0; i < nf.strands - 1; ++i) {
        if (starts_with(factors[j + 1], i) && !finishes_with(factors[j], i)) {
          Perm s = perm_identity(nf.strands);
          std::swap(s[static_cast<size_t>(i)], s[static_cast<size_t>(i) + 1]);
          factors[j] = perm_compose(factors[j], s);
          factors[j + 1] = perm_compose(s, factors[j + 1]);
          changed = true;
          i = -1;  // restart generator scan for this pair
        }
      }
    }
    // Drop identity factors and absorb half twists into the infimum.
    std::vector<Perm> cleaned;
    cleaned.reserve(factors.size());
    for (const Perm& f : factors) {
      if (perm_is_identity(f)) {
        changed = true;
        continue;
      }
      cleaned.push_back(f);
    }
    factors = std::move(cleaned);
    while (!factors.empty() && perm_is_delta(factors.front())) {
      factors.erase(factors.begin());
      nf.infimum += 1;
      changed = true;
    }
  }
  return nf;
}

NormalForm normal_form(const BraidWord& u) {
  validate_word(u);
  BraidWord v = word_family(u) == Family::BWords ? b_to_a(u) : u;
  BraidWord cls = embed(v);
  std::vector<std::pair<int, int>> units;
  units.reserve(static_cast<size_t>(unit_count(cls)));
  for (const Generator& gen : word_units(cls)) units.emplace_back(gen.index, gen.exponent);
  return left_normal_form(units, u.g + u.n);
}

std::string canonical_key(const BraidWord& u) {
  return "g=" + std::to_string(u.g) + ",n=" + std::to_string(u.n) + ":" + normal_form(u).serialize();
}

bool equal(const BraidWord& u, const BraidWord& v) {
  if (u.g != v.g || u.n != v.n)
    throw std::invalid_argument("signature mismatch in equal");
  return normal_form(u) == normal_form(v);
}

bool is_trivial(const BraidWord& u) {
  NormalForm nf = normal_form(u);
  return nf.infimum == 0 && nf.factors.empty();
}

}  // namespace mixbraid
