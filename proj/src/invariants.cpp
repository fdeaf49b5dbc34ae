#include "mixbraid/invariants.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "mixbraid/moves.hpp"

namespace mixbraid {

namespace {

std::vector<int> zero_exps(int g) { return std::vector<int>(static_cast<size_t>(g), 0); }

RingElement t_monomial(int g, const std::vector<long long>& w) {
  std::vector<int> e(static_cast<size_t>(g));
  for (int i = 0; i < g; ++i) e[static_cast<size_t>(i)] = static_cast<int>(w[static_cast<size_t>(i)]);
  return RingElement::monomial(g, e);
}

std::vector<long long> handle_exponents(const BraidWord& u) {
  BraidWord v = word_family(u) == Family::BWords ? b_to_a(u) : u;
  return a_exponent_vector(v);
}

}  // namespace

FunctionalSpec homology_functional(int g) {
  if (g < 1) throw std::invalid_argument("homology functional needs genus at least 1");
  FunctionalSpec f;
  f.g = g;
  f.name = "homology";
  f.evaluate = [g](const BraidWord& u) { return t_monomial(g, handle_exponents(u)); };
  f.x = RingElement::one(g);
  f.lam = RingElement::one(g);
  return f;
}

FunctionalSpec scaled_homology_functional(int g) {
  if (g < 1) throw std::invalid_argument("scaled functional needs genus at least 1");
  FunctionalSpec f;
  f.g = g;
  f.name = "scaled";
  f.evaluate = [g](const BraidWord& u) {
    RingElement xpow = RingElement::monomial(g, zero_exps(g), 1).unit_pow(u.n - 1);
    return xpow * t_monomial(g, handle_exponents(u));
  };
  f.x = RingElement::monomial(g, zero_exps(g), 1);
  f.lam = RingElement::one(g);
  return f;
}

FunctionalSpec broken_functional(int g) {
  FunctionalSpec f = homology_functional(g);
  f.name = "broken";
  std::vector<int> e = zero_exps(g);
  e[0] = 1;
  f.lam = RingElement::monomial(g, e);
  return f;
}

std::string AxiomReport::to_string() const {
  std::ostringstream out;
  for (int k = 0; k < 4; ++k)
    out << "axiom (" << k + 1 << "): " << (pass[k] ? "pass" : "FAIL") << " (" << checks[k]
        << " checks)\n";
  if (!first_failure.empty()) out << "first failure: " << first_failure << "\n";
  return out.str();
}

AxiomReport check_axioms(const FunctionalSpec& f, const std::vector<BraidWord>& samples) {
  AxiomReport rep;
  auto fail = [&rep](int axiom, const std::string& what, const RingElement& lhs,
                     const RingElement& rhs) {
    if (rep.pass[axiom] && rep.first_failure.empty())
      rep.first_failure = "axiom (" + std::to_string(axiom + 1) + ") at " + what + ": " +
                          lhs.to_string() + " vs " + rhs.to_string();
    rep.pass[axiom] = false;
  };

  // (1) normalization, checked once on the identity of B_{g,1}.
  {
    BraidWord id;
    id.g = f.g;
    id.n = 1;
    RingElement lhs = f.evaluate(id);
    rep.checks[0] += 1;
    if (!(lhs == RingElement::one(f.g))) fail(0, word_to_string(id), lhs, RingElement::one(f.g));
  }

  for (const BraidWord& b : samples) {
    if (b.g != f.g) throw std::invalid_argument("sample genus differs from functional genus");

    // (2) strand addition scales by x.
    {
      RingElement lhs = f.x * f.evaluate(b);
      RingElement rhs = f.evaluate(iota(b));
      rep.checks[1] += 1;
      if (!(lhs == rhs)) fail(1, word_to_string(b), lhs, rhs);
    }

    // (3) commuting a crossing across the word.
    for (int i = 1; i <= b.n - 1; ++i) {
      for (int s : {1, -1}) {
        BraidWord cross;
        cross.g = b.g;
        cross.n = b.n;
        cross.letters.push_back(Generator{Kind::Sigma, i, s});
        RingElement lhs = f.evaluate(multiply(b, cross));
        RingElement rhs = f.evaluate(multiply(cross, b));
        rep.checks[2] += 1;
        if (!(lhs == rhs)) fail(2, word_to_string(b) + " i=" + std::to_string(i), lhs, rhs);
      }
    }

    // (4) twist insertion scales by lam; both sides live at n+1 strands.
    {
      int units = unit_count(b);
      for (int split : {0, units / 2, units}) {
        for (int s : {1, -1}) {
          BraidWord stabbed = stabilize(b, split, s);
          RingElement lhs = f.evaluate(stabbed);
          RingElement rhs = f.lam.unit_pow(s) * f.evaluate(iota(b));
          rep.checks[3] += 1;
          if (!(lhs == rhs))
            fail(3, word_to_string(b) + " split=" + std::to_string(split), lhs, rhs);
        }
      }
    }
  }
  return rep;
}

WindingProfile winding_profile(const BraidWord& u) {
  if (word_family(u) == Family::BWords)
    throw std::invalid_argument("winding profile expects an a-generator word");
  int n = u.n, g = u.g;
  std::vector<int> occupant(static_cast<size_t>(n) + 1);
  for (int p = 1; p <= n; ++p) occupant[static_cast<size_t>(p)] = p;
  std::vector<std::vector<long long>> vec(static_cast<size_t>(n) + 1,
                                          std::vector<long long>(static_cast<size_t>(g), 0));
  for (const Generator& gen : u.letters) {
    if (gen.kind == Kind::Sigma) {
      if (std::abs(gen.exponent) % 2 == 1)
        std::swap(occupant[static_cast<size_t>(gen.index)],
                  occupant[static_cast<size_t>(gen.index) + 1]);
    } else {
      vec[static_cast<size_t>(occupant[1])][static_cast<size_t>(gen.index) - 1] += gen.exponent;
    }
  }
  // Strand entering at top p exits at bottom position; closure joins bottom p
  // to top p, so components are the cycles of (strand -> strand at its exit).
  std::vector<int> next(static_cast<size_t>(n) + 1);
  for (int p = 1; p <= n; ++p) next[static_cast<size_t>(occupant[static_cast<size_t>(p)])] = p;

  WindingProfile prof;
  std::vector<bool> seen(static_cast<size_t>(n) + 1, false);
  for (int s = 1; s <= n; ++s) {
    if (seen[static_cast<size_t>(s)]) continue;
    int len = 0;
    std::vector<long long> total(static_cast<size_t>(g), 0);
    int cur = s;
    while (!seen[static_cast<size_t>(cur)]) {
      seen[static_cast<size_t>(cur)] = true;
      ++len;
      for (int i = 0; i < g; ++i) total[static_cast<size_t>(i)] += vec[static_cast<size_t>(cur)][static_cast<size_t>(i)];
      cur = next[static_cast<size_t>(cur)];
    }
    prof.components.emplace_back(len, total);
  }
  std::sort(prof.components.begin(), prof.components.end());
  return prof;
}

std::string WindingProfile::to_string() const {
  std::ostringstream out;
  out << "{";
  for (size_t k = 0; k < components.size(); ++k) {
    if (k > 0) out << ", ";
    out << "(" << components[k].first << ", (";
    for (size_t i = 0; i < components[k].second.size(); ++i) {
      if (i > 0) out << ",";
      out << components[k].second[i];
    }
    out << "))";
  }
  out << "}";
  return out.str();
}

std::vector<std::vector<long long>> WindingProfile::vectors() const {
  std::vector<std::vector<long long>> v;
  v.reserve(components.size());
  for (const auto& c : components) v.push_back(c.second);
  std::sort(v.begin(), v.end());
  return v;
}

RingElement link_invariant(const BraidWord& u, const FunctionalSpec& f) {
  if (u.g != f.g) throw std::invalid_argument("word genus differs from functional genus");
  RingElement xnorm = f.x.unit_pow(-(static_cast<long long>(u.n) - 1));
  RingElement lnorm = f.lam.unit_pow(-exponent_sum(u));
  return xnorm * lnorm * f.evaluate(u);
}

}  // namespace mixbraid
