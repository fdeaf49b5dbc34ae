#pragma once

#include <map>
#include <string>
#include <vector>

namespace mixbraid {

// Exact multivariate Laurent polynomials in t_1..t_g plus the two units
// x and lam; exponent vectors have length g+2 with x and lam in the last
// two slots.  No zero coefficients are stored.
struct RingElement {
  int g = 0;
  std::map<std::vector<int>, long long> terms;

  static RingElement zero(int g);
  static RingElement one(int g);
  // Single monomial: coefficient * t^t_exps * x^x_exp * lam^lam_exp.
  static RingElement monomial(int g, const std::vector<int>& t_exps, int x_exp = 0,
                              int lam_exp = 0, long long coeff = 1);

  bool is_zero() const { return terms.empty(); }
  bool is_unit_monomial() const;

  RingElement operator+(const RingElement& o) const;
  RingElement operator-(const RingElement& o) const;
  RingElement operator*(const RingElement& o) const;
  bool operator==(const RingElement&) const = default;

  // Inverse of a single-monomial unit.
  RingElement unit_inverse() const;
  RingElement unit_pow(long long e) const;

  // Canonical print, e.g. "t1^2*t2^-1 + 3"; terms ordered lexicographically
  // on exponent vectors, largest first.
  std::string to_string() const;
};

}  // namespace mixbraid
