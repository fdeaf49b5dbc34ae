#pragma once

#include <functional>
#include <string>
#include <vector>

#include "mixbraid/ring.hpp"
#include "mixbraid/word.hpp"

namespace mixbraid {

// A Markov functional: an evaluation map into the Laurent ring together with
// the units x and lam that control strand addition and twist insertion.
struct FunctionalSpec {
  int g = 0;
  std::string name;
  std::function<RingElement(const BraidWord&)> evaluate;
  RingElement x;
  RingElement lam;
};

// mu_H(w) = prod_i t_i^{w_i} with w the a-exponent vector; x = lam = 1.
FunctionalSpec homology_functional(int g);

// mu_H scaled by x^(n-1); satisfies the axioms with x a genuine unit.
// Used to pin the normalization exponent of the link invariant.
FunctionalSpec scaled_homology_functional(int g);

// Negative control: claims lam = t_1 while evaluating like mu_H, so the
// twist axiom fails and nothing else does.
FunctionalSpec broken_functional(int g);

struct AxiomReport {
  bool pass[4] = {true, true, true, true};
  long checks[4] = {0, 0, 0, 0};
  std::string first_failure;

  bool all_pass() const { return pass[0] && pass[1] && pass[2] && pass[3]; }
  std::string to_string() const;
};

// Checks the four Markov-functional axioms on the samples:
//   (1) mu(1) = 1
//   (2) x mu(b) = mu(iota(b))
//   (3) mu(b s_i^e) = mu(s_i^e b) for 1 <= i <= n-1, e = +-1
//   (4) mu(b1 s_n^e b2) = lam^e * x * mu(b1 b2), both sides at n+1 strands
//       (the right-hand product is compared through iota, which accounts
//       for the factor x).
AxiomReport check_axioms(const FunctionalSpec& f, const std::vector<BraidWord>& samples);

// Multiset of (component length, winding vector) pairs of the closure:
// one entry per cycle of the underlying permutation, the vector collecting
// the handle exponents picked up by the strands of that cycle.
struct WindingProfile {
  std::vector<std::pair<int, std::vector<long long>>> components;  // sorted

  bool operator==(const WindingProfile&) const = default;
  std::string to_string() const;

  // The winding vectors alone, sorted.  This is the part that is invariant
  // under moves that change the strand count.
  std::vector<std::vector<long long>> vectors() const;
};

WindingProfile winding_profile(const BraidWord& u);

// The normalized invariant  x^-(n-1) * lam^-e(u) * mu(u).
RingElement link_invariant(const BraidWord& u, const FunctionalSpec& f);

}  // namespace mixbraid
