#pragma once

#include <string>
#include <vector>

#include "mixbraid/word.hpp"

namespace mixbraid {

// Permutation table on m points, 0-based: p[i] is the image of i.
using Perm = std::vector<int>;

Perm perm_identity(int m);
Perm perm_compose(const Perm& a, const Perm& b);  // apply a, then b
Perm perm_inverse(const Perm& a);

// Canonical form of a classical braid: Delta^infimum times a left-weighted
// sequence of proper permutation-braid factors.  Two words are equal in the
// braid group iff their normal forms coincide.
struct NormalForm {
  int strands = 0;
  long long infimum = 0;
  std::vector<Perm> factors;

  bool operator==(const NormalForm&) const = default;

  // "inf=<k>|<perm>|<perm>|..." with each permutation in 1-based one-line
  // image notation; stable across runs.
  std::string serialize() const;
};

// Left normal form of a classical braid word given as unit letters
// (1-based index, sign) on m strands.
NormalForm left_normal_form(const std::vector<std::pair<int, int>>& units, int m);

// Normal form of the image of u in the classical group on g+n strands.
// b-generator words are converted to the a-presentation first.
NormalForm normal_form(const BraidWord& u);

// Hashable canonical key for group elements; includes the (g, n) signature.
std::string canonical_key(const BraidWord& u);

// True iff u = v in B_{g,n}. Throws on signature mismatch.
bool equal(const BraidWord& u, const BraidWord& v);

bool is_trivial(const BraidWord& u);

}  // namespace mixbraid
