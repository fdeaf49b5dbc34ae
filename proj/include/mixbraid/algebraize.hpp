#pragma once

#include "mixbraid/diagram.hpp"
#include "mixbraid/word.hpp"

namespace mixbraid {

// Rewrites a classical braid word whose fixed subbraid is trivial and whose
// moving endpoints sit at columns g+1..g+n into the generators of B_{g,n}.
// The result is verified against the input through the embedding; throws
// std::invalid_argument when the word is not of that form.
BraidWord rewrite_algebraic(const BraidWord& classical, int g, int n);

// Lemma-1 style algebraization of a geometric mixed braid: every endpoint
// pair is pulled to the right of the fixed strands (rightmost pair first,
// over or under them according to its label) and the pulled word is
// rewritten into a-generators.
BraidWord algebraize(const GeometricMixedBraid& b);

}  // namespace mixbraid
