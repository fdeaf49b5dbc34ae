#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mixbraid/word.hpp"

namespace mixbraid {

// Morse-event encoding of a mixed link diagram: g fixed strands run from the
// top boundary to the bottom boundary, moving strands form closed loops.
// Events are listed top to bottom, one per row.  Positions are 1-based slot
// indices in the slice above the event.
//   cup p   : two new strands appear at slots p, p+1 (a local maximum)
//   cap p   : the strands at slots p, p+1 merge and end (a local minimum)
//   x+ p    : the strands at p, p+1 cross, left strand passing over
//   x- p    : the strands at p, p+1 cross, left strand passing under
struct MorseEvent {
  enum class Kind { Cup, Cap, Cross };
  Kind kind = Kind::Cross;
  int pos = 1;
  int sign = 1;  // crossings only

  bool operator==(const MorseEvent&) const = default;
};

// A closed diagram has only the g fixed strands on its boundary.  During
// braiding, eliminated arcs leave boundary-to-boundary moving strands behind;
// their top columns are declared in top_moving (ascending).  Every moving
// boundary strand is oriented downward and each open component runs from one
// top endpoint to one bottom endpoint; bottom moving columns must match
// top_moving as a multiset (the corresponding-endpoint pairing).
struct MixedDiagram {
  int g = 0;
  std::vector<int> top_moving;
  std::vector<MorseEvent> rows;

  bool operator==(const MixedDiagram&) const = default;
};

MixedDiagram parse_diagram(const std::string& text);
std::string diagram_to_string(const MixedDiagram& d);

struct ValidationReport {
  bool ok = true;
  int row = -1;  // first offending row, -1 if global
  std::string message;
};

ValidationReport validate(const MixedDiagram& d);

// A braid on g+n strands whose fixed subbraid is the trivial braid, with an
// over/under closure label per pair of corresponding moving endpoints.
struct GeometricMixedBraid {
  int g = 0;
  BraidWord word;              // classical word, signature (0, g+n)
  std::vector<char> labels;    // 'o' or 'u', one per pair, in column order
  std::vector<int> positions;  // moving endpoint columns, strictly ascending

  int n() const { return static_cast<int>(positions.size()); }
  bool operator==(const GeometricMixedBraid&) const = default;

  std::string serialize() const;
  static GeometricMixedBraid parse(const std::string& text);
};

// Throws std::invalid_argument when the data violates the definition (bad
// columns, fixed strands crossing each other, moving endpoints not matched).
void validate_geometric(const GeometricMixedBraid& b);

// Closure operations.  Geometric closure routes each pair's closing arc to
// the right of everything, nested so that arcs never cross one another; an
// 'o' arc passes over every fixed strand on its way, a 'u' arc under.
MixedDiagram close_geometric(const GeometricMixedBraid& b);

// Closure of an algebraic mixed braid: arcs drop vertically on the right.
MixedDiagram close_algebraic(const BraidWord& u);

// --- up-arcs and braiding -----------------------------------------------------

// A maximal upward-oriented piece of a moving strand carrying crossings of a
// single type.  Pieces are indexed against the traced diagram they came from.
struct UpArc {
  int segment = 0;      // traced segment id
  char type = 'f';      // 'o', 'u', or 'f' for a crossing-free arc
  int cross_begin = 0;  // range into the segment's crossing list, drawn order
  int cross_end = 0;
  bool top_is_cup = true;
  bool bottom_is_cap = true;
  int top_row = 0;  // row of the cup or of the first crossing of the piece
  int top_pos = 0;
};

std::vector<UpArc> find_up_arcs(const MixedDiagram& d);

struct EliminationResult {
  MixedDiagram diagram;
  int top_slot = 0;     // column of the new pair at the top boundary
  int bottom_slot = 0;  // and at the bottom boundary
  char label = 'o';
};

// Replaces one up-arc by a boundary-to-boundary pair of strands pulled over
// (type o) or under (type u) everything they cross.  Free arcs take
// `free_label`.  The up-arc count of the result is strictly smaller.
EliminationResult eliminate_up_arc(const MixedDiagram& d, const UpArc& arc, char free_label = 'o');

// The braiding algorithm: eliminates up-arcs (bottom-most top vertex first,
// ties leftmost) until none remain, then reads off the braid.
GeometricMixedBraid braid_diagram(const MixedDiagram& d);

// --- isotopy moves --------------------------------------------------------------

enum class DiagramMove { R1, R2, R3, Planar, Mixed };

struct MoveSite {
  int row = 0;      // insertion point or first row of the pattern
  int pos = 0;
  int variant = 0;  // kind-specific, see apply_move
  bool remove = false;
};

// Applies one local move.  Variants:
//   R1: 0..3 = (kink side) * 2 + (crossing sign), insertion unless remove
//   R2: 0 = left strand over twice, 1 = right strand over twice
//   R3: slides the triple [x@p, x@p+1, x@p] to [x@p+1, x@p, x@p+1] (variant 0)
//       or back (variant 1); signs must satisfy the braid relation
//   Planar: 0 = commute rows row,row+1; 1 = snake insert right; 2 = snake
//       insert left; remove=true with variant 1/2 removes a snake
//   Mixed: 0 = R2-shaped slide across a fixed strand, 1 = R3-shaped;
//       at least one participating strand must be fixed
// R1/R2/R3 require all participating strands moving.
MixedDiagram apply_move(const MixedDiagram& d, DiagramMove move, const MoveSite& site);

// Diagram-level closure invariants, computed independently of any braid-side
// machinery: component count and the multiset of winding vectors around the
// fixed strands (signed crossing counts halved).
struct DiagramInvariants {
  int components = 0;
  std::vector<std::vector<long long>> winding_vectors;  // sorted

  bool operator==(const DiagramInvariants&) const = default;
};

DiagramInvariants diagram_invariants(const MixedDiagram& d);

}  // namespace mixbraid
