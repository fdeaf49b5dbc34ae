#pragma once

#include <string>
#include <vector>

#include "mixbraid/word.hpp"

namespace mixbraid {

// The elementary equivalence moves on algebraic mixed braids.  All positional
// parameters (split points, removal positions) count unit letters, so a run
// like s1^3 contains three split points inside it.

enum class LMoveType { Over, Under };

// Insert s_n^{sign} between the two halves of u = a1 | a2 (split in unit
// letters); result lives in B_{g,n+1}.
BraidWord stabilize(const BraidWord& u, int split, int sign);

// Detection of words that are syntactically b1 s_{n-1}^{+-1} b2 with b1, b2
// free of index n-1 sigma letters.  Returns (unit split, sign) pairs.
std::vector<std::pair<int, int>> find_destabilizations(const BraidWord& u);

// Remove the single s_{n-1}^{+-1} unit at the given split; result in B_{g,n-1}.
// Throws if the word is not of the destabilizable form there.
BraidWord destabilize(const BraidWord& u, int split, int sign);

// Markov conjugation: s_i^{-sign} u s_i^{sign}, freely reduced.
BraidWord sigma_conjugate(const BraidWord& u, int i, int sign);

// An algebraic L-move at strand position i (1 <= i <= n+1) and unit split.
// For the over type with split u = a1 | a2 the result in B_{g,n+1} is
//   s_i^-1..s_n^-1  a1  s_i^-1..s_{n-1}^-1  s_n^{sign}  s_{n-1}..s_i  a2  s_n..s_i.
// The under type mirrors the signs of all conjugating letters.
// At i = n+1 every conjugating block is empty and the move is the Markov move.
BraidWord apply_l_move(const BraidWord& u, int split, int i, int sign, LMoveType type);

// The maximal loop w = a_1 a_2 ... a_g (signature (g, 1)).
BraidWord maximal_loop(int g);

enum class Side { Left, Right };

// Moves a literal maximal-loop prefix/suffix to the other side of the word.
// `side` names where the loop currently sits.
BraidWord omega_commute(const BraidWord& u, Side side);

// True iff the b-generator word w equals b_1^k for some integer k.
bool is_allowed_loop_conjugator(const BraidWord& w);

// The loop conjugator realized by flipping the label of an endpoint pair
// lying between the position-th and (position+1)-st fixed strand:
// b_{position+1}, or the identity for position == g.
BraidWord label_flip_conjugator(int g, int position);

// --- replayable steps and certificates ---------------------------------------

struct MoveStep {
  enum class Kind {
    LMoveO,
    LMoveU,
    Stabilize,
    Destabilize,
    SigmaConjugate,
    OmegaCommute,
    Relator,
    FreeReduce,
  };
  Kind kind = Kind::FreeReduce;
  int split = 0;
  int strand = 0;                  // L-move position parameter
  int sign = 0;
  int index = 0;                   // conjugation index
  Side side = Side::Right;         // omega commutation
  std::vector<Generator> target;   // relator rewrite target (word body)

  std::string serialize() const;   // one line, "<kind> <params...>"
  static MoveStep parse(const std::string& line);
};

// Applies one step to a word; throws std::invalid_argument when inapplicable.
BraidWord apply_step(const BraidWord& u, const MoveStep& step);

struct MoveCertificate {
  BraidWord start;
  std::vector<MoveStep> steps;
  BraidWord end;

  std::string serialize() const;
  static MoveCertificate parse(const std::string& text);
};

struct ReplayResult {
  bool ok = false;
  int failed_step = -1;            // -1: none, -2: end mismatch
  std::string message;
  BraidWord final_word;
};

ReplayResult replay_certificate(const MoveCertificate& cert);

}  // namespace mixbraid
