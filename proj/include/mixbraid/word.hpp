#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace mixbraid {

// Generator kinds: s<i> are the elementary crossings of the moving strands,
// a<i> loop a single handle, b<i> are the loop generators b_i = a_i a_{i+1} ... a_g.
enum class Kind : std::uint8_t { Sigma, A, B };

// One run of a generator: kind, index and a nonzero (possibly negative) exponent.
struct Generator {
  Kind kind = Kind::Sigma;
  int index = 1;
  int exponent = 1;

  bool operator==(const Generator&) const = default;
};

enum class Family { Neutral, AWords, BWords };

// A freely reduced word in the mixed braid group B_{g,n}.
// Adjacent runs with the same kind and index are always merged, runs with
// exponent zero are dropped.  Handle generators of the two presentations
// (a's and b's) are never mixed inside one word.
struct BraidWord {
  int g = 0;
  int n = 1;
  std::vector<Generator> letters;

  bool operator==(const BraidWord&) const = default;
};

// --- construction and validation ------------------------------------------

// Throws std::invalid_argument if indices are out of range for (g, n),
// exponents are zero, a and b letters are mixed, or the word is not reduced.
void validate_word(const BraidWord& w);

// Which handle-generator family the word uses. Sigma-only words are Neutral.
Family word_family(const BraidWord& w);

// Append one run to a letter vector, merging and cancelling as needed.
void append_letter(std::vector<Generator>& letters, Generator gen);

// Build a reduced word from an arbitrary run sequence.
BraidWord make_word(int g, int n, const std::vector<Generator>& runs);

// Total number of unit letters (sum of |exponent|).
int unit_count(const BraidWord& w);

// Expand into unit letters (each with exponent +1 or -1).
std::vector<Generator> word_units(const BraidWord& w);

// Inverse of word_units: rebuild a reduced word.
BraidWord word_from_units(int g, int n, const std::vector<Generator>& units);

// --- text format ------------------------------------------------------------
//
// Grammar (bit-exact):  "g=<int> n=<int>;" then whitespace-separated tokens
// a<i>, b<i>, s<i>, each optionally suffixed "^<signed int>".  Empty body is
// the identity.

BraidWord parse_word(const std::string& text);
std::string word_to_string(const BraidWord& w);

// Body only ("a1 s1^-2"), without the signature header.
std::string word_body_to_string(const BraidWord& w);
std::vector<Generator> parse_word_body(const std::string& body);

// --- group operations -------------------------------------------------------

// Concatenation with free reduction. Signatures and families must agree.
BraidWord multiply(const BraidWord& u, const BraidWord& v);

// Reversed word with negated exponents.
BraidWord invert(const BraidWord& u);

// Replace a_i by b_i b_{i+1}^{-1} (and a_g by b_g).  Requires an a-family
// (or neutral) word.
BraidWord a_to_b(const BraidWord& u);

// Replace b_i by a_i a_{i+1} ... a_g.  Requires a b-family (or neutral) word.
BraidWord b_to_a(const BraidWord& u);

// Image in the classical braid group on g+n strands, returned with the
// degenerate signature (0, g+n):  s_k -> s_{g+k} and
// a_i -> (s_g ... s_{i+1}) s_i^2 (s_{i+1}^-1 ... s_g^-1), a positive band.
// b letters must be converted first.
BraidWord embed(const BraidWord& u);

// Permutation of the moving strands {1..n}: result[p] is the bottom position
// of the strand entering at top position p (1-based).
std::vector<int> underlying_permutation(const BraidWord& u);

// Exponent sum of the sigma letters only; handle letters count zero.
long long exponent_sum(const BraidWord& u);

// Component i is the total exponent of a_i. Requires an a-family word.
std::vector<long long> a_exponent_vector(const BraidWord& u);

// Same word viewed in B_{g,n+1} (an unlinked strand added on the right).
BraidWord iota(const BraidWord& u);

}  // namespace mixbraid
