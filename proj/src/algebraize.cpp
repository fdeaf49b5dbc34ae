#include "mixbraid/algebraize.hpp"

#include <algorithm>
#include <stdexcept>

#include "mixbraid/normal_form.hpp"

namespace mixbraid {

namespace {

// Reduced free-group words: +k stands for x_k, -k for its inverse.
using FreeWord = std::vector<int>;

void free_push(FreeWord& w, int letter) {
  if (!w.empty() && w.back() == -letter)
    w.pop_back();
  else
    w.push_back(letter);
}

FreeWord free_reduce(const FreeWord& w) {
  FreeWord r;
  for (int x : w) free_push(r, x);
  return r;
}

FreeWord free_inverse(const FreeWord& w) {
  FreeWord r;
  for (auto it = w.rbegin(); it != w.rend(); ++it) r.push_back(-*it);
  return r;
}

// Artin action of one crossing on a free word, letters applied first to last:
//   s_i   : x_i -> x_i x_{i+1} x_i^-1,  x_{i+1} -> x_i
//   s_i^-1: x_i -> x_{i+1},             x_{i+1} -> x_{i+1}^-1 x_i x_{i+1}
FreeWord artin_apply(const FreeWord& w, int i, int sign) {
  FreeWord out;
  out.reserve(w.size() * 2);
  auto emit = [&out](std::initializer_list<int> img, bool inverse) {
    if (!inverse) {
      for (int x : img) free_push(out, x);
    } else {
      std::vector<int> tmp(img);
      for (auto it = tmp.rbegin(); it != tmp.rend(); ++it) free_push(out, -*it);
    }
  };
  for (int letter : w) {
    int k = std::abs(letter);
    bool inv = letter < 0;
    if (sign > 0) {
      if (k == i)
        emit({i, i + 1, -i}, inv);
      else if (k == i + 1)
        emit({i}, inv);
      else
        emit({k}, inv);
    } else {
      if (k == i)
        emit({i + 1}, inv);
      else if (k == i + 1)
        emit({-(i + 1), i, i + 1}, inv);
      else
        emit({k}, inv);
    }
    if (out.size() > 4000000) throw std::runtime_error("free word blow-up in combing");
  }
  return out;
}

// Fiber coordinate of phi (an element of the kernel of the forget-strand-m
// map): A(phi)(x_m) is a conjugate c x_m c^-1, and the class of the loop in
// the complement of the other strands is c with its x_m letters erased
// (they only record framing around the moving strand itself).
FreeWord fiber_conjugator(const BraidWord& phi, int m) {
  FreeWord w{m};
  for (const Generator& gen : word_units(phi)) w = artin_apply(w, gen.index, gen.exponent);
  w = free_reduce(w);
  FreeWord conj;
  while (w.size() > 1 && w.front() == -w.back()) {
    conj.push_back(w.front());
    w.erase(w.begin());
    w.pop_back();
  }
  if (w.size() != 1 || w[0] != m)
    throw std::runtime_error("combing: image of the loop is not a conjugate");
  FreeWord gamma;
  for (int letter : conj)
    if (std::abs(letter) != m) free_push(gamma, letter);
  return gamma;
}

// The braid realizing the loop of the last of j moving strands around
// puncture t (a fixed strand when t <= g, the (t-g)-th moving strand
// otherwise), expressed in B_{g,j} generators.  Its embedding is the
// classical band s_{m-1}..s_{t+1} s_t^2 s_{t+1}^-1..s_{m-1}^-1 whose Artin
// conjugator is exactly x_t.
BraidWord fiber_basis_word(int g, int j, int t, int exponent) {
  std::vector<Generator> runs;
  if (t <= g) {
    for (int k = j - 1; k >= 1; --k) runs.push_back(Generator{Kind::Sigma, k, 1});
    runs.push_back(Generator{Kind::A, t, exponent});
    for (int k = 1; k <= j - 1; ++k) runs.push_back(Generator{Kind::Sigma, k, -1});
  } else {
    int k0 = t - g;
    for (int k = j - 1; k > k0; --k) runs.push_back(Generator{Kind::Sigma, k, 1});
    runs.push_back(Generator{Kind::Sigma, k0, 2 * exponent});
    for (int k = k0 + 1; k <= j - 1; ++k) runs.push_back(Generator{Kind::Sigma, k, -1});
  }
  return make_word(g, j, runs);
}

// Removes the strand whose top position is `slot` from a classical word.
BraidWord delete_strand(const BraidWord& w, int slot) {
  int d = slot;
  std::vector<Generator> out;
  for (const Generator& gen : word_units(w)) {
    int p = gen.index;
    if (p == d) {
      d = p + 1;
    } else if (p + 1 == d) {
      d = p;
    } else {
      out.push_back(Generator{Kind::Sigma, p - (p > d ? 1 : 0), gen.exponent});
    }
  }
  return word_from_units(0, w.n - 1, out);
}

}  // namespace

BraidWord rewrite_algebraic(const BraidWord& classical, int g, int n) {
  if (classical.g != 0 || classical.n != g + n)
    throw std::invalid_argument("rewrite expects a classical word on g+n strands");
  if (word_family(classical) != Family::Neutral)
    throw std::invalid_argument("rewrite expects sigma letters only");
  std::vector<int> perm = underlying_permutation(classical);
  for (int i = 1; i <= g; ++i)
    if (perm[static_cast<size_t>(i)] != i)
      throw std::invalid_argument("fixed strand displaced; word is not an algebraic mixed braid");
  for (int j = g + 1; j <= g + n; ++j)
    if (perm[static_cast<size_t>(j)] <= g)
      throw std::invalid_argument("moving strand ends on a fixed column");

  // Split off a positive sigma-word realizing the moving permutation.
  std::vector<Generator> sort_units;
  {
    std::vector<int> occ(static_cast<size_t>(n) + 1);
    for (int p = 1; p <= n; ++p) occ[static_cast<size_t>(p)] = p;
    for (int target = n; target >= 1; --target) {
      int strand = -1;
      for (int j = 1; j <= n; ++j)
        if (perm[static_cast<size_t>(g + j)] - g == target) strand = j;
      int q = -1;
      for (int p = 1; p <= target; ++p)
        if (occ[static_cast<size_t>(p)] == strand) q = p;
      for (int p = q; p < target; ++p) {
        sort_units.push_back(Generator{Kind::Sigma, p, 1});
        std::swap(occ[static_cast<size_t>(p)], occ[static_cast<size_t>(p) + 1]);
      }
    }
  }
  BraidWord sort_alg = word_from_units(g, n, sort_units);
  BraidWord pure = multiply(classical, invert(embed(sort_alg)));

  // Comb the pure part one strand at a time, outermost strand first.
  BraidWord result;
  result.g = g;
  result.n = n;
  BraidWord cur = pure;
  for (int j = n; j >= 1; --j) {
    int m = g + j;
    BraidWord bar = delete_strand(cur, m);
    BraidWord lifted = bar;
    lifted.n = m;
    BraidWord phi = multiply(cur, invert(lifted));
    FreeWord gamma = fiber_conjugator(phi, m);
    for (int letter : gamma) {
      BraidWord piece = fiber_basis_word(g, j, std::abs(letter), letter > 0 ? 1 : -1);
      piece.n = n;  // lift into B_{g,n}
      result = multiply(result, piece);
    }
    cur = bar;
  }
  if (!cur.letters.empty())
    throw std::runtime_error("combing: residual word after deleting all moving strands");
  result = multiply(result, sort_alg);

  if (!(normal_form(embed(result)) == normal_form(classical)))
    throw std::runtime_error("combing produced an unequal word");
  return result;
}

BraidWord algebraize(const GeometricMixedBraid& b) {
  validate_geometric(b);
  int n = b.n();
  int w = b.g + n;
  // Token layout: which columns currently hold fixed strands / which pair.
  std::vector<int> tokens(static_cast<size_t>(w) + 1, -1);  // -1 fixed, else pair index
  for (int j = 0; j < n; ++j) tokens[static_cast<size_t>(b.positions[static_cast<size_t>(j)])] = j;

  BraidWord word = b.word;
  for (int j = n - 1; j >= 0; --j) {
    int pos = -1;
    for (int p = 1; p <= w; ++p)
      if (tokens[static_cast<size_t>(p)] == j) pos = p;
    while (pos < w && tokens[static_cast<size_t>(pos) + 1] == -1) {
      // Pull the pair one fixed strand to the right; 'o' passes over it.
      int s = b.labels[static_cast<size_t>(j)] == 'o' ? -1 : 1;
      BraidWord pre, post;
      pre.n = post.n = w;
      pre.letters.push_back(Generator{Kind::Sigma, pos, s});
      post.letters.push_back(Generator{Kind::Sigma, pos, -s});
      word = multiply(pre, multiply(word, post));
      std::swap(tokens[static_cast<size_t>(pos)], tokens[static_cast<size_t>(pos) + 1]);
      ++pos;
    }
  }
  return rewrite_algebraic(word, b.g, n);
}

}  // namespace mixbraid
