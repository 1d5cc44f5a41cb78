#pragma once

#include <optional>
#include <string>
#include <vector>

namespace qcomb {

// A composition of n: ordered tuple of positive parts.  Weak compositions
// (parts >= 0) appear only in the type B tableau code and are handled there
// as raw vectors.
class Composition {
 public:
  Composition() = default;
  explicit Composition(std::vector<int> parts);

  // Inverse of descents(): D must be a strictly increasing subset of [1, n-1].
  static Composition from_descents(int n, const std::vector<int>& descents);

  int weight() const { return weight_; }
  int length() const { return static_cast<int>(parts_.size()); }
  const std::vector<int>& parts() const { return parts_; }
  int part(int i) const { return parts_[i]; }

  // Partial sums excluding the total, as a strictly increasing list.
  std::vector<int> descents() const;

  // Position in the canonical enumeration of compositions of the same weight:
  // sum over d in Des(I) of 2^{weight-1-d}.
  unsigned canonical_index() const;

  Composition reversed() const;

  // Dot-separated parts, e.g. "3.1.2".
  std::string label() const;

  bool operator==(const Composition& o) const { return parts_ == o.parts_; }
  bool operator!=(const Composition& o) const { return parts_ != o.parts_; }
  // Orders by weight, then canonical index; total order usable as a map key.
  bool operator<(const Composition& o) const;

 private:
  std::vector<int> parts_;
  int weight_ = 0;
};

// All compositions of n in canonical order; n = 0 gives the empty composition.
std::vector<Composition> compositions_of(int n);

// Des(I) contains Des(J): I refines J.
bool finer_or_equal(const Composition& I, const Composition& J);

// All J fatter-or-equal I (all ways to merge adjacent parts), 2^{l-1} many.
std::vector<Composition> coarsenings(const Composition& I);

// maj(K) = sum_i (l-i) k_i with 1-based i, i.e. dot product with (l-1, ..., 0).
int major_index(const Composition& K);

// st(I,J) = #{(a,b) in Des(I) x Des(J) : a >= b} when I refines J, else empty.
std::optional<int> st_count(const Composition& I, const Composition& J);
// Same with a <= b.
std::optional<int> st_prime_count(const Composition& I, const Composition& J);

// ---- Words.  A word is a vector of letters >= 1; a permutation of n is a
// word containing each of 1..n exactly once.

using Word = std::vector<int>;

// Standardization: relabel occurrences left to right within each letter value,
// smallest letters first.  Result is a permutation of the word's length.
Word standardize(const Word& w);

// Order-preserving relabel of the letter set onto 1..k.
Word pack(const Word& w);

bool is_packed(const Word& w);

// Letter multiplicities of a packed word, as a composition.
Composition evaluation_comp(const Word& w);

// WC(w): composition of |w| whose descent set is the set of positions of the
// last occurrence of each letter (the final position never counts).
Composition word_comp(const Word& w);

// DC(w): maximal nondecreasing runs; descents at strict drops w_i > w_{i+1}.
Composition descent_comp(const Word& w);

long inversions(const Word& w);

// Inversions (i, j) whose right end is the last occurrence of its letter.
// Coincides with inversions() on permutations.
long special_inversions(const Word& w);

// All packed words of length n (surjections onto {1..k} for every k <= n).
std::vector<Word> packed_words(int n);

std::vector<Word> permutations_of(int n);

Word inverse_permutation(const Word& p);

// Recoil composition: descent composition of the inverse permutation.
Composition recoil_comp(const Word& p);

// Lh(p): word whose i-th letter counts letters of p left of the value i that
// exceed i.  Letter sum equals inversions(p).
Word lehmer_inverse_code(const Word& p);

// LC statistic: scan Lh(p) right to left keeping a value set S; an entry k
// exceeding |S| inserts the (k-|S|)-th absent value.  S is then the descent
// set of a composition C, and LC(p) is C reversed.
Composition lc_comp(const Word& p);

// Values p(i) > p(i+1); the last value of p is never a descent top.
std::vector<int> gdes_values(const Word& p);

// Composition of n with descent set { d-1 : d in GDes(p) }.
Composition gc_comp(const Word& p);

// Pattern 31-2: pairs (i, j), j > i+1, w_i > w_{i+1}, w_{i+1} < w_j < w_i.
long count_31_2(const Word& w);

// Pattern 2-31: pairs (i, j), i < j, w_j > w_{j+1}, w_{j+1} < w_i < w_j.
long count_2_31(const Word& w);

// Pattern 21-1: pairs (i, j), j > i+1, w_i > w_{i+1}, w_j = w_{i+1}.
long count_21_1(const Word& w);

// totg = 21-1 count + 31-2 count.
long total_pattern_weight(const Word& w);

// Crossings of a permutation:
// #{(i,j): i < j <= p(i) < p(j)} + #{(i,j): i > j > p(i) > p(j)}.
long crossings(const Word& p);

// { i : p(i) >= i }, increasing.
std::vector<int> weak_excedance_set(const Word& p);

// { p(i+1) : p(i) > p(i+1) }, increasing, duplicates impossible.
std::vector<int> descent_bottom_set(const Word& p);

}  // namespace qcomb
