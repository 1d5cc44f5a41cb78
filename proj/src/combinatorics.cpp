#include "qcomb/combinatorics.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace qcomb {

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int p : parts_) {
    if (p <= 0) throw std::invalid_argument("composition parts must be positive");
    weight_ += p;
  }
}

Composition Composition::from_descents(int n, const std::vector<int>& descents) {
  std::vector<int> parts;
  int prev = 0;
  for (int d : descents) {
    if (d <= prev || d >= n) throw std::invalid_argument("bad descent set");
    parts.push_back(d - prev);
    prev = d;
  }
  parts.push_back(n - prev);
  return Composition(std::move(parts));
}

std::vector<int> Composition::descents() const {
  std::vector<int> d;
  int s = 0;
  for (size_t i = 0; i + 1 < parts_.size(); ++i) {
    s += parts_[i];
    d.push_back(s);
  }
  return d;
}

unsigned Composition::canonical_index() const {
  unsigned idx = 0;
  for (int d : descents()) idx |= 1u << (weight_ - 1 - d);
  return idx;
}

Composition Composition::reversed() const {
  std::vector<int> p(parts_.rbegin(), parts_.rend());
  return Composition(std::move(p));
}

std::string Composition::label() const {
  std::ostringstream os;
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (i) os << ".";
    os << parts_[i];
  }
  return os.str();
}

bool Composition::operator<(const Composition& o) const {
  if (weight_ != o.weight_) return weight_ < o.weight_;
  return canonical_index() < o.canonical_index();
}

std::vector<Composition> compositions_of(int n) {
  if (n < 0) throw std::invalid_argument("compositions_of negative n");
  if (n == 0) return {Composition()};
  std::vector<Composition> out;
  out.reserve(1u << (n - 1));
  for (unsigned idx = 0; idx < (1u << (n - 1)); ++idx) {
    std::vector<int> des;
    for (int d = 1; d < n; ++d)
      if (idx & (1u << (n - 1 - d))) des.push_back(d);
    out.push_back(Composition::from_descents(n, des));
  }
  return out;
}

bool finer_or_equal(const Composition& I, const Composition& J) {
  if (I.weight() != J.weight()) return false;
  auto di = I.descents(), dj = J.descents();
  return std::includes(di.begin(), di.end(), dj.begin(), dj.end());
}

std::vector<Composition> coarsenings(const Composition& I) {
  const int l = I.length();
  std::vector<Composition> out;
  if (l == 0) return {I};
  for (unsigned mask = 0; mask < (1u << (l - 1)); ++mask) {
    // Bit b set keeps the separator after part b; clear merges across it.
    std::vector<int> parts{I.part(0)};
    for (int b = 0; b < l - 1; ++b) {
      if (mask & (1u << b))
        parts.push_back(I.part(b + 1));
      else
        parts.back() += I.part(b + 1);
    }
    out.push_back(Composition(std::move(parts)));
  }
  return out;
}

int major_index(const Composition& K) {
  const int l = K.length();
  int m = 0;
  for (int i = 0; i < l; ++i) m += (l - 1 - i) * K.part(i);
  return m;
}

std::optional<int> st_count(const Composition& I, const Composition& J) {
  if (!finer_or_equal(I, J)) return std::nullopt;
  int c = 0;
  for (int a : I.descents())
    for (int b : J.descents())
      if (a >= b) ++c;
  return c;
}

std::optional<int> st_prime_count(const Composition& I, const Composition& J) {
  if (!finer_or_equal(I, J)) return std::nullopt;
  int c = 0;
  for (int a : I.descents())
    for (int b : J.descents())
      if (a <= b) ++c;
  return c;
}

Word standardize(const Word& w) {
  const int n = static_cast<int>(w.size());
  std::vector<int> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(),
                   [&](int a, int b) { return w[a] < w[b]; });
  Word out(n);
  for (int r = 0; r < n; ++r) out[idx[r]] = r + 1;
  return out;
}

Word pack(const Word& w) {
  std::set<int> letters(w.begin(), w.end());
  std::map<int, int> rank;
  int r = 1;
  for (int x : letters) rank[x] = r++;
  Word out;
  out.reserve(w.size());
  for (int x : w) out.push_back(rank[x]);
  return out;
}

bool is_packed(const Word& w) { return pack(w) == w; }

Composition evaluation_comp(const Word& w) {
  if (!is_packed(w)) throw std::invalid_argument("evaluation of unpacked word");
  int k = *std::max_element(w.begin(), w.end());
  std::vector<int> counts(k, 0);
  for (int x : w) ++counts[x - 1];
  return Composition(std::move(counts));
}

Composition word_comp(const Word& w) {
  const int n = static_cast<int>(w.size());
  std::map<int, int> last;
  for (int i = 0; i < n; ++i) last[w[i]] = i + 1;
  std::set<int> des;
  for (const auto& [letter, pos] : last)
    if (pos < n) des.insert(pos);
  return Composition::from_descents(n, std::vector<int>(des.begin(), des.end()));
}

Composition descent_comp(const Word& w) {
  const int n = static_cast<int>(w.size());
  std::vector<int> des;
  for (int i = 0; i + 1 < n; ++i)
    if (w[i] > w[i + 1]) des.push_back(i + 1);
  return Composition::from_descents(n, des);
}

long inversions(const Word& w) {
  long c = 0;
  for (size_t i = 0; i < w.size(); ++i)
    for (size_t j = i + 1; j < w.size(); ++j)
      if (w[i] > w[j]) ++c;
  return c;
}

long special_inversions(const Word& w) {
  const int n = static_cast<int>(w.size());
  std::map<int, int> last;
  for (int i = 0; i < n; ++i) last[w[i]] = i;
  long c = 0;
  for (int j = 0; j < n; ++j) {
    if (last[w[j]] != j) continue;
    for (int i = 0; i < j; ++i)
      if (w[i] > w[j]) ++c;
  }
  return c;
}

std::vector<Word> packed_words(int n) {
  std::vector<Word> out;
  // Surjections onto {1..k} for each alphabet size k, generated depth first
  // and pruned when the remaining positions cannot cover the unused letters.
  for (int k = 1; k <= n; ++k) {
    struct Rec {
      int n, k;
      std::vector<Word>* out;
      Word cur;
      void go(int pos, unsigned used_mask) {
        int missing = k - __builtin_popcount(used_mask);
        if (n - pos < missing) return;
        if (pos == n) {
          out->push_back(cur);
          return;
        }
        for (int x = 1; x <= k; ++x) {
          cur.push_back(x);
          go(pos + 1, used_mask | (1u << (x - 1)));
          cur.pop_back();
        }
      }
    } rec{n, k, &out, {}};
    rec.go(0, 0);
  }
  return out;
}

std::vector<Word> permutations_of(int n) {
  Word p(n);
  std::iota(p.begin(), p.end(), 1);
  std::vector<Word> out;
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

Word inverse_permutation(const Word& p) {
  Word inv(p.size());
  for (size_t i = 0; i < p.size(); ++i) inv[p[i] - 1] = static_cast<int>(i) + 1;
  return inv;
}

Composition recoil_comp(const Word& p) {
  return descent_comp(inverse_permutation(p));
}

Word lehmer_inverse_code(const Word& p) {
  const int n = static_cast<int>(p.size());
  std::vector<int> pos(n + 1);
  for (int i = 0; i < n; ++i) pos[p[i]] = i;
  Word code(n, 0);
  for (int v = 1; v <= n; ++v) {
    int c = 0;
    for (int i = 0; i < pos[v]; ++i)
      if (p[i] > v) ++c;
    code[v - 1] = c;
  }
  return code;
}

Composition lc_comp(const Word& p) {
  const int n = static_cast<int>(p.size());
  Word code = lehmer_inverse_code(p);
  std::set<int> s;
  for (int i = n - 1; i >= 0; --i) {
    int k = code[i];
    if (k > static_cast<int>(s.size())) {
      // Insert the (k - |S|)-th value of [1..n] \ S.
      int need = k - static_cast<int>(s.size());
      for (int v = 1; v <= n; ++v) {
        if (s.count(v)) continue;
        if (--need == 0) {
          s.insert(v);
          break;
        }
      }
    }
  }
  Composition c = Composition::from_descents(n, std::vector<int>(s.begin(), s.end()));
  return c.reversed();
}

std::vector<int> gdes_values(const Word& p) {
  std::set<int> vals;
  for (size_t i = 0; i + 1 < p.size(); ++i)
    if (p[i] > p[i + 1]) vals.insert(p[i]);
  return std::vector<int>(vals.begin(), vals.end());
}

Composition gc_comp(const Word& p) {
  const int n = static_cast<int>(p.size());
  std::vector<int> des;
  for (int v : gdes_values(p)) des.push_back(v - 1);
  std::sort(des.begin(), des.end());
  return Composition::from_descents(n, des);
}

long count_31_2(const Word& w) {
  const int n = static_cast<int>(w.size());
  long c = 0;
  for (int i = 0; i + 1 < n; ++i) {
    if (w[i] <= w[i + 1]) continue;
    for (int j = i + 2; j < n; ++j)
      if (w[i + 1] < w[j] && w[j] < w[i]) ++c;
  }
  return c;
}

long count_2_31(const Word& w) {
  const int n = static_cast<int>(w.size());
  long c = 0;
  for (int j = 0; j + 1 < n; ++j) {
    if (w[j] <= w[j + 1]) continue;
    for (int i = 0; i < j; ++i)
      if (w[j + 1] < w[i] && w[i] < w[j]) ++c;
  }
  return c;
}

long count_21_1(const Word& w) {
  const int n = static_cast<int>(w.size());
  long c = 0;
  for (int i = 0; i + 1 < n; ++i) {
    if (w[i] <= w[i + 1]) continue;
    for (int j = i + 2; j < n; ++j)
      if (w[j] == w[i + 1]) ++c;
  }
  return c;
}

long total_pattern_weight(const Word& w) { return count_21_1(w) + count_31_2(w); }

long crossings(const Word& p) {
  const int n = static_cast<int>(p.size());
  long c = 0;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      if (i < j && j <= p[i - 1] && p[i - 1] < p[j - 1]) ++c;
      if (i > j && j > p[i - 1] && p[i - 1] > p[j - 1]) ++c;
    }
  return c;
}

std::vector<int> weak_excedance_set(const Word& p) {
  std::vector<int> s;
  for (int i = 1; i <= static_cast<int>(p.size()); ++i)
    if (p[i - 1] >= i) s.push_back(i);
  return s;
}

std::vector<int> descent_bottom_set(const Word& p) {
  std::set<int> s;
  for (size_t i = 0; i + 1 < p.size(); ++i)
    if (p[i] > p[i + 1]) s.insert(p[i + 1]);
  return std::vector<int>(s.begin(), s.end());
}

}  // namespace qcomb
