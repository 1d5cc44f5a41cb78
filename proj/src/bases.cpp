#include "qcomb/bases.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <set>
#include <stdexcept>

namespace qcomb {

std::string basis_name(BasisId b) {
  switch (b) {
    case BasisId::S: return "S";
    case BasisId::R: return "R";
    case BasisId::L: return "L";
    case BasisId::Psi: return "Psi";
  }
  return "?";
}

std::optional<BasisId> basis_from_string(const std::string& s) {
  std::string t;
  for (char c : s) t.push_back(static_cast<char>(std::tolower(c)));
  if (t == "s") return BasisId::S;
  if (t == "r") return BasisId::R;
  if (t == "l") return BasisId::L;
  if (t == "psi") return BasisId::Psi;
  return std::nullopt;
}

namespace {

// Delete the first `cells` boxes from the parts sequence, dropping emptied
// leading parts.
std::vector<int> remove_leading_cells(std::vector<int> parts, int cells) {
  size_t i = 0;
  while (cells > 0 && i < parts.size()) {
    int take = std::min(cells, parts[i]);
    parts[i] -= take;
    cells -= take;
    if (parts[i] == 0) ++i;
  }
  if (cells > 0) throw std::logic_error("removed more cells than present");
  return std::vector<int>(parts.begin() + i, parts.end());
}

QPoly s_to_psi_rec(const std::vector<int>& I, const std::vector<int>& J) {
  if (I.empty() && J.empty()) return QPoly(1);
  if (I.empty() || J.empty()) return QPoly();
  if (I[0] < J[0]) {
    if (I.size() == 1) return QPoly();
    std::vector<int> merged(I.begin() + 1, I.end());
    merged[0] += I[0];
    return s_to_psi_rec(merged, J);
  }
  const int k = static_cast<int>(I.size());
  std::vector<int> Jrest(J.begin() + 1, J.end());
  return q_binomial(k + J[0] - 1, J[0]) *
         s_to_psi_rec(remove_leading_cells(I, J[0]), Jrest);
}

int sign_pow(int k) { return k % 2 == 0 ? 1 : -1; }

}  // namespace

QPoly s_to_psi_entry(const Composition& I, const Composition& J) {
  if (I.weight() != J.weight())
    throw std::invalid_argument("weights differ in s_to_psi_entry");
  return s_to_psi_rec(I.parts(), J.parts());
}

QPoly s_to_psi_by_words(const Composition& I, const Composition& J) {
  QPoly total;
  for (const Word& w : packed_words(I.weight())) {
    if (word_comp(w) != I) continue;
    if (!finer_or_equal(J, descent_comp(w))) continue;
    total += QPoly::term(1, static_cast<int>(special_inversions(w)));
  }
  return total;
}

QPoly r_to_psi_by_words(const Composition& I, const Composition& J) {
  QPoly total;
  for (const Word& w : packed_words(I.weight())) {
    if (word_comp(w) != I) continue;
    if (descent_comp(w) != J) continue;
    total += QPoly::term(1, static_cast<int>(special_inversions(w)));
  }
  return total;
}

QPoly s_to_psi_by_matrices(const Composition& I, const Composition& J) {
  const int rows = I.length();
  const int cols = J.length();
  QPoly total;
  // Column by column, each a weak composition of the column sum; the reading
  // word repeats row index r (top to bottom within each column) entry times.
  Word word;
  std::function<void(int, unsigned)> rec = [&](int c, unsigned used_rows) {
    if (c == cols) {
      if (used_rows == (rows >= 32 ? ~0u : ((1u << rows) - 1)) &&
          word_comp(word) == I)
        total += QPoly::term(1, static_cast<int>(special_inversions(word)));
      return;
    }
    std::function<void(int, int, unsigned)> fill = [&](int r, int left,
                                                       unsigned mask) {
      if (r == rows) {
        if (left == 0) rec(c + 1, mask);
        return;
      }
      // entry m_{r,c} = t; letters appended in row order preserve the
      // column-reading convention.
      for (int t = 0; t <= left; ++t) {
        if (t > 0)
          for (int i = 0; i < t; ++i) word.push_back(r + 1);
        fill(r + 1, left - t, t > 0 ? (mask | (1u << r)) : mask);
        if (t > 0)
          for (int i = 0; i < t; ++i) word.pop_back();
      }
    };
    fill(0, J.part(c), used_rows);
  };
  rec(0, 0u);
  return total;
}

std::map<Composition, QPoly> psi_in_l(const Composition& J) {
  std::map<Composition, QPoly> out;
  const int n = J.weight();
  const auto dj = J.descents();
  // I finer-or-equal J: descent supersets of Des(J).
  std::vector<int> rest;
  for (int d = 1; d < n; ++d)
    if (!std::binary_search(dj.begin(), dj.end(), d)) rest.push_back(d);
  const int r = static_cast<int>(rest.size());
  for (unsigned mask = 0; mask < (1u << r); ++mask) {
    std::vector<int> des(dj);
    for (int b = 0; b < r; ++b)
      if (mask & (1u << b)) des.push_back(rest[b]);
    std::sort(des.begin(), des.end());
    Composition I = Composition::from_descents(n, des);
    int delta = I.length() - J.length();
    int stp = *st_prime_count(I, J);
    out[I] = QPoly::term(sign_pow(delta), -delta - stp);
  }
  return out;
}

QPoly s_to_l_by_permutations(const Composition& I, const Composition& J) {
  QPoly total;
  for (const Word& p : permutations_of(I.weight())) {
    if (lc_comp(p) != I) continue;
    if (!finer_or_equal(J, recoil_comp(p))) continue;
    total += QPoly::term(1, static_cast<int>(inversions(p)));
  }
  return total.shifted(-major_index(I.reversed()));
}

QPoly r_to_l_by_permutations(const Composition& I, const Composition& J) {
  QPoly total;
  for (const Word& p : permutations_of(I.weight())) {
    if (lc_comp(p) != I) continue;
    if (recoil_comp(p) != J) continue;
    total += QPoly::term(1, static_cast<int>(inversions(p)));
  }
  return total.shifted(-major_index(I.reversed()));
}

namespace {

int choose2(int a) { return a * (a - 1) / 2; }

// st over explicit descent sets, both from the same weight; A must contain B.
int st_on_descents(const std::vector<int>& A, const std::vector<int>& B) {
  int c = 0;
  for (int a : A)
    for (int b : B)
      if (a >= b) ++c;
  return c;
}

}  // namespace

std::map<Composition, QPoly> l_product_expand(int p, const Composition& I) {
  if (p <= 0) throw std::invalid_argument("l_product_expand needs p >= 1");
  if (I.length() == 0) return {{Composition({p}), QPoly(1)}};
  const int n = p + I.weight();
  // Base composition (p + i_1, i_2, ...).
  std::vector<int> base_parts(I.parts());
  base_parts[0] += p;
  Composition base(base_parts);
  const auto base_des = base.descents();
  const int li = I.length();
  // Candidate extra descents: positions p..n-1 not already in Des(base);
  // descents below p are excluded by the first-part bound.
  std::vector<int> rest;
  for (int d = p; d < n; ++d)
    if (!std::binary_search(base_des.begin(), base_des.end(), d))
      rest.push_back(d);
  std::map<Composition, QPoly> out;
  const int r = static_cast<int>(rest.size());
  for (unsigned mask = 0; mask < (1u << r); ++mask) {
    std::vector<int> des(base_des);
    for (int b = 0; b < r; ++b)
      if (mask & (1u << b)) des.push_back(rest[b]);
    std::sort(des.begin(), des.end());
    Composition Jc = Composition::from_descents(n, des);
    const int lj = Jc.length();
    int exp = st_on_descents(des, base_des) + choose2(lj - li) - choose2(li);
    out[Jc] = QPoly::term(1, exp) * q_binomial(li + p - 1, lj - 1);
  }
  return out;
}

std::map<Composition, QPoly> s_in_l_by_products(const Composition& J) {
  const int l = J.length();
  if (l == 0) return {{Composition(), QPoly(1)}};
  std::map<Composition, QPoly> cur{{Composition({J.part(l - 1)}), QPoly(1)}};
  for (int t = l - 2; t >= 0; --t) {
    std::map<Composition, QPoly> next;
    for (const auto& [K, c] : cur)
      for (const auto& [T, w] : l_product_expand(J.part(t), K)) {
        auto prod = c * w;
        if (!prod.is_zero()) next[T] += prod;
      }
    for (auto it = next.begin(); it != next.end();)
      it = it->second.is_zero() ? next.erase(it) : std::next(it);
    cur = std::move(next);
  }
  return cur;
}

std::vector<QPoly> c_vector(int n) {
  std::vector<QPoly> out;
  for (const Composition& J : compositions_of(n))
    out.push_back(q_factorial_a(J.parts()));
  return out;
}

std::vector<QPoly> e_vector(int n) {
  std::vector<QPoly> out;
  for (const Composition& I : compositions_of(n)) {
    QPoly e;
    for (const Composition& J : coarsenings(I)) {
      int delta = I.length() - J.length();
      int stp = *st_prime_count(I, J);
      e += QPoly::term(sign_pow(delta), -delta - stp) * q_factorial_a(J.parts());
    }
    out.push_back(e);
  }
  return out;
}

QPoly subset_weight_sum(const std::vector<int>& X, const std::vector<int>& Z,
                        int s) {
  const int r = static_cast<int>(X.size());
  const int m = static_cast<int>(Z.size());
  std::set<int> zs(Z.begin(), Z.end());
  for (int x : X)
    if (!zs.count(x)) throw std::invalid_argument("X must lie inside Z");
  if (s < r || s > m) throw std::invalid_argument("s out of range");
  long nu_x = 0;
  for (int y : X) {
    for (int z : Z)
      if (z >= y) ++nu_x;
    for (int x : X)
      if (x <= y) ++nu_x;
  }
  int extra = s - r;
  int exp = static_cast<int>(nu_x) + (r + 1) * extra + choose2(extra);
  return QPoly::term(1, exp) * q_binomial(m - r, extra);
}

namespace {

TransitionMatrix make_matrix(int n, BasisId from, BasisId to) {
  TransitionMatrix m;
  m.n = n;
  m.from = from;
  m.to = to;
  m.order = compositions_of(n);
  const size_t dim = m.order.size();
  m.entry.assign(dim, std::vector<QPoly>(dim));
  return m;
}

// Column-side Moebius: ribbon images are alternating sums of complete images
// over coarsenings of the column label.
TransitionMatrix ribbonize(const TransitionMatrix& s_mat, BasisId from) {
  TransitionMatrix m = make_matrix(s_mat.n, from, s_mat.to);
  const size_t dim = m.order.size();
  for (size_t j = 0; j < dim; ++j) {
    const Composition& J = m.order[j];
    for (const Composition& K : coarsenings(J)) {
      int sgn = sign_pow(J.length() - K.length());
      size_t k = K.canonical_index();
      for (size_t i = 0; i < dim; ++i) {
        if (sgn > 0)
          m.entry[i][j] += s_mat.entry[i][k];
        else
          m.entry[i][j] -= s_mat.entry[i][k];
      }
    }
  }
  return m;
}

}  // namespace

void validate_nonnegative(const TransitionMatrix& m) {
  for (const auto& row : m.entry)
    for (const QPoly& p : row)
      if (p.has_negative_exponent() || p.has_negative_coeff())
        throw std::logic_error("transition matrix entry outside N[q]: " +
                               basis_name(m.from) + "->" + basis_name(m.to));
}

TransitionMatrix transition_matrix(int n, BasisId from, BasisId to) {
  if (n < 1) throw std::invalid_argument("transition_matrix needs n >= 1");
  if (to == BasisId::Psi) {
    if (from == BasisId::S) {
      TransitionMatrix m = make_matrix(n, from, to);
      const size_t dim = m.order.size();
      for (size_t i = 0; i < dim; ++i)
        for (size_t j = 0; j < dim; ++j)
          m.entry[i][j] = s_to_psi_entry(m.order[i], m.order[j]);
      return m;
    }
    if (from == BasisId::R)
      return ribbonize(transition_matrix(n, BasisId::S, BasisId::Psi), from);
    if (from == BasisId::L) {
      TransitionMatrix m = make_matrix(n, from, to);
      const size_t dim = m.order.size();
      for (size_t i = 0; i < dim; ++i)
        for (size_t j = 0; j < dim; ++j) {
          auto st = st_count(m.order[i], m.order[j]);
          if (st) m.entry[i][j] = QPoly::term(1, *st);
        }
      return m;
    }
  }
  if (to == BasisId::L) {
    if (from == BasisId::Psi) {
      TransitionMatrix m = make_matrix(n, from, to);
      for (size_t j = 0; j < m.order.size(); ++j)
        for (const auto& [I, coeff] : psi_in_l(m.order[j]))
          m.entry[I.canonical_index()][j] = coeff;
      return m;
    }
    if (from == BasisId::S) {
      TransitionMatrix c_mat = transition_matrix(n, BasisId::S, BasisId::Psi);
      TransitionMatrix m = make_matrix(n, from, to);
      const size_t dim = m.order.size();
      // Sparse product over pairs (row, fatter K): S^J = sum_K C_K^J Psi_K.
      for (size_t i = 0; i < dim; ++i) {
        const Composition& I = m.order[i];
        for (const Composition& K : coarsenings(I)) {
          int delta = I.length() - K.length();
          QPoly pk = QPoly::term(sign_pow(delta),
                                 -delta - *st_prime_count(I, K));
          size_t k = K.canonical_index();
          for (size_t j = 0; j < dim; ++j) {
            if (c_mat.entry[k][j].is_zero()) continue;
            m.entry[i][j] += pk * c_mat.entry[k][j];
          }
        }
      }
      validate_nonnegative(m);
      return m;
    }
    if (from == BasisId::R) {
      TransitionMatrix m =
          ribbonize(transition_matrix(n, BasisId::S, BasisId::L), from);
      validate_nonnegative(m);
      return m;
    }
  }
  throw std::invalid_argument("unsupported basis pair " + basis_name(from) +
                              "->" + basis_name(to));
}

}  // namespace qcomb
