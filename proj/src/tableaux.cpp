#include "qcomb/tableaux.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>

namespace qcomb {

namespace {

int popcount(unsigned x) { return __builtin_popcount(x); }

// Shared engine for the closed forms: alternating sum over the coarsenings of
// a (possibly weak) composition, indexed by subsets of the l-1 separators.
// Descent positions are the partial-sum list taken positionally, so zero
// parts contribute repeated values.
QPoly alternating_factorial_sum(const std::vector<int>& parts, bool type_b) {
  const int l = static_cast<int>(parts.size());
  if (l == 0) return QPoly(1);
  std::vector<int> psum(l - 1);
  int acc = 0;
  for (int i = 0; i + 1 < l; ++i) {
    acc += parts[i];
    psum[i] = acc;
  }
  QPoly total;
  for (unsigned mask = 0; mask < (1u << (l - 1)); ++mask) {
    // Bit b set keeps the separator after part b.
    std::vector<int> merged{parts[0]};
    for (int b = 0; b + 1 < l; ++b) {
      if (mask & (1u << b))
        merged.push_back(parts[b + 1]);
      else
        merged.back() += parts[b + 1];
    }
    int stp = 0;
    for (int a = 0; a + 1 < l; ++a)
      for (int b = 0; b + 1 < l; ++b)
        if ((mask & (1u << b)) && psum[a] <= psum[b]) ++stp;
    const int delta = (l - 1) - popcount(mask);
    QPoly w = type_b ? q_factorial_b(merged) : q_factorial_a(merged);
    QPoly term = QPoly::term(delta % 2 == 0 ? 1 : -1, -delta - stp) * w;
    total += term;
  }
  return total;
}

}  // namespace

ShapeA ShapeA::from_composition(const Composition& I) {
  const int k = I.length();
  ShapeA s;
  s.rows.resize(k);
  for (int r = 0; r < k; ++r) {
    int len = 0;
    for (int t = 0; t < k - r; ++t) len += I.part(t) - 1;
    s.rows[r] = len;
  }
  return s;
}

Composition ShapeA::to_composition() const {
  const int k = static_cast<int>(rows.size());
  if (k == 0) throw std::invalid_argument("empty board has no composition");
  std::vector<int> height_count(k + 1, 0);
  for (int c = 1; c <= columns(); ++c) {
    int h = 0;
    for (int r = 0; r < k; ++r)
      if (rows[r] >= c) ++h;
    ++height_count[h];
  }
  std::vector<int> parts(k);
  for (int t = 0; t < k; ++t) parts[t] = height_count[k - t] + 1;
  return Composition(std::move(parts));
}

int ShapeA::boxes() const {
  int b = 0;
  for (int r : rows) b += r;
  return b;
}

QPoly fillings_poly_a(const ShapeA& shape) {
  const int k = static_cast<int>(shape.rows.size());
  const int ncols = shape.columns();
  // dp over "row already holds a 1 to the left" flags.
  std::map<unsigned, QPoly> dp{{0u, QPoly(1)}};
  for (int c = 1; c <= ncols; ++c) {
    int height = 0;
    while (height < k && shape.rows[height] >= c) ++height;
    std::map<unsigned, QPoly> next;
    for (const auto& [flags, poly] : dp) {
      for (unsigned mask = 1; mask < (1u << height); ++mask) {
        bool ok = true;
        for (int r = 0; r < height && ok; ++r) {
          if (mask & (1u << r)) continue;
          bool one_above = (mask & ((1u << r) - 1)) != 0;
          if (one_above && (flags & (1u << r))) ok = false;
        }
        if (!ok) continue;
        next[flags | mask] += poly.shifted(popcount(mask));
      }
    }
    dp = std::move(next);
  }
  QPoly total;
  for (const auto& [flags, poly] : dp) total += poly;
  return total.shifted(-ncols);
}

QPoly tableau_poly_a(const Composition& I) {
  return alternating_factorial_sum(I.parts(), false);
}

BigInt tableau_count_a(const Composition& I) {
  const auto& parts = I.parts();
  const int l = static_cast<int>(parts.size());
  if (l == 0) return 1;
  BigInt total = 0;
  for (unsigned mask = 0; mask < (1u << (l - 1)); ++mask) {
    std::vector<int> merged{parts[0]};
    for (int b = 0; b + 1 < l; ++b) {
      if (mask & (1u << b))
        merged.push_back(parts[b + 1]);
      else
        merged.back() += parts[b + 1];
    }
    const int delta = (l - 1) - popcount(mask);
    BigInt term = int_factorial_a(merged);
    total += delta % 2 == 0 ? term : -term;
  }
  return total;
}

bool ShapeB::valid() const {
  const int m = staircase_rows();
  for (int r = 0; r < m; ++r)
    if (rows[r] < 0 || rows[r] > m - r) return false;
  // Southwest closure: a box needs the box directly below whenever the
  // staircase still reaches that column.
  for (int r = 0; r + 1 < m; ++r)
    if (rows[r + 1] < std::min(rows[r], m - r - 1)) return false;
  return true;
}

int ShapeB::boxes() const {
  int b = 0;
  for (int r : rows) b += r;
  return b;
}

int ShapeB::columns() const {
  return rows.empty() ? 0 : *std::max_element(rows.begin(), rows.end());
}

std::optional<ShapeB> ShapeB::from_weak_composition(const std::vector<int>& code) {
  if (code.empty()) throw std::invalid_argument("empty type B code");
  for (int c : code)
    if (c < 0) throw std::invalid_argument("negative part in type B code");
  const int k = static_cast<int>(code.size()) - 1;
  // counts[w] = number of rows of width w.
  std::vector<int> counts(k + 1, 0);
  counts[k] = code[0] + 1;
  for (int idx = 1; idx <= k; ++idx) counts[k - idx] = code[idx];
  int m = 0;
  for (int c : counts) m += c;
  std::vector<int> rows(m, -1);
  std::vector<std::vector<int>> found;
  std::function<void(int)> rec = [&](int r) {
    if (!found.empty() && found.size() > 1) return;
    if (r == m) {
      found.push_back(rows);
      return;
    }
    for (int w = 0; w <= k; ++w) {
      if (counts[w] == 0) continue;
      if (w > m - r) continue;
      if (r > 0 && w < std::min(rows[r - 1], m - r)) continue;
      --counts[w];
      rows[r] = w;
      rec(r + 1);
      ++counts[w];
    }
  };
  rec(0);
  if (found.empty()) return std::nullopt;
  if (found.size() > 1)
    throw std::logic_error("ambiguous type B decode for the given code");
  ShapeB s;
  s.rows = found[0];
  return s;
}

std::vector<int> ShapeB::to_weak_composition() const {
  const int m = staircase_rows();
  if (m == 0) throw std::invalid_argument("empty staircase has no code");
  const int k = columns();
  std::vector<int> counts(k + 1, 0);
  for (int r = 0; r < m; ++r) ++counts[rows[r]];
  std::vector<int> code(k + 1);
  code[0] = counts[k] - 1;
  for (int idx = 1; idx <= k; ++idx) code[idx] = counts[k - idx];
  return code;
}

std::vector<ShapeB> all_shapes_b(int m, int max_boxes) {
  std::vector<ShapeB> out;
  std::vector<int> rows(m, 0);
  std::function<void(int, int)> rec = [&](int r, int used) {
    if (r == m) {
      ShapeB s;
      s.rows = rows;
      out.push_back(s);
      return;
    }
    int lo = r > 0 ? std::min(rows[r - 1], m - r) : 0;
    for (int w = lo; w <= m - r && used + w <= max_boxes; ++w) {
      rows[r] = w;
      rec(r + 1, used + w);
    }
    rows[r] = 0;
  };
  if (m >= 0) rec(0, 0);
  return out;
}

QPoly fillings_poly_b(const ShapeB& shape) {
  const int m = shape.staircase_rows();
  const int ncols = shape.columns();
  std::map<unsigned, QPoly> dp{{0u, QPoly(1)}};
  for (int c = 1; c <= ncols; ++c) {
    // Rows reaching column c form a contiguous block [lo, hi].
    int lo = -1, hi = -1;
    for (int r = 0; r < m; ++r)
      if (shape.rows[r] >= c) {
        if (lo < 0) lo = r;
        hi = r;
      }
    const int height = hi - lo + 1;
    // Diagonal cell in this column, if the row of width exactly c is full.
    const int rd = m - c;
    const bool has_diag = rd >= lo && rd <= hi && shape.rows[rd] == c;
    std::map<unsigned, QPoly> next;
    for (const auto& [flags, poly] : dp) {
      for (unsigned mask = 1; mask < (1u << height); ++mask) {
        bool ok = true;
        for (int t = 0; t < height && ok; ++t) {
          if (mask & (1u << t)) continue;
          bool one_below = (mask >> (t + 1)) != 0;
          if (one_below && (flags & (1u << (lo + t)))) ok = false;
        }
        if (ok && has_diag && !(mask & (1u << (rd - lo))) &&
            (flags & (1u << rd)))
          ok = false;
        if (!ok) continue;
        next[flags | (mask << lo)] += poly.shifted(popcount(mask));
      }
    }
    dp = std::move(next);
  }
  QPoly total;
  for (const auto& [flags, poly] : dp) total += poly;
  return total.shifted(-ncols);
}

QPoly tableau_poly_b(const std::vector<int>& code) {
  for (int c : code)
    if (c < 0) throw std::invalid_argument("negative part in type B code");
  return alternating_factorial_sum(code, true);
}

namespace {

std::string poly_mismatch(const std::string& what, const QPoly& lhs,
                          const QPoly& rhs) {
  std::ostringstream os;
  os << what << ": " << lhs.str() << " vs " << rhs.str();
  return os.str();
}

void record(RecurrenceReport& rep, bool ok, const std::string& msg) {
  ++rep.cases;
  if (!ok && rep.ok) {
    rep.ok = false;
    rep.first_failure = msg;
  }
}

}  // namespace

RecurrenceReport check_recurrences_a(int max_weight) {
  RecurrenceReport rep;
  for (int n = 1; n <= max_weight; ++n) {
    for (const Composition& I : compositions_of(n)) {
      const auto& parts = I.parts();
      const int r = I.length();
      // Prefix-1 invariance.
      {
        std::vector<int> ext{1};
        ext.insert(ext.end(), parts.begin(), parts.end());
        QPoly lhs = tableau_poly_a(Composition(ext));
        QPoly rhs = tableau_poly_a(I);
        record(rep, lhs == rhs, poly_mismatch("prefix-1 at " + I.label(), lhs, rhs));
      }
      // Expansion of the first part: grow i_1 by one.
      {
        std::vector<int> grown(parts);
        grown[0] += 1;
        QPoly lhs = tableau_poly_a(Composition(grown));
        QPoly rhs = q_int(r) * tableau_poly_a(I);
        for (int k = 1; k <= r - 1; ++k) {
          std::vector<int> merged;
          for (int t = 0; t < r; ++t) {
            if (t == k) {
              merged.back() += parts[t];
            } else {
              merged.push_back(parts[t]);
            }
          }
          rhs += QPoly::term(1, k - 1) * tableau_poly_a(Composition(merged));
        }
        record(rep, lhs == rhs, poly_mismatch("expansion at " + I.label(), lhs, rhs));
      }
      // Three-term contraction, needs at least two parts and i_1 >= 2.
      if (r >= 2 && parts[0] >= 2) {
        std::vector<int> a(parts), b(parts);
        a[0] -= 1;
        a[1] += 1;
        b[0] -= 1;
        std::vector<int> c(parts.begin() + 2, parts.end());
        c.insert(c.begin(), parts[0] + parts[1] - 1);
        c.insert(c.begin(), 1);
        QPoly lhs = tableau_poly_a(I);
        QPoly rhs = QPoly::q() * tableau_poly_a(Composition(a)) +
                    tableau_poly_a(Composition(b)) +
                    tableau_poly_a(Composition(c));
        record(rep, lhs == rhs, poly_mismatch("contraction at " + I.label(), lhs, rhs));
      }
    }
  }
  return rep;
}

namespace {

void weak_compositions_rec(int max_sum, int len, std::vector<int>& cur,
                           std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == len) {
    out.push_back(cur);
    return;
  }
  int used = 0;
  for (int x : cur) used += x;
  for (int v = 0; v <= max_sum - used; ++v) {
    cur.push_back(v);
    weak_compositions_rec(max_sum, len, cur, out);
    cur.pop_back();
  }
}

std::string code_label(const std::vector<int>& code) {
  std::ostringstream os;
  for (size_t i = 0; i < code.size(); ++i) {
    if (i) os << ".";
    os << code[i];
  }
  return os.str();
}

}  // namespace

RecurrenceReport check_recurrences_b(int max_sum, int max_len) {
  RecurrenceReport rep;
  for (int len = 1; len <= max_len; ++len) {
    std::vector<std::vector<int>> codes;
    std::vector<int> cur;
    weak_compositions_rec(max_sum, len, cur, codes);
    for (const auto& code : codes) {
      // Both recurrences quantify over codes of actual boards; away from
      // those the alternating sum is unconstrained (repeated descent values
      // break the pairing that proves the zero rule).
      if (!ShapeB::from_weak_composition(code).has_value()) continue;
      // Leading-zero rule, whenever the extended code is a board again.
      {
        std::vector<int> ext{0};
        ext.insert(ext.end(), code.begin(), code.end());
        if (ShapeB::from_weak_composition(ext).has_value()) {
          QPoly lhs = tableau_poly_b(ext);
          QPoly rhs = tableau_poly_b(code);
          record(rep, lhs == rhs,
                 poly_mismatch("leading zero at " + code_label(code), lhs, rhs));
        }
      }
      // Three-term identity on the first part.
      if (len >= 2 && code[0] >= 1) {
        std::vector<int> a(code), b(code), c(code);
        a[0] -= 1;
        b[0] -= 1;
        b[1] += 1;
        c[0] = 0;
        c[1] = code[0] + code[1] - 1;
        QPoly lhs = tableau_poly_b(code);
        QPoly rhs = tableau_poly_b(a) + QPoly::q() * tableau_poly_b(b) +
                    tableau_poly_b(c);
        record(rep, lhs == rhs,
               poly_mismatch("three-term at " + code_label(code), lhs, rhs));
      }
    }
  }
  return rep;
}

}  // namespace qcomb
