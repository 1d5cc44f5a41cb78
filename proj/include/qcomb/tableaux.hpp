#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qcomb/combinatorics.hpp"
#include "qcomb/qpoly.hpp"

namespace qcomb {

// Type A board for a composition I of n with k parts: a left-justified stack
// of rows stored longest first, with part i_t contributing i_t - 1 columns of
// height k - t + 1.  Every column meets row 0, so rows[0] = n - k.
struct ShapeA {
  std::vector<int> rows;  // weakly decreasing, zero rows allowed

  static ShapeA from_composition(const Composition& I);
  Composition to_composition() const;
  int boxes() const;
  int columns() const { return rows.empty() ? 0 : rows[0]; }
};

// Sum of q^{#ones - #columns} over valid 0/1 fillings: every column holds at
// least one 1, and no 0 has simultaneously a 1 above it in its column and a 1
// to its left in its row.
QPoly fillings_poly_a(const ShapeA& shape);

// Closed form matching fillings_poly_a: the alternating q-factorial sum over
// coarsenings of I.
QPoly tableau_poly_a(const Composition& I);

// Plain filling count (q = 1), via the signed integer-factorial sum.
BigInt tableau_count_a(const Composition& I);

// Type B board: an order ideal in the m-row staircase (row r, counted from
// the top, holds at most m - r boxes); a box needs the boxes directly below
// and directly to its left.  rows[r] is the width of row r.
struct ShapeB {
  std::vector<int> rows;

  // Widest-row width k determines the code length k + 1: entry 0 counts rows
  // of width k minus one, entry j counts rows of width k - j.  Decode searches
  // row arrangements and insists the answer is unique; nullopt when no
  // arrangement forms an order ideal.
  static std::optional<ShapeB> from_weak_composition(const std::vector<int>& code);
  std::vector<int> to_weak_composition() const;

  bool valid() const;
  int boxes() const;
  int columns() const;
  int staircase_rows() const { return static_cast<int>(rows.size()); }
};

// All order ideals of the m-row staircase with at most max_boxes boxes.
std::vector<ShapeB> all_shapes_b(int m, int max_boxes);

// Sum of q^{#ones - #columns} over valid fillings: every column holds a 1, no
// 0 has a 1 below it in its column together with a 1 to its left in its row,
// and a 0 in a diagonal box (width equal to the staircase bound) forces its
// whole row to 0.
QPoly fillings_poly_b(const ShapeB& shape);

// Closed form on the weak composition code: alternating type B q-factorial
// sum over separator subsets, descent positions taken with multiplicity.
QPoly tableau_poly_b(const std::vector<int>& code);

struct RecurrenceReport {
  bool ok = true;
  long cases = 0;
  std::string first_failure;
};

// Exercises the type A contraction/expansion identities on tableau_poly_a for
// every composition of weight <= max_weight.
RecurrenceReport check_recurrences_a(int max_weight);

// Exercises the leading-zero rule and the type B three-term identity on
// tableau_poly_b over weak compositions with sum <= max_sum, length <= max_len.
RecurrenceReport check_recurrences_b(int max_sum, int max_len);

}  // namespace qcomb
