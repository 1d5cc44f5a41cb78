#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <vector>

#include "qcomb/tableaux.hpp"

using namespace qcomb;

namespace {

Composition C(std::vector<int> parts) { return Composition(std::move(parts)); }

QPoly P(std::vector<long> ascending_coeffs) {
  QPoly p;
  for (size_t e = 0; e < ascending_coeffs.size(); ++e)
    p += QPoly::term(ascending_coeffs[e], static_cast<int>(e));
  return p;
}

}  // namespace

TEST_CASE("type A shapes") {
  ShapeA s = ShapeA::from_composition(C({3, 4, 1}));
  CHECK(s.rows == std::vector<int>{5, 5, 2});
  CHECK(s.boxes() == 12);
  CHECK(s.columns() == 5);
  CHECK(s.to_composition() == C({3, 4, 1}));
  for (int n = 1; n <= 7; ++n)
    for (const auto& I : compositions_of(n))
      CHECK(ShapeA::from_composition(I).to_composition() == I);
  // A composition of n with k parts spans n-k columns.
  CHECK(ShapeA::from_composition(C({1, 1, 1})).rows ==
        std::vector<int>{0, 0, 0});
}

TEST_CASE("type A fillings frozen values") {
  // A single column of three boxes.
  ShapeA col;
  col.rows = {1, 1, 1};
  CHECK(fillings_poly_a(col) == P({3, 3, 1}));
  // One box.
  ShapeA one;
  one.rows = {1};
  CHECK(fillings_poly_a(one) == QPoly(1));
  // Empty board: a single empty filling of rank 0.
  ShapeA empty;
  empty.rows = {0, 0};
  CHECK(fillings_poly_a(empty) == QPoly(1));
}

TEST_CASE("type A polynomial frozen values") {
  CHECK(tableau_poly_a(C({2, 1})) == P({2, 1}));
  CHECK(tableau_poly_a(C({3, 4, 1})) == P({15, 47, 75, 76, 52, 24, 7, 1}));
  CHECK(tableau_count_a(C({3, 4, 1})) == 297);
  CHECK(tableau_poly_a(C({5})) == QPoly(1));
  CHECK(tableau_poly_a(C({1, 1, 1, 1})) == QPoly(1));
  for (int n = 1; n <= 7; ++n)
    for (const auto& I : compositions_of(n)) {
      QPoly p = tableau_poly_a(I);
      CHECK(!p.has_negative_coeff());
      CHECK(!p.has_negative_exponent());
      CHECK(p.eval(BigRat(1)) == BigRat(tableau_count_a(I)));
    }
}

TEST_CASE("type A brute force matches closed form") {
  for (int n = 1; n <= 6; ++n)
    for (const auto& I : compositions_of(n)) {
      CAPTURE(I.label());
      CHECK(fillings_poly_a(ShapeA::from_composition(I)) == tableau_poly_a(I));
    }
}

TEST_CASE("type A recurrences") {
  RecurrenceReport rep = check_recurrences_a(6);
  CHECK(rep.ok);
  CHECK(rep.cases > 0);
  INFO(rep.first_failure);
  REQUIRE(rep.first_failure.empty());
}

TEST_CASE("type A counts by weight sum to factorials") {
  BigInt fact = 1;
  for (int n = 1; n <= 8; ++n) {
    fact *= n;
    BigInt total = 0;
    for (const auto& I : compositions_of(n)) total += tableau_count_a(I);
    CHECK(total == fact);
  }
}

TEST_CASE("type B shapes") {
  auto s = ShapeB::from_weak_composition({1, 2, 0});
  REQUIRE(s.has_value());
  CHECK(s->rows == std::vector<int>{1, 2, 2, 1});
  CHECK(s->staircase_rows() == 4);
  CHECK(s->boxes() == 6);
  CHECK(s->valid());
  CHECK(s->to_weak_composition() == std::vector<int>{1, 2, 0});

  // Codes with no realizing board.
  CHECK(!ShapeB::from_weak_composition({0, 0, 1}).has_value());
  CHECK(!ShapeB::from_weak_composition({2, 0, 1}).has_value());

  // Round trip across every staircase board of up to 5 rows.
  for (int m = 1; m <= 5; ++m)
    for (const auto& shape : all_shapes_b(m, m * m)) {
      CHECK(shape.valid());
      auto code = shape.to_weak_composition();
      auto back = ShapeB::from_weak_composition(code);
      REQUIRE(back.has_value());
      CHECK(back->rows == shape.rows);
    }
}

TEST_CASE("type B fillings frozen values") {
  auto s = ShapeB::from_weak_composition({1, 2, 0});
  REQUIRE(s.has_value());
  CHECK(fillings_poly_b(*s) == P({6, 10, 8, 4, 1}));
  auto s20 = ShapeB::from_weak_composition({2, 0});
  REQUIRE(s20.has_value());
  CHECK(fillings_poly_b(*s20) == P({3, 3, 1}));
  auto s30 = ShapeB::from_weak_composition({3, 0});
  REQUIRE(s30.has_value());
  CHECK(fillings_poly_b(*s30) == P({4, 6, 4, 1}));
}

TEST_CASE("type B polynomial frozen values") {
  CHECK(tableau_poly_b({1, 2, 0}) == P({6, 10, 8, 4, 1}));
  CHECK(tableau_poly_b({2, 0}) == P({3, 3, 1}));
  CHECK(tableau_poly_b({3, 0}) == P({4, 6, 4, 1}));
  CHECK(tableau_poly_b({0}) == QPoly(1));
  CHECK(tableau_poly_b({0, 2, 0}) == tableau_poly_b({2, 0}));
}

TEST_CASE("type B brute force matches closed form") {
  for (int m = 1; m <= 5; ++m)
    for (const auto& shape : all_shapes_b(m, 7)) {
      CAPTURE(m);
      CHECK(fillings_poly_b(shape) == tableau_poly_b(shape.to_weak_composition()));
    }
}

TEST_CASE("padding the staircase preserves the filling polynomial") {
  // Embedding a board into a taller staircase adds an empty top row, bumps
  // the last code entry, and leaves the filling polynomial unchanged.
  for (int m = 1; m <= 5; ++m)
    for (const auto& shape : all_shapes_b(m, 6)) {
      ShapeB padded;
      padded.rows = shape.rows;
      padded.rows.insert(padded.rows.begin(), 0);
      REQUIRE(padded.valid());
      CHECK(fillings_poly_b(padded) == fillings_poly_b(shape));
      auto code = shape.to_weak_composition();
      code.back() += 1;
      CHECK(padded.to_weak_composition() == code);
    }
}

TEST_CASE("type B recurrences") {
  RecurrenceReport rep = check_recurrences_b(6, 4);
  CHECK(rep.ok);
  CHECK(rep.cases > 0);
  INFO(rep.first_failure);
  REQUIRE(rep.first_failure.empty());
}

TEST_CASE("type B closed form is unconstrained off the board domain") {
  // (0,0,0) decodes to no board and the zero rule fails there, so the
  // recurrence sweep must stay on realizable codes.
  CHECK(!ShapeB::from_weak_composition({0, 0, 0}).has_value());
  CHECK(tableau_poly_b({0, 0}) == QPoly::term(1, 0));
  QPoly off = QPoly::term(1, -4) - QPoly::term(1, -3) + QPoly::term(1, -1);
  CHECK(tableau_poly_b({0, 0, 0}) == off);
}
