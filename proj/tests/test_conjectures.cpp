#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "qcomb/conjectures.hpp"

using namespace qcomb;

TEST_CASE("packed word statistic matches the S to L matrix") {
  auto rep = conjecture_packed_words(5);
  std::string first =
      rep.mismatches.empty() ? std::string() : rep.mismatches.front().row.label();
  INFO(first);
  CHECK(rep.holds);
  CHECK(rep.cells == 1 + 4 + 16 + 64 + 256);
  CHECK(rep.mismatches.empty());
}

TEST_CASE("permutation statistic matches the S to L matrix") {
  auto rep = conjecture_permutations_s(5);
  CHECK(rep.holds);
  CHECK(rep.mismatches.empty());
}

TEST_CASE("permutation statistic matches the R to L matrix") {
  auto rep = conjecture_permutations_r(5);
  CHECK(rep.holds);
  CHECK(rep.mismatches.empty());
}

TEST_CASE("frozen conjecture cells") {
  // Packed words with evaluation (2,1,1) whose standardization groups as
  // (3,1) carry combined pattern weight 2+2q+q^2.
  QPoly acc;
  for (const Word& w : packed_words(4)) {
    if (evaluation_comp(w) != Composition({2, 1, 1})) continue;
    if (gc_comp(standardize(w)) != Composition({3, 1})) continue;
    acc += QPoly::term(1, total_pattern_weight(w));
  }
  CHECK(acc == QPoly(2) + QPoly::term(2, 1) + QPoly::term(1, 2));

  // Permutations with group composition (3,1) and recoil (3,1) carry
  // 31-2 weight 1+q+q^2.
  QPoly acc2;
  for (const Word& p : permutations_of(4)) {
    if (gc_comp(p) != Composition({3, 1})) continue;
    if (recoil_comp(p) != Composition({3, 1})) continue;
    acc2 += QPoly::term(1, count_31_2(p));
  }
  CHECK(acc2 == QPoly(1) + QPoly::q() + QPoly::term(1, 2));
}
