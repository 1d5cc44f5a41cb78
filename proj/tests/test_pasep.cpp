#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <vector>

#include "qcomb/pasep.hpp"
#include "qcomb/tableaux.hpp"

using namespace qcomb;

namespace {

Composition C(std::vector<int> parts) { return Composition(std::move(parts)); }

}  // namespace

TEST_CASE("state mapping") {
  PasepModel m(3);
  CHECK(m.state_count() == 8);
  // "**." : sites 3 and 2 occupied, site 1 (right end) empty.
  const int s = 0b110;
  CHECK(m.state_string(s) == "**.");
  CHECK(m.occupied(s, 3));
  CHECK(m.occupied(s, 2));
  CHECK(!m.occupied(s, 1));
  CHECK(m.state_composition(s) == C({2, 1, 1}));
  CHECK(m.composition_state(C({2, 1, 1})) == s);
  CHECK(m.state_composition(0) == C({4}));
  CHECK(m.state_composition(0b111) == C({1, 1, 1, 1}));
  auto order = m.states_in_display_order();
  CHECK(order.front() == 0b111);
  CHECK(order.back() == 0);
  for (int st = 0; st < m.state_count(); ++st)
    CHECK(m.composition_state(m.state_composition(st)) == st);
}

TEST_CASE("partition function") {
  PasepModel m2(2);
  QPoly z2 = pasep_partition_function(m2);
  CHECK(z2 == QPoly(5) + QPoly::q());
  // Weights in display order for n=2: **, *., .*, ..
  CHECK(pasep_weight(m2, 0b11) == QPoly(1));
  CHECK(pasep_weight(m2, 0b10) == QPoly(2) + QPoly::q());
  CHECK(pasep_weight(m2, 0b01) == QPoly(1));
  CHECK(pasep_weight(m2, 0b00) == QPoly(1));
}

TEST_CASE("formula distribution at q = 1") {
  PasepModel m(2);
  auto dist = pasep_formula_distribution(m, BigRat(1));
  REQUIRE(dist.size() == 4);
  CHECK(dist[0] == BigRat(1, 6));
  CHECK(dist[1] == BigRat(1, 2));
  CHECK(dist[2] == BigRat(1, 6));
  CHECK(dist[3] == BigRat(1, 6));
}

TEST_CASE("solver matches formula") {
  std::vector<BigRat> qs = {BigRat(0), BigRat(1), BigRat(1, 2), BigRat(2)};
  for (int n = 2; n <= 3; ++n) {
    PasepModel m(n);
    for (const auto& q : qs) {
      auto a = pasep_formula_distribution(m, q);
      auto b = pasep_solver_distribution(m, q);
      REQUIRE(a.size() == b.size());
      for (size_t i = 0; i < a.size(); ++i) CHECK(a[i] == b[i]);
    }
  }
}

TEST_CASE("tableau weights satisfy the balance equations symbolically") {
  // Flow balance with symbolic rates: hop right 1, hop left q, boundary
  // rates 1. Verified as polynomial identities in q.
  for (int n = 2; n <= 3; ++n) {
    PasepModel m(n);
    const QPoly q = QPoly::q();
    std::vector<QPoly> w(m.state_count());
    for (int s = 0; s < m.state_count(); ++s) w[s] = pasep_weight(m, s);
    std::vector<QPoly> net(m.state_count());
    for (int s = 0; s < m.state_count(); ++s) {
      // Outflow.
      if (!m.occupied(s, n)) net[s] -= w[s];                   // entry
      if (m.occupied(s, 1)) net[s] -= w[s];                    // exit
      for (int site = n; site >= 2; --site) {
        const bool hi = m.occupied(s, site), lo = m.occupied(s, site - 1);
        const int swapped = s ^ (1 << (site - 1)) ^ (1 << (site - 2));
        if (hi && !lo) {
          net[s] -= w[s];
          net[swapped] += w[s];
        }
        if (lo && !hi) {
          net[s] -= q * w[s];
          net[swapped] += q * w[s];
        }
      }
      if (!m.occupied(s, n)) net[s | (1 << (n - 1))] += w[s];
      if (m.occupied(s, 1)) net[s & ~1] += w[s];
    }
    for (int s = 0; s < m.state_count(); ++s) CHECK(net[s].is_zero());
  }
}

TEST_CASE("monte carlo sanity") {
  PasepModel m(2);
  auto sim = pasep_simulate(m, 1.0, 200000, 7);
  auto exact = pasep_formula_distribution(m, BigRat(1));
  std::vector<double> ref;
  for (const auto& r : exact)
    ref.push_back(static_cast<double>(r.convert_to<double>()));
  CHECK(total_variation(sim.distribution, ref) < 0.05);
}

TEST_CASE("census frozen values") {
  auto t = census_pattern_2_31(2);
  auto tp = census_crossings(2);
  REQUIRE(t.size() == 4);
  REQUIRE(tp.size() == 4);
  CHECK(t.at(C({2, 1})) == QPoly(2) + QPoly::q());
  CHECK(tp.at(C({2, 1})) == QPoly(2) + QPoly::q());
  CHECK(t.at(C({3})) == QPoly(1));
  CHECK(t.at(C({1, 1, 1})) == QPoly(1));
  CHECK(t.at(C({1, 2})) == QPoly(1));
}

TEST_CASE("censuses agree with tableau polynomials") {
  for (int n = 1; n <= 5; ++n) {
    auto t = census_pattern_2_31(n);
    auto tp = census_crossings(n);
    auto comps = compositions_of(n + 1);
    REQUIRE(t.size() == comps.size());
    REQUIRE(tp.size() == comps.size());
    for (const auto& I : comps) {
      CAPTURE(I.label());
      QPoly want = tableau_poly_a(I);
      CHECK(t.at(I) == want);
      CHECK(tp.at(I) == want);
    }
  }
}
