#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "qcomb/combinatorics.hpp"
#include "qcomb/qpoly.hpp"

namespace qcomb {

// States of the n-site exclusion chain are occupancy bitmasks. Bit (n-1-s)
// of the mask holds the physical site at position s counted from the left,
// so masks print naturally: the all-occupied state is the largest mask.
struct PasepModel {
  int n = 0;

  explicit PasepModel(int sites);

  int state_count() const { return 1 << n; }

  // Occupancy of physical site `site`, counted 1..n from the RIGHT end
  // (site 1 is where particles exit).
  bool occupied(int state, int site) const;

  std::string state_string(int state) const;  // e.g. "*.*" left to right

  // Each state corresponds to the composition of n+1 whose descent set is
  // the set of occupied site numbers.
  Composition state_composition(int state) const;
  int composition_state(const Composition& I) const;

  // States listed in display order: all-occupied first, empty last.
  std::vector<int> states_in_display_order() const;
};

// Unnormalized stationary weight of a state: the type A tableau polynomial
// of its composition. The partition function is the sum over all states.
QPoly pasep_weight(const PasepModel& model, int state);
QPoly pasep_partition_function(const PasepModel& model);

// Stationary distribution predicted by the tableau formula, evaluated at a
// rational q, in display order.
std::vector<BigRat> pasep_formula_distribution(const PasepModel& model,
                                               const BigRat& q);

// Stationary distribution obtained independently by solving the balance
// equations of the chain (hop right at rate 1, hop left at rate q, enter at
// the left end at rate 1, exit at the right end at rate 1).
std::vector<BigRat> pasep_solver_distribution(const PasepModel& model,
                                              const BigRat& q);

// Occupation-time estimates from a uniformized random walk on the chain.
struct PasepSimulation {
  std::vector<double> distribution;  // display order
  std::uint64_t steps = 0;
};

PasepSimulation pasep_simulate(const PasepModel& model, double q,
                               std::uint64_t steps, std::uint64_t seed);

double total_variation(const std::vector<double>& a,
                       const std::vector<double>& b);

// Permutation statistics refined by set-valued positions. Both censuses
// group S_{n+1} and must agree with the tableau polynomials of the matching
// compositions.
std::map<Composition, QPoly> census_pattern_2_31(int n);
std::map<Composition, QPoly> census_crossings(int n);

// The composition attached to a permutation in each census.
Composition comp_from_descent_bottoms(int n, const std::vector<int>& perm);
Composition comp_from_weak_excedances(int n, const std::vector<int>& perm);

}  // namespace qcomb
