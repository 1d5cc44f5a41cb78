#include "qcomb/pasep.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include "qcomb/tableaux.hpp"

namespace qcomb {

PasepModel::PasepModel(int sites) : n(sites) {
  if (sites < 1 || sites > 20)
    throw std::invalid_argument("site count out of range");
}

bool PasepModel::occupied(int state, int site) const {
  return (state >> (site - 1)) & 1;
}

std::string PasepModel::state_string(int state) const {
  std::string s;
  for (int site = n; site >= 1; --site)
    s += occupied(state, site) ? '*' : '.';
  return s;
}

Composition PasepModel::state_composition(int state) const {
  std::vector<int> des;
  for (int site = 1; site <= n; ++site)
    if (occupied(state, site)) des.push_back(site);
  return Composition::from_descents(n + 1, des);
}

int PasepModel::composition_state(const Composition& I) const {
  if (I.weight() != n + 1)
    throw std::invalid_argument("composition weight must be n+1");
  int state = 0;
  for (int d : I.descents()) state |= 1 << (d - 1);
  return state;
}

std::vector<int> PasepModel::states_in_display_order() const {
  std::vector<int> out;
  for (int s = state_count() - 1; s >= 0; --s) out.push_back(s);
  return out;
}

QPoly pasep_weight(const PasepModel& model, int state) {
  return tableau_poly_a(model.state_composition(state));
}

QPoly pasep_partition_function(const PasepModel& model) {
  QPoly z;
  for (int s = 0; s < model.state_count(); ++s) z += pasep_weight(model, s);
  return z;
}

namespace {

// All transitions out of `state` with their rates: hop right at 1, hop left
// at q, enter at the left end at 1, exit at the right end at 1.
template <typename Rate>
std::vector<std::pair<int, Rate>> transitions(const PasepModel& m, int state,
                                              const Rate& one, const Rate& q) {
  std::vector<std::pair<int, Rate>> out;
  const int n = m.n;
  if (!m.occupied(state, n)) out.emplace_back(state | (1 << (n - 1)), one);
  if (m.occupied(state, 1)) out.emplace_back(state & ~1, one);
  for (int site = n; site >= 2; --site) {
    const bool hi = m.occupied(state, site);
    const bool lo = m.occupied(state, site - 1);
    const int swap = state ^ (1 << (site - 1)) ^ (1 << (site - 2));
    if (hi && !lo) out.emplace_back(swap, one);
    if (lo && !hi) out.emplace_back(swap, q);
  }
  return out;
}

}  // namespace

std::vector<BigRat> pasep_formula_distribution(const PasepModel& model,
                                               const BigRat& q) {
  BigRat z = pasep_partition_function(model).eval(q);
  if (z == 0) throw std::domain_error("partition function vanishes");
  std::vector<BigRat> out;
  for (int s : model.states_in_display_order())
    out.push_back(pasep_weight(model, s).eval(q) / z);
  return out;
}

std::vector<BigRat> pasep_solver_distribution(const PasepModel& model,
                                              const BigRat& q) {
  const int N = model.state_count();
  // Balance equations transposed, with the first row replaced by the
  // normalization sum(pi) = 1.
  std::vector<std::vector<BigRat>> a(N, std::vector<BigRat>(N + 1, 0));
  for (int u = 0; u < N; ++u) {
    for (const auto& [v, rate] : transitions(model, u, BigRat(1), q)) {
      a[v][u] += rate;
      a[u][u] -= rate;
    }
  }
  for (int col = 0; col < N; ++col) a[0][col] = 1;
  a[0][N] = 1;
  for (int col = 0; col < N; ++col) {
    int pivot = -1;
    for (int row = col; row < N; ++row)
      if (a[row][col] != 0) {
        pivot = row;
        break;
      }
    if (pivot < 0) throw std::logic_error("singular balance system");
    std::swap(a[col], a[pivot]);
    const BigRat inv = a[col][col];
    for (int j = col; j <= N; ++j) a[col][j] /= inv;
    for (int row = 0; row < N; ++row) {
      if (row == col || a[row][col] == 0) continue;
      const BigRat f = a[row][col];
      for (int j = col; j <= N; ++j) a[row][j] -= f * a[col][j];
    }
  }
  std::vector<BigRat> out;
  for (int s : model.states_in_display_order()) out.push_back(a[s][N]);
  return out;
}

PasepSimulation pasep_simulate(const PasepModel& model, double q,
                               std::uint64_t steps, std::uint64_t seed) {
  if (q < 0) throw std::invalid_argument("q must be nonnegative");
  const int N = model.state_count();
  // Uniformization constant dominating every total exit rate.
  const double lambda = (model.n + 1) + q * model.n;
  std::vector<std::vector<std::pair<int, double>>> trans(N);
  for (int u = 0; u < N; ++u) trans[u] = transitions(model, u, 1.0, q);

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unif(0.0, lambda);
  const std::uint64_t burn_in = steps / 10;
  std::vector<std::uint64_t> visits(N, 0);
  int state = 0;
  for (std::uint64_t step = 0; step < steps; ++step) {
    double u = unif(rng);
    for (const auto& [v, rate] : trans[state]) {
      if (u < rate) {
        state = v;
        break;
      }
      u -= rate;
    }
    if (step >= burn_in) ++visits[state];
  }
  PasepSimulation sim;
  sim.steps = steps;
  const double total = static_cast<double>(steps - burn_in);
  for (int s : model.states_in_display_order())
    sim.distribution.push_back(static_cast<double>(visits[s]) / total);
  return sim;
}

double total_variation(const std::vector<double>& a,
                       const std::vector<double>& b) {
  if (a.size() != b.size())
    throw std::invalid_argument("distribution size mismatch");
  double tv = 0;
  for (size_t i = 0; i < a.size(); ++i) tv += std::abs(a[i] - b[i]);
  return tv / 2;
}

Composition comp_from_descent_bottoms(int n, const std::vector<int>& perm) {
  std::set<int> bottoms;
  for (size_t i = 0; i + 1 < perm.size(); ++i)
    if (perm[i] > perm[i + 1]) bottoms.insert(perm[i + 1]);
  std::vector<int> des(bottoms.begin(), bottoms.end());
  return Composition::from_descents(n + 1, des).reversed();
}

Composition comp_from_weak_excedances(int n, const std::vector<int>& perm) {
  std::vector<int> des;
  for (size_t i = 1; i < perm.size(); ++i)
    if (perm[i] >= static_cast<int>(i) + 1) des.push_back(static_cast<int>(i));
  return Composition::from_descents(n + 1, des).reversed();
}

std::map<Composition, QPoly> census_pattern_2_31(int n) {
  std::map<Composition, QPoly> out;
  for (const auto& w : permutations_of(n + 1))
    out[comp_from_descent_bottoms(n, w)] += QPoly::term(1, count_2_31(w));
  return out;
}

std::map<Composition, QPoly> census_crossings(int n) {
  std::map<Composition, QPoly> out;
  for (const auto& w : permutations_of(n + 1))
    out[comp_from_weak_excedances(n, w)] += QPoly::term(1, crossings(w));
  return out;
}

}  // namespace qcomb
