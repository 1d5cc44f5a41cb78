#include "qcomb/conjectures.hpp"

#include <functional>
#include <map>
#include <utility>

namespace qcomb {

namespace {

using CellKey = std::pair<Composition, Composition>;

ConjectureReport run_sweep(
    std::string name, int max_weight, BasisId from,
    const std::function<std::map<CellKey, QPoly>(int)>& observe) {
  ConjectureReport rep;
  rep.name = std::move(name);
  for (int n = 1; n <= max_weight; ++n) {
    TransitionMatrix m = transition_matrix(n, from, BasisId::L);
    std::map<CellKey, QPoly> obs = observe(n);
    const int size = static_cast<int>(m.order.size());
    for (int i = 0; i < size; ++i) {
      for (int j = 0; j < size; ++j) {
        ++rep.cells;
        QPoly seen;
        auto it = obs.find({m.order[i], m.order[j]});
        if (it != obs.end()) seen = it->second;
        if (seen != m.entry[i][j]) {
          rep.holds = false;
          rep.mismatches.push_back(
              {n, m.order[i], m.order[j], m.entry[i][j], seen});
        }
      }
    }
  }
  return rep;
}

}  // namespace

ConjectureReport conjecture_packed_words(int max_weight) {
  return run_sweep(
      "packed-words-vs-s-matrix", max_weight, BasisId::S, [](int n) {
        std::map<CellKey, QPoly> acc;
        for (const Word& w : packed_words(n)) {
          Composition row = gc_comp(standardize(w));
          Composition col = evaluation_comp(w);
          acc[{row, col}] += QPoly::term(1, total_pattern_weight(w));
        }
        return acc;
      });
}

ConjectureReport conjecture_permutations_s(int max_weight) {
  return run_sweep(
      "permutations-vs-s-matrix", max_weight, BasisId::S, [](int n) {
        std::map<CellKey, QPoly> acc;
        for (const Word& sigma : permutations_of(n)) {
          Composition row = gc_comp(sigma);
          Composition rec = recoil_comp(sigma);
          QPoly w = QPoly::term(1, count_31_2(sigma));
          for (const Composition& col : compositions_of(n))
            if (finer_or_equal(col, rec)) acc[{row, col}] += w;
        }
        return acc;
      });
}

ConjectureReport conjecture_permutations_r(int max_weight) {
  return run_sweep(
      "permutations-vs-r-matrix", max_weight, BasisId::R, [](int n) {
        std::map<CellKey, QPoly> acc;
        for (const Word& sigma : permutations_of(n)) {
          acc[{gc_comp(sigma), recoil_comp(sigma)}] +=
              QPoly::term(1, count_31_2(sigma));
        }
        return acc;
      });
}

}  // namespace qcomb
