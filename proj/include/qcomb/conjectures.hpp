#pragma once

#include <string>
#include <vector>

#include "qcomb/bases.hpp"

namespace qcomb {

struct ConjectureCell {
  int n = 0;
  Composition row;
  Composition col;
  QPoly expected;  // matrix entry
  QPoly observed;  // statistic sum
};

struct ConjectureReport {
  std::string name;
  bool holds = true;
  long cells = 0;
  std::vector<ConjectureCell> mismatches;
};

// Entries of the S -> L matrix against the combined pattern weight summed
// over packed words with the given standardized grouping and evaluation.
ConjectureReport conjecture_packed_words(int max_weight);

// Entries of the S -> L matrix against the 31-2 pattern count summed over
// permutations grouped by the group-descent composition, with the recoil
// composition dominated by the column.
ConjectureReport conjecture_permutations_s(int max_weight);

// Entries of the R -> L matrix against the same permutation statistic with
// the recoil composition matching the column exactly.
ConjectureReport conjecture_permutations_r(int max_weight);

}  // namespace qcomb
