#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qcomb/combinatorics.hpp"
#include "qcomb/qpoly.hpp"

namespace qcomb {

// Basis tags for the transition-matrix families.  S: complete, R: ribbon,
// L: the q-fundamental family, Psi: the q-power-sum family.
enum class BasisId { S, R, L, Psi };

std::string basis_name(BasisId b);
std::optional<BasisId> basis_from_string(const std::string& s);

// Change-of-basis matrix at weight n.  entry[i][j] is the coefficient of the
// target-basis element indexed by order[i] in the expansion of the source
// element indexed by order[j]; order is the canonical composition order.
struct TransitionMatrix {
  int n = 0;
  BasisId from = BasisId::S, to = BasisId::Psi;
  std::vector<Composition> order;
  std::vector<std::vector<QPoly>> entry;
};

// Supported pairs: S/R/L -> Psi, S/R/Psi -> L.  Throws std::invalid_argument
// on anything else, std::logic_error when a computed S->L or R->L entry falls
// outside N[q].
TransitionMatrix transition_matrix(int n, BasisId from, BasisId to);

// Coefficient of Psi_I in S^J, by the two-case peel recursion: merge the first
// two parts of I while its first part is short of J's, otherwise split off a
// q-binomial and delete J's first part from the diagram of I.
QPoly s_to_psi_entry(const Composition& I, const Composition& J);

// Independent counts standing in for s_to_psi_entry.
// Packed words w with word_comp(w) = I and descent_comp(w) fatter-or-equal J,
// weighted q^{special_inversions(w)}.
QPoly s_to_psi_by_words(const Composition& I, const Composition& J);
// Nonnegative integer matrices with l(I) rows, no null row, column sums J,
// whose column-reading word has word_comp = I, weighted the same way.
QPoly s_to_psi_by_matrices(const Composition& I, const Composition& J);
// Ribbon analogue: descent_comp(w) equals J exactly.
QPoly r_to_psi_by_words(const Composition& I, const Composition& J);

// Coefficient map of Psi_J expanded in the L family:
// (-1/q)^{l(I)-l(J)} q^{-st'(I,J)} over I finer-or-equal J.
std::map<Composition, QPoly> psi_in_l(const Composition& J);

// Coefficient of L_I in S^J via the permutation model: permutations with
// lc_comp = I whose recoil composition is fatter-or-equal J, weighted
// q^{inversions}, all divided by q^{major_index(reversed I)}.
QPoly s_to_l_by_permutations(const Composition& I, const Composition& J);
// Ribbon analogue: recoil composition equals J exactly.
QPoly r_to_l_by_permutations(const Composition& I, const Composition& J);

// Expansion of the product L_p * L_I in the L family (closed form): terms
// L_J over J finer-or-equal (p + i_1, i_2, ...) with first part >= p.
std::map<Composition, QPoly> l_product_expand(int p, const Composition& I);

// Expansion of S^J in the L family by right-nested l_product_expand folds;
// independent of the matrix route.
std::map<Composition, QPoly> s_in_l_by_products(const Composition& J);

// Column (1^n) data: c_vector lists the Psi-coefficients of S^{1^n} (the
// descending q-factorials), e_vector the L-coefficients, canonical order.
std::vector<QPoly> c_vector(int n);
std::vector<QPoly> e_vector(int n);

// Closed form for the subset sum Sigma_s(X, Z): over Y with X within Y within
// Z and |Y| = s, weight q^{sum of nu(y)} where nu(y) = #{z in Z : z >= y} +
// #{x in X : x <= y}.  Requires X within Z, |X| <= s <= |Z|.
QPoly subset_weight_sum(const std::vector<int>& X, const std::vector<int>& Z, int s);

// Throws std::logic_error if any entry has a negative exponent or coefficient.
void validate_nonnegative(const TransitionMatrix& m);

}  // namespace qcomb
