#pragma once

#include <vector>

#include "spinor10/rootsys.hpp"

namespace spinor10 {

// Combinatorics of the tower of P^1-fibrations attached to a reduced word:
// the root sequence gamma_k, the coroot pairing table governing the relative
// tangent classes T_i, and the lifted ample divisor. Divisor combinations
// are integer vectors of coefficients on the section divisors xi_1..xi_N,
// and a 1-cycle class pairs with them by dot product.

using GammaSequence = std::vector<Root>;
using DivisorCombination = IntVector;

enum class GammaConvention {
  // gamma_k = s_{i_1}...s_{i_{k-1}}(alpha_{i_k}); the default, matching the
  // column reading of T_i.
  prefix,
  // gamma_k = s_{i_N}...s_{i_{k+1}}(alpha_{i_k}); the mirror-dual sequence,
  // kept for cross-checking. It produces the same pairing table because the
  // two sequences differ by the Weyl element -w^{-1}.
  suffix,
};

// Throws std::invalid_argument if w is not reduced (some gamma_k fails to be
// a positive root).
GammaSequence gamma_sequence(const RootSystem& rs, const WeylWord& w,
                             GammaConvention convention = GammaConvention::prefix);

// entries(k,i) = <gamma_k^vee, gamma_i>. Symmetric with diagonal 2 in
// simply-laced type.
IntMatrix pairing_table(const RootSystem& rs, const GammaSequence& gammas);

// T_i read off column i of the table: sum_{k<=i} entries(k,i) xi_k.
// i is 1-based.
DivisorCombination relative_tangent(const IntMatrix& table, int i);

// sum_i T_i; coefficient of xi_k is the row sum sum_{i>=k} entries(k,i).
DivisorCombination tangent_sum(const IntMatrix& table);

// The pullback of the ample generator: xi_1 + ... + xi_n.
DivisorCombination ample_lift(int n);

// The fixed rank-5 setup used throughout: Bourbaki D5, the reduced word
// (4,3,2,5,1,3,2,4,3,5) for the longest coset of the spinor parabolic, and
// the known 10x10 pairing table it produces.
const RootSystem& spinor_root_system();
const WeylWord& spinor_word();
const IntMatrix& reference_pairing_table();

}  // namespace spinor10
