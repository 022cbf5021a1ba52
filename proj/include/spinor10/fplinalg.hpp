#pragma once

#include <optional>
#include <vector>

#include "spinor10/dense.hpp"

namespace spinor10::fp {

// Exact linear algebra over a prime field F_p. Matrices carry residues in
// [0, p); reduced row echelon form is the canonical representative of a row
// space, so subspace equality is entrywise matrix equality.

Int norm(Int x, Int p);
Int inv(Int a, Int p);
Int pow_mod(Int base, Int exp, Int p);

// Square root mod an odd prime (Tonelli-Shanks); nullopt if a is a
// non-residue.
std::optional<Int> sqrt_mod(Int a, Int p);

bool is_prime(Int p);

struct Echelon {
  IntMatrix rows;          // RREF with zero rows dropped
  std::vector<int> pivots; // pivot column per row
};

Echelon rref(IntMatrix m, Int p);

inline int rank(const IntMatrix& m, Int p) { return static_cast<int>(rref(m, p).rows.rows()); }

// Basis of the right kernel {x : m x = 0}, as RREF rows.
IntMatrix kernel(const IntMatrix& m, Int p);

IntMatrix stack_rows(const IntMatrix& a, const IntMatrix& b);

}  // namespace spinor10::fp
