#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "spinor10/dense.hpp"

namespace spinor10 {

// Finite root systems over an integer Cartan matrix. Roots are stored as
// integer coefficient vectors in the simple-root basis, and the invariant
// form is the symmetrized Cartan matrix, so everything stays in exact
// integer arithmetic. Node numbering follows Bourbaki: type D_n is the chain
// 1,...,n-2 with the fork (n-2)-(n-1) and (n-2)-n.

class CartanMatrix {
 public:
  // Validates shape (diagonal 2, nonpositive off-diagonal entries with
  // matching zero pattern) and finite type (positive definite
  // symmetrization). Throws std::invalid_argument otherwise.
  explicit CartanMatrix(IntMatrix entries);

  int rank() const { return static_cast<int>(entries_.rows()); }
  Int entry(int i, int j) const { return entries_(i - 1, j - 1); }  // 1-based
  const IntMatrix& entries() const { return entries_; }
  // diag(d) * A with the smallest positive integer symmetrizer d.
  const IntMatrix& symmetrized() const { return symmetrized_; }

 private:
  IntMatrix entries_;
  IntMatrix symmetrized_;
};

CartanMatrix cartan_type_a(int n);
CartanMatrix cartan_type_d(int n);

struct Root {
  IntVector coeffs;  // simple-root basis

  bool is_zero() const { return coeffs.size() == 0 || (coeffs.array() == 0).all(); }
  bool is_positive() const { return !is_zero() && (coeffs.array() >= 0).all(); }
  bool is_negative() const { return !is_zero() && (coeffs.array() <= 0).all(); }
};

inline bool operator==(const Root& a, const Root& b) { return same_vector(a.coeffs, b.coeffs); }
inline bool operator!=(const Root& a, const Root& b) { return !(a == b); }

// Letters are 1-based simple-reflection indices; the empty word is the
// identity.
struct WeylWord {
  std::vector<int> letters;
};

class RootSystem {
 public:
  explicit RootSystem(CartanMatrix cartan);

  const CartanMatrix& cartan() const { return cartan_; }
  int rank() const { return cartan_.rank(); }
  // All positive roots, sorted by height then lexicographically.
  const std::vector<Root>& positive_roots() const { return positive_; }
  Root simple_root(int i) const;  // 1-based
  bool is_root(const Root& r) const;

 private:
  CartanMatrix cartan_;
  std::vector<Root> positive_;
};

inline RootSystem build_root_system(CartanMatrix cartan) { return RootSystem(std::move(cartan)); }

// s_i(beta) = beta - <alpha_i^vee, beta> alpha_i.
Root reflect(const RootSystem& rs, int i, const Root& beta);

// <gamma^vee, beta> = 2 (gamma, beta) / (gamma, gamma) with the symmetrized
// form. Throws std::invalid_argument on gamma = 0.
Int pairing(const RootSystem& rs, const Root& gamma, const Root& beta);

// A word is reduced iff every prefix root s_{i_1}...s_{i_{k-1}}(alpha_{i_k})
// is positive.
bool is_reduced(const RootSystem& rs, const WeylWord& w);

// Number of positive roots with nonzero coefficient on alpha_p; the
// dimension of the parabolic quotient G/P_p for minuscule p.
int coset_dimension(const RootSystem& rs, int p);

}  // namespace spinor10
