#pragma once

#include <array>
#include <vector>

#include "spinor10/fplinalg.hpp"
#include "spinor10/rng.hpp"

namespace spinor10 {

// The split 10-dimensional quadratic space over F_p and its isotropic
// subspace lattice. The fixed form pairs coordinate i with coordinate
// 11-i: q(x) = sum_{i<=5} x_i x_{11-i} (1-based), so the Gram matrix is the
// antidiagonal and span(e_1..e_5) is the canonical maximal isotropic.
// Smaller even-dimensional spaces appear as quotients N^perp / N.

struct QuadraticSpace {
  Int p = 0;           // field characteristic, prime
  int dim = 0;
  IntMatrix qform;     // upper triangular; q(x) = x^T qform x
  IntMatrix gram;      // qform + qform^T

  Int quadratic(const IntVector& v) const;
  Int bilinear(const IntVector& u, const IntVector& v) const;
};

// The fixed split space of dimension 10. Throws if p is not prime.
QuadraticSpace split_space(Int p);

// A subspace stored as its reduced-row-echelon basis, which is canonical:
// equal subspaces have identical matrices.
struct Subspace {
  IntMatrix basis;  // rows, RREF over F_p

  int dim() const { return static_cast<int>(basis.rows()); }
  int ambient_dim() const { return static_cast<int>(basis.cols()); }
};

inline bool operator==(const Subspace& a, const Subspace& b) { return same_matrix(a.basis, b.basis); }
inline bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

Subspace span_of(const IntMatrix& rows, Int p);
Subspace zero_subspace(int ambient_dim);
Subspace full_space(int ambient_dim);

Int bilinear(const QuadraticSpace& qs, const IntVector& u, const IntVector& v);

// Totally isotropic: the polarization vanishes on all basis pairs, and for
// p = 2 the quadratic form itself vanishes on basis vectors.
bool is_totally_isotropic(const QuadraticSpace& qs, const Subspace& s);

Subspace intersect(const Subspace& s, const Subspace& t, Int p);
Subspace subspace_sum(const Subspace& s, const Subspace& t, Int p);
Subspace perp(const QuadraticSpace& qs, const Subspace& s);
bool contains(const Subspace& s, const Subspace& t, Int p);  // t subset of s
bool contains_vector(const Subspace& s, const IntVector& v, Int p);

struct MaximalIsotropic {
  Subspace space;
  int family = 0;  // 1 or 2
};

inline bool operator==(const MaximalIsotropic& a, const MaximalIsotropic& b) { return a.space == b.space; }

// span(e_1..e_5), the family-1 reference.
Subspace reference_maximal(const QuadraticSpace& qs);

// 1 if dim(M /\ reference) is odd, else 2. Throws unless M is a maximal
// isotropic (dimension 5, totally isotropic).
int family_of(const QuadraticSpace& qs, const Subspace& m);

// The exactly two maximal isotropics containing a totally isotropic
// 4-space, in canonical order. They carry opposite family tags and meet
// exactly in u.
std::array<MaximalIsotropic, 2> complete_to_maximal(const QuadraticSpace& qs, const Subspace& u);
MaximalIsotropic complete_to_family(const QuadraticSpace& qs, const Subspace& u, int family);

// Uniform over the chosen family: greedy isotropic chain extension, with the
// coordinate swap e_5 <-> e_6 (an orthogonal reflection exchanging the two
// families) as correction.
MaximalIsotropic random_maximal_isotropic(const QuadraticSpace& qs, int family, Rng& rng);

// Uniform over maximal isotropics of the chosen family containing the given
// totally isotropic subspace (dim <= 4): the chain starts from `through` and
// the final hyperbolic-plane completion picks the family.
MaximalIsotropic random_maximal_isotropic_through(const QuadraticSpace& qs, const Subspace& through, int family,
                                                  Rng& rng);

IntVector random_nonzero_vector_in(const Subspace& s, Int p, Rng& rng);

// Orthogonal reflection in a non-isotropic vector u.
Subspace reflect_subspace(const QuadraticSpace& qs, const IntVector& u, const Subspace& s);

// All family-1 maximal isotropics, deduplicated via the canonical form and
// returned in lexicographic basis order. Exhaustive search; only q in {2,3}
// is accepted.
std::vector<MaximalIsotropic> enumerate_spinor_points(Int q);

// dim(V /\ W5) for two family-1 maximal isotropics; always odd. Throws on a
// family mismatch.
int orbit_type(const QuadraticSpace& qs, const MaximalIsotropic& v, const MaximalIsotropic& w5);

// Quotient N^perp / N by a totally isotropic subspace, realized on an
// explicit complement basis with the induced form.
struct IsotropicQuotient {
  QuadraticSpace space;    // induced split form on the complement
  IntMatrix complement;    // rows: ambient vectors representing the basis
  Subspace radical;        // N
};

IsotropicQuotient quotient_by_isotropic(const QuadraticSpace& qs, const Subspace& n);

// N + (rows in quotient coordinates, lifted through the complement basis).
Subspace lift_from_quotient(const IsotropicQuotient& q, const IntMatrix& rows, Int p);

}  // namespace spinor10
