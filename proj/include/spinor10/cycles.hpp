#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "spinor10/bstower.hpp"

namespace spinor10 {

// Lifted 1-cycle classes on the ten-step tower: integer vectors a with
// a_i = (class . xi_i). Degree is the pairing with the lifted ample divisor,
// i.e. the coordinate sum.

using CycleClass = IntVector;  // length 10

Int degree(const CycleClass& a);

// The positivity cone: a_i >= 0 for all i and a_1, a_2, a_3 > 0.
bool in_a1_plus(const CycleClass& a);

// Raised when the level-by-level fibration hypotheses fail:
// a . xi_i >= 0 and a . (T_i - xi_i) > 0.
struct FibrationHypothesisError : std::domain_error {
  FibrationHypothesisError(int level_, const std::string& what_) : std::domain_error(what_), level(level_) {}
  int level;
};

// Dimension of the morphism space of class a, folded level by level through
// the tower: the sum of a . T_i with the hypotheses checked at each level.
// Equals 8 deg(a) - (0,1,2,2,3,3,4,4,5,6) . a.
Int mor_dimension(const CycleClass& a, const IntMatrix& table);

struct DimensionReport {
  Int degree = 0;
  CycleClass cls;
  Int dim = 0;
  IntVector penalty;                  // per-level penalty weight times a_i
  bool a1_plus = false;
  std::vector<bool> level_hypothesis;  // a . (T_i - xi_i) > 0 per level
};

DimensionReport mor_dimension_report(const CycleClass& a, const IntMatrix& table);

// All classes in the positivity cone of the given degree, in ascending
// lexicographic order. Empty for d < 3.
std::vector<CycleClass> enumerate_classes(Int d);

struct ArgmaxResult {
  CycleClass cls;
  Int dim = 0;
  bool unique = false;
};

// Exhaustive argmax of mor_dimension over the degree-d cone. Requires d >= 3.
ArgmaxResult max_dimension_class(Int d, const IntMatrix& table);

// Bookkeeping for the space of morphisms into the base: the maximal tower
// dimension 8d-3, plus the 10-dimensional family of flags through the fixed
// maximal isotropic, minus the 7-dimensional fiber of adapted flags.
// Derivable only for d >= 4; for d = 2, 3 the known dimensions 19 and 25 are
// carried as annotations, not derived.
struct TotalSpaceDimension {
  Int degree = 0;
  bool derived = false;
  Int max_morphism_dim = 0;  // 8d - 3
  Int flag_variety_dim = 10;
  Int lift_fiber_dim = 7;
  Int total = 0;  // 8d when derived
  std::optional<Int> annotated_dimension;  // 19 (d=2), 25 (d=3)
};

TotalSpaceDimension total_space_dimension(Int d);

// Upper bound for the locus of morphisms whose image projects into a plane:
// max(6d+7, 5d+9) with the constituent families and fiber section counts.
// Requires d >= 2.
struct PlanarBound {
  Int degree = 0;
  Int planar_family = 0;        // 3d + 6
  Int line_family = 0;          // 2d + 6
  Int plane_fiber_sections = 0; // 3d + 1
  Int line_fiber_sections = 0;  // 3d + 3
  Int planar_branch = 0;        // 6d + 7
  Int line_branch = 0;          // 5d + 9
  Int bound = 0;                // max of the two branches
};

PlanarBound planar_locus_bound(Int d);

}  // namespace spinor10
