#include "spinor10/cycles.hpp"

#include <algorithm>
#include <functional>

namespace spinor10 {

namespace {

constexpr int kLevels = 10;

void require_levels(const CycleClass& a) {
  if (a.size() != kLevels) throw std::invalid_argument("cycle class must have 10 coordinates");
}

}  // namespace

Int degree(const CycleClass& a) {
  require_levels(a);
  return a.sum();
}

bool in_a1_plus(const CycleClass& a) {
  require_levels(a);
  return (a.array() >= 0).all() && a(0) > 0 && a(1) > 0 && a(2) > 0;
}

Int mor_dimension(const CycleClass& a, const IntMatrix& table) {
  require_levels(a);
  Int dim = 0;
  for (int i = 1; i <= kLevels; ++i) {
    if (a(i - 1) < 0)
      throw FibrationHypothesisError(i, "a . xi_" + std::to_string(i) + " is negative");
    const DivisorCombination ti = relative_tangent(table, i);
    const Int relative = a.dot(ti) - a(i - 1);
    if (relative <= 0)
      throw FibrationHypothesisError(i, "a . (T_" + std::to_string(i) + " - xi_" + std::to_string(i) +
                                            ") is not positive");
    dim += a.dot(ti);
  }
  return dim;
}

DimensionReport mor_dimension_report(const CycleClass& a, const IntMatrix& table) {
  require_levels(a);
  DimensionReport r;
  r.degree = degree(a);
  r.cls = a;
  r.a1_plus = in_a1_plus(a);
  r.penalty = IntVector::Zero(kLevels);
  const DivisorCombination sum = tangent_sum(table);
  for (int i = 0; i < kLevels; ++i) r.penalty(i) = (8 - sum(i)) * a(i);
  r.level_hypothesis.resize(kLevels);
  Int dim = 0;
  for (int i = 1; i <= kLevels; ++i) {
    const DivisorCombination ti = relative_tangent(table, i);
    r.level_hypothesis[static_cast<std::size_t>(i - 1)] = a(i - 1) >= 0 && a.dot(ti) - a(i - 1) > 0;
    dim += a.dot(ti);
  }
  r.dim = dim;
  return r;
}

std::vector<CycleClass> enumerate_classes(Int d) {
  std::vector<CycleClass> out;
  if (d < 3) return out;
  // Strict-floor normalization: subtract (1,1,1,0,...,0) and walk the
  // nonnegative compositions of d-3 in ascending lexicographic order.
  std::vector<Int> c(kLevels, 0);
  std::function<void(int, Int)> rec = [&](int idx, Int remaining) {
    if (idx == kLevels - 1) {
      c[static_cast<std::size_t>(idx)] = remaining;
      CycleClass cls(kLevels);
      for (int i = 0; i < kLevels; ++i) cls(i) = c[static_cast<std::size_t>(i)] + (i < 3 ? 1 : 0);
      out.push_back(std::move(cls));
      return;
    }
    for (Int v = 0; v <= remaining; ++v) {
      c[static_cast<std::size_t>(idx)] = v;
      rec(idx + 1, remaining - v);
    }
  };
  rec(0, d - 3);
  return out;
}

ArgmaxResult max_dimension_class(Int d, const IntMatrix& table) {
  if (d < 3) throw std::invalid_argument("degree must be at least 3");
  ArgmaxResult best;
  bool first = true;
  for (const CycleClass& a : enumerate_classes(d)) {
    const Int dim = mor_dimension(a, table);
    if (first || dim > best.dim) {
      best.cls = a;
      best.dim = dim;
      best.unique = true;
      first = false;
    } else if (dim == best.dim) {
      best.unique = false;
    }
  }
  return best;
}

TotalSpaceDimension total_space_dimension(Int d) {
  TotalSpaceDimension r;
  r.degree = d;
  if (d >= 4) {
    r.derived = true;
    r.max_morphism_dim = 8 * d - 3;
    r.total = r.max_morphism_dim + r.flag_variety_dim - r.lift_fiber_dim;
  } else if (d == 3) {
    r.annotated_dimension = 25;
  } else if (d == 2) {
    r.annotated_dimension = 19;
  }
  return r;
}

PlanarBound planar_locus_bound(Int d) {
  if (d < 2) throw std::invalid_argument("degree must be at least 2");
  PlanarBound b;
  b.degree = d;
  b.planar_family = 3 * d + 6;
  b.line_family = 2 * d + 6;
  b.plane_fiber_sections = 3 * d + 1;
  b.line_fiber_sections = 3 * d + 3;
  b.planar_branch = b.planar_family + b.plane_fiber_sections;
  b.line_branch = b.line_family + b.line_fiber_sections;
  b.bound = std::max(b.planar_branch, b.line_branch);
  return b;
}

}  // namespace spinor10
