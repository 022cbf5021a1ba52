#include <cmath>
#include <map>
#include <set>

#include "doctest.h"
#include "spinor10/isogeom.hpp"

using namespace spinor10;

namespace {

Subspace coords(const QuadraticSpace& qs, std::initializer_list<int> idx) {
  IntMatrix rows = IntMatrix::Zero(static_cast<Eigen::Index>(idx.size()), qs.dim);
  Eigen::Index r = 0;
  for (int i : idx) rows(r++, i) = 1;
  return span_of(rows, qs.p);
}

}  // namespace

TEST_CASE("bilinear form on the fixed split space") {
  const QuadraticSpace qs = split_space(101);
  IntVector e1 = IntVector::Zero(10), e10 = IntVector::Zero(10), e2 = IntVector::Zero(10),
            e3 = IntVector::Zero(10);
  e1(0) = 1;
  e10(9) = 1;
  e2(1) = 1;
  e3(2) = 1;
  CHECK(bilinear(qs, e1, e10) == 1);
  CHECK(bilinear(qs, e1, e1) == 0);
  CHECK(bilinear(qs, e2, e3) == 0);
  CHECK(qs.quadratic(e1 + e10) == 1);
  CHECK_THROWS_AS(split_space(4), std::invalid_argument);
}

TEST_CASE("total isotropy") {
  const QuadraticSpace qs = split_space(101);
  CHECK(is_totally_isotropic(qs, coords(qs, {0, 1, 2, 3, 4})));
  CHECK_FALSE(is_totally_isotropic(qs, coords(qs, {0, 9})));
  IntMatrix sum(1, 10);
  sum.setZero();
  sum(0, 0) = sum(0, 9) = 1;
  CHECK_FALSE(is_totally_isotropic(qs, span_of(sum, qs.p)));
}

TEST_CASE("subspace lattice operations") {
  const QuadraticSpace qs = split_space(101);
  const Subspace s12 = coords(qs, {0, 1});
  const Subspace s23 = coords(qs, {1, 2});
  CHECK(intersect(s12, s23, qs.p) == coords(qs, {1}));
  CHECK(subspace_sum(s12, s23, qs.p) == coords(qs, {0, 1, 2}));
  const Subspace w = coords(qs, {0, 1, 2, 3, 4});
  CHECK(perp(qs, w) == w);  // maximal isotropic is self-perpendicular

  SUBCASE("Grassmann identity and perp duality on random pairs") {
    Rng rng(17);
    for (int t = 0; t < 1000; ++t) {
      const int ds = 1 + static_cast<int>(rng.below(5));
      const int dt = 1 + static_cast<int>(rng.below(5));
      IntMatrix rows_s(ds, 10), rows_t(dt, 10);
      for (int r = 0; r < ds; ++r) rows_s.row(r) = rng.field_vector(10, qs.p).transpose();
      for (int r = 0; r < dt; ++r) rows_t.row(r) = rng.field_vector(10, qs.p).transpose();
      const Subspace s = span_of(rows_s, qs.p);
      const Subspace t2 = span_of(rows_t, qs.p);
      CHECK(subspace_sum(s, t2, qs.p).dim() + intersect(s, t2, qs.p).dim() == s.dim() + t2.dim());
      CHECK(s.dim() + perp(qs, s).dim() == 10);
      CHECK(perp(qs, perp(qs, s)) == s);
    }
  }
}

TEST_CASE("maximal completion of an isotropic 4-space") {
  const QuadraticSpace qs = split_space(101);
  const Subspace u = coords(qs, {0, 1, 2, 3});
  const auto pair = complete_to_maximal(qs, u);
  const Subspace expected1 = coords(qs, {0, 1, 2, 3, 4});
  const Subspace expected2 = coords(qs, {0, 1, 2, 3, 5});
  const bool found = (pair[0].space == expected1 && pair[1].space == expected2) ||
                     (pair[0].space == expected2 && pair[1].space == expected1);
  CHECK(found);
  CHECK(pair[0].family != pair[1].family);
  CHECK(intersect(pair[0].space, pair[1].space, qs.p) == u);
  CHECK_THROWS_AS(complete_to_maximal(qs, coords(qs, {0, 1, 2})), std::invalid_argument);

  SUBCASE("random seeds at several primes") {
    for (Int p : {3, 7, 101}) {
      const QuadraticSpace qsp = split_space(p);
      Rng rng(91);
      for (int t = 0; t < 40; ++t) {
        const MaximalIsotropic m = random_maximal_isotropic(qsp, 1 + t % 2, rng);
        const Subspace u4 = span_of(m.space.basis.topRows(4), p);
        const auto two = complete_to_maximal(qsp, u4);
        CHECK(two[0].family != two[1].family);
        CHECK(intersect(two[0].space, two[1].space, p) == u4);
        CHECK(is_totally_isotropic(qsp, two[0].space));
        CHECK(is_totally_isotropic(qsp, two[1].space));
        // one of the two completions is the maximal we started from
        CHECK((two[0].space == m.space || two[1].space == m.space));
      }
    }
  }
}

TEST_CASE("family classification") {
  const QuadraticSpace qs = split_space(101);
  CHECK(family_of(qs, reference_maximal(qs)) == 1);
  CHECK(family_of(qs, coords(qs, {0, 1, 2, 3, 5})) == 2);
  CHECK_THROWS_AS(family_of(qs, coords(qs, {0, 1, 2, 3})), std::invalid_argument);

  SUBCASE("constant on orbits of even products of reflections") {
    Rng rng(23);
    for (int t = 0; t < 200; ++t) {
      const MaximalIsotropic m = random_maximal_isotropic(qs, 1 + t % 2, rng);
      Subspace image = m.space;
      for (int pair = 0; pair < 2; ++pair) {
        IntVector u;
        do {
          u = rng.field_vector(10, qs.p);
        } while (qs.quadratic(u) == 0);
        image = reflect_subspace(qs, u, image);
      }
      CHECK(is_totally_isotropic(qs, image));
      CHECK(family_of(qs, image) == m.family);
    }
  }
}

TEST_CASE("random maximal isotropics are isotropic and family-correct") {
  const QuadraticSpace qs = split_space(101);
  Rng rng(7);
  for (int t = 0; t < 10000; ++t) {
    const int family = 1 + t % 2;
    const MaximalIsotropic m = random_maximal_isotropic(qs, family, rng);
    REQUIRE(m.space.dim() == 5);
    REQUIRE(is_totally_isotropic(qs, m.space));
    REQUIRE(m.family == family);
    REQUIRE(family_of(qs, m.space) == family);
  }
}

TEST_CASE("spinor point enumeration at q=2") {
  const auto points = enumerate_spinor_points(2);
  CHECK(points.size() == 2295);  // (q+1)(q^2+1)(q^3+1)(q^4+1)
  const QuadraticSpace qs = split_space(2);
  const MaximalIsotropic w5{reference_maximal(qs), 1};

  std::map<int, int> census;
  for (const MaximalIsotropic& v : points) {
    CHECK(is_totally_isotropic(qs, v.space));
    CHECK(perp(qs, v.space) == v.space);
    ++census[orbit_type(qs, v, w5)];
  }
  // Stratified count: 2 [5 3]_2 = 310 points meet W5 in dimension 3.
  CHECK(census[1] == 1984);
  CHECK(census[3] == 310);
  CHECK(census[5] == 1);

  SUBCASE("parity law against several references") {
    for (int rep = 0; rep < 2295; rep += 379) {
      const MaximalIsotropic& m = points[static_cast<std::size_t>(rep)];
      for (const MaximalIsotropic& v : points)
        CHECK(intersect(v.space, m.space, 2).dim() % 2 == 1);
    }
    // swapping the middle hyperbolic coordinates maps onto family 2, where
    // intersections with family 1 turn even
    IntMatrix flipped_rows = points[0].space.basis;
    flipped_rows.col(4).swap(flipped_rows.col(5));
    const Subspace flipped = span_of(flipped_rows, 2);
    REQUIRE(family_of(qs, flipped) == 2);
    for (int rep = 0; rep < 2295; rep += 379)
      CHECK(intersect(points[static_cast<std::size_t>(rep)].space, flipped, 2).dim() % 2 == 0);
  }
}

TEST_CASE("spinor point enumeration at q=3") {
  const auto points = enumerate_spinor_points(3);
  CHECK(points.size() == 91840);
  const QuadraticSpace qs = split_space(3);
  const MaximalIsotropic w5{reference_maximal(qs), 1};
  std::map<int, Int> census;
  for (const MaximalIsotropic& v : points) ++census[orbit_type(qs, v, w5)];
  CHECK(census[5] == 1);
  CHECK(census[3] == 3630);  // 3 [5 3]_3
  CHECK(census[1] == 91840 - 3631);
  // codimension-3 orbit sits at the q^-3 scale
  const double fraction = static_cast<double>(census[3]) / 91840.0;
  CHECK(fraction > 1.0 / 81.0);
  CHECK(fraction < 1.0 / 9.0);
  CHECK_THROWS_AS(enumerate_spinor_points(5), std::invalid_argument);
}

TEST_CASE("sampling at q=2 is uniform over the enumerated points") {
  const QuadraticSpace qs = split_space(2);
  const auto points = enumerate_spinor_points(2);
  std::map<std::vector<Int>, int> index;
  for (std::size_t i = 0; i < points.size(); ++i)
    index[matrix_key(points[i].space.basis)] = static_cast<int>(i);

  Rng rng(31);
  const int per_point = 40;
  const int draws = per_point * static_cast<int>(points.size());
  std::vector<int> counts(points.size(), 0);
  for (int t = 0; t < draws; ++t) {
    const MaximalIsotropic m = random_maximal_isotropic(qs, 1, rng);
    auto it = index.find(matrix_key(m.space.basis));
    REQUIRE(it != index.end());
    ++counts[static_cast<std::size_t>(it->second)];
  }
  double chi2 = 0;
  for (int c : counts) {
    const double diff = c - per_point;
    chi2 += diff * diff / per_point;
  }
  // chi^2 with 2294 degrees of freedom: mean 2294, sigma ~ 67.7
  const double dof = 2294.0;
  CHECK(chi2 < dof + 4 * std::sqrt(2 * dof));
  CHECK(chi2 > dof - 4 * std::sqrt(2 * dof));
}

TEST_CASE("orbit type rejects family mismatch") {
  const QuadraticSpace qs = split_space(101);
  const MaximalIsotropic w5{reference_maximal(qs), 1};
  const MaximalIsotropic w4{coords(qs, {0, 1, 2, 3, 5}), 2};
  CHECK(orbit_type(qs, w5, w5) == 5);
  CHECK_THROWS_AS(orbit_type(qs, w4, w5), std::invalid_argument);
}

TEST_CASE("maximal isotropics through a fixed line") {
  const QuadraticSpace qs = split_space(101);
  Rng rng(41);
  const Subspace line = coords(qs, {2});
  for (int t = 0; t < 50; ++t) {
    const MaximalIsotropic m = random_maximal_isotropic_through(qs, line, 1 + t % 2, rng);
    CHECK(contains(m.space, line, qs.p));
    CHECK(is_totally_isotropic(qs, m.space));
    CHECK(m.family == 1 + t % 2);
  }

  SUBCASE("uniform over the 135 family-1 points through a line at q=2") {
    const QuadraticSpace qs2 = split_space(2);
    const Subspace line2 = coords(qs2, {0});
    std::vector<std::vector<Int>> keys;
    for (const MaximalIsotropic& v : enumerate_spinor_points(2))
      if (contains(v.space, line2, 2)) keys.push_back(matrix_key(v.space.basis));
    REQUIRE(keys.size() == 135);  // (q+1)(q^2+1)(q^3+1) at q=2
    std::map<std::vector<Int>, int> counts;
    Rng rng2(53);
    const int per_point = 60;
    for (int t = 0; t < per_point * 135; ++t) {
      const MaximalIsotropic m = random_maximal_isotropic_through(qs2, line2, 1, rng2);
      ++counts[matrix_key(m.space.basis)];
    }
    REQUIRE(counts.size() == 135);
    double chi2 = 0;
    for (const auto& key : keys) {
      const double diff = counts[key] - per_point;
      chi2 += diff * diff / per_point;
    }
    const double dof = 134.0;
    CHECK(chi2 < dof + 4 * std::sqrt(2 * dof));
  }
}
