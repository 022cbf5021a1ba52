#include "doctest.h"
#include "spinor10/liftconfig.hpp"

using namespace spinor10;

namespace {

Subspace coords(const QuadraticSpace& qs, std::initializer_list<int> idx) {
  IntMatrix rows = IntMatrix::Zero(static_cast<Eigen::Index>(idx.size()), qs.dim);
  Eigen::Index r = 0;
  for (int i : idx) rows(r++, i) = 1;
  return span_of(rows, qs.p);
}

Configuration base_configuration(const IsotropicFlag& f) {
  Configuration c;
  c.v1 = f.w1;
  c.v2 = f.w2;
  c.v2p = f.w2;
  c.v3 = f.w3;
  c.v3p = f.w3;
  c.v3pp = f.w3;
  c.v4 = f.w4;
  c.v4p = f.w4;
  c.v5 = f.w5;
  c.v5p = f.w5;
  return c;
}

bool all_false(const MembershipVector& m) {
  for (bool b : m.xi)
    if (b) return false;
  return true;
}

int count_true(const MembershipVector& m) {
  int n = 0;
  for (bool b : m.xi) n += b ? 1 : 0;
  return n;
}

}  // namespace

TEST_CASE("flag construction") {
  const QuadraticSpace qs = split_space(101);
  const IsotropicFlag f = coordinate_flag(qs);
  CHECK(f.w1 == coords(qs, {0}));
  CHECK(f.u4 == coords(qs, {0, 1, 2, 3}));
  CHECK(f.w4.family == 2);
  CHECK(f.w5.family == 1);

  SUBCASE("invalid flags rejected") {
    CHECK_THROWS_AS(make_isotropic_flag(qs, coords(qs, {1}), coords(qs, {2, 3}), coords(qs, {0, 1, 2}),
                                        f.w4, f.w5),
                    std::invalid_argument);
    CHECK_THROWS_AS(
        make_isotropic_flag(qs, f.w1, f.w2, f.w3, MaximalIsotropic{f.w5.space, 2}, f.w5),
        std::invalid_argument);
  }
  SUBCASE("random flags satisfy the invariants") {
    Rng rng(3);
    for (int t = 0; t < 25; ++t) {
      const IsotropicFlag g = random_isotropic_flag(qs, rng);
      CHECK(contains(g.w2, g.w1, qs.p));
      CHECK(contains(g.w3, g.w2, qs.p));
      CHECK(contains(g.w4.space, g.w3, qs.p));
      CHECK(contains(g.w5.space, g.w3, qs.p));
      CHECK(g.u4.dim() == 4);
      CHECK(g.w4.family == 2);
      CHECK(g.w5.family == 1);
    }
  }
}

TEST_CASE("base configuration lies on every section") {
  const QuadraticSpace qs = split_space(101);
  const IsotropicFlag f = coordinate_flag(qs);
  const Configuration c = base_configuration(f);
  const ConfigReport report = validate_configuration(qs, c, f);
  CHECK(report.valid);
  CHECK(report.conditions.size() == 10);
  const MembershipVector sections = section_membership(qs, c, f);
  CHECK(count_true(sections) == 10);
}

TEST_CASE("validation reports the failing incidence") {
  const QuadraticSpace qs = split_space(101);
  const IsotropicFlag f = coordinate_flag(qs);
  Configuration c = base_configuration(f);
  // Replace V3 by an isotropic 3-space not containing W2.
  c.v3 = coords(qs, {0, 2, 3});
  const ConfigReport report = validate_configuration(qs, c, f);
  CHECK_FALSE(report.valid);
  bool named = false;
  for (const ConditionCheck& cond : report.conditions)
    if (!cond.pass && cond.label.find("W2 <= V3") != std::string::npos) named = true;
  CHECK(named);

  SUBCASE("malformed spaces rejected before incidences") {
    Configuration bad = base_configuration(f);
    bad.v1 = coords(qs, {0, 1});  // wrong dimension
    CHECK_THROWS_AS(validate_configuration(qs, bad, f), std::invalid_argument);
    Configuration bad2 = base_configuration(f);
    bad2.v4 = MaximalIsotropic{f.w5.space, 2};  // wrong family
    CHECK_THROWS_AS(validate_configuration(qs, bad2, f), std::invalid_argument);
  }
}

TEST_CASE("generic lift round-trip") {
  const QuadraticSpace qs = split_space(101);
  Rng rng(19);
  int successes = 0, failures = 0, on_sections = 0;
  for (int t = 0; t < 1200; ++t) {
    const IsotropicFlag f = random_isotropic_flag(qs, rng);
    const MaximalIsotropic v = random_maximal_isotropic(qs, 1, rng);
    const LiftResult r = lift_point(qs, v, f);
    if (const LiftFailure* fail = lift_failure(r)) {
      ++failures;
      CHECK_FALSE(fail->step.empty());
      continue;
    }
    ++successes;
    const Configuration& c = *lifted(r);
    REQUIRE(validate_configuration(qs, c, f).valid);
    REQUIRE(c.v5p.space == v.space);
    const int cross = intersect(c.v4.space, c.v5.space, qs.p).dim();
    CHECK((cross == 2 || cross == 4));  // opposite families meet evenly
    const MembershipVector sections = section_membership(qs, c, f);
    const MembershipVector images = schubert_membership(qs, v, f);
    for (int i = 0; i < 10; ++i)
      if (sections.xi[static_cast<std::size_t>(i)]) CHECK(images.xi[static_cast<std::size_t>(i)]);
    if (!all_false(sections)) ++on_sections;
  }
  CHECK(successes > 0);
  CHECK(failures * 20 < successes + failures);  // genericity failures stay below 5%
  CHECK(on_sections * 20 < successes);          // generic lifts avoid the sections
}

TEST_CASE("degenerate points are rejected with the failing formula") {
  const QuadraticSpace qs = split_space(101);
  const IsotropicFlag f = coordinate_flag(qs);
  const LiftResult r = lift_point(qs, f.w5, f);
  const LiftFailure* fail = lift_failure(r);
  REQUIRE(fail != nullptr);
  CHECK(fail->step == "V1 = V & W5");
  CHECK(fail->expected_dim == 1);
  CHECK(fail->observed_dim == 5);
}

TEST_CASE("image membership of the reference point") {
  const QuadraticSpace qs = split_space(101);
  const IsotropicFlag f = coordinate_flag(qs);
  // V = W5 meets every flag space maximally, so all ten image conditions hold.
  const MembershipVector m = schubert_membership(qs, f.w5, f);
  CHECK(count_true(m) == 10);

  SUBCASE("generic points avoid all images, and then lift cleanly") {
    Rng rng(29);
    int clean = 0;
    for (int t = 0; t < 300; ++t) {
      const MaximalIsotropic v = random_maximal_isotropic(qs, 1, rng);
      if (!all_false(schubert_membership(qs, v, f))) continue;
      ++clean;
      const LiftResult r = lift_point(qs, v, f);
      REQUIRE(lifted(r) != nullptr);
      CHECK(all_false(section_membership(qs, *lifted(r), f)));
    }
    CHECK(clean > 250);
  }
}

TEST_CASE("adapted flags") {
  const QuadraticSpace qs = split_space(101);
  Rng rng(37);
  for (int t = 0; t < 100; ++t) {
    const LemmaScenario sc = random_lemma_scenario(qs, rng);
    const IsotropicFlag f = build_adapted_flag(qs, sc.w5, sc.lines, sc.theta1, sc.theta2);
    const Int p = qs.p;
    CHECK(contains(f.u4, sc.lines[0], p));
    CHECK(contains(f.u4, sc.lines[1], p));
    CHECK(contains(f.u4, sc.lines[2], p));
    CHECK_FALSE(contains(f.u4, sc.lines[3], p));
    CHECK_FALSE(contains(f.u4, sc.theta1, p));
    CHECK_FALSE(contains(f.u4, sc.theta2, p));
    CHECK(contains(f.w3, sc.lines[0], p));
    CHECK(contains(f.w3, sc.lines[1], p));
    CHECK_FALSE(contains(f.w3, sc.lines[2], p));
    CHECK(contains(f.w2, sc.lines[0], p));
    CHECK_FALSE(contains(f.w2, sc.lines[1], p));
    CHECK_FALSE(contains(f.w1, sc.lines[0], p));
    CHECK(f.w4.family == 2);
  }

  SUBCASE("forced degeneracies are rejected by name") {
    const LemmaScenario sc = random_lemma_scenario(qs, rng);
    // L4 inside the plane of L1, L2, L3
    auto lines = sc.lines;
    const Subspace pi = subspace_sum(subspace_sum(lines[0], lines[1], qs.p), lines[2], qs.p);
    lines[3] = span_of(IntMatrix(pi.basis.topRows(1)), qs.p);
    try {
      build_adapted_flag(qs, sc.w5, lines, sc.theta1, sc.theta2);
      FAIL("expected AdaptedFlagError");
    } catch (const AdaptedFlagError& e) {
      CHECK(e.hypothesis == "L4 not in the plane of L1, L2, L3");
    }
    // tangent through the other marked point
    auto lines2 = sc.lines;
    const Subspace theta1 = subspace_sum(lines2[0], lines2[1], qs.p);
    try {
      build_adapted_flag(qs, sc.w5, lines2, theta1, sc.theta2);
      FAIL("expected AdaptedFlagError");
    } catch (const AdaptedFlagError& e) {
      CHECK(e.hypothesis == "L2 not on theta1");
    }
  }
}

TEST_CASE("flag family dimension breakdown") {
  const FlagFamilyDimension d = flag_family_dimension();
  CHECK(d.total == 7);
  int sum = 0;
  for (const auto& [name, dim] : d.components) sum += dim;
  CHECK(sum == d.total);
  // combined with the 10-dimensional family of flags through W5, the excess
  // over the fibers is 10 - 7 = 3 = 8d - (8d - 3)
  CHECK(10 - d.total == 3);
}

TEST_CASE("marked points meet exactly their section") {
  const QuadraticSpace qs = split_space(101);
  Rng rng(43);
  int checked = 0;
  for (int t = 0; t < 30; ++t) {
    const LemmaScenario sc = random_lemma_scenario(qs, rng);
    const IsotropicFlag f = build_adapted_flag(qs, sc.w5, sc.lines, sc.theta1, sc.theta2);
    for (int i = 0; i < 3; ++i) {
      const Subspace& line = sc.lines[static_cast<std::size_t>(i)];
      const Subspace* theta = i == 0 ? &sc.theta1 : (i == 1 ? &sc.theta2 : nullptr);
      std::optional<Configuration> config;
      for (int attempt = 0; attempt < 100 && !config; ++attempt) {
        const MaximalIsotropic v = random_maximal_isotropic_through(qs, line, 1, rng);
        if (intersect(v.space, sc.w5.space, qs.p).dim() != 1) continue;
        const LiftResult r = theta ? lift_point_with_tangent(qs, v, f, *theta) : lift_point(qs, v, f);
        if (lifted(r)) config = *lifted(r);
      }
      REQUIRE(config.has_value());
      REQUIRE(validate_configuration(qs, *config, f).valid);
      const MembershipVector sections = section_membership(qs, *config, f);
      MembershipVector expected;
      expected.xi[static_cast<std::size_t>(2 - i)] = true;  // L1 -> xi3, L2 -> xi2, L3 -> xi1
      CHECK(sections.xi == expected.xi);
      if (i == 1) {
        // the x2 mechanism: V4 completes theta2 + W3, which differs from U4
        const Subspace u4_tilde = subspace_sum(sc.theta2, f.w3, qs.p);
        CHECK(u4_tilde.dim() == 4);
        CHECK(u4_tilde != f.u4);
        CHECK(contains(config->v4.space, u4_tilde, qs.p));
        CHECK(config->v4.space != f.w4.space);
      }
      ++checked;
    }
  }
  CHECK(checked == 90);

  SUBCASE("the x3 point rides the V4 = W4 mechanism") {
    const LemmaScenario sc = random_lemma_scenario(qs, rng);
    const IsotropicFlag f = build_adapted_flag(qs, sc.w5, sc.lines, sc.theta1, sc.theta2);
    std::optional<Configuration> config;
    while (!config) {
      const MaximalIsotropic v = random_maximal_isotropic_through(qs, sc.lines[2], 1, rng);
      if (intersect(v.space, sc.w5.space, qs.p).dim() != 1) continue;
      const LiftResult r = lift_point(qs, v, f);
      if (lifted(r)) config = *lifted(r);
    }
    CHECK(config->v4.space == f.w4.space);
    CHECK(intersect(config->v5p.space, f.w4.space, qs.p).dim() >= 1);
  }
}
