#include "spinor10/liftconfig.hpp"

#include <stdexcept>

namespace spinor10 {

namespace {

void require_isotropic_of_dim(const QuadraticSpace& qs, const Subspace& s, int dim, const std::string& name) {
  if (s.dim() != dim)
    throw std::invalid_argument(name + " must have dimension " + std::to_string(dim) + ", got " +
                                std::to_string(s.dim()));
  if (!is_totally_isotropic(qs, s)) throw std::invalid_argument(name + " must be totally isotropic");
}

void require_maximal_of_family(const QuadraticSpace& qs, const MaximalIsotropic& m, int family,
                               const std::string& name) {
  require_isotropic_of_dim(qs, m.space, 5, name);
  if (family_of(qs, m.space) != family || m.family != family)
    throw std::invalid_argument(name + " must be a family-" + std::to_string(family) + " maximal isotropic");
}

}  // namespace

IsotropicFlag make_isotropic_flag(const QuadraticSpace& qs, Subspace w1, Subspace w2, Subspace w3,
                                  MaximalIsotropic w4, MaximalIsotropic w5) {
  require_isotropic_of_dim(qs, w1, 1, "W1");
  require_isotropic_of_dim(qs, w2, 2, "W2");
  require_isotropic_of_dim(qs, w3, 3, "W3");
  require_maximal_of_family(qs, w4, 2, "W4");
  require_maximal_of_family(qs, w5, 1, "W5");
  if (!contains(w2, w1, qs.p) || !contains(w3, w2, qs.p))
    throw std::invalid_argument("flag containments W1 c W2 c W3 fail");
  if (!contains(w4.space, w3, qs.p)) throw std::invalid_argument("W3 must lie in W4");
  if (!contains(w5.space, w3, qs.p)) throw std::invalid_argument("W3 must lie in W5");
  Subspace u4 = intersect(w4.space, w5.space, qs.p);
  if (u4.dim() != 4) throw std::invalid_argument("W4 and W5 must meet in dimension 4");
  return IsotropicFlag{std::move(w1), std::move(w2), std::move(w3), std::move(w4), std::move(w5), std::move(u4)};
}

IsotropicFlag coordinate_flag(const QuadraticSpace& qs) {
  auto coords = [&](std::initializer_list<int> idx) {
    IntMatrix rows = IntMatrix::Zero(static_cast<Eigen::Index>(idx.size()), qs.dim);
    Eigen::Index r = 0;
    for (int i : idx) rows(r++, i) = 1;
    return Subspace{rows};
  };
  const Subspace w5 = coords({0, 1, 2, 3, 4});
  const Subspace w4 = coords({0, 1, 2, 3, 5});
  return make_isotropic_flag(qs, coords({0}), coords({0, 1}), coords({0, 1, 2}), MaximalIsotropic{w4, 2},
                             MaximalIsotropic{w5, 1});
}

IsotropicFlag random_isotropic_flag(const QuadraticSpace& qs, Rng& rng) {
  const MaximalIsotropic w5 = random_maximal_isotropic(qs, 1, rng);
  // Random complete chain inside W5.
  Subspace chain = zero_subspace(qs.dim);
  std::array<Subspace, 4> levels;
  for (int k = 0; k < 4; ++k) {
    while (true) {
      const IntVector v = random_nonzero_vector_in(w5.space, qs.p, rng);
      if (contains_vector(chain, v, qs.p)) continue;
      chain = subspace_sum(chain, span_of(v.transpose(), qs.p), qs.p);
      break;
    }
    levels[static_cast<std::size_t>(k)] = chain;
  }
  const MaximalIsotropic w4 = complete_to_family(qs, levels[3], 2);
  return make_isotropic_flag(qs, levels[0], levels[1], levels[2], w4, w5);
}

ConfigReport validate_configuration(const QuadraticSpace& qs, const Configuration& c, const IsotropicFlag& f) {
  require_isotropic_of_dim(qs, c.v1, 1, "V1");
  require_isotropic_of_dim(qs, c.v2, 2, "V2");
  require_isotropic_of_dim(qs, c.v2p, 2, "V2'");
  require_isotropic_of_dim(qs, c.v3, 3, "V3");
  require_isotropic_of_dim(qs, c.v3p, 3, "V3'");
  require_isotropic_of_dim(qs, c.v3pp, 3, "V3''");
  require_maximal_of_family(qs, c.v4, 2, "V4");
  require_maximal_of_family(qs, c.v4p, 2, "V4'");
  require_maximal_of_family(qs, c.v5, 1, "V5");
  require_maximal_of_family(qs, c.v5p, 1, "V5'");

  const Int p = qs.p;
  ConfigReport report;
  auto check = [&](const std::string& label, bool pass) {
    report.conditions.push_back(ConditionCheck{label, pass});
  };
  check("V4 >= W3", contains(c.v4.space, f.w3, p));
  check("W2 <= V3 <= W5 & V4",
        contains(c.v3, f.w2, p) && contains(f.w5.space, c.v3, p) && contains(c.v4.space, c.v3, p));
  check("W1 <= V2 <= V3", contains(c.v2, f.w1, p) && contains(c.v3, c.v2, p));
  check("V3 <= V5", contains(c.v5.space, c.v3, p));
  check("V1 <= V2", contains(c.v2, c.v1, p));
  check("V2 <= V3' <= V5 & V4",
        contains(c.v3p, c.v2, p) && contains(c.v5.space, c.v3p, p) && contains(c.v4.space, c.v3p, p));
  check("V1 <= V2' <= V3'", contains(c.v2p, c.v1, p) && contains(c.v3p, c.v2p, p));
  check("V3' <= V4'", contains(c.v4p.space, c.v3p, p));
  check("V2' <= V3'' <= V5 & V4'",
        contains(c.v3pp, c.v2p, p) && contains(c.v5.space, c.v3pp, p) && contains(c.v4p.space, c.v3pp, p));
  check("V3'' <= V5'", contains(c.v5p.space, c.v3pp, p));
  report.valid = true;
  for (const ConditionCheck& cc : report.conditions) report.valid = report.valid && cc.pass;
  return report;
}

namespace {

struct LiftSteps {
  std::optional<LiftFailure> failure;

  bool expect(const Subspace& s, int dim, const std::string& step) {
    if (s.dim() == dim) return true;
    failure = LiftFailure{step, dim, s.dim()};
    return false;
  }
};

LiftResult lift_impl(const QuadraticSpace& qs, const MaximalIsotropic& v, const IsotropicFlag& f,
                     const Subspace* theta) {
  if (v.family != 1) throw std::invalid_argument("only family-1 points lift");
  const Int p = qs.p;
  LiftSteps steps;
  Configuration c;
  c.v5p = v;

  c.v1 = intersect(v.space, f.w5.space, p);
  if (!steps.expect(c.v1, 1, "V1 = V & W5")) return *steps.failure;

  c.v2 = subspace_sum(c.v1, f.w1, p);
  if (!steps.expect(c.v2, 2, "V2 = V1 + W1")) return *steps.failure;

  c.v3 = subspace_sum(c.v1, f.w2, p);
  if (c.v3.dim() != 3) {
    if (theta == nullptr) return LiftFailure{"V3 = V1 + W2", 3, c.v3.dim()};
    c.v3 = subspace_sum(*theta, f.w2, p);
    if (!steps.expect(c.v3, 3, "V3 = theta + W2")) return *steps.failure;
  }

  Subspace u4 = subspace_sum(c.v1, f.w3, p);
  if (u4.dim() != 4) {
    if (theta == nullptr) return LiftFailure{"U4 = V1 + W3", 4, u4.dim()};
    u4 = subspace_sum(*theta, f.w3, p);
    if (!steps.expect(u4, 4, "U4 = theta + W3")) return *steps.failure;
  }
  c.v4 = complete_to_family(qs, u4, 2);

  c.v2p = intersect(v.space, c.v4.space, p);
  if (!steps.expect(c.v2p, 2, "V2' = V & V4")) return *steps.failure;

  c.v3p = subspace_sum(c.v2p, c.v2, p);
  if (!steps.expect(c.v3p, 3, "V3' = V2' + V2")) return *steps.failure;

  const Subspace u5 = subspace_sum(c.v2p, c.v3, p);
  if (!steps.expect(u5, 4, "U5 = V2' + V3")) return *steps.failure;
  c.v5 = complete_to_family(qs, u5, 1);

  c.v3pp = intersect(v.space, c.v5.space, p);
  if (!steps.expect(c.v3pp, 3, "V3'' = V & V5")) return *steps.failure;

  const Subspace u4p = subspace_sum(c.v3p, c.v3pp, p);
  if (!steps.expect(u4p, 4, "U4' = V3' + V3''")) return *steps.failure;
  c.v4p = complete_to_family(qs, u4p, 2);

  return c;
}

}  // namespace

LiftResult lift_point(const QuadraticSpace& qs, const MaximalIsotropic& v, const IsotropicFlag& f) {
  return lift_impl(qs, v, f, nullptr);
}

LiftResult lift_point_with_tangent(const QuadraticSpace& qs, const MaximalIsotropic& v, const IsotropicFlag& f,
                                   const Subspace& theta) {
  if (theta.dim() != 2 || !contains(f.w5.space, theta, qs.p))
    throw std::invalid_argument("tangent must be a plane inside W5");
  return lift_impl(qs, v, f, &theta);
}

MembershipVector section_membership(const QuadraticSpace& qs, const Configuration& c, const IsotropicFlag& f) {
  (void)qs;
  MembershipVector m;
  m.xi[0] = c.v4.space == f.w4.space;
  m.xi[1] = c.v3 == f.w3;
  m.xi[2] = c.v2 == f.w2;
  m.xi[3] = c.v5.space == f.w5.space;
  m.xi[4] = c.v1 == f.w1;
  m.xi[5] = c.v3p == c.v3;
  m.xi[6] = c.v2p == c.v2;
  m.xi[7] = c.v4p.space == c.v4.space;
  m.xi[8] = c.v3pp == c.v3p;
  m.xi[9] = c.v5p.space == c.v5.space;
  return m;
}

MembershipVector schubert_membership(const QuadraticSpace& qs, const MaximalIsotropic& v, const IsotropicFlag& f) {
  const Int p = qs.p;
  const int d1 = intersect(v.space, f.w1, p).dim();
  const int d2 = intersect(v.space, f.w2, p).dim();
  const int d3 = intersect(v.space, f.w3, p).dim();
  const int d4 = intersect(v.space, f.w4.space, p).dim();
  const int d5 = intersect(v.space, f.w5.space, p).dim();
  MembershipVector m;
  m.xi[0] = d4 >= 1;
  m.xi[1] = d3 >= 1;
  m.xi[2] = d2 >= 1;
  m.xi[3] = d5 >= 3;
  m.xi[4] = d1 >= 1;
  m.xi[5] = d2 >= 1 && d5 >= 3;
  m.xi[6] = d1 >= 1 && d5 >= 3;
  m.xi[7] = d3 >= 2;
  m.xi[8] = d1 >= 1 && d3 >= 2;
  m.xi[9] = d2 >= 2;
  return m;
}

namespace {

// First vector of the ambient space, in a deterministic sweep over the
// subspace's coordinates, satisfying the predicate.
template <typename Pred>
IntVector first_vector_in(const Subspace& s, Int p, Pred&& pred, const std::string& hypothesis) {
  // Sweep coefficient vectors over the basis in odometer order, skipping 0.
  std::vector<Int> digits(static_cast<std::size_t>(s.dim()), 0);
  while (true) {
    std::size_t pos = digits.size();
    while (pos > 0 && digits[pos - 1] == p - 1) digits[--pos] = 0;
    if (pos == 0) throw AdaptedFlagError(hypothesis, "no vector satisfies: " + hypothesis);
    ++digits[pos - 1];
    IntVector v = IntVector::Zero(s.ambient_dim());
    for (int r = 0; r < s.dim(); ++r) {
      if (digits[static_cast<std::size_t>(r)] == 0) continue;
      for (int c = 0; c < s.ambient_dim(); ++c)
        v(c) = fp::norm(v(c) + digits[static_cast<std::size_t>(r)] * s.basis(r, c), p);
    }
    if (pred(v)) return v;
  }
}

}  // namespace

IsotropicFlag build_adapted_flag(const QuadraticSpace& qs, const MaximalIsotropic& w5,
                                 const std::array<Subspace, 4>& lines, const Subspace& theta1,
                                 const Subspace& theta2) {
  const Int p = qs.p;
  require_maximal_of_family(qs, w5, 1, "W5");
  for (int i = 0; i < 4; ++i) {
    if (lines[static_cast<std::size_t>(i)].dim() != 1 ||
        !contains(w5.space, lines[static_cast<std::size_t>(i)], p))
      throw AdaptedFlagError("L" + std::to_string(i + 1) + " is a line in W5",
                             "marked point " + std::to_string(i + 1) + " must be a line inside W5");
  }
  const auto require_plane = [&](const Subspace& theta, const Subspace& line, const std::string& name) {
    if (theta.dim() != 2 || !contains(w5.space, theta, p) || !contains(theta, line, p))
      throw AdaptedFlagError(name + " is a plane in W5 through its point",
                             name + " must be a plane in W5 containing its marked point");
  };
  require_plane(theta1, lines[0], "theta1");
  require_plane(theta2, lines[1], "theta2");

  auto fail_if = [&](bool bad, const std::string& hypothesis) {
    if (bad) throw AdaptedFlagError(hypothesis, "general-position hypothesis fails: " + hypothesis);
  };
  fail_if(contains(theta1, lines[1], p), "L2 not on theta1");
  fail_if(contains(theta2, lines[0], p), "L1 not on theta2");

  const Subspace pi1 = subspace_sum(theta1, lines[1], p);  // theta1 + L2
  const Subspace pi2 = subspace_sum(theta2, lines[0], p);  // theta2 + L1
  fail_if(contains(pi1, lines[2], p), "L3 not in theta1 + L2");
  fail_if(contains(pi2, lines[2], p), "L3 not in theta2 + L1");

  const Subspace pi = subspace_sum(subspace_sum(lines[0], lines[1], p), lines[2], p);
  fail_if(pi.dim() != 3, "L1, L2, L3 span a plane");
  fail_if(contains(pi, lines[3], p), "L4 not in the plane of L1, L2, L3");
  fail_if(contains(pi1, lines[3], p), "L4 not in theta1 + L2");
  fail_if(contains(pi2, lines[3], p), "L4 not in theta2 + L1");

  // U4 = pi + <v> avoiding the three 4-spaces pi + theta_i and pi + L4.
  const Subspace block1 = subspace_sum(pi, theta1, p);
  const Subspace block2 = subspace_sum(pi, theta2, p);
  const Subspace block3 = subspace_sum(pi, lines[3], p);
  const IntVector v4dir = first_vector_in(
      w5.space, p,
      [&](const IntVector& v) {
        return !contains_vector(block1, v, p) && !contains_vector(block2, v, p) && !contains_vector(block3, v, p);
      },
      "U4 extension avoiding theta1, theta2 and L4");
  const Subspace u4 = subspace_sum(pi, span_of(v4dir.transpose(), p), p);

  // W3 = L1 + L2 + <w> inside U4, avoiding the plane of L1, L2, L3.
  const Subspace l12 = subspace_sum(lines[0], lines[1], p);
  const IntVector w3dir = first_vector_in(
      u4, p, [&](const IntVector& v) { return !contains_vector(pi, v, p); }, "W3 extension outside L1+L2+L3");
  const Subspace w3 = subspace_sum(l12, span_of(w3dir.transpose(), p), p);

  // W2 = L1 + <u> inside W3, avoiding L1 + L2.
  const IntVector w2dir = first_vector_in(
      w3, p, [&](const IntVector& v) { return !contains_vector(l12, v, p); }, "W2 extension outside L1+L2");
  const Subspace w2 = subspace_sum(lines[0], span_of(w2dir.transpose(), p), p);

  // W1 = a line of W2 different from L1.
  const IntVector w1dir = first_vector_in(
      w2, p, [&](const IntVector& v) { return !contains_vector(lines[0], v, p); }, "W1 avoiding L1");
  const Subspace w1 = span_of(w1dir.transpose(), p);

  const MaximalIsotropic w4 = complete_to_family(qs, u4, 2);
  return make_isotropic_flag(qs, w1, w2, w3, w4, w5);
}

FlagFamilyDimension flag_family_dimension() {
  FlagFamilyDimension d;
  d.components = {{"marked points x1, x2, x3", 3}, {"W1", 1}, {"W2", 1}, {"W3", 1}, {"W4", 1}};
  int total = 0;
  for (const auto& [name, dim] : d.components) total += dim;
  d.total = total;
  return d;
}

LemmaScenario random_lemma_scenario(const QuadraticSpace& qs, Rng& rng) {
  const MaximalIsotropic w5 = random_maximal_isotropic(qs, 1, rng);
  const Int p = qs.p;
  for (int attempt = 0; attempt < 1000; ++attempt) {
    LemmaScenario sc;
    sc.w5 = w5;
    for (int i = 0; i < 4; ++i)
      sc.lines[static_cast<std::size_t>(i)] =
          span_of(random_nonzero_vector_in(w5.space, p, rng).transpose(), p);
    auto random_plane_through = [&](const Subspace& line) {
      while (true) {
        const IntVector v = random_nonzero_vector_in(w5.space, p, rng);
        if (contains_vector(line, v, p)) continue;
        return subspace_sum(line, span_of(v.transpose(), p), p);
      }
    };
    sc.theta1 = random_plane_through(sc.lines[0]);
    sc.theta2 = random_plane_through(sc.lines[1]);
    try {
      (void)build_adapted_flag(qs, sc.w5, sc.lines, sc.theta1, sc.theta2);
      return sc;
    } catch (const AdaptedFlagError&) {
      // degenerate draw, resample
    }
  }
  throw std::runtime_error("could not draw a general-position scenario");
}

}  // namespace spinor10
