#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "spinor10/isogeom.hpp"

namespace spinor10 {

// The configuration model of the ten-step tower over a fixed isotropic
// flag: ten subspaces (V1, V2, V2', V3, V3', V3'', V4, V4', V5, V5')
// subject to ten incidence conditions, one per fibration level. V4 and V4'
// are family-2 maximal isotropics, V5 and V5' family-1; the primed spaces
// are forgotten first when walking down the tower.

// Complete isotropic flag: W1 c W2 c W3, a family-2 maximal W4 and a
// family-1 maximal W5, both containing W3 and meeting in the 4-space U4.
struct IsotropicFlag {
  Subspace w1, w2, w3;
  MaximalIsotropic w4, w5;
  Subspace u4;  // w4 /\ w5
};

// Validates dimensions, isotropy, containments and families; computes U4.
IsotropicFlag make_isotropic_flag(const QuadraticSpace& qs, Subspace w1, Subspace w2, Subspace w3,
                                  MaximalIsotropic w4, MaximalIsotropic w5);

// The coordinate flag W_i = span(e_1..e_i), W5 = span(e_1..e_5),
// W4 = span(e_1..e_4, e_6).
IsotropicFlag coordinate_flag(const QuadraticSpace& qs);

// A uniformly random flag: random family-1 W5, random chain inside it,
// family-2 completion of the chain's 4-space.
IsotropicFlag random_isotropic_flag(const QuadraticSpace& qs, Rng& rng);

struct Configuration {
  Subspace v1, v2, v2p, v3, v3p, v3pp;
  MaximalIsotropic v4, v4p, v5, v5p;
};

struct ConditionCheck {
  std::string label;
  bool pass = false;
};

struct ConfigReport {
  bool valid = false;
  std::vector<ConditionCheck> conditions;  // the ten incidences, in tower order
  explicit operator bool() const { return valid; }
};

// Checks the ten incidence conditions. Malformed fields (wrong dimension,
// non-isotropic space, wrong family) are rejected with
// std::invalid_argument before any incidence is evaluated.
ConfigReport validate_configuration(const QuadraticSpace& qs, const Configuration& c, const IsotropicFlag& f);

struct LiftFailure {
  std::string step;      // the formula that degenerated
  int expected_dim = 0;
  int observed_dim = 0;
};

using LiftResult = std::variant<Configuration, LiftFailure>;

inline const Configuration* lifted(const LiftResult& r) { return std::get_if<Configuration>(&r); }
inline const LiftFailure* lift_failure(const LiftResult& r) { return std::get_if<LiftFailure>(&r); }

// Evaluates the lift table for a point in general position:
//   V5' = V, V1 = V /\ W5, V2 = V1 + W1, V3 = V1 + W2, V4 > V1 + W3,
//   V2' = V /\ V4, V3' = V2' + V2, V5 > V2' + V3, V3'' = V /\ V5,
//   V4' > V3' + V3''.
// Each ">" step is the family-forced maximal completion of a 4-space. Any
// dimension other than the generic one aborts with the failing formula.
LiftResult lift_point(const QuadraticSpace& qs, const MaximalIsotropic& v, const IsotropicFlag& f);

// Lift of a marked point whose intersection line with W5 may sit inside the
// flag. Where V1 + W2 or V1 + W3 drops dimension, the tangent plane theta
// (a 2-space in W5 containing V1) supplies the limiting direction:
// V3 = theta + W2, resp. V4 > theta + W3.
LiftResult lift_point_with_tangent(const QuadraticSpace& qs, const MaximalIsotropic& v, const IsotropicFlag& f,
                                   const Subspace& theta);

// The ten section equalities, in tower order:
// xi1: V4=W4, xi2: V3=W3, xi3: V2=W2, xi4: V5=W5, xi5: V1=W1,
// xi6: V3'=V3, xi7: V2'=V2, xi8: V4'=V4, xi9: V3''=V3', xi10: V5'=V5.
struct MembershipVector {
  std::array<bool, 10> xi{};
};

MembershipVector section_membership(const QuadraticSpace& qs, const Configuration& c, const IsotropicFlag& f);

// The images of the ten sections in the base, as intersection-dimension
// conditions on V against the flag:
// xi1: dim(V/\W4)>=1, xi2: dim(V/\W3)>=1, xi3: dim(V/\W2)>=1,
// xi4: dim(V/\W5)>=3, xi5: dim(V/\W1)>=1, xi6: xi3 and xi4,
// xi7: xi5 and xi4, xi8: dim(V/\W3)>=2, xi9: xi5 and xi8,
// xi10: dim(V/\W2)>=2.
MembershipVector schubert_membership(const QuadraticSpace& qs, const MaximalIsotropic& v, const IsotropicFlag& f);

struct AdaptedFlagError : std::invalid_argument {
  AdaptedFlagError(std::string hypothesis_, const std::string& what_)
      : std::invalid_argument(what_), hypothesis(std::move(hypothesis_)) {}
  std::string hypothesis;
};

// Builds a flag adapted to four marked lines L1..L4 in W5 and two tangent
// planes theta_i > L_i (i = 1, 2), following the general-position recipe:
// U4 contains L1, L2, L3 but neither L4 nor theta_1 nor theta_2; W3
// contains L1, L2 but not L3; W2 contains L1 but not L2; W1 avoids L1;
// W4 is the family-2 completion of U4. Violated hypotheses raise
// AdaptedFlagError naming the failing non-incidence.
IsotropicFlag build_adapted_flag(const QuadraticSpace& qs, const MaximalIsotropic& w5,
                                 const std::array<Subspace, 4>& lines, const Subspace& theta1,
                                 const Subspace& theta2);

struct FlagFamilyDimension {
  int total = 7;
  std::vector<std::pair<std::string, int>> components;
};

// Dimension of the family of flags adapted to a fixed curve: 3 for the
// marked points plus 1 for each of W1..W4.
FlagFamilyDimension flag_family_dimension();

// A random general-position input for build_adapted_flag: four marked lines
// in W5 and the two tangent planes. Retries (seeded) until the adapted-flag
// hypotheses hold.
struct LemmaScenario {
  MaximalIsotropic w5;
  std::array<Subspace, 4> lines;
  Subspace theta1, theta2;
};

LemmaScenario random_lemma_scenario(const QuadraticSpace& qs, Rng& rng);

}  // namespace spinor10
