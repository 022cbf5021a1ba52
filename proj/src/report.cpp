#include "spinor10/report.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace spinor10 {

namespace {

Json matrix_json(const IntMatrix& m) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json vector_json(const IntVector& v) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(v(i));
  return out;
}

bool membership_implies(const MembershipVector& a, const MembershipVector& b) {
  for (int i = 0; i < 10; ++i)
    if (a.xi[static_cast<std::size_t>(i)] && !b.xi[static_cast<std::size_t>(i)]) return false;
  return true;
}

bool any_section(const MembershipVector& m) {
  return std::any_of(m.xi.begin(), m.xi.end(), [](bool b) { return b; });
}

std::string render_table(const IntMatrix& t) {
  std::ostringstream os;
  os << "     ";
  for (Eigen::Index j = 0; j < t.cols(); ++j) os << " " << (j + 1 < 10 ? " " : "") << (j + 1);
  os << "\n";
  for (Eigen::Index i = 0; i < t.rows(); ++i) {
    os << (i + 1 < 10 ? " " : "") << (i + 1) << " |";
    for (Eigen::Index j = 0; j < t.cols(); ++j) os << "  " << t(i, j);
    os << "\n";
  }
  return os.str();
}

CycleClass expected_argmax(Int d) {
  CycleClass a = CycleClass::Zero(10);
  a(0) = d - 2;
  a(1) = 1;
  a(2) = 1;
  return a;
}

Json dimension_report_json(const DimensionReport& r) {
  Json out = Json::object();
  out["degree"] = r.degree;
  out["class"] = vector_json(r.cls);
  out["dim"] = r.dim;
  out["penalty"] = vector_json(r.penalty);
  out["in_cone"] = r.a1_plus;
  Json hyp = Json::array();
  for (bool h : r.level_hypothesis) hyp.push_back(h);
  out["level_hypotheses"] = hyp;
  return out;
}

}  // namespace

Json subspace_json(const Subspace& s) {
  Json out = Json::object();
  out["dim"] = s.dim();
  out["basis"] = matrix_json(s.basis);
  return out;
}

Json membership_json(const MembershipVector& m) {
  Json out = Json::object();
  for (int i = 0; i < 10; ++i) out["xi" + std::to_string(i + 1)] = m.xi[static_cast<std::size_t>(i)];
  return out;
}

Json configuration_json(const Configuration& c) {
  Json out = Json::object();
  out["V1"] = subspace_json(c.v1);
  out["V2"] = subspace_json(c.v2);
  out["V2p"] = subspace_json(c.v2p);
  out["V3"] = subspace_json(c.v3);
  out["V3p"] = subspace_json(c.v3p);
  out["V3pp"] = subspace_json(c.v3pp);
  out["V4"] = subspace_json(c.v4.space);
  out["V4p"] = subspace_json(c.v4p.space);
  out["V5"] = subspace_json(c.v5.space);
  out["V5p"] = subspace_json(c.v5p.space);
  return out;
}

bool ReportEnvelope::pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

Json ReportEnvelope::to_json() const {
  Json out = Json::object();
  out["command"] = command;
  out["params"] = params;
  out["seed"] = seed;
  out["findings"] = findings;
  Json cs = Json::array();
  for (const CheckResult& c : checks) {
    Json jc = Json::object();
    jc["name"] = c.name;
    jc["pass"] = c.pass;
    jc["detail"] = c.detail;
    cs.push_back(std::move(jc));
  }
  out["checks"] = cs;
  out["pass"] = pass();
  return out;
}

std::string ReportEnvelope::text() const {
  std::ostringstream os;
  os << "== " << command << " ==\n";
  if (!params.empty()) os << "params: " << params.dump() << "\n";
  os << rendered;
  for (const CheckResult& c : checks) {
    os << (c.pass ? "[PASS] " : "[FAIL] ") << c.name;
    if (c.detail.contains("summary")) os << ": " << c.detail["summary"].get<std::string>();
    os << "\n";
  }
  os << (pass() ? "all checks passed" : "CHECKS FAILED") << "\n";
  return os.str();
}

ReportEnvelope cmd_table(const TableOptions& opts) {
  ReportEnvelope env;
  env.command = "table";
  env.params["gamma_convention"] = opts.convention == GammaConvention::prefix ? "prefix" : "suffix";

  const RootSystem& rs = spinor_root_system();
  const GammaSequence gammas = gamma_sequence(rs, spinor_word(), opts.convention);
  const IntMatrix table = pairing_table(rs, gammas);
  const IntMatrix& reference = opts.reference_override ? *opts.reference_override : reference_pairing_table();

  int mismatches = 0;
  Json mismatch_list = Json::array();
  for (Eigen::Index i = 0; i < 10; ++i)
    for (Eigen::Index j = 0; j < 10; ++j)
      if (table(i, j) != reference(i, j)) {
        ++mismatches;
        Json m = Json::object();
        m["row"] = i + 1;
        m["col"] = j + 1;
        m["computed"] = table(i, j);
        m["reference"] = reference(i, j);
        mismatch_list.push_back(std::move(m));
      }

  Json gamma_rows = Json::array();
  for (const Root& g : gammas) gamma_rows.push_back(vector_json(g.coeffs));

  env.findings["word"] = spinor_word().letters;
  env.findings["gammas"] = gamma_rows;
  env.findings["table"] = matrix_json(table);
  env.findings["tangent_sum"] = vector_json(tangent_sum(table));
  env.findings["match"] = mismatches == 0;
  env.findings["mismatch_count"] = mismatches;
  env.findings["mismatches"] = mismatch_list;
  // The displayed formula for T_i carries a dummy-index slip; we read T_i off
  // column i (coefficients on xi_1..xi_i) and report that reading here
  // rather than normalizing silently.
  env.findings["tangent_reading"] = "T_i = sum_{k<=i} table(k,i) xi_k (column i)";
  env.rendered = render_table(table) + (mismatches == 0
                                            ? "match: exact\n"
                                            : "match: MISMATCH (" + std::to_string(mismatches) + " entries)\n");

  CheckResult check;
  check.name = "pairing table matches embedded reference";
  check.pass = mismatches == 0;
  check.detail["summary"] = mismatches == 0 ? "100/100 entries equal" : std::to_string(mismatches) + " mismatches";
  env.checks.push_back(std::move(check));
  return env;
}

ReportEnvelope cmd_classes(Int degree_min, Int degree_max) {
  if (degree_min < 3 || degree_min > degree_max || degree_max > 14)
    throw std::invalid_argument("degree range must satisfy 3 <= min <= max <= 14");
  ReportEnvelope env;
  env.command = "classes";
  env.params["degree_min"] = degree_min;
  env.params["degree_max"] = degree_max;

  const IntMatrix& table = reference_pairing_table();
  Json rows = Json::array();
  bool all_extremal = true;
  std::ostringstream rendered;
  for (Int d = degree_min; d <= degree_max; ++d) {
    const auto classes = enumerate_classes(d);
    const ArgmaxResult best = max_dimension_class(d, table);
    Int second_best = 0;
    bool has_second = false;
    for (const CycleClass& a : classes) {
      const Int dim = mor_dimension(a, table);
      if (same_vector(a, best.cls)) continue;
      if (!has_second || dim > second_best) {
        second_best = dim;
        has_second = true;
      }
    }
    const bool conforms = best.unique && best.dim == 8 * d - 3 && same_vector(best.cls, expected_argmax(d)) &&
                          (!has_second || second_best < best.dim);
    all_extremal = all_extremal && conforms;
    Json row = Json::object();
    row["degree"] = d;
    row["count"] = classes.size();
    row["argmax"] = vector_json(best.cls);
    row["max_dimension"] = best.dim;
    row["unique"] = best.unique;
    row["gap_to_8d"] = 8 * d - best.dim;
    if (has_second) row["second_dimension"] = second_best;
    row["argmax_report"] = dimension_report_json(mor_dimension_report(best.cls, table));
    const TotalSpaceDimension total = total_space_dimension(d);
    Json total_json = Json::object();
    total_json["derived"] = total.derived;
    if (total.derived) {
      total_json["value"] = total.total;
      total_json["terms"] = {total.max_morphism_dim, total.flag_variety_dim, -total.lift_fiber_dim};
    } else if (total.annotated_dimension) {
      total_json["annotated"] = *total.annotated_dimension;
    }
    row["total_space"] = std::move(total_json);
    const PlanarBound planar = planar_locus_bound(d);
    row["planar_bound"] = planar.bound;
    row["exceeds_planar_bound"] = 8 * d > planar.bound;
    rows.push_back(std::move(row));
    rendered << "d=" << d << ": " << classes.size() << " classes, max dim " << best.dim << " at ("
             << best.cls.transpose() << ")" << (best.unique ? ", unique" : ", NOT UNIQUE") << "\n";
  }
  env.findings["degrees"] = rows;
  // The extremal locus in coordinates: the strict-positivity floor (1,1,1)
  // plus the whole remaining degree on xi_1, since xi_1 carries no penalty.
  env.findings["argmax_note"] =
      "maximum is attained exactly at (d-2,1,1,0,...,0); the penalty vector (0,1,2,2,3,3,4,4,5,6) ignores a_1";
  env.rendered = rendered.str();

  CheckResult check;
  check.name = "unique extremal class (d-2,1,1,0,...) of dimension 8d-3 per degree";
  check.pass = all_extremal;
  check.detail["summary"] = std::string(all_extremal ? "holds" : "fails") + " for all degrees in range";
  env.checks.push_back(std::move(check));
  return env;
}

LiftTrialStats run_lift_trials(const QuadraticSpace& qs, int trials, Rng& rng) {
  LiftTrialStats stats;
  stats.trials = trials;
  for (int t = 0; t < trials; ++t) {
    const IsotropicFlag flag = random_isotropic_flag(qs, rng);
    const MaximalIsotropic v = random_maximal_isotropic(qs, 1, rng);
    const LiftResult result = lift_point(qs, v, flag);
    if (lift_failure(result)) {
      ++stats.generic_failures;
      continue;
    }
    ++stats.successes;
    const Configuration& c = *lifted(result);
    if (!validate_configuration(qs, c, flag)) ++stats.invalid_configurations;
    if (!(c.v5p.space == v.space)) ++stats.roundtrip_failures;
    const MembershipVector sections = section_membership(qs, c, flag);
    const MembershipVector images = schubert_membership(qs, v, flag);
    if (!membership_implies(sections, images)) ++stats.implication_failures;
    if (any_section(sections)) ++stats.lifts_on_some_section;
  }
  return stats;
}

LemmaScenarioStats run_lemma_scenarios(const QuadraticSpace& qs, int scenarios, Rng& rng) {
  LemmaScenarioStats stats;
  stats.scenarios = scenarios;
  for (int s = 0; s < scenarios; ++s) {
    const LemmaScenario sc = random_lemma_scenario(qs, rng);
    const IsotropicFlag flag = build_adapted_flag(qs, sc.w5, sc.lines, sc.theta1, sc.theta2);
    // Marked point through L_i lands on section 4-i and on no other:
    // L1 -> {xi3}, L2 -> {xi2}, L3 -> {xi1}.
    for (int i = 0; i < 3; ++i) {
      const Subspace& line = sc.lines[static_cast<std::size_t>(i)];
      const Subspace* theta = i == 0 ? &sc.theta1 : (i == 1 ? &sc.theta2 : nullptr);
      std::optional<Configuration> config;
      for (int attempt = 0; attempt < 200 && !config; ++attempt) {
        const MaximalIsotropic v = random_maximal_isotropic_through(qs, line, 1, rng);
        if (intersect(v.space, sc.w5.space, qs.p).dim() != 1) continue;
        const LiftResult r =
            theta ? lift_point_with_tangent(qs, v, flag, *theta) : lift_point(qs, v, flag);
        if (lifted(r)) config = *lifted(r);
      }
      ++stats.points_checked;
      if (!config) {
        stats.mismatches.push_back("scenario " + std::to_string(s) + ": no generic point through L" +
                                   std::to_string(i + 1));
        continue;
      }
      MembershipVector expected;
      expected.xi[static_cast<std::size_t>(2 - i)] = true;
      const MembershipVector got = section_membership(qs, *config, flag);
      if (got.xi == expected.xi && validate_configuration(qs, *config, flag).valid) {
        ++stats.correct_patterns;
      } else {
        std::string pattern;
        for (int k = 0; k < 10; ++k)
          if (got.xi[static_cast<std::size_t>(k)]) pattern += " xi" + std::to_string(k + 1);
        stats.mismatches.push_back("scenario " + std::to_string(s) + ", L" + std::to_string(i + 1) +
                                   ": sections{" + pattern + " }");
      }
    }
  }
  return stats;
}

namespace {

ReportEnvelope geom_exhaustive(Int q) {
  ReportEnvelope env;
  env.command = "geom";
  env.params["prime"] = q;
  env.params["mode"] = "exhaustive";

  const QuadraticSpace qs = split_space(q);
  const auto points = enumerate_spinor_points(q);
  const Int expected = (q + 1) * (q * q + 1) * (q * q * q + 1) * (q * q * q * q + 1);
  const MaximalIsotropic w5{reference_maximal(qs), 1};

  std::map<int, Int> census;
  bool all_odd = true;
  for (const MaximalIsotropic& v : points) {
    const int type = orbit_type(qs, v, w5);
    ++census[type];
    all_odd = all_odd && type % 2 == 1;
  }
  Json census_json = Json::object();
  for (const auto& [type, count] : census) census_json[std::to_string(type)] = count;

  env.findings["point_count"] = points.size();
  env.findings["expected_count"] = expected;
  env.findings["orbit_census"] = census_json;
  std::ostringstream rendered;
  rendered << "family-1 maximal isotropics over F_" << q << ": " << points.size() << " (expected " << expected
           << ")\n";
  for (const auto& [type, count] : census)
    rendered << "  dim(V & W5) = " << type << ": " << count << " points\n";
  env.rendered = rendered.str();

  auto add_check = [&](const std::string& name, bool pass, const std::string& summary) {
    CheckResult c;
    c.name = name;
    c.pass = pass;
    c.detail["summary"] = summary;
    env.checks.push_back(std::move(c));
  };
  add_check("point count matches product formula", static_cast<Int>(points.size()) == expected,
            std::to_string(points.size()) + " points");
  add_check("exactly one closed-orbit point", census.count(5) == 1 && census[5] == 1,
            "dim 5 count = " + std::to_string(census.count(5) ? census[5] : 0));
  std::string types_seen;
  for (const auto& [type, count] : census) types_seen += (types_seen.empty() ? "" : ", ") + std::to_string(type);
  add_check("all intersection dimensions odd", all_odd, "types seen: " + types_seen);
  const Int dense = census.count(1) ? census[1] : 0;
  Int rest = 0;
  for (const auto& [type, count] : census)
    if (type != 1) rest += count;
  add_check("dense orbit is the plurality class", dense > rest,
            std::to_string(dense) + " vs " + std::to_string(rest));
  if (q == 3) {
    const double fraction = static_cast<double>(census.count(3) ? census[3] : 0) / static_cast<double>(expected);
    const double scale = 1.0 / 27.0;
    add_check("codimension-3 orbit near q^-3 scale", fraction > scale / 3 && fraction < scale * 3,
              "fraction " + std::to_string(fraction));
  }
  return env;
}

ReportEnvelope geom_sampling(Int p, int trials, std::uint64_t seed) {
  ReportEnvelope env;
  env.command = "geom";
  env.params["prime"] = p;
  env.params["mode"] = "sampling";
  env.params["trials"] = trials;
  env.seed = seed;

  const QuadraticSpace qs = split_space(p);
  Rng rng(seed);

  auto add_check = [&](const std::string& name, bool pass, const std::string& summary) {
    CheckResult c;
    c.name = name;
    c.pass = pass;
    c.detail["summary"] = summary;
    env.checks.push_back(std::move(c));
  };

  // Sampling self-checks.
  const int sample_count = std::max(10, trials / 10);
  int isotropic_ok = 0, family_ok = 0;
  for (int t = 0; t < sample_count; ++t) {
    const int family = 1 + t % 2;
    const MaximalIsotropic m = random_maximal_isotropic(qs, family, rng);
    if (is_totally_isotropic(qs, m.space)) ++isotropic_ok;
    if (m.family == family && family_of(qs, m.space) == family) ++family_ok;
  }
  add_check("sampled maximals are isotropic and family-correct",
            isotropic_ok == sample_count && family_ok == sample_count,
            std::to_string(sample_count) + " samples");

  // Completion pairs, seeded with 4-spaces cut out of random maximals.
  const int completion_count = std::max(5, trials / 20);
  bool completions_ok = true;
  for (int t = 0; t < completion_count; ++t) {
    const MaximalIsotropic m = random_maximal_isotropic(qs, 1 + t % 2, rng);
    const Subspace u4 = span_of(m.space.basis.topRows(4), qs.p);
    const auto pair = complete_to_maximal(qs, u4);
    completions_ok = completions_ok && pair[0].family != pair[1].family &&
                     intersect(pair[0].space, pair[1].space, qs.p) == u4 &&
                     contains(pair[0].space, u4, qs.p) && contains(pair[1].space, u4, qs.p);
  }
  add_check("maximal completions come in opposite-family pairs meeting in the seed", completions_ok,
            std::to_string(completion_count) + " completions");

  // Grassmann identity on random subspace pairs.
  const int pair_count = std::max(10, trials / 10);
  bool grassmann_ok = true;
  for (int t = 0; t < pair_count; ++t) {
    const int ds = 1 + static_cast<int>(rng.below(5));
    const int dt = 1 + static_cast<int>(rng.below(5));
    IntMatrix rows_s(ds, qs.dim), rows_t(dt, qs.dim);
    for (int r = 0; r < ds; ++r) rows_s.row(r) = rng.field_vector(qs.dim, qs.p).transpose();
    for (int r = 0; r < dt; ++r) rows_t.row(r) = rng.field_vector(qs.dim, qs.p).transpose();
    const Subspace s = span_of(rows_s, qs.p), t2 = span_of(rows_t, qs.p);
    grassmann_ok = grassmann_ok && subspace_sum(s, t2, qs.p).dim() + intersect(s, t2, qs.p).dim() ==
                                       s.dim() + t2.dim();
  }
  add_check("dim(S+T) + dim(S&T) = dim S + dim T on random pairs", grassmann_ok,
            std::to_string(pair_count) + " pairs");

  // One worked lift, recorded in full as serialized configuration data.
  {
    Rng example_rng(seed ^ 0x9e3779b97f4a7c15ULL);
    for (int attempt = 0; attempt < 100; ++attempt) {
      const IsotropicFlag flag = random_isotropic_flag(qs, example_rng);
      const MaximalIsotropic v = random_maximal_isotropic(qs, 1, example_rng);
      const LiftResult r = lift_point(qs, v, flag);
      if (!lifted(r)) continue;
      Json example = Json::object();
      example["point"] = subspace_json(v.space);
      example["configuration"] = configuration_json(*lifted(r));
      example["sections"] = membership_json(section_membership(qs, *lifted(r), flag));
      example["images"] = membership_json(schubert_membership(qs, v, flag));
      env.findings["example_lift"] = std::move(example);
      break;
    }
  }

  // Lift round-trips.
  const LiftTrialStats lifts = run_lift_trials(qs, trials, rng);
  const bool lifts_clean = lifts.invalid_configurations == 0 && lifts.roundtrip_failures == 0 &&
                           lifts.implication_failures == 0 && lifts.successes > 0;
  const double failure_rate =
      lifts.trials == 0 ? 0.0 : static_cast<double>(lifts.generic_failures) / lifts.trials;
  add_check("successful lifts validate, round-trip and respect section image containment", lifts_clean,
            std::to_string(lifts.successes) + "/" + std::to_string(lifts.trials) + " generic");
  add_check("genericity failure rate below 5%", failure_rate < 0.05,
            std::to_string(lifts.generic_failures) + " rejections");

  // Adapted-flag scenarios.
  const int scenario_count = std::max(1, trials / 10);
  const LemmaScenarioStats lemma = run_lemma_scenarios(qs, scenario_count, rng);
  add_check("marked points meet exactly the expected section",
            lemma.correct_patterns == lemma.points_checked,
            std::to_string(lemma.correct_patterns) + "/" + std::to_string(lemma.points_checked) + " patterns");

  Json lift_json = Json::object();
  lift_json["trials"] = lifts.trials;
  lift_json["generic_failures"] = lifts.generic_failures;
  lift_json["successes"] = lifts.successes;
  lift_json["lifts_on_some_section"] = lifts.lifts_on_some_section;
  env.findings["lift_trials"] = lift_json;
  Json lemma_json = Json::object();
  lemma_json["scenarios"] = lemma.scenarios;
  lemma_json["points_checked"] = lemma.points_checked;
  lemma_json["correct_patterns"] = lemma.correct_patterns;
  lemma_json["mismatches"] = lemma.mismatches;
  env.findings["lemma_scenarios"] = lemma_json;
  return env;
}

}  // namespace

ReportEnvelope cmd_geom(Int prime, int trials, std::uint64_t seed) {
  if (!fp::is_prime(prime)) throw std::invalid_argument(std::to_string(prime) + " is not prime");
  if (prime == 2 || prime == 3) return geom_exhaustive(prime);
  if (prime > 65536) throw std::invalid_argument("sampling mode needs an odd prime <= 2^16");
  if (trials < 1) throw std::invalid_argument("trials must be positive");
  return geom_sampling(prime, trials, seed);
}

ReportEnvelope cmd_verify_all(std::uint64_t seed, const VerifyAllConfig& cfg) {
  ReportEnvelope env;
  env.command = "verify-all";
  env.seed = seed;
  env.params["lift_trials"] = cfg.lift_trials;
  env.params["lemma_scenarios"] = cfg.lemma_scenarios;

  auto add = [&](const std::string& name, bool pass, const std::string& summary) {
    CheckResult c;
    c.name = name;
    c.pass = pass;
    c.detail["summary"] = summary;
    env.checks.push_back(std::move(c));
  };

  // 1. Pairing table.
  {
    TableOptions opts;
    opts.reference_override = cfg.reference_override;
    const ReportEnvelope table = cmd_table(opts);
    add("pairing table reproduction", table.pass(),
        table.findings["match"].get<bool>() ? "exact" : "mismatch");
  }

  const IntMatrix& table = reference_pairing_table();

  // 2. Tangent coefficients.
  {
    const IntVector expected = to_vector({8, 7, 6, 6, 5, 5, 4, 4, 3, 2});
    const DivisorCombination sum = tangent_sum(pairing_table(spinor_root_system(),
                                                             gamma_sequence(spinor_root_system(), spinor_word())));
    add("tangent sum coefficients", same_vector(sum, expected), "(8,7,6,6,5,5,4,4,3,2)");
  }

  // 3. Extremal dimension, d in [3,12].
  {
    bool ok = true;
    for (Int d = 3; d <= 12 && ok; ++d) {
      const ArgmaxResult best = max_dimension_class(d, table);
      ok = best.unique && best.dim == 8 * d - 3 && same_vector(best.cls, expected_argmax(d));
      if (!ok) break;
      for (const CycleClass& a : enumerate_classes(d)) {
        if (same_vector(a, best.cls)) continue;
        const Int dim = mor_dimension(a, table);
        ok = ok && dim < best.dim && (d < 4 || dim + 3 < 8 * d);
      }
    }
    add("extremal class and strict gap for d in [3,12]", ok, "argmax (d-2,1,1,0,...), dim 8d-3");
  }

  // 4. Bookkeeping identity.
  {
    bool ok = true;
    for (Int d = 4; d <= 12; ++d) {
      const TotalSpaceDimension r = total_space_dimension(d);
      ok = ok && r.derived && r.total == 8 * d &&
           r.max_morphism_dim + r.flag_variety_dim - r.lift_fiber_dim == r.total;
    }
    const TotalSpaceDimension d3 = total_space_dimension(3);
    const TotalSpaceDimension d2 = total_space_dimension(2);
    ok = ok && !d3.derived && d3.annotated_dimension == 25 && !d2.derived && d2.annotated_dimension == 19;
    add("total space dimension (8d-3)+10-7 = 8d for d in [4,12]", ok, "with d=2,3 refused as annotated");
  }

  // 5. Planar locus bound.
  {
    bool ok = true;
    for (Int d = 2; d <= 20; ++d) {
      const PlanarBound b = planar_locus_bound(d);
      ok = ok && b.bound == 6 * d + 7 && b.planar_family == 3 * d + 6 && b.line_family == 2 * d + 6 &&
           b.plane_fiber_sections == 3 * d + 1 && b.line_fiber_sections == 3 * d + 3 &&
           ((8 * d > b.bound) == (d >= 4));
    }
    add("planar locus bound 6d+7 and 8d comparison", ok, "bound exceeded exactly from d = 4");
  }

  // 6. Positivity cone implies fibration hypotheses, exhaustively to degree 12.
  {
    bool ok = true;
    for (Int d = 3; d <= 12 && ok; ++d) {
      for (const CycleClass& a : enumerate_classes(d)) {
        for (int i = 1; i <= 10 && ok; ++i) {
          const DivisorCombination ti = relative_tangent(table, i);
          ok = a(i - 1) >= 0 && a.dot(ti) - a(i - 1) > 0;
        }
        if (!ok) break;
      }
    }
    add("a.xi_i >= 0 and a.(T_i - xi_i) > 0 on the cone, degree <= 12", ok, "exhaustive");
  }

  // 7. Census at q = 2.
  {
    const ReportEnvelope census = cmd_geom(2, 0, seed);
    add("finite census at q=2", census.pass(),
        census.findings["point_count"].dump() + " points, one closed-orbit point");
  }

  // 8. Lift round-trips at p = 101.
  {
    const QuadraticSpace qs = split_space(101);
    Rng rng(seed);
    const LiftTrialStats lifts = run_lift_trials(qs, cfg.lift_trials, rng);
    const bool ok = lifts.successes > 0 && lifts.invalid_configurations == 0 &&
                    lifts.roundtrip_failures == 0 && lifts.implication_failures == 0 &&
                    lifts.generic_failures * 20 < lifts.trials;
    add("lift round-trip at p=101", ok,
        std::to_string(lifts.successes) + "/" + std::to_string(lifts.trials) + " generic, " +
            std::to_string(lifts.generic_failures) + " rejected");
  }

  // 9. Adapted-flag scenarios at p = 101.
  {
    const QuadraticSpace qs = split_space(101);
    Rng rng(seed + 1);
    const LemmaScenarioStats lemma = run_lemma_scenarios(qs, cfg.lemma_scenarios, rng);
    add("marked-point section patterns {xi1},{xi2},{xi3}", lemma.correct_patterns == lemma.points_checked,
        std::to_string(lemma.correct_patterns) + "/" + std::to_string(lemma.points_checked));
  }

  // 10. Determinism of a representative seeded report.
  {
    const std::string a = cmd_geom(101, 50, seed).to_json().dump();
    const std::string b = cmd_geom(101, 50, seed).to_json().dump();
    add("seeded reports are byte-identical", a == b, std::to_string(a.size()) + " bytes");
  }

  return env;
}

}  // namespace spinor10
