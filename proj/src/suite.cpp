#include "blockpos/suite.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "blockpos/entrywise_op.hpp"
#include "blockpos/json_io.hpp"
#include "blockpos/sampling.hpp"
#include "blockpos/witnesses.hpp"

namespace blockpos {

using nlohmann::json;

namespace {

const Domain kUnitDisc = Domain::disc(1.0);

double uniform(std::mt19937_64& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

int uniform_int(std::mt19937_64& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

std::mt19937_64 case_rng(const VerifyConfig& cfg, std::string_view family, std::size_t i) {
  return std::mt19937_64(stream_seed(cfg.seed, 0, family, i));
}

PreserverFunction random_herz_monomial(std::mt19937_64& rng, int max_power) {
  const double alpha = uniform(rng, 0.5, 2.0);
  const int m = uniform_int(rng, 0, max_power);
  return PreserverFunction::herz_monomial(alpha, m, uniform_int(rng, 0, max_power));
}

PreserverFunction random_builtin(std::mt19937_64& rng, const PreserverFunction& g) {
  switch (uniform_int(rng, 0, 5)) {
    case 0: return random_herz_monomial(rng, 3);
    case 1: {
      const double a = uniform(rng, 0.0, 1.0), b = uniform(rng, 0.0, 1.0), c = uniform(rng, 0.0, 1.0);
      return PreserverFunction::herz_series({{0, 0, a}, {1, 0, b}, {1, 1, c}});
    }
    case 2: return PreserverFunction::scalar_multiple(uniform(rng, -1.0, 1.0), g);
    case 3: return PreserverFunction::identity();
    case 4: return PreserverFunction::zero();
    default: return PreserverFunction::scalar_multiple(uniform(rng, -1.5, 1.5), PreserverFunction::identity());
  }
}

std::vector<PatternRule> mixed_rules(std::uint64_t seed) {
  return {rules::empty(),           rules::all_singletons(),          rules::contiguous_partition(3),
          rules::proper_subpartition(2), rules::pair_partition(),       rules::overlapping_chain(),
          rules::singleton_subset({0, 2}), rules::random_partition(3, seed)};
}

double max_entry_gap(const HermitianMatrix& a, const HermitianMatrix& b) {
  double gap = 0.0;
  for (std::size_t i = 0; i < a.entries().size(); ++i) gap = std::max(gap, std::abs(a.entries()[i] - b.entries()[i]));
  return gap;
}

std::size_t dim_cap(const VerifyConfig& cfg, std::size_t cap) { return std::min(cap, cfg.max_n); }

CriterionResult schur_closure(const VerifyConfig& cfg) {
  const std::size_t cap = dim_cap(cfg, 8);
  double worst = std::numeric_limits<double>::infinity();
  std::size_t failures = 0;
  const std::size_t pairs = 1000;
  for (std::size_t i = 0; i < pairs; ++i) {
    auto rng = case_rng(cfg, "schur_closure", i);
    const std::size_t n = 1 + i % cap;
    const HermitianMatrix a = random_psd(rng, n, kUnitDisc);
    const HermitianMatrix b = random_psd(rng, n, kUnitDisc);
    const double lo = eig_extremes(schur_product(a, b)).min_eig;
    worst = std::min(worst, lo);
    if (lo < -cfg.tol) ++failures;
  }
  return {1, "Schur product closure", failures == 0,
          {{"pairs", pairs}, {"max_n", cap}, {"worst_min_eig", worst}, {"failures", failures}}};
}

CriterionResult lonely_diagonal_law(const VerifyConfig& cfg) {
  double max_err = 0.0;
  std::size_t cases = 0, mismatches = 0;
  for (std::size_t n = 2; n <= 6; ++n) {
    const auto nn = static_cast<std::int64_t>(n);
    const ClosedInterval admissible{Fraction(-1, nn - 1), Fraction(1)};
    std::vector<Fraction> cs;
    for (std::int64_t j = 0; j <= 40; ++j) cs.emplace_back(-120 + 6 * j, 100);
    cs.push_back(admissible.lo);
    cs.push_back(admissible.hi);
    for (double x : {0.1, 0.5, 0.9}) {
      for (const Fraction& c : cs) {
        const auto f = PreserverFunction::scalar_multiple(c, PreserverFunction::identity());
        const HermitianMatrix out = apply_star(f, HermitianMatrix::ones(n).scaled(x), kUnitDisc);
        const double cd = c.to_double();
        std::vector<double> expected(n - 1, (1.0 - cd) * x);
        expected.push_back((1.0 + (n - 1.0) * cd) * x);
        std::sort(expected.begin(), expected.end());
        const auto eig = eigenvalues(out);
        for (std::size_t i = 0; i < n; ++i) max_err = std::max(max_err, std::abs(eig[i] - expected[i]));
        if (is_psd(out, cfg.tol).is_psd != admissible.contains(c)) ++mismatches;
        ++cases;
      }
    }
  }
  return {2, "Lonely-diagonal eigenvalue law", max_err <= 1e-10 && mismatches == 0,
          {{"cases", cases}, {"max_eigenvalue_error", max_err}, {"psd_mismatches", mismatches}}};
}

CriterionResult partition_interval(const VerifyConfig& cfg) {
  bool ok = true;
  json per_k = json::array();
  for (std::size_t k = 2; k <= 4; ++k) {
    const auto kk = static_cast<std::int64_t>(k);
    const PatternRule rule = rules::random_partition(k, splitmix64(cfg.seed ^ k));
    const Fraction boundary(-1, kk - 1);
    const auto f = PreserverFunction::scalar_multiple(boundary, PreserverFunction::identity());
    double worst = std::numeric_limits<double>::infinity();
    std::size_t failures = 0, samples = 0;
    const std::string family = "partition_k" + std::to_string(k);
    for (std::size_t n = 2; n <= cfg.max_n; ++n) {
      const BlockPattern t = rule.at(n);
      for (std::size_t i = 0; i < cfg.samples_per_n; ++i) {
        std::mt19937_64 rng(stream_seed(cfg.seed, n, family, i));
        const HermitianMatrix a = random_psd(rng, n, kUnitDisc);
        const PsdReport r = is_psd(apply({PreserverFunction::identity(), f, t, kUnitDisc}, a), cfg.tol);
        worst = std::min(worst, r.min_eig);
        if (!r.is_psd) ++failures;
        ++samples;
      }
    }

    const Fraction outside = boundary - Fraction(1, 20);
    const auto f_out = PreserverFunction::scalar_multiple(outside, PreserverFunction::identity());
    VerifyConfig vc = cfg;
    vc.max_n = std::max(cfg.max_n, k);
    vc.samples_per_n = 0;
    const Verdict v = verify_preservation(PreserverFunction::identity(), f_out, rule, kUnitDisc, vc);
    bool necessity = v.outcome == Outcome::Refuted && v.counterexample &&
                     v.counterexample->provenance == "allones";
    double reported = 0.0, expected = 0.0;
    if (necessity) {
      const double x = v.counterexample->params.at("x").get<double>();
      reported = v.counterexample->min_eig;
      expected = (1.0 + (k - 1.0) * outside.to_double()) * x;
      necessity = std::abs(reported - expected) <= 1e-10;
    }
    const Verdict star = refute_scalar_outside_interval(rule, k, outside, kUnitDisc, cfg.probe_N);
    const double star_x = star.counterexample->params.at("x").get<double>();
    const double star_expected = (1.0 + (k - 1.0) * outside.to_double()) * star_x;
    const bool star_ok = std::abs(star.counterexample->min_eig - star_expected) <= 1e-10;

    const bool k_ok = failures == 0 && necessity && star_ok;
    ok = ok && k_ok;
    per_k.push_back({{"k", k},
                     {"c_boundary", boundary.to_string()},
                     {"samples", samples},
                     {"worst_min_eig", samples ? worst : 0.0},
                     {"sufficiency_failures", failures},
                     {"c_outside", outside.to_string()},
                     {"refuted_by", v.counterexample ? json(v.counterexample->provenance) : json(nullptr)},
                     {"reported_eig", reported},
                     {"expected_eig", expected},
                     {"star_eig", star.counterexample->min_eig},
                     {"passed", k_ok}});
  }
  return {3, "Partition interval: sufficiency and necessity", ok, {{"per_k", per_k}}};
}

CriterionResult overlap_determinant(const VerifyConfig& cfg) {
  const BlockPattern t3 = rules::overlapping_chain().at(3);
  double max_rel = 0.0;
  for (std::size_t i = 0; i < 200; ++i) {
    auto rng = case_rng(cfg, "overlap_det", i);
    const auto g = random_herz_monomial(rng, 3);
    const auto f = random_builtin(rng, g);
    const double r = uniform(rng, 0.1, 0.9);
    const Complex z = std::polar(r * uniform(rng, 0.0, 1.0), uniform(rng, 0.0, 2.0 * std::numbers::pi));
    const HermitianMatrix out = apply({g, f, t3, kUnitDisc}, witness_Br(r, z, kUnitDisc).matrix);
    const double det = determinant(out).real();
    const double expected = -g(r).real() * std::norm(f(z) - g(z));
    const double scale = std::max(1.0, std::pow(out.max_abs_entry(), 3));
    max_rel = std::max(max_rel, std::abs(det - expected) / scale);
  }
  return {4, "Overlap determinant identity", max_rel <= 1e-10, {{"cases", 200}, {"max_relative_error", max_rel}}};
}

CriterionResult complement_determinant(const VerifyConfig& cfg) {
  const BlockPattern t3 = normalize({{0, 1}, {2}}, 3);
  const std::vector<std::size_t> last{2};
  double max_rel = 0.0, max_scalar_det = 0.0;
  for (std::size_t i = 0; i < 200; ++i) {
    auto rng = case_rng(cfg, "complement_det", i);
    const auto g = random_herz_monomial(rng, 2);
    const double aw = uniform(rng, 0.3, 0.95);
    const Complex w = std::polar(aw, uniform(rng, 0.0, 2.0 * std::numbers::pi));
    const Complex z = std::polar(aw * uniform(rng, 0.0, 1.0), uniform(rng, 0.0, 2.0 * std::numbers::pi));
    const Complex z1 = z * std::conj(w) / aw;
    const HermitianMatrix input = witness_Aw(w, z, kUnitDisc).matrix;
    const double gw = g(aw).real();
    const double c = uniform(rng, -1.0, 1.0);
    const auto f_general = random_builtin(rng, g);
    const auto f_scalar = PreserverFunction::scalar_multiple(c, g);
    for (const auto* f : {&f_general, &f_scalar}) {
      const HermitianMatrix comp = schur_complement(apply({g, *f, t3, kUnitDisc}, input), last);
      const double det = determinant(comp).real();
      const double expected = -std::norm((*f)(aw) * g(z1) - gw * (*f)(z1)) / (gw * gw);
      const double scale = std::max(1.0, std::pow(comp.max_abs_entry(), 2));
      max_rel = std::max(max_rel, std::abs(det - expected) / scale);
      if (f == &f_scalar) max_scalar_det = std::max(max_scalar_det, std::abs(det) / scale);
    }
  }
  return {5, "Block-complement determinant identity", max_rel <= 1e-10 && max_scalar_det <= 1e-10,
          {{"cases", 200}, {"max_relative_error", max_rel}, {"max_scalar_multiple_det", max_scalar_det}}};
}

CriterionResult decomposition_identities(const VerifyConfig& cfg) {
  const auto rule_set = mixed_rules(cfg.seed);
  const std::size_t cap = dim_cap(cfg, 8);
  double max_rel = 0.0;
  for (std::size_t i = 0; i < 200; ++i) {
    auto rng = case_rng(cfg, "decomposition", i);
    const std::size_t n = 1 + i % cap;
    const PatternRule& rule = rule_set[i % rule_set.size()];
    const auto g = random_herz_monomial(rng, 3);
    const auto f = random_builtin(rng, g);
    const HermitianMatrix a = random_psd(rng, n, kUnitDisc);
    const OperatorSpec spec{g, f, rule.at(n), kUnitDisc};
    const HermitianMatrix direct = apply(spec, a);
    const Decomposition d = decompose(spec, a);
    max_rel = std::max(max_rel, max_entry_gap(direct, d.f_everywhere + d.masked_gap) /
                                    std::max(1.0, direct.max_abs_entry()));
  }

  double tensor_rel = 0.0;
  std::size_t tensor_cases = 0;
  for (std::size_t i = 0; i < 50; ++i) {
    auto rng = case_rng(cfg, "tensor", i);
    const std::size_t b = 1 + i % 4;
    const auto g = random_herz_monomial(rng, 3);
    const auto f = random_builtin(rng, g);
    const HermitianMatrix a = random_psd(rng, b, kUnitDisc);
    const HermitianMatrix f_all = apply({f, f, empty_pattern(b), kUnitDisc}, a);
    const HermitianMatrix gap = decompose({g, f, singletons_pattern(b), kUnitDisc}, a).masked_gap;
    for (std::size_t m = 1; m <= 4; ++m) {
      const HermitianMatrix lhs =
          apply({g, f, singletons_pattern(m * b), kUnitDisc}, kron(HermitianMatrix::ones(m), a));
      const HermitianMatrix rhs = kron(HermitianMatrix::ones(m), f_all) + kron(HermitianMatrix::identity(m), gap);
      tensor_rel = std::max(tensor_rel, max_entry_gap(lhs, rhs) / std::max(1.0, lhs.max_abs_entry()));
      ++tensor_cases;
    }
  }
  return {6, "Decomposition and tensor identities", max_rel <= 1e-14 && tensor_rel <= 1e-14,
          {{"cases", 200},
           {"max_relative_error", max_rel},
           {"tensor_cases", tensor_cases},
           {"tensor_max_relative_error", tensor_rel}}};
}

CriterionResult mask_factorization_check(const VerifyConfig& cfg) {
  const auto rule_set = mixed_rules(cfg.seed);
  const std::size_t cap = dim_cap(cfg, 8);
  double max_rel = 0.0;
  std::size_t mismatches = 0;
  for (std::size_t i = 0; i < 200; ++i) {
    auto rng = case_rng(cfg, "mask_factorization", i);
    const std::size_t n = 1 + i % cap;
    const double c = uniform(rng, -1.2, 1.2);
    const HermitianMatrix a = random_psd(rng, n, kUnitDisc);
    const OperatorSpec spec{PreserverFunction::identity(),
                            PreserverFunction::scalar_multiple(c, PreserverFunction::identity()),
                            rule_set[i % rule_set.size()].at(n), kUnitDisc};
    try {
      const HermitianMatrix factored = mask_factorization(spec, a);
      max_rel = std::max(max_rel, max_entry_gap(apply(spec, a), factored) / std::max(1.0, a.max_abs_entry()));
    } catch (const Error& e) {
      if (e.code() != ErrorCode::FactorizationMismatch) throw;
      ++mismatches;
    }
  }
  return {7, "Hadamard mask factorization", mismatches == 0 && max_rel <= 1e-14,
          {{"cases", 200}, {"max_relative_error", max_rel}, {"mismatches", mismatches}}};
}

CriterionResult albert_check(const VerifyConfig& cfg) {
  const Domain pos = Domain::open_pos(1.0);
  const std::size_t cap = dim_cap(cfg, 6);
  std::size_t failures = 0;
  double worst = std::numeric_limits<double>::infinity(), smallest_eps = 1.0;
  for (std::size_t i = 0; i < 100; ++i) {
    auto rng = case_rng(cfg, "albert", i);
    const std::size_t n = 1 + i % cap;
    const HermitianMatrix a = random_psd(rng, n, pos);
    const AlbertEmbedding e = albert_embed_auto(a, pos);
    std::vector<std::size_t> lead(n);
    for (std::size_t k = 0; k < n; ++k) lead[k] = k;
    const PsdReport r = is_psd(e.matrix, kWitnessPsdTol);
    const bool entries_ok = std::all_of(e.matrix.entries().begin(), e.matrix.entries().end(),
                                        [&](Complex z) { return pos.contains(z); });
    worst = std::min(worst, r.min_eig);
    smallest_eps = std::min(smallest_eps, e.eps);
    if (!r.is_psd || !entries_ok || !(e.matrix.principal(lead) == a)) ++failures;
  }
  return {8, "Albert embedding", failures == 0,
          {{"cases", 100}, {"failures", failures}, {"worst_min_eig", worst}, {"smallest_eps", smallest_eps}}};
}

CriterionResult correlation_check(const VerifyConfig& cfg) {
  const std::size_t cap = dim_cap(cfg, 8);
  bool ok = true;
  double worst = std::numeric_limits<double>::infinity(), worst_lmax_gap = -std::numeric_limits<double>::infinity();
  bool trace = true, gersh = true;
  for (std::size_t i = 0; i < 200; ++i) {
    auto rng = case_rng(cfg, "correlation", i);
    const std::size_t n = 1 + i % cap;
    const HermitianMatrix c = random_correlation(rng, n);
    const CorrelationReport r = correlation_bound_check(n, std::span(&c, 1), cfg.tol);
    ok = ok && r.passed;
    trace = trace && r.trace_route;
    gersh = gersh && r.gershgorin_route;
    worst = std::min(worst, r.worst_min_eig);
    worst_lmax_gap = std::max(worst_lmax_gap, r.worst_lambda_max - static_cast<double>(n));
  }
  return {9, "Correlation bound", ok,
          {{"cases", 200},
           {"worst_min_eig", worst},
           {"max_lambda_max_minus_n", worst_lmax_gap},
           {"trace_route", trace},
           {"gershgorin_route", gersh}}};
}

CriterionResult regime_table(const VerifyConfig& cfg) {
  struct Row {
    PatternRule rule;
    std::string row;
    std::string family;
    std::optional<std::pair<std::string, std::string>> interval;
    std::optional<std::string> constraint;
  };
  const std::string herz = admissible_family({RegimeKind::R1Empty, std::nullopt}).description;
  const std::vector<Row> rows{
      {rules::empty(), "1", herz, std::nullopt, std::nullopt},
      {rules::all_singletons(), "2", herz, std::nullopt, "f(x) ≤ x on I∩ℝ≥0"},
      {rules::contiguous_partition(3), "3a", "linear: f(z) = c z", std::pair{"-1/2", "1"}, std::nullopt},
      {rules::proper_subpartition(2), "3b", "linear: f(z) = c z", std::pair{"0", "1"}, std::nullopt},
      {rules::pair_partition(), "3b", "linear: f(z) = c z", std::pair{"0", "1"}, std::nullopt},
      {rules::overlapping_chain(), "4", "identity only", std::nullopt, "f = id"},
      {rules::singleton_subset({0, 2}), "2", herz, std::nullopt, "f(x) ≤ x on I∩ℝ≥0"},
  };
  bool ok = true;
  json out = json::array();
  for (const auto& row : rows) {
    const Regime regime = classify_sequence(row.rule, cfg.probe_N);
    const FamilyDescriptor fam = admissible_family(regime);
    std::optional<std::pair<std::string, std::string>> interval;
    if (fam.c_interval) interval = std::pair{fam.c_interval->lo.to_string(), fam.c_interval->hi.to_string()};
    const bool row_ok = regime.table_row() == row.row && fam.description == row.family &&
                        interval == row.interval && fam.constraint == row.constraint;
    ok = ok && row_ok;
    json entry = family_to_json(fam);
    entry["rule"] = row.rule.kind;
    entry["expected_row"] = row.row;
    entry["passed"] = row_ok;
    out.push_back(std::move(entry));
  }
  return {10, "Regime classification table", ok, {{"rules", out}}};
}

CriterionResult dominance_necessity(const VerifyConfig& cfg) {
  const Domain plane = Domain::disc(std::numeric_limits<double>::infinity());
  const auto g = PreserverFunction::identity();
  const auto f = PreserverFunction::scalar_multiple(2.0, PreserverFunction::identity());
  VerifyConfig vc = cfg;
  vc.samples_per_n = 0;
  json cases = json::array();
  bool ok = true;
  struct Expect {
    PatternRule rule;
    double off, corner, det;
  };
  for (const auto& [rule, off, corner, det] :
       {Expect{rules::all_singletons(), 2.0, 1.0, -3.0}, Expect{rules::singleton_subset({0}), 2.0, 2.0, -2.0}}) {
    const Verdict v = verify_preservation(g, f, rule, plane, vc);
    bool case_ok = v.outcome == Outcome::Refuted && v.counterexample && v.counterexample->provenance == "allones" &&
                   v.counterexample->n == 2 && v.counterexample->params.at("x").get<double>() == 1.0;
    double measured_det = std::numeric_limits<double>::quiet_NaN();
    if (case_ok) {
      const HermitianMatrix& o = v.counterexample->output;
      measured_det = o(0, 0).real() * o(1, 1).real() - std::norm(o(0, 1));
      case_ok = o(0, 0) == Complex(1.0) && o(0, 1) == Complex(off) && o(1, 1) == Complex(corner) &&
                measured_det == det && std::abs(determinant(o).real() - det) <= 1e-12;
    }
    ok = ok && case_ok;
    cases.push_back({{"rule", rule.kind},
                     {"outcome", to_string(v.outcome)},
                     {"output", v.counterexample ? matrix_to_json(v.counterexample->output) : json(nullptr)},
                     {"determinant", measured_det},
                     {"expected_determinant", det},
                     {"passed", case_ok}});
  }
  return {11, "Dominance necessity", ok, {{"cases", cases}}};
}

CriterionResult induction_algebra(const VerifyConfig& cfg) {
  bool ok = true;
  double max_residual = 0.0;
  std::size_t cases = 0, failures = 0, equivalence_points = 0;
  for (std::size_t k = 2; k <= 3; ++k) {
    const auto kk = static_cast<std::int64_t>(k);
    const std::vector<Fraction> inside{Fraction(-1, kk), Fraction(-1, kk + 1), Fraction(-1, 2 * kk),
                                       Fraction(-1, 10), Fraction(-1, 7)};
    for (std::size_t i = 0; i < 50; ++i) {
      auto rng = case_rng(cfg, "induction_k" + std::to_string(k), i);
      std::vector<std::size_t> sizes(k + 1);
      std::size_t n = 0;
      for (auto& s : sizes) n += (s = static_cast<std::size_t>(uniform_int(rng, 1, 2)));
      const BlockSample sample{random_positive_definite(rng, n, 1.0), sizes};
      const InductionReport r = induction_step_check(inside[i % inside.size()], k, sample);
      max_residual = std::max(max_residual, r.max_residual);
      if (!r.passed) ++failures;
      ++cases;
    }
    for (const Fraction& c : {Fraction(-1, kk), Fraction(-1, kk) - Fraction(1, 100), Fraction(-1, kk - 1),
                              Fraction(-1, 3), Fraction(-3, 4), Fraction(0), Fraction(1, 5), Fraction(-2)}) {
      if (!induction_interval_equivalence(c, k)) ok = false;
      ++equivalence_points;
    }
  }
  const Fraction c1 = induction_c_prime(Fraction(-1, 3));
  const Fraction c2 = induction_c_prime(Fraction(-1, 4));
  ok = ok && failures == 0 && c1 == Fraction(-1, 2) && c2 == Fraction(-1, 3);
  return {12, "Induction-step algebra", ok,
          {{"cases", cases},
           {"failures", failures},
           {"max_residual", max_residual},
           {"equivalence_points", equivalence_points},
           {"c_prime_of_-1/3", c1.to_string()},
           {"c_prime_of_-1/4", c2.to_string()}}};
}

json criteria_json(const std::vector<CriterionResult>& rs) {
  json out = json::array();
  for (const auto& r : rs)
    out.push_back({{"id", r.id}, {"name", r.name}, {"passed", r.passed}, {"measured", r.measured}});
  return out;
}

}  // namespace

bool SuiteReport::all_passed() const {
  return std::all_of(criteria.begin(), criteria.end(), [](const auto& c) { return c.passed; });
}

json config_to_json(const VerifyConfig& cfg) {
  return {{"max_n", cfg.max_n},     {"samples_per_n", cfg.samples_per_n}, {"seed", cfg.seed},
          {"tol", cfg.tol},         {"probe_N", cfg.probe_N},             {"rank_one_only", cfg.rank_one_only}};
}

json SuiteReport::to_json() const {
  return {{"config", config_to_json(cfg)}, {"criteria", criteria_json(criteria)}, {"all_passed", all_passed()}};
}

CriterionResult run_criterion(int id, const VerifyConfig& cfg) {
  validate(cfg);
  switch (id) {
    case 1: return schur_closure(cfg);
    case 2: return lonely_diagonal_law(cfg);
    case 3: return partition_interval(cfg);
    case 4: return overlap_determinant(cfg);
    case 5: return complement_determinant(cfg);
    case 6: return decomposition_identities(cfg);
    case 7: return mask_factorization_check(cfg);
    case 8: return albert_check(cfg);
    case 9: return correlation_check(cfg);
    case 10: return regime_table(cfg);
    case 11: return dominance_necessity(cfg);
    case 12: return induction_algebra(cfg);
    default: throw Error(ErrorCode::InvalidArgument, "criterion id must be 1..12");
  }
}

SuiteReport run_theorem_suite(const VerifyConfig& cfg) {
  validate(cfg);
  const auto pass = [&] {
    std::vector<CriterionResult> rs;
    for (int id = 1; id <= 12; ++id) rs.push_back(run_criterion(id, cfg));
    return rs;
  };
  SuiteReport report{cfg, pass()};
  const std::vector<CriterionResult> again = pass();
  const std::string first = criteria_json(report.criteria).dump();
  const std::string second = criteria_json(again).dump();
  report.criteria.push_back({13, "Determinism", first == second,
                             {{"bytes", first.size()}, {"identical", first == second}}});
  return report;
}

}  // namespace blockpos
