#include "blockpos/verifier.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <map>
#include <numbers>
#include <set>

#include "blockpos/entrywise_op.hpp"
#include "blockpos/json_io.hpp"
#include "blockpos/sampling.hpp"
#include "blockpos/witnesses.hpp"

namespace blockpos {

using nlohmann::json;

namespace {

constexpr double kInputPsdTol = kWitnessPsdTol;

double domain_scale(const Domain& d) { return d.finite() ? d.rho : 1.0; }

std::vector<Complex> phases(const Domain& d) {
  switch (d.kind) {
    case DomainKind::Disc:
      return {1.0, Complex(0.0, 1.0), std::polar(1.0, 2.0 * std::numbers::pi / 3.0), -1.0};
    case DomainKind::OpenSym: return {1.0, -1.0};
    default: return {1.0};
  }
}

std::vector<Complex> w_phases(const Domain& d) {
  switch (d.kind) {
    case DomainKind::Disc: return {1.0, std::polar(1.0, std::numbers::pi / 3.0)};
    case DomainKind::OpenSym: return {1.0, -1.0};
    default: return {1.0};
  }
}

std::vector<double> x_grid(const Domain& d) {
  const double first = d.contains(1.0) ? 1.0 : d.rho / 2.0;
  std::vector<double> xs{first, d.finite() ? 0.9 * d.rho : 2.0, 0.1 * first};
  std::vector<double> out;
  for (double x : xs)
    if (d.contains(x) && std::find(out.begin(), out.end(), x) == out.end()) out.push_back(x);
  return out;
}

bool in_domain(const HermitianMatrix& m, const Domain& d) {
  return std::all_of(m.entries().begin(), m.entries().end(), [&](Complex z) { return d.contains(z); });
}

/// Places w on the given positions of an n x n input; zero padding when the
/// domain allows it, repeated Albert embeddings otherwise.
std::optional<HermitianMatrix> embed(const HermitianMatrix& w, const std::vector<std::size_t>& pos,
                                     std::size_t n, const Domain& d) {
  std::vector<std::size_t> sigma(n);
  std::vector<char> used(n, 0);
  for (std::size_t t = 0; t < pos.size(); ++t) {
    sigma[pos[t]] = t;
    used[pos[t]] = 1;
  }
  std::size_t next = pos.size();
  for (std::size_t i = 0; i < n; ++i)
    if (!used[i]) sigma[i] = next++;
  if (d.contains_zero()) return pad_embed(w, n, sigma, d);
  HermitianMatrix e = w;
  try {
    while (e.n() < n) e = albert_embed_auto(e, d).matrix;
  } catch (const Error& err) {
    if (err.code() == ErrorCode::EpsTooLarge || err.code() == ErrorCode::NonPositiveEntries) return std::nullopt;
    throw;
  }
  return permute_conjugate(e, sigma);
}

using Triple = std::vector<std::size_t>;

/// (a, b, c): a, b share a block; c shares none with a or b. One c per kind
/// (uncovered, covered) for the first two members of each block, both orders.
std::vector<Triple> block_triples(const BlockPattern& t, const Mask& mask) {
  std::set<Triple> seen;
  std::vector<Triple> out;
  const std::size_t n = t.n();
  for (const auto& block : t.blocks()) {
    if (block.size() < 2) continue;
    const std::size_t a = block[0], b = block[1];
    for (int covered = 0; covered <= 1; ++covered) {
      for (std::size_t c = 0; c < n; ++c) {
        if (c == a || c == b || mask(a, c) || mask(b, c) || mask(c, c) != (covered == 1)) continue;
        for (Triple tr : {Triple{a, b, c}, Triple{b, a, c}})
          if (seen.insert(tr).second) out.push_back(tr);
        break;
      }
    }
  }
  return out;
}

/// (m1, m, m2): m1 ~ m and m ~ m2 share blocks, m1 and m2 share none.
std::vector<Triple> overlap_triples(const BlockPattern& t, const Mask& mask) {
  std::set<Triple> seen;
  std::vector<Triple> out;
  const auto& blocks = t.blocks();
  for (std::size_t u = 0; u < blocks.size(); ++u) {
    for (std::size_t v = 0; v < blocks.size(); ++v) {
      if (u == v) continue;
      bool found = false;
      for (std::size_t m : blocks[u]) {
        if (std::find(blocks[v].begin(), blocks[v].end(), m) == blocks[v].end()) continue;
        for (std::size_t m1 : blocks[u]) {
          for (std::size_t m2 : blocks[v]) {
            if (m1 == m || m2 == m || m1 == m2 || mask(m1, m2)) continue;
            Triple tr{m1, m, m2};
            if (seen.insert(tr).second) out.push_back(tr);
            found = true;
            break;
          }
          if (found) break;
        }
        if (found) break;
      }
    }
  }
  return out;
}

json positions_json(const Triple& p) {
  json out = json::array();
  for (auto i : p) out.push_back(i + 1);
  return out;
}

struct Candidate {
  std::string provenance;
  json params;
  HermitianMatrix input;
};

class Battery {
 public:
  Battery(const PreserverFunction& g, const PreserverFunction& f, const Domain& domain, double tol)
      : g_(g), f_(f), domain_(domain), tol_(tol) {}

  std::optional<Counterexample> run(std::size_t n, const BlockPattern& t, Candidate c) {
    ++families_[c.provenance];
    ++per_n_[n];
    std::optional<Counterexample> found = evaluate(n, t, c, skipped_);
    return found;
  }

  /// Thread-safe evaluation; counts a skipped input through `skipped`.
  std::optional<Counterexample> evaluate(std::size_t n, const BlockPattern& t, Candidate& c,
                                         std::size_t& skipped) const {
    if (!in_domain(c.input, domain_) || !is_psd(c.input, kInputPsdTol).is_psd) {
      ++skipped;
      return std::nullopt;
    }
    HermitianMatrix out = apply({g_, f_, t, domain_}, c.input);
    const PsdReport r = is_psd(out, tol_);
    if (r.is_psd) return std::nullopt;
    return Counterexample{std::move(c.provenance), std::move(c.params), n, t, std::move(c.input),
                          std::move(out), r.min_eig};
  }

  void count(const std::string& family, std::size_t n, std::size_t k, std::size_t skipped) {
    families_[family] += k;
    per_n_[n] += k;
    skipped_ += skipped;
  }

  json stats() const {
    json fam = json::object();
    for (const auto& [k, v] : families_) fam[k] = v;
    json pn = json::object();
    for (const auto& [k, v] : per_n_) pn[std::to_string(k)] = v;
    return {{"families", fam}, {"per_n", pn}, {"skipped_inputs", skipped_}};
  }

 private:
  const PreserverFunction& g_;
  const PreserverFunction& f_;
  const Domain& domain_;
  double tol_;
  std::map<std::string, std::size_t> families_;
  std::map<std::size_t, std::size_t> per_n_;
  std::size_t skipped_ = 0;
};

/// Builds a witness, swallowing constructor rejections for parameter
/// combinations that the domain does not admit.
template <typename Make>
std::optional<Witness> try_make(Make&& make) {
  try {
    return make();
  } catch (const Error& e) {
    switch (e.code()) {
      case ErrorCode::OutOfDomain:
      case ErrorCode::InvalidArgument:
      case ErrorCode::NotPsd:
      case ErrorCode::ZeroW: return std::nullopt;
      default: throw;
    }
  }
}

std::optional<Counterexample> deterministic_at(Battery& battery, std::size_t n, const BlockPattern& t,
                                               const Domain& d) {
  const double s = domain_scale(d);
  for (double x : x_grid(d)) {
    auto w = try_make([&] { return witness_allones(x, n, d); });
    if (!w) continue;
    if (auto ce = battery.run(n, t, {w->provenance, w->params, w->matrix})) return ce;
  }

  const Mask mask = mask_matrix(t);
  const auto place = [&](const Witness& w, const Triple& pos) -> std::optional<Candidate> {
    auto m = embed(w.matrix, pos, n, d);
    if (!m) return std::nullopt;
    json params = w.params;
    params["positions"] = positions_json(pos);
    return Candidate{w.provenance, std::move(params), std::move(*m)};
  };

  const auto triples = block_triples(t, mask);
  const bool real_only = d.kind == DomainKind::HalfOpenNonneg || d.kind == DomainKind::OpenPos;
  for (const auto& pos : triples) {
    for (double aw : {0.5 * s, 0.9 * s}) {
      for (Complex pw : w_phases(d)) {
        const Complex w = aw * pw;
        for (double u : {0.5, 1.0}) {
          for (Complex pz : phases(d)) {
            const Complex z = aw * u * pz;
            if (real_only && z.real() <= 0.0) continue;
            auto wit = try_make([&] { return witness_Aw(w, z, d); });
            if (!wit) continue;
            if (auto c = place(*wit, pos))
              if (auto ce = battery.run(n, t, std::move(*c))) return ce;
          }
        }
        for (double t_val : {aw, (aw + 0.95 * s) / 2.0}) {
          auto wit = try_make([&] { return witness_Mat1_input(w, t_val, d); });
          if (!wit) continue;
          if (auto c = place(*wit, pos))
            if (auto ce = battery.run(n, t, std::move(*c))) return ce;
        }
      }
    }
  }

  for (const auto& pos : overlap_triples(t, mask)) {
    for (double r : {0.5 * s, 0.9 * s}) {
      for (double u : {0.5, 1.0}) {
        for (Complex pz : phases(d)) {
          const Complex z = r * u * pz;
          auto wit = try_make([&] { return witness_Br(r, z, d); });
          if (!wit) continue;
          if (auto c = place(*wit, pos))
            if (auto ce = battery.run(n, t, std::move(*c))) return ce;
        }
      }
    }
  }

  for (std::size_t m = 2; m <= 4; ++m) {
    if (n % m != 0) continue;
    const std::size_t b = n / m;
    std::vector<Complex> v(b);
    const double amp = std::sqrt(0.8 * s);
    for (std::size_t j = 0; j < b; ++j) {
      switch (d.kind) {
        case DomainKind::Disc: v[j] = std::polar(amp, 2.0 * std::numbers::pi * j / (b + 1.0)); break;
        case DomainKind::OpenSym: v[j] = j % 2 == 0 ? amp : -amp; break;
        default: v[j] = amp * (1.0 - j / (2.0 * b)); break;
      }
    }
    const Witness base = rank_one_gram(v);
    Witness w = tensor_blowup(m, base.matrix);
    w.params["v"] = base.params["v"];
    if (auto ce = battery.run(n, t, {w.provenance, w.params, w.matrix})) return ce;
  }
  return std::nullopt;
}

std::optional<Counterexample> random_at(Battery& battery, std::size_t n, const BlockPattern& t,
                                        const Domain& d, const VerifyConfig& cfg) {
  const std::size_t count = cfg.samples_per_n;
  if (count == 0) return std::nullopt;
  std::vector<std::optional<Counterexample>> found(count);
  std::vector<std::size_t> skipped(count, 0);
  std::vector<std::exception_ptr> errors(count);

#pragma omp parallel for schedule(dynamic, 8)
  for (std::size_t i = 0; i < count; ++i) {
    try {
      std::mt19937_64 rng(stream_seed(cfg.seed, n, "random_psd", i));
      Candidate c{"random_psd", {{"seed", cfg.seed}, {"index", i}}, random_psd(rng, n, d, cfg.rank_one_only)};
      found[i] = battery.evaluate(n, t, c, skipped[i]);
    } catch (...) {
      errors[i] = std::current_exception();
    }
  }

  std::size_t skipped_total = 0;
  for (std::size_t i = 0; i < count; ++i) {
    skipped_total += skipped[i];
    if (errors[i]) std::rethrow_exception(errors[i]);
    if (found[i]) {
      battery.count("random_psd", n, i + 1, skipped_total);
      return found[i];
    }
  }
  battery.count("random_psd", n, count, skipped_total);
  return std::nullopt;
}

}  // namespace

void validate(const VerifyConfig& cfg) {
  if (cfg.max_n < 1 || cfg.max_n > kMaxEigenDimension)
    throw Error(ErrorCode::ConfigError, "max_n must lie in 1.." + std::to_string(kMaxEigenDimension));
  if (!(cfg.tol >= 0.0) || !std::isfinite(cfg.tol)) throw Error(ErrorCode::ConfigError, "tol must be finite and >= 0");
  if (cfg.probe_N < 3) throw Error(ErrorCode::ConfigError, "probe_N must be >= 3");
}

std::string to_string(Outcome o) {
  return o == Outcome::Refuted ? "Refuted" : "PreservedWithinBudget";
}

json verdict_to_json(const Verdict& v) {
  json out = {{"outcome", to_string(v.outcome)}, {"stats", v.stats}};
  if (v.counterexample) {
    const auto& c = *v.counterexample;
    out["counterexample"] = {{"provenance", c.provenance},
                             {"params", c.params},
                             {"n", c.n},
                             {"pattern", pattern_to_json(c.pattern)},
                             {"input", matrix_to_json(c.input)},
                             {"matrix", matrix_to_json(c.output)},
                             {"min_eig", c.min_eig}};
  } else {
    out["counterexample"] = nullptr;
  }
  return out;
}

Verdict verify_preservation(const PreserverFunction& g, const PreserverFunction& f, const PatternRule& rule,
                            const Domain& domain, const VerifyConfig& cfg) {
  validate(cfg);
  if ((rule.flags.has_block_ge2_at || rule.flags.overlap_at) && cfg.max_n < 3)
    throw Error(ErrorCode::ConfigError, "max_n must be >= 3 for rules with blocks of size >= 2");
  const Regime regime = classify_sequence(rule, cfg.probe_N);

  const auto probe = equivariance_probe(domain);
  if (!conjugate_equivariance_check(f, probe))
    throw Error(ErrorCode::NotConjugateEquivariant, "f(conj z) != conj f(z) on the probe set");
  if (!conjugate_equivariance_check(g, probe))
    throw Error(ErrorCode::NotConjugateEquivariant, "g(conj z) != conj g(z) on the probe set");

  Battery battery(g, f, domain, cfg.tol);
  Verdict verdict;
  const auto finish = [&](std::optional<Counterexample> ce, const char* stage) {
    verdict.stats = battery.stats();
    verdict.stats["regime"] = regime.tag();
    verdict.stats["max_n"] = cfg.max_n;
    verdict.stats["truncated_at_n"] = cfg.max_n;
    verdict.stats["samples_per_n"] = cfg.samples_per_n;
    verdict.stats["rank_one_only"] = cfg.rank_one_only;
    verdict.stats["stage"] = stage;
    if (ce) {
      verdict.outcome = Outcome::Refuted;
      verdict.counterexample = std::move(ce);
    }
    return verdict;
  };

  for (std::size_t n = 1; n <= cfg.max_n; ++n)
    if (auto ce = deterministic_at(battery, n, rule.at(n), domain)) return finish(std::move(ce), "deterministic");
  for (std::size_t n = 1; n <= cfg.max_n; ++n)
    if (auto ce = random_at(battery, n, rule.at(n), domain, cfg)) return finish(std::move(ce), "random");
  return finish(std::nullopt, "complete");
}

Verdict refute_scalar_outside_interval(const PatternRule& rule, std::size_t K, Fraction c, const Domain& domain,
                                       std::size_t probe_n) {
  const Regime regime = classify_sequence(rule, probe_n);
  if (regime.kind != RegimeKind::R3aPartitionAllFiniteK || !regime.K || *regime.K != K)
    throw Error(ErrorCode::RegimeMismatch, "rule is " + regime.tag() + ", not R3a with K=" + std::to_string(K));
  const ClosedInterval admissible{Fraction(-1, static_cast<std::int64_t>(K) - 1), Fraction(1)};
  if (admissible.contains(c))
    throw Error(ErrorCode::CNotOutside, "c=" + c.to_string() + " lies in [" + admissible.lo.to_string() + ", 1]");

  const double x = domain.contains(1.0) ? 1.0 : domain.rho / 2.0;
  const auto f = PreserverFunction::scalar_multiple(c, PreserverFunction::identity());
  for (std::size_t n = 1; n <= kMaxEigenDimension; ++n) {
    const BlockPattern t = rule.at(n);
    if (t.blocks().size() != K) continue;
    std::vector<std::size_t> reps;
    json reps_json = json::array();
    for (const auto& b : t.blocks()) {
      reps.push_back(b.front());
      reps_json.push_back(b.front() + 1);
    }
    const HermitianMatrix full = apply({PreserverFunction::identity(), f, t, domain}, HermitianMatrix::ones(n).scaled(x));
    HermitianMatrix star = full.principal(reps);
    const double min_eig = eigenvalues(star).front();
    Verdict v;
    v.outcome = Outcome::Refuted;
    v.counterexample = Counterexample{"allones_star",
                                      {{"x", x}, {"K", K}, {"c", c.to_string()}, {"pattern_n", n},
                                       {"representatives", reps_json}},
                                      K,
                                      singletons_pattern(K),
                                      HermitianMatrix::ones(K).scaled(x),
                                      std::move(star),
                                      min_eig};
    v.stats = {{"regime", regime.tag()}, {"pattern_n", n}};
    return v;
  }
  throw Error(ErrorCode::RegimeMismatch, "no n <= " + std::to_string(kMaxEigenDimension) + " with |T_n| = K");
}

CorrelationReport correlation_bound_check(std::size_t n, std::span<const HermitianMatrix> samples, double tol) {
  CorrelationReport rep;
  rep.samples = samples.size();
  rep.worst_min_eig = std::numeric_limits<double>::infinity();
  const double nd = static_cast<double>(n);
  for (const auto& c : samples) {
    if (c.n() != n) throw Error(ErrorCode::DimensionMismatch, "correlation sample has wrong dimension");
    const HermitianMatrix d = HermitianMatrix::identity(n).scaled(nd) - c;
    const auto ext = eig_extremes(c);
    const double lo = eig_extremes(d).min_eig;
    rep.worst_min_eig = std::min(rep.worst_min_eig, lo);
    rep.worst_lambda_max = std::max(rep.worst_lambda_max, ext.max_eig);
    double trace = 0.0;
    for (std::size_t i = 0; i < n; ++i) trace += c(i, i).real();
    if (ext.max_eig > trace + tol) rep.trace_route = false;
    for (std::size_t i = 0; i < n; ++i) {
      double off = 0.0;
      for (std::size_t j = 0; j < n; ++j)
        if (j != i) off += std::abs(d(i, j));
      if (d(i, i).real() + tol < off) rep.gershgorin_route = false;
    }
    if (lo < -tol) rep.passed = false;
  }
  if (samples.empty()) rep.worst_min_eig = 0.0;
  rep.passed = rep.passed && rep.trace_route && rep.gershgorin_route;
  return rep;
}

Fraction induction_c_prime(Fraction c) {
  if (c == Fraction(-1)) throw Error(ErrorCode::InvalidArgument, "c' undefined at c = -1");
  return c / (Fraction(1) + c);
}

bool induction_interval_equivalence(Fraction c, std::size_t k) {
  if (k < 2) throw Error(ErrorCode::InvalidArgument, "k must be >= 2");
  const auto kk = static_cast<std::int64_t>(k);
  const bool lhs = Fraction(-1, kk) <= c && c < Fraction(0);
  if (c == Fraction(-1)) return !lhs;
  const Fraction cp = induction_c_prime(c);
  const bool rhs = Fraction(-1, kk - 1) <= cp && cp < Fraction(0);
  return lhs == rhs;
}

namespace {

BlockPattern contiguous_blocks(std::span<const std::size_t> sizes) {
  std::vector<Block> blocks;
  std::size_t start = 0;
  for (auto s : sizes) {
    Block b(s);
    for (std::size_t i = 0; i < s; ++i) b[i] = start + i;
    blocks.push_back(std::move(b));
    start += s;
  }
  return normalize(std::move(blocks), start);
}

}  // namespace

InductionReport induction_step_check(Fraction c, std::size_t k, const BlockSample& sample) {
  if (k < 2) throw Error(ErrorCode::InvalidArgument, "k must be >= 2");
  if (sample.block_sizes.size() != k + 1)
    throw Error(ErrorCode::InvalidArgument, "sample needs k+1 blocks");
  std::size_t total = 0;
  for (auto s : sample.block_sizes) {
    if (s == 0) throw Error(ErrorCode::InvalidArgument, "empty block");
    total += s;
  }
  if (total != sample.a.n()) throw Error(ErrorCode::InvalidArgument, "block sizes do not sum to n");

  InductionReport rep;
  const auto kk = static_cast<std::int64_t>(k);
  rep.precondition = Fraction(-1, kk) <= c && c < Fraction(0);
  rep.interval_equivalence = induction_interval_equivalence(c, k);
  if (c == Fraction(-1)) return rep;
  rep.c_prime = induction_c_prime(c);

  const std::size_t m = total - sample.block_sizes.back();
  std::vector<std::size_t> lead(m);
  for (std::size_t i = 0; i < m; ++i) lead[i] = i;
  std::vector<std::size_t> last(total - m);
  for (std::size_t i = m; i < total; ++i) last[i - m] = i;

  const Domain unbounded = Domain::disc(std::numeric_limits<double>::infinity());
  const HermitianMatrix a_prime = sample.a.principal(lead);
  const BlockPattern t_m = contiguous_blocks(std::span(sample.block_sizes).first(k));
  const BlockPattern t_n = contiguous_blocks(sample.block_sizes);
  const auto id = PreserverFunction::identity();
  const double cd = c.to_double();
  const auto f = PreserverFunction::scalar_multiple(c, id);
  const auto h = PreserverFunction::scalar_multiple(rep.c_prime, id);

  const HermitianMatrix lhs = (apply({id, f, t_m, unbounded}, a_prime) - a_prime.scaled(cd * cd)).scaled(1.0 / (1.0 - cd * cd));
  const HermitianMatrix rhs = apply({id, h, t_m, unbounded}, a_prime);
  for (std::size_t i = 0; i < lhs.entries().size(); ++i)
    rep.max_residual = std::max(rep.max_residual, std::abs(lhs.entries()[i] - rhs.entries()[i]));
  rep.identity_holds = rep.max_residual <= 1e-12 * std::max(1.0, a_prime.max_abs_entry());

  rep.complement_psd = is_psd(schur_complement(sample.a, last)).is_psd;
  rep.output_psd = is_psd(apply({id, f, t_n, unbounded}, sample.a)).is_psd;
  rep.passed = rep.precondition && rep.identity_holds && rep.interval_equivalence && rep.complement_psd &&
               rep.output_psd;
  return rep;
}

}  // namespace blockpos
