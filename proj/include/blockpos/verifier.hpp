#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"

#include "blockpos/block_pattern.hpp"
#include "blockpos/core_matrix.hpp"
#include "blockpos/fraction.hpp"
#include "blockpos/preserver_fn.hpp"

namespace blockpos {

struct VerifyConfig {
  std::size_t max_n = 8;
  std::size_t samples_per_n = 500;
  std::uint64_t seed = 0;
  double tol = 1e-8;
  std::size_t probe_N = kDefaultProbeDepth;
  /// Random battery draws rank-one inputs only.
  bool rank_one_only = false;
};

/// ConfigError on max_n outside 1..64, negative or non-finite tol, or probe_N < 3.
void validate(const VerifyConfig& cfg);

enum class Outcome { PreservedWithinBudget, Refuted };
std::string to_string(Outcome o);

struct Counterexample {
  std::string provenance;  // "allones", "A_w(z)", "Mat1", "B_r(z)", "tensor_blowup", "random_psd", ...
  nlohmann::json params;
  std::size_t n = 0;
  BlockPattern pattern;
  HermitianMatrix input;
  HermitianMatrix output;
  double min_eig = 0.0;
};

struct Verdict {
  Outcome outcome = Outcome::PreservedWithinBudget;
  std::optional<Counterexample> counterexample;
  nlohmann::json stats = nlohmann::json::object();
};

nlohmann::json verdict_to_json(const Verdict& v);

/// Deterministic witness battery for n = 1..max_n, then seeded random PSD
/// inputs. The first output failing is_psd(., tol) in battery order is
/// reported. Inputs that are not PSD (tol 1e-10) or leave the domain are
/// skipped and counted. NotConjugateEquivariant if f or g fails the probe.
Verdict verify_preservation(const PreserverFunction& g, const PreserverFunction& f,
                            const PatternRule& rule, const Domain& domain, const VerifyConfig& cfg);

/// g = id, f = c id with c outside [-1/(K-1), 1] on a rule of regime R3a with
/// that K. Finds the first n with |T_n| = K, takes one representative per
/// block, and reports f_*[x 1_K] (x = 1 if it lies in the domain, else rho/2).
Verdict refute_scalar_outside_interval(const PatternRule& rule, std::size_t K, Fraction c,
                                       const Domain& domain, std::size_t probe_n = kDefaultProbeDepth);

struct CorrelationReport {
  bool passed = true;
  std::size_t samples = 0;
  double worst_min_eig = 0.0;   // min over samples of min_eig(n Id - C)
  double worst_lambda_max = 0.0;  // max over samples of lambda_max(C)
  bool trace_route = true;      // lambda_max(C) <= tr C = n
  bool gershgorin_route = true;  // n Id - C diagonally dominant row-wise
};

/// Checks n Id - C >= 0 for each correlation matrix C, with both bounds.
CorrelationReport correlation_bound_check(std::size_t n, std::span<const HermitianMatrix> samples,
                                          double tol = 1e-8);

/// Positive definite matrix split into contiguous diagonal blocks.
struct BlockSample {
  HermitianMatrix a;
  std::vector<std::size_t> block_sizes;
};

struct InductionReport {
  bool passed = false;
  bool precondition = false;       // c in [-1/k, 0)
  bool identity_holds = false;     // (f[A'] - c^2 A')/(1 - c^2) == h[A'], h = c' id
  bool interval_equivalence = false;
  bool complement_psd = false;     // A' - B A_{k+1}^{-1} B^* is PSD
  bool output_psd = false;         // f_{T_n}[A] is PSD
  Fraction c_prime;
  double max_residual = 0.0;
};

/// c' = c / (1 + c) exactly; c must differ from -1.
Fraction induction_c_prime(Fraction c);

/// c in [-1/k, 0)  <=>  c' in [-1/(k-1), 0), evaluated exactly. Requires k >= 2.
bool induction_interval_equivalence(Fraction c, std::size_t k);

/// A has k+1 blocks; A' is the leading k blocks. InvalidArgument when the
/// block sizes do not describe A or k < 2.
InductionReport induction_step_check(Fraction c, std::size_t k, const BlockSample& sample);

}  // namespace blockpos
