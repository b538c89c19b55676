// blockpos: classify pattern rules, verify (g, f) pairs, build witnesses and
// run the acceptance suite. JSON goes to stdout (or --out), a short summary to
// stderr unless --json is given.
//
// Exit codes: 0 ok/preserved, 1 suite failure, 2 usage or input error, 3 refuted.

#include <chrono>
#include <ctime>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "blockpos/json_io.hpp"
#include "blockpos/suite.hpp"
#include "blockpos/verifier.hpp"
#include "blockpos/witnesses.hpp"

using namespace blockpos;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitSuiteFailure = 1;
constexpr int kExitInputError = 2;
constexpr int kExitRefuted = 3;

struct Common {
  std::string out;
  bool json_only = false;
};

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

void emit(const Common& common, json body, const std::string& summary) {
  body["timestamp"] = utc_timestamp();
  const std::string text = body.dump(2) + "\n";
  if (common.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(common.out);
    if (!f) throw Error(ErrorCode::ConfigError, "cannot write " + common.out);
    f << text;
  }
  if (!common.json_only) std::cerr << summary << "\n";
}

Domain domain_or_default(const std::string& path) {
  if (path.empty()) return Domain::disc(std::numeric_limits<double>::infinity());
  return domain_from_json(read_json_file(path));
}

PreserverFunction function_or_identity(const std::string& path) {
  if (path.empty()) return PreserverFunction::identity();
  return function_from_json(read_json_file(path));
}

void add_config_flags(CLI::App* cmd, VerifyConfig& cfg) {
  cmd->add_option("--seed", cfg.seed, "master seed");
  cmd->add_option("--max-n", cfg.max_n, "largest dimension tried");
  cmd->add_option("--samples", cfg.samples_per_n, "random samples per dimension");
  cmd->add_option("--tol", cfg.tol, "PSD tolerance");
  cmd->add_option("--probe-n", cfg.probe_N, "dimensions materialized when checking rule flags");
  cmd->add_flag("--rank-one-only", cfg.rank_one_only, "random battery uses rank-one inputs only");
}

Complex parse_complex(const std::vector<double>& v, const char* name) {
  if (v.size() == 1) return {v[0], 0.0};
  if (v.size() == 2) return {v[0], v[1]};
  throw Error(ErrorCode::ParseError, std::string("--") + name + " takes RE [IM]");
}

std::string verdict_summary(const Verdict& v) {
  if (v.outcome == Outcome::PreservedWithinBudget) return "PreservedWithinBudget";
  const auto& c = *v.counterexample;
  return "Refuted by " + c.provenance + " at n=" + std::to_string(c.n) + ", min_eig=" + json(c.min_eig).dump();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Entrywise positivity preservers with forbidden diagonal blocks"};
  app.require_subcommand(1);
  app.fallthrough();
  Common common;
  app.add_option("--out", common.out, "write JSON here instead of stdout");
  app.add_flag("--json", common.json_only, "JSON only, no summary on stderr");

  VerifyConfig cfg;
  std::string rule_path, g_path, f_path, domain_path;

  auto* classify = app.add_subcommand("classify", "regime and admissible family of a pattern rule");
  classify->add_option("--rule", rule_path, "rule JSON")->required();
  classify->add_option("--probe-n", cfg.probe_N, "dimensions materialized when checking rule flags");

  auto* verify = app.add_subcommand("verify", "witness battery and random search for a (g, f) pair");
  verify->add_option("--rule", rule_path, "rule JSON")->required();
  verify->add_option("--g", g_path, "g JSON (default identity)");
  verify->add_option("--f", f_path, "f JSON")->required();
  verify->add_option("--domain", domain_path, "domain JSON (default the whole plane)");
  add_config_flags(verify, cfg);

  std::size_t K = 0;
  std::string c_text;
  auto* refute = app.add_subcommand("refute", "all-ones witness for f = c id with c outside [-1/(K-1), 1]");
  refute->add_option("--rule", rule_path, "rule JSON")->required();
  refute->add_option("--K", K, "number of blocks")->required();
  refute->add_option("--c", c_text, "scalar, e.g. -11/20 or -0.55")->required();
  refute->add_option("--domain", domain_path, "domain JSON (default the whole plane)");
  refute->add_option("--probe-n", cfg.probe_N, "dimensions materialized when checking rule flags");

  auto* suite = app.add_subcommand("suite", "run all acceptance criteria");
  add_config_flags(suite, cfg);

  std::string witness_name, matrix_path;
  double x = 1.0, r = 1.0, t = 1.0, eps = 0.0;
  std::size_t n = 1, m = 2;
  std::vector<double> w_arg, z_arg;
  std::vector<std::size_t> sigma;
  auto* witness = app.add_subcommand("witness", "build a witness matrix");
  witness->add_option("name", witness_name, "allones | Aw | Br | Mat1 | albert | tensor | pad")
      ->required()
      ->check(CLI::IsMember({"allones", "Aw", "Br", "Mat1", "albert", "tensor", "pad"}));
  witness->add_option("--x", x, "allones scale");
  witness->add_option("--n", n, "dimension (allones, pad)");
  witness->add_option("--r", r, "B_r diagonal");
  witness->add_option("--t", t, "Mat1 corner");
  witness->add_option("--w", w_arg, "RE [IM]")->expected(1, 2);
  witness->add_option("--z", z_arg, "RE [IM]")->expected(1, 2);
  witness->add_option("--m", m, "tensor copies");
  witness->add_option("--eps", eps, "albert eps (default: automatic)");
  witness->add_option("--sigma", sigma, "pad permutation, 1-based");
  witness->add_option("--matrix", matrix_path, "matrix JSON (albert, tensor, pad)");
  witness->add_option("--domain", domain_path, "domain JSON (default the whole plane)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInputError;
  }

  try {
    if (classify->parsed()) {
      const PatternRule rule = rule_from_json(read_json_file(rule_path));
      const Regime regime = classify_sequence(rule, cfg.probe_N);
      json body = family_to_json(admissible_family(regime));
      body["rule"] = rule_to_json(rule);
      emit(common, body, regime.tag() + " (table row " + regime.table_row() + ")");
      return kExitOk;
    }
    if (verify->parsed()) {
      const PatternRule rule = rule_from_json(read_json_file(rule_path));
      const Verdict v = verify_preservation(function_or_identity(g_path), function_from_json(read_json_file(f_path)),
                                            rule, domain_or_default(domain_path), cfg);
      json body = verdict_to_json(v);
      body["config"] = config_to_json(cfg);
      emit(common, body, verdict_summary(v));
      return v.outcome == Outcome::Refuted ? kExitRefuted : kExitOk;
    }
    if (refute->parsed()) {
      const PatternRule rule = rule_from_json(read_json_file(rule_path));
      const Verdict v = refute_scalar_outside_interval(rule, K, Fraction::parse(c_text),
                                                       domain_or_default(domain_path), cfg.probe_N);
      emit(common, verdict_to_json(v), verdict_summary(v));
      return kExitRefuted;
    }
    if (suite->parsed()) {
      const SuiteReport report = run_theorem_suite(cfg);
      std::string summary;
      for (const auto& c : report.criteria)
        summary += (c.passed ? "PASS " : "FAIL ") + std::to_string(c.id) + " " + c.name + "\n";
      summary += report.all_passed() ? "all criteria passed" : "some criteria failed";
      emit(common, report.to_json(), summary);
      return report.all_passed() ? kExitOk : kExitSuiteFailure;
    }
    if (witness->parsed()) {
      const Domain domain = domain_or_default(domain_path);
      HermitianMatrix mat;
      std::string provenance = witness_name;
      json params = json::object();
      if (witness_name == "allones") {
        const Witness w = witness_allones(x, n, domain);
        mat = w.matrix, provenance = w.provenance, params = w.params;
      } else if (witness_name == "Aw") {
        const Witness w = witness_Aw(parse_complex(w_arg, "w"), parse_complex(z_arg, "z"), domain);
        mat = w.matrix, provenance = w.provenance, params = w.params;
      } else if (witness_name == "Br") {
        const Witness w = witness_Br(r, parse_complex(z_arg, "z"), domain);
        mat = w.matrix, provenance = w.provenance, params = w.params;
      } else if (witness_name == "Mat1") {
        const Witness w = witness_Mat1_input(parse_complex(w_arg, "w"), t, domain);
        mat = w.matrix, provenance = w.provenance, params = w.params;
      } else {
        if (matrix_path.empty()) throw Error(ErrorCode::ParseError, witness_name + " needs --matrix");
        const HermitianMatrix a = matrix_from_json(read_json_file(matrix_path));
        if (witness_name == "albert") {
          if (eps > 0.0) {
            mat = albert_embed(a, eps, domain);
          } else {
            const AlbertEmbedding e = albert_embed_auto(a, domain);
            mat = e.matrix;
            eps = e.eps;
          }
          params = {{"eps", eps}};
        } else if (witness_name == "tensor") {
          const Witness w = tensor_blowup(m, a);
          mat = w.matrix, provenance = w.provenance, params = w.params;
        } else {
          std::vector<std::size_t> perm;
          if (sigma.empty()) {
            for (std::size_t i = 0; i < n; ++i) perm.push_back(i);
          } else {
            for (auto s : sigma) {
              if (s == 0) throw Error(ErrorCode::InvalidPermutation, "--sigma is 1-based");
              perm.push_back(s - 1);
            }
          }
          mat = pad_embed(a, n, perm, domain);
          params = {{"n", n}};
        }
      }
      const PsdReport psd = is_psd(mat, kWitnessPsdTol);
      emit(common,
           {{"witness", provenance}, {"params", params}, {"matrix", matrix_to_json(mat)},
            {"psd", psd_report_to_json(psd)}},
           provenance + ": " + std::to_string(mat.n()) + "x" + std::to_string(mat.n()) +
               ", min_eig=" + json(psd.min_eig).dump());
      return kExitOk;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}
