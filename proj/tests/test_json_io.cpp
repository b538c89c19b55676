#include <cstdio>
#include <fstream>
#include <random>

#include "doctest.h"

#include "blockpos/json_io.hpp"
#include "blockpos/sampling.hpp"
#include "oracles.hpp"

using namespace blockpos;
using oracle::error_code;

TEST_CASE("matrix round trip is bit-identical") {
  std::mt19937_64 rng(3);
  for (std::size_t n = 1; n <= 8; ++n) {
    const HermitianMatrix a = random_psd(rng, n, Domain::disc(1.0));
    const HermitianMatrix b = matrix_from_json(json::parse(matrix_to_json(a).dump()));
    CHECK(a == b);
  }
}

TEST_CASE("matrix JSON accepts bare numbers and rejects bad shapes") {
  const HermitianMatrix m = matrix_from_json(json::parse(R"({"n": 2, "entries": [[1, [0, 1]], [[0, -1], 2]]})"));
  CHECK(m(0, 1) == Complex(0, 1));
  CHECK(m(1, 1) == Complex(2));
  CHECK(error_code([] { matrix_from_json(json::parse(R"({"n": 2, "entries": [[1, 2], [0, 1]]})")); }) ==
        ErrorCode::AsymmetricInput);
  CHECK(error_code([] { matrix_from_json(json::parse(R"({"n": 2, "entries": [[1, 2]]})")); }));
  CHECK(error_code([] { matrix_from_json(json::parse(R"({"entries": 3})")); }));
}

TEST_CASE("pattern JSON is 1-based") {
  const BlockPattern p = pattern_from_json(json::parse(R"({"n": 3, "blocks": [[1, 2], [3]]})"));
  CHECK(p == normalize({{0, 1}, {2}}, 3));
  CHECK(pattern_to_json(p) == json::parse(R"({"n": 3, "blocks": [[1, 2], [3]]})"));
  CHECK(error_code([] { pattern_from_json(json::parse(R"({"n": 3, "blocks": [[0]]})")); }));
}

TEST_CASE("rules round trip through JSON") {
  const std::vector<PatternRule> all{rules::empty(), rules::all_singletons(), rules::singleton_subset({0, 2}),
                                     rules::contiguous_partition(3), rules::proper_subpartition(2),
                                     rules::pair_partition(), rules::random_partition(4, 99),
                                     rules::overlapping_chain()};
  for (const auto& r : all) {
    const PatternRule back = rule_from_json(json::parse(rule_to_json(r).dump()));
    CHECK(back.kind == r.kind);
    CHECK(back.flags == r.flags);
    for (std::size_t n = 1; n <= 10; ++n) CHECK(back.at(n) == r.at(n));
  }
}

TEST_CASE("rule flags override and explicit patterns") {
  const PatternRule r = rule_from_json(json::parse(R"({
    "kind": "explicit",
    "params": {"patterns": [{"n": 3, "blocks": [[1, 2]]}, {"n": 4, "blocks": [[1, 2], [3, 4]]}]},
    "flags": {"eventually_nonempty": true, "all_singletons": false, "has_block_ge2_at": 3,
              "overlap_at": null, "covers_all_n": false, "K": "inf"}})"));
  CHECK(r.at(3) == normalize({{0, 1}}, 3));
  CHECK(r.at(4) == normalize({{0, 1}, {2, 3}}, 4));
  CHECK(r.at(5).empty());
  CHECK_FALSE(r.flags.K);
  CHECK(r.flags.has_block_ge2_at == std::optional<std::size_t>(3));
  CHECK(error_code([] { rule_from_json(json::parse(R"({"kind": "nope"})")); }));
}

TEST_CASE("functions round trip through JSON") {
  const std::vector<PreserverFunction> fns{
      PreserverFunction::identity(), PreserverFunction::zero(), PreserverFunction::herz_monomial(1.5, 2, 1),
      PreserverFunction::herz_series({{0, 0, 1}, {1, 1, 0.5}}, 5),
      PreserverFunction::scalar_multiple(Fraction(-1, 2), PreserverFunction::identity()),
      PreserverFunction::scalar_multiple(0.3, PreserverFunction::herz_monomial(1, 0, 2))};
  const std::vector<Complex> zs{0.0, 0.4, Complex(0.2, -0.7), Complex(-1.1, 0.3)};
  for (const auto& f : fns) {
    const json j = function_to_json(f);
    const PreserverFunction back = function_from_json(json::parse(j.dump()));
    CHECK(function_to_json(back) == j);
    for (Complex z : zs) CHECK(back(z) == f(z));
  }
  const json exact = function_to_json(PreserverFunction::scalar_multiple(Fraction(-1, 3), PreserverFunction::identity()));
  CHECK(exact["params"]["c"] == "-1/3");
  CHECK(function_from_json(json::parse(R"({"variant": "scalar_multiple", "params": {"c": "-1/2"}})"))(2.0) == Complex(-1.0));
  CHECK(error_code([] { function_from_json(json::parse(R"({"variant": "herz_series", "params": {"coeffs": [[1, 0, -1]]}})")); }) ==
        ErrorCode::NegativeCoefficient);
}

TEST_CASE("domains round trip through JSON") {
  for (const Domain& d : {Domain::disc(1.0), Domain::open_sym(2.5), Domain::half_open_nonneg(0.5),
                          Domain::open_pos(std::numeric_limits<double>::infinity())})
    CHECK(domain_from_json(json::parse(domain_to_json(d).dump())) == d);
  CHECK(domain_from_json(json::parse(R"({"kind": "disc", "rho": "inf"})")) ==
        Domain::disc(std::numeric_limits<double>::infinity()));
  CHECK(error_code([] { domain_from_json(json::parse(R"({"kind": "disc", "rho": 0})")); }));
  CHECK(error_code([] { domain_from_json(json::parse(R"({"kind": "square", "rho": 1})")); }));
}

TEST_CASE("family JSON carries exact interval endpoints") {
  Regime r;
  r.kind = RegimeKind::R3aPartitionAllFiniteK;
  r.K = 3;
  const json j = family_to_json(admissible_family(r));
  CHECK(j["c_interval"] == json::array({"-1/2", "1"}));
  CHECK(j["regime"] == "R3a-PartitionAll-FiniteK");
}

TEST_CASE("reading a missing or malformed file is a parse error") {
  CHECK(error_code([] { read_json_file("/nonexistent/file.json"); }) == ErrorCode::ParseError);
  const std::string path = "blockpos_bad.json";
  std::ofstream(path) << "{not json";
  CHECK(error_code([&] { read_json_file(path); }) == ErrorCode::ParseError);
  std::remove(path.c_str());
}
