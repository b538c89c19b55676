#include "blockpos/json_io.hpp"

#include <cmath>
#include <fstream>
#include <limits>

namespace blockpos {

namespace {

[[noreturn]] void parse_fail(const std::string& what) { throw Error(ErrorCode::ParseError, what); }

const json& require(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) parse_fail(std::string("missing key \"") + key + "\"");
  return j.at(key);
}

double number(const json& j, const char* what) {
  if (!j.is_number()) parse_fail(std::string(what) + " must be a number");
  return j.get<double>();
}

std::size_t index_value(const json& j, const char* what) {
  if (!j.is_number_integer() || j.get<long long>() < 0)
    parse_fail(std::string(what) + " must be a nonnegative integer");
  return j.get<std::size_t>();
}

json optional_index(const std::optional<std::size_t>& v) { return v ? json(*v) : json(nullptr); }

std::optional<std::size_t> optional_index_from(const json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return index_value(j.at(key), key);
}

json scalar_json(double c, const std::optional<Fraction>& exact) {
  return exact ? json(exact->to_string()) : json(c);
}

}  // namespace

json complex_to_json(Complex z) { return json::array({z.real(), z.imag()}); }

Complex complex_from_json(const json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number())
    return {j[0].get<double>(), j[1].get<double>()};
  parse_fail("complex value must be a number or [re, im]");
}

json matrix_to_json(const HermitianMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.n(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.n(); ++j) row.push_back(complex_to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return {{"n", m.n()}, {"entries", std::move(rows)}};
}

HermitianMatrix matrix_from_json(const json& j) {
  const std::size_t n = index_value(require(j, "n"), "n");
  const json& rows = require(j, "entries");
  if (!rows.is_array() || rows.size() != n) throw Error(ErrorCode::NonSquare, "row count != n");
  RawGrid raw(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!rows[i].is_array() || rows[i].size() != n)
      throw Error(ErrorCode::NonSquare, "row " + std::to_string(i + 1) + " length != n");
    for (std::size_t k = 0; k < n; ++k) raw(i, k) = complex_from_json(rows[i][k]);
  }
  return symmetrize(raw);
}

json pattern_to_json(const BlockPattern& p) {
  json blocks = json::array();
  for (const auto& b : p.blocks()) {
    json block = json::array();
    for (auto v : b) block.push_back(v + 1);
    blocks.push_back(std::move(block));
  }
  return {{"n", p.n()}, {"blocks", std::move(blocks)}};
}

BlockPattern pattern_from_json(const json& j) {
  const std::size_t n = index_value(require(j, "n"), "n");
  std::vector<Block> raw;
  for (const auto& block : require(j, "blocks")) {
    Block b;
    for (const auto& v : block) {
      const std::size_t idx = index_value(v, "block index");
      if (idx == 0) throw Error(ErrorCode::BlockOutOfRange, "indices are 1-based");
      b.push_back(idx - 1);
    }
    raw.push_back(std::move(b));
  }
  return normalize(std::move(raw), n);
}

json flags_to_json(const SequenceFlags& f) {
  return {{"eventually_nonempty", f.eventually_nonempty},
          {"all_singletons", f.all_singletons},
          {"has_block_ge2_at", optional_index(f.has_block_ge2_at)},
          {"overlap_at", optional_index(f.overlap_at)},
          {"covers_all_n", f.covers_all_n},
          {"K", f.K ? json(*f.K) : json("inf")}};
}

SequenceFlags flags_from_json(const json& j) {
  SequenceFlags f;
  f.eventually_nonempty = require(j, "eventually_nonempty").get<bool>();
  f.all_singletons = require(j, "all_singletons").get<bool>();
  f.has_block_ge2_at = optional_index_from(j, "has_block_ge2_at");
  f.overlap_at = optional_index_from(j, "overlap_at");
  f.covers_all_n = require(j, "covers_all_n").get<bool>();
  const json& k = require(j, "K");
  if (k.is_string() && k.get<std::string>() == "inf")
    f.K = std::nullopt;
  else
    f.K = index_value(k, "K");
  return f;
}

json rule_to_json(const PatternRule& r) {
  json params = json::object();
  if (r.params.k) params["k"] = *r.params.k;
  if (r.params.seed) params["seed"] = *r.params.seed;
  if (r.kind == "singleton_subset") {
    json idx = json::array();
    for (auto i : r.params.indices) idx.push_back(i + 1);
    params["indices"] = idx;
  }
  if (r.kind == "explicit") {
    json pats = json::array();
    for (const auto& p : r.params.patterns) pats.push_back(pattern_to_json(p));
    params["patterns"] = pats;
  }
  return {{"kind", r.kind}, {"description", r.description}, {"params", params}, {"flags", flags_to_json(r.flags)}};
}

PatternRule rule_from_json(const json& j) {
  try {
    const std::string kind = require(j, "kind").get<std::string>();
    const json params = j.value("params", json::object());
    PatternRule r;
    if (kind == "empty") {
      r = rules::empty();
    } else if (kind == "all_singletons") {
      r = rules::all_singletons();
    } else if (kind == "singleton_subset") {
      std::vector<std::size_t> subset;
      for (const auto& v : require(params, "indices")) {
        const std::size_t idx = index_value(v, "index");
        if (idx == 0) throw Error(ErrorCode::BlockOutOfRange, "indices are 1-based");
        subset.push_back(idx - 1);
      }
      r = rules::singleton_subset(std::move(subset));
    } else if (kind == "contiguous_partition") {
      r = rules::contiguous_partition(index_value(require(params, "k"), "k"));
    } else if (kind == "proper_subpartition") {
      r = rules::proper_subpartition(index_value(require(params, "k"), "k"));
    } else if (kind == "pair_partition") {
      r = rules::pair_partition();
    } else if (kind == "random_partition") {
      r = rules::random_partition(index_value(require(params, "k"), "k"),
                                  require(params, "seed").get<std::uint64_t>());
    } else if (kind == "overlapping_chain") {
      r = rules::overlapping_chain();
    } else if (kind == "explicit") {
      std::vector<BlockPattern> patterns;
      for (const auto& p : require(params, "patterns")) patterns.push_back(pattern_from_json(p));
      r = rules::explicit_patterns(std::move(patterns), flags_from_json(require(j, "flags")));
    } else {
      parse_fail("unknown rule kind \"" + kind + "\"");
    }
    if (j.contains("flags")) r.flags = flags_from_json(j.at("flags"));
    return r;
  } catch (const json::exception& e) {
    parse_fail(std::string("rule: ") + e.what());
  }
}

json function_to_json(const PreserverFunction& f) {
  const auto& v = f.variant();
  if (const auto* h = std::get_if<HerzMonomial>(&v))
    return {{"variant", "herz_monomial"}, {"params", {{"alpha", h->alpha}, {"m", h->m}, {"k", h->k}}}};
  if (const auto* s = std::get_if<HerzSeries>(&v)) {
    json coeffs = json::array();
    for (const auto& t : s->terms) coeffs.push_back(json::array({t.m, t.k, t.c}));
    return {{"variant", "herz_series"}, {"params", {{"coeffs", coeffs}, {"max_degree", s->max_degree}}}};
  }
  if (const auto* s = std::get_if<ScalarMultiple>(&v))
    return {{"variant", "scalar_multiple"},
            {"params", {{"c", scalar_json(s->c, s->exact_c)}, {"inner", function_to_json(*s->inner)}}}};
  if (std::holds_alternative<IdentityFn>(v)) return {{"variant", "identity"}, {"params", json::object()}};
  if (std::holds_alternative<ZeroFn>(v)) return {{"variant", "zero"}, {"params", json::object()}};
  const auto& c = std::get<CustomFn>(v);
  return {{"variant", "custom"}, {"params", {{"name", c.name}}}};
}

PreserverFunction function_from_json(const json& j) {
  try {
    const std::string variant = require(j, "variant").get<std::string>();
    const json params = j.value("params", json::object());
    if (variant == "identity") return PreserverFunction::identity();
    if (variant == "zero") return PreserverFunction::zero();
    if (variant == "herz_monomial")
      return PreserverFunction::herz_monomial(number(require(params, "alpha"), "alpha"),
                                              require(params, "m").get<int>(),
                                              require(params, "k").get<int>());
    if (variant == "herz_series") {
      std::vector<HerzTerm> terms;
      for (const auto& t : require(params, "coeffs")) {
        if (!t.is_array() || t.size() != 3) parse_fail("herz_series coeffs are [m, k, c] triples");
        terms.push_back({t[0].get<int>(), t[1].get<int>(), number(t[2], "c")});
      }
      return PreserverFunction::herz_series(std::move(terms), params.value("max_degree", 8));
    }
    if (variant == "scalar_multiple") {
      const json& c = require(params, "c");
      PreserverFunction inner = params.contains("inner") ? function_from_json(params.at("inner"))
                                                         : PreserverFunction::identity();
      if (c.is_string()) return PreserverFunction::scalar_multiple(Fraction::parse(c.get<std::string>()), inner);
      return PreserverFunction::scalar_multiple(number(c, "c"), inner);
    }
    parse_fail("unknown function variant \"" + variant + "\"");
  } catch (const json::exception& e) {
    parse_fail(std::string("function: ") + e.what());
  }
}

json domain_to_json(const Domain& d) {
  return {{"kind", to_string(d.kind)}, {"rho", d.finite() ? json(d.rho) : json("inf")}};
}

Domain domain_from_json(const json& j) {
  const std::string kind = require(j, "kind").get<std::string>();
  Domain d;
  if (kind == "disc") d.kind = DomainKind::Disc;
  else if (kind == "open_sym") d.kind = DomainKind::OpenSym;
  else if (kind == "half_open_nonneg") d.kind = DomainKind::HalfOpenNonneg;
  else if (kind == "open_pos") d.kind = DomainKind::OpenPos;
  else parse_fail("unknown domain kind \"" + kind + "\"");
  const json& rho = require(j, "rho");
  if (rho.is_string() && rho.get<std::string>() == "inf")
    d.rho = std::numeric_limits<double>::infinity();
  else
    d.rho = number(rho, "rho");
  if (!(d.rho > 0.0)) parse_fail("rho must be > 0");
  return d;
}

json psd_report_to_json(const PsdReport& r) {
  return {{"min_eig", r.min_eig}, {"max_eig", r.max_eig}, {"is_psd", r.is_psd}, {"tol_used", r.tol_used}};
}

json regime_to_json(const Regime& r) {
  return {{"regime", r.tag()}, {"table_row", r.table_row()}, {"K", r.K ? json(*r.K) : json("inf")}};
}

json family_to_json(const FamilyDescriptor& d) {
  json out = regime_to_json(d.regime);
  out["family"] = d.description;
  if (d.constraint) out["constraint"] = *d.constraint;
  if (d.c_interval)
    out["c_interval"] = json::array({d.c_interval->lo.to_string(), d.c_interval->hi.to_string()});
  return out;
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, path + ": " + e.what());
  }
}

}  // namespace blockpos
