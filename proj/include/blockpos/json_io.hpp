#pragma once

// JSON encodings for matrices, patterns, rules, functions and domains.
//
//   matrix   {"n": 2, "entries": [[[1,0],[0,1]], [[0,-1],[1,0]]]}   (bare numbers allowed)
//   pattern  {"n": 3, "blocks": [[1,2],[3]]}                        (1-based)
//   rule     {"kind": "contiguous_partition", "params": {"k": 3}, "flags": {...}}
//   function {"variant": "scalar_multiple", "params": {"c": "-1/2", "inner": {"variant": "identity"}}}
//   domain   {"kind": "disc", "rho": 1.0}                           ("inf" for unbounded)

#include <string>

#include "json.hpp"

#include "blockpos/block_pattern.hpp"
#include "blockpos/core_matrix.hpp"
#include "blockpos/preserver_fn.hpp"

namespace blockpos {

using nlohmann::json;

json complex_to_json(Complex z);
Complex complex_from_json(const json& j);

json matrix_to_json(const HermitianMatrix& m);
HermitianMatrix matrix_from_json(const json& j);

json pattern_to_json(const BlockPattern& p);
BlockPattern pattern_from_json(const json& j);

json flags_to_json(const SequenceFlags& f);
SequenceFlags flags_from_json(const json& j);

json rule_to_json(const PatternRule& r);
/// Built-in kinds: empty, all_singletons, singleton_subset {indices},
/// contiguous_partition {k}, proper_subpartition {k}, pair_partition,
/// random_partition {k, seed}, overlapping_chain, explicit {patterns}.
/// A "flags" object, when present, replaces the built-in declaration.
PatternRule rule_from_json(const json& j);

json function_to_json(const PreserverFunction& f);
PreserverFunction function_from_json(const json& j);

json domain_to_json(const Domain& d);
Domain domain_from_json(const json& j);

json psd_report_to_json(const PsdReport& r);
json regime_to_json(const Regime& r);
json family_to_json(const FamilyDescriptor& d);

/// Reads and parses a JSON file; ParseError on failure.
json read_json_file(const std::string& path);

}  // namespace blockpos
