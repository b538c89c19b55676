#include "blockpos/block_pattern.hpp"

#include <algorithm>
#include <random>
#include <utility>

#include "blockpos/error.hpp"

namespace blockpos {

namespace {

bool is_subset(const Block& small, const Block& big) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

bool intersects(const Block& a, const Block& b) {
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i == *j) return true;
    if (*i < *j) ++i; else ++j;
  }
  return false;
}

// Sizes of k contiguous parts of [total]; larger parts first.
std::vector<std::size_t> balanced_sizes(std::size_t total, std::size_t k) {
  std::vector<std::size_t> sizes(k, total / k);
  for (std::size_t i = 0; i < total % k; ++i) ++sizes[i];
  return sizes;
}

std::vector<Block> contiguous_blocks(std::size_t total, std::size_t k) {
  std::vector<Block> out;
  std::size_t next = 0;
  for (auto s : balanced_sizes(total, k)) {
    Block b(s);
    for (auto& v : b) v = next++;
    out.push_back(std::move(b));
  }
  return out;
}

std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

}  // namespace

BlockPattern normalize(std::vector<Block> raw, std::size_t n) {
  for (auto& b : raw) {
    for (auto v : b)
      if (v >= n)
        throw Error(ErrorCode::BlockOutOfRange,
                    "index " + std::to_string(v + 1) + " outside [" + std::to_string(n) + "]");
    std::sort(b.begin(), b.end());
    b.erase(std::unique(b.begin(), b.end()), b.end());
  }
  std::erase_if(raw, [](const Block& b) { return b.empty(); });
  std::sort(raw.begin(), raw.end());
  raw.erase(std::unique(raw.begin(), raw.end()), raw.end());

  std::vector<Block> kept;
  for (std::size_t i = 0; i < raw.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < raw.size() && !dominated; ++j)
      dominated = i != j && raw[i].size() < raw[j].size() && is_subset(raw[i], raw[j]);
    if (!dominated) kept.push_back(raw[i]);
  }
  std::sort(kept.begin(), kept.end(), [](const Block& a, const Block& b) {
    if (a.front() != b.front()) return a.front() < b.front();
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  if (n >= 2 && kept.size() == 1 && kept.front().size() == n)
    throw Error(ErrorCode::RejectedFullBlock,
                "T_n = {[n]} is excluded for n >= 2 (n=" + std::to_string(n) + ")");

  BlockPattern p;
  p.n_ = n;
  p.blocks_ = std::move(kept);
  return p;
}

BlockPattern BlockPattern::permuted(std::span<const std::size_t> sigma) const {
  if (!is_permutation(sigma, n_))
    throw Error(ErrorCode::InvalidPermutation, "sigma is not a bijection of [n]");
  std::vector<std::size_t> inverse(n_);
  for (std::size_t i = 0; i < n_; ++i) inverse[sigma[i]] = i;
  std::vector<Block> mapped;
  for (const auto& b : blocks_) {
    Block m;
    for (auto v : b) m.push_back(inverse[v]);
    mapped.push_back(std::move(m));
  }
  return normalize(std::move(mapped), n_);
}

BlockPattern empty_pattern(std::size_t n) { return normalize({}, n); }

BlockPattern singletons_pattern(std::size_t n) {
  std::vector<Block> raw;
  for (std::size_t j = 0; j < n; ++j) raw.push_back({j});
  return normalize(std::move(raw), n);
}

std::string to_string(PatternKind kind) {
  switch (kind) {
    case PatternKind::Empty: return "Empty";
    case PatternKind::SingletonsOnly: return "SingletonsOnly";
    case PatternKind::SubpartitionWithBigBlock: return "SubpartitionWithBigBlock";
    case PatternKind::PartitionOfAll: return "PartitionOfAll";
    case PatternKind::Overlapping: return "Overlapping";
  }
  return "Unknown";
}

PatternClass classify_pattern(const BlockPattern& t) {
  PatternClass c;
  const auto& blocks = t.blocks();
  c.block_count = blocks.size();
  std::vector<int> cover(t.n(), 0);
  for (const auto& b : blocks) {
    c.max_block_size = std::max(c.max_block_size, b.size());
    for (auto v : b) ++cover[v];
  }
  c.covers_all = std::all_of(cover.begin(), cover.end(), [](int k) { return k > 0; });
  if (blocks.empty()) {
    c.kind = PatternKind::Empty;
    return c;
  }
  for (std::size_t i = 0; i < blocks.size(); ++i)
    for (std::size_t j = i + 1; j < blocks.size(); ++j)
      if (intersects(blocks[i], blocks[j])) {
        c.kind = PatternKind::Overlapping;
        return c;
      }
  if (c.max_block_size == 1)
    c.kind = PatternKind::SingletonsOnly;
  else if (c.covers_all)
    c.kind = PatternKind::PartitionOfAll;
  else
    c.kind = PatternKind::SubpartitionWithBigBlock;
  return c;
}

Mask mask_matrix(const BlockPattern& t) {
  Mask m(t.n());
  for (const auto& b : t.blocks())
    for (auto i : b)
      for (auto j : b) m.set(i, j, true);
  return m;
}

namespace rules {

PatternRule empty() {
  PatternRule r;
  r.kind = "empty";
  r.description = "T_n = {} for all n";
  r.generator = [](std::size_t n) { return empty_pattern(n); };
  r.flags = {.eventually_nonempty = false, .all_singletons = true, .covers_all_n = false, .K = 0};
  return r;
}

PatternRule all_singletons() {
  PatternRule r;
  r.kind = "all_singletons";
  r.description = "T_n = {{j} : j in [n]}";
  r.generator = [](std::size_t n) { return singletons_pattern(n); };
  r.flags = {.eventually_nonempty = true, .all_singletons = true, .covers_all_n = true, .K = std::nullopt};
  return r;
}

PatternRule singleton_subset(std::vector<std::size_t> subset) {
  std::sort(subset.begin(), subset.end());
  subset.erase(std::unique(subset.begin(), subset.end()), subset.end());
  PatternRule r;
  r.kind = "singleton_subset";
  r.params.indices = subset;
  r.description = "T_n = {{j} : j in S, j <= n}";
  r.generator = [subset](std::size_t n) {
    std::vector<Block> raw;
    for (auto j : subset)
      if (j < n) raw.push_back({j});
    return normalize(std::move(raw), n);
  };
  r.flags = {.eventually_nonempty = !subset.empty(),
             .all_singletons = true,
             .covers_all_n = false,
             .K = subset.size()};
  return r;
}

PatternRule contiguous_partition(std::size_t k) {
  if (k < 2) throw Error(ErrorCode::InvalidArgument, "contiguous_partition needs k >= 2");
  PatternRule r;
  r.kind = "contiguous_partition";
  r.params.k = k;
  r.description = "T_n = partition of [n] into min(k, n) contiguous blocks, k=" + std::to_string(k);
  r.generator = [k](std::size_t n) { return normalize(contiguous_blocks(n, std::min(k, n)), n); };
  r.flags = {.eventually_nonempty = true,
             .all_singletons = false,
             .has_block_ge2_at = k + 1,
             .covers_all_n = true,
             .K = k};
  return r;
}

PatternRule proper_subpartition(std::size_t k) {
  if (k < 1) throw Error(ErrorCode::InvalidArgument, "proper_subpartition needs k >= 1");
  PatternRule r;
  r.kind = "proper_subpartition";
  r.params.k = k;
  r.description = "T_n = contiguous partition of [n-1] into min(k, n-1) blocks, k=" + std::to_string(k);
  r.generator = [k](std::size_t n) {
    if (n <= 1) return empty_pattern(n);
    return normalize(contiguous_blocks(n - 1, std::min(k, n - 1)), n);
  };
  r.flags = {.eventually_nonempty = true,
             .all_singletons = false,
             .has_block_ge2_at = k + 2,
             .covers_all_n = false,
             .K = k};
  return r;
}

PatternRule pair_partition() {
  PatternRule r;
  r.kind = "pair_partition";
  r.description = "T_n = consecutive pairs covering [n] (singletons for n <= 2)";
  r.generator = [](std::size_t n) {
    if (n <= 2) return singletons_pattern(n);
    std::vector<Block> raw;
    for (std::size_t j = 0; j < n; j += 2)
      raw.push_back(j + 1 < n ? Block{j, j + 1} : Block{j});
    return normalize(std::move(raw), n);
  };
  r.flags = {.eventually_nonempty = true,
             .all_singletons = false,
             .has_block_ge2_at = 3,
             .covers_all_n = true,
             .K = std::nullopt};
  return r;
}

PatternRule random_partition(std::size_t k, std::uint64_t seed) {
  if (k < 2) throw Error(ErrorCode::InvalidArgument, "random_partition needs k >= 2");
  PatternRule r;
  r.kind = "random_partition";
  r.params.k = k;
  r.params.seed = seed;
  r.description = "T_n = seeded random partition of [n] into min(k, n) blocks, k=" + std::to_string(k);
  r.generator = [k, seed](std::size_t n) {
    if (n <= k) return singletons_pattern(n);
    std::mt19937_64 rng(splitmix(seed ^ splitmix(n)));
    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = i;
    for (std::size_t i = n - 1; i > 0; --i) std::swap(order[i], order[rng() % (i + 1)]);
    std::vector<Block> raw(k);
    for (std::size_t i = 0; i < n; ++i) raw[i < k ? i : rng() % k].push_back(order[i]);
    return normalize(std::move(raw), n);
  };
  r.flags = {.eventually_nonempty = true,
             .all_singletons = false,
             .has_block_ge2_at = k + 1,
             .covers_all_n = true,
             .K = k};
  return r;
}

PatternRule overlapping_chain() {
  PatternRule r;
  r.kind = "overlapping_chain";
  r.description = "T_n = {{1,2},{2,3}} for n >= 3, empty below";
  r.generator = [](std::size_t n) {
    if (n < 3) return empty_pattern(n);
    return normalize({{0, 1}, {1, 2}}, n);
  };
  r.flags = {.eventually_nonempty = true,
             .all_singletons = false,
             .has_block_ge2_at = 3,
             .overlap_at = 3,
             .covers_all_n = false,
             .K = 2};
  return r;
}

PatternRule explicit_patterns(std::vector<BlockPattern> patterns, SequenceFlags flags) {
  PatternRule r;
  r.kind = "explicit";
  r.params.patterns = patterns;
  r.description = "explicitly listed patterns, empty elsewhere";
  r.generator = [patterns = std::move(patterns)](std::size_t n) {
    for (const auto& p : patterns)
      if (p.n() == n) return p;
    return empty_pattern(n);
  };
  r.flags = flags;
  return r;
}

}  // namespace rules

std::string Regime::tag() const {
  switch (kind) {
    case RegimeKind::R1Empty: return "R1-Empty";
    case RegimeKind::R2Singletons: return "R2-Singletons";
    case RegimeKind::R3aPartitionAllFiniteK: return "R3a-PartitionAll-FiniteK";
    case RegimeKind::R3bSubpartitionOther: return "R3b-Subpartition-Other";
    case RegimeKind::R4Overlapping: return "R4-Overlapping";
  }
  return "Unknown";
}

std::string Regime::table_row() const {
  switch (kind) {
    case RegimeKind::R1Empty: return "1";
    case RegimeKind::R2Singletons: return "2";
    case RegimeKind::R3aPartitionAllFiniteK: return "3a";
    case RegimeKind::R3bSubpartitionOther: return "3b";
    case RegimeKind::R4Overlapping: return "4";
  }
  return "?";
}

Regime classify_sequence(const PatternRule& rule, std::size_t probe_n) {
  if (probe_n < 3) throw Error(ErrorCode::InvalidArgument, "probe depth must be >= 3");
  const auto& f = rule.flags;
  auto mismatch = [&](const std::string& what) {
    throw Error(ErrorCode::FlagMismatch, rule.kind + ": " + what);
  };

  if (f.all_singletons && (f.has_block_ge2_at || f.overlap_at))
    mismatch("all_singletons contradicts a declared block of size >= 2");
  if (f.overlap_at && !f.has_block_ge2_at) mismatch("overlap_at requires has_block_ge2_at");
  if (!f.eventually_nonempty && f.has_block_ge2_at) mismatch("empty sequence cannot have blocks");

  for (std::size_t n = 1; n <= probe_n; ++n) {
    const BlockPattern t = rule.at(n);
    if (t.n() != n) mismatch("generator returned a pattern of the wrong dimension");
    const PatternClass c = classify_pattern(t);
    const std::string at = " at n=" + std::to_string(n);
    if (n >= 2 && !t.empty() && !f.eventually_nonempty) mismatch("nonempty pattern" + at);
    if (c.max_block_size >= 2 && f.all_singletons) mismatch("block of size >= 2" + at);
    if (c.max_block_size >= 2 && !f.has_block_ge2_at) mismatch("undeclared block of size >= 2" + at);
    if (c.kind == PatternKind::Overlapping && !f.overlap_at) mismatch("undeclared overlap" + at);
    if (f.has_block_ge2_at == n && c.max_block_size < 2) mismatch("declared block of size >= 2 missing" + at);
    if (f.overlap_at == n && c.kind != PatternKind::Overlapping) mismatch("declared overlap missing" + at);
    if (f.covers_all_n && (c.kind == PatternKind::Overlapping || !c.covers_all))
      mismatch("pattern is not a partition of [n]" + at);
    if (f.K && c.block_count > *f.K) mismatch("|T_n| exceeds declared K" + at);
  }

  Regime r;
  r.K = f.K;
  if (f.overlap_at)
    r.kind = RegimeKind::R4Overlapping;
  else if (f.has_block_ge2_at)
    r.kind = (f.covers_all_n && f.K) ? RegimeKind::R3aPartitionAllFiniteK : RegimeKind::R3bSubpartitionOther;
  else if (f.eventually_nonempty)
    r.kind = RegimeKind::R2Singletons;
  else
    r.kind = RegimeKind::R1Empty;
  return r;
}

}  // namespace blockpos
