#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "blockpos/kernels.hpp"

namespace blockpos {

/// Index set; internally 0-based. JSON uses 1-based indices.
using Block = std::vector<std::size_t>;

/// A family of subsets of [n] on whose principal positions g acts instead of
/// f. Always normalized: no empty blocks, pairwise incomparable, canonical
/// order (by smallest element, then size, then lexicographic).
class BlockPattern {
 public:
  BlockPattern() = default;

  std::size_t n() const noexcept { return n_; }
  const std::vector<Block>& blocks() const noexcept { return blocks_; }
  bool empty() const noexcept { return blocks_.empty(); }

  /// Pattern seen by P A P^T when this pattern governs A, i.e. blocks mapped
  /// through sigma^{-1}, with (P A P^T)(i,j) = A(sigma[i], sigma[j]).
  BlockPattern permuted(std::span<const std::size_t> sigma) const;

  friend bool operator==(const BlockPattern&, const BlockPattern&) = default;

 private:
  friend BlockPattern normalize(std::vector<Block> raw, std::size_t n);
  std::size_t n_ = 0;
  std::vector<Block> blocks_;
};

/// Drops empty and contained sets and sorts canonically. Throws
/// BlockOutOfRange for indices >= n and RejectedFullBlock when the result is
/// the single block [n] with n >= 2.
BlockPattern normalize(std::vector<Block> raw, std::size_t n);

BlockPattern empty_pattern(std::size_t n);
BlockPattern singletons_pattern(std::size_t n);

enum class PatternKind { Empty, SingletonsOnly, SubpartitionWithBigBlock, PartitionOfAll, Overlapping };

struct PatternClass {
  PatternKind kind = PatternKind::Empty;
  std::size_t block_count = 0;
  bool covers_all = false;
  std::size_t max_block_size = 0;
};

std::string to_string(PatternKind kind);
PatternClass classify_pattern(const BlockPattern& t);

/// true at (i,j) iff some block contains both i and j.
Mask mask_matrix(const BlockPattern& t);

/// Declared asymptotic properties of a sequence (T_n). K == nullopt means
/// unbounded. Indices in has_block_ge2_at / overlap_at are dimensions n.
struct SequenceFlags {
  bool eventually_nonempty = false;
  bool all_singletons = true;
  std::optional<std::size_t> has_block_ge2_at;
  std::optional<std::size_t> overlap_at;
  bool covers_all_n = false;
  std::optional<std::size_t> K;

  friend bool operator==(const SequenceFlags&, const SequenceFlags&) = default;
};

/// Construction parameters of a built-in rule, kept for serialization.
struct RuleParams {
  std::optional<std::size_t> k;
  std::optional<std::uint64_t> seed;
  std::vector<std::size_t> indices;  // singleton_subset, 0-based
  std::vector<BlockPattern> patterns;  // explicit
};

/// A pure generator n -> T_n together with its declared flags.
struct PatternRule {
  std::string kind;
  std::string description;
  RuleParams params;
  std::function<BlockPattern(std::size_t)> generator;
  SequenceFlags flags;

  BlockPattern at(std::size_t n) const { return generator(n); }
};

namespace rules {
PatternRule empty();
PatternRule all_singletons();
/// T_n = {{j} : j in S, j < n}; S given 0-based.
PatternRule singleton_subset(std::vector<std::size_t> subset);
/// Partition of [n] into min(k, n) contiguous blocks whose sizes differ by at most one.
PatternRule contiguous_partition(std::size_t k);
/// Contiguous partition of [n-1] into min(k, n-1) blocks; index n-1 stays uncovered.
PatternRule proper_subpartition(std::size_t k);
/// Partition of [n] into consecutive pairs (plus a trailing singleton) for
/// n >= 3, singletons below; the number of blocks grows without bound.
PatternRule pair_partition();
/// Partition of [n] into min(k, n) nonempty blocks assigned pseudo-randomly
/// from (seed, n); deterministic for a given seed.
PatternRule random_partition(std::size_t k, std::uint64_t seed);
/// {{1,2},{2,3}} (1-based) for n >= 3, empty below; other indices uncovered.
PatternRule overlapping_chain();
/// Explicitly listed patterns; every unlisted n maps to the empty pattern.
/// Flags are taken as declared.
PatternRule explicit_patterns(std::vector<BlockPattern> patterns, SequenceFlags flags);
}  // namespace rules

enum class RegimeKind { R1Empty, R2Singletons, R3aPartitionAllFiniteK, R3bSubpartitionOther, R4Overlapping };

struct Regime {
  RegimeKind kind = RegimeKind::R1Empty;
  std::optional<std::size_t> K;  // nullopt = unbounded

  std::string tag() const;        // e.g. "R3a-PartitionAll-FiniteK"
  std::string table_row() const;  // "1", "2", "3a", "3b", "4"
  friend bool operator==(const Regime&, const Regime&) = default;
};

inline constexpr std::size_t kDefaultProbeDepth = 12;

/// Materializes T_1..T_probe_n, checks the declared flags against them
/// (FlagMismatch on contradiction) and returns the regime. Precedence:
/// overlap => R4; else a block of size >= 2 => R3a/R3b; else nonempty => R2;
/// else R1.
Regime classify_sequence(const PatternRule& rule, std::size_t probe_n = kDefaultProbeDepth);

}  // namespace blockpos
