#include <algorithm>
#include <random>

#include "doctest.h"

#include "blockpos/block_pattern.hpp"
#include "oracles.hpp"

using namespace blockpos;
using oracle::error_code;

TEST_CASE("normalize drops contained and empty sets") {
  const BlockPattern t = normalize({{0}, {0, 1}}, 3);
  REQUIRE(t.blocks().size() == 1);
  CHECK(t.blocks()[0] == Block{0, 1});

  CHECK(normalize({{}}, 3).empty());
  CHECK(normalize({{}}, 3) == normalize({}, 3));

  const BlockPattern s = normalize({{1}, {2}}, 3);
  CHECK(s.blocks() == std::vector<Block>{{1}, {2}});
}

TEST_CASE("normalize sorts canonically and deduplicates") {
  const BlockPattern t = normalize({{3, 2}, {0}, {2, 3}, {1, 0}}, 4);
  CHECK(t.blocks() == std::vector<Block>{{0, 1}, {2, 3}});
}

TEST_CASE("normalize rejects out-of-range indices and the full block") {
  CHECK(error_code([] { normalize({{0, 3}}, 3); }) == ErrorCode::BlockOutOfRange);
  CHECK(error_code([] { normalize({{0, 1, 2}}, 3); }) == ErrorCode::RejectedFullBlock);
  CHECK(error_code([] { normalize({{0}, {0, 1, 2}}, 3); }) == ErrorCode::RejectedFullBlock);
  CHECK_FALSE(error_code([] { normalize({{0}}, 1); }));
}

TEST_CASE("normalize is idempotent and order-insensitive") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<std::size_t> count(0, 5), size(0, 3);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 4 + trial % 4;
    std::uniform_int_distribution<std::size_t> idx(0, n - 1);
    std::vector<Block> raw(count(rng));
    for (auto& b : raw) {
      const std::size_t k = size(rng);
      for (std::size_t j = 0; j < k; ++j) b.push_back(idx(rng));
    }
    const BlockPattern t = normalize(raw, n);
    CHECK(normalize(t.blocks(), n) == t);
    std::shuffle(raw.begin(), raw.end(), rng);
    for (auto& b : raw) std::reverse(b.begin(), b.end());
    CHECK(normalize(raw, n) == t);
  }
}

TEST_CASE("classify_pattern on small patterns") {
  const PatternClass part = classify_pattern(normalize({{0, 1}, {2}}, 3));
  CHECK(part.kind == PatternKind::PartitionOfAll);
  CHECK(part.block_count == 2);
  CHECK(part.max_block_size == 2);
  CHECK(part.covers_all);

  CHECK(classify_pattern(normalize({{0, 1}, {1, 2}}, 3)).kind == PatternKind::Overlapping);

  const PatternClass sub = classify_pattern(normalize({{0, 1}}, 3));
  CHECK(sub.kind == PatternKind::SubpartitionWithBigBlock);
  CHECK_FALSE(sub.covers_all);

  CHECK(classify_pattern(empty_pattern(4)).kind == PatternKind::Empty);
  CHECK(classify_pattern(singletons_pattern(4)).kind == PatternKind::SingletonsOnly);
  CHECK(classify_pattern(normalize({{2}}, 4)).kind == PatternKind::SingletonsOnly);
}

TEST_CASE("partition kind means every index is covered exactly once") {
  for (std::size_t k = 2; k <= 4; ++k)
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
      const PatternRule rule = rules::random_partition(k, seed);
      for (std::size_t n = 2; n <= 10; ++n) {
        const BlockPattern t = rule.at(n);
        const PatternClass c = classify_pattern(t);
        if (c.kind != PatternKind::PartitionOfAll) continue;
        std::vector<int> cover(n, 0);
        for (const auto& b : t.blocks())
          for (auto i : b) ++cover[i];
        CHECK(std::all_of(cover.begin(), cover.end(), [](int v) { return v == 1; }));
      }
    }
}

TEST_CASE("mask matrix") {
  const Mask none = mask_matrix(empty_pattern(3));
  CHECK(std::all_of(none.cells.begin(), none.cells.end(), [](char c) { return c == 0; }));

  const Mask part = mask_matrix(normalize({{0, 1}, {2}}, 3));
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) CHECK(part(i, j) == ((i < 2 && j < 2) || (i == 2 && j == 2)));

  const Mask chain = mask_matrix(normalize({{0, 1}, {1, 2}}, 3));
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) CHECK(chain(i, j) == !((i == 0 && j == 2) || (i == 2 && j == 0)));
}

TEST_CASE("mask matrix is symmetric for every built-in rule") {
  const std::vector<PatternRule> all{rules::empty(), rules::all_singletons(), rules::contiguous_partition(3),
                                     rules::proper_subpartition(2), rules::pair_partition(),
                                     rules::random_partition(3, 9), rules::overlapping_chain()};
  for (const auto& rule : all)
    for (std::size_t n = 1; n <= 9; ++n) {
      const Mask m = mask_matrix(rule.at(n));
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) CHECK(m(i, j) == m(j, i));
    }
}

TEST_CASE("permuted pattern follows the conjugated matrix") {
  const BlockPattern t = normalize({{0, 1}, {3}}, 4);
  const std::vector<std::size_t> sigma{2, 0, 3, 1};
  const BlockPattern p = t.permuted(sigma);
  const Mask before = mask_matrix(t), after = mask_matrix(p);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) CHECK(after(i, j) == before(sigma[i], sigma[j]));
}

TEST_CASE("classify_sequence on built-in rules") {
  CHECK(classify_sequence(rules::empty()).kind == RegimeKind::R1Empty);
  CHECK(classify_sequence(rules::all_singletons()).kind == RegimeKind::R2Singletons);
  CHECK(classify_sequence(rules::singleton_subset({0, 2})).kind == RegimeKind::R2Singletons);

  const Regime k3 = classify_sequence(rules::contiguous_partition(3));
  CHECK(k3.kind == RegimeKind::R3aPartitionAllFiniteK);
  CHECK(k3.K == std::optional<std::size_t>(3));
  CHECK(k3.tag() == "R3a-PartitionAll-FiniteK");
  CHECK(k3.table_row() == "3a");

  CHECK(classify_sequence(rules::proper_subpartition(2)).kind == RegimeKind::R3bSubpartitionOther);
  const Regime pairs = classify_sequence(rules::pair_partition());
  CHECK(pairs.kind == RegimeKind::R3bSubpartitionOther);
  CHECK_FALSE(pairs.K);
  CHECK(classify_sequence(rules::overlapping_chain()).kind == RegimeKind::R4Overlapping);
  CHECK(classify_sequence(rules::overlapping_chain()).table_row() == "4");
}

TEST_CASE("classify_sequence is stable as the probe depth grows") {
  const std::vector<PatternRule> all{rules::empty(), rules::all_singletons(), rules::contiguous_partition(3),
                                     rules::proper_subpartition(2), rules::pair_partition(),
                                     rules::random_partition(4, 1), rules::overlapping_chain()};
  for (const auto& rule : all) {
    const Regime base = classify_sequence(rule, 6);
    for (std::size_t p = 7; p <= 20; ++p) CHECK(classify_sequence(rule, p) == base);
  }
}

TEST_CASE("classify_sequence rejects flags contradicted by the patterns") {
  SequenceFlags lying;
  lying.eventually_nonempty = true;
  lying.all_singletons = true;
  std::vector<BlockPattern> patterns;
  for (std::size_t n = 1; n <= 4; ++n) patterns.push_back(n >= 3 ? normalize({{0, 1}}, n) : empty_pattern(n));
  const PatternRule rule = rules::explicit_patterns(patterns, lying);
  CHECK(error_code([&] { classify_sequence(rule); }) == ErrorCode::FlagMismatch);

  PatternRule wrong_k = rules::contiguous_partition(3);
  wrong_k.flags.K = 2;
  CHECK(error_code([&] { classify_sequence(wrong_k); }) == ErrorCode::FlagMismatch);
}

TEST_CASE("a rule producing the full block is rejected") {
  PatternRule full = rules::empty();
  full.generator = [](std::size_t n) {
    if (n == 1) return empty_pattern(1);
    Block all(n);
    for (std::size_t i = 0; i < n; ++i) all[i] = i;
    return normalize({all}, n);
  };
  CHECK(error_code([&] { classify_sequence(full); }) == ErrorCode::RejectedFullBlock);
}

TEST_CASE("built-in generators are pure") {
  const PatternRule r = rules::random_partition(3, 77);
  for (std::size_t n = 1; n <= 12; ++n) CHECK(r.at(n) == r.at(n));
  CHECK(rules::random_partition(3, 77).at(9) == r.at(9));
}
