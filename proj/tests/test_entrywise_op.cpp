#include <algorithm>
#include <random>

#include "doctest.h"

#include "blockpos/entrywise_op.hpp"
#include "blockpos/sampling.hpp"
#include "oracles.hpp"

using namespace blockpos;
using oracle::error_code;

namespace {

const Domain kPlane = Domain::disc(std::numeric_limits<double>::infinity());

OperatorSpec spec(PreserverFunction g, PreserverFunction f, BlockPattern t, Domain d = kPlane) {
  return OperatorSpec{std::move(g), std::move(f), std::move(t), d};
}

HermitianMatrix sample(std::uint64_t seed, std::size_t n) {
  std::mt19937_64 rng(seed);
  return random_psd(rng, n, kPlane);
}

/// Direct triple-loop evaluation of the operator.
HermitianMatrix reference(const OperatorSpec& s, const HermitianMatrix& a) {
  RawGrid out(a.n());
  for (std::size_t i = 0; i < a.n(); ++i)
    for (std::size_t j = 0; j < a.n(); ++j) {
      bool shared = false;
      for (const auto& b : s.pattern.blocks())
        shared = shared || (std::count(b.begin(), b.end(), i) && std::count(b.begin(), b.end(), j));
      out(i, j) = shared ? s.g(a(i, j)) : s.f(a(i, j));
    }
  return symmetrize(out);
}

}  // namespace

TEST_CASE("apply on identity and zero functions") {
  const HermitianMatrix a = sample(1, 4);
  CHECK(apply(spec(PreserverFunction::identity(), PreserverFunction::identity(), normalize({{0, 1}}, 4)), a) == a);
  CHECK(apply(spec(PreserverFunction::identity(), PreserverFunction::zero(), empty_pattern(4)), a) ==
        HermitianMatrix::zero(4));
}

TEST_CASE("apply with a violating f on a singleton block") {
  const auto two = PreserverFunction::scalar_multiple(2.0, PreserverFunction::identity());
  const HermitianMatrix out = apply(spec(PreserverFunction::identity(), two, normalize({{0}}, 2)), HermitianMatrix::ones(2));
  CHECK(out == oracle::matrix({{1, 2}, {2, 2}}));
  CHECK(oracle::determinant(out) == Complex(-2.0));
  CHECK(oracle::min_eig(out) < 0.0);
}

TEST_CASE("apply matches the direct evaluation") {
  const auto g = PreserverFunction::herz_monomial(1.0, 2, 1);
  const auto f = PreserverFunction::scalar_multiple(-0.3, PreserverFunction::herz_series({{1, 0, 1}, {0, 2, 0.5}}));
  for (std::uint64_t s = 0; s < 30; ++s) {
    const std::size_t n = 1 + s % 8;
    const BlockPattern t = rules::random_partition(3, s).at(n);
    const OperatorSpec sp = spec(g, f, t);
    const HermitianMatrix a = sample(s, n);
    CHECK(oracle::max_gap(apply(sp, a), reference(sp, a)) < 1e-14);
    CHECK(apply(sp, a, Backend::Serial) == apply(sp, a, Backend::Parallel));
  }
}

TEST_CASE("apply rejects entries outside the domain and non-equivariant output") {
  const HermitianMatrix a = HermitianMatrix::ones(2);
  const auto id = PreserverFunction::identity();
  CHECK(error_code([&] { apply(spec(id, id, empty_pattern(2), Domain::disc(1.0)), a); }) == ErrorCode::OutOfDomain);
  const auto rot = PreserverFunction::custom("rot", [](Complex z) { return Complex(0, 1) * z; }, false);
  CHECK(error_code([&] { apply(spec(id, rot, empty_pattern(2)), oracle::matrix({{1, 0.5}, {0.5, 1}})); }) ==
        ErrorCode::NonHermitianOutput);
}

TEST_CASE("apply_star") {
  const HermitianMatrix a = sample(3, 4);
  const HermitianMatrix diag = apply_star(PreserverFunction::zero(), a, kPlane);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) CHECK(diag(i, j) == (i == j ? a(i, i) : Complex(0.0)));
  CHECK(apply_star(PreserverFunction::identity(), a, kPlane) == a);

  for (double c : {-0.6, -0.2, 0.4}) {
    const double x = 0.8;
    const std::size_t n = 5;
    const HermitianMatrix out = apply_star(PreserverFunction::scalar_multiple(c, PreserverFunction::identity()),
                                           HermitianMatrix::ones(n).scaled(x), kPlane);
    const HermitianMatrix expect =
        HermitianMatrix::ones(n).scaled(c * x) + HermitianMatrix::identity(n).scaled((1 - c) * x);
    CHECK(oracle::max_gap(out, expect) < 1e-15);
  }
}

TEST_CASE("decompose") {
  const HermitianMatrix a = sample(4, 5);
  const auto id = PreserverFunction::identity();
  const Decomposition same = decompose(spec(id, id, normalize({{0, 2}}, 5)), a);
  CHECK(same.masked_gap == HermitianMatrix::zero(5));

  const Decomposition split = decompose(spec(id, PreserverFunction::zero(), singletons_pattern(5)), a);
  CHECK(split.f_everywhere == HermitianMatrix::zero(5));
  CHECK(split.masked_gap == apply_star(PreserverFunction::zero(), a, kPlane));

  const auto g = PreserverFunction::herz_monomial(1.0, 1, 1);
  const auto f = PreserverFunction::scalar_multiple(0.25, PreserverFunction::herz_monomial(1, 2, 0));
  for (std::uint64_t s = 0; s < 30; ++s) {
    const std::size_t n = 2 + s % 7;
    const OperatorSpec sp = spec(g, f, rules::pair_partition().at(n));
    const HermitianMatrix b = sample(50 + s, n);
    const Decomposition d = decompose(sp, b);
    CHECK(oracle::max_gap(d.f_everywhere + d.masked_gap, apply(sp, b)) < 1e-14);
  }
}

TEST_CASE("mask factorization for scalar multiples") {
  const HermitianMatrix a = sample(8, 6);
  const auto id = PreserverFunction::identity();
  CHECK(mask_factorization(spec(id, id, normalize({{0, 1}}, 6)), a) == a);
  CHECK(mask_factorization(spec(id, PreserverFunction::zero(), empty_pattern(6)), a) == HermitianMatrix::zero(6));

  const OperatorSpec half = spec(id, PreserverFunction::scalar_multiple(-0.5, id), rules::contiguous_partition(3).at(6));
  const HermitianMatrix m = mask_factorization(half, a);
  CHECK(oracle::max_gap(m, apply(half, a)) <= 1e-14 * std::max(1.0, a.max_abs_entry()));
  CHECK(oracle::max_gap(m, schur_product(a, linear_mask_image(half.pattern, -0.5))) < 1e-15);

  CHECK(error_code([&] { mask_factorization(spec(id, PreserverFunction::herz_monomial(1, 2, 0), empty_pattern(6)), a); }) ==
        ErrorCode::NonLinearFunction);
}

TEST_CASE("apply commutes with permutation conjugation") {
  std::mt19937_64 rng(21);
  const auto g = PreserverFunction::herz_monomial(1.0, 1, 2);
  const auto f = PreserverFunction::scalar_multiple(-0.4, PreserverFunction::identity());
  for (int t = 0; t < 40; ++t) {
    const std::size_t n = 3 + t % 5;
    std::vector<std::size_t> sigma(n);
    for (std::size_t i = 0; i < n; ++i) sigma[i] = i;
    std::shuffle(sigma.begin(), sigma.end(), rng);
    const BlockPattern pat = rules::overlapping_chain().at(n);
    const HermitianMatrix a = sample(200 + t, n);
    const HermitianMatrix lhs = apply(spec(g, f, pat.permuted(sigma)), permute_conjugate(a, sigma));
    const HermitianMatrix rhs = permute_conjugate(apply(spec(g, f, pat), a), sigma);
    CHECK(oracle::max_gap(lhs, rhs) <= 1e-14);
  }
}

TEST_CASE("tensor identity for all-singleton patterns") {
  const auto id = PreserverFunction::identity();
  for (double c : {-0.7, 0.3}) {
    const auto f = PreserverFunction::scalar_multiple(c, PreserverFunction::herz_monomial(1, 1, 1));
    for (std::uint64_t s = 0; s < 10; ++s) {
      const std::size_t n = 1 + s % 4;
      const HermitianMatrix a = sample(300 + s, n);
      RawGrid gap(n);
      for (std::size_t i = 0; i < n; ++i) gap(i, i) = a(i, i) - f(a(i, i));
      const HermitianMatrix f_a = apply(spec(id, f, empty_pattern(n)), a);
      for (std::size_t m = 1; m <= 4; ++m) {
        const HermitianMatrix blown = kron(HermitianMatrix::ones(m), a);
        const HermitianMatrix lhs = apply_star(f, blown, kPlane);
        const HermitianMatrix rhs = kron(HermitianMatrix::ones(m), f_a) + kron(HermitianMatrix::identity(m), symmetrize(gap));
        CHECK(oracle::max_gap(lhs, rhs) <= 1e-14 * std::max(1.0, a.max_abs_entry()));
      }
    }
  }
}

TEST_CASE("output is Hermitian for equivariant inputs") {
  const auto g = PreserverFunction::herz_series({{2, 1, 1.0}, {0, 1, 0.5}});
  const auto f = PreserverFunction::custom("bump", [](Complex z) {
    return 0.5 * z + 0.5 * z * std::exp(-z.imag() * z.imag());
  });
  for (std::uint64_t s = 0; s < 10; ++s) {
    const HermitianMatrix out = apply(spec(g, f, rules::overlapping_chain().at(4)), sample(400 + s, 4));
    for (std::size_t i = 0; i < 4; ++i) {
      CHECK(out(i, i).imag() == 0.0);
      for (std::size_t j = 0; j < 4; ++j) CHECK(out(i, j) == std::conj(out(j, i)));
    }
  }
}
