#include <cmath>
#include <limits>
#include <random>

#include "doctest.h"

#include "blockpos/core_matrix.hpp"
#include "blockpos/sampling.hpp"
#include "oracles.hpp"

using namespace blockpos;
using oracle::error_code;

namespace {

const Complex I(0.0, 1.0);

HermitianMatrix sample_psd(std::uint64_t seed, std::size_t n) {
  std::mt19937_64 rng(seed);
  return random_psd(rng, n, Domain::disc(1.0));
}

}  // namespace

TEST_CASE("symmetrize keeps Hermitian input and rejects asymmetric input") {
  const HermitianMatrix id = symmetrize(oracle::grid({{1, 0}, {0, 1}}));
  CHECK(id == HermitianMatrix::identity(2));

  const HermitianMatrix skew = symmetrize(oracle::grid({{0, I}, {-I, 0}}));
  CHECK(skew(0, 1) == I);
  CHECK(skew(1, 0) == -I);

  CHECK(error_code([] { symmetrize(oracle::grid({{1, 2}, {0, 1}})); }) == ErrorCode::AsymmetricInput);
}

TEST_CASE("symmetrize forces exact conjugate symmetry and a real diagonal") {
  RawGrid raw = oracle::grid({{1.0 + 1e-12 * I, 0.5 + 0.25 * I}, {0.5 - 0.25 * I + 1e-11, 2}});
  const HermitianMatrix m = symmetrize(raw);
  CHECK(m(0, 0).imag() == 0.0);
  CHECK(m(0, 1) == std::conj(m(1, 0)));
  CHECK(symmetrize(m.to_raw()) == m);
}

TEST_CASE("symmetrize rejects non-finite entries and ragged storage") {
  RawGrid raw(2);
  raw(0, 1) = raw(1, 0) = std::numeric_limits<double>::quiet_NaN();
  CHECK(error_code([&] { symmetrize(raw); }) == ErrorCode::NonFiniteEntry);
  RawGrid ragged(2);
  ragged.entries.pop_back();
  CHECK(error_code([&] { symmetrize(ragged); }) == ErrorCode::NonSquare);
}

TEST_CASE("eigenvalue extremes on closed-form spectra") {
  const auto ones = eig_extremes(HermitianMatrix::ones(3).scaled(2.0));
  CHECK(ones.min_eig == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(ones.max_eig == doctest::Approx(6.0));

  const auto e = eig_extremes(oracle::matrix({{1, I}, {-I, 1}}));
  CHECK(std::abs(e.min_eig) < 1e-14);
  CHECK(e.max_eig == doctest::Approx(2.0));

  for (double c : {0.2, 0.5, 0.9}) {
    const std::size_t n = 5;
    const double x = 0.7;
    const HermitianMatrix m = HermitianMatrix::ones(n).scaled(c * x) + HermitianMatrix::identity(n).scaled((1 - c) * x);
    const auto ext = eig_extremes(m);
    CHECK(ext.min_eig == doctest::Approx((1 - c) * x).epsilon(1e-12));
    CHECK(ext.max_eig == doctest::Approx((1 + (n - 1) * c) * x).epsilon(1e-12));
  }
}

TEST_CASE("eigenvalues agree with the Jacobi oracle") {
  for (std::uint64_t s = 0; s < 20; ++s) {
    const std::size_t n = 1 + s % 8;
    const HermitianMatrix a = sample_psd(s, n) - HermitianMatrix::identity(n).scaled(0.3);
    const auto lib = eigenvalues(a);
    const auto ref = oracle::eigenvalues(a);
    REQUIRE(lib.size() == ref.size());
    for (std::size_t i = 0; i < n; ++i) CHECK(std::abs(lib[i] - ref[i]) < 1e-10);
  }
}

TEST_CASE("eigenvalues refuse dimensions above the cap") {
  CHECK(error_code([] { eigenvalues(HermitianMatrix::identity(kMaxEigenDimension + 1)); }) ==
        ErrorCode::DimensionTooLarge);
}

TEST_CASE("is_psd reports") {
  const PsdReport zero = is_psd(HermitianMatrix::zero(3));
  CHECK(zero.is_psd);
  CHECK(zero.min_eig == doctest::Approx(0.0));

  const PsdReport bad = is_psd(oracle::matrix({{1, 2}, {2, 1}}));
  CHECK_FALSE(bad.is_psd);
  CHECK(bad.min_eig == doctest::Approx(-1.0));
  CHECK(bad.max_eig == doctest::Approx(3.0));
  CHECK(bad.tol_used == kDefaultPsdTol);
}

TEST_CASE("is_psd tolerance scales with the largest eigenvalue") {
  const HermitianMatrix big = HermitianMatrix::diagonal(std::vector<double>{-1e-6, 1e4});
  CHECK(is_psd(big, 1e-9).is_psd);
  CHECK_FALSE(is_psd(big, 1e-11).is_psd);
  const HermitianMatrix small = HermitianMatrix::diagonal(std::vector<double>{-1e-6, 1e-3});
  CHECK_FALSE(is_psd(small, 1e-9).is_psd);
}

TEST_CASE("Schur product identities and closure") {
  const HermitianMatrix a = sample_psd(7, 4);
  CHECK(schur_product(a, HermitianMatrix::ones(4)) == a);
  const HermitianMatrix diag = schur_product(a, HermitianMatrix::identity(4));
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) CHECK(diag(i, j) == (i == j ? a(i, i) : Complex(0.0)));
  CHECK(error_code([&] { schur_product(a, HermitianMatrix::identity(3)); }) == ErrorCode::DimensionMismatch);
}

TEST_CASE("Schur product theorem and Hadamard powers on samples") {
  for (std::uint64_t s = 0; s < 200; ++s) {
    const std::size_t n = 1 + s % 8;
    const HermitianMatrix a = sample_psd(2 * s, n), b = sample_psd(2 * s + 1, n);
    const HermitianMatrix ab = schur_product(a, b);
    CHECK(oracle::min_eig(ab) >= -1e-8 * std::max(1.0, std::abs(oracle::eigenvalues(ab).back())));
    HermitianMatrix power = a;
    for (int k = 2; k <= 5; ++k) {
      power = schur_product(power, a);
      CHECK(oracle::min_eig(power) >= -1e-8);
    }
  }
}

TEST_CASE("Kronecker product") {
  CHECK(kron(HermitianMatrix::identity(2), HermitianMatrix::identity(3)) == HermitianMatrix::identity(6));

  const HermitianMatrix a = oracle::matrix({{2, 0.5 * I}, {-0.5 * I, 1}});
  const HermitianMatrix k = kron(HermitianMatrix::ones(2), a);
  for (std::size_t p = 0; p < 2; ++p)
    for (std::size_t q = 0; q < 2; ++q)
      for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) CHECK(k(p * 2 + i, q * 2 + j) == a(i, j));

  const auto ea = oracle::eigenvalues(a);
  const auto ek = oracle::eigenvalues(k);
  CHECK(std::abs(ek[0]) < 1e-12);
  CHECK(std::abs(ek[1]) < 1e-12);
  CHECK(ek[2] == doctest::Approx(2 * ea[0]));
  CHECK(ek[3] == doctest::Approx(2 * ea[1]));

  CHECK(is_psd(kron(sample_psd(1, 3), sample_psd(2, 2))).is_psd);
}

TEST_CASE("Schur complement") {
  const std::vector<std::size_t> last{2};
  CHECK(schur_complement(HermitianMatrix::identity(3), last) == HermitianMatrix::identity(2));

  for (std::uint64_t s = 0; s < 20; ++s) {
    std::mt19937_64 rng(s);
    const HermitianMatrix a = random_positive_definite(rng, 4, 1.0);
    const std::vector<std::size_t> block{3};
    const HermitianMatrix c = schur_complement(a, block);
    CHECK(c.n() == 3);
    CHECK(is_psd(c).is_psd);
    // det M = det M[block] * det(complement) for a 1x1 block; compared via the product of eigenvalues.
    double det_a = 1.0, det_c = 1.0;
    for (double e : oracle::eigenvalues(a)) det_a *= e;
    for (double e : oracle::eigenvalues(c)) det_c *= e;
    CHECK(det_a == doctest::Approx(a(3, 3).real() * det_c).epsilon(1e-9));
  }

  const HermitianMatrix singular = HermitianMatrix::diagonal(std::vector<double>{1, 1, 0});
  CHECK(error_code([&] { schur_complement(singular, last); }) == ErrorCode::SingularBlock);
}

TEST_CASE("permutation conjugation") {
  const HermitianMatrix d = HermitianMatrix::diagonal(std::vector<double>{1, 2, 3});
  const std::vector<std::size_t> swap13{2, 1, 0}, id{0, 1, 2};
  CHECK(permute_conjugate(d, swap13) == HermitianMatrix::diagonal(std::vector<double>{3, 2, 1}));
  CHECK(permute_conjugate(d, id) == d);

  const std::vector<std::size_t> bad{0, 0, 1};
  CHECK(error_code([&] { permute_conjugate(d, bad); }) == ErrorCode::InvalidPermutation);

  std::mt19937_64 rng(3);
  for (int t = 0; t < 20; ++t) {
    const HermitianMatrix a = sample_psd(100 + t, 6) - HermitianMatrix::identity(6).scaled(0.1);
    std::vector<std::size_t> sigma{0, 1, 2, 3, 4, 5};
    std::shuffle(sigma.begin(), sigma.end(), rng);
    const auto before = oracle::eigenvalues(a);
    const auto after = eigenvalues(permute_conjugate(a, sigma));
    for (std::size_t i = 0; i < 6; ++i) CHECK(std::abs(before[i] - after[i]) < 1e-10);
  }
}

TEST_CASE("determinant matches cofactor expansion") {
  for (std::uint64_t s = 0; s < 10; ++s) {
    const HermitianMatrix a = sample_psd(s, 3) - HermitianMatrix::identity(3).scaled(0.2);
    CHECK(std::abs(determinant(a) - oracle::determinant(a)) < 1e-12);
  }
}

TEST_CASE("principal submatrix and arithmetic") {
  const HermitianMatrix a = sample_psd(11, 4);
  const std::vector<std::size_t> idx{3, 1};
  const HermitianMatrix p = a.principal(idx);
  CHECK(p(0, 0) == a(3, 3));
  CHECK(p(0, 1) == a(3, 1));
  CHECK((a + a) == a.scaled(2.0));
  CHECK((a - a) == HermitianMatrix::zero(4));
}
