#include <random>
#include <set>

#include "doctest.h"

#include "blockpos/sampling.hpp"
#include "oracles.hpp"

using namespace blockpos;

TEST_CASE("stream seeds are stable and separate families") {
  CHECK(stream_seed(0, 3, "random_psd", 0) == stream_seed(0, 3, "random_psd", 0));
  std::set<std::uint64_t> seen;
  for (std::size_t n = 1; n <= 8; ++n)
    for (std::uint64_t i = 0; i < 50; ++i)
      for (const char* fam : {"random_psd", "correlation"}) seen.insert(stream_seed(7, n, fam, i));
  CHECK(seen.size() == 8 * 50 * 2);
  CHECK(splitmix64(0) != splitmix64(1));
}

TEST_CASE("random PSD samples respect the domain") {
  const std::vector<Domain> domains{Domain::disc(1.0), Domain::open_sym(2.0), Domain::half_open_nonneg(0.5),
                                    Domain::open_pos(3.0), Domain::disc(std::numeric_limits<double>::infinity())};
  for (const auto& d : domains) {
    std::mt19937_64 rng(11);
    for (int t = 0; t < 40; ++t) {
      const std::size_t n = 1 + t % 8;
      const HermitianMatrix a = random_psd(rng, n, d, t % 3 == 0);
      for (Complex z : a.entries()) CHECK(d.contains(z));
      const auto e = oracle::eigenvalues(a);
      CHECK(e.front() >= -1e-10 * std::max(1.0, e.back()));
      if (d.finite()) CHECK(a.max_abs_entry() == doctest::Approx(0.95 * d.rho));
    }
  }
}

TEST_CASE("rank-one samples have rank one") {
  std::mt19937_64 rng(2);
  for (int t = 0; t < 20; ++t) {
    const auto e = oracle::eigenvalues(random_psd(rng, 5, Domain::disc(1.0), true));
    for (std::size_t i = 0; i + 1 < e.size(); ++i) CHECK(std::abs(e[i]) < 1e-10);
  }
}

TEST_CASE("correlation samples have unit diagonal") {
  std::mt19937_64 rng(4);
  for (int t = 0; t < 20; ++t) {
    const HermitianMatrix c = random_correlation(rng, 6);
    for (std::size_t i = 0; i < 6; ++i) CHECK(c(i, i) == Complex(1.0));
    CHECK(oracle::min_eig(c) >= -1e-10);
  }
}

TEST_CASE("positive definite samples are invertible") {
  std::mt19937_64 rng(6);
  for (int t = 0; t < 20; ++t) {
    const HermitianMatrix a = random_positive_definite(rng, 5, 2.0);
    CHECK(a.max_abs_entry() == doctest::Approx(2.0));
    CHECK(oracle::min_eig(a) > 1e-8);
  }
}
