#include "blockpos/sampling.hpp"

#include <cmath>

#include "blockpos/kernels.hpp"

namespace blockpos {

namespace {

HermitianMatrix gram_of(const std::vector<Complex>& b, std::size_t n, std::size_t r) {
  RawGrid out(n);
  kernels::omp::gram(b, n, r, out.entries);
  return hermitian_from_upper(out);
}

}  // namespace

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t stream_seed(std::uint64_t master, std::size_t n, std::string_view family,
                          std::uint64_t index) {
  // FNV-1a keeps the family tag independent of std::hash.
  std::uint64_t tag = 0xcbf29ce484222325ULL;
  for (unsigned char ch : family) tag = (tag ^ ch) * 0x100000001b3ULL;
  std::uint64_t s = splitmix64(master);
  s = splitmix64(s ^ static_cast<std::uint64_t>(n));
  s = splitmix64(s ^ tag);
  return splitmix64(s ^ index);
}

HermitianMatrix random_psd(std::mt19937_64& rng, std::size_t n, const Domain& domain, bool rank_one) {
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "n must be >= 1");
  std::normal_distribution<double> normal;
  std::bernoulli_distribution coin(0.5);
  std::size_t r = 1;
  if (!rank_one && !coin(rng)) r = std::uniform_int_distribution<std::size_t>(1, n)(rng);

  for (;;) {
    std::vector<Complex> b(n * r);
    for (auto& x : b) {
      switch (domain.kind) {
        case DomainKind::Disc: {
          const double re = normal(rng);
          x = {re, normal(rng)};
          break;
        }
        case DomainKind::OpenSym: x = normal(rng); break;
        case DomainKind::HalfOpenNonneg:
        case DomainKind::OpenPos: x = std::abs(normal(rng)); break;
      }
    }
    HermitianMatrix a = gram_of(b, n, r);
    const double m = a.max_abs_entry();
    if (m == 0.0) continue;
    if (domain.kind == DomainKind::OpenPos) {
      bool positive = true;
      for (const auto& z : a.entries()) positive = positive && z.real() > 0.0;
      if (!positive) continue;
    }
    if (domain.finite()) a = a.scaled(0.95 * domain.rho / m);
    return a;
  }
}

HermitianMatrix random_correlation(std::mt19937_64& rng, std::size_t n) {
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "n must be >= 1");
  std::normal_distribution<double> normal;
  const std::size_t r = std::uniform_int_distribution<std::size_t>(1, n)(rng);
  std::vector<Complex> b(n * r);
  for (std::size_t i = 0; i < n; ++i) {
    double norm = 0.0;
    do {
      norm = 0.0;
      for (std::size_t k = 0; k < r; ++k) {
        const double re = normal(rng);
        b[i * r + k] = {re, normal(rng)};
        norm += std::norm(b[i * r + k]);
      }
    } while (norm == 0.0);
    const double s = 1.0 / std::sqrt(norm);
    for (std::size_t k = 0; k < r; ++k) b[i * r + k] *= s;
  }
  RawGrid out(n);
  kernels::omp::gram(b, n, r, out.entries);
  for (std::size_t i = 0; i < n; ++i) out(i, i) = 1.0;
  return hermitian_from_upper(out);
}

HermitianMatrix random_positive_definite(std::mt19937_64& rng, std::size_t n, double scale) {
  std::normal_distribution<double> normal;
  const std::size_t r = n + 2;
  std::vector<Complex> b(n * r);
  for (auto& x : b) x = normal(rng);
  HermitianMatrix a = gram_of(b, n, r);
  return a.scaled(scale / a.max_abs_entry());
}

}  // namespace blockpos
