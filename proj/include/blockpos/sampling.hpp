#pragma once

// Seeded random PSD inputs. Every stream is derived from the master seed and
// a (n, family, index) triple through splitmix64, so a sample never depends
// on how many other samples were drawn before it or on thread scheduling.

#include <cstdint>
#include <random>
#include <string_view>

#include "blockpos/core_matrix.hpp"
#include "blockpos/preserver_fn.hpp"

namespace blockpos {

std::uint64_t splitmix64(std::uint64_t x);

/// Seed for sample `index` of family `family` at dimension n.
std::uint64_t stream_seed(std::uint64_t master, std::size_t n, std::string_view family,
                          std::uint64_t index);

/// B B^* for an n x r Gaussian B, rank r = 1 with probability 1/2 (always when
/// rank_one is set), otherwise uniform in 1..n. Complex entries for the disc,
/// real for the real domains, |.| of the Gaussian for [0,rho) and (0,rho).
/// For finite rho the result is scaled so that max |a_ij| = 0.95 rho.
HermitianMatrix random_psd(std::mt19937_64& rng, std::size_t n, const Domain& domain,
                           bool rank_one = false);

/// Unit-diagonal PSD matrix: Gram matrix of n random unit vectors in C^r.
HermitianMatrix random_correlation(std::mt19937_64& rng, std::size_t n);

/// Positive definite Gram matrix of a full-rank real Gaussian n x (n+2) factor,
/// scaled so that max |a_ij| = scale.
HermitianMatrix random_positive_definite(std::mt19937_64& rng, std::size_t n, double scale);

}  // namespace blockpos
