#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "blockpos/error.hpp"

namespace blockpos {

using Complex = std::complex<double>;

/// Row-major n x n grid with no structural guarantees. Entry point for data
/// that has not yet been checked for conjugate symmetry.
struct RawGrid {
  std::size_t n = 0;
  std::vector<Complex> entries;

  RawGrid() = default;
  explicit RawGrid(std::size_t dim) : n(dim), entries(dim * dim) {}

  Complex& operator()(std::size_t i, std::size_t j) { return entries[i * n + j]; }
  const Complex& operator()(std::size_t i, std::size_t j) const { return entries[i * n + j]; }
};

inline constexpr double kDefaultAsymmetryTol = 1e-8;
inline constexpr double kDefaultPsdTol = 1e-9;
inline constexpr std::size_t kMaxEigenDimension = 64;

/// Dense complex Hermitian matrix. Storage is exactly conjugate symmetric and
/// the diagonal is real; the only ways to build one go through symmetrize()
/// or constructors that preserve the invariant.
class HermitianMatrix {
 public:
  HermitianMatrix() = default;

  static HermitianMatrix zero(std::size_t n);
  static HermitianMatrix identity(std::size_t n);
  static HermitianMatrix ones(std::size_t n);
  static HermitianMatrix diagonal(std::span<const double> d);

  std::size_t n() const noexcept { return n_; }
  const Complex& operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }
  std::span<const Complex> entries() const noexcept { return data_; }

  RawGrid to_raw() const;
  double max_abs_entry() const;

  HermitianMatrix operator+(const HermitianMatrix& rhs) const;
  HermitianMatrix operator-(const HermitianMatrix& rhs) const;
  HermitianMatrix scaled(double s) const;

  /// Principal submatrix on the given (ordered) index list.
  HermitianMatrix principal(std::span<const std::size_t> idx) const;

  friend bool operator==(const HermitianMatrix&, const HermitianMatrix&) = default;

 private:
  friend HermitianMatrix symmetrize(const RawGrid& raw, double asym_tol);
  friend HermitianMatrix hermitian_from_upper(const RawGrid& raw);

  std::size_t n_ = 0;
  std::vector<Complex> data_;
};

/// Returns (raw + raw*)/2. Throws AsymmetricInput when some
/// |raw(i,j) - conj(raw(j,i))| exceeds asym_tol * max(1, max|raw|).
HermitianMatrix symmetrize(const RawGrid& raw, double asym_tol = kDefaultAsymmetryTol);

/// Mirrors the upper triangle into the lower one without any check. Used by
/// kernels whose outputs are Hermitian by construction.
HermitianMatrix hermitian_from_upper(const RawGrid& raw);

struct EigExtremes {
  double min_eig = 0.0;
  double max_eig = 0.0;
};

struct PsdReport {
  double min_eig = 0.0;
  double max_eig = 0.0;
  bool is_psd = false;
  double tol_used = 0.0;
};

/// Full ascending spectrum.
std::vector<double> eigenvalues(const HermitianMatrix& m);
EigExtremes eig_extremes(const HermitianMatrix& m);

/// is_psd <=> min_eig >= -tol * max(1, |max_eig|).
PsdReport is_psd(const HermitianMatrix& m, double tol = kDefaultPsdTol);

Complex determinant(const HermitianMatrix& m);

HermitianMatrix schur_product(const HermitianMatrix& a, const HermitianMatrix& b);
HermitianMatrix kron(const HermitianMatrix& a, const HermitianMatrix& b);

/// M[rest,rest] - M[rest,block] M[block,block]^{-1} M[block,rest], where rest
/// is the complement of block in increasing order.
HermitianMatrix schur_complement(const HermitianMatrix& m, std::span<const std::size_t> block);

/// Returns P M P^T with (P M P^T)(i,j) = M(sigma[i], sigma[j]).
HermitianMatrix permute_conjugate(const HermitianMatrix& m, std::span<const std::size_t> sigma);

bool is_permutation(std::span<const std::size_t> sigma, std::size_t n);

}  // namespace blockpos
