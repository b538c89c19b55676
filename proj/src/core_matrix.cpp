#include "blockpos/core_matrix.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <Eigen/Dense>

#include "blockpos/kernels.hpp"

namespace blockpos {

namespace {

using EigenMatrix = Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

EigenMatrix to_eigen(const HermitianMatrix& m) {
  EigenMatrix out(m.n(), m.n());
  for (std::size_t i = 0; i < m.n(); ++i)
    for (std::size_t j = 0; j < m.n(); ++j) out(i, j) = m(i, j);
  return out;
}

bool finite(const Complex& z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

void require_same_dim(const HermitianMatrix& a, const HermitianMatrix& b) {
  if (a.n() != b.n())
    throw Error(ErrorCode::DimensionMismatch,
                std::to_string(a.n()) + " vs " + std::to_string(b.n()));
}

}  // namespace

HermitianMatrix HermitianMatrix::zero(std::size_t n) {
  HermitianMatrix m;
  m.n_ = n;
  m.data_.assign(n * n, Complex{});
  return m;
}

HermitianMatrix HermitianMatrix::identity(std::size_t n) {
  auto m = zero(n);
  for (std::size_t i = 0; i < n; ++i) m.data_[i * n + i] = 1.0;
  return m;
}

HermitianMatrix HermitianMatrix::ones(std::size_t n) {
  HermitianMatrix m;
  m.n_ = n;
  m.data_.assign(n * n, Complex{1.0, 0.0});
  return m;
}

HermitianMatrix HermitianMatrix::diagonal(std::span<const double> d) {
  auto m = zero(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (!std::isfinite(d[i])) throw Error(ErrorCode::NonFiniteEntry, "diagonal entry");
    m.data_[i * d.size() + i] = d[i];
  }
  return m;
}

RawGrid HermitianMatrix::to_raw() const {
  RawGrid raw(n_);
  raw.entries = data_;
  return raw;
}

double HermitianMatrix::max_abs_entry() const {
  double best = 0.0;
  for (const auto& z : data_) best = std::max(best, std::abs(z));
  return best;
}

HermitianMatrix HermitianMatrix::operator+(const HermitianMatrix& rhs) const {
  require_same_dim(*this, rhs);
  HermitianMatrix out = *this;
  for (std::size_t k = 0; k < data_.size(); ++k) out.data_[k] += rhs.data_[k];
  return out;
}

HermitianMatrix HermitianMatrix::operator-(const HermitianMatrix& rhs) const {
  require_same_dim(*this, rhs);
  HermitianMatrix out = *this;
  for (std::size_t k = 0; k < data_.size(); ++k) out.data_[k] -= rhs.data_[k];
  return out;
}

HermitianMatrix HermitianMatrix::scaled(double s) const {
  HermitianMatrix out = *this;
  for (auto& z : out.data_) z *= s;
  return out;
}

HermitianMatrix HermitianMatrix::principal(std::span<const std::size_t> idx) const {
  HermitianMatrix out = zero(idx.size());
  for (std::size_t a = 0; a < idx.size(); ++a) {
    if (idx[a] >= n_) throw Error(ErrorCode::InvalidArgument, "principal index out of range");
    for (std::size_t b = 0; b < idx.size(); ++b)
      out.data_[a * idx.size() + b] = (*this)(idx[a], idx[b]);
  }
  return out;
}

HermitianMatrix symmetrize(const RawGrid& raw, double asym_tol) {
  if (raw.entries.size() != raw.n * raw.n)
    throw Error(ErrorCode::NonSquare, "grid holds " + std::to_string(raw.entries.size()) +
                                          " entries for n=" + std::to_string(raw.n));
  double scale = 1.0;
  for (const auto& z : raw.entries) {
    if (!finite(z)) throw Error(ErrorCode::NonFiniteEntry, "matrix entry is NaN or Inf");
    scale = std::max(scale, std::abs(z));
  }
  const std::size_t n = raw.n;
  HermitianMatrix out = HermitianMatrix::zero(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      const Complex a = raw(i, j);
      const Complex b = std::conj(raw(j, i));
      if (std::abs(a - b) > asym_tol * scale)
        throw Error(ErrorCode::AsymmetricInput,
                    "entry (" + std::to_string(i) + "," + std::to_string(j) + ")");
      Complex avg = (a == b) ? a : 0.5 * (a + b);
      if (i == j) avg = Complex{avg.real(), 0.0};
      out.data_[i * n + j] = avg;
      out.data_[j * n + i] = std::conj(avg);
    }
  }
  return out;
}

HermitianMatrix hermitian_from_upper(const RawGrid& raw) {
  const std::size_t n = raw.n;
  HermitianMatrix out = HermitianMatrix::zero(n);
  for (std::size_t i = 0; i < n; ++i) {
    out.data_[i * n + i] = Complex{raw(i, i).real(), 0.0};
    for (std::size_t j = i + 1; j < n; ++j) {
      out.data_[i * n + j] = raw(i, j);
      out.data_[j * n + i] = std::conj(raw(i, j));
    }
  }
  return out;
}

std::vector<double> eigenvalues(const HermitianMatrix& m) {
  if (m.n() == 0) return {};
  if (m.n() > kMaxEigenDimension)
    throw Error(ErrorCode::DimensionTooLarge, "n=" + std::to_string(m.n()) + " exceeds " +
                                                  std::to_string(kMaxEigenDimension));
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(to_eigen(m), Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success)
    throw Error(ErrorCode::EigFailure, "eigensolver did not converge");
  const auto& ev = solver.eigenvalues();
  std::vector<double> out(ev.data(), ev.data() + ev.size());
  std::sort(out.begin(), out.end());
  return out;
}

EigExtremes eig_extremes(const HermitianMatrix& m) {
  const auto ev = eigenvalues(m);
  if (ev.empty()) return {};
  return {ev.front(), ev.back()};
}

PsdReport is_psd(const HermitianMatrix& m, double tol) {
  if (!(tol >= 0.0)) throw Error(ErrorCode::InvalidArgument, "tolerance must be >= 0");
  const auto ext = eig_extremes(m);
  PsdReport r;
  r.min_eig = ext.min_eig;
  r.max_eig = ext.max_eig;
  r.tol_used = tol;
  r.is_psd = ext.min_eig >= -tol * std::max(1.0, std::abs(ext.max_eig));
  return r;
}

Complex determinant(const HermitianMatrix& m) {
  if (m.n() == 0) return 1.0;
  return to_eigen(m).partialPivLu().determinant();
}

HermitianMatrix schur_product(const HermitianMatrix& a, const HermitianMatrix& b) {
  require_same_dim(a, b);
  RawGrid out(a.n());
  kernels::omp::hadamard(a.entries(), b.entries(), out.entries);
  return hermitian_from_upper(out);
}

HermitianMatrix kron(const HermitianMatrix& a, const HermitianMatrix& b) {
  RawGrid out(a.n() * b.n());
  kernels::omp::kron(a.entries(), a.n(), b.entries(), b.n(), out.entries);
  return hermitian_from_upper(out);
}

HermitianMatrix schur_complement(const HermitianMatrix& m, std::span<const std::size_t> block) {
  const std::size_t n = m.n();
  std::vector<char> in_block(n, 0);
  for (auto b : block) {
    if (b >= n) throw Error(ErrorCode::InvalidArgument, "block index out of range");
    if (in_block[b]) throw Error(ErrorCode::InvalidArgument, "repeated block index");
    in_block[b] = 1;
  }
  std::vector<std::size_t> rest;
  for (std::size_t i = 0; i < n; ++i)
    if (!in_block[i]) rest.push_back(i);

  const EigenMatrix full = to_eigen(m);
  const std::size_t nb = block.size(), nr = rest.size();
  EigenMatrix mbb(nb, nb), mrb(nr, nb), mrr(nr, nr);
  for (std::size_t a = 0; a < nb; ++a)
    for (std::size_t b = 0; b < nb; ++b) mbb(a, b) = full(block[a], block[b]);
  for (std::size_t a = 0; a < nr; ++a) {
    for (std::size_t b = 0; b < nb; ++b) mrb(a, b) = full(rest[a], block[b]);
    for (std::size_t b = 0; b < nr; ++b) mrr(a, b) = full(rest[a], rest[b]);
  }

  const auto ext = eig_extremes(m);
  const double scale = std::max(std::abs(ext.max_eig), std::abs(ext.min_eig));
  const Eigen::JacobiSVD<Eigen::MatrixXcd> svd(mbb);
  const double smin = nb == 0 ? 1.0 : svd.singularValues().minCoeff();
  if (nb > 0 && !(smin > 1e-12 * scale))
    throw Error(ErrorCode::SingularBlock, "min singular value " + std::to_string(smin));

  const EigenMatrix comp = mrr - mrb * mbb.partialPivLu().solve(EigenMatrix(mrb.adjoint()));
  RawGrid raw(nr);
  for (std::size_t a = 0; a < nr; ++a)
    for (std::size_t b = 0; b < nr; ++b) raw(a, b) = comp(a, b);
  return symmetrize(raw);
}

bool is_permutation(std::span<const std::size_t> sigma, std::size_t n) {
  if (sigma.size() != n) return false;
  std::vector<char> seen(n, 0);
  for (auto s : sigma) {
    if (s >= n || seen[s]) return false;
    seen[s] = 1;
  }
  return true;
}

HermitianMatrix permute_conjugate(const HermitianMatrix& m, std::span<const std::size_t> sigma) {
  if (!is_permutation(sigma, m.n()))
    throw Error(ErrorCode::InvalidPermutation, "sigma is not a bijection of [n]");
  return m.principal(sigma);
}

}  // namespace blockpos
