#pragma once

// Reference computations that share no code with the library: a cyclic Jacobi
// eigensolver on the real 2n x 2n embedding, cofactor determinants and plain
// triple loops.

#include <algorithm>
#include <cmath>
#include <complex>
#include <optional>
#include <stdexcept>
#include <vector>

#include "blockpos/core_matrix.hpp"

namespace oracle {

using blockpos::Complex;
using blockpos::HermitianMatrix;

/// Eigenvalues of a Hermitian matrix, ascending. The embedding
/// [[Re, -Im], [Im, Re]] doubles every eigenvalue; every other one is kept.
inline std::vector<double> eigenvalues(const HermitianMatrix& h) {
  const std::size_t n = h.n(), m = 2 * n;
  std::vector<double> a(m * m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Complex z = h(i, j);
      a[i * m + j] = z.real();
      a[(i + n) * m + (j + n)] = z.real();
      a[i * m + (j + n)] = -z.imag();
      a[(i + n) * m + j] = z.imag();
    }
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (std::size_t p = 0; p < m; ++p)
      for (std::size_t q = p + 1; q < m; ++q) off += a[p * m + q] * a[p * m + q];
    if (off < 1e-30) break;
    for (std::size_t p = 0; p < m; ++p)
      for (std::size_t q = p + 1; q < m; ++q) {
        const double apq = a[p * m + q];
        if (std::abs(apq) < 1e-300) continue;
        const double theta = (a[q * m + q] - a[p * m + p]) / (2.0 * apq);
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0), s = t * c;
        for (std::size_t k = 0; k < m; ++k) {
          const double akp = a[k * m + p], akq = a[k * m + q];
          a[k * m + p] = c * akp - s * akq;
          a[k * m + q] = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < m; ++k) {
          const double apk = a[p * m + k], aqk = a[q * m + k];
          a[p * m + k] = c * apk - s * aqk;
          a[q * m + k] = s * apk + c * aqk;
        }
      }
  }
  std::vector<double> d(m);
  for (std::size_t i = 0; i < m; ++i) d[i] = a[i * m + i];
  std::sort(d.begin(), d.end());
  std::vector<double> out;
  for (std::size_t i = 0; i < m; i += 2) out.push_back(d[i]);
  return out;
}

inline double min_eig(const HermitianMatrix& h) { return oracle::eigenvalues(h).front(); }

inline Complex det2(Complex a, Complex b, Complex c, Complex d) { return a * d - b * c; }

/// Cofactor expansion along the first row.
inline Complex determinant(const HermitianMatrix& h) {
  const std::size_t n = h.n();
  if (n == 1) return h(0, 0);
  if (n == 2) return det2(h(0, 0), h(0, 1), h(1, 0), h(1, 1));
  if (n == 3)
    return h(0, 0) * det2(h(1, 1), h(1, 2), h(2, 1), h(2, 2)) - h(0, 1) * det2(h(1, 0), h(1, 2), h(2, 0), h(2, 2)) +
           h(0, 2) * det2(h(1, 0), h(1, 1), h(2, 0), h(2, 1));
  throw std::invalid_argument("oracle determinant supports n <= 3");
}

inline double max_gap(const HermitianMatrix& a, const HermitianMatrix& b) {
  double g = 0.0;
  for (std::size_t i = 0; i < a.n(); ++i)
    for (std::size_t j = 0; j < a.n(); ++j) g = std::max(g, std::abs(a(i, j) - b(i, j)));
  return g;
}

inline blockpos::RawGrid grid(std::initializer_list<std::initializer_list<Complex>> rows) {
  blockpos::RawGrid g(rows.size());
  std::size_t i = 0;
  for (const auto& row : rows) {
    std::size_t j = 0;
    for (const auto& v : row) g(i, j++) = v;
    ++i;
  }
  return g;
}

inline HermitianMatrix matrix(std::initializer_list<std::initializer_list<Complex>> rows) {
  return blockpos::symmetrize(grid(rows));
}

}  // namespace oracle

namespace oracle {

/// ErrorCode thrown by fn, or nullopt when it returns normally.
template <typename Fn>
std::optional<blockpos::ErrorCode> error_code(Fn&& fn) {
  try {
    fn();
  } catch (const blockpos::Error& e) {
    return e.code();
  }
  return std::nullopt;
}

}  // namespace oracle
