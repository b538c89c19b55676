#pragma once

// Data-parallel inner loops. Each kernel exists twice: an OpenMP version used
// by the library and a plain serial version kept as the reference the tests
// and benchmarks compare against. Both write every output entry from its own
// inputs only, so results are bitwise identical regardless of thread count.

#include <cstddef>
#include <span>
#include <vector>

#include "blockpos/core_matrix.hpp"

namespace blockpos {

class PreserverFunction;

/// Row-major boolean n x n grid; true where the "g" function acts.
struct Mask {
  std::size_t n = 0;
  std::vector<char> cells;

  Mask() = default;
  explicit Mask(std::size_t dim) : n(dim), cells(dim * dim, 0) {}

  bool operator()(std::size_t i, std::size_t j) const { return cells[i * n + j] != 0; }
  void set(std::size_t i, std::size_t j, bool v) { cells[i * n + j] = v ? 1 : 0; }
};

namespace kernels {

namespace serial {
void hadamard(std::span<const Complex> a, std::span<const Complex> b, std::span<Complex> out);
void kron(std::span<const Complex> a, std::size_t na, std::span<const Complex> b, std::size_t nb,
          std::span<Complex> out);
/// out = B B^* for row-major B of shape n x r.
void gram(std::span<const Complex> b, std::size_t n, std::size_t r, std::span<Complex> out);
/// out(i,j) = g(a(i,j)) where mask(i,j), f(a(i,j)) elsewhere.
void entrywise(const RawGrid& a, const Mask& mask, const PreserverFunction& g,
               const PreserverFunction& f, RawGrid& out);
}  // namespace serial

namespace omp {
void hadamard(std::span<const Complex> a, std::span<const Complex> b, std::span<Complex> out);
void kron(std::span<const Complex> a, std::size_t na, std::span<const Complex> b, std::size_t nb,
          std::span<Complex> out);
void gram(std::span<const Complex> b, std::size_t n, std::size_t r, std::span<Complex> out);
void entrywise(const RawGrid& a, const Mask& mask, const PreserverFunction& g,
               const PreserverFunction& f, RawGrid& out);
}  // namespace omp

}  // namespace kernels
}  // namespace blockpos
