#include <exception>

#include "blockpos/kernels.hpp"
#include "blockpos/preserver_fn.hpp"

namespace blockpos::kernels::omp {

// Small matrices stay serial; thread start-up dominates below this size.
constexpr std::size_t kParallelThreshold = 4096;

void hadamard(std::span<const Complex> a, std::span<const Complex> b, std::span<Complex> out) {
  const auto total = static_cast<std::ptrdiff_t>(out.size());
#pragma omp parallel for schedule(static) if (out.size() >= kParallelThreshold)
  for (std::ptrdiff_t k = 0; k < total; ++k) out[k] = a[k] * b[k];
}

void kron(std::span<const Complex> a, std::size_t na, std::span<const Complex> b, std::size_t nb,
          std::span<Complex> out) {
  const std::size_t n = na * nb;
  const auto rows = static_cast<std::ptrdiff_t>(n);
#pragma omp parallel for schedule(static) if (n * n >= kParallelThreshold)
  for (std::ptrdiff_t ii = 0; ii < rows; ++ii) {
    const auto i = static_cast<std::size_t>(ii);
    for (std::size_t j = 0; j < n; ++j)
      out[i * n + j] = a[(i / nb) * na + j / nb] * b[(i % nb) * nb + j % nb];
  }
}

void gram(std::span<const Complex> b, std::size_t n, std::size_t r, std::span<Complex> out) {
  const auto rows = static_cast<std::ptrdiff_t>(n);
#pragma omp parallel for schedule(dynamic) if (n * n * r >= kParallelThreshold)
  for (std::ptrdiff_t ii = 0; ii < rows; ++ii) {
    const auto i = static_cast<std::size_t>(ii);
    for (std::size_t j = i; j < n; ++j) {
      Complex s{};
      for (std::size_t k = 0; k < r; ++k) s += b[i * r + k] * std::conj(b[j * r + k]);
      out[i * n + j] = s;
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    out[i * n + i] = Complex{out[i * n + i].real(), 0.0};
    for (std::size_t j = i + 1; j < n; ++j) out[j * n + i] = std::conj(out[i * n + j]);
  }
}

void entrywise(const RawGrid& a, const Mask& mask, const PreserverFunction& g,
               const PreserverFunction& f, RawGrid& out) {
  const auto rows = static_cast<std::ptrdiff_t>(a.n);
  std::exception_ptr failure;
#pragma omp parallel for schedule(static) if (a.n * a.n >= kParallelThreshold)
  for (std::ptrdiff_t ii = 0; ii < rows; ++ii) {
    const auto i = static_cast<std::size_t>(ii);
    try {
      for (std::size_t j = 0; j < a.n; ++j) out(i, j) = mask(i, j) ? g(a(i, j)) : f(a(i, j));
    } catch (...) {
#pragma omp critical
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
}

}  // namespace blockpos::kernels::omp
