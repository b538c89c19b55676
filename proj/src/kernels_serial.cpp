#include "blockpos/kernels.hpp"
#include "blockpos/preserver_fn.hpp"

namespace blockpos::kernels::serial {

void hadamard(std::span<const Complex> a, std::span<const Complex> b, std::span<Complex> out) {
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = a[k] * b[k];
}

void kron(std::span<const Complex> a, std::size_t na, std::span<const Complex> b, std::size_t nb,
          std::span<Complex> out) {
  const std::size_t n = na * nb;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      out[i * n + j] = a[(i / nb) * na + j / nb] * b[(i % nb) * nb + j % nb];
}

void gram(std::span<const Complex> b, std::size_t n, std::size_t r, std::span<Complex> out) {
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      Complex s{};
      for (std::size_t k = 0; k < r; ++k) s += b[i * r + k] * std::conj(b[j * r + k]);
      out[i * n + j] = s;
      out[j * n + i] = std::conj(s);
    }
    out[i * n + i] = Complex{out[i * n + i].real(), 0.0};
  }
}

void entrywise(const RawGrid& a, const Mask& mask, const PreserverFunction& g,
               const PreserverFunction& f, RawGrid& out) {
  for (std::size_t i = 0; i < a.n; ++i)
    for (std::size_t j = 0; j < a.n; ++j) out(i, j) = mask(i, j) ? g(a(i, j)) : f(a(i, j));
}

}  // namespace blockpos::kernels::serial
