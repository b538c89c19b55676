#include "blockpos/entrywise_op.hpp"

#include <cmath>
#include <string>

#include "blockpos/kernels.hpp"

namespace blockpos {

namespace {

void check_inputs(const OperatorSpec& spec, const HermitianMatrix& a) {
  if (spec.pattern.n() != a.n())
    throw Error(ErrorCode::DimensionMismatch, "pattern n=" + std::to_string(spec.pattern.n()) +
                                                  ", matrix n=" + std::to_string(a.n()));
  for (std::size_t i = 0; i < a.n(); ++i)
    for (std::size_t j = 0; j < a.n(); ++j)
      if (!spec.domain.contains(a(i, j)))
        throw Error(ErrorCode::OutOfDomain, "entry (" + std::to_string(i + 1) + "," +
                                                std::to_string(j + 1) + ") not in " +
                                                spec.domain.to_string());
}

HermitianMatrix evaluate_grid(const RawGrid& in, const Mask& mask, const PreserverFunction& g,
                              const PreserverFunction& f, Backend backend) {
  RawGrid out(in.n);
  if (backend == Backend::Parallel)
    kernels::omp::entrywise(in, mask, g, f, out);
  else
    kernels::serial::entrywise(in, mask, g, f, out);
  try {
    return symmetrize(out);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::AsymmetricInput)
      throw Error(ErrorCode::NonHermitianOutput,
                  "operator output is not Hermitian; f or g is not conjugate-equivariant");
    throw;
  }
}

}  // namespace

HermitianMatrix apply(const OperatorSpec& spec, const HermitianMatrix& a, Backend backend) {
  check_inputs(spec, a);
  return evaluate_grid(a.to_raw(), mask_matrix(spec.pattern), spec.g, spec.f, backend);
}

HermitianMatrix apply_star(const PreserverFunction& f, const HermitianMatrix& a, const Domain& domain) {
  return apply({PreserverFunction::identity(), f, singletons_pattern(a.n()), domain}, a);
}

Decomposition decompose(const OperatorSpec& spec, const HermitianMatrix& a) {
  check_inputs(spec, a);
  const RawGrid raw = a.to_raw();
  const Mask everywhere_f(a.n());
  const auto gap = PreserverFunction::custom(
      "g-f", [g = spec.g, f = spec.f](Complex z) { return g(z) - f(z); });
  return {evaluate_grid(raw, everywhere_f, spec.f, spec.f, Backend::Parallel),
          evaluate_grid(raw, mask_matrix(spec.pattern), gap, PreserverFunction::zero(),
                        Backend::Parallel)};
}

HermitianMatrix linear_mask_image(const BlockPattern& pattern, double c) {
  const Mask mask = mask_matrix(pattern);
  RawGrid raw(pattern.n());
  for (std::size_t i = 0; i < raw.n; ++i)
    for (std::size_t j = 0; j < raw.n; ++j) raw(i, j) = mask(i, j) ? 1.0 : c;
  return symmetrize(raw);
}

HermitianMatrix mask_factorization(const OperatorSpec& spec, const HermitianMatrix& a) {
  const auto c = spec.f.linear_coefficient();
  const auto g_lin = spec.g.linear_coefficient();
  if (!c || !g_lin || *g_lin != 1.0)
    throw Error(ErrorCode::NonLinearFunction, "mask factorization needs g = id and f = c * id");
  const HermitianMatrix direct = apply(spec, a);
  const HermitianMatrix factored = schur_product(a, linear_mask_image(spec.pattern, *c));
  const double scale = std::max(1.0, a.max_abs_entry());
  for (std::size_t k = 0; k < direct.entries().size(); ++k)
    if (std::abs(direct.entries()[k] - factored.entries()[k]) > 1e-14 * scale)
      throw Error(ErrorCode::FactorizationMismatch, "mask factorization disagrees with direct application");
  return factored;
}

}  // namespace blockpos
