#pragma once

#include "blockpos/block_pattern.hpp"
#include "blockpos/core_matrix.hpp"
#include "blockpos/preserver_fn.hpp"

namespace blockpos {

/// (g, f)_{T_n}: g on entries (i,j) sharing a block of the pattern, f elsewhere.
struct OperatorSpec {
  PreserverFunction g = PreserverFunction::identity();
  PreserverFunction f;
  BlockPattern pattern;
  Domain domain;
};

enum class Backend { Parallel, Serial };

/// Checks every entry against the domain (OutOfDomain), evaluates the full
/// grid, then symmetrizes; NonHermitianOutput if the result is not conjugate
/// symmetric within tolerance.
HermitianMatrix apply(const OperatorSpec& spec, const HermitianMatrix& a,
                      Backend backend = Backend::Parallel);

/// f_*[A]: identity on the diagonal, f off it.
HermitianMatrix apply_star(const PreserverFunction& f, const HermitianMatrix& a, const Domain& domain);

struct Decomposition {
  HermitianMatrix f_everywhere;  // f[A]
  HermitianMatrix masked_gap;    // (g - f, 0)_{T_n}[A]
};

/// (g,f)_{T_n}[A] = f[A] + (g - f, 0)_{T_n}[A].
Decomposition decompose(const OperatorSpec& spec, const HermitianMatrix& a);

/// For f = c * id and g = id: returns A o f_{T_n}[1] and checks it against
/// apply(spec, A) entrywise (1e-14 relative). Throws NonLinearFunction otherwise.
HermitianMatrix mask_factorization(const OperatorSpec& spec, const HermitianMatrix& a);

/// f_{T_n}[1] for f = c * id, built directly from the mask (1 need not lie in the domain).
HermitianMatrix linear_mask_image(const BlockPattern& pattern, double c);

}  // namespace blockpos
