#pragma once

#include <span>
#include <string>

#include "json.hpp"

#include "blockpos/core_matrix.hpp"
#include "blockpos/preserver_fn.hpp"

namespace blockpos {

/// A PSD input matrix together with the construction that produced it.
struct Witness {
  HermitianMatrix matrix;
  std::string provenance;
  nlohmann::json params;
};

inline constexpr double kWitnessPsdTol = 1e-10;

/// v v^*.
Witness rank_one_gram(std::span<const Complex> v);

/// (1/|w|) (z, w, w)(z, w, w)^*, i.e. rows (|z|^2/|w|, z1, z1), (conj z1, |w|, |w|),
/// (conj z1, |w|, |w|) with z1 = z conj(w)/|w|. Needs 0 < |w|, |z| <= |w|.
Witness witness_Aw(Complex w, Complex z, const Domain& domain);

/// Rows (r, z, z), (conj z, r, r), (conj z, r, r) with r > 0, |z| <= r.
Witness witness_Br(double r, Complex z, const Domain& domain);

/// The rank-one input (1/t)(w, |w|, t)(w, |w|, t)^* whose image under
/// (g,f) with T_3 = {{1,2}} is witness_Mat1.
Witness witness_Mat1_input(Complex w, double t, const Domain& domain);

/// Rows (g(|w|^2/t), g(w|w|/t), f(w)), (g(conj(w)|w|/t), g(|w|^2/t), f(|w|)),
/// (f(conj w), f(|w|), f(t)) for 0 < |w| <= t < rho. This is an operator
/// image, not a guaranteed-PSD input, hence the plain matrix return.
HermitianMatrix witness_Mat1(Complex w, double t, const PreserverFunction& g,
                             const PreserverFunction& f, const Domain& domain);

/// x 1_n for real x >= 0 in the domain.
Witness witness_allones(double x, std::size_t n, const Domain& domain);

/// 1_m (x) A.
Witness tensor_blowup(std::size_t m, const HermitianMatrix& a);

/// Zero-pads A to N x N, then conjugates by sigma (output(i,j) = padded(sigma[i], sigma[j])).
/// DomainLacksZero for (0, rho).
HermitianMatrix pad_embed(const HermitianMatrix& a, std::size_t n_total,
                          std::span<const std::size_t> sigma, const Domain& domain);

/// [[A, eps A 1], [eps (A 1)^T, eps sum a_ij]] for A with entries in (0, rho).
HermitianMatrix albert_embed(const HermitianMatrix& a, double eps, const Domain& domain);

struct AlbertEmbedding {
  HermitianMatrix matrix;
  double eps = 0.0;
};

/// Largest eps in {2^-1, ..., 2^-30} whose embedding is PSD (tol 1e-10) with
/// all entries in the domain; EpsTooLarge if none qualifies.
AlbertEmbedding albert_embed_auto(const HermitianMatrix& a, const Domain& domain);

}  // namespace blockpos
