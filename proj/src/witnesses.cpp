#include "blockpos/witnesses.hpp"

#include <cmath>
#include <string>

#include "blockpos/json_io.hpp"

namespace blockpos {

namespace {

void require_in_domain(const HermitianMatrix& m, const Domain& domain, const std::string& what) {
  for (std::size_t i = 0; i < m.n(); ++i)
    for (std::size_t j = 0; j < m.n(); ++j)
      if (!domain.contains(m(i, j)))
        throw Error(ErrorCode::OutOfDomain, what + ": entry (" + std::to_string(i + 1) + "," +
                                                std::to_string(j + 1) + ") not in " +
                                                domain.to_string());
}

void require_psd(const HermitianMatrix& m, const std::string& what) {
  const auto r = is_psd(m, kWitnessPsdTol);
  if (!r.is_psd)
    throw Error(ErrorCode::NotPsd, what + ": min eigenvalue " + std::to_string(r.min_eig));
}

Witness finish(HermitianMatrix m, std::string provenance, nlohmann::json params,
               const Domain* domain) {
  if (domain) require_in_domain(m, *domain, provenance);
  require_psd(m, provenance);
  return {std::move(m), std::move(provenance), std::move(params)};
}

}  // namespace

Witness rank_one_gram(std::span<const Complex> v) {
  double norm = 0.0;
  for (const auto& x : v) norm += std::norm(x);
  if (norm == 0.0) throw Error(ErrorCode::ZeroVector, "rank_one_gram needs a nonzero vector");
  RawGrid raw(v.size());
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) raw(i, j) = v[i] * std::conj(v[j]);
  nlohmann::json vj = nlohmann::json::array();
  for (const auto& x : v) vj.push_back(complex_to_json(x));
  return finish(hermitian_from_upper(raw), "rank_one_gram", {{"v", vj}}, nullptr);
}

Witness witness_Aw(Complex w, Complex z, const Domain& domain) {
  const double aw = std::abs(w);
  if (aw == 0.0) throw Error(ErrorCode::ZeroW, "A_w(z) needs w != 0");
  if (!domain.contains(w)) throw Error(ErrorCode::OutOfDomain, "w not in " + domain.to_string());
  if (std::abs(z) > aw) throw Error(ErrorCode::InvalidArgument, "A_w(z) needs |z| <= |w|");
  const Complex z1 = z * std::conj(w) / aw;
  RawGrid raw(3);
  raw(0, 0) = std::norm(z) / aw;
  raw(0, 1) = raw(0, 2) = z1;
  raw(1, 1) = raw(1, 2) = raw(2, 2) = aw;
  return finish(hermitian_from_upper(raw), "A_w(z)",
                {{"w", complex_to_json(w)}, {"z", complex_to_json(z)}}, &domain);
}

Witness witness_Br(double r, Complex z, const Domain& domain) {
  if (!(r > 0.0) || !domain.contains(r))
    throw Error(ErrorCode::OutOfDomain, "B_r(z) needs r > 0 in " + domain.to_string());
  if (std::abs(z) > r) throw Error(ErrorCode::InvalidArgument, "B_r(z) needs |z| <= r");
  RawGrid raw(3);
  raw(0, 0) = r;
  raw(0, 1) = raw(0, 2) = z;
  raw(1, 1) = raw(1, 2) = raw(2, 2) = r;
  return finish(hermitian_from_upper(raw), "B_r(z)", {{"r", r}, {"z", complex_to_json(z)}}, &domain);
}

Witness witness_Mat1_input(Complex w, double t, const Domain& domain) {
  const double aw = std::abs(w);
  if (aw == 0.0) throw Error(ErrorCode::ZeroW, "Mat1 needs w != 0");
  if (!(aw <= t)) throw Error(ErrorCode::InvalidArgument, "Mat1 needs |w| <= t");
  RawGrid raw(3);
  raw(0, 0) = aw * aw / t;
  raw(0, 1) = w * aw / t;
  raw(0, 2) = w;
  raw(1, 1) = aw * aw / t;
  raw(1, 2) = aw;
  raw(2, 2) = t;
  return finish(hermitian_from_upper(raw), "Mat1",
                {{"w", complex_to_json(w)}, {"t", t}}, &domain);
}

HermitianMatrix witness_Mat1(Complex w, double t, const PreserverFunction& g,
                             const PreserverFunction& f, const Domain& domain) {
  const double aw = std::abs(w);
  if (aw == 0.0) throw Error(ErrorCode::ZeroW, "Mat1 needs w != 0");
  if (!(aw <= t)) throw Error(ErrorCode::InvalidArgument, "Mat1 needs |w| <= t");
  RawGrid raw(3);
  raw(0, 0) = evaluate(g, aw * aw / t, domain);
  raw(0, 1) = evaluate(g, w * aw / t, domain);
  raw(0, 2) = evaluate(f, w, domain);
  raw(1, 0) = evaluate(g, std::conj(w) * aw / t, domain);
  raw(1, 1) = raw(0, 0);
  raw(1, 2) = evaluate(f, aw, domain);
  raw(2, 0) = evaluate(f, std::conj(w), domain);
  raw(2, 1) = raw(1, 2);
  raw(2, 2) = evaluate(f, t, domain);
  return symmetrize(raw);
}

Witness witness_allones(double x, std::size_t n, const Domain& domain) {
  if (!(x >= 0.0) || !domain.contains(x))
    throw Error(ErrorCode::OutOfDomain, "x 1_n needs x >= 0 in " + domain.to_string());
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "n must be >= 1");
  return finish(HermitianMatrix::ones(n).scaled(x), "allones", {{"x", x}, {"n", n}}, &domain);
}

Witness tensor_blowup(std::size_t m, const HermitianMatrix& a) {
  if (m == 0) throw Error(ErrorCode::InvalidArgument, "m must be >= 1");
  require_psd(a, "tensor_blowup input");
  return finish(kron(HermitianMatrix::ones(m), a), "tensor_blowup", {{"m", m}, {"base_n", a.n()}},
                nullptr);
}

HermitianMatrix pad_embed(const HermitianMatrix& a, std::size_t n_total,
                          std::span<const std::size_t> sigma, const Domain& domain) {
  if (!domain.contains_zero())
    throw Error(ErrorCode::DomainLacksZero, "cannot pad with zeros in " + domain.to_string());
  if (n_total < a.n()) throw Error(ErrorCode::InvalidArgument, "pad target smaller than input");
  RawGrid raw(n_total);
  for (std::size_t i = 0; i < a.n(); ++i)
    for (std::size_t j = 0; j < a.n(); ++j) raw(i, j) = a(i, j);
  return permute_conjugate(hermitian_from_upper(raw), sigma);
}

HermitianMatrix albert_embed(const HermitianMatrix& a, double eps, const Domain& domain) {
  if (!(eps > 0.0)) throw Error(ErrorCode::InvalidArgument, "eps must be > 0");
  const std::size_t n = a.n();
  for (const auto& z : a.entries())
    if (z.imag() != 0.0 || !(z.real() > 0.0))
      throw Error(ErrorCode::NonPositiveEntries, "Albert embedding needs real positive entries");
  require_in_domain(a, domain, "albert input");

  RawGrid raw(n + 1);
  double total = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double row = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      raw(i, j) = a(i, j);
      row += a(i, j).real();
    }
    raw(i, n) = eps * row;
    total += row;
  }
  raw(n, n) = eps * total;
  HermitianMatrix out = hermitian_from_upper(raw);
  for (const auto& z : out.entries())
    if (!domain.contains(z))
      throw Error(ErrorCode::EpsTooLarge, "embedding leaves " + domain.to_string());
  if (!is_psd(out, kWitnessPsdTol).is_psd) throw Error(ErrorCode::EpsTooLarge, "embedding not PSD");
  return out;
}

AlbertEmbedding albert_embed_auto(const HermitianMatrix& a, const Domain& domain) {
  double eps = 0.5;
  for (int k = 1; k <= 30; ++k, eps *= 0.5) {
    try {
      return {albert_embed(a, eps, domain), eps};
    } catch (const Error& e) {
      if (e.code() != ErrorCode::EpsTooLarge) throw;
    }
  }
  throw Error(ErrorCode::EpsTooLarge, "no eps in {2^-1, ..., 2^-30} works");
}

}  // namespace blockpos
