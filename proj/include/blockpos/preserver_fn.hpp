#pragma once

#include <functional>
#include <limits>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "blockpos/block_pattern.hpp"
#include "blockpos/core_matrix.hpp"
#include "blockpos/fraction.hpp"

namespace blockpos {

enum class DomainKind { Disc, OpenSym, HalfOpenNonneg, OpenPos };

/// D(0,rho), (-rho,rho), [0,rho) or (0,rho); rho may be +infinity.
struct Domain {
  DomainKind kind = DomainKind::Disc;
  double rho = std::numeric_limits<double>::infinity();

  static Domain disc(double rho) { return {DomainKind::Disc, rho}; }
  static Domain open_sym(double rho) { return {DomainKind::OpenSym, rho}; }
  static Domain half_open_nonneg(double rho) { return {DomainKind::HalfOpenNonneg, rho}; }
  static Domain open_pos(double rho) { return {DomainKind::OpenPos, rho}; }

  /// Open upper boundary is enforced as |z| <= rho - 1e-15 rho for finite rho.
  bool contains(Complex z) const;
  bool contains_zero() const { return kind != DomainKind::OpenPos; }
  bool is_real() const { return kind != DomainKind::Disc; }
  bool finite() const { return rho < std::numeric_limits<double>::infinity(); }
  std::string to_string() const;

  friend bool operator==(const Domain&, const Domain&) = default;
};

std::string to_string(DomainKind kind);

class PreserverFunction;

/// alpha z^m conj(z)^k with alpha >= 0.
struct HerzMonomial {
  double alpha = 1.0;
  int m = 1;
  int k = 0;
};

struct HerzTerm {
  int m = 0;
  int k = 0;
  double c = 0.0;
};

/// Sum of c_{m,k} z^m conj(z)^k over terms with m + k <= max_degree.
struct HerzSeries {
  std::vector<HerzTerm> terms;
  int max_degree = 8;
};

struct ScalarMultiple {
  double c = 1.0;
  std::optional<Fraction> exact_c;  // kept for exact reporting when c came from a rational
  std::shared_ptr<const PreserverFunction> inner;
};

struct IdentityFn {};
struct ZeroFn {};

/// User-supplied evaluator. Must be pure and safe to call concurrently; the
/// conjugate-equivariance declaration is checked by sampling before use.
struct CustomFn {
  std::string name;
  std::function<Complex(Complex)> fn;
  bool declared_conjugate_equivariant = true;
};

class PreserverFunction {
 public:
  using Variant = std::variant<HerzMonomial, HerzSeries, ScalarMultiple, IdentityFn, ZeroFn, CustomFn>;

  PreserverFunction() : v_(IdentityFn{}) {}

  static PreserverFunction identity() { return PreserverFunction(IdentityFn{}); }
  static PreserverFunction zero() { return PreserverFunction(ZeroFn{}); }
  static PreserverFunction herz_monomial(double alpha, int m, int k);
  static PreserverFunction herz_series(std::vector<HerzTerm> terms, int max_degree = 8);
  static PreserverFunction scalar_multiple(double c, PreserverFunction inner);
  static PreserverFunction scalar_multiple(Fraction c, PreserverFunction inner);
  static PreserverFunction custom(std::string name, std::function<Complex(Complex)> fn,
                                  bool declared_conjugate_equivariant = true);

  /// Unchecked evaluation; domain membership is the caller's concern.
  Complex operator()(Complex z) const;

  const Variant& variant() const noexcept { return v_; }
  std::string describe() const;

  /// c when the function is c * identity (Identity -> 1, Zero -> 0).
  std::optional<double> linear_coefficient() const;
  /// True for Herz monomials/series and nonnegative multiples thereof.
  bool is_herz() const;

 private:
  explicit PreserverFunction(Variant v) : v_(std::move(v)) {}
  Variant v_;
};

/// Checked evaluation: throws OutOfDomain when z is not in the domain.
Complex evaluate(const PreserverFunction& f, Complex z, const Domain& domain);

inline constexpr double kEquivarianceTol = 1e-10;

/// |f(conj z) - conj(f(z))| <= 1e-10 for every sample.
bool conjugate_equivariance_check(const PreserverFunction& f, std::span<const Complex> samples);

/// Conjugation-closed probe points inside the domain.
std::vector<Complex> equivariance_probe(const Domain& domain);

struct FamilyDescriptor {
  Regime regime;
  std::string description;
  std::optional<ClosedInterval> c_interval;
  std::optional<std::string> constraint;
};

/// Admissible f (with g = identity) for a regime.
FamilyDescriptor admissible_family(const Regime& regime);

/// Interval for c in f = c g under the (g, f) framework, g a Herz monomial.
/// Throws RegimeMismatch outside R3a/R3b.
ClosedInterval admissible_c_interval_pair(const Regime& regime, const HerzMonomial& g);

/// g(x) - f(x) >= -1e-12 on every sample; samples must lie in I and be real >= 0.
bool dominance_check(const PreserverFunction& g, const PreserverFunction& f, const Domain& domain,
                     std::span<const double> samples);

}  // namespace blockpos
