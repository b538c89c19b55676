#include "blockpos/preserver_fn.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace blockpos {

namespace {

Complex ipow(Complex z, int p) {
  Complex out{1.0, 0.0};
  for (int i = 0; i < p; ++i) out *= z;
  return out;
}

Complex herz_term(double c, int m, int k, Complex z) { return c * (ipow(z, m) * ipow(std::conj(z), k)); }

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

}  // namespace

bool Domain::contains(Complex z) const {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
  const double r = std::abs(z);
  const bool below = !finite() || (r < rho && r <= rho - 1e-15 * rho);
  switch (kind) {
    case DomainKind::Disc: return below;
    case DomainKind::OpenSym: return z.imag() == 0.0 && below;
    case DomainKind::HalfOpenNonneg: return z.imag() == 0.0 && z.real() >= 0.0 && below;
    case DomainKind::OpenPos: return z.imag() == 0.0 && z.real() > 0.0 && below;
  }
  return false;
}

std::string to_string(DomainKind kind) {
  switch (kind) {
    case DomainKind::Disc: return "disc";
    case DomainKind::OpenSym: return "open_sym";
    case DomainKind::HalfOpenNonneg: return "half_open_nonneg";
    case DomainKind::OpenPos: return "open_pos";
  }
  return "unknown";
}

std::string Domain::to_string() const {
  const std::string r = finite() ? fmt(rho) : "inf";
  switch (kind) {
    case DomainKind::Disc: return "D(0," + r + ")";
    case DomainKind::OpenSym: return "(-" + r + "," + r + ")";
    case DomainKind::HalfOpenNonneg: return "[0," + r + ")";
    case DomainKind::OpenPos: return "(0," + r + ")";
  }
  return "?";
}

PreserverFunction PreserverFunction::herz_monomial(double alpha, int m, int k) {
  if (!(alpha >= 0.0) || !std::isfinite(alpha))
    throw Error(ErrorCode::NegativeCoefficient, "Herz monomial needs alpha >= 0");
  if (m < 0 || k < 0) throw Error(ErrorCode::InvalidArgument, "Herz exponents must be >= 0");
  return PreserverFunction(HerzMonomial{alpha, m, k});
}

PreserverFunction PreserverFunction::herz_series(std::vector<HerzTerm> terms, int max_degree) {
  if (max_degree < 0) throw Error(ErrorCode::InvalidArgument, "max_degree must be >= 0");
  for (const auto& t : terms) {
    if (!(t.c >= 0.0) || !std::isfinite(t.c))
      throw Error(ErrorCode::NegativeCoefficient,
                  "c_{" + std::to_string(t.m) + "," + std::to_string(t.k) + "} = " + fmt(t.c));
    if (t.m < 0 || t.k < 0) throw Error(ErrorCode::InvalidArgument, "Herz exponents must be >= 0");
  }
  return PreserverFunction(HerzSeries{std::move(terms), max_degree});
}

PreserverFunction PreserverFunction::scalar_multiple(double c, PreserverFunction inner) {
  if (!std::isfinite(c)) throw Error(ErrorCode::InvalidArgument, "scalar must be finite");
  return PreserverFunction(
      ScalarMultiple{c, std::nullopt, std::make_shared<const PreserverFunction>(std::move(inner))});
}

PreserverFunction PreserverFunction::scalar_multiple(Fraction c, PreserverFunction inner) {
  return PreserverFunction(
      ScalarMultiple{c.to_double(), c, std::make_shared<const PreserverFunction>(std::move(inner))});
}

PreserverFunction PreserverFunction::custom(std::string name, std::function<Complex(Complex)> fn,
                                            bool declared_conjugate_equivariant) {
  if (!fn) throw Error(ErrorCode::InvalidArgument, "custom function needs an evaluator");
  return PreserverFunction(CustomFn{std::move(name), std::move(fn), declared_conjugate_equivariant});
}

Complex PreserverFunction::operator()(Complex z) const {
  return std::visit(
      overloaded{
          [&](const HerzMonomial& h) { return herz_term(h.alpha, h.m, h.k, z); },
          [&](const HerzSeries& s) {
            Complex sum{};
            for (const auto& t : s.terms)
              if (t.m + t.k <= s.max_degree) sum += herz_term(t.c, t.m, t.k, z);
            return sum;
          },
          [&](const ScalarMultiple& s) { return s.c * (*s.inner)(z); },
          [&](const IdentityFn&) { return z; },
          [&](const ZeroFn&) { return Complex{}; },
          [&](const CustomFn& c) { return c.fn(z); },
      },
      v_);
}

std::string PreserverFunction::describe() const {
  return std::visit(
      overloaded{
          [](const HerzMonomial& h) {
            return fmt(h.alpha) + " z^" + std::to_string(h.m) + " conj(z)^" + std::to_string(h.k);
          },
          [](const HerzSeries& s) {
            std::string out;
            for (const auto& t : s.terms) {
              if (!out.empty()) out += " + ";
              out += fmt(t.c) + " z^" + std::to_string(t.m) + " conj(z)^" + std::to_string(t.k);
            }
            return out.empty() ? std::string("0") : out;
          },
          [](const ScalarMultiple& s) {
            const std::string c = s.exact_c ? s.exact_c->to_string() : fmt(s.c);
            return c + " * (" + s.inner->describe() + ")";
          },
          [](const IdentityFn&) { return std::string("z"); },
          [](const ZeroFn&) { return std::string("0"); },
          [](const CustomFn& c) { return "custom:" + c.name; },
      },
      v_);
}

std::optional<double> PreserverFunction::linear_coefficient() const {
  return std::visit(
      overloaded{
          [](const HerzMonomial& h) -> std::optional<double> {
            if (h.m == 1 && h.k == 0) return h.alpha;
            if (h.alpha == 0.0) return 0.0;
            return std::nullopt;
          },
          [](const HerzSeries& s) -> std::optional<double> {
            double c = 0.0;
            for (const auto& t : s.terms) {
              if (t.m + t.k > s.max_degree || t.c == 0.0) continue;
              if (t.m == 1 && t.k == 0)
                c += t.c;
              else
                return std::nullopt;
            }
            return c;
          },
          [](const ScalarMultiple& s) -> std::optional<double> {
            auto inner = s.inner->linear_coefficient();
            if (!inner) return std::nullopt;
            return s.c * *inner;
          },
          [](const IdentityFn&) -> std::optional<double> { return 1.0; },
          [](const ZeroFn&) -> std::optional<double> { return 0.0; },
          [](const CustomFn&) -> std::optional<double> { return std::nullopt; },
      },
      v_);
}

bool PreserverFunction::is_herz() const {
  return std::visit(overloaded{
                        [](const HerzMonomial&) { return true; },
                        [](const HerzSeries&) { return true; },
                        [](const ScalarMultiple& s) { return s.c >= 0.0 && s.inner->is_herz(); },
                        [](const IdentityFn&) { return true; },
                        [](const ZeroFn&) { return true; },
                        [](const CustomFn&) { return false; },
                    },
                    v_);
}

Complex evaluate(const PreserverFunction& f, Complex z, const Domain& domain) {
  if (!domain.contains(z))
    throw Error(ErrorCode::OutOfDomain,
                "(" + fmt(z.real()) + "," + fmt(z.imag()) + ") not in " + domain.to_string());
  return f(z);
}

bool conjugate_equivariance_check(const PreserverFunction& f, std::span<const Complex> samples) {
  for (const auto& z : samples) {
    const Complex lhs = f(std::conj(z));
    const Complex rhs = std::conj(f(z));
    if (!(std::abs(lhs - rhs) <= kEquivarianceTol)) return false;
  }
  return true;
}

std::vector<Complex> equivariance_probe(const Domain& domain) {
  const double scale = domain.finite() ? domain.rho : 3.0;
  std::vector<Complex> out;
  for (double frac : {0.0, 0.3, 0.6, 0.9}) {
    const double r = frac * scale;
    switch (domain.kind) {
      case DomainKind::Disc:
        for (int a = 0; a < 8; ++a) {
          const Complex z = std::polar(r, a * std::numbers::pi / 4.0 + 0.1);
          out.push_back(z);
          out.push_back(std::conj(z));
        }
        break;
      case DomainKind::OpenSym:
        out.push_back(r);
        out.push_back(-r);
        break;
      case DomainKind::HalfOpenNonneg:
        out.push_back(r);
        break;
      case DomainKind::OpenPos:
        if (r > 0.0) out.push_back(r);
        break;
    }
  }
  std::erase_if(out, [&](Complex z) { return !domain.contains(z); });
  return out;
}

FamilyDescriptor admissible_family(const Regime& regime) {
  const std::string herz = "herz_series: f(z) = sum c_{m,k} z^m conj(z)^k with all c_{m,k} >= 0";
  FamilyDescriptor d;
  d.regime = regime;
  switch (regime.kind) {
    case RegimeKind::R1Empty:
      d.description = herz;
      break;
    case RegimeKind::R2Singletons:
      d.description = herz;
      d.constraint = "f(x) ≤ x on I∩ℝ≥0";
      break;
    case RegimeKind::R3aPartitionAllFiniteK:
    case RegimeKind::R3bSubpartitionOther: {
      d.description = "linear: f(z) = c z";
      const bool finite_k = regime.kind == RegimeKind::R3aPartitionAllFiniteK && regime.K;
      if (finite_k && *regime.K < 2)
        throw Error(ErrorCode::InvalidArgument, "a partition regime needs K >= 2");
      const Fraction lo =
          finite_k ? Fraction(-1, static_cast<std::int64_t>(*regime.K) - 1) : Fraction(0);
      d.c_interval = ClosedInterval{lo, Fraction(1)};
      break;
    }
    case RegimeKind::R4Overlapping:
      d.description = "identity only";
      d.constraint = "f = id";
      break;
  }
  return d;
}

ClosedInterval admissible_c_interval_pair(const Regime& regime, const HerzMonomial& g) {
  if (regime.kind != RegimeKind::R3aPartitionAllFiniteK &&
      regime.kind != RegimeKind::R3bSubpartitionOther)
    throw Error(ErrorCode::RegimeMismatch, regime.tag() + " has no scalar interval");
  if (!(g.alpha > 0.0)) throw Error(ErrorCode::InvalidArgument, "g must have alpha > 0");
  return *admissible_family(regime).c_interval;
}

bool dominance_check(const PreserverFunction& g, const PreserverFunction& f, const Domain& domain,
                     std::span<const double> samples) {
  for (double x : samples) {
    if (x < 0.0) throw Error(ErrorCode::InvalidArgument, "dominance samples must be >= 0");
    const Complex gx = evaluate(g, x, domain);
    const Complex fx = evaluate(f, x, domain);
    for (Complex v : {gx, fx})
      if (std::abs(v.imag()) > 1e-12 * std::max(1.0, std::abs(v)))
        throw Error(ErrorCode::NonRealValue, "function is not real at x=" + fmt(x));
    if (gx.real() - fx.real() < -1e-12) return false;
  }
  return true;
}

}  // namespace blockpos
