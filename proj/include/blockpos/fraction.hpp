#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <string>

#include "blockpos/error.hpp"

namespace blockpos {

/// Exact rational with a positive denominator, always in lowest terms.
/// Interval endpoints such as -1/(K-1) are carried this way so that boundary
/// membership never depends on rounding.
class Fraction {
 public:
  constexpr Fraction() = default;
  constexpr Fraction(std::int64_t integer) : num_(integer) {}  // NOLINT: implicit by intent
  Fraction(std::int64_t num, std::int64_t den) : num_(num), den_(den) {
    if (den == 0) throw Error(ErrorCode::InvalidArgument, "zero denominator");
    reduce();
  }

  /// Parses "p/q", "p" or a finite decimal such as "-0.55".
  static Fraction parse(const std::string& text);

  std::int64_t num() const noexcept { return num_; }
  std::int64_t den() const noexcept { return den_; }
  double to_double() const noexcept { return static_cast<double>(num_) / static_cast<double>(den_); }
  std::string to_string() const {
    return den_ == 1 ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_);
  }

  friend Fraction operator+(Fraction a, Fraction b) {
    return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
  }
  friend Fraction operator-(Fraction a, Fraction b) {
    return {a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_};
  }
  friend Fraction operator*(Fraction a, Fraction b) { return {a.num_ * b.num_, a.den_ * b.den_}; }
  friend Fraction operator/(Fraction a, Fraction b) {
    if (b.num_ == 0) throw Error(ErrorCode::InvalidArgument, "division by zero fraction");
    return {a.num_ * b.den_, a.den_ * b.num_};
  }
  friend Fraction operator-(Fraction a) { return {-a.num_, a.den_}; }

  friend bool operator==(const Fraction&, const Fraction&) = default;
  friend std::strong_ordering operator<=>(const Fraction& a, const Fraction& b) {
    return a.num_ * b.den_ <=> b.num_ * a.den_;
  }

 private:
  void reduce() {
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    const std::int64_t g = std::gcd(num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

/// Closed interval [lo, hi] with exact endpoints.
struct ClosedInterval {
  Fraction lo;
  Fraction hi;

  bool contains(Fraction c) const { return lo <= c && c <= hi; }
  /// Compares against the endpoints converted to double; an input produced by
  /// the same division (e.g. -1.0/(K-1)) lands exactly on the endpoint.
  bool contains(double c) const { return lo.to_double() <= c && c <= hi.to_double(); }
  friend bool operator==(const ClosedInterval&, const ClosedInterval&) = default;
};

}  // namespace blockpos
