#pragma once

#include <string>

#include "salemforge/poly.hpp"

namespace salemforge {

/// Exact quotient num/den of integer polynomials, kept reduced: the two parts
/// are coprime, share no integer content, and den has a positive leading
/// coefficient. Zero is stored as 0/1.
class RationalFunction {
 public:
  RationalFunction() : den_{1} {}
  RationalFunction(IntPolynomial num, IntPolynomial den = IntPolynomial{1});

  static RationalFunction constant(const Integer& c) { return RationalFunction(IntPolynomial::constant(c)); }
  /// The function 1/z.
  static RationalFunction z_inverse() { return RationalFunction(IntPolynomial{1}, IntPolynomial{0, 1}); }

  const IntPolynomial& num() const noexcept { return num_; }
  const IntPolynomial& den() const noexcept { return den_; }
  bool is_zero() const noexcept { return num_.is_zero(); }

  RationalFunction operator-() const;
  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator*(const RationalFunction& a, const Integer& s);
  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const RationalFunction& a, const RationalFunction& b) { return !(a == b); }

 private:
  IntPolynomial num_;
  IntPolynomial den_;
};

/// One-sided limit as z -> 1 from above.
struct LimitAtOne {
  enum class Kind { PlusInf, MinusInf, Finite };
  Kind kind = Kind::Finite;
  Rational value;  // meaningful for Finite only

  bool greater_than(const Rational& c) const;
  bool less_than(const Rational& c) const;
  friend bool operator==(const LimitAtOne& a, const LimitAtOne& b) {
    return a.kind == b.kind && (a.kind != Kind::Finite || a.value == b.value);
  }
};

std::string to_string(const LimitAtOne& lim);

/// Exact limit from the (z-1)-adic valuations of numerator and denominator.
/// The zero function has limit 0.
LimitAtOne limit_at_one(const RationalFunction& f);

}  // namespace salemforge
