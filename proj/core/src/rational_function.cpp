#include "salemforge/rational_function.hpp"

#include "salemforge/error.hpp"

namespace salemforge {

RationalFunction::RationalFunction(IntPolynomial num, IntPolynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) fail(ErrorCode::DivisionByZero, "rational function with zero denominator");
  if (num_.is_zero()) {
    den_ = IntPolynomial{1};
    return;
  }
  const IntPolynomial g = gcd(num_, den_);
  if (g.degree() > 0) {
    num_ = div_exact(num_, g);
    den_ = div_exact(den_, g);
  }
  Integer c = gcd(content(num_), content(den_));
  if (c != 1) {
    num_ = divide_scalar(num_, c);
    den_ = divide_scalar(den_, c);
  }
  if (den_.leading() < 0) {
    num_ = -num_;
    den_ = -den_;
  }
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction r = *this;
  r.num_ = -r.num_;
  return r;
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  if (a.den_ == b.den_) return RationalFunction(a.num_ + b.num_, a.den_);
  return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
}

RationalFunction operator*(const RationalFunction& a, const Integer& s) {
  return RationalFunction(a.num_ * s, a.den_);
}

bool LimitAtOne::greater_than(const Rational& c) const {
  switch (kind) {
    case Kind::PlusInf: return true;
    case Kind::MinusInf: return false;
    case Kind::Finite: return value > c;
  }
  return false;
}

bool LimitAtOne::less_than(const Rational& c) const {
  switch (kind) {
    case Kind::PlusInf: return false;
    case Kind::MinusInf: return true;
    case Kind::Finite: return value < c;
  }
  return false;
}

std::string to_string(const LimitAtOne& lim) {
  switch (lim.kind) {
    case LimitAtOne::Kind::PlusInf: return "PLUS_INF";
    case LimitAtOne::Kind::MinusInf: return "MINUS_INF";
    case LimitAtOne::Kind::Finite: return "FINITE(" + lim.value.get_str() + ")";
  }
  return "?";
}

LimitAtOne limit_at_one(const RationalFunction& f) {
  LimitAtOne out;
  if (f.is_zero()) return out;
  const auto [a, n1] = divide_out(f.num(), linear(1));
  const auto [b, d1] = divide_out(f.den(), linear(1));
  if (a > b) return out;
  Rational r(evaluate(n1, Integer(1)), evaluate(d1, Integer(1)));
  r.canonicalize();
  if (a == b) {
    out.value = r;
    return out;
  }
  // (z - 1)^(a - b) is small and positive just above 1.
  out.kind = r > 0 ? LimitAtOne::Kind::PlusInf : LimitAtOne::Kind::MinusInf;
  return out;
}

}  // namespace salemforge
