#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace salemforge {

using Integer = mpz_class;
using Rational = mpq_class;

/// Exact univariate polynomial with arbitrary-precision integer coefficients,
/// stored in ascending order of degree. The representation is always trimmed:
/// the last stored coefficient is nonzero, and the zero polynomial has no
/// coefficients and degree kZeroDegree.
class IntPolynomial {
 public:
  static constexpr int kZeroDegree = -1;

  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<Integer> ascending);
  IntPolynomial(std::initializer_list<long> ascending);

  static IntPolynomial constant(const Integer& c);
  static IntPolynomial monomial(const Integer& c, std::size_t power);
  /// The polynomial z^power.
  static IntPolynomial z_power(std::size_t power) { return monomial(1, power); }

  bool is_zero() const noexcept { return coeffs_.empty(); }
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Integer>& coefficients() const noexcept { return coeffs_; }

  /// Coefficient of z^i; zero beyond the degree.
  Integer coefficient(std::size_t i) const;
  const Integer& leading() const;
  const Integer& constant_term() const;
  bool is_monic() const { return !is_zero() && leading() == 1; }
  bool is_one() const { return coeffs_.size() == 1 && coeffs_[0] == 1; }

  IntPolynomial operator-() const;
  IntPolynomial& operator+=(const IntPolynomial& other);
  IntPolynomial& operator-=(const IntPolynomial& other);
  IntPolynomial& operator*=(const IntPolynomial& other);
  IntPolynomial& operator*=(const Integer& scalar);

  friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
  friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator*(IntPolynomial a, const Integer& s) { return a *= s; }
  friend IntPolynomial operator*(const Integer& s, IntPolynomial a) { return a *= s; }
  friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) {
    return a.coeffs_ == b.coeffs_;
  }
  friend bool operator!=(const IntPolynomial& a, const IntPolynomial& b) { return !(a == b); }

  /// Lexicographic order on the ascending coefficient sequences, shorter first.
  friend bool operator<(const IntPolynomial& a, const IntPolynomial& b);

 private:
  void trim();
  std::vector<Integer> coeffs_;
};

/// Polynomial z - c.
IntPolynomial linear(long root);

IntPolynomial derivative(const IntPolynomial& p);

/// Multiplies by z^k.
IntPolynomial shift_up(const IntPolynomial& p, std::size_t k);

/// Multiplicity of the root z = 0.
std::size_t valuation_at_zero(const IntPolynomial& p);

/// Positive gcd of the coefficients; zero for the zero polynomial.
Integer content(const IntPolynomial& p);

/// p divided by its content, normalized to a positive leading coefficient.
IntPolynomial primitive_part(const IntPolynomial& p);

/// Divides every coefficient by s; throws InexactDivision if s does not divide.
IntPolynomial divide_scalar(const IntPolynomial& p, const Integer& s);

/// Quotient and remainder over the integers when every division step is exact;
/// nullopt when a leading coefficient does not divide.
std::optional<std::pair<IntPolynomial, IntPolynomial>> divmod_integral(const IntPolynomial& a,
                                                                       const IntPolynomial& b);

/// a / b, throwing InexactDivision unless b divides a in Z[z].
IntPolynomial div_exact(const IntPolynomial& a, const IntPolynomial& b);

bool divides(const IntPolynomial& divisor, const IntPolynomial& p);

/// Remainder r with |lc(b)|^e * a = q*b + r; the multiplier is positive so the
/// sign of r agrees with the rational remainder.
IntPolynomial signed_pseudo_remainder(const IntPolynomial& a, const IntPolynomial& b);

/// Primitive gcd with positive leading coefficient; gcd(0, 0) = 0.
IntPolynomial gcd(const IntPolynomial& a, const IntPolynomial& b);

/// Removes every factor `factor` from p; returns (multiplicity, cofactor).
std::pair<std::size_t, IntPolynomial> divide_out(const IntPolynomial& p,
                                                 const IntPolynomial& factor);

Integer evaluate(const IntPolynomial& p, const Integer& x);
Rational evaluate(const IntPolynomial& p, const Rational& x);
/// Sign of p(x), computed without leaving the integers.
int sign_at(const IntPolynomial& p, const Rational& x);

/// Reflected polynomial z^d p(1/z), d = deg p. Throws ZeroPolynomial on zero input.
IntPolynomial star(const IntPolynomial& a);

bool is_reciprocal(const IntPolynomial& p);
bool is_antireciprocal(const IntPolynomial& p);

enum class ArithOp { Add, Sub, Mul, DivExact, Gcd, Content };

/// Single entry point over the basic operations. Content yields the constant
/// polynomial equal to the gcd of all coefficients of a and b.
IntPolynomial arith(const IntPolynomial& a, const IntPolynomial& b, ArithOp op);

// ---------------------------------------------------------------------------
// Cyclotomic polynomials

long euler_phi(long n);

/// n-th cyclotomic polynomial; results are cached and safe to request
/// concurrently.
const IntPolynomial& cyclotomic(long n);

struct CyclotomicSplit {
  IntPolynomial core;
  IntPolynomial cofactor;
  /// Indices n of the removed factors, with repetition.
  std::vector<long> factors;
};

/// Removes every cyclotomic factor (with multiplicity) by trial division over
/// all n with phi(n) <= deg f.
CyclotomicSplit strip_cyclotomic(const IntPolynomial& f);

// ---------------------------------------------------------------------------
// Salem/Pisot shape classification

enum class PolyKind { Cyclotomic, SalemPoly, RecipQuadPisot, PisotPoly, Other };

std::string to_string(PolyKind kind);

struct PolyClassification {
  PolyKind kind = PolyKind::Other;
  /// Primitive input with z-power and cyclotomic factors removed.
  IntPolynomial core;
  IntPolynomial cofactor;
  std::size_t z_power = 0;
  Integer trace;
  /// Present for SalemPoly, RecipQuadPisot and PisotPoly.
  std::optional<IntPolynomial> salem_or_pisot_factor;
};

/// Classifies the primitive part of f. Throws NotMonic when the primitive part
/// (with positive leading coefficient) is not monic.
PolyClassification classify_poly(const IntPolynomial& f);

/// A Pisot polynomial in the narrow sense: z^k times a Pisot minimal polynomial,
/// with no cyclotomic cofactor.
bool is_pisot_polynomial(const IntPolynomial& a);

}  // namespace salemforge
