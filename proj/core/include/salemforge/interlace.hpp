#pragma once

#include <optional>
#include <string>
#include <vector>

#include "salemforge/limit_spec.hpp"
#include "salemforge/poly.hpp"
#include "salemforge/rational_function.hpp"
#include "salemforge/rootloc.hpp"

namespace salemforge {

/// For reciprocal R, the polynomial r in x = w + 1/w with R(w^2) = w^deg(R) r(x).
IntPolynomial x_transform(const IntPolynomial& reciprocal);

struct PoleResidue {
  IsolatingInterval pole;
  /// Sign of the partial-fraction coefficient at the pole.
  int sign = 0;
};

/// q(x)/p(x) equal to sqrt(z) Q(z) / ((z-1) P(z)) under x = sqrt(z) + 1/sqrt(z).
struct RealQuotient {
  IntPolynomial q;
  IntPolynomial p;
  /// True when z - 1 divides Q, false when it divides P.
  bool one_divides_q = true;
  /// Poles in increasing order; empty when p has a repeated root.
  std::vector<PoleResidue> residues;
};

/// Throws NotTransformable unless Q, P have positive leading coefficients, equal
/// degree, and one is reciprocal while the other is antireciprocal.
RealQuotient real_quotient(const IntPolynomial& Q, const IntPolynomial& P, bool with_residues = true);

enum class InterlacingKind { CC, CS, SS1, SS2, None };
std::string to_string(InterlacingKind kind);

enum class CirclePoint { One, MinusOne, Upper, Lower };

/// A root on the unit circle, located through u = z + 1/z = 2 cos(arg z).
struct CircleRoot {
  char owner = 'P';
  CirclePoint where = CirclePoint::Upper;
  Rational u_lo;
  Rational u_hi;
  int multiplicity = 1;
  /// Argument in [0, 2 pi), for reporting.
  double angle() const;
};

/// Root layout of a reciprocal or antireciprocal polynomial F, read off the
/// reduced polynomial H with h(z) = z^m H(z + 1/z), where h is F with its roots
/// at 1 and -1 removed.
struct CircleProfile {
  std::size_t mult_one = 0;
  std::size_t mult_minus_one = 0;
  IntPolynomial h;
  IntPolynomial H;
  int in_band = 0;  // roots of H in (-2, 2): conjugate pairs on the circle
  int above = 0;    // roots of H above 2: positive real pairs z, 1/z
  int below = 0;    // roots of H below -2: negative real pairs
  int nonreal = 0;
  bool squarefree = true;

  bool circle_only() const { return above == 0 && below == 0 && nonreal == 0; }
  bool salem_shape() const { return above == 1 && below == 0 && nonreal == 0; }
};

/// Throws InvalidArgument unless f is reciprocal or antireciprocal with positive
/// leading coefficient.
CircleProfile circle_profile(const IntPolynomial& f);

struct InterlacingClassification {
  InterlacingKind kind = InterlacingKind::None;
  /// Circle roots of each polynomial in counterclockwise order from z = 1.
  std::vector<CircleRoot> circle_roots_P;
  std::vector<CircleRoot> circle_roots_Q;
  /// Owners of the merged circle roots in counterclockwise order from z = 1;
  /// for CS the root at 1 is left out.
  std::string circle_order;
  RootCensus census_P;
  RootCensus census_Q;
  std::string failure_reason;
};

InterlacingClassification classify_quotient(const IntPolynomial& Q, const IntPolynomial& P);

/// Q1/P1 + Q2/P2, reduced. Each input must be an interlacing quotient and at most
/// one may be of a flavour other than CC. With verify set, the sum is classified
/// and an Internal error raised if it breaks closure.
RationalFunction sum_quotients(const IntPolynomial& Q1, const IntPolynomial& P1, const IntPolynomial& Q2,
                               const IntPolynomial& P2, bool verify = true);

/// The n-th CC quotient Q_n/P_n approximating (z-1) times the limit function.
RationalFunction cc_approximant(const LimitFunctionSpec& spec, long n);

struct GeneratedPair {
  IntPolynomial Q;
  IntPolynomial P;
  /// Terms of the sum, e.g. "B(1,7;n=5)+A(2;n=3)".
  std::string recipe;
};

/// Deterministic CC pairs for property checks: sums of one, two or three
/// approximant terms, cycling through the term counts. Each term is one of the
/// five families with coefficient 1 or 2 and exponent and index in
/// [1, max_exponent]. Pairs are not classified here.
std::vector<GeneratedPair> generate_cc_pairs(std::size_t count, unsigned seed, long max_exponent = 12);

}  // namespace salemforge
