#pragma once

#include <string>
#include <utility>
#include <vector>

#include "salemforge/poly.hpp"

namespace salemforge {

/// Half-open interval (lo, hi] with dyadic endpoints holding exactly
/// `multiplicity` roots of its polynomial, counted with multiplicity.
struct IsolatingInterval {
  Rational lo;
  Rational hi;
  int multiplicity = 1;
  /// The root sits exactly on hi.
  bool hi_is_root = false;

  Rational width() const { return hi - lo; }
  double midpoint() const;
  bool contains(const Rational& x) const { return lo < x && x <= hi; }
};

/// Certified root counts with multiplicity. Roots at z = 0 count as inside.
struct RootCensus {
  int on_circle = 0;
  int inside_disc = 0;
  int outside_disc = 0;
  int real_gt_1 = 0;
  int real_in_01 = 0;

  int total() const { return on_circle + inside_disc + outside_disc; }
  friend bool operator==(const RootCensus&, const RootCensus&) = default;
};

/// Signed remainder sequence P, Q, -rem(P, Q), ... with every entry scaled by a
/// positive integer to stay in Z[x].
std::vector<IntPolynomial> signed_remainder_sequence(const IntPolynomial& p, const IntPolynomial& q);

/// Sturm chain of the square-free part of a polynomial.
class SturmChain {
 public:
  explicit SturmChain(const IntPolynomial& p);

  const IntPolynomial& squarefree() const { return chain_.front(); }
  int variations_at(const Rational& x) const;
  int variations_at_pos_inf() const;
  int variations_at_neg_inf() const;
  /// Distinct real roots in (lo, hi].
  int count(const Rational& lo, const Rational& hi) const;
  int count_all() const { return variations_at_neg_inf() - variations_at_pos_inf(); }

 private:
  std::vector<IntPolynomial> chain_;
};

/// Yun decomposition: primitive, pairwise coprime square-free factors f_i with
/// p = c * prod f_i^i. Entries with f_i = 1 are omitted.
std::vector<std::pair<IntPolynomial, int>> squarefree_decomposition(const IntPolynomial& p);
IntPolynomial squarefree_part(const IntPolynomial& p);

/// Number of distinct real roots of p in (lo, hi].
int sturm_count(const IntPolynomial& p, const Rational& lo, const Rational& hi);

/// Real roots of p in (lo, hi] counted with multiplicity.
int real_root_count(const IntPolynomial& p, const Rational& lo, const Rational& hi);

/// A power of two strictly exceeding the modulus of every complex root.
Rational root_bound(const IntPolynomial& p);

/// Disjoint isolating intervals, each of width <= width, ordered left to right.
std::vector<IsolatingInterval> isolate_real_roots(const IntPolynomial& p, const Rational& width);

/// As isolate_real_roots, restricted to roots in (lo, hi].
std::vector<IsolatingInterval> isolate_real_roots_in(const IntPolynomial& p, const Rational& lo,
                                                     const Rational& hi, const Rational& width);

/// Shrinks an interval around a simple root to width <= width.
/// Throws NotSimple when the interval holds a multiple root.
IsolatingInterval refine_root(const IntPolynomial& f, const IsolatingInterval& iv, const Rational& width);

/// For reciprocal g of even degree 2m, the G with g(z) = z^m G(z + 1/z).
IntPolynomial chebyshev_reduce(const IntPolynomial& reciprocal_even);

/// Unit-circle roots of f counted with multiplicity.
int circle_root_count(const IntPolynomial& f);

/// Inside/on/outside census plus real-axis refinements.
RootCensus disc_root_count(const IntPolynomial& f);

/// Roots strictly inside the unit disc by the Schur transform recursion.
/// Requires f to have no roots on the unit circle; a singular step falls back
/// to inside_count_argument.
int inside_count_schur_cohn(const IntPolynomial& f);

/// Roots strictly inside the unit disc by the argument principle: the winding
/// number of f on the circle, read off a Cauchy index after a Cayley map.
/// Requires f to have no roots on the unit circle.
int inside_count_argument(const IntPolynomial& f);

/// Decimal rendering of x with `digits` fractional digits, rounded down or up.
std::string render_decimal(const Rational& x, int digits, bool round_up);

/// 2^k for any integer k.
Rational pow2(long k);

}  // namespace salemforge
