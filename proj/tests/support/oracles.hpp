#pragma once

// Independent numeric and algebraic references. Nothing here calls into the
// library beyond reading coefficients, so tests can compare against them.

#include <gmpxx.h>

#include <algorithm>
#include <cmath>
#include <complex>
#include <utility>
#include <vector>

#include "salemforge/poly.hpp"

namespace oracle {

using cld = std::complex<long double>;

inline std::vector<long double> to_ld(const salemforge::IntPolynomial& p) {
  std::vector<long double> out;
  for (const auto& c : p.coefficients()) out.push_back(static_cast<long double>(c.get_d()));
  return out;
}

inline cld eval(const salemforge::IntPolynomial& p, cld z) {
  const auto c = to_ld(p);
  cld acc = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * z + *it;
  return acc;
}

inline long double eval_real(const salemforge::IntPolynomial& p, long double x) {
  const auto c = to_ld(p);
  long double acc = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
  return acc;
}

// Weierstrass iteration on the monic normalisation.
inline std::vector<cld> durand_kerner(const salemforge::IntPolynomial& p, int max_iter = 5000) {
  auto c = to_ld(p);
  const int n = static_cast<int>(c.size()) - 1;
  if (n < 1) return {};
  const long double lead = c.back();
  for (auto& x : c) x /= lead;
  long double bound = 0;
  for (int i = 0; i < n; ++i) bound = std::max(bound, std::abs(c[static_cast<std::size_t>(i)]));
  bound += 1;
  auto monic = [&](cld z) {
    cld acc = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * z + *it;
    return acc;
  };
  std::vector<cld> r(static_cast<std::size_t>(n));
  const cld seed(0.4L, 0.9L);
  cld w = 1;
  for (auto& x : r) {
    w *= seed;
    x = w * std::min<long double>(bound, 2.0L);
  }
  for (int it = 0; it < max_iter; ++it) {
    long double delta = 0;
    for (std::size_t i = 0; i < r.size(); ++i) {
      cld den = 1;
      for (std::size_t j = 0; j < r.size(); ++j) {
        if (j != i) den *= r[i] - r[j];
      }
      if (std::abs(den) == 0) den = 1e-30L;
      const cld step = monic(r[i]) / den;
      r[i] -= step;
      delta = std::max(delta, std::abs(step));
    }
    if (delta < 1e-24L) break;
  }
  return r;
}

struct FloatCensus {
  int inside = 0;
  int on = 0;
  int outside = 0;
  // Some modulus fell between the "on" band and the clear zone.
  bool ambiguous = false;
};

inline FloatCensus float_census(const salemforge::IntPolynomial& p, long double on_band = 1e-6L,
                                long double clear = 1e-3L) {
  FloatCensus out;
  for (const auto& r : durand_kerner(p)) {
    const long double gap = std::abs(r) - 1;
    if (std::abs(gap) < on_band) {
      ++out.on;
    } else {
      if (std::abs(gap) < clear) out.ambiguous = true;
      (gap < 0 ? out.inside : out.outside)++;
    }
  }
  return out;
}

inline std::vector<long double> real_roots(const salemforge::IntPolynomial& p, long double imag_tol = 1e-9L) {
  std::vector<long double> out;
  for (const auto& r : durand_kerner(p)) {
    if (std::abs(r.imag()) < imag_tol) out.push_back(r.real());
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Schoolbook division over Q on ascending coefficient vectors.
struct QuotRem {
  std::vector<mpq_class> quotient;
  std::vector<mpq_class> remainder;
  bool remainder_zero() const {
    return std::all_of(remainder.begin(), remainder.end(), [](const mpq_class& x) { return x == 0; });
  }
  bool quotient_integral() const {
    return std::all_of(quotient.begin(), quotient.end(), [](const mpq_class& x) { return x.get_den() == 1; });
  }
};

inline QuotRem long_division(const salemforge::IntPolynomial& a, const salemforge::IntPolynomial& b) {
  std::vector<mpq_class> rem;
  for (const auto& c : a.coefficients()) rem.emplace_back(c);
  std::vector<mpq_class> den;
  for (const auto& c : b.coefficients()) den.emplace_back(c);
  QuotRem out;
  const int db = static_cast<int>(den.size()) - 1;
  const int da = static_cast<int>(rem.size()) - 1;
  if (da < db) {
    out.remainder = rem;
    return out;
  }
  out.quotient.assign(static_cast<std::size_t>(da - db + 1), 0);
  for (int i = da; i >= db; --i) {
    const mpq_class f = rem[static_cast<std::size_t>(i)] / den.back();
    out.quotient[static_cast<std::size_t>(i - db)] = f;
    for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(i - db + j)] -= f * den[static_cast<std::size_t>(j)];
  }
  rem.resize(static_cast<std::size_t>(db));
  out.remainder = rem;
  return out;
}

inline salemforge::IntPolynomial integral_quotient(const QuotRem& qr) {
  std::vector<mpz_class> c;
  for (const auto& x : qr.quotient) c.push_back(x.get_num());
  return salemforge::IntPolynomial(c);
}

// Plain bisection on a sign change of p over [lo, hi].
inline long double bisect(const salemforge::IntPolynomial& p, long double lo, long double hi, int iters = 200) {
  long double flo = eval_real(p, lo);
  for (int i = 0; i < iters; ++i) {
    const long double mid = (lo + hi) / 2;
    const long double fm = eval_real(p, mid);
    if ((fm < 0) == (flo < 0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return (lo + hi) / 2;
}

inline long double to_ld(const mpq_class& q) { return static_cast<long double>(q.get_d()); }

}  // namespace oracle
