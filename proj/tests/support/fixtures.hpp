#pragma once

#include <gtest/gtest.h>

#include <ostream>
#include <string>

#include "salemforge/salemforge.hpp"

namespace salemforge {
inline void PrintTo(const IntPolynomial& p, std::ostream* os) { *os << to_expression(p); }
inline void PrintTo(InterlacingKind k, std::ostream* os) { *os << to_string(k); }
inline void PrintTo(PolyKind k, std::ostream* os) { *os << to_string(k); }
}  // namespace salemforge

namespace fx {

using salemforge::IntPolynomial;

inline IntPolynomial P(const std::string& text) { return salemforge::parse_polynomial(text); }

inline IntPolynomial lehmer() { return P("z^10 + z^9 - z^7 - z^6 - z^5 - z^4 - z^3 + z + 1"); }
inline IntPolynomial lehmer_Q() { return salemforge::cyclotomic(30); }
inline IntPolynomial lehmer_P() {
  return salemforge::cyclotomic(1) * salemforge::cyclotomic(2) * salemforge::cyclotomic(3) *
         salemforge::cyclotomic(5);
}
inline IntPolynomial plastic() { return P("z^3 - z - 1"); }
inline IntPolynomial boyd_A() { return P("z^11 - 2z^9 - 4z^8 - 4z^7 - 3z^6 - z^5 + z^4 + 3z^3 + 4z^2 + 3z + 1"); }
inline IntPolynomial small_salem() { return P("z^4 - 3z^3 - 3z + 1"); }

inline IntPolynomial cs_simple_Q() { return P("(z^2 - 1)(z^2 - z + 1)"); }
inline IntPolynomial cs_P() { return P("(z^2 + z + 1)(z^2 - 3z + 1)"); }
inline IntPolynomial cs_triple_Q() { return P("(z + 1)(z - 1)^3"); }
inline IntPolynomial ss_Q() { return P("z^6 - z^4 - z^3 - z^2 + 1"); }
inline IntPolynomial ss_P() { return P("z^6 - 2z^5 + 2z - 1"); }

// P_k cyclotomic and P_{k+1} Salem of odd degree: P_{k+1}(-1) = 0, so z^2 - 1 cannot divide
// (z - 1) P_k and the pair misses CS only by the -1 placement. Such entries classify NONE.
inline bool cyclotomic_to_odd_salem(const salemforge::IntPolynomial& A, const salemforge::PkEntry& e) {
  const salemforge::IntPolynomial next = salemforge::pk(A, e.k + 1);
  return e.classification.kind == salemforge::InterlacingKind::None &&
         salemforge::evaluate(next, salemforge::Integer(-1)) == 0 &&
         salemforge::circle_root_count(e.Pk) == e.Pk.degree() &&
         e.classification.failure_reason.find("z^2 - 1 must divide Q") != std::string::npos;
}

}  // namespace fx

// Runs `stmt` and requires a SalemError carrying `expected`.
#define EXPECT_SALEM_ERROR(stmt, expected)                                                   \
  do {                                                                                       \
    try {                                                                                    \
      (void)(stmt);                                                                          \
      ADD_FAILURE() << "expected " << salemforge::to_string(expected) << ", nothing thrown"; \
    } catch (const salemforge::SalemError& e) {                                              \
      EXPECT_EQ(e.code(), expected) << e.what();                                             \
    }                                                                                        \
  } while (false)
