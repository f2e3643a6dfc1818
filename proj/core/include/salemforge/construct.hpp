#pragma once

#include <optional>
#include <string>
#include <vector>

#include "salemforge/interlace.hpp"
#include "salemforge/limit_spec.hpp"
#include "salemforge/poly.hpp"
#include "salemforge/rational_function.hpp"
#include "salemforge/rootloc.hpp"

namespace salemforge {

enum class ResultKind { Salem, RecipQuadPisot, Pisot };
std::string to_string(ResultKind kind);

struct ConstructionResult {
  ResultKind kind = ResultKind::Salem;
  /// Cleared-denominator polynomial, monic.
  IntPolynomial raw;
  IntPolynomial core;
  IntPolynomial cofactor;
  std::vector<long> cyclotomic_indices;
  std::size_t z_power = 0;
  Integer trace;
  /// Encloses the unique root of core above 1.
  IsolatingInterval root;
  RootCensus census;
  std::vector<std::string> diagnostics;
};

/// A quotient Q/P or the zero quotient (Q = 0, P = 1).
struct Quotient {
  IntPolynomial Q;
  IntPolynomial P{1};
  static Quotient zero() { return {}; }
  bool is_zero() const { return Q.is_zero(); }
  /// g = Q / ((z - 1) P).
  RationalFunction g() const;
};

enum class ProductVariant { I, II };
std::string to_string(ProductVariant v);

/// Width of the root enclosure attached to every result.
inline const Rational& default_root_width() {
  static const Rational w = pow2(-64);
  return w;
}

ConstructionResult salem_cc(const IntPolynomial& Q, const IntPolynomial& P);
ConstructionResult salem_cs(const IntPolynomial& Q, const IntPolynomial& P);
ConstructionResult salem_ss(const IntPolynomial& Q, const IntPolynomial& P);
ConstructionResult salem_cc_product(const IntPolynomial& Q1, const IntPolynomial& P1, const IntPolynomial& Q2,
                                    const IntPolynomial& P2, ProductVariant variant);

RationalFunction special_limit_function(const LimitFunctionSpec& spec);

ConstructionResult pisot_cc(const Quotient& g, const LimitFunctionSpec& spec);
ConstructionResult pisot_cc_product(const Quotient& g1, const LimitFunctionSpec& spec1, const Quotient& g2,
                                    const std::optional<LimitFunctionSpec>& spec2, ProductVariant variant);
ConstructionResult pisot_ss(const IntPolynomial& Q, const IntPolynomial& P, const LimitFunctionSpec& spec);

/// Shared tail of every Salem construction: splits a monic polynomial and
/// certifies the census. Throws UnexpectedCensus on failure.
ConstructionResult certify_salem(const IntPolynomial& raw);
/// As certify_salem for Pisot results.
ConstructionResult certify_pisot(const IntPolynomial& raw);

}  // namespace salemforge
