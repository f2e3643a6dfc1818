#pragma once

#include <optional>
#include <string>
#include <vector>

#include "salemforge/construct.hpp"
#include "salemforge/interlace.hpp"
#include "salemforge/poly.hpp"
#include "salemforge/rootloc.hpp"

namespace salemforge {

/// P_k = (z^k A - A*) / (z - 1). Throws InvalidArgument for k < 0 and for the
/// excluded case k = 0 with P_0(0) = 0.
IntPolynomial pk(const IntPolynomial& A, long k);

/// P_k(1) = k A(1) + A'(1) - A*'(1).
Integer pk_value_at_one(const IntPolynomial& A, long k);

struct PkEntry {
  long k = 0;
  IntPolynomial Pk;
  /// Classification of (z - 1) P_k / P_{k+1} after cancelling common factors.
  InterlacingClassification classification;
};

struct PkSequence {
  IntPolynomial A;
  std::vector<PkEntry> entries;
  /// Smallest k >= 1 with P_k(1) < 0.
  std::optional<long> onset_k0;
  /// A is a reciprocal quadratic Pisot polynomial; consecutive P_k then share
  /// the factor A and no entry interlaces.
  bool reciprocal_quadratic_source = false;
};

/// Entries for k = 1..k_max. Throws NotPisot unless A classifies as a Pisot
/// or reciprocal quadratic Pisot polynomial.
PkSequence pk_sequence(const IntPolynomial& A, long k_max);

/// Runs the CS/SS Pisot construction on Q = (z-1)P_k, P = P_{k+1} with h = 1/z
/// and checks that the core is A with its z-power removed.
ConstructionResult recover_pisot(const IntPolynomial& A, long k);

struct BoydSolution {
  IntPolynomial R;
  int epsilon = 1;
  IntPolynomial S;
  IntPolynomial A;
  /// Values of the free coefficients a_0, a_1, ... in enumeration order.
  std::vector<Integer> free_params;
};

/// All Pisot polynomials A with S R = z A + eps A* whose free coefficients lie
/// in [-coeff_bound, coeff_bound], sorted by coefficient sequence. threads = 0
/// takes the worker count from SALEMFORGE_THREADS, else the hardware.
std::vector<BoydSolution> boyd_solve(const IntPolynomial& R, int epsilon, long coeff_bound, unsigned threads = 0);

/// Worker count used by boyd_solve when threads = 0.
unsigned default_thread_count();

enum class SalemType { I, II, III, IV };
std::string to_string(SalemType t);

struct SalemTypeReport {
  SalemType type = SalemType::I;
  InterlacingClassification classification;
  IntPolynomial P1;
  IntPolynomial P2;
};

/// Classifies (z-1)P_1/P_2 built from A. Throws BoydIdentityFails when
/// 2 P_2 - (1 + z) P_1 != (z^2 + 1) R and ClassifyNone if no flavour matches.
SalemTypeReport salem_type(const IntPolynomial& R, const IntPolynomial& A);

struct SmallSalemReport {
  IsolatingInterval tau;
  IsolatingInterval plastic;
  /// Real roots of A, left to right.
  std::vector<IsolatingInterval> real_roots;
  int real_root_count = 0;
  /// Roots of A in (1/tau, 1), counted exactly.
  int roots_in_gap = 0;
};

SmallSalemReport small_salem_check(const IntPolynomial& R, const IntPolynomial& A,
                                   const Rational& width = Rational(1, 1000000));

/// Monic Pisot polynomials with nonzero constant term, degree 1..max_degree and
/// every lower coefficient in [-height, height], in enumeration order.
std::vector<IntPolynomial> pisot_corpus(int max_degree, long height);

}  // namespace salemforge
