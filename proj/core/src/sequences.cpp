#include "salemforge/sequences.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <mutex>
#include <thread>

#include "salemforge/error.hpp"

namespace salemforge {

namespace {

IntPolynomial strip_z(const IntPolynomial& f) {
  const std::size_t m = valuation_at_zero(f);
  if (m == 0) return f;
  return IntPolynomial(std::vector<Integer>(f.coefficients().begin() + static_cast<long>(m), f.coefficients().end()));
}

bool overlaps(const IsolatingInterval& a, const IsolatingInterval& b) { return a.lo < b.hi && b.lo < a.hi; }

IsolatingInterval halve(const IntPolynomial& f, const IsolatingInterval& iv) { return refine_root(f, iv, iv.width() / 2); }

IsolatingInterval unique_root_above_one(const IntPolynomial& f, const Rational& width) {
  const auto roots = isolate_real_roots_in(f, Rational(1), root_bound(f), width);
  if (roots.size() != 1) fail(ErrorCode::Internal, "expected a unique root above 1");
  return roots.front();
}

void check_boyd_identity(const IntPolynomial& R, const IntPolynomial& A) {
  if (IntPolynomial{1, 0, 1} * R != IntPolynomial{0, 1} * A + star(A))
    fail(ErrorCode::BoydIdentityFails, "(z^2 + 1) R != z A + A*");
}

// Necessary conditions for a monic Pisot polynomial with A(0) possibly zero:
// A(1) < 0 and (-1)^deg A * A(-1) > 0.
bool passes_sign_filter(const IntPolynomial& a) {
  if (evaluate(a, Integer(1)) >= 0) return false;
  Integer at_minus_one = evaluate(a, Integer(-1));
  if (a.degree() % 2 != 0) at_minus_one = -at_minus_one;
  return at_minus_one > 0;
}

// With the sign filter passed, deg - 1 roots strictly inside the disc leave a
// single real root, and it lies above 1. A circle root makes the inside count
// degenerate, which also rules the candidate out.
bool pisot_candidate(const IntPolynomial& a) {
  if (!passes_sign_filter(a)) return false;
  const IntPolynomial core = strip_z(a);
  try {
    if (inside_count_schur_cohn(core) != core.degree() - 1) return false;
  } catch (const SalemError& e) {
    if (e.code() != ErrorCode::DegenerateCensus) throw;
    return false;
  }
  return is_pisot_polynomial(a);
}

InterlacingClassification classify_reduced(const IntPolynomial& Q, const IntPolynomial& P) {
  const RationalFunction f(Q, P);
  return classify_quotient(f.num(), f.den());
}

}  // namespace

IntPolynomial pk(const IntPolynomial& A, long k) {
  if (A.is_zero()) fail(ErrorCode::ZeroPolynomial, "pk of zero polynomial");
  if (k < 0) fail(ErrorCode::InvalidArgument, "k must be non-negative");
  IntPolynomial out = div_exact(shift_up(A, static_cast<std::size_t>(k)) - star(A), linear(1));
  if (k == 0 && out.constant_term() == 0)
    fail(ErrorCode::InvalidArgument, "k = 0 with P_0(0) = 0 is outside the domain");
  return out;
}

Integer pk_value_at_one(const IntPolynomial& A, long k) {
  return Integer(k) * evaluate(A, Integer(1)) + evaluate(derivative(A), Integer(1)) -
         evaluate(derivative(star(A)), Integer(1));
}

PkSequence pk_sequence(const IntPolynomial& A, long k_max) {
  if (k_max < 1) fail(ErrorCode::InvalidArgument, "k_max must be positive");
  if (A.is_zero() || A.leading() != 1) fail(ErrorCode::NotPisot, "A must be monic");
  const PolyClassification cls = classify_poly(A);
  PkSequence seq;
  seq.A = A;
  if (cls.kind == PolyKind::RecipQuadPisot && cls.cofactor.is_one() && cls.z_power == 0) {
    seq.reciprocal_quadratic_source = true;
  } else if (!(cls.kind == PolyKind::PisotPoly && cls.cofactor.is_one())) {
    fail(ErrorCode::NotPisot, "A classifies as " + to_string(cls.kind));
  }

  const Integer a1 = evaluate(A, Integer(1));
  if (a1 < 0) {
    // Smallest k >= 1 with k * A(1) + c < 0, where c = P_0(1).
    const Integer c = pk_value_at_one(A, 0);
    Integer k0 = 1;
    if (c >= 0) {
      Integer q;
      const Integer neg = -a1;
      mpz_fdiv_q(q.get_mpz_t(), c.get_mpz_t(), neg.get_mpz_t());
      k0 = q + 1;
    }
    if (k0.fits_slong_p()) seq.onset_k0 = k0.get_si();
  }

  IntPolynomial next = pk(A, 1);
  for (long k = 1; k <= k_max; ++k) {
    IntPolynomial cur = std::move(next);
    next = pk(A, k + 1);
    PkEntry e;
    e.k = k;
    e.Pk = cur;
    e.classification = classify_reduced(linear(1) * cur, next);
    seq.entries.push_back(std::move(e));
  }
  return seq;
}

ConstructionResult recover_pisot(const IntPolynomial& A, long k) {
  if (k < 1) fail(ErrorCode::InvalidArgument, "k must be positive");
  if (!is_pisot_polynomial(A)) fail(ErrorCode::NotPisot, "A is not a Pisot polynomial");
  const IntPolynomial Q = linear(1) * pk(A, k);
  const IntPolynomial P = pk(A, k + 1);
  ConstructionResult r = pisot_ss(Q, P, LimitFunctionSpec::single('A', 1, 1));
  const IntPolynomial expected = strip_z(A);
  if (r.core != expected || !r.cofactor.is_one())
    fail(ErrorCode::RoundTripMismatch, "recovered core differs from A");
  r.diagnostics.push_back("k = " + std::to_string(k));
  return r;
}

unsigned default_thread_count() {
  unsigned hw = std::thread::hardware_concurrency();
  if (hw == 0) hw = 1;
  if (const char* env = std::getenv("SALEMFORGE_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 1) return std::min(hw, static_cast<unsigned>(v));
  }
  return hw;
}

std::vector<BoydSolution> boyd_solve(const IntPolynomial& R, int epsilon, long coeff_bound, unsigned threads) {
  if (epsilon != 1 && epsilon != -1) fail(ErrorCode::InvalidArgument, "epsilon must be 1 or -1");
  if (coeff_bound < 1) fail(ErrorCode::InvalidArgument, "coefficient bound must be positive");
  if (R.is_zero() || R.leading() != 1) fail(ErrorCode::NotSalem, "R must be monic");
  {
    const PolyClassification cls = classify_poly(R);
    if (cls.kind != PolyKind::SalemPoly || !cls.cofactor.is_one() || cls.z_power != 0)
      fail(ErrorCode::NotSalem, "R classifies as " + to_string(cls.kind));
  }
  const IntPolynomial S = epsilon == 1 ? IntPolynomial{1, 0, 1} : IntPolynomial{-1, 1};
  const IntPolynomial T = S * R;
  const int n = R.degree();
  const int N = epsilon == 1 ? n + 1 : n;
  auto t = [&](int j) { return T.coefficient(static_cast<std::size_t>(j)); };

  // Coefficient j of z A + eps A* is a_{j-1} + eps a_{N-j}, which pairs a_i
  // with a_{N-1-i}. The leading coefficient a_N comes from j = 0.
  std::vector<Integer> base(static_cast<std::size_t>(N) + 1);
  base[static_cast<std::size_t>(N)] = Integer(epsilon) * t(0);
  if (base[static_cast<std::size_t>(N)] != 1) return {};
  std::vector<int> free_idx;
  for (int i = 0; i < N - 1 - i; ++i) free_idx.push_back(i);
  if ((N - 1) % 2 == 0) {
    const int m = (N - 1) / 2;
    const Integer tm = t(m + 1);
    if (epsilon == 1) {
      if (tm % 2 != 0) return {};
      base[static_cast<std::size_t>(m)] = tm / 2;
    } else {
      if (tm != 0) return {};
      free_idx.push_back(m);
    }
  }

  const long radix = 2 * coeff_bound + 1;
  Integer total_z = 1;
  for (std::size_t i = 0; i < free_idx.size(); ++i) total_z *= radix;
  if (!total_z.fits_slong_p() || total_z > Integer(4000000000L))
    fail(ErrorCode::InvalidArgument, "search space too large");
  const long total = total_z.get_si();

  unsigned workers = threads == 0 ? default_thread_count() : threads;
  workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(std::max(1L, total))));

  std::atomic<long> next_block{0};
  constexpr long kBlock = 512;
  std::mutex out_mutex;
  std::vector<BoydSolution> out;

  auto work = [&]() {
    std::vector<BoydSolution> local;
    std::vector<Integer> a = base;
    std::vector<Integer> params(free_idx.size());
    while (true) {
      const long start = next_block.fetch_add(kBlock);
      if (start >= total) break;
      const long stop = std::min(total, start + kBlock);
      for (long code = start; code < stop; ++code) {
        long rest = code;
        for (std::size_t f = 0; f < free_idx.size(); ++f) {
          params[f] = rest % radix - coeff_bound;
          rest /= radix;
          const int i = free_idx[f];
          a[static_cast<std::size_t>(i)] = params[f];
          if (i != N - 1 - i) a[static_cast<std::size_t>(N - 1 - i)] = Integer(epsilon) * (t(i + 1) - params[f]);
        }
        const IntPolynomial A{std::vector<Integer>(a)};
        if (!pisot_candidate(A)) continue;
        if (T != IntPolynomial{0, 1} * A + star(A) * Integer(epsilon)) continue;
        local.push_back({R, epsilon, S, A, params});
      }
    }
    std::lock_guard<std::mutex> lock(out_mutex);
    for (auto& s : local) out.push_back(std::move(s));
  };

  if (workers == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& th : pool) th.join();
  }
  std::sort(out.begin(), out.end(), [](const BoydSolution& x, const BoydSolution& y) {
    return x.A.coefficients() < y.A.coefficients();
  });
  return out;
}

std::string to_string(SalemType t) {
  switch (t) {
    case SalemType::I: return "I";
    case SalemType::II: return "II";
    case SalemType::III: return "III";
    case SalemType::IV: return "IV";
  }
  return "?";
}

SalemTypeReport salem_type(const IntPolynomial& R, const IntPolynomial& A) {
  if (!is_pisot_polynomial(A)) fail(ErrorCode::NotPisot, "A is not a Pisot polynomial");
  check_boyd_identity(R, A);
  SalemTypeReport rep;
  rep.P1 = pk(A, 1);
  rep.P2 = pk(A, 2);
  if (rep.P2 * Integer(2) - IntPolynomial{1, 1} * rep.P1 != IntPolynomial{1, 0, 1} * R)
    fail(ErrorCode::BoydIdentityFails, "2 P_2 - (1 + z) P_1 != (z^2 + 1) R");
  rep.classification = classify_reduced(linear(1) * rep.P1, rep.P2);
  switch (rep.classification.kind) {
    case InterlacingKind::CC: rep.type = SalemType::I; break;
    case InterlacingKind::CS: rep.type = SalemType::II; break;
    case InterlacingKind::SS1: rep.type = SalemType::III; break;
    case InterlacingKind::SS2: rep.type = SalemType::IV; break;
    case InterlacingKind::None:
      fail(ErrorCode::ClassifyNone, "(z-1)P_1/P_2 is not interlacing: " + rep.classification.failure_reason);
  }
  return rep;
}

SmallSalemReport small_salem_check(const IntPolynomial& R, const IntPolynomial& A, const Rational& width) {
  {
    const PolyClassification cls = classify_poly(R);
    if (cls.kind != PolyKind::SalemPoly || !cls.cofactor.is_one() || cls.z_power != 0)
      fail(ErrorCode::NotSalem, "R classifies as " + to_string(cls.kind));
  }
  if (!is_pisot_polynomial(A)) fail(ErrorCode::NotPisot, "A is not a Pisot polynomial");
  check_boyd_identity(R, A);

  SmallSalemReport rep;
  const IntPolynomial plastic_poly{-1, -1, 0, 1};
  rep.tau = unique_root_above_one(R, width);
  rep.plastic = unique_root_above_one(plastic_poly, width);
  while (overlaps(rep.tau, rep.plastic)) {
    rep.tau = halve(R, rep.tau);
    rep.plastic = halve(plastic_poly, rep.plastic);
  }
  if (rep.tau.lo >= rep.plastic.hi) fail(ErrorCode::TauNotSmall, "tau exceeds the real root of z^3 - z - 1");

  rep.real_roots = isolate_real_roots(A, width);
  for (const auto& iv : rep.real_roots) rep.real_root_count += iv.multiplicity;

  // Roots of A in (1/tau, 1) are the reciprocals of roots of A* in (1, tau).
  const IntPolynomial a_star = strip_z(star(A));
  IsolatingInterval tau = rep.tau;
  if (a_star.degree() >= 1) {
    while (sturm_count(a_star, tau.lo, tau.hi) != 0) tau = halve(R, tau);
    rep.roots_in_gap = tau.lo > 1 ? real_root_count(a_star, Rational(1), tau.lo) : 0;
  }
  if (rep.real_root_count < 3 || rep.real_root_count % 2 == 0 || rep.roots_in_gap < 1)
    fail(ErrorCode::Internal, "real-root conclusion fails for a small Salem number");
  return rep;
}

std::vector<IntPolynomial> pisot_corpus(int max_degree, long height) {
  std::vector<IntPolynomial> out;
  for (int d = 1; d <= max_degree; ++d) {
    const long radix = 2 * height + 1;
    long total = 1;
    for (int i = 0; i < d; ++i) total *= radix;
    for (long code = 0; code < total; ++code) {
      std::vector<Integer> c(static_cast<std::size_t>(d) + 1);
      long rest = code;
      for (int i = 0; i < d; ++i) {
        c[static_cast<std::size_t>(i)] = rest % radix - height;
        rest /= radix;
      }
      c[static_cast<std::size_t>(d)] = 1;
      if (c[0] == 0) continue;
      IntPolynomial a(std::move(c));
      if (pisot_candidate(a)) out.push_back(std::move(a));
    }
  }
  return out;
}

}  // namespace salemforge
