#include "salemforge/interlace.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "salemforge/error.hpp"

namespace salemforge {

namespace {

IntPolynomial compose_square(const IntPolynomial& r) {
  std::vector<Integer> c(r.coefficients().empty() ? 0 : 2 * r.coefficients().size() - 1);
  for (std::size_t i = 0; i < r.coefficients().size(); ++i) c[2 * i] = r.coefficients()[i];
  return IntPolynomial(std::move(c));
}

// z^k - 1 and z^k + 1.
IntPolynomial binomial(long k, long sign) {
  IntPolynomial out = IntPolynomial::z_power(static_cast<std::size_t>(k));
  return out + IntPolynomial{sign};
}

bool pattern_ok(const IntPolynomial& a, const IntPolynomial& b) {
  return (is_reciprocal(a) && is_antireciprocal(b)) || (is_antireciprocal(a) && is_reciprocal(b));
}

int residue_sign(const IntPolynomial& q, const IntPolynomial& p, const IntPolynomial& dp, IsolatingInterval iv) {
  if (iv.hi_is_root) return sign_at(q, iv.hi) * sign_at(dp, iv.hi);
  while (true) {
    const bool q_clear = q.degree() < 1 || sturm_count(q, iv.lo, iv.hi) == 0;
    const bool d_clear = dp.degree() < 1 || sturm_count(dp, iv.lo, iv.hi) == 0;
    if (q_clear && d_clear) return sign_at(q, iv.hi) * sign_at(dp, iv.hi);
    iv = refine_root(p, iv, iv.width() / 4);
    if (iv.hi_is_root) return sign_at(q, iv.hi) * sign_at(dp, iv.hi);
  }
}

// Roots of H_P H_Q in (lo, hi], left to right, tagged with their owner.
std::vector<std::pair<IsolatingInterval, char>> owned_roots(const IntPolynomial& hp, const IntPolynomial& hq,
                                                            const Rational& lo, const Rational& hi) {
  std::vector<std::pair<IsolatingInterval, char>> out;
  const IntPolynomial m = hp * hq;
  if (m.degree() < 1) return out;
  const auto ivs = isolate_real_roots_in(m, lo, hi, hi - lo);
  if (ivs.empty()) return out;
  std::optional<SturmChain> p_chain;
  if (hp.degree() >= 1) p_chain.emplace(hp);
  for (const auto& iv : ivs) {
    const char owner = (p_chain && p_chain->count(iv.lo, iv.hi) > 0) ? 'P' : 'Q';
    out.emplace_back(iv, owner);
  }
  return out;
}

std::vector<CircleRoot> merged_circle(const CircleProfile& pp, const CircleProfile& qp, bool include_one) {
  const auto band = owned_roots(pp.H, qp.H, Rational(-2), Rational(2));
  std::vector<CircleRoot> seq;
  auto push_point = [&](CirclePoint where, std::size_t mp, std::size_t mq, long u) {
    if (mp > 0) seq.push_back({'P', where, Rational(u), Rational(u), static_cast<int>(mp)});
    if (mq > 0) seq.push_back({'Q', where, Rational(u), Rational(u), static_cast<int>(mq)});
  };
  if (include_one) push_point(CirclePoint::One, pp.mult_one, qp.mult_one, 2);
  for (auto it = band.rbegin(); it != band.rend(); ++it)
    seq.push_back({it->second, CirclePoint::Upper, it->first.lo, it->first.hi, 1});
  push_point(CirclePoint::MinusOne, pp.mult_minus_one, qp.mult_minus_one, -2);
  for (const auto& [iv, owner] : band) seq.push_back({owner, CirclePoint::Lower, iv.lo, iv.hi, 1});
  return seq;
}

bool alternates(const std::vector<CircleRoot>& seq, bool cyclic) {
  for (std::size_t i = 1; i < seq.size(); ++i)
    if (seq[i].owner == seq[i - 1].owner) return false;
  if (cyclic && seq.size() > 1 && seq.front().owner == seq.back().owner) return false;
  return true;
}

std::vector<CircleRoot> owned_by(const std::vector<CircleRoot>& seq, char owner) {
  std::vector<CircleRoot> out;
  for (const auto& r : seq)
    if (r.owner == owner) out.push_back(r);
  return out;
}

std::string owners(const std::vector<CircleRoot>& seq) {
  std::string s;
  for (const auto& r : seq) s += r.owner;
  return s;
}

bool simple_profile(const CircleProfile& c) {
  return c.squarefree && c.mult_one <= 1 && c.mult_minus_one <= 1;
}

}  // namespace

IntPolynomial x_transform(const IntPolynomial& reciprocal) {
  if (reciprocal.is_zero() || !is_reciprocal(reciprocal))
    fail(ErrorCode::InvalidArgument, "x_transform needs a reciprocal polynomial");
  return chebyshev_reduce(compose_square(reciprocal));
}

RealQuotient real_quotient(const IntPolynomial& Q, const IntPolynomial& P, bool with_residues) {
  if (Q.is_zero() || P.is_zero() || Q.leading() <= 0 || P.leading() <= 0)
    fail(ErrorCode::NotTransformable, "leading coefficients must be positive");
  if (Q.degree() != P.degree()) fail(ErrorCode::NotTransformable, "degrees differ");
  RealQuotient rq;
  const IntPolynomial x2_minus_4{-4, 0, 1};
  if (is_antireciprocal(Q) && is_reciprocal(P)) {
    rq.one_divides_q = true;
    rq.q = x_transform(div_exact(Q, linear(1)));
    rq.p = x_transform(P);
  } else if (is_antireciprocal(P) && is_reciprocal(Q)) {
    rq.one_divides_q = false;
    rq.q = x_transform(Q);
    rq.p = x2_minus_4 * x_transform(div_exact(P, linear(1)));
  } else {
    fail(ErrorCode::NotTransformable, "need one reciprocal and one antireciprocal polynomial");
  }
  const IntPolynomial g = gcd(rq.q, rq.p);
  if (g.degree() > 0) {
    rq.q = div_exact(rq.q, g);
    rq.p = div_exact(rq.p, g);
  }
  const Integer c = gcd(content(rq.q), content(rq.p));
  if (c != 1) {
    rq.q = divide_scalar(rq.q, c);
    rq.p = divide_scalar(rq.p, c);
  }
  if (with_residues && rq.p.degree() >= 1 && squarefree_part(rq.p).degree() == rq.p.degree()) {
    const IntPolynomial dp = derivative(rq.p);
    for (const auto& iv : isolate_real_roots(rq.p, Rational(1, 1024))) {
      rq.residues.push_back({iv, residue_sign(rq.q, rq.p, dp, iv)});
    }
  }
  return rq;
}

std::string to_string(InterlacingKind kind) {
  switch (kind) {
    case InterlacingKind::CC: return "CC";
    case InterlacingKind::CS: return "CS";
    case InterlacingKind::SS1: return "SS1";
    case InterlacingKind::SS2: return "SS2";
    case InterlacingKind::None: return "NONE";
  }
  return "NONE";
}

double CircleRoot::angle() const {
  switch (where) {
    case CirclePoint::One: return 0.0;
    case CirclePoint::MinusOne: return std::numbers::pi;
    case CirclePoint::Upper:
    case CirclePoint::Lower: {
      const double u = std::clamp(Rational((u_lo + u_hi) / 2).get_d(), -2.0, 2.0);
      const double a = std::acos(u / 2);
      return where == CirclePoint::Upper ? a : 2 * std::numbers::pi - a;
    }
  }
  return 0.0;
}

CircleProfile circle_profile(const IntPolynomial& f) {
  if (f.is_zero() || f.leading() <= 0) fail(ErrorCode::InvalidArgument, "circle_profile needs a positive leading coefficient");
  if (!is_reciprocal(f) && !is_antireciprocal(f))
    fail(ErrorCode::InvalidArgument, "circle_profile needs a reciprocal or antireciprocal polynomial");
  CircleProfile c;
  auto [m1, rest] = divide_out(f, linear(1));
  auto [mm1, h] = divide_out(rest, linear(-1));
  c.mult_one = m1;
  c.mult_minus_one = mm1;
  // With the roots at +-1 gone, h* = -h would force h(1) = 0, so h is reciprocal.
  if (!is_reciprocal(h)) fail(ErrorCode::Internal, "reduced part is not reciprocal");
  c.h = h;
  c.H = chebyshev_reduce(h);
  if (c.H.degree() >= 1) {
    const Rational b = root_bound(c.H) + 2;
    c.in_band = real_root_count(c.H, Rational(-2), Rational(2));
    c.above = real_root_count(c.H, Rational(2), b);
    c.below = real_root_count(c.H, -b, Rational(-2));
    c.nonreal = c.H.degree() - c.in_band - c.above - c.below;
    c.squarefree = squarefree_part(c.H).degree() == c.H.degree();
  }
  return c;
}

InterlacingClassification classify_quotient(const IntPolynomial& Q, const IntPolynomial& P) {
  InterlacingClassification out;
  auto reject = [&](std::string why) {
    out.kind = InterlacingKind::None;
    out.failure_reason = std::move(why);
    return out;
  };
  if (Q.is_zero() || P.is_zero()) return reject("zero polynomial");
  if (Q.leading() <= 0 || P.leading() <= 0) return reject("leading coefficients must be positive");
  if (gcd(Q, P).degree() > 0) return reject("P and Q are not coprime");
  if (Q.degree() != P.degree()) return reject("P and Q have different degrees");
  if (!pattern_ok(Q, P)) return reject("need one reciprocal and one antireciprocal polynomial");

  out.census_P = disc_root_count(P);
  out.census_Q = disc_root_count(Q);
  const CircleProfile pp = circle_profile(P);
  const CircleProfile qp = circle_profile(Q);

  if (pp.circle_only() && qp.circle_only()) {
    if (!simple_profile(pp) || !simple_profile(qp)) return reject("CC: repeated root");
    const auto seq = merged_circle(pp, qp, true);
    out.circle_roots_P = owned_by(seq, 'P');
    out.circle_roots_Q = owned_by(seq, 'Q');
    out.circle_order = owners(seq);
    if (!alternates(seq, true)) return reject("CC: roots do not interlace on the circle");
    out.kind = InterlacingKind::CC;
    return out;
  }

  if (qp.circle_only() && pp.salem_shape()) {
    if (!is_reciprocal(P) || !is_antireciprocal(Q)) return reject("CS: P must be reciprocal and Q antireciprocal");
    if (qp.mult_minus_one != 1) return reject("CS: z^2 - 1 must divide Q with a simple root at -1");
    if (!qp.squarefree || !simple_profile(pp)) return reject("CS: repeated root away from z = 1");
    const auto seq = merged_circle(pp, qp, false);
    out.circle_roots_P = owned_by(seq, 'P');
    out.circle_roots_Q = owned_by(seq, 'Q');
    out.circle_roots_Q.insert(out.circle_roots_Q.begin(),
                              {'Q', CirclePoint::One, Rational(2), Rational(2), static_cast<int>(qp.mult_one)});
    out.circle_order = owners(seq);
    if (!alternates(seq, false)) return reject("CS: roots do not interlace on the punctured circle");
    out.kind = InterlacingKind::CS;
    return out;
  }

  if (pp.salem_shape() && qp.salem_shape()) {
    if (!simple_profile(pp) || !simple_profile(qp)) return reject("SS: repeated root");
    const auto seq = merged_circle(pp, qp, true);
    out.circle_roots_P = owned_by(seq, 'P');
    out.circle_roots_Q = owned_by(seq, 'Q');
    out.circle_order = owners(seq);
    if (!alternates(seq, true)) return reject("SS: roots do not interlace on the circle");
    const Rational b = std::max(root_bound(pp.H), root_bound(qp.H)) + 2;
    const auto big = owned_roots(pp.H, qp.H, Rational(2), b);
    if (big.size() != 2) fail(ErrorCode::Internal, "SS: expected two real roots above 2");
    out.kind = big.back().second == 'P' ? InterlacingKind::SS1 : InterlacingKind::SS2;
    return out;
  }

  return reject("root locations match no interlacing flavour");
}

RationalFunction sum_quotients(const IntPolynomial& Q1, const IntPolynomial& P1, const IntPolynomial& Q2,
                               const IntPolynomial& P2, bool verify) {
  const auto k1 = classify_quotient(Q1, P1).kind;
  const auto k2 = classify_quotient(Q2, P2).kind;
  if (k1 == InterlacingKind::None || k2 == InterlacingKind::None)
    fail(ErrorCode::NotInterlacing, "summands must be interlacing quotients");
  if (k1 != InterlacingKind::CC && k2 != InterlacingKind::CC)
    fail(ErrorCode::UnsupportedSum, "at most one summand may be of a flavour other than CC");
  RationalFunction sum = RationalFunction(Q1, P1) + RationalFunction(Q2, P2);
  if (verify) {
    const auto k = classify_quotient(sum.num(), sum.den()).kind;
    const bool both_cc = k1 == InterlacingKind::CC && k2 == InterlacingKind::CC;
    const bool ok = both_cc ? k == InterlacingKind::CC
                            : (k == InterlacingKind::CS || k == InterlacingKind::SS1 || k == InterlacingKind::SS2);
    if (!ok) fail(ErrorCode::Internal, "sum classified as " + to_string(k));
  }
  return sum;
}

RationalFunction cc_approximant(const LimitFunctionSpec& spec, long n) {
  spec.validate();
  if (n < 1) fail(ErrorCode::InvalidArgument, "approximant index must be positive");
  RationalFunction total;
  const IntPolynomial zn_minus = binomial(n, -1);
  if (spec.A != 0) total = total + RationalFunction(binomial(n, 1) * spec.A, zn_minus);
  for (const auto& t : spec.Ai)
    total = total + RationalFunction(binomial(t.exponent, -1) * zn_minus * t.coefficient, binomial(n + t.exponent, -1));
  for (const auto& t : spec.Bi)
    total = total + RationalFunction(binomial(n + t.exponent, -1) * t.coefficient, binomial(t.exponent, -1) * zn_minus);
  for (const auto& t : spec.Ci)
    total = total + RationalFunction(binomial(t.exponent, 1) * zn_minus * t.coefficient, binomial(n + t.exponent, 1));
  for (const auto& t : spec.Di)
    total = total + RationalFunction(binomial(n + t.exponent, 1) * t.coefficient, binomial(t.exponent, 1) * zn_minus);
  return total;
}

std::vector<GeneratedPair> generate_cc_pairs(std::size_t count, unsigned seed, long max_exponent) {
  if (max_exponent < 1) fail(ErrorCode::InvalidArgument, "max_exponent must be positive");
  // Raw engine output keeps the sequence identical across standard libraries.
  std::mt19937 rng(seed);
  auto draw = [&](long k) { return static_cast<long>(rng() % static_cast<unsigned long>(k)); };
  static const char kFamilies[] = {'A', 'a', 'B', 'C', 'D'};
  std::vector<GeneratedPair> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t terms = 1 + i % 3;
    RationalFunction sum;
    std::string recipe;
    for (std::size_t t = 0; t < terms; ++t) {
      const char family = kFamilies[draw(5)];
      const long coef = 1 + draw(2);
      const long e = 1 + draw(max_exponent);
      const long n = 1 + draw(max_exponent);
      LimitFunctionSpec spec;
      std::string name;
      if (family == 'A') {
        spec.A = coef;
        name = "A(" + std::to_string(coef);
      } else {
        const char key = family == 'a' ? 'A' : family;
        spec = LimitFunctionSpec::single(key, coef, e);
        name = std::string(family == 'a' ? "Ai" : std::string(1, family)) + "(" + std::to_string(coef) + "," +
               std::to_string(e);
      }
      sum = sum + cc_approximant(spec, n);
      if (!recipe.empty()) recipe += "+";
      recipe += name + ";n=" + std::to_string(n) + ")";
    }
    out.push_back({sum.num(), sum.den(), std::move(recipe)});
  }
  return out;
}

}  // namespace salemforge
