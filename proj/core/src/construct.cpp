#include "salemforge/construct.hpp"

#include "salemforge/error.hpp"

namespace salemforge {

namespace {

const IntPolynomial& z_squared_minus_one() {
  static const IntPolynomial p{-1, 0, 1};
  return p;
}

const IntPolynomial& z_poly() {
  static const IntPolynomial p{0, 1};
  return p;
}

IntPolynomial binomial(long k, long sign) {
  return IntPolynomial::z_power(static_cast<std::size_t>(k)) + IntPolynomial{sign};
}

// 1 + 1/z
RationalFunction one_plus_z_inverse() { return RationalFunction(IntPolynomial{1, 1}, z_poly()); }

void require_monic(const IntPolynomial& p, const char* name) {
  if (!p.is_monic()) fail(ErrorCode::NotMonic, std::string(name) + " must be monic");
}

void require_kind(const IntPolynomial& Q, const IntPolynomial& P, InterlacingKind want, ErrorCode code) {
  const auto c = classify_quotient(Q, P);
  if (c.kind != want)
    fail(code, "quotient classifies as " + to_string(c.kind) +
                   (c.failure_reason.empty() ? std::string() : " (" + c.failure_reason + ")"));
}

void require_cc_or_zero(const Quotient& g, const char* name) {
  if (g.is_zero()) {
    if (!g.P.is_one()) fail(ErrorCode::InvalidArgument, std::string(name) + ": the zero quotient needs P = 1");
    return;
  }
  require_kind(g.Q, g.P, InterlacingKind::CC, ErrorCode::NotCC);
  require_monic(g.P, name);
}

std::string limit_note(const char* what, const LimitAtOne& lim) {
  return std::string(what) + " limit at 1+ is " + to_string(lim);
}

// Numerator of f scaled to be monic; f tends to a nonzero constant or to 0 like
// c/z at infinity with a monic denominator, so the numerator has unit leading
// coefficient.
IntPolynomial monic_numerator(const RationalFunction& f) {
  if (f.is_zero()) fail(ErrorCode::Internal, "cleared equation is identically zero");
  const IntPolynomial& n = f.num();
  if (n.leading() == 1) return n;
  if (n.leading() == -1) return -n;
  fail(ErrorCode::Internal, "cleared equation is not monic");
}

IsolatingInterval root_above_one(const IntPolynomial& core) {
  const Rational b = root_bound(core);
  const auto roots = isolate_real_roots_in(core, Rational(1), b, default_root_width());
  if (roots.size() != 1 || roots.front().multiplicity != 1)
    fail(ErrorCode::UnexpectedCensus, "core does not have a unique simple root above 1");
  return roots.front();
}

ConstructionResult split(const IntPolynomial& raw) {
  if (!raw.is_monic()) fail(ErrorCode::Internal, "cleared polynomial is not monic");
  const PolyClassification cls = classify_poly(raw);
  ConstructionResult r;
  r.raw = raw;
  r.core = cls.core;
  r.cofactor = cls.cofactor;
  r.z_power = cls.z_power;
  r.trace = cls.trace;
  r.cyclotomic_indices = strip_cyclotomic(cls.cofactor).factors;
  if (cls.core.degree() >= 1) r.census = disc_root_count(cls.core);
  if (r.cofactor.degree() >= 1 && circle_root_count(r.cofactor) != r.cofactor.degree())
    fail(ErrorCode::UnexpectedCensus, "cyclotomic cofactor has roots off the unit circle");
  switch (cls.kind) {
    case PolyKind::SalemPoly: r.kind = ResultKind::Salem; break;
    case PolyKind::RecipQuadPisot: r.kind = ResultKind::RecipQuadPisot; break;
    case PolyKind::PisotPoly: r.kind = ResultKind::Pisot; break;
    default:
      fail(ErrorCode::UnexpectedCensus, "core classifies as " + to_string(cls.kind) + " with census inside=" +
                                            std::to_string(r.census.inside_disc) + " on=" +
                                            std::to_string(r.census.on_circle) + " outside=" +
                                            std::to_string(r.census.outside_disc));
  }
  return r;
}

RationalFunction pisot_equation(const RationalFunction& lhs) { return lhs - one_plus_z_inverse(); }

}  // namespace

std::string to_string(ResultKind kind) {
  switch (kind) {
    case ResultKind::Salem: return "SALEM";
    case ResultKind::RecipQuadPisot: return "RECIP_QUAD_PISOT";
    case ResultKind::Pisot: return "PISOT";
  }
  return "?";
}

std::string to_string(ProductVariant v) { return v == ProductVariant::I ? "I" : "II"; }

RationalFunction Quotient::g() const {
  if (is_zero()) return RationalFunction();
  return RationalFunction(Q, P * linear(1));
}

ConstructionResult certify_salem(const IntPolynomial& raw) {
  ConstructionResult r = split(raw);
  if (r.kind == ResultKind::Pisot) fail(ErrorCode::UnexpectedCensus, "expected a Salem core, found a Pisot core");
  const int d = r.core.degree();
  if (r.census.outside_disc != 1 || r.census.inside_disc != 1 || r.census.on_circle != d - 2)
    fail(ErrorCode::UnexpectedCensus, "Salem census violated");
  r.root = root_above_one(r.core);
  return r;
}

ConstructionResult certify_pisot(const IntPolynomial& raw) {
  ConstructionResult r = split(raw);
  if (r.kind != ResultKind::Pisot) {
    std::string msg = "expected a Pisot core, found ";
    msg += to_string(r.kind);
    fail(ErrorCode::UnexpectedCensus, msg);
  }
  const int d = r.core.degree();
  if (r.census.outside_disc != 1 || r.census.on_circle != 0 || r.census.inside_disc != d - 1)
    fail(ErrorCode::UnexpectedCensus, "Pisot census violated");
  r.root = root_above_one(r.core);
  return r;
}

namespace {

ConstructionResult salem_single(const IntPolynomial& Q, const IntPolynomial& P, std::string note) {
  const IntPolynomial raw = z_squared_minus_one() * P - z_poly() * Q;
  ConstructionResult r = certify_salem(raw);
  if (!note.empty()) r.diagnostics.push_back(std::move(note));
  return r;
}

}  // namespace

ConstructionResult salem_cc(const IntPolynomial& Q, const IntPolynomial& P) {
  require_kind(Q, P, InterlacingKind::CC, ErrorCode::NotCC);
  require_monic(P, "P");
  const LimitAtOne lim = limit_at_one(Quotient{Q, P}.g());
  if (!lim.greater_than(Rational(2)))
    fail(ErrorCode::ConditionAtOneFails, limit_note("Q/((z-1)P)", lim) + ", need > 2");
  return salem_single(Q, P, limit_note("Q/((z-1)P)", lim));
}

ConstructionResult salem_cs(const IntPolynomial& Q, const IntPolynomial& P) {
  require_kind(Q, P, InterlacingKind::CS, ErrorCode::NotCS);
  require_monic(P, "P");
  return salem_single(Q, P, "");
}

ConstructionResult salem_ss(const IntPolynomial& Q, const IntPolynomial& P) {
  const auto c = classify_quotient(Q, P);
  if (c.kind != InterlacingKind::SS1 && c.kind != InterlacingKind::SS2)
    fail(ErrorCode::NotSS, "quotient classifies as " + to_string(c.kind));
  require_monic(P, "P");
  const LimitAtOne lim = limit_at_one(Quotient{Q, P}.g());
  const bool ok = c.kind == InterlacingKind::SS1 ? !lim.greater_than(Rational(2)) : lim.less_than(Rational(2));
  if (!ok)
    fail(ErrorCode::ConditionAtOneFails,
         limit_note("Q/((z-1)P)", lim) + (c.kind == InterlacingKind::SS1 ? ", need <= 2" : ", need < 2"));
  return salem_single(Q, P, to_string(c.kind) + "; " + limit_note("Q/((z-1)P)", lim));
}

ConstructionResult salem_cc_product(const IntPolynomial& Q1, const IntPolynomial& P1, const IntPolynomial& Q2,
                                    const IntPolynomial& P2, ProductVariant variant) {
  require_kind(Q1, P1, InterlacingKind::CC, ErrorCode::NotCC);
  require_kind(Q2, P2, InterlacingKind::CC, ErrorCode::NotCC);
  require_monic(P1, "P1");
  require_monic(P2, "P2");
  const RationalFunction g1 = Quotient{Q1, P1}.g();
  const RationalFunction g2 = Quotient{Q2, P2}.g();
  const IntPolynomial zm1_sq = linear(1) * linear(1);
  IntPolynomial raw;
  LimitAtOne lim;
  if (variant == ProductVariant::I) {
    const RationalFunction e = (g1 - one_plus_z_inverse()) * (g2 - one_plus_z_inverse());
    lim = limit_at_one(e);
    if (!lim.less_than(Rational(1)))
      fail(ErrorCode::ConditionAtOneFails, limit_note("(g1-1-1/z)(g2-1-1/z)", lim) + ", need < 1");
    const IntPolynomial f1 = z_poly() * Q1 - z_squared_minus_one() * P1;
    const IntPolynomial f2 = z_poly() * Q2 - z_squared_minus_one() * P2;
    raw = f1 * f2 - z_poly() * zm1_sq * P1 * P2;
  } else {
    lim = limit_at_one(g1 * g2);
    if (!lim.greater_than(Rational(1))) fail(ErrorCode::ConditionAtOneFails, limit_note("g1 g2", lim) + ", need > 1");
    raw = zm1_sq * P1 * P2 - z_poly() * Q1 * Q2;
  }
  ConstructionResult r = certify_salem(raw);
  r.diagnostics.push_back("variant " + to_string(variant) + "; " + to_string(lim));
  return r;
}

RationalFunction special_limit_function(const LimitFunctionSpec& spec) {
  spec.validate();
  const IntPolynomial zm1 = linear(1);
  RationalFunction h;
  if (spec.A != 0) h = h + RationalFunction(IntPolynomial::constant(spec.A), zm1);
  for (const auto& t : spec.Ai) {
    const auto a = static_cast<std::size_t>(t.exponent);
    h = h + RationalFunction(binomial(t.exponent, -1) * t.coefficient, zm1 * IntPolynomial::z_power(a));
  }
  for (const auto& t : spec.Bi) {
    const auto b = static_cast<std::size_t>(t.exponent);
    h = h + RationalFunction(IntPolynomial::monomial(t.coefficient, b), zm1 * binomial(t.exponent, -1));
  }
  for (const auto& t : spec.Ci) {
    const auto c = static_cast<std::size_t>(t.exponent);
    h = h + RationalFunction(binomial(t.exponent, 1) * t.coefficient, zm1 * IntPolynomial::z_power(c));
  }
  for (const auto& t : spec.Di) {
    const auto d = static_cast<std::size_t>(t.exponent);
    h = h + RationalFunction(IntPolynomial::monomial(t.coefficient, d), zm1 * binomial(t.exponent, 1));
  }
  return h;
}

ConstructionResult pisot_cc(const Quotient& g, const LimitFunctionSpec& spec) {
  require_cc_or_zero(g, "P");
  const RationalFunction h = special_limit_function(spec);
  const RationalFunction gh = g.g() + h;
  const LimitAtOne lim = limit_at_one(gh);
  if (!lim.greater_than(Rational(2))) fail(ErrorCode::ConditionAtOneFails, limit_note("g+h", lim) + ", need > 2");
  ConstructionResult r = certify_pisot(monic_numerator(pisot_equation(gh)));
  r.diagnostics.push_back(limit_note("g+h", lim));
  return r;
}

ConstructionResult pisot_cc_product(const Quotient& g1, const LimitFunctionSpec& spec1, const Quotient& g2,
                                    const std::optional<LimitFunctionSpec>& spec2, ProductVariant variant) {
  require_cc_or_zero(g1, "P1");
  require_cc_or_zero(g2, "P2");
  const RationalFunction f1 = g1.g() + special_limit_function(spec1);
  const RationalFunction f2 = spec2 ? g2.g() + special_limit_function(*spec2) : g2.g();
  RationalFunction e;
  LimitAtOne lim;
  if (variant == ProductVariant::I) {
    e = (f1 - one_plus_z_inverse()) * (f2 - one_plus_z_inverse());
    lim = limit_at_one(e);
    if (!lim.less_than(Rational(1)))
      fail(ErrorCode::ConditionAtOneFails, limit_note("(g1+h1-1-1/z)(g2+h2-1-1/z)", lim) + ", need < 1");
  } else {
    e = f1 * f2;
    lim = limit_at_one(e);
    if (!lim.greater_than(Rational(1)))
      fail(ErrorCode::ConditionAtOneFails, limit_note("(g1+h1)(g2+h2)", lim) + ", need > 1");
  }
  ConstructionResult r = certify_pisot(monic_numerator(e - RationalFunction::z_inverse()));
  r.diagnostics.push_back("variant " + to_string(variant) + "; " + to_string(lim));
  return r;
}

ConstructionResult pisot_ss(const IntPolynomial& Q, const IntPolynomial& P, const LimitFunctionSpec& spec) {
  const auto c = classify_quotient(Q, P);
  if (c.kind != InterlacingKind::CS && c.kind != InterlacingKind::SS1 && c.kind != InterlacingKind::SS2)
    fail(ErrorCode::NotCSOrSS, "quotient classifies as " + to_string(c.kind));
  require_monic(P, "P");
  const RationalFunction gh = Quotient{Q, P}.g() + special_limit_function(spec);
  const LimitAtOne lim = limit_at_one(gh);
  if (!lim.less_than(Rational(2))) fail(ErrorCode::ConditionAtOneFails, limit_note("g+h", lim) + ", need < 2");
  ConstructionResult r = certify_pisot(monic_numerator(pisot_equation(gh)));
  r.diagnostics.push_back(to_string(c.kind) + "; " + limit_note("g+h", lim));
  if (c.kind == InterlacingKind::SS2) r.diagnostics.push_back("type 2 SS input accepted");
  return r;
}

}  // namespace salemforge
