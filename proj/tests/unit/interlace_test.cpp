#include <cmath>
#include <random>

#include "fixtures.hpp"
#include "oracles.hpp"

namespace {

using namespace salemforge;
using fx::P;
using oracle::cld;

InterlacingKind kind_of(const IntPolynomial& Q, const IntPolynomial& P) { return classify_quotient(Q, P).kind; }

bool single_parity(const IntPolynomial& p, int parity) {
  for (std::size_t i = 0; i < p.coefficients().size(); ++i) {
    if (p.coefficients()[i] != 0 && static_cast<int>(i % 2) != parity) return false;
  }
  return true;
}

// Largest relative gap between q(x)/p(x) and sqrt(z) Q / ((z - 1) P) over
// 20 random points of |z| = 1.1.
long double real_quotient_gap(const IntPolynomial& Q, const IntPolynomial& P) {
  const RealQuotient rq = real_quotient(Q, P, false);
  std::mt19937 rng(99);
  std::uniform_real_distribution<long double> angle(0, 2 * M_PIl);
  long double worst = 0;
  for (int i = 0; i < 20; ++i) {
    const cld z = std::polar(1.1L, angle(rng));
    const cld w = std::sqrt(z);
    const cld x = w + 1.0L / w;
    const cld lhs = oracle::eval(rq.q, x) / oracle::eval(rq.p, x);
    const cld rhs = w * oracle::eval(Q, z) / ((z - 1.0L) * oracle::eval(P, z));
    worst = std::max(worst, std::abs(lhs - rhs) / std::abs(rhs));
  }
  return worst;
}

long double sup_gap_on_circle(const RationalFunction& approx, const RationalFunction& h) {
  long double worst = 0;
  for (int i = 0; i < 720; ++i) {
    const cld z = std::polar(1.1L, 2 * M_PIl * i / 720);
    const cld fn = oracle::eval(approx.num(), z) / ((z - 1.0L) * oracle::eval(approx.den(), z));
    const cld hz = oracle::eval(h.num(), z) / oracle::eval(h.den(), z);
    worst = std::max(worst, std::abs(fn - hz));
  }
  return worst;
}

IntPolynomial plastic_pk(long k) { return pk(fx::plastic(), k); }

TEST(XTransform, ReciprocalIdentity) {
  const IntPolynomial r = x_transform(fx::lehmer());
  for (long double t : {0.3L, 1.1L, 2.5L}) {
    const cld w = std::polar(1.05L, t);
    const cld lhs = oracle::eval(fx::lehmer(), w * w);
    const cld rhs = std::pow(w, 10) * oracle::eval(r, w + 1.0L / w);
    EXPECT_LT(std::abs(lhs - rhs) / std::abs(lhs), 1e-12L);
  }
}

TEST(RealQuotient, SimplestPair) {
  const RealQuotient rq = real_quotient(P("z - 1"), P("z + 1"));
  EXPECT_EQ(rq.q, P("1"));
  EXPECT_EQ(rq.p, P("z"));
  EXPECT_TRUE(rq.one_divides_q);
}

TEST(RealQuotient, LehmerPairDegrees) {
  const RealQuotient rq = real_quotient(fx::lehmer_Q(), fx::lehmer_P());
  EXPECT_FALSE(rq.one_divides_q);
  EXPECT_EQ(rq.q.degree(), 8);
  EXPECT_EQ(rq.p.degree(), 9);
}

TEST(RealQuotient, NumericAgreementOnCircleOfRadiusOnePointOne) {
  const std::vector<std::pair<IntPolynomial, IntPolynomial>> pairs = {
      {P("z - 1"), P("z + 1")},
      {fx::lehmer_Q(), fx::lehmer_P()},
      {fx::cs_simple_Q(), fx::cs_P()},
      {fx::cs_triple_Q(), fx::cs_P()},
      {fx::ss_Q(), fx::ss_P()},
      {fx::ss_P(), fx::ss_Q()},
      {P("z - 1") * plastic_pk(8), plastic_pk(9)},
  };
  for (const auto& [Q, Pp] : pairs) {
    EXPECT_LT(real_quotient_gap(Q, Pp), 1e-9L) << to_expression(Q) << " / " << to_expression(Pp);
  }
}

TEST(RealQuotient, OddFunctionShape) {
  for (const auto& gp : generate_cc_pairs(30, 5)) {
    const RealQuotient rq = real_quotient(gp.Q, gp.P, false);
    const int pq = rq.q.degree() % 2;
    EXPECT_TRUE(single_parity(rq.q, pq)) << gp.recipe;
    EXPECT_TRUE(single_parity(rq.p, 1 - pq)) << gp.recipe;
    EXPECT_EQ(rq.p.degree(), rq.q.degree() + 1) << gp.recipe;
    EXPECT_GT(rq.q.leading(), 0);
    EXPECT_GT(rq.p.leading(), 0);
  }
}

TEST(RealQuotient, RejectsStructurallyInvalidInput) {
  EXPECT_SALEM_ERROR(real_quotient(P("z^2 + 1"), P("z^2 + z + 1")), ErrorCode::NotTransformable);
  EXPECT_SALEM_ERROR(real_quotient(P("z - 1"), P("z^2 + 1")), ErrorCode::NotTransformable);
  EXPECT_SALEM_ERROR(real_quotient(P("-z + 1"), P("z + 1")), ErrorCode::NotTransformable);
}

TEST(RealQuotient, ResidueSigns) {
  auto negatives = [](const RealQuotient& rq) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < rq.residues.size(); ++i) {
      if (rq.residues[i].sign < 0) idx.push_back(i);
    }
    return idx;
  };
  for (const auto& [Q, Pp] : std::vector<std::pair<IntPolynomial, IntPolynomial>>{
           {fx::lehmer_Q(), fx::lehmer_P()}, {fx::cs_simple_Q(), fx::cs_P()}, {fx::ss_Q(), fx::ss_P()}}) {
    const RealQuotient rq = real_quotient(Q, Pp);
    ASSERT_FALSE(rq.residues.empty());
    EXPECT_TRUE(negatives(rq).empty()) << to_expression(Q);
  }
  const RealQuotient ss2 = real_quotient(fx::ss_P(), fx::ss_Q());
  ASSERT_EQ(kind_of(fx::ss_P(), fx::ss_Q()), InterlacingKind::SS2);
  const auto neg = negatives(ss2);
  ASSERT_EQ(neg.size(), 2u);
  EXPECT_EQ(neg[0], 0u);
  EXPECT_EQ(neg[1], ss2.residues.size() - 1);
}

TEST(ClassifyQuotient, Examples) {
  EXPECT_EQ(kind_of(fx::lehmer_Q(), fx::lehmer_P()), InterlacingKind::CC);
  EXPECT_EQ(kind_of(fx::cs_simple_Q(), fx::cs_P()), InterlacingKind::CS);
  EXPECT_EQ(kind_of(fx::cs_triple_Q(), fx::cs_P()), InterlacingKind::CS);
  EXPECT_EQ(kind_of(fx::ss_Q(), fx::ss_P()), InterlacingKind::SS1);
  EXPECT_EQ(kind_of(fx::ss_P(), fx::ss_Q()), InterlacingKind::SS2);
}

TEST(ClassifyQuotient, SymmetryAndAsymmetry) {
  EXPECT_EQ(kind_of(fx::lehmer_P(), fx::lehmer_Q()), InterlacingKind::CC);
  EXPECT_EQ(kind_of(fx::cs_P(), fx::cs_simple_Q()), InterlacingKind::None);
  EXPECT_EQ(kind_of(fx::cs_P(), fx::cs_triple_Q()), InterlacingKind::None);
}

TEST(ClassifyQuotient, NoneCarriesReason) {
  const auto c = classify_quotient(P("z^2 + 1"), P("z^2 + z + 1"));
  EXPECT_EQ(c.kind, InterlacingKind::None);
  EXPECT_FALSE(c.failure_reason.empty());
  const auto shared = classify_quotient(P("(z - 1)(z^2 + 1)"), P("(z + 1)(z^2 + 1)"));
  EXPECT_EQ(shared.kind, InterlacingKind::None);
}

TEST(ClassifyQuotient, CircleRootsListedInOrder) {
  const auto c = classify_quotient(fx::lehmer_Q(), fx::lehmer_P());
  EXPECT_EQ(c.circle_roots_Q.size(), 8u);
  EXPECT_EQ(c.circle_order.size(), 16u);
  for (std::size_t i = 1; i < c.circle_order.size(); ++i) EXPECT_NE(c.circle_order[i], c.circle_order[i - 1]);
}

TEST(SumQuotients, Examples) {
  EXPECT_EQ(sum_quotients(P("z - 1"), P("z + 1"), P("z - 1"), P("z + 1")), RationalFunction(P("2z - 2"), P("z + 1")));
  const RationalFunction added(P("z^18 - 1"), P("(z^7 - 1)(z^11 - 1)"));
  const RationalFunction s = sum_quotients(fx::lehmer_Q(), fx::lehmer_P(), added.num(), added.den());
  EXPECT_EQ(kind_of(s.num(), s.den()), InterlacingKind::CC);
  const RationalFunction ss = sum_quotients(fx::ss_Q(), fx::ss_P(), P("z - 1"), P("z + 1"));
  const InterlacingKind k = kind_of(ss.num(), ss.den());
  EXPECT_TRUE(k == InterlacingKind::CS || k == InterlacingKind::SS1 || k == InterlacingKind::SS2);
}

TEST(SumQuotients, Errors) {
  EXPECT_SALEM_ERROR(sum_quotients(fx::ss_Q(), fx::ss_P(), fx::cs_simple_Q(), fx::cs_P()),
                     ErrorCode::UnsupportedSum);
  EXPECT_SALEM_ERROR(sum_quotients(P("z^2 + 1"), P("z^2 + z + 1"), P("z - 1"), P("z + 1")), ErrorCode::NotInterlacing);
}

TEST(CcApproximant, Examples) {
  const RationalFunction b = cc_approximant(LimitFunctionSpec::single('B', 1, 7), 5);
  EXPECT_EQ(b, RationalFunction(P("z^12 - 1"), P("(z^7 - 1)(z^5 - 1)")));
  EXPECT_EQ(kind_of(b.num(), b.den()), InterlacingKind::CC);
  const RationalFunction a = cc_approximant(LimitFunctionSpec::a_term(1), 3);
  EXPECT_EQ(a, RationalFunction(P("z^3 + 1"), P("z^3 - 1")));
  EXPECT_EQ(kind_of(a.num(), a.den()), InterlacingKind::CC);
  EXPECT_SALEM_ERROR(cc_approximant(LimitFunctionSpec::a_term(1), 0), ErrorCode::InvalidArgument);
  EXPECT_SALEM_ERROR(cc_approximant(LimitFunctionSpec{}, 3), ErrorCode::EmptySpec);
}

TEST(CcApproximant, ConvergesUniformlyOnCircle) {
  std::vector<LimitFunctionSpec> specs = {LimitFunctionSpec::a_term(1), LimitFunctionSpec::single('A', 1, 1),
                                          LimitFunctionSpec::single('B', 1, 7), LimitFunctionSpec::single('C', 2, 3),
                                          LimitFunctionSpec::single('D', 1, 4)};
  LimitFunctionSpec mixed = LimitFunctionSpec::single('B', 1, 7);
  mixed.A = 2;
  mixed.Ci.push_back({1, 5});
  specs.push_back(mixed);
  for (const auto& spec : specs) {
    const RationalFunction h = special_limit_function(spec);
    const long double g25 = sup_gap_on_circle(cc_approximant(spec, 25), h);
    const long double g50 = sup_gap_on_circle(cc_approximant(spec, 50), h);
    EXPECT_LT(g50, g25) << to_json(spec);
    const RationalFunction a50 = cc_approximant(spec, 50);
    EXPECT_EQ(kind_of(a50.num(), a50.den()), InterlacingKind::CC) << to_json(spec);
  }
}

TEST(LimitAtOne, Examples) {
  const LimitAtOne two = limit_at_one(RationalFunction(P("2"), P("z + 1")));
  EXPECT_EQ(two.kind, LimitAtOne::Kind::Finite);
  EXPECT_EQ(two.value, 1);
  const Quotient lehmer{fx::lehmer_Q(), fx::lehmer_P()};
  EXPECT_EQ(limit_at_one(lehmer.g()).kind, LimitAtOne::Kind::PlusInf);
  const LimitAtOne half = limit_at_one(RationalFunction(plastic_pk(8), plastic_pk(9)));
  EXPECT_EQ(half.kind, LimitAtOne::Kind::Finite);
  EXPECT_EQ(half.value, Rational(1, 2));
  EXPECT_EQ(limit_at_one(RationalFunction(P("-1"), P("z - 1"))).kind, LimitAtOne::Kind::MinusInf);
  EXPECT_TRUE(half.less_than(2));
  EXPECT_FALSE(half.greater_than(1));
}

TEST(LimitAtOne, AgreesWithNumericApproach) {
  const std::vector<RationalFunction> fs = {
      RationalFunction(P("z^3 - 2z + 5"), P("z^2 + 4")),
      RationalFunction(P("(z - 1)(z + 3)"), P("(z - 1)(2z + 1)")),
      RationalFunction(P("(z - 1)^2"), P("z - 1")),
  };
  for (const auto& f : fs) {
    const LimitAtOne lim = limit_at_one(f);
    ASSERT_EQ(lim.kind, LimitAtOne::Kind::Finite);
    const long double z = 1 + 1e-9L;
    const long double v = oracle::eval_real(f.num(), z) / oracle::eval_real(f.den(), z);
    EXPECT_NEAR(static_cast<double>(v), lim.value.get_d(), 1e-6);
  }
}

TEST(GenerateCcPairs, DeterministicAndCc) {
  const auto a = generate_cc_pairs(20, 42);
  const auto b = generate_cc_pairs(20, 42);
  ASSERT_EQ(a.size(), 20u);
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].Q, b[i].Q);
    EXPECT_EQ(a[i].recipe, b[i].recipe);
    EXPECT_EQ(kind_of(a[i].Q, a[i].P), InterlacingKind::CC) << a[i].recipe;
  }
}

}  // namespace
