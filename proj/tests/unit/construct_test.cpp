#include "fixtures.hpp"
#include "oracles.hpp"

namespace {

using namespace salemforge;
using fx::P;

// Census and reconstruction invariants every result must carry.
void expect_certified(const ConstructionResult& r) {
  EXPECT_EQ(IntPolynomial::z_power(r.z_power) * r.core * r.cofactor, r.raw);
  EXPECT_TRUE(r.core.is_monic());
  const RootCensus c = disc_root_count(r.core);
  EXPECT_EQ(c.outside_disc, 1);
  EXPECT_EQ(c.real_gt_1, 1);
  if (r.kind == ResultKind::Pisot) {
    EXPECT_EQ(c.on_circle, 0);
    EXPECT_EQ(c.inside_disc, r.core.degree() - 1);
    EXPECT_NE(r.core.constant_term(), 0);
  } else {
    EXPECT_TRUE(is_reciprocal(r.core));
    EXPECT_EQ(r.core.degree() % 2, 0);
    EXPECT_EQ(c.inside_disc, 1);
  }
  EXPECT_EQ(sign_at(r.core, r.root.lo) * sign_at(r.core, r.root.hi) <= 0, true);
  EXPECT_GT(r.root.lo, 1);
  const auto fc = oracle::float_census(r.core);
  if (!fc.ambiguous) {
    EXPECT_EQ(fc.outside, 1);
  }
}

TEST(SalemCc, LehmerPair) {
  const auto r = salem_cc(fx::lehmer_Q(), fx::lehmer_P());
  EXPECT_EQ(r.kind, ResultKind::Salem);
  EXPECT_EQ(r.core, fx::lehmer());
  EXPECT_EQ(r.cofactor, P("1"));
  EXPECT_EQ(r.trace, -1);
  expect_certified(r);
}

TEST(SalemCc, EighthRootsCofactor) {
  const auto r = salem_cc(P("2z^10 + z^8 + 2z^7 + z^6 + 2z^5 + z^4 + 2z^3 + z^2 + 2"), P("z^10 + z^7 - z^3 - 1"));
  EXPECT_EQ(r.core, P("z^8 - 2z^7 - z^6 - 3z^4 - z^2 - 2z + 1"));
  EXPECT_EQ(r.cofactor, P("z^4 + 1"));
  expect_certified(r);
}

TEST(SalemCc, ReciprocalQuadraticResult) {
  const auto r = salem_cc(P("3z^2 - 3"), P("z^2 + 1"));
  EXPECT_EQ(r.kind, ResultKind::RecipQuadPisot);
  EXPECT_EQ(r.core, P("z^2 - 3z + 1"));
  EXPECT_EQ(r.cofactor, P("z^2 - 1"));
  // (z^2 - 1)(z^2 + 1) - 3z (z^2 - 1) by hand.
  const auto ref = oracle::long_division(r.raw, P("z^2 - 1"));
  EXPECT_TRUE(ref.remainder_zero());
  EXPECT_EQ(oracle::integral_quotient(ref), P("z^2 - 3z + 1"));
}

TEST(SalemCc, PreconditionErrors) {
  EXPECT_SALEM_ERROR(salem_cc(fx::cs_simple_Q(), fx::cs_P()), ErrorCode::NotCC);
  EXPECT_SALEM_ERROR(salem_cc(P("z - 1"), P("2z + 2")), ErrorCode::NotMonic);
  EXPECT_SALEM_ERROR(salem_cc(P("z - 1"), P("z + 1")), ErrorCode::ConditionAtOneFails);
}

TEST(SalemCcProduct, VariantTwoLehmerSquared) {
  const auto r = salem_cc_product(fx::lehmer_Q(), fx::lehmer_P(), fx::lehmer_Q(), fx::lehmer_P(), ProductVariant::II);
  EXPECT_TRUE(r.raw.is_monic());
  EXPECT_EQ(r.kind, ResultKind::Salem);
  EXPECT_EQ(disc_root_count(r.core).outside_disc, 1);
  expect_certified(r);
}

TEST(SalemCcProduct, VariantIWithTrivialSecondPair) {
  // The two constructions differ after substitution; both must certify.
  const auto product = salem_cc_product(fx::lehmer_Q(), fx::lehmer_P(), P("z - 1"), P("z + 1"), ProductVariant::I);
  const auto single = salem_cc(fx::lehmer_Q(), fx::lehmer_P());
  expect_certified(product);
  EXPECT_EQ(product.kind, ResultKind::Salem);
  EXPECT_EQ(product.core, P("z^10 - z^8 - z^5 - z^2 + 1"));
  EXPECT_EQ(product.cofactor, P("z^3 - 1"));
  EXPECT_NE(product.core, single.core);
}

TEST(SalemCcProduct, Errors) {
  EXPECT_SALEM_ERROR(salem_cc_product(P("z - 1"), P("z + 1"), P("z - 1"), P("z + 1"), ProductVariant::II),
                     ErrorCode::ConditionAtOneFails);
  // No product exists for SS inputs.
  EXPECT_SALEM_ERROR(salem_cc_product(fx::ss_Q(), fx::ss_P(), P("z - 1"), P("z + 1"), ProductVariant::I),
                     ErrorCode::NotCC);
  EXPECT_SALEM_ERROR(salem_cc_product(fx::lehmer_Q(), fx::lehmer_P(), fx::ss_Q(), fx::ss_P(), ProductVariant::II),
                     ErrorCode::NotCC);
}

TEST(SalemCs, SimpleRootPair) {
  const auto r = salem_cs(fx::cs_simple_Q(), fx::cs_P());
  const auto ref = oracle::long_division(r.raw, P("z^2 - 1"));
  ASSERT_TRUE(ref.remainder_zero());
  EXPECT_EQ(oracle::integral_quotient(ref), fx::small_salem());
  EXPECT_EQ(r.raw, P("(z^2 - 1)(z^4 - 3z^3 - 3z + 1)"));
  EXPECT_EQ(r.core, fx::small_salem());
  EXPECT_EQ(r.cofactor, P("z^2 - 1"));
  EXPECT_EQ(r.kind, ResultKind::Salem);
  expect_certified(r);
}

TEST(SalemCs, TripleRootAtOne) {
  const auto r = salem_cs(fx::cs_triple_Q(), fx::cs_P());
  EXPECT_TRUE(r.kind == ResultKind::Salem || r.kind == ResultKind::RecipQuadPisot);
  EXPECT_EQ(r.core, P("z^4 - 3z^3 + z^2 - 3z + 1"));
  expect_certified(r);
}

TEST(SalemCs, Errors) {
  EXPECT_SALEM_ERROR(salem_cs(fx::cs_simple_Q(), P("2") * fx::cs_P()), ErrorCode::NotMonic);
  EXPECT_SALEM_ERROR(salem_cs(fx::lehmer_Q(), fx::lehmer_P()), ErrorCode::NotCS);
}

TEST(SalemSs, PlasticSequencePair) {
  const IntPolynomial Q = P("z - 1") * pk(fx::plastic(), 8);
  const IntPolynomial Pp = pk(fx::plastic(), 9);
  ASSERT_EQ(classify_quotient(Q, Pp).kind, InterlacingKind::SS1);
  const auto r = salem_ss(Q, Pp);
  EXPECT_EQ(r.kind, ResultKind::Salem);
  expect_certified(r);
}

TEST(SalemSs, LimitExactlyTwoIsAccepted) {
  // Scaling Q by 4 keeps the root layout and moves the limit from 1/2 to 2.
  const IntPolynomial Q = P("4z - 4") * pk(fx::plastic(), 8);
  const IntPolynomial Pp = pk(fx::plastic(), 9);
  const LimitAtOne lim = limit_at_one(Quotient{Q, Pp}.g());
  ASSERT_EQ(lim.kind, LimitAtOne::Kind::Finite);
  ASSERT_EQ(lim.value, 2);
  ASSERT_EQ(classify_quotient(Q, Pp).kind, InterlacingKind::SS1);
  const auto r = salem_ss(Q, Pp);
  expect_certified(r);
  EXPECT_SALEM_ERROR(salem_ss(P("5z - 5") * pk(fx::plastic(), 8), Pp), ErrorCode::ConditionAtOneFails);
}

TEST(SalemSs, Errors) {
  EXPECT_SALEM_ERROR(salem_ss(fx::ss_Q(), fx::ss_P()), ErrorCode::ConditionAtOneFails);
  EXPECT_SALEM_ERROR(salem_ss(fx::lehmer_Q(), fx::lehmer_P()), ErrorCode::NotSS);
}

TEST(SpecialLimitFunction, Examples) {
  EXPECT_EQ(special_limit_function(LimitFunctionSpec::a_term(1)), RationalFunction(P("1"), P("z - 1")));
  EXPECT_EQ(special_limit_function(LimitFunctionSpec::single('B', 1, 7)),
            RationalFunction(P("z^7"), P("(z - 1)(z^7 - 1)")));
  EXPECT_EQ(special_limit_function(LimitFunctionSpec::single('A', 1, 1)), RationalFunction::z_inverse());
  EXPECT_SALEM_ERROR(special_limit_function(LimitFunctionSpec{}), ErrorCode::EmptySpec);
}

TEST(LimitSpecJson, RoundTrip) {
  LimitFunctionSpec s = LimitFunctionSpec::single('B', 1, 7);
  s.A = 3;
  s.Di.push_back({2, 5});
  EXPECT_EQ(limit_spec_from_json(to_json(s)), s);
  EXPECT_EQ(limit_spec_from_json(R"({"Bi":[[1,7]]})"), LimitFunctionSpec::single('B', 1, 7));
  EXPECT_SALEM_ERROR(limit_spec_from_json("{"), ErrorCode::ParseError);
  EXPECT_SALEM_ERROR(limit_spec_from_json(R"({"Bi":[[-1,7]]})"), ErrorCode::InvalidSpec);
}

TEST(PisotCc, DegreeSixteen) {
  const auto r = pisot_cc(Quotient{fx::lehmer_Q(), fx::lehmer_P()}, LimitFunctionSpec::single('B', 1, 7));
  EXPECT_EQ(r.core, P("z^16 + z^15 - z^14 - 4z^13 - 6z^12 - 7z^11 - 7z^10 - 7z^9 - 6z^8 - 4z^7 - 2z^6 - z^5 + z^3 + "
                      "2z^2 + 2z + 1"));
  EXPECT_EQ(r.trace, -1);
  EXPECT_EQ(r.kind, ResultKind::Pisot);
  expect_certified(r);
}

TEST(PisotCc, InverseZLimitGivesGMinusOne) {
  const Quotient g{fx::lehmer_Q(), fx::lehmer_P()};
  const auto r = pisot_cc(g, LimitFunctionSpec::single('A', 1, 1));
  EXPECT_EQ(r.kind, ResultKind::Pisot);
  EXPECT_TRUE(divides(r.core, fx::lehmer_Q() - P("z - 1") * fx::lehmer_P()));
  expect_certified(r);
}

TEST(PisotCc, ZeroQuotientFailsCondition) {
  EXPECT_SALEM_ERROR(pisot_cc(Quotient::zero(), LimitFunctionSpec::single('A', 1, 1)), ErrorCode::ConditionAtOneFails);
  EXPECT_SALEM_ERROR(pisot_cc(Quotient{fx::ss_Q(), fx::ss_P()}, LimitFunctionSpec::a_term(1)), ErrorCode::NotCC);
}

TEST(PisotCcProduct, VariantTwoLehmerSquared) {
  const Quotient g{fx::lehmer_Q(), fx::lehmer_P()};
  const auto r = pisot_cc_product(g, LimitFunctionSpec::a_term(1), g, std::nullopt, ProductVariant::II);
  EXPECT_EQ(r.kind, ResultKind::Pisot);
  expect_certified(r);
}

TEST(PisotCcProduct, VariantIConditionViolated) {
  const Quotient g{fx::lehmer_Q(), fx::lehmer_P()};
  EXPECT_SALEM_ERROR(
      pisot_cc_product(g, LimitFunctionSpec::a_term(1), g, LimitFunctionSpec::a_term(1), ProductVariant::I),
      ErrorCode::ConditionAtOneFails);
}

TEST(PisotCcProduct, VariantTwoWithZeroSecondFactor) {
  // The displayed formula with F2 = 0 is f = -1/z; its limit condition fails.
  const Quotient g{fx::lehmer_Q(), fx::lehmer_P()};
  const RationalFunction F1 = g.g() + special_limit_function(LimitFunctionSpec::a_term(1));
  const RationalFunction F2 = Quotient::zero().g();
  EXPECT_TRUE(F2.is_zero());
  EXPECT_EQ(F1 * F2 - RationalFunction::z_inverse(), -RationalFunction::z_inverse());
  EXPECT_SALEM_ERROR(
      pisot_cc_product(g, LimitFunctionSpec::a_term(1), Quotient::zero(), std::nullopt, ProductVariant::II),
      ErrorCode::ConditionAtOneFails);
}

TEST(PisotSs, RecoversPlasticFromSequencePairs) {
  for (long k : {8L, 12L}) {
    const IntPolynomial Q = P("z - 1") * pk(fx::plastic(), k);
    const IntPolynomial Pp = pk(fx::plastic(), k + 1);
    const auto r = pisot_ss(Q, Pp, LimitFunctionSpec::single('A', 1, 1));
    EXPECT_EQ(r.core, fx::plastic()) << k;
    // Nonzero roots of the raw polynomial are those of z^k A.
    EXPECT_EQ(r.core * r.cofactor, fx::plastic()) << k;
    expect_certified(r);
  }
}

TEST(PisotSs, Errors) {
  EXPECT_SALEM_ERROR(pisot_ss(fx::ss_Q(), fx::ss_P(), LimitFunctionSpec::single('A', 1, 1)),
                     ErrorCode::ConditionAtOneFails);
  EXPECT_SALEM_ERROR(pisot_ss(fx::lehmer_Q(), fx::lehmer_P(), LimitFunctionSpec::single('A', 1, 1)),
                     ErrorCode::NotCSOrSS);
}

TEST(Certify, RejectsWrongCensus) {
  EXPECT_SALEM_ERROR(certify_salem(fx::boyd_A() * P("z^2 + 1")), ErrorCode::UnexpectedCensus);
  EXPECT_SALEM_ERROR(certify_pisot(fx::lehmer()), ErrorCode::UnexpectedCensus);
  EXPECT_SALEM_ERROR(certify_salem(P("z^2 - 2z - 1")), ErrorCode::UnexpectedCensus);
}

}  // namespace
