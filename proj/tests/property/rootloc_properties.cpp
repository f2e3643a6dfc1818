#include <random>

#include "fixtures.hpp"
#include "oracles.hpp"

namespace {

using namespace salemforge;

IntPolynomial random_poly(std::mt19937& rng, int degree, long height) {
  std::uniform_int_distribution<long> coef(-height, height);
  std::vector<Integer> c(static_cast<std::size_t>(degree + 1));
  for (auto& x : c) x = coef(rng);
  if (c.back() == 0) c.back() = 1;
  return IntPolynomial(c);
}

IntPolynomial random_cyclotomic_product(std::mt19937& rng, int factors) {
  std::uniform_int_distribution<long> idx(1, 36);
  IntPolynomial f{1};
  for (int i = 0; i < factors; ++i) f *= cyclotomic(idx(rng));
  return f;
}

// Test corpus of degree <= 12: random integer polynomials, cyclotomic
// products, small Pisot polynomials and known Salem polynomials.
std::vector<IntPolynomial> corpus() {
  std::mt19937 rng(2024);
  std::vector<IntPolynomial> out;
  for (int i = 0; i < 150; ++i) out.push_back(random_poly(rng, 1 + i % 12, 3));
  for (int i = 0; i < 40; ++i) {
    IntPolynomial f = random_cyclotomic_product(rng, 1 + i % 3);
    if (f.degree() <= 12) out.push_back(f);
  }
  for (const auto& a : pisot_corpus(3, 2)) out.push_back(a);
  out.push_back(fx::lehmer());
  out.push_back(fx::small_salem());
  out.push_back(fx::small_salem() * fx::P("z^2 + z + 1"));
  return out;
}

TEST(RootlocProperty, CensusTotalsEqualDegree) {
  for (const auto& f : corpus()) {
    EXPECT_EQ(disc_root_count(f).total(), f.degree()) << to_expression(f);
  }
  EXPECT_EQ(disc_root_count(fx::P("(z - 2)^3 (z^2 + 1)^2 z^2")).total(), 9);
}

TEST(RootlocProperty, ReciprocalCensusIsSymmetric) {
  std::mt19937 rng(8);
  for (int i = 0; i < 80; ++i) {
    const IntPolynomial a = random_poly(rng, 1 + i % 6, 3);
    if (a.constant_term() == 0) continue;
    const IntPolynomial f = a * star(a);
    const RootCensus c = disc_root_count(f);
    EXPECT_EQ(c.inside_disc, c.outside_disc) << to_expression(f);
  }
}

TEST(RootlocProperty, CircleCountIsAdditiveOverProducts) {
  std::mt19937 rng(9);
  for (int i = 0; i < 80; ++i) {
    const IntPolynomial f = i % 2 == 0 ? random_poly(rng, 1 + i % 5, 3) : random_cyclotomic_product(rng, 1);
    const IntPolynomial g = i % 3 == 0 ? random_cyclotomic_product(rng, 2) : random_poly(rng, 1 + i % 4, 2);
    EXPECT_EQ(circle_root_count(f * g), circle_root_count(f) + circle_root_count(g))
        << to_expression(f) << " * " << to_expression(g);
  }
}

TEST(RootlocProperty, CyclotomicProductsLieOnCircle) {
  std::mt19937 rng(10);
  for (int i = 0; i < 60; ++i) {
    const IntPolynomial f = random_cyclotomic_product(rng, 1 + i % 4);
    EXPECT_EQ(circle_root_count(f), f.degree()) << to_expression(f);
    EXPECT_EQ(disc_root_count(f).on_circle, f.degree());
  }
}

TEST(RootlocProperty, AgreesWithFloatOracle) {
  int compared = 0;
  for (const auto& f : corpus()) {
    ASSERT_LE(f.degree(), 12);
    const IntPolynomial sf = squarefree_part(f);
    const auto fc = oracle::float_census(sf);
    if (fc.ambiguous) continue;
    ++compared;
    const RootCensus c = disc_root_count(sf);
    EXPECT_EQ(c.inside_disc, fc.inside) << to_expression(f);
    EXPECT_EQ(c.on_circle, fc.on) << to_expression(f);
    EXPECT_EQ(c.outside_disc, fc.outside) << to_expression(f);
  }
  EXPECT_GT(compared, 150);
}

TEST(RootlocProperty, SchurCohnMatchesArgumentCount) {
  std::mt19937 rng(12);
  int compared = 0;
  for (int i = 0; i < 120; ++i) {
    const IntPolynomial f = random_poly(rng, 1 + i % 10, 4);
    if (f.constant_term() == 0 || circle_root_count(f) != 0) continue;
    const IntPolynomial sf = squarefree_part(f);
    EXPECT_EQ(inside_count_schur_cohn(sf), inside_count_argument(sf)) << to_expression(sf);
    ++compared;
  }
  EXPECT_GT(compared, 60);
}

TEST(RootlocProperty, IsolatedRootsMatchFloatOracle) {
  std::mt19937 rng(13);
  for (int i = 0; i < 60; ++i) {
    const IntPolynomial f = squarefree_part(random_poly(rng, 1 + i % 9, 3));
    const auto exact = isolate_real_roots(f, Rational(1, 1 << 20));
    const auto numeric = oracle::real_roots(f, 1e-12L);
    if (numeric.size() != exact.size()) {
      // Nearly-real complex pairs can fool the float oracle; re-check with a looser cut.
      EXPECT_EQ(exact.size(), oracle::real_roots(f, 1e-6L).size()) << to_expression(f);
      continue;
    }
    for (std::size_t j = 0; j < exact.size(); ++j) {
      EXPECT_NEAR(static_cast<double>(numeric[j]), exact[j].midpoint(), 1e-5) << to_expression(f);
    }
  }
}

}  // namespace
