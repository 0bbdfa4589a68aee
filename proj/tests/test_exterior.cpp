#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "pluck/exterior.hpp"

using namespace pluck;

namespace {

ExtElement e(std::size_t n, IndexTuple t) { return ExtElement::basis(n, std::move(t)); }

ExtElement random_element(std::mt19937_64& rng, std::size_t n, std::size_t k) {
  ExtElement x(n);
  for (const auto& t : index_tuples(n, k))
    if (rng() % 2) x.add(t, Rational(static_cast<long>(rng() % 7) - 3));
  return x;
}

BilinearFormSpec symplectic_standard(std::size_t m) {
  // e_i paired with e_{m+i}
  QMatrix g(2 * m, QVector(2 * m, Rational(0)));
  for (std::size_t i = 0; i < m; ++i) {
    g[i][m + i] = 1;
    g[m + i][i] = -1;
  }
  return BilinearFormSpec(g, BilinearFormSpec::Kind::Symplectic);
}

}  // namespace

TEST(Wedge, Signs) {
  EXPECT_TRUE(wedge(ExtElement::vector(3, 1), ExtElement::vector(3, 1)).is_zero());
  EXPECT_EQ(wedge(ExtElement::vector(3, 1), ExtElement::vector(3, 2)),
            Rational(-1) * wedge(ExtElement::vector(3, 2), ExtElement::vector(3, 1)));
  const ExtElement a = e(4, {1, 3}) + e(4, {2, 4});
  EXPECT_EQ(wedge(a, a), Rational(-2) * e(4, {1, 2, 3, 4}));
  EXPECT_EQ(wedge_power(a, 2), wedge(a, a));
  EXPECT_TRUE(wedge_power(a, 3).is_zero());
}

TEST(Wedge, DecomposableMatchesMinors) {
  std::mt19937_64 rng(2);
  const std::size_t n = 5;
  for (std::size_t k = 1; k <= 4; ++k) {
    QMatrix vs(n, QVector(k));
    ExtElement prod = ExtElement::scalar(n, 1);
    for (std::size_t c = 0; c < k; ++c) {
      ExtElement v(n);
      for (std::size_t r = 0; r < n; ++r) {
        vs[r][c] = static_cast<long>(rng() % 9) - 4;
        v.add({static_cast<unsigned>(r + 1)}, vs[r][c]);
      }
      prod = wedge(prod, v);
    }
    for (const auto& t : index_tuples(n, k)) EXPECT_EQ(prod.coefficient(t), oracle::row_minor(vs, t));
  }
}

TEST(Wedge, AssociativeAndGradedCommutative) {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 10; ++trial) {
    const auto x = random_element(rng, 6, 1 + trial % 3), y = random_element(rng, 6, 2), z = random_element(rng, 6, 1);
    EXPECT_EQ(wedge(wedge(x, y), z), wedge(x, wedge(y, z)));
    const std::size_t dx = 1 + trial % 3;
    EXPECT_EQ(wedge(x, z), Rational(dx % 2 ? -1 : 1) * wedge(z, x));
  }
}

TEST(Contraction, Examples) {
  for (std::size_t m = 1; m <= 4; ++m) {
    const auto form = symplectic_standard(m);
    const ExtElement a = form_bivector(form);
    EXPECT_EQ(contraction(form, a), ExtElement::scalar(2 * m, Rational(static_cast<long>(m))));
    // e_1, e_2 span an isotropic subspace
    if (m >= 2) {
      EXPECT_TRUE(contraction(form, e(2 * m, {1, 2})).is_zero());
    }
  }
  // the dual form of the bivector satisfies the same normalization
  const ExtElement av = e(4, {1, 3}) + e(4, {2, 4});
  EXPECT_EQ(contraction(dual_form(av), av), ExtElement::scalar(4, 2));
}

TEST(Contraction, Linear) {
  std::mt19937_64 rng(8);
  const auto form = symplectic_standard(3);
  for (int trial = 0; trial < 10; ++trial) {
    const auto x = random_element(rng, 6, 3), y = random_element(rng, 6, 3);
    EXPECT_EQ(contraction(form, x + y), contraction(form, x) + contraction(form, y));
    EXPECT_EQ(contraction(form, Rational(3) * x), Rational(3) * contraction(form, x));
  }
}

TEST(SpProjection, Examples) {
  const ExtElement av = e(4, {1, 3}) + e(4, {2, 4});
  const auto form = dual_form(av);
  EXPECT_TRUE(sp_projection(2, av, form).is_zero());
  const ExtElement v = ExtElement::vector(4, 2);
  EXPECT_EQ(sp_projection(1, v, form), v);
  EXPECT_EQ(sp_projection(2, e(4, {1, 3}), form), e(4, {1, 3}) - Rational(1, 2) * av);
}

TEST(SpProjection, IdempotentAndPrimitive) {
  std::mt19937_64 rng(6);
  const auto form = symplectic_standard(3);
  const ExtElement a = form_bivector(form);
  for (std::size_t i = 2; i <= 3; ++i)
    for (int trial = 0; trial < 5; ++trial) {
      const auto x = random_element(rng, 6, i);
      const auto p = sp_projection(i, x, form);
      EXPECT_TRUE(contraction(form, p).is_zero());
      EXPECT_EQ(sp_projection(i, p, form), p);
      // x - p lies in a ^ Lambda^{i-2}
      const auto diff = x - p;
      if (i == 2) {
        EXPECT_TRUE(proportionality(diff, a) || diff.is_zero());
      }
    }
}

TEST(ModelInvariants, Examples) {
  // SL(5): h_4 = a ^ a is nonzero
  const auto h_sl5 = model_invariants(Family::A, 4);
  ASSERT_EQ(h_sl5.size(), 4u);
  EXPECT_FALSE(h_sl5[3].is_zero());
  EXPECT_EQ(wedge(h_sl5[1], h_sl5[1]), h_sl5[3]);
  // SO(7): h_3 = v ^ a_W
  const ModelSpace so7 = model_space(Family::B, 3);
  const auto h_so7 = model_invariants(so7);
  EXPECT_EQ(h_so7[2], wedge(so7.v, so7.a));
  EXPECT_EQ(wedge(h_so7[0], h_so7[1]), h_so7[2]);
  // Sp(6): h_2 = pi_2(a_{W_1}), primitive
  const ModelSpace sp6 = model_space(Family::C, 3);
  ASSERT_TRUE(sp6.form);
  const auto h_sp6 = model_invariants(sp6);
  EXPECT_EQ(h_sp6[1], sp_projection(2, sp6.a, *sp6.form));
  EXPECT_TRUE(contraction(*sp6.form, h_sp6[1]).is_zero());
  for (const auto& h : h_sp6) EXPECT_FALSE(h.is_zero());
}

TEST(Mod2, Groups) {
  for (auto [f, r] : std::vector<std::pair<Family, std::size_t>>{
           {Family::A, 3}, {Family::A, 4}, {Family::B, 3}, {Family::B, 4}, {Family::C, 3}, {Family::C, 4}}) {
    const auto rec = verify_mod2(f, r);
    EXPECT_TRUE(rec.passed()) << rec.to_json().dump();
    for (const auto& p : rec.witness["products"]) EXPECT_NE(p["scalar"], "0");
  }
  EXPECT_EQ(verify_mod2(Family::B, 3).witness["group"], "SO(7)");
  EXPECT_EQ(verify_mod2(Family::C, 4).witness["group"], "Sp(8)");
  EXPECT_EQ(verify_mod2(Family::A, 4).witness["group"], "SL(5)");
  EXPECT_THROW(verify_mod2(Family::B, 6), ResourceBound);
}

TEST(Sph2, Examples) {
  EXPECT_TRUE(verify_sph2(4, 2).passed());
  EXPECT_TRUE(verify_sph2(5, 3).passed());
  const SphSpace s = sph_space(4, 2);
  EXPECT_TRUE(wedge(s.h1, s.h1).is_zero());
  EXPECT_TRUE(wedge(s.h2, s.h2).is_zero());
  EXPECT_FALSE(wedge(s.h1, s.h2).is_zero());
}
