#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "pluck/sl3_case.hpp"

using namespace pluck;

namespace {

QMatrix random3(std::mt19937_64& rng) {
  QMatrix m(3, QVector(3));
  for (auto& row : m)
    for (auto& x : row) x = Rational(static_cast<long>(rng() % 15) - 7);
  return m;
}

QMatrix first_columns(const QMatrix& m, std::size_t r) {
  QMatrix out(3, QVector(r));
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < r; ++j) out[i][j] = m[i][j];
  return out;
}

QMatrix mul(const Matrix3& a, const QMatrix& m) {
  QMatrix out(3, QVector(3, Rational(0)));
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) out[i][j] += a[i][k] * m[k][j];
  return out;
}

QMatrix mul(const QMatrix& m, const Matrix3& a) {
  QMatrix out(3, QVector(3, Rational(0)));
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) out[i][j] += m[i][k] * a[k][j];
  return out;
}

// d/dt at 0 of f(M + t F), where f has degree <= 3 in t: Lagrange on t = 0..3
Rational derivative_at_zero(const MatrixPoly& f, const QMatrix& m, const QMatrix& field) {
  const Rational w[4] = {Rational(-11, 6), Rational(3), Rational(-3, 2), Rational(1, 3)};
  Rational d = 0;
  for (int t = 0; t < 4; ++t) {
    QMatrix p = m;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) p[i][j] += Rational(t) * field[i][j];
    d += w[t] * f.evaluate(p);
  }
  return d;
}

}  // namespace

TEST(Sl3Minors, MatchLeibniz) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 10; ++trial) {
    const QMatrix m = random3(rng);
    for (const auto& rows : std::vector<std::vector<unsigned>>{{1}, {2}, {3}, {1, 2}, {1, 3}, {2, 3}, {1, 2, 3}})
      EXPECT_EQ(minor_d(rows).evaluate(m), oracle::row_minor(first_columns(m, rows.size()), rows));
  }
  EXPECT_EQ(minor_d({1}), MatrixPoly::variable(1, 1));
  EXPECT_EQ(minor_d({1, 2}), MatrixPoly::variable(1, 1) * MatrixPoly::variable(2, 2) -
                                 MatrixPoly::variable(2, 1) * MatrixPoly::variable(1, 2));
  EXPECT_THROW(minor_d({2, 1}), InvalidArgument);
  EXPECT_THROW(minor_d({1, 4}), InvalidArgument);
}

TEST(Sl3Functions, EightAreIndependent) {
  const auto eight = build_p_basis();
  ASSERT_EQ(eight.size(), 8u);
  EXPECT_EQ(eight[0].name, "p(12|1)");
  EXPECT_EQ(eight[0].poly, minor_d({1, 2}) * minor_d({1}));
  EXPECT_EQ(poly_rank(polys_of(eight)), 8u);
  const auto five = restricted_set();
  EXPECT_EQ(poly_rank(polys_of(five)), 5u);
}

TEST(Sl3Functions, VanishOnSchubert) {
  // the three functions outside the restricted set vanish at points of the cell
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 10; ++trial) {
    const QMatrix g = schubert_point(rng);
    for (const auto& f : build_p_basis()) {
      bool kept = false;
      for (const auto& r : restricted_set()) kept = kept || r.name == f.name;
      if (!kept) {
        EXPECT_EQ(f.poly.evaluate(g), 0) << f.name;
      }
    }
  }
}

TEST(Sl3Action, Basics) {
  const auto f = make_p({1, 2}, {1}).poly;
  EXPECT_TRUE(lie_action(diag3(0, 0, 0), f).is_zero());
  // d(12) d(1) has weight 2 eps_1 + eps_2 under the diagonal torus
  const auto h = lie_action(diag3(1, -1, 0), f);
  EXPECT_EQ(h, Rational(-1) * f);
  const auto z = lie_action(diag3(1, 1, -2), f);
  EXPECT_EQ(z, Rational(-3) * f);
  EXPECT_THROW(lie_action(diag3(1, 0, 0), f), InvalidArgument);
}

TEST(Sl3Action, MatchesInterpolation) {
  std::mt19937_64 rng(9);
  for (const auto& xi : sl3_generators())
    for (const auto& f : build_p_basis()) {
      const auto left = lie_action(xi.m, f.poly, Sl3Action::LeftMultiplication);
      const auto conj = lie_action(xi.m, f.poly, Sl3Action::Conjugation);
      for (int t = 0; t < 3; ++t) {
        const QMatrix m = random3(rng);
        QMatrix lf = mul(xi.m, m);
        for (auto& row : lf)
          for (auto& x : row) x = -x;
        EXPECT_EQ(left.evaluate(m), derivative_at_zero(f.poly, m, lf)) << xi.name << " " << f.name;
        QMatrix cf = mul(m, xi.m);
        const QMatrix xm = mul(xi.m, m);
        for (int i = 0; i < 3; ++i)
          for (int j = 0; j < 3; ++j) cf[i][j] -= xm[i][j];
        EXPECT_EQ(conj.evaluate(m), derivative_at_zero(f.poly, m, cf)) << xi.name << " " << f.name;
      }
    }
}

TEST(Sl3Stability, EightSpan) {
  const auto eight = build_p_basis();
  const auto left = stability(eight, sl3_generators(), Sl3Action::LeftMultiplication);
  EXPECT_EQ(left.span_dim, 8u);
  EXPECT_TRUE(left.escapes.empty());
  // conjugation does not preserve the span
  const auto conj = stability(eight, sl3_generators(), Sl3Action::Conjugation);
  EXPECT_FALSE(conj.escapes.empty());
}

TEST(Sl3Stability, FiveSpanIsNotLeviStable) {
  const Json j = check_nonstability();
  EXPECT_EQ(j["spanDim"], 5);
  ASSERT_GE(j["witnesses"].size(), 1u);
  // each witness really leaves the span
  const auto five = restricted_set();
  for (const auto& w : j["witnesses"]) {
    Matrix3 xi{};
    for (const auto& g : levi_generators())
      if (g.name == w["xi"]) xi = g.m;
    MatrixPoly img;
    for (const auto& f : five)
      if (f.name == w["f"]) img = lie_action(xi, f.poly);
    auto ps = polys_of(five);
    ps.push_back(img);
    EXPECT_EQ(poly_rank(ps), 6u) << w.dump();
  }
}

TEST(Sl3Dimensions, DegreeCounts) {
  const auto d1 = sl3_dimensions(1, 0);
  EXPECT_EQ(d1.multiset_sum, 5);
  EXPECT_EQ(d1.demazure, 5);
  EXPECT_EQ(d1.restricted, 5u);
  EXPECT_EQ(d1.ridge_sum, 3);
  const auto d2 = sl3_dimensions(2, 1);
  EXPECT_EQ(d2.multiset_sum, 12);
  EXPECT_EQ(d2.demazure, 12);
  EXPECT_EQ(d2.restricted, 12u);
  EXPECT_EQ(d2.ridge_sum, 5);
}
