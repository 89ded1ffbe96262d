#include <gtest/gtest.h>

#include <algorithm>

#include "g2k/charts.hpp"

using namespace g2k;

namespace {

using K = PrimeField;
const PrimeField F101(101);
const PrimeField F1009(1009);
const RationalField QQ;

std::array<Fp, 3> distinct_x(const K& k, Rng& rng) {
  std::array<Fp, 3> x{k.random(rng), k.random(rng), k.random(rng)};
  while (x[1] == x[0]) x[1] = k.random(rng);
  while (x[2] == x[0] || x[2] == x[1]) x[2] = k.random(rng);
  return x;
}

}  // namespace

TEST(Viete, SmallCases) {
  auto z = viete_e(QQ.zero(), QQ.zero(), QQ.zero());
  EXPECT_TRUE(z[0].is_zero() && z[1].is_zero() && z[2].is_zero());
  auto e = viete_e(Rational(1), Rational(2), Rational(3));
  EXPECT_EQ(e[0], Rational(6));
  EXPECT_EQ(e[1], Rational(11));
  EXPECT_EQ(e[2], Rational(6));
}

TEST(Viete, ExpandsTheProduct) {
  // prod (t - xi) over Q[x1,x2,x3,t] against t^3 - e1 t^2 + e2 t - e3
  auto v = [](std::size_t i) { return QPoly::variable(QQ, 4, i); };
  auto e = viete_e(v(0), v(1), v(2));
  auto t = v(3);
  auto lhs = (t - v(0)) * (t - v(1)) * (t - v(2));
  EXPECT_EQ(lhs, t * t * t - e[0] * t * t + e[1] * t - e[2]);
  auto f = viete_e(v(2), v(0), v(1));
  EXPECT_EQ(e[1], f[1]);
  EXPECT_EQ(e[2], f[2]);
}

TEST(CramerA, ExamplesAndResidual) {
  std::array<Fp, 3> x{F101.from_int(1), F101.from_int(4), F101.from_int(9)};
  std::array<Fp, 3> line, square;
  for (std::size_t i = 0; i < 3; ++i) {
    line[i] = F101.from_int(7) * x[i] + F101.from_int(2);
    square[i] = x[i] * x[i];
  }
  auto a = cramer_a(F101, x, line);
  EXPECT_EQ(a[0], F101.from_int(2));
  EXPECT_EQ(a[1], F101.from_int(7));
  EXPECT_TRUE(a[2].is_zero());
  auto s = cramer_a(F101, x, square);
  EXPECT_TRUE(s[0].is_zero() && s[1].is_zero());
  EXPECT_EQ(s[2], F101.one());

  Rng rng(1);
  for (int i = 0; i < 100; ++i) {
    auto xs = distinct_x(F101, rng);
    std::array<Fp, 3> ys{F101.random(rng), F101.random(rng), F101.random(rng)};
    auto c = cramer_a(F101, xs, ys);
    for (std::size_t k = 0; k < 3; ++k) EXPECT_EQ(c[0] + c[1] * xs[k] + c[2] * xs[k] * xs[k], ys[k]);
    // equivariance
    std::array<std::size_t, 3> perm{2, 0, 1};
    std::array<Fp, 3> px, py;
    for (std::size_t k = 0; k < 3; ++k) {
      px[k] = xs[perm[k]];
      py[k] = ys[perm[k]];
    }
    auto d = cramer_a(F101, px, py);
    EXPECT_EQ(c[0], d[0]);
    EXPECT_EQ(c[1], d[1]);
    EXPECT_EQ(c[2], d[2]);
  }
}

TEST(CramerA, VandermondeZero) {
  std::array<Fp, 3> x{F101.one(), F101.one(), F101.from_int(3)}, y{F101.one(), F101.from_int(2), F101.from_int(3)};
  try {
    cramer_a(F101, x, y);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::VandermondeZero);
  }
}

TEST(Chart21, NumericRelationsAndResidual) {
  Rng rng(2);
  int checked = 0;
  for (int i = 0; i < 200; ++i) {
    std::array<Fp, 3> x{F1009.random(rng), F1009.random(rng), F1009.random(rng)};
    std::array<Fp, 3> y{F1009.random(rng), F1009.random(rng), F1009.random(rng)};
    Chart21Coords<Fp> c;
    try {
      c = cramer_chart21(F1009, x, y);
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::DenominatorZero);
      continue;
    }
    ++checked;
    EXPECT_TRUE(chart21_relations_hold(c));
    // the three generators vanish at each point
    for (std::size_t k = 0; k < 3; ++k) {
      EXPECT_EQ(x[k] * x[k], c.a0 + c.a1 * x[k] + c.a2 * y[k]);
      EXPECT_EQ(x[k] * y[k], c.b0 + c.b1 * x[k] + c.b2 * y[k]);
      EXPECT_EQ(y[k] * y[k], c.c0 + c.c1 * x[k] + c.c2 * y[k]);
    }
  }
  EXPECT_GT(checked, 190);
  // the point Z_inf of the chart
  Chart21Coords<Fp> zero{F1009.zero(), F1009.zero(), F1009.zero(), F1009.zero(), F1009.zero(),
                         F1009.zero(), F1009.zero(), F1009.zero(), F1009.zero()};
  EXPECT_TRUE(chart21_relations_hold(zero));
}

TEST(Chart21, CollinearPointsRejected) {
  std::array<Fp, 3> x{F101.from_int(1), F101.from_int(2), F101.from_int(3)};
  try {
    cramer_chart21(F101, x, x);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DenominatorZero);
  }
}

TEST(Chart21, SymbolicRelations) { EXPECT_NO_THROW(verify_chart21_relations()); }

TEST(Kummer111, SymbolicAndNumeric) {
  EXPECT_NO_THROW(verify_kummer_111_symbolic());
  Rng rng(3);
  for (int i = 0; i < 100; ++i) {
    std::array<Fp, 3> x;
    do {
      x[0] = F1009.random(rng);
      x[1] = F1009.random(rng);
      x[2] = -x[0] - x[1];
    } while (x[0] == x[1] || x[0] == x[2] || x[1] == x[2]);
    std::array<Fp, 3> y{F1009.random(rng), F1009.random(rng), F1009.zero()};
    y[2] = -y[0] - y[1];
    EXPECT_TRUE(kummer_111_membership(F1009, chart111_coords(F1009, x, y)));
    // sum of y shifted by 1: 3 a0 - 2 a2 e2 = y1 + y2 + y3
    y[2] += F1009.one();
    EXPECT_FALSE(kummer_111_membership(F1009, chart111_coords(F1009, x, y)));
  }
  Chart111Coords<Fp> zero{F1009.zero(), F1009.zero(), F1009.zero(), F1009.zero(), F1009.zero(), F1009.zero()};
  EXPECT_TRUE(kummer_111_membership(F1009, zero));
  auto e1 = zero;
  e1.e1 = F1009.one();
  EXPECT_FALSE(kummer_111_membership(F1009, e1));
}

TEST(TildeA, ClosedFormsAndPole) {
  auto r = verify_tilde_a();
  EXPECT_EQ(r.a1_order_x1, 0);
  EXPECT_EQ(r.a2_order_x1, -1);
  EXPECT_EQ(r.locus_G, "w1*w2^2*(w1-w2)");
}

TEST(TildeA, ModelPointsNumerically) {
  // a point of the model over Q: pick x1, x2, w1, z3 and solve w2 = -x1 w1 / x2
  using L = LocalTriple;
  auto a = model_cramer_a();
  auto t1 = tilde_a1_closed(), t2 = tilde_a2_closed();
  Rng rng(4);
  auto small = [&] { return Rational(static_cast<long>(rng() % 19) - 9); };
  int used = 0;
  for (int i = 0; i < 200 && used < 100; ++i) {
    Rational x1 = small(), x2 = small(), w1 = small(), z3 = small();
    if (x2.is_zero()) continue;
    Rational w2 = -x1 * w1 / x2;
    std::vector<Rational> pt(L::arity);
    pt[L::X1] = x1, pt[L::X2] = x2, pt[L::W1] = w1, pt[L::W2] = w2, pt[L::Z3] = z3;
    auto V = a[1].den.eval(pt), D1 = t1.den.eval(pt), D2 = t2.den.eval(pt);
    if (V.is_zero() || D1.is_zero() || D2.is_zero()) continue;
    EXPECT_EQ(a[1].num.eval(pt) / V, t1.num.eval(pt) / D1);
    EXPECT_EQ(a[2].num.eval(pt) / V, t2.num.eval(pt) / D2);
    ++used;
  }
  EXPECT_GT(used, 50);
}

TEST(ContractionF1, AllNineVanish) {
  auto r = verify_contraction_F1();
  for (std::size_t i = 0; i < 9; ++i) EXPECT_GE(r.numerator_order_x1[i], 1) << chart21_names()[i];
  // the constant coordinates vanish to order 2
  EXPECT_EQ(r.numerator_order_x1[0], 2);
  EXPECT_EQ(r.numerator_order_x1[3], 2);
  EXPECT_EQ(r.numerator_order_x1[6], 2);
}

TEST(ContractionF1, NumericAtSamplePoints) {
  using L = LocalTriple;
  auto parts = chart21_parts(L::xs(), L::ys(), L::constant(1));
  Rng rng(5);
  auto small = [&] { return Rational(static_cast<long>(rng() % 23) - 11); };
  for (std::size_t k = 0; k < 9; ++k) {
    auto f = detail::strip_x1(L::on_chart_w2(QFrac{parts.num[k], parts.den}));
    for (int i = 0; i < 100; ++i) {
      std::vector<Rational> pt{Rational(0), Rational(0), small(), small(), small()};
      EXPECT_TRUE(f.num.eval(pt).is_zero());
    }
  }
}

TEST(F2Fragment, E3AndA2Vanish) { EXPECT_NO_THROW(verify_f2_fragment()); }

TEST(Identity, FailureCarriesWitness) {
  // a deliberately wrong closed form is caught
  using L = LocalTriple;
  auto a = model_cramer_a();
  auto wrong = tilde_a1_closed();
  wrong.num += wrong.den * L::var(L::W1);
  try {
    detail::require_same(L::on_chart_w2(a[1]), L::on_chart_w2(wrong), "a1~");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::IdentityFailed);
    EXPECT_NE(std::string(e.what()).find("witness"), std::string::npos);
  }
}
