#include <gtest/gtest.h>

#include "g2k/interpolation.hpp"
#include "g2k/jacobian.hpp"
#include "g2k/sampling.hpp"

using namespace g2k;

namespace {

using K = PrimeField;
using WP = WeightedPoints<K>;

const PrimeField F101(101);
const PrimeField F1009(1009);
const RationalField QQ;

CurveGenus2<K> curve235(const K& k) { return CurveGenus2<K>(k, k.from_int(2), k.from_int(3), k.from_int(5)); }

CubicForm<K> cubic(const K& k, std::array<long, 5> a) {
  return CubicForm<K>({k.from_int(a[0]), k.from_int(a[1]), k.from_int(a[2]), k.from_int(a[3]), k.from_int(a[4])});
}

// A point with x-coordinate different from every entry of `avoid`.
PointP113<K> fresh_point(const CurveGenus2<K>& C, Rng& rng, const std::vector<PointP113<K>>& avoid) {
  for (;;) {
    auto p = C.random_generic_point(rng);
    bool ok = true;
    for (const auto& q : avoid) ok = ok && q.x() != p.x();
    if (ok) return p;
  }
}

bool aj_zero(const CurveGenus2<K>& C, const WP& pts) { return aj_sum_mumford(C, pts).is_identity(); }

}  // namespace

TEST(Restriction, RowShapes) {
  auto C = curve235(F101);
  Rng rng(1);
  auto pts = random_points(C, 6, rng);
  auto M = restriction_matrix(C, WP(pts));
  EXPECT_EQ(M.cols(), 5u);
  EXPECT_EQ(M.rows(), WP(pts).size());
  auto inf = restriction_matrix(C, WP{C.infinity()});
  EXPECT_EQ(inf.row(0), (std::vector<Fp>{F101.one(), F101.zero(), F101.zero(), F101.zero(), F101.zero()}));
}

TEST(Restriction, Errors) {
  auto C = curve235(F101);
  WP off{C.affine_point(F101.from_int(4), F101.one())};
  try {
    restriction_matrix(C, off);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotOnCurve);
  }
  WP triple;
  triple.add(C.infinity(), 3);
  try {
    restriction_matrix(C, triple);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::MultiplicityUnsupported);
  }
}

TEST(Restriction, WeierstrassTangencyForcesVerticalLines) {
  auto C = curve235(F101);
  for (const auto& w : C.weierstrass_points()) {
    WP xi;
    xi.add(w, 2);
    auto ker = restriction_matrix(C, xi).kernel();
    ASSERT_EQ(ker.size(), 3u);
    for (const auto& v : ker) EXPECT_TRUE(v[4].is_zero());
  }
}

TEST(Restriction, TangencyRowVanishesOnTangentCubics) {
  // independent construction: p(x) = -(b + z'(a)(x - a)) is the tangent line, so
  // R = f - p^2 has a double root at a
  auto C = curve235(F1009);
  Rng rng(5);
  for (int i = 0; i < 100; ++i) {
    auto P = C.random_generic_point(rng);
    auto a = P.x(), b = P.z();
    auto s = C.f_affine().derivative()(a) / (F1009.from_int(2) * b);
    auto g = CubicForm<K>({F1009.zero(), F1009.zero(), s, b - s * a, -F1009.one()});
    WP xi;
    xi.add(P, 2);
    auto r = restriction_matrix(C, xi).apply(std::vector<Fp>(g.alpha().begin(), g.alpha().end()));
    EXPECT_TRUE(r[0].is_zero());
    EXPECT_TRUE(r[1].is_zero());
    EXPECT_GE(ord_at(g.resultant_poly(C), a), 2);
  }
}

TEST(CubicThroughSix, WeierstrassPointsGiveZ) {
  auto C = curve235(F101);
  auto g = cubic_through_six(C, WP(C.weierstrass_points()));
  ASSERT_TRUE(g.has_value());
  EXPECT_EQ(*g, cubic(F101, {0, 0, 0, 0, 1}));
}

TEST(CubicThroughSix, SigmaPairsGiveVerticalLines) {
  auto C = curve235(F1009);
  Rng rng(2);
  for (int i = 0; i < 50; ++i) {
    auto p = fresh_point(C, rng, {});
    auto q = fresh_point(C, rng, {p});
    auto r = fresh_point(C, rng, {p, q});
    auto g = cubic_through_six(C, WP{p, C.sigma(p), q, C.sigma(q), r, C.sigma(r)});
    ASSERT_TRUE(g.has_value());
    EXPECT_TRUE((*g)[4].is_zero());
    // the binary cubic vanishes at the three abscissae
    auto bin = g->p_affine(F1009);
    EXPECT_TRUE(bin(p.x()).is_zero() && bin(q.x()).is_zero() && bin(r.x()).is_zero());
  }
}

TEST(CubicThroughSix, RoundTripFromRandomCubics) {
  auto C = curve235(F1009);
  Rng rng(3);
  for (int i = 0; i < 300; ++i) {
    auto [g, div] = random_split_cubic(C, rng);
    EXPECT_EQ(div.total(), 6u);
    if (div.max_mult() > 2) continue;
    auto back = cubic_through_six(C, div);
    ASSERT_TRUE(back.has_value()) << g.to_string();
    EXPECT_EQ(*back, g);
    EXPECT_EQ(intersection_divisor(C, *back), div);
  }
}

TEST(CubicThroughSix, ExistsIffAbelJacobiVanishes) {
  auto C = curve235(F1009);
  Rng rng(4);
  int some = 0, none = 0;
  for (int i = 0; i < 400; ++i) {
    WP xi;
    if (i % 2 == 0) {
      xi = random_split_cubic(C, rng).second;
      if (xi.max_mult() > 2) continue;
    } else {
      xi = WP(random_points(C, 6, rng));
      if (xi.max_mult() > 2) continue;
    }
    auto M = restriction_matrix(C, xi);
    const auto rank = M.rank();
    EXPECT_TRUE(rank == 4 || rank == 5);
    auto g = cubic_through_six(C, xi);
    EXPECT_EQ(g.has_value(), aj_zero(C, xi)) << xi.to_string();
    (g ? some : none)++;
  }
  EXPECT_GT(some, 100);
  EXPECT_GT(none, 100);
}

TEST(CompleteFour, TwoSigmaPairsGiveAPencil) {
  auto C = curve235(F1009);
  Rng rng(6);
  for (int i = 0; i < 50; ++i) {
    auto p = fresh_point(C, rng, {});
    auto q = fresh_point(C, rng, {p});
    auto c = complete_four(C, WP{p, C.sigma(p), q, C.sigma(q)});
    ASSERT_TRUE(std::holds_alternative<PencilCompletion<K>>(c));
    auto& pen = std::get<PencilCompletion<K>>(c);
    EXPECT_NE(pen.first, pen.second);
  }
}

TEST(CompleteFour, GenericQuadrupleHasUniqueCompletion) {
  auto C = curve235(F1009);
  Rng rng(7);
  int checked = 0;
  for (int i = 0; i < 200 && checked < 60; ++i) {
    WP xi(random_points(C, 4, rng));
    if (i % 2) {
      auto p = fresh_point(C, rng, {});
      auto q = fresh_point(C, rng, {p});
      auto r = fresh_point(C, rng, {p, q, C.sigma(q)});
      xi = WP{p, C.sigma(p), q, r};
    }
    if (xi.max_mult() > 2) continue;
    try {
      auto c = complete_four(C, xi);
      ASSERT_TRUE(std::holds_alternative<UniqueCompletion<K>>(c));
      auto& u = std::get<UniqueCompletion<K>>(c);
      EXPECT_EQ(u.residual.total(), 2u);
      WP all = xi;
      for (const auto& w : u.residual.items()) all.add(w.point, w.mult);
      EXPECT_TRUE(aj_zero(C, all));
      ++checked;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::NotSplit);
    }
  }
  EXPECT_GE(checked, 30);
}

TEST(Conic, ThroughTwoSigmaPairs) {
  auto C = curve235(F1009);
  Rng rng(8);
  auto p = fresh_point(C, rng, {});
  auto q = fresh_point(C, rng, {p});
  auto k = conic_through(C, WP{p, C.sigma(p), q, C.sigma(q)});
  ASSERT_TRUE(k.has_value());
  // (x - a y)(x - c y) = x^2 - (a + c) xy + ac y^2
  EXPECT_EQ(k->beta(), (std::array<Fp, 3>{F1009.one(), -(p.x() + q.x()), p.x() * q.x()}));
  auto r = fresh_point(C, rng, {p, q});
  EXPECT_FALSE(conic_through(C, WP{p, C.sigma(p), q, r}).has_value());
}

TEST(Conic, FourConditionsAgree) {
  auto C = curve235(F1009);
  Rng rng(9);
  int pairs = 0;
  for (int i = 0; i < 300; ++i) {
    WP xi;
    if (i % 3 == 0) {
      auto p = C.random_point(rng), q = C.random_point(rng);
      xi = WP{p, C.sigma(p), q, C.sigma(q)};
    } else {
      xi = WP(random_points(C, 4, rng));
    }
    if (xi.max_mult() > 2) continue;
    // sigma-pair structure by direct matching on the expanded list
    auto v = xi.expanded();
    bool paired = false;
    for (int j = 1; j < 4 && !paired; ++j) {
      std::vector<int> rest;
      for (int k = 1; k < 4; ++k)
        if (k != j) rest.push_back(k);
      paired = v[static_cast<std::size_t>(j)] == C.sigma(v[0]) && v[static_cast<std::size_t>(rest[1])] == C.sigma(v[static_cast<std::size_t>(rest[0])]);
    }
    const bool conic = conic_through(C, xi).has_value();
    const bool pencil = restriction_matrix(C, xi).kernel().size() == 2;
    const bool aj = aj_zero(C, xi);
    EXPECT_EQ(paired, conic) << xi.to_string();
    EXPECT_EQ(conic, pencil) << xi.to_string();
    EXPECT_EQ(pencil, aj) << xi.to_string();
    pairs += paired;
  }
  EXPECT_GT(pairs, 50);
}

TEST(IntersectionDivisor, CubicZ) {
  auto C = curve235(F101);
  auto div = intersection_divisor(C, cubic(F101, {0, 0, 0, 0, 1}));
  EXPECT_EQ(div, WP(C.weierstrass_points()));
  EXPECT_EQ(div.max_mult(), 1u);
}

TEST(IntersectionDivisor, CubedBranchLine) {
  auto C = curve235(F101);
  auto div = intersection_divisor(C, cubic(F101, {1, 0, 0, 0, 0}));
  WP want;
  want.add(C.affine_point(F101.zero(), F101.zero()), 6);
  EXPECT_EQ(div, want);
}

TEST(IntersectionDivisor, CubedLineAtNonBranchAbscissa) {
  // (x - 4y)^3: f(4) = -24 is a square mod 101, two points of multiplicity 3
  auto C = curve235(F101);
  auto div = intersection_divisor(C, cubic(F101, {1, -12, 48, -64, 0}));
  ASSERT_EQ(div.size(), 2u);
  for (const auto& w : div.items()) {
    EXPECT_EQ(w.mult, 3u);
    EXPECT_EQ(w.point.x(), F101.from_int(4));
  }
}

TEST(IntersectionDivisor, InfinityBookkeeping) {
  auto C = curve235(F1009);
  Rng rng(10);
  int through_inf = 0;
  for (int i = 0; i < 300; ++i) {
    auto [g, div] = random_split_cubic(C, rng);
    EXPECT_EQ(div.total(), 6u);
    EXPECT_EQ(div.multiplicity(C.infinity()) > 0, g[0].is_zero());
    if (!g[4].is_zero()) {
      EXPECT_EQ(div.multiplicity(C.infinity()), static_cast<unsigned>(6 - g.resultant_poly(C).degree()));
    }
    for (const auto& w : div.items()) EXPECT_TRUE(g.eval(w.point).is_zero());
    through_inf += g[0].is_zero();
  }
  // force a few through infinity
  for (int i = 0; i < 50; ++i) {
    auto g = cubic(F1009, {0, static_cast<long>(rng() % 1009), static_cast<long>(rng() % 1009), 7, 1});
    try {
      auto div = intersection_divisor(C, g);
      EXPECT_EQ(div.multiplicity(C.infinity()), 1u);
      EXPECT_TRUE(aj_zero(C, div));
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::NotSplit);
    }
  }
}

TEST(IntersectionDivisor, MumfordLemma) {
  auto C = curve235(F1009);
  Rng rng(11);
  for (int i = 0; i < 200; ++i) EXPECT_TRUE(aj_zero(C, random_split_cubic(C, rng).second));
}

TEST(IntersectionDivisor, OverRationals) {
  const RationalField Q;
  CurveGenus2<RationalField> C(Q, 2, 3, 5);
  // z = x^3 - 11 x^2 + ... has R = f - p^2; pick p with known split: p = 0 -> R = f
  CubicForm<RationalField> z({Rational(0), Rational(0), Rational(0), Rational(0), Rational(1)});
  auto div = intersection_divisor(C, z);
  EXPECT_EQ(div.total(), 6u);
  EXPECT_EQ(div.size(), 6u);
  // x (x - y)(x - 2y) = x^3 - 3x^2 y + 2 x y^2 meets C at three branch points doubly
  CubicForm<RationalField> lines({Rational(1), Rational(-3), Rational(2), Rational(0), Rational(0)});
  auto d2 = intersection_divisor(C, lines);
  EXPECT_EQ(d2.size(), 3u);
  EXPECT_EQ(d2.max_mult(), 2u);
  // x (x - 4y)(x - 9y): f(4) = -24 is not a rational square
  CubicForm<RationalField> bad({Rational(1), Rational(-13), Rational(36), Rational(0), Rational(0)});
  try {
    intersection_divisor(C, bad);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotSplit);
  }
}

TEST(IntersectionDivisor, ZeroCubicRejected) {
  try {
    cubic(F101, {0, 0, 0, 0, 0});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ZeroCubic);
  }
}

TEST(IntersectionMultiplicity, TransversalTangentTriple) {
  auto C = curve235(F1009);
  Rng rng(12);
  const Fp two = F1009.from_int(2);
  for (int i = 0; i < 100; ++i) {
    auto P = C.random_generic_point(rng);
    auto a = P.x(), b = P.z();
    auto fp = C.f_affine().derivative(), fpp = fp.derivative();
    auto z1 = fp(a) / (two * b);
    auto z2 = (fpp(a) - two * z1 * z1) / (two * b);
    // osculating parabola z = b + z1 (x - a) + z2/2 (x - a)^2, cubic p + z4 z with p = -(parabola)
    auto h = z2 / two;
    auto c2 = h, c1 = z1 - two * h * a, c0 = b - z1 * a + h * a * a;
    CubicForm<K> g({F1009.zero(), c2, c1, c0, -F1009.one()});
    EXPECT_GE(intersection_multiplicity(C, g, P), 3);

    auto [t, tp] = random_tangent_cubic(C, rng);
    EXPECT_GE(intersection_multiplicity(C, t, tp), 2);
  }
  // transversal: random split cubic with six distinct affine points
  int seen = 0;
  while (seen < 20) {
    auto [g, div] = random_split_cubic(C, rng);
    if (div.max_mult() != 1 || g[4].is_zero() || g[0].is_zero()) continue;
    for (const auto& w : div.items()) EXPECT_EQ(intersection_multiplicity(C, g, w.point), 1);
    ++seen;
  }
}

TEST(IntersectionMultiplicity, UnsupportedCharts) {
  auto C = curve235(F101);
  auto lines = cubic(F101, {1, 0, 0, 0, 0});
  try {
    intersection_multiplicity(C, lines, C.affine_point(F101.zero(), F101.zero()));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::UnsupportedChart);
  }
  EXPECT_THROW(intersection_multiplicity(C, cubic(F101, {0, 0, 0, 0, 1}), C.infinity()), Error);
}
