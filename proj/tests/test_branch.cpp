#include <gtest/gtest.h>

#include "g2k/branch.hpp"
#include "g2k/sampling.hpp"

using namespace g2k;

namespace {

using K = PrimeField;
const PrimeField F101(101);
const PrimeField F1009(1009);
const PrimeField F10007(10007);
const RationalField QQ;

CurveGenus2<K> curve235(const K& k) { return CurveGenus2<K>(k, k.from_int(2), k.from_int(3), k.from_int(5)); }

P4Point<K> random_alpha(const K& k, Rng& rng) { return {k.random_nonzero(rng), k.random(rng), k.random(rng), k.random(rng), k.random_nonzero(rng)}; }

LineP4<K> random_line(const K& k, Rng& rng) {
  P4Point<K> u, v;
  for (std::size_t i = 0; i < 5; ++i) {
    u[i] = k.random(rng);
    v[i] = k.random(rng);
  }
  return {u, v};
}

}  // namespace

TEST(BranchValue, CubicZIsTransversal) {
  // a0 = 0 for z = 0 itself; perturb a0 inside the chart
  auto C = curve235(F1009);
  EXPECT_THROW(branch_value(C, P4Point<K>{F1009.zero(), F1009.zero(), F1009.zero(), F1009.zero(), F1009.one()}), Error);
  EXPECT_FALSE(is_tangent(C, CubicForm<K>({F1009.zero(), F1009.zero(), F1009.zero(), F1009.zero(), F1009.one()})));
  EXPECT_FALSE(discriminant(C.f_affine()).is_zero());
  // the value at z = 0 is recovered by continuity along a line through it: Discr(f)
  LineP4<K> L{{F1009.one(), F1009.from_int(3), F1009.from_int(5), F1009.from_int(7), F1009.zero()},
              {F1009.zero(), F1009.zero(), F1009.zero(), F1009.zero(), F1009.one()}};
  EXPECT_EQ(restrict_to_line(C, L)(F1009.zero()), discriminant(C.f_affine()));
}

TEST(BranchValue, Errors) {
  auto C = curve235(F1009);
  try {
    branch_value(C, P4Point<K>{F1009.one(), F1009.zero(), F1009.zero(), F1009.zero(), F1009.zero()});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ChartUnsupported);
  }
  try {
    branch_value(C, P4Point<K>{F1009.zero(), F1009.one(), F1009.zero(), F1009.zero(), F1009.one()});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DegreeDrop);
  }
}

TEST(BranchValue, Homogeneity) {
  auto C = curve235(F10007);
  Rng rng(1);
  for (int i = 0; i < 100; ++i) {
    auto a = random_alpha(F10007, rng);
    auto t = F10007.random_nonzero(rng);
    auto ta = a;
    for (auto& c : ta) c *= t;
    EXPECT_EQ(branch_value(C, ta), branch_value(C, a) * t.pow(14));
  }
}

TEST(BranchValue, VanishesExactlyOnTangentCubics) {
  auto C = curve235(F1009);
  Rng rng(2);
  for (int i = 0; i < 200; ++i) {
    auto [g, p] = random_tangent_cubic(C, rng);
    EXPECT_TRUE(is_tangent(C, g));
    if (g[0].is_zero() || g[4].is_zero()) continue;
    EXPECT_TRUE(branch_value(C, g).is_zero());
  }
  int split = 0;
  for (int i = 0; i < 200; ++i) {
    auto [g, div] = random_split_cubic(C, rng);
    if (g[0].is_zero() || g[4].is_zero()) continue;
    EXPECT_EQ(branch_value(C, g).is_zero(), div.max_mult() >= 2);
    EXPECT_EQ(is_tangent(C, g), div.max_mult() >= 2);
    ++split;
  }
  EXPECT_GT(split, 150);
}

TEST(IsTangent, VerticalLines) {
  auto C = curve235(F101);
  // (x - 4y)(x - 6y)(x - 7y): none at a branch abscissa
  auto p = UniPoly<K>::from_roots(F101, std::vector<Fp>{F101.from_int(4), F101.from_int(6), F101.from_int(7)});
  CubicForm<K> three({p.coeff(3), p.coeff(2), p.coeff(1), p.coeff(0), F101.zero()});
  EXPECT_FALSE(is_tangent(C, three));
  // x (x - 4y)(x - 6y): through the Weierstrass point [0:1:0]
  auto q = UniPoly<K>::from_roots(F101, std::vector<Fp>{F101.zero(), F101.from_int(4), F101.from_int(6)});
  EXPECT_TRUE(is_tangent(C, CubicForm<K>({q.coeff(3), q.coeff(2), q.coeff(1), q.coeff(0), F101.zero()})));
  // a doubled line
  auto r = UniPoly<K>::from_roots(F101, std::vector<Fp>{F101.from_int(4), F101.from_int(4), F101.from_int(6)});
  EXPECT_TRUE(is_tangent(C, CubicForm<K>({r.coeff(3), r.coeff(2), r.coeff(1), r.coeff(0), F101.zero()})));
}

TEST(RestrictToLine, DegreeFourteen) {
  auto C = curve235(F10007);
  Rng rng(3);
  for (int i = 0; i < 50; ++i) {
    auto L = random_line(F10007, rng);
    EXPECT_EQ(restrict_to_line(C, L).degree(), 14);
  }
}

TEST(RestrictToLine, Reparametrisation) {
  auto C = curve235(F10007);
  Rng rng(4);
  const Fp two = F10007.from_int(2);
  for (int i = 0; i < 10; ++i) {
    auto L = random_line(F10007, rng);
    // t -> 2t + 1 on the same line
    LineP4<K> M = L;
    for (std::size_t k = 0; k < 5; ++k) {
      M.u[k] = two * L.u[k];
      M.v[k] = L.u[k] + L.v[k];
    }
    auto r = restrict_to_line(C, L), s = restrict_to_line(C, M);
    auto shift = UniPoly<K>(F10007, {F10007.one(), two});
    EXPECT_EQ(s, r.compose(shift));
  }
}

TEST(RestrictToLine, RejectsLineInA4Hyperplane) {
  auto C = curve235(F10007);
  Rng rng(5);
  auto L = random_line(F10007, rng);
  L.u[4] = L.v[4] = F10007.zero();
  try {
    restrict_to_line(C, L);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ChartUnsupported);
  }
  auto M = random_line(F10007, rng);
  M.u[0] = M.v[0] = F10007.zero();
  try {
    restrict_to_line(C, M);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::TooManyDegeneratePoints);
  }
}

TEST(Pencil, TenPlusFourOverQ) {
  CurveGenus2<RationalField> C(QQ, 2, 3, 5);
  auto r = pencil_branch_degree(C);
  EXPECT_EQ(r.centre, 4);
  EXPECT_EQ(r.affine_degree, 10);
  EXPECT_EQ(r.infinity_mult, 4);
  EXPECT_EQ(r.total(), 14);
  EXPECT_EQ(r.centre0_affine, 8);
  EXPECT_EQ(r.centre0_infinity, 6);
}

TEST(Pencil, SameOverPrimeFieldAndPermutedLambdas) {
  auto r = pencil_branch_degree(curve235(F10007));
  EXPECT_EQ(r.affine_degree, 10);
  EXPECT_EQ(r.infinity_mult, 4);
  CurveGenus2<K> C(F10007, F10007.from_int(5), F10007.from_int(2), F10007.from_int(3));
  auto s = pencil_branch_degree(C);
  EXPECT_EQ(s.affine_degree, 10);
  EXPECT_EQ(s.infinity_mult, 4);
  // a curve with 4 as a branch abscissa moves the centre
  CurveGenus2<K> D(F10007, F10007.from_int(4), F10007.from_int(7), F10007.from_int(9));
  auto t = pencil_branch_degree(D);
  EXPECT_EQ(t.centre, 5);
  EXPECT_EQ(t.total(), 14);
}

TEST(ParallelMap, DeterministicOrder) {
  auto sq = [](std::size_t i) { return static_cast<long>(i * i); };
  auto a = parallel_map<long>(1000, sq, 1), b = parallel_map<long>(1000, sq, 7);
  EXPECT_EQ(a, b);
  EXPECT_EQ(a[999], 998001);
  EXPECT_THROW(parallel_map<long>(100, [](std::size_t i) -> long { if (i == 50) fail(ErrorCode::InvalidArgument, "x"); return 0; }, 4), Error);
}

TEST(FullBranchPoly, SmallFieldGrid) {
  auto C = curve235(F1009);
  auto B = full_branch_poly(C);
  EXPECT_TRUE(B.is_homogeneous());
  EXPECT_EQ(B.total_degree(), 14);
  EXPECT_LE(B.size(), 3060u);
  Rng rng(6);
  for (int i = 0; i < 100; ++i) {
    auto a = random_alpha(F1009, rng);
    EXPECT_EQ(B.eval({a[0], a[1], a[2], a[3], a[4]}), branch_value(C, a));
  }
  for (int i = 0; i < 50; ++i) {
    auto [g, p] = random_tangent_cubic(C, rng);
    const auto& a = g.alpha();
    EXPECT_TRUE(B.eval({a[0], a[1], a[2], a[3], a[4]}).is_zero());
  }
}
