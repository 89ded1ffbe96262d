#ifndef G2K_SAMPLING_HPP
#define G2K_SAMPLING_HPP

// Seeded generators of test configurations over F_p.

#include <optional>
#include <utility>
#include <vector>

#include "g2k/curve.hpp"
#include "g2k/interpolation.hpp"
#include "g2k/jacobian.hpp"

namespace g2k {

inline CubicForm<PrimeField> random_cubic(const PrimeField& K, Rng& rng) {
  for (;;) {
    std::array<Fp, 5> a{K.random(rng), K.random(rng), K.random(rng), K.random(rng), K.random(rng)};
    if (std::any_of(a.begin(), a.end(), [](const Fp& c) { return !c.is_zero(); })) return CubicForm<PrimeField>(a);
  }
}

/// A random cubic together with its intersection divisor, retried until R splits.
inline std::pair<CubicForm<PrimeField>, WeightedPoints<PrimeField>> random_split_cubic(const CurveGenus2<PrimeField>& C, Rng& rng,
                                                                                       int budget = 100000) {
  for (int i = 0; i < budget; ++i) {
    auto g = random_cubic(C.field(), rng);
    try {
      return {g, intersection_divisor(C, g)};
    } catch (const Error& e) {
      if (e.code() != ErrorCode::NotSplit) throw;
    }
  }
  fail(ErrorCode::SamplingFailed, "no split cubic within budget");
}

/// A random cubic tangent to C at a random non-Weierstrass point p: a random
/// member of the kernel of the two interpolation rows at (p, 2).
inline std::pair<CubicForm<PrimeField>, PointP113<PrimeField>> random_tangent_cubic(const CurveGenus2<PrimeField>& C, Rng& rng) {
  const auto& K = C.field();
  auto p = C.random_generic_point(rng);
  WeightedPoints<PrimeField> xi;
  xi.add(p, 2);
  auto ker = restriction_matrix(C, xi).kernel();
  for (;;) {
    std::array<Fp, 5> a{K.zero(), K.zero(), K.zero(), K.zero(), K.zero()};
    for (const auto& v : ker) {
      auto c = K.random(rng);
      for (std::size_t i = 0; i < 5; ++i) a[i] += c * v[i];
    }
    if (std::any_of(a.begin(), a.end(), [](const Fp& c) { return !c.is_zero(); })) return {CubicForm<PrimeField>(a), p};
  }
}

inline std::vector<PointP113<PrimeField>> random_points(const CurveGenus2<PrimeField>& C, std::size_t n, Rng& rng) {
  std::vector<PointP113<PrimeField>> v;
  for (std::size_t i = 0; i < n; ++i) v.push_back(C.random_point(rng));
  return v;
}

/// A random class of each shape, weighted towards two points.
inline DivisorClass<PrimeField> random_divisor_class(const CurveGenus2<PrimeField>& C, Rng& rng) {
  switch (rng() % 8) {
    case 0: return DivisorClass<PrimeField>::zero();
    case 1: return from_point(C, C.random_point(rng));
    case 2: {
      auto p = C.random_generic_point(rng);
      return from_points(C, p, p);
    }
    default: return from_points(C, C.random_point(rng), C.random_point(rng));
  }
}

}  // namespace g2k

#endif  // G2K_SAMPLING_HPP
