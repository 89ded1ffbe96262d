#ifndef G2K_CURVE_HPP
#define G2K_CURVE_HPP

// The genus-2 curve z^2 = f(x,y) in the weighted projective plane P(1,1,3),
//   f = x y (x - y)(x - l1 y)(x - l2 y)(x - l3 y),
// with branch points [0:1], [1:1], [l_i:1] and infinity = [1:0:0].

#include <array>
#include <compare>
#include <string>
#include <utility>
#include <vector>

#include "g2k/errors.hpp"
#include "g2k/field.hpp"
#include "g2k/multipoly.hpp"
#include "g2k/unipoly.hpp"

namespace g2k {

/// A point [x:y:z] of P(1,1,3), kept in canonical form: y = 1 when y != 0,
/// otherwise x = 1. Weighted scaling is [tx:ty:t^3 z].
template <FieldDescriptor F>
class PointP113 {
 public:
  using E = elem_t<F>;

  PointP113(const F& K, E x, E y, E z) : x_(std::move(x)), y_(std::move(y)), z_(std::move(z)) {
    if (x_.is_zero() && y_.is_zero()) fail(ErrorCode::InvalidArgument, "[0:0:z] is not a point of P(1,1,3)");
    const E& lead = y_.is_zero() ? x_ : y_;
    if (!lead.is_one()) {
      E t = K.one() / lead;
      x_ *= t;
      y_ *= t;
      z_ *= t * t * t;
    }
  }

  /// Affine point [a:1:b].
  static PointP113 affine(const F& K, E a, E b) { return PointP113(K, std::move(a), K.one(), std::move(b)); }
  static PointP113 infinity(const F& K) { return PointP113(K, K.one(), K.zero(), K.zero()); }

  const E& x() const { return x_; }
  const E& y() const { return y_; }
  const E& z() const { return z_; }

  bool is_affine() const { return !y_.is_zero(); }
  bool is_infinity() const { return y_.is_zero() && z_.is_zero(); }

  PointP113 with_z(E z) const {
    PointP113 p = *this;
    p.z_ = std::move(z);
    return p;
  }

  friend bool operator==(const PointP113& a, const PointP113& b) = default;
  /// Lexicographic order on canonical coordinates (y, x, z): affine points first.
  friend std::strong_ordering operator<=>(const PointP113& a, const PointP113& b) {
    if (auto c = b.y_ <=> a.y_; c != 0) return c;
    if (auto c = a.x_ <=> b.x_; c != 0) return c;
    return a.z_ <=> b.z_;
  }

  std::string to_string() const {
    return "[" + g2k::to_string(x_) + ":" + g2k::to_string(y_) + ":" + g2k::to_string(z_) + "]";
  }

 private:
  E x_, y_, z_;
};

template <FieldDescriptor F>
class CurveGenus2 {
 public:
  using E = elem_t<F>;
  using Point = PointP113<F>;

  /// Rejects lambdas that collide with each other or with the branch points 0, 1.
  CurveGenus2(F field, E l1, E l2, E l3)
      : field_(std::move(field)), lambdas_{std::move(l1), std::move(l2), std::move(l3)}, f_affine_(field_), f_hom_(field_, 2) {
    const E zero = field_.zero(), one = field_.one();
    for (std::size_t i = 0; i < 3; ++i) {
      if (lambdas_[i] == zero || lambdas_[i] == one)
        fail(ErrorCode::DuplicateBranchPoint, "lambda_" + std::to_string(i + 1) + " = " + g2k::to_string(lambdas_[i]) + " collides with a fixed branch point");
      for (std::size_t j = 0; j < i; ++j)
        if (lambdas_[i] == lambdas_[j]) fail(ErrorCode::DuplicateBranchPoint, "repeated lambda " + g2k::to_string(lambdas_[i]));
    }
    std::array<E, 5> rs{zero, one, lambdas_[0], lambdas_[1], lambdas_[2]};
    f_affine_ = UniPoly<F>::from_roots(field_, std::span<const E>(rs));
    auto X = MultiPoly<F>::variable(field_, 2, 0), Y = MultiPoly<F>::variable(field_, 2, 1);
    f_hom_ = Y;
    for (const auto& r : rs) f_hom_ *= X - Y * r;
    if (discriminant(f_affine_).is_zero()) fail(ErrorCode::DuplicateBranchPoint, "f is not squarefree");
  }

  const F& field() const { return field_; }
  const std::array<E, 3>& lambdas() const { return lambdas_; }
  /// x (x - 1)(x - l1)(x - l2)(x - l3): the curve in the chart y = 1.
  const UniPoly<F>& f_affine() const { return f_affine_; }
  /// The sextic in (x, y).
  const MultiPoly<F>& f_hom() const { return f_hom_; }

  /// Affine branch abscissae 0, 1, l1, l2, l3 (the sixth branch point is [1:0]).
  std::vector<E> branch_abscissae() const { return {field_.zero(), field_.one(), lambdas_[0], lambdas_[1], lambdas_[2]}; }

  bool is_branch_abscissa(const E& a) const {
    for (const auto& b : branch_abscissae())
      if (a == b) return true;
    return false;
  }

  E f_at(const E& x, const E& y) const { return f_hom_.eval({x, y}); }

  Point point(E x, E y, E z) const { return Point(field_, std::move(x), std::move(y), std::move(z)); }
  Point affine_point(E a, E b) const { return Point::affine(field_, std::move(a), std::move(b)); }
  Point infinity() const { return Point::infinity(field_); }

  bool on_curve(const Point& p) const { return p.z() * p.z() == f_at(p.x(), p.y()); }
  bool is_weierstrass(const Point& p) const { return on_curve(p) && p.z().is_zero(); }

  void require_on_curve(const Point& p) const {
    if (!on_curve(p)) fail(ErrorCode::NotOnCurve, p.to_string() + " is not on the curve");
  }

  /// Hyperelliptic involution [x:y:z] -> [x:y:-z].
  Point sigma(const Point& p) const {
    require_on_curve(p);
    return p.with_z(-p.z());
  }

  /// Projection to P^1, canonical: [a:1] or [1:0].
  std::pair<E, E> pi(const Point& p) const { return {p.x(), p.y()}; }

  std::vector<Point> weierstrass_points() const {
    std::vector<Point> w;
    for (const auto& a : branch_abscissae()) w.push_back(affine_point(a, field_.zero()));
    w.push_back(infinity());
    return w;
  }

  /// Uniform x in F_p until f(x,1) is a square, then a random sign of the root.
  Point random_point(Rng& rng) const {
    if constexpr (!F::is_finite) {
      fail(ErrorCode::Unsupported, "random_point needs a finite field");
    } else {
      if (field_.p == 2) fail(ErrorCode::Unsupported, "random_point needs an odd characteristic");
      for (std::uint64_t trial = 0; trial < field_.p; ++trial) {
        E a = field_.random(rng);
        auto root = field_.sqrt(f_affine_(a));
        if (!root) continue;
        E b = (rng() & 1) ? -*root : *root;
        return affine_point(a, b);
      }
      fail(ErrorCode::SamplingFailed, "no rational point found after p trials");
    }
  }

  /// A random affine point that is not a Weierstrass point.
  Point random_generic_point(Rng& rng) const {
    for (int trial = 0; trial < 1000; ++trial) {
      auto p = random_point(rng);
      if (!p.z().is_zero()) return p;
    }
    fail(ErrorCode::SamplingFailed, "no non-Weierstrass point found");
  }

  friend bool operator==(const CurveGenus2& a, const CurveGenus2& b) {
    return a.field_ == b.field_ && a.lambdas_ == b.lambdas_;
  }

 private:
  F field_;
  std::array<E, 3> lambdas_;
  UniPoly<F> f_affine_;
  MultiPoly<F> f_hom_;
};

}  // namespace g2k

#endif  // G2K_CURVE_HPP
