#ifndef G2K_JACOBIAN_HPP
#define G2K_JACOBIAN_HPP

// Jacobian arithmetic. Classes are kept as reduced divisors D - deg(D) oo with
// deg D <= 2; Mumford pairs (u, v) and Cantor's algorithm serve as the oracle.

#include <optional>
#include <string>
#include <tuple>
#include <variant>
#include <vector>

#include "g2k/curve.hpp"
#include "g2k/errors.hpp"
#include "g2k/interpolation.hpp"
#include "g2k/unipoly.hpp"

namespace g2k {

template <FieldDescriptor F>
class DivisorClass {
 public:
  using Point = PointP113<F>;
  enum class Kind { Zero, One, Two };

  static DivisorClass zero() { return DivisorClass(Kind::Zero, {}); }

  Kind kind() const { return kind_; }
  bool is_zero() const { return kind_ == Kind::Zero; }
  const std::vector<Point>& points() const { return pts_; }

  friend bool operator==(const DivisorClass&, const DivisorClass&) = default;

  std::string to_string() const {
    if (is_zero()) return "0";
    std::string s;
    for (const auto& p : pts_) s += (s.empty() ? "" : " + ") + p.to_string();
    return s + " - " + std::to_string(pts_.size()) + "oo";
  }

 private:
  template <FieldDescriptor G>
  friend DivisorClass<G> from_points(const CurveGenus2<G>&, const PointP113<G>&, const PointP113<G>&);

  DivisorClass(Kind k, std::vector<Point> pts) : kind_(k), pts_(std::move(pts)) {}

  Kind kind_;
  std::vector<Point> pts_;
};

/// Reduces p1 + p2 - 2 oo: sigma-pairs cancel, points at infinity drop out.
template <FieldDescriptor F>
DivisorClass<F> from_points(const CurveGenus2<F>& C, const PointP113<F>& p1, const PointP113<F>& p2) {
  using D = DivisorClass<F>;
  C.require_on_curve(p1);
  C.require_on_curve(p2);
  if (p1.is_infinity() && p2.is_infinity()) return D::zero();
  if (p1.is_infinity()) return D(D::Kind::One, {p2});
  if (p2.is_infinity()) return D(D::Kind::One, {p1});
  if (p2 == C.sigma(p1)) return D::zero();
  if (p2 < p1) return D(D::Kind::Two, {p2, p1});
  return D(D::Kind::Two, {p1, p2});
}

template <FieldDescriptor F>
DivisorClass<F> from_point(const CurveGenus2<F>& C, const PointP113<F>& p) {
  return from_points(C, p, C.infinity());
}

template <FieldDescriptor F>
DivisorClass<F> negate(const CurveGenus2<F>& C, const DivisorClass<F>& D) {
  switch (D.kind()) {
    case DivisorClass<F>::Kind::Zero: return D;
    case DivisorClass<F>::Kind::One: return from_point(C, C.sigma(D.points()[0]));
    case DivisorClass<F>::Kind::Two: break;
  }
  return from_points(C, C.sigma(D.points()[0]), C.sigma(D.points()[1]));
}

template <FieldDescriptor F>
struct MumfordRep {
  UniPoly<F> u, v;

  static MumfordRep identity(const F& K) { return {UniPoly<F>::constant(K, K.one()), UniPoly<F>(K)}; }
  bool is_identity() const { return u.degree() == 0; }

  friend bool operator==(const MumfordRep&, const MumfordRep&) = default;
};

template <FieldDescriptor F>
bool is_valid_mumford(const CurveGenus2<F>& C, const MumfordRep<F>& M) {
  if (M.u.is_zero() || !M.u.lc().is_one() || M.u.degree() > 2 || M.v.degree() >= M.u.degree()) return false;
  return (M.v * M.v - C.f_affine()) % M.u == UniPoly<F>(C.field());
}

template <FieldDescriptor F>
MumfordRep<F> to_mumford(const CurveGenus2<F>& C, const DivisorClass<F>& D) {
  const F& K = C.field();
  using P = UniPoly<F>;
  auto X = P::x(K);
  const auto& pts = D.points();
  switch (D.kind()) {
    case DivisorClass<F>::Kind::Zero: return MumfordRep<F>::identity(K);
    case DivisorClass<F>::Kind::One: return {X - P::constant(K, pts[0].x()), P::constant(K, pts[0].z())};
    case DivisorClass<F>::Kind::Two: break;
  }
  const auto &a1 = pts[0].x(), &b1 = pts[0].z(), &a2 = pts[1].x(), &b2 = pts[1].z();
  if (a1 == a2) {
    // tangent line data: v(a) = b, v'(a) = f'(a) / (2b)
    auto slope = C.f_affine().derivative()(a1) / (K.from_int(2) * b1);
    auto u = (X - P::constant(K, a1)) * (X - P::constant(K, a1));
    return {u, P::constant(K, b1) + (X - P::constant(K, a1)) * slope};
  }
  auto slope = (b2 - b1) / (a2 - a1);
  return {(X - P::constant(K, a1)) * (X - P::constant(K, a2)), P::constant(K, b1) + (X - P::constant(K, a1)) * slope};
}

template <FieldDescriptor F>
DivisorClass<F> from_mumford(const CurveGenus2<F>& C, const MumfordRep<F>& M) {
  if (!is_valid_mumford(C, M)) fail(ErrorCode::InvariantViolation, "not a reduced Mumford pair");
  if (M.u.degree() == 0) return DivisorClass<F>::zero();
  auto rs = roots(M.u);
  if (!splits(M.u, rs)) fail(ErrorCode::NotSplit, "u does not split over " + C.field().name());
  auto pt = [&](const elem_t<F>& a) { return C.affine_point(a, M.v(a)); };
  if (rs.size() == 1 && rs[0].multiplicity == 1) return from_point(C, pt(rs[0].value));
  if (rs.size() == 1) return from_points(C, pt(rs[0].value), pt(rs[0].value));
  return from_points(C, pt(rs[0].value), pt(rs[1].value));
}

/// Cantor composition followed by reduction, for y^2 = f with deg f = 5.
template <FieldDescriptor F>
MumfordRep<F> cantor_add(const CurveGenus2<F>& C, const MumfordRep<F>& A, const MumfordRep<F>& B) {
  const auto& f = C.f_affine();
  auto [d1, e1, e2] = ext_gcd(A.u, B.u);
  auto [d, c1, c2] = ext_gcd(d1, A.v + B.v);
  auto s1 = c1 * e1, s2 = c1 * e2, s3 = c2;
  auto u = exact_div(A.u * B.u, d * d);
  auto v = exact_div(s1 * A.u * B.v + s2 * B.u * A.v + s3 * (A.v * B.v + f), d) % u;
  while (u.degree() > 2) {
    u = exact_div(f - v * v, u);
    v = (-v) % u;
  }
  u = u.monic();
  return {u, v % u};
}

template <FieldDescriptor F>
MumfordRep<F> mumford_negate(const MumfordRep<F>& M) {
  return {M.u, -M.v};
}

template <FieldDescriptor F>
struct AddResult {
  DivisorClass<F> sum;
  bool used_geometric;
};

/// Group law by interpolation: the cubic through the four support points (padded
/// with oo) meets C in two more points p5, p6, and D1 + D2 = sigma(p5) + sigma(p6) - 2 oo.
/// Pencils, unsplit residuals and contact of order > 2 go through Cantor instead.
template <FieldDescriptor F>
AddResult<F> add(const CurveGenus2<F>& C, const DivisorClass<F>& D1, const DivisorClass<F>& D2) {
  for (const auto* D : {&D1, &D2})
    for (const auto& p : D->points())
      if (!C.on_curve(p)) fail(ErrorCode::CurveMismatch, p.to_string() + " does not lie on this curve");
  if (D1.is_zero()) return {D2, true};
  if (D2.is_zero()) return {D1, true};

  WeightedPoints<F> xi;
  for (const auto* D : {&D1, &D2}) {
    for (const auto& p : D->points()) xi.add(p);
    xi.add(C.infinity(), static_cast<unsigned>(2 - D->points().size()));
  }
  if (xi.max_mult() <= 2) {
    try {
      auto completion = complete_four(C, xi);
      if (const auto* u = std::get_if<UniqueCompletion<F>>(&completion)) {
        auto rest = u->residual.expanded();
        return {from_points(C, C.sigma(rest[0]), C.sigma(rest[1])), true};
      }
    } catch (const Error& e) {
      if (e.code() != ErrorCode::NotSplit) throw;
    }
  }
  auto M = cantor_add(C, to_mumford(C, D1), to_mumford(C, D2));
  return {from_mumford(C, M), false};
}

/// Abel-Jacobi image of sum m_i (p_i - oo) in Mumford form; total over any field.
template <FieldDescriptor F>
MumfordRep<F> aj_sum_mumford(const CurveGenus2<F>& C, const WeightedPoints<F>& pts) {
  auto acc = MumfordRep<F>::identity(C.field());
  for (const auto& [p, m] : pts.items()) {
    auto M = to_mumford(C, from_point(C, p));
    for (unsigned k = 0; k < m; ++k) acc = cantor_add(C, acc, M);
  }
  return acc;
}

template <FieldDescriptor F>
DivisorClass<F> aj_sum(const CurveGenus2<F>& C, const WeightedPoints<F>& pts) {
  return from_mumford(C, aj_sum_mumford(C, pts));
}

}  // namespace g2k

#endif  // G2K_JACOBIAN_HPP
