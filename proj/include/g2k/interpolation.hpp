#ifndef G2K_INTERPOLATION_HPP
#define G2K_INTERPOLATION_HPP

// Cubics a0 x^3 + a1 x^2 y + a2 x y^2 + a3 y^3 + a4 z and conics b0 x^2 + b1 x y + b2 y^2
// restricted to the curve: interpolation through weighted points and intersection divisors.

#include <algorithm>
#include <array>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "g2k/curve.hpp"
#include "g2k/errors.hpp"
#include "g2k/matrix.hpp"
#include "g2k/unipoly.hpp"

namespace g2k {

namespace detail {

/// Scales a nonzero coefficient vector so that its first nonzero entry is 1.
template <class E, std::size_t N>
bool normalize_projective(std::array<E, N>& v) {
  auto it = std::find_if(v.begin(), v.end(), [](const E& c) { return !c.is_zero(); });
  if (it == v.end()) return false;
  if (!it->is_one()) {
    E inv = it->inverse();
    for (auto& c : v) c *= inv;
  }
  return true;
}

}  // namespace detail

template <FieldDescriptor F>
class CubicForm {
 public:
  using E = elem_t<F>;

  explicit CubicForm(std::array<E, 5> alpha) : alpha_(std::move(alpha)) {
    if (!detail::normalize_projective(alpha_)) fail(ErrorCode::ZeroCubic, "all cubic coefficients vanish");
  }
  CubicForm(const F& K, const std::vector<E>& alpha) : CubicForm(to_array(K, alpha)) {}

  const std::array<E, 5>& alpha() const { return alpha_; }
  const E& operator[](std::size_t i) const { return alpha_[i]; }

  /// The binary cubic part evaluated at y = 1.
  UniPoly<F> p_affine(const F& K) const { return UniPoly<F>(K, {alpha_[3], alpha_[2], alpha_[1], alpha_[0]}); }

  /// R(x) = a4^2 f(x) - p(x)^2, the x-resultant of the cubic against the curve (up to sign).
  UniPoly<F> resultant_poly(const CurveGenus2<F>& C) const {
    const F& K = C.field();
    auto p = p_affine(K);
    return C.f_affine() * (alpha_[4] * alpha_[4]) - p * p;
  }

  E eval(const PointP113<F>& P) const {
    const E &x = P.x(), &y = P.y();
    return alpha_[0] * x * x * x + alpha_[1] * x * x * y + alpha_[2] * x * y * y + alpha_[3] * y * y * y + alpha_[4] * P.z();
  }

  friend bool operator==(const CubicForm& a, const CubicForm& b) = default;

  std::string to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < 5; ++i) s += (i ? ", " : "") + g2k::to_string(alpha_[i]);
    return s + ")";
  }

 private:
  static std::array<E, 5> to_array(const F& K, const std::vector<E>& v) {
    if (v.size() != 5) fail(ErrorCode::InvalidArgument, "a cubic needs 5 coefficients");
    std::array<E, 5> a{K.zero(), K.zero(), K.zero(), K.zero(), K.zero()};
    std::copy(v.begin(), v.end(), a.begin());
    return a;
  }

  std::array<E, 5> alpha_;
};

template <FieldDescriptor F>
class ConicForm {
 public:
  using E = elem_t<F>;

  explicit ConicForm(std::array<E, 3> beta) : beta_(std::move(beta)) {
    if (!detail::normalize_projective(beta_)) fail(ErrorCode::InvalidArgument, "all conic coefficients vanish");
  }

  const std::array<E, 3>& beta() const { return beta_; }
  friend bool operator==(const ConicForm& a, const ConicForm& b) = default;

 private:
  std::array<E, 3> beta_;
};

template <FieldDescriptor F>
struct WeightedPoint {
  PointP113<F> point;
  unsigned mult;

  friend bool operator==(const WeightedPoint&, const WeightedPoint&) = default;
};

/// A finite multiset of curve points, merged and sorted.
template <FieldDescriptor F>
class WeightedPoints {
 public:
  using Point = PointP113<F>;

  WeightedPoints() = default;
  WeightedPoints(std::initializer_list<Point> pts) {
    for (const auto& p : pts) add(p);
  }
  explicit WeightedPoints(const std::vector<Point>& pts) {
    for (const auto& p : pts) add(p);
  }

  void add(const Point& p, unsigned mult = 1) {
    if (mult == 0) return;
    auto it = std::lower_bound(items_.begin(), items_.end(), p, [](const WeightedPoint<F>& w, const Point& q) { return w.point < q; });
    if (it != items_.end() && it->point == p) {
      it->mult += mult;
    } else {
      items_.insert(it, {p, mult});
    }
  }

  /// Removes `other` from this multiset; fails unless other <= *this.
  WeightedPoints minus(const WeightedPoints& other) const {
    WeightedPoints out = *this;
    for (const auto& w : other.items_) {
      auto it = std::find_if(out.items_.begin(), out.items_.end(), [&](const WeightedPoint<F>& v) { return v.point == w.point; });
      if (it == out.items_.end() || it->mult < w.mult) fail(ErrorCode::InvariantViolation, "multiset difference is not effective");
      it->mult -= w.mult;
      if (it->mult == 0) out.items_.erase(it);
    }
    return out;
  }

  unsigned multiplicity(const Point& p) const {
    for (const auto& w : items_)
      if (w.point == p) return w.mult;
    return 0;
  }

  const std::vector<WeightedPoint<F>>& items() const { return items_; }
  std::size_t size() const { return items_.size(); }
  unsigned total() const {
    unsigned t = 0;
    for (const auto& w : items_) t += w.mult;
    return t;
  }
  unsigned max_mult() const {
    unsigned m = 0;
    for (const auto& w : items_) m = std::max(m, w.mult);
    return m;
  }

  /// Points listed with repetition.
  std::vector<Point> expanded() const {
    std::vector<Point> v;
    for (const auto& w : items_) v.insert(v.end(), w.mult, w.point);
    return v;
  }

  friend bool operator==(const WeightedPoints&, const WeightedPoints&) = default;

  std::string to_string() const {
    std::string s = "{";
    for (std::size_t i = 0; i < items_.size(); ++i) {
      if (i) s += ", ";
      s += items_[i].point.to_string();
      if (items_[i].mult > 1) s += "^" + std::to_string(items_[i].mult);
    }
    return s + "}";
  }

 private:
  std::vector<WeightedPoint<F>> items_;
};

/// One row per multiplicity layer: the value of each cubic monomial, then its first
/// derivative along the curve in a local parameter.
template <FieldDescriptor F>
Matrix<F> restriction_matrix(const CurveGenus2<F>& C, const WeightedPoints<F>& pts) {
  const F& K = C.field();
  std::vector<std::vector<elem_t<F>>> rows;
  for (const auto& [P, m] : pts.items()) {
    C.require_on_curve(P);
    if (m > 2) fail(ErrorCode::MultiplicityUnsupported, "interpolation rows only for multiplicity <= 2");
    const auto &x = P.x(), &y = P.y();
    rows.push_back({x * x * x, x * x * y, x * y * y, y * y * y, P.z()});
    if (m == 2) {
      if (P.z().is_zero()) {
        // local parameter z; x - a vanishes to order 2
        rows.push_back({K.zero(), K.zero(), K.zero(), K.zero(), K.one()});
      } else {
        const auto& a = x;
        auto dz = C.f_affine().derivative()(a) / (K.from_int(2) * P.z());
        rows.push_back({K.from_int(3) * a * a, K.from_int(2) * a, K.one(), K.zero(), dz});
      }
    }
  }
  if (rows.empty()) return Matrix<F>(K, 0, 5);
  return Matrix<F>(K, rows);
}

/// Rows for the conics x^2, xy, y^2 (pulled back along the projection to P^1).
template <FieldDescriptor F>
Matrix<F> conic_matrix(const CurveGenus2<F>& C, const WeightedPoints<F>& pts) {
  const F& K = C.field();
  std::vector<std::vector<elem_t<F>>> rows;
  for (const auto& [P, m] : pts.items()) {
    C.require_on_curve(P);
    if (m > 2) fail(ErrorCode::MultiplicityUnsupported, "interpolation rows only for multiplicity <= 2");
    const auto &x = P.x(), &y = P.y();
    rows.push_back({x * x, x * y, y * y});
    if (m == 2) {
      if (P.z().is_zero()) {
        rows.push_back({K.zero(), K.zero(), K.zero()});
      } else {
        rows.push_back({K.from_int(2) * x, K.one(), K.zero()});
      }
    }
  }
  if (rows.empty()) return Matrix<F>(K, 0, 3);
  return Matrix<F>(K, rows);
}

template <FieldDescriptor F>
std::optional<CubicForm<F>> cubic_through_six(const CurveGenus2<F>& C, const WeightedPoints<F>& pts) {
  if (pts.total() != 6) fail(ErrorCode::InvalidArgument, "cubic_through_six needs total multiplicity 6");
  auto M = restriction_matrix(C, pts);
  auto ker = M.kernel();
  if (ker.size() >= 2) fail(ErrorCode::InvariantViolation, "restriction map of rank < 4 on " + pts.to_string());
  if (ker.empty()) return std::nullopt;
  return CubicForm<F>(C.field(), ker[0]);
}

template <FieldDescriptor F>
struct UniqueCompletion {
  CubicForm<F> cubic;
  WeightedPoints<F> residual;
};

template <FieldDescriptor F>
struct PencilCompletion {
  CubicForm<F> first, second;
};

template <FieldDescriptor F>
using Completion = std::variant<UniqueCompletion<F>, PencilCompletion<F>>;

template <FieldDescriptor F>
WeightedPoints<F> intersection_divisor(const CurveGenus2<F>& C, const CubicForm<F>& g);

/// The cubics through four points form a line or a plane in P^4.
template <FieldDescriptor F>
Completion<F> complete_four(const CurveGenus2<F>& C, const WeightedPoints<F>& pts) {
  if (pts.total() != 4) fail(ErrorCode::InvalidArgument, "complete_four needs total multiplicity 4");
  auto ker = restriction_matrix(C, pts).kernel();
  if (ker.size() == 2) return PencilCompletion<F>{CubicForm<F>(C.field(), ker[0]), CubicForm<F>(C.field(), ker[1])};
  if (ker.size() != 1) fail(ErrorCode::InvariantViolation, "kernel of dimension " + std::to_string(ker.size()) + " through four points");
  CubicForm<F> g(C.field(), ker[0]);
  auto residual = intersection_divisor(C, g).minus(pts);
  if (residual.total() != 2) fail(ErrorCode::InvariantViolation, "residual of total " + std::to_string(residual.total()));
  return UniqueCompletion<F>{g, residual};
}

template <FieldDescriptor F>
std::optional<ConicForm<F>> conic_through(const CurveGenus2<F>& C, const WeightedPoints<F>& pts) {
  if (pts.total() != 4) fail(ErrorCode::InvalidArgument, "conic_through needs total multiplicity 4");
  auto ker = conic_matrix(C, pts).kernel();
  if (ker.empty()) return std::nullopt;
  return ConicForm<F>({ker[0][0], ker[0][1], ker[0][2]});
}

/// Intersection of a cubic with the curve. With a4 != 0 the x-coordinates are the roots
/// of R = a4^2 f - p^2 and infinity picks up 6 - deg R; with a4 = 0 the cubic is three
/// vertical lines.
template <FieldDescriptor F>
WeightedPoints<F> intersection_divisor(const CurveGenus2<F>& C, const CubicForm<F>& g) {
  const F& K = C.field();
  WeightedPoints<F> out;
  const auto& a = g.alpha();
  if (!a[4].is_zero()) {
    auto R = g.resultant_poly(C);
    auto rs = roots(R);
    if (!splits(R, rs)) fail(ErrorCode::NotSplit, "R(x) does not split over " + K.name());
    auto p = g.p_affine(K);
    auto inv4 = a[4].inverse();
    for (const auto& r : rs) out.add(C.affine_point(r.value, -p(r.value) * inv4), static_cast<unsigned>(r.multiplicity));
    out.add(C.infinity(), static_cast<unsigned>(6 - R.degree()));
    return out;
  }
  auto p = g.p_affine(K);
  auto rs = roots(p);
  if (!splits(p, rs)) fail(ErrorCode::NotSplit, "binary cubic does not split over " + K.name());
  for (const auto& r : rs) {
    const auto m = static_cast<unsigned>(r.multiplicity);
    auto fa = C.f_affine()(r.value);
    if (fa.is_zero()) {
      out.add(C.affine_point(r.value, K.zero()), 2 * m);
      continue;
    }
    auto b = K.sqrt(fa);
    if (!b) fail(ErrorCode::NotSplit, "vertical line x = " + g2k::to_string(r.value) + " meets C in a conjugate pair");
    out.add(C.affine_point(r.value, *b), m);
    out.add(C.affine_point(r.value, -*b), m);
  }
  out.add(C.infinity(), 2 * static_cast<unsigned>(3 - p.degree()));
  return out;
}

/// Contact order of the cubic with C at an affine point, read off R.
template <FieldDescriptor F>
int intersection_multiplicity(const CurveGenus2<F>& C, const CubicForm<F>& g, const PointP113<F>& P) {
  C.require_on_curve(P);
  if (g[4].is_zero()) fail(ErrorCode::UnsupportedChart, "a4 = 0: use intersection_divisor");
  if (!P.is_affine()) fail(ErrorCode::UnsupportedChart, "point at infinity: use intersection_divisor");
  if (!g.eval(P).is_zero()) return 0;
  return ord_at(g.resultant_poly(C), P.x());
}

}  // namespace g2k

#endif  // G2K_INTERPOLATION_HPP
