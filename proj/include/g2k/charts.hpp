#ifndef G2K_CHARTS_HPP
#define G2K_CHARTS_HPP

// Haiman charts on Hilb^3(A^2): U(1,1,1) with coordinates (e, a) and U(2,1) with
// (a, b, c), and exact checks of the chart identities on the local model
//   x3 = -x1 - x2,  y1 = (w1 + z3) x1,  y2 = (w2 + z3) x2,  y3 = -(x1 + x2) z3,
//   x1 w1 + x2 w2 = 0.
// The hypersurface relation is used by eliminating one variable on an affine chart:
// w2 = -x1 w1 / x2 where x2 != 0, or x2 = -x1 w1 / w2 where w2 != 0.
// The chart U(3) is U(1,1,1) with x and y exchanged and is not repeated here.

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "g2k/errors.hpp"
#include "g2k/field.hpp"
#include "g2k/matrix.hpp"
#include "g2k/multipoly.hpp"

namespace g2k {

template <class R>
struct Chart111Coords {
  R e1, e2, e3, a0, a1, a2;
};

template <class R>
struct Chart21Coords {
  R a0, a1, a2, b0, b1, b2, c0, c1, c2;

  std::array<R, 9> as_array() const { return {a0, a1, a2, b0, b1, b2, c0, c1, c2}; }
};

inline const std::array<const char*, 9>& chart21_names() {
  static const std::array<const char*, 9> n{"a0", "a1", "a2", "b0", "b1", "b2", "c0", "c1", "c2"};
  return n;
}

/// x^3 - e1 x^2 + e2 x - e3 = (x - x1)(x - x2)(x - x3).
template <class R>
std::array<R, 3> viete_e(const R& x1, const R& x2, const R& x3) {
  return {x1 + x2 + x3, x1 * x2 + x1 * x3 + x2 * x3, x1 * x2 * x3};
}

/// Cramer numerators over one shared denominator; works over any commutative ring.
template <class R, std::size_t N>
struct CramerParts {
  std::array<R, N> num;
  R den;
};

namespace detail {

// Cramer's rule for M (c0, c1, c2)^T = rhs, M with columns (u, v, w).
template <class R>
std::array<R, 3> cramer3(const std::array<R, 3>& u, const std::array<R, 3>& v, const std::array<R, 3>& w,
                         const std::array<R, 3>& rhs) {
  auto d = [](const std::array<R, 3>& a, const std::array<R, 3>& b, const std::array<R, 3>& c) {
    return det3(a[0], b[0], c[0], a[1], b[1], c[1], a[2], b[2], c[2]);
  };
  return {d(rhs, v, w), d(u, rhs, w), d(u, v, rhs)};
}

template <class R>
R det_cols(const std::array<R, 3>& a, const std::array<R, 3>& b, const std::array<R, 3>& c) {
  return det3(a[0], b[0], c[0], a[1], b[1], c[1], a[2], b[2], c[2]);
}

}  // namespace detail

/// yi = a0 + a1 xi + a2 xi^2: numerators of (a0, a1, a2) over the Vandermonde determinant.
template <class R>
CramerParts<R, 3> cramer_a_parts(const std::array<R, 3>& x, const std::array<R, 3>& y, const R& one) {
  const std::array<R, 3> ones{one, one, one}, xx{x[0] * x[0], x[1] * x[1], x[2] * x[2]};
  return {detail::cramer3(ones, x, xx, y), detail::det_cols(ones, x, xx)};
}

/// x^2, xy, y^2 written as c0 + c1 x + c2 y on the three points: numerators of the nine
/// U(2,1) coordinates over det[1, xi, yi].
template <class R>
CramerParts<R, 9> chart21_parts(const std::array<R, 3>& x, const std::array<R, 3>& y, const R& one) {
  const std::array<R, 3> ones{one, one, one};
  auto a = detail::cramer3(ones, x, y, std::array<R, 3>{x[0] * x[0], x[1] * x[1], x[2] * x[2]});
  auto b = detail::cramer3(ones, x, y, std::array<R, 3>{x[0] * y[0], x[1] * y[1], x[2] * y[2]});
  auto c = detail::cramer3(ones, x, y, std::array<R, 3>{y[0] * y[0], y[1] * y[1], y[2] * y[2]});
  return {{a[0], a[1], a[2], b[0], b[1], b[2], c[0], c[1], c[2]}, detail::det_cols(ones, x, y)};
}

/// The three U(2,1) relations, each scaled by den^2 so that they are polynomial in the
/// Cramer numerators; all three vanish identically.
template <class R>
std::array<R, 3> chart21_relation_residues(const std::array<R, 9>& n, const R& den) {
  const R &a0 = n[0], &a1 = n[1], &a2 = n[2], &b0 = n[3], &b1 = n[4], &b2 = n[5], &c0 = n[6], &c1 = n[7], &c2 = n[8];
  return {a0 * den - (a2 * (b1 - c2) + b2 * (b2 - a1)), b0 * den - (a2 * c1 - b1 * b2),
          c0 * den - (c1 * (b2 - a1) + b1 * (b1 - c2))};
}

template <class R>
bool chart21_relations_hold(const Chart21Coords<R>& c) {
  return c.a0 == c.a2 * (c.b1 - c.c2) + c.b2 * (c.b2 - c.a1) && c.b0 == c.a2 * c.c1 - c.b1 * c.b2 &&
         c.c0 == c.c1 * (c.b2 - c.a1) + c.b1 * (c.b1 - c.c2);
}

template <FieldDescriptor F>
std::array<elem_t<F>, 3> cramer_a(const F& K, const std::array<elem_t<F>, 3>& x, const std::array<elem_t<F>, 3>& y) {
  auto parts = cramer_a_parts(x, y, K.one());
  if (parts.den.is_zero()) fail(ErrorCode::VandermondeZero, "two of the x-coordinates coincide");
  return {parts.num[0] / parts.den, parts.num[1] / parts.den, parts.num[2] / parts.den};
}

template <FieldDescriptor F>
Chart111Coords<elem_t<F>> chart111_coords(const F& K, const std::array<elem_t<F>, 3>& x, const std::array<elem_t<F>, 3>& y) {
  auto e = viete_e(x[0], x[1], x[2]);
  auto a = cramer_a(K, x, y);
  return {e[0], e[1], e[2], a[0], a[1], a[2]};
}

template <FieldDescriptor F>
Chart21Coords<elem_t<F>> cramer_chart21(const F& K, const std::array<elem_t<F>, 3>& x, const std::array<elem_t<F>, 3>& y) {
  auto parts = chart21_parts(x, y, K.one());
  if (parts.den.is_zero()) fail(ErrorCode::DenominatorZero, "det[1, xi, yi] = 0: the points are collinear");
  std::array<elem_t<F>, 9> v;
  for (std::size_t i = 0; i < 9; ++i) v[i] = parts.num[i] / parts.den;
  return {v[0], v[1], v[2], v[3], v[4], v[5], v[6], v[7], v[8]};
}

/// Local equations of Kum^2 on U(1,1,1): e1 = 0 and 3 a0 = 2 a2 e2.
template <FieldDescriptor F>
bool kummer_111_membership(const F& K, const Chart111Coords<elem_t<F>>& c) {
  return c.e1.is_zero() && K.from_int(3) * c.a0 == K.from_int(2) * c.a2 * c.e2;
}

// ---------------------------------------------------------------------------------
// Symbolic checks over Q.

using QPoly = MultiPoly<RationalField>;
using QFrac = Frac<RationalField>;

/// Variables of the local model, in this order.
struct LocalTriple {
  static constexpr std::size_t X1 = 0, X2 = 1, W1 = 2, W2 = 3, Z3 = 4, arity = 5;

  static const std::vector<std::string>& names() {
    static const std::vector<std::string> n{"x1", "x2", "w1", "w2", "z3"};
    return n;
  }
  static QPoly var(std::size_t i) { return QPoly::variable(RationalField{}, arity, i); }
  static QPoly constant(long c) { return QPoly::constant(RationalField{}, arity, c); }

  static std::array<QPoly, 3> xs() { return {var(X1), var(X2), -var(X1) - var(X2)}; }
  static std::array<QPoly, 3> ys() {
    return {(var(W1) + var(Z3)) * var(X1), (var(W2) + var(Z3)) * var(X2), -(var(X1) + var(X2)) * var(Z3)};
  }

  /// w2 -> -x1 w1 / x2.
  static QFrac on_chart_x2(const QFrac& f) { return subst_rational(f, W2, -var(X1) * var(W1), var(X2)); }
  /// x2 -> -x1 w1 / w2.
  static QFrac on_chart_w2(const QFrac& f) { return subst_rational(f, X2, -var(X1) * var(W1), var(W2)); }
};

namespace detail {

inline std::string witness(const QPoly& p, const std::vector<std::string>& names) {
  auto [e, c] = p.leading_term();
  return QPoly::monomial(p.field(), e, c).to_string(names);
}

inline void require_zero(const QPoly& p, const std::string& what, const std::vector<std::string>& names) {
  if (!p.is_zero()) fail(ErrorCode::IdentityFailed, what + " fails; witness monomial " + witness(p, names));
}

inline void require_same(const QFrac& a, const QFrac& b, const std::string& what) {
  if (a.den.is_zero() || b.den.is_zero()) fail(ErrorCode::IdentityFailed, what + ": zero denominator");
  require_zero(a.num * b.den - b.num * a.den, what, LocalTriple::names());
}

inline QPoly x1_power(unsigned k) { return pow(LocalTriple::var(LocalTriple::X1), k); }

/// Order of vanishing of num/den along x1 = 0 (negative for a pole).
inline int order_x1(const QFrac& f) {
  return static_cast<int>(f.num.valuation_in(LocalTriple::X1)) - static_cast<int>(f.den.valuation_in(LocalTriple::X1));
}

/// Cancels the common power of x1.
inline QFrac strip_x1(const QFrac& f) {
  const unsigned k = std::min(f.num.valuation_in(LocalTriple::X1), f.den.valuation_in(LocalTriple::X1));
  if (k == 0) return f;
  return {exact_div(f.num, x1_power(k)), exact_div(f.den, x1_power(k))};
}

}  // namespace detail

/// The closed forms for a1~ and a2~ on the model.
inline QFrac tilde_a1_closed() {
  using L = LocalTriple;
  auto w1 = L::var(L::W1), w2 = L::var(L::W2), z3 = L::var(L::Z3);
  auto D = (w1 - L::constant(2) * w2) * (L::constant(2) * w1 - w2) * (w1 + w2);
  return {z3 * D + w1 * w2 * (w1 * w1 + w2 * w2 - L::constant(4) * w1 * w2), D};
}

inline QFrac tilde_a2_closed() {
  using L = LocalTriple;
  auto x1 = L::var(L::X1), w1 = L::var(L::W1), w2 = L::var(L::W2);
  auto D = (w1 - L::constant(2) * w2) * (L::constant(2) * w1 - w2) * (w1 + w2);
  return {L::constant(-3) * w1 * w2 * w2 * (w1 - w2), x1 * D};
}

/// Cramer (a0, a1, a2) on the model, as unreduced fractions.
inline std::array<QFrac, 3> model_cramer_a() {
  auto parts = cramer_a_parts(LocalTriple::xs(), LocalTriple::ys(), LocalTriple::constant(1));
  return {QFrac{parts.num[0], parts.den}, QFrac{parts.num[1], parts.den}, QFrac{parts.num[2], parts.den}};
}

struct TildeAReport {
  std::string a2_numerator;  // of the closed form, e.g. -3*w1*w2^2*(w1-w2) expanded
  std::string locus_G;
  int a1_order_x1;           // on the chart w2 != 0
  int a2_order_x1;
};

/// Cramer a1, a2 on the model agree with the closed forms on both elimination charts;
/// a2~ has a simple pole along x1 = 0 and a1~ none; the numerator of a2~ is
/// -3 w1 w2^2 (w1 - w2).
inline TildeAReport verify_tilde_a() {
  using L = LocalTriple;
  auto a = model_cramer_a();
  auto t1 = tilde_a1_closed(), t2 = tilde_a2_closed();
  detail::require_same(L::on_chart_x2(a[1]), L::on_chart_x2(t1), "a1~ on the chart x2 != 0");
  detail::require_same(L::on_chart_x2(a[2]), L::on_chart_x2(t2), "a2~ on the chart x2 != 0");
  detail::require_same(L::on_chart_w2(a[1]), L::on_chart_w2(t1), "a1~ on the chart w2 != 0");
  detail::require_same(L::on_chart_w2(a[2]), L::on_chart_w2(t2), "a2~ on the chart w2 != 0");

  TildeAReport r;
  r.a1_order_x1 = detail::order_x1(L::on_chart_w2(a[1]));
  r.a2_order_x1 = detail::order_x1(L::on_chart_w2(a[2]));
  if (r.a1_order_x1 < 0) fail(ErrorCode::IdentityFailed, "a1~ has a pole along x1 = 0");
  if (r.a2_order_x1 != -1) fail(ErrorCode::IdentityFailed, "a2~ does not have a simple pole along x1 = 0");

  auto w1 = L::var(L::W1), w2 = L::var(L::W2);
  auto G = w1 * w2 * w2 * (w1 - w2);
  auto cof = exact_div(t2.num, G);
  if (cof.total_degree() != 0) fail(ErrorCode::IdentityFailed, "numerator of a2~ is not a multiple of w1*w2^2*(w1-w2)");
  r.a2_numerator = t2.num.to_string(L::names());
  r.locus_G = "w1*w2^2*(w1-w2)";
  return r;
}

/// The U(2,1) relations as polynomial identities, for three generic symbolic points and
/// on the local model.
inline void verify_chart21_relations() {
  const RationalField Q;
  std::vector<std::string> names{"x1", "x2", "x3", "y1", "y2", "y3"};
  auto v = [&](std::size_t i) { return QPoly::variable(Q, 6, i); };
  auto generic = chart21_parts(std::array<QPoly, 3>{v(0), v(1), v(2)}, std::array<QPoly, 3>{v(3), v(4), v(5)},
                               QPoly::constant(Q, 6, 1));
  for (const auto& r : chart21_relation_residues(generic.num, generic.den)) detail::require_zero(r, "U(2,1) relation", names);
  auto model = chart21_parts(LocalTriple::xs(), LocalTriple::ys(), LocalTriple::constant(1));
  for (const auto& r : chart21_relation_residues(model.num, model.den))
    detail::require_zero(r, "U(2,1) relation on the model", LocalTriple::names());
}

/// 3 a0 - 2 a2 e2 = 0 for symbolic points with x1 + x2 + x3 = 0 and y1 + y2 + y3 = 0.
inline void verify_kummer_111_symbolic() {
  const RationalField Q;
  std::vector<std::string> names{"x1", "x2", "y1", "y2"};
  auto v = [&](std::size_t i) { return QPoly::variable(Q, 4, i); };
  std::array<QPoly, 3> x{v(0), v(1), -v(0) - v(1)}, y{v(2), v(3), -v(2) - v(3)};
  auto parts = cramer_a_parts(x, y, QPoly::constant(Q, 4, 1));
  auto e = viete_e(x[0], x[1], x[2]);
  detail::require_zero(e[0], "e1 = 0", names);
  detail::require_zero(QPoly::constant(Q, 4, 3) * parts.num[0] - QPoly::constant(Q, 4, 2) * parts.num[2] * e[1],
                       "3 a0 - 2 a2 e2 = 0", names);
}

struct ContractionReport {
  std::array<int, 9> numerator_order_x1;  // after cancelling common powers of x1
  std::string denominator_at_x1_0;
};

/// On the chart w2 != 0 (x2 = -x1 w1 / w2) every U(2,1) coordinate of the model
/// vanishes along x1 = 0, with denominator at x1 = 0 a multiple of w1 w2^2 (w1 - w2).
inline ContractionReport verify_contraction_F1() {
  using L = LocalTriple;
  auto parts = chart21_parts(L::xs(), L::ys(), L::constant(1));
  auto w1 = L::var(L::W1), w2 = L::var(L::W2);
  auto G = w1 * w2 * w2 * (w1 - w2);
  ContractionReport r;
  for (std::size_t i = 0; i < 9; ++i) {
    auto f = detail::strip_x1(L::on_chart_w2(QFrac{parts.num[i], parts.den}));
    const std::string name = chart21_names()[i];
    auto den0 = f.den.subst(L::X1, RationalField{}.zero());
    if (den0.is_zero()) fail(ErrorCode::IdentityFailed, name + ": denominator vanishes along x1 = 0");
    detail::require_zero(f.num.subst(L::X1, RationalField{}.zero()), name + " vanishes at x1 = 0", L::names());
    try {
      (void)exact_div(den0, G);
    } catch (const Error&) {
      fail(ErrorCode::IdentityFailed, name + ": denominator at x1 = 0 is not a multiple of w1*w2^2*(w1-w2)");
    }
    r.numerator_order_x1[i] = static_cast<int>(f.num.valuation_in(L::X1));
    if (i == 0) r.denominator_at_x1_0 = den0.to_string(L::names());
  }
  return r;
}

/// Along x1 + x2 = 0, w1 = w2: e3 = 0 and a2~ = 0.
inline void verify_f2_fragment() {
  using L = LocalTriple;
  auto xs = L::xs();
  auto e = viete_e(xs[0], xs[1], xs[2]);
  auto on_F2 = [&](const QPoly& p) { return p.subst(L::X2, -L::var(L::X1)).subst(L::W2, L::var(L::W1)); };
  detail::require_zero(on_F2(e[2]), "e3 = 0 along x1 + x2 = 0", L::names());
  auto t2 = tilde_a2_closed();
  detail::require_zero(on_F2(t2.num), "a2~ = 0 along w1 = w2", L::names());
  if (on_F2(t2.den).is_zero()) fail(ErrorCode::IdentityFailed, "a2~ has no finite value along the F2 locus");
}

}  // namespace g2k

#endif  // G2K_CHARTS_HPP
