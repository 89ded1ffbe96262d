#ifndef G2K_BRANCH_HPP
#define G2K_BRANCH_HPP

// The branch hypersurface in P^4 = |cubics|: B(a) = Discr_x(a4^2 f - p^2) / a4^6, a form
// of degree 14 vanishing exactly on cubics tangent to C.

#include <algorithm>
#include <array>
#include <cstddef>
#include <exception>
#include <functional>
#include <optional>
#include <thread>
#include <vector>

#include "g2k/curve.hpp"
#include "g2k/errors.hpp"
#include "g2k/interpolation.hpp"
#include "g2k/multipoly.hpp"
#include "g2k/unipoly.hpp"

namespace g2k {

template <FieldDescriptor F>
using P4Point = std::array<elem_t<F>, 5>;

/// Deterministic parallel map: out[i] = fn(i), computed on up to `threads` workers.
template <class T, class Fn>
std::vector<T> parallel_map(std::size_t n, Fn fn, unsigned threads = 0) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  std::vector<std::optional<T>> slots(n);
  std::vector<std::exception_ptr> errors(threads);
  auto work = [&](unsigned w) {
    try {
      for (std::size_t i = w; i < n; i += threads) slots[i].emplace(fn(i));
    } catch (...) {
      errors[w] = std::current_exception();
    }
  };
  if (threads == 1 || n < 64) {
    threads = 1;
    errors.resize(1);
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < threads; ++w) pool.emplace_back(work, w);
    for (auto& t : pool) t.join();
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  std::vector<T> out;
  out.reserve(n);
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

/// R(x) = a4^2 f(x) - p(x)^2 for raw (unnormalised) coefficients.
template <FieldDescriptor F>
UniPoly<F> branch_resultant(const CurveGenus2<F>& C, const P4Point<F>& a) {
  const F& K = C.field();
  UniPoly<F> p(K, {a[3], a[2], a[1], a[0]});
  return C.f_affine() * (a[4] * a[4]) - p * p;
}

template <FieldDescriptor F>
elem_t<F> branch_value(const CurveGenus2<F>& C, const P4Point<F>& a) {
  if (a[4].is_zero()) fail(ErrorCode::ChartUnsupported, "branch_value needs a4 != 0");
  if (a[0].is_zero()) fail(ErrorCode::DegreeDrop, "a0 = 0: the cubic passes through infinity and deg R < 6");
  auto a4_6 = power(a[4], 6, C.field().one());
  return discriminant(branch_resultant(C, a)) / a4_6;
}

template <FieldDescriptor F>
elem_t<F> branch_value(const CurveGenus2<F>& C, const CubicForm<F>& g) {
  return branch_value(C, g.alpha());
}

/// Contact of order >= 2 somewhere, decided without splitting any polynomial.
template <FieldDescriptor F>
bool is_tangent(const CurveGenus2<F>& C, const CubicForm<F>& g) {
  const F& K = C.field();
  if (!g[4].is_zero()) {
    auto R = g.resultant_poly(C);
    return gcd(R, R.derivative()).degree() > 0;
  }
  // three vertical lines: tangent iff one passes through a Weierstrass point or two coincide
  if (g[0].is_zero()) return true;
  auto p = g.p_affine(K);
  return gcd(p, p.derivative()).degree() > 0 || gcd(p, C.f_affine()).degree() > 0;
}

template <FieldDescriptor F>
struct LineP4 {
  P4Point<F> u, v;  // t -> u t + v

  P4Point<F> at(const elem_t<F>& t) const {
    P4Point<F> r = v;
    for (std::size_t i = 0; i < 5; ++i) r[i] += u[i] * t;
    return r;
  }
};

/// B restricted to the line, interpolated from samples avoiding a0 = 0 and a4 = 0,
/// then checked on `extra` further samples.
template <FieldDescriptor F>
UniPoly<F> restrict_to_line(const CurveGenus2<F>& C, const LineP4<F>& L, int extra = 3) {
  const F& K = C.field();
  if (L.u[4].is_zero() && L.v[4].is_zero()) fail(ErrorCode::ChartUnsupported, "line lies in the hyperplane a4 = 0");
  std::vector<std::pair<elem_t<F>, elem_t<F>>> samples;
  const int need = 15 + extra;
  const long budget = 200;
  for (long k = 0; k < budget && static_cast<int>(samples.size()) < need; ++k) {
    auto t = K.from_int(k);
    if (k > 0 && t.is_zero()) break;  // wrapped around a small field
    auto a = L.at(t);
    if (a[0].is_zero() || a[4].is_zero()) continue;
    samples.emplace_back(t, branch_value(C, a));
  }
  if (static_cast<int>(samples.size()) < need) fail(ErrorCode::TooManyDegeneratePoints, "not enough regular samples on the line");
  std::vector<std::pair<elem_t<F>, elem_t<F>>> first(samples.begin(), samples.begin() + 15);
  auto poly = interpolate_univariate(K, first);
  for (std::size_t i = 15; i < samples.size(); ++i)
    if (poly(samples[i].first) != samples[i].second) fail(ErrorCode::InvariantViolation, "branch form restricted to a line exceeds degree 14");
  return poly;
}

struct PencilReport {
  long centre;
  int affine_degree;    // degree in a of Discr_x(a^2 (x - c)^6 - f)
  int infinity_mult;    // order of B at the member (x - c y)^3
  int centre0_affine;   // same computation with c = 0 (a branch abscissa)
  int centre0_infinity;
  int total() const { return affine_degree + infinity_mult; }
};

namespace detail {

/// The pencil a (x - c y)^3 - b z as a line in P^4.
template <FieldDescriptor F>
P4Point<F> pencil_member(const F& K, const elem_t<F>& c, const elem_t<F>& a, const elem_t<F>& b) {
  auto c2 = c * c;
  return {a, -K.from_int(3) * c * a, K.from_int(3) * c2 * a, -c2 * c * a, -b};
}

template <FieldDescriptor F>
UniPoly<F> interpolate_checked(const F& K, const std::vector<std::pair<elem_t<F>, elem_t<F>>>& s, std::size_t use) {
  std::vector<std::pair<elem_t<F>, elem_t<F>>> first(s.begin(), s.begin() + static_cast<long>(use));
  auto poly = interpolate_univariate(K, first);
  for (std::size_t i = use; i < s.size(); ++i)
    if (poly(s[i].first) != s[i].second) fail(ErrorCode::InvariantViolation, "pencil interpolation is not polynomial of the expected degree");
  return poly;
}

/// (degree in a at b = 1, order at b = 0) for the pencil centred at c.
template <FieldDescriptor F>
std::pair<int, int> pencil_split(const CurveGenus2<F>& C, const elem_t<F>& c) {
  const F& K = C.field();
  // b = 1: a -> Discr(R) with a4 = -1, so a4^6 = 1; the a-degree is at most 20
  std::vector<std::pair<elem_t<F>, elem_t<F>>> affine, at_inf;
  for (long k = 1; affine.size() < 25; ++k) {
    auto a = K.from_int(k);
    affine.emplace_back(a, discriminant(branch_resultant(C, pencil_member(K, c, a, K.one()))));
  }
  // a = 1: s -> B((x - c)^3 - s z) is a polynomial of degree <= 14 in s
  for (long k = 1; at_inf.size() < 18; ++k) {
    auto s = K.from_int(k);
    at_inf.emplace_back(s, branch_value(C, pencil_member(K, c, K.one(), s)));
  }
  auto pa = interpolate_checked(K, affine, 21);
  auto ps = interpolate_checked(K, at_inf, 15);
  return {pa.degree(), ord_at(ps, K.zero())};
}

}  // namespace detail

/// The pencil a (x - c y)^3 - b z for the first non-branch integer centre c in 4, 5, ...
/// (then -1, -2, ...), and the same count for c = 0 for comparison.
template <FieldDescriptor F>
PencilReport pencil_branch_degree(const CurveGenus2<F>& C) {
  const F& K = C.field();
  std::vector<long> candidates;
  for (long k = 4; k < 40; ++k) candidates.push_back(k);
  for (long k = -1; k > -40; --k) candidates.push_back(k);
  long centre = 0;
  for (long k : candidates)
    if (!C.is_branch_abscissa(K.from_int(k))) {
      centre = k;
      break;
    }
  if (centre == 0) fail(ErrorCode::SamplingFailed, "no non-branch integer centre");
  auto [da, mi] = detail::pencil_split(C, K.from_int(centre));
  auto [d0, m0] = detail::pencil_split(C, K.zero());
  return {centre, da, mi, d0, m0};
}

/// The degree-14 form itself over F_p, by tensor-grid interpolation on the chart a0 = 1.
template <FieldDescriptor F>
MultiPoly<F> full_branch_poly(const CurveGenus2<F>& C, std::uint64_t offset = 1, unsigned threads = 0) {
  static_assert(F::is_finite, "full_branch_poly works over F_p");
  const F& K = C.field();
  constexpr std::size_t N = 15;  // nodes per axis; degree <= 14 in each variable
  if (K.p < 2 * N + 2) fail(ErrorCode::GridDegeneracy, "field too small for a 15-point grid");
  std::vector<elem_t<F>> nodes;
  for (std::size_t i = 0; i < N; ++i) nodes.push_back(K.from_int(static_cast<long>((offset + i) % K.p)));
  for (const auto& n : nodes)
    if (n.is_zero()) fail(ErrorCode::GridDegeneracy, "grid offset puts a4 = 0 on the grid");

  const std::size_t total = N * N * N * N;
  auto values = parallel_map<elem_t<F>>(
      total,
      [&](std::size_t idx) {
        std::size_t i1 = idx / (N * N * N), i2 = (idx / (N * N)) % N, i3 = (idx / N) % N, i4 = idx % N;
        return branch_value(C, P4Point<F>{K.one(), nodes[i1], nodes[i2], nodes[i3], nodes[i4]});
      },
      threads);

  // iterated interpolation: replace values along each axis by monomial coefficients
  std::vector<std::pair<elem_t<F>, elem_t<F>>> line(N);
  const std::size_t strides[4] = {N * N * N, N * N, N, 1};
  for (std::size_t axis = 0; axis < 4; ++axis) {
    const std::size_t stride = strides[axis];
    for (std::size_t base = 0; base < total; ++base) {
      if ((base / stride) % N != 0) continue;
      for (std::size_t k = 0; k < N; ++k) line[k] = {nodes[k], values[base + k * stride]};
      auto poly = interpolate_univariate(K, line);
      for (std::size_t k = 0; k < N; ++k) values[base + k * stride] = poly.coeff(k);
    }
  }

  MultiPoly<F> B(K, 5);
  for (std::size_t idx = 0; idx < total; ++idx) {
    if (values[idx].is_zero()) continue;
    unsigned e1 = static_cast<unsigned>(idx / (N * N * N)), e2 = static_cast<unsigned>((idx / (N * N)) % N),
             e3 = static_cast<unsigned>((idx / N) % N), e4 = static_cast<unsigned>(idx % N);
    const unsigned deg = e1 + e2 + e3 + e4;
    if (deg > 14) fail(ErrorCode::InvariantViolation, "dehomogenised branch form has a term of degree > 14");
    B.add_term({14 - deg, e1, e2, e3, e4}, values[idx]);
  }
  return B;
}

}  // namespace g2k

#endif  // G2K_BRANCH_HPP
