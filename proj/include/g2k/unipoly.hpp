#ifndef G2K_UNIPOLY_HPP
#define G2K_UNIPOLY_HPP

// Dense univariate polynomials over a field descriptor F, with resultants,
// discriminants, root finding (F_p: Cantor-Zassenhaus, Q: rational roots)
// and Lagrange interpolation.

#include <algorithm>
#include <cstdint>
#include <span>
#include <sstream>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "g2k/errors.hpp"
#include "g2k/field.hpp"
#include "g2k/matrix.hpp"

namespace g2k {

template <FieldDescriptor F>
class UniPoly {
 public:
  using E = elem_t<F>;

  explicit UniPoly(F field) : field_(std::move(field)) {}
  UniPoly(F field, std::vector<E> coeffs) : field_(std::move(field)), c_(std::move(coeffs)) { trim(); }

  static UniPoly constant(const F& field, E c) { return UniPoly(field, {std::move(c)}); }
  static UniPoly x(const F& field) { return UniPoly(field, {field.zero(), field.one()}); }
  static UniPoly monomial(const F& field, E c, std::size_t k) {
    std::vector<E> v(k + 1, field.zero());
    v[k] = std::move(c);
    return UniPoly(field, std::move(v));
  }
  /// Product of (x - r) over the given roots.
  static UniPoly from_roots(const F& field, std::span<const E> roots) {
    UniPoly p = constant(field, field.one());
    for (const auto& r : roots) p *= UniPoly(field, {-r, field.one()});
    return p;
  }

  const F& field() const { return field_; }
  const std::vector<E>& coeffs() const { return c_; }

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }

  E coeff(std::size_t k) const { return k < c_.size() ? c_[k] : field_.zero(); }
  E lc() const { return c_.empty() ? field_.zero() : c_.back(); }

  E operator()(const E& x) const {
    E acc = field_.zero();
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  UniPoly derivative() const {
    std::vector<E> d;
    for (std::size_t k = 1; k < c_.size(); ++k) d.push_back(c_[k] * field_.from_int(static_cast<long>(k)));
    return UniPoly(field_, std::move(d));
  }

  UniPoly monic() const {
    if (is_zero()) return *this;
    E inv = field_.one() / lc();
    return *this * inv;
  }

  UniPoly operator-() const {
    std::vector<E> v;
    for (const auto& a : c_) v.push_back(-a);
    return UniPoly(field_, std::move(v));
  }

  UniPoly& operator+=(const UniPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), field_.zero());
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
    trim();
    return *this;
  }
  UniPoly& operator-=(const UniPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), field_.zero());
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
    trim();
    return *this;
  }
  UniPoly& operator*=(const UniPoly& o) { return *this = *this * o; }

  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return UniPoly(a.field_);
    std::vector<E> v(a.c_.size() + b.c_.size() - 1, a.field_.zero());
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i].is_zero()) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
    }
    return UniPoly(a.field_, std::move(v));
  }
  friend UniPoly operator*(UniPoly a, const E& s) {
    for (auto& c : a.c_) c *= s;
    a.trim();
    return a;
  }
  friend UniPoly operator*(const E& s, UniPoly a) { return std::move(a) * s; }

  /// Euclidean division: returns (q, r) with a = q b + r, deg r < deg b.
  friend std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b) {
    if (b.is_zero()) fail(ErrorCode::DivisionByZero, "polynomial division by zero");
    UniPoly r = a;
    if (a.degree() < b.degree()) return {UniPoly(a.field_), r};
    std::vector<E> q(a.c_.size() - b.c_.size() + 1, a.field_.zero());
    E inv = a.field_.one() / b.lc();
    const std::size_t db = b.c_.size() - 1;
    for (std::size_t k = q.size(); k-- > 0;) {
      E coef = r.coeff(k + db) * inv;
      q[k] = coef;
      if (coef.is_zero()) continue;
      for (std::size_t j = 0; j <= db; ++j) r.c_[k + j] -= coef * b.c_[j];
    }
    r.trim();
    return {UniPoly(a.field_, std::move(q)), r};
  }
  friend UniPoly operator%(const UniPoly& a, const UniPoly& b) { return divmod(a, b).second; }

  /// a / b when b divides a; throws InexactDivision otherwise.
  friend UniPoly exact_div(const UniPoly& a, const UniPoly& b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) fail(ErrorCode::InexactDivision, "univariate division leaves a remainder");
    return q;
  }

  /// p(g(x)).
  UniPoly compose(const UniPoly& g) const {
    UniPoly acc(field_);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * g + constant(field_, *it);
    return acc;
  }

  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }

  std::string to_string(const std::string& var = "x") const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = c_.size(); k-- > 0;) {
      if (c_[k].is_zero()) continue;
      if (!first) os << " + ";
      first = false;
      os << g2k::to_string(c_[k]);
      if (k >= 1) os << "*" << var;
      if (k >= 2) os << "^" << k;
    }
    return os.str();
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }

  F field_;
  std::vector<E> c_;
};

template <FieldDescriptor F>
UniPoly<F> pow(UniPoly<F> base, std::uint64_t e) {
  UniPoly<F> r = UniPoly<F>::constant(base.field(), base.field().one());
  while (e) {
    if (e & 1) r *= base;
    base *= base;
    e >>= 1;
  }
  return r;
}

/// base^e mod m.
template <FieldDescriptor F>
UniPoly<F> powmod(UniPoly<F> base, std::uint64_t e, const UniPoly<F>& m) {
  UniPoly<F> r = UniPoly<F>::constant(base.field(), base.field().one()) % m;
  base = base % m;
  while (e) {
    if (e & 1) r = (r * base) % m;
    base = (base * base) % m;
    e >>= 1;
  }
  return r;
}

/// Monic gcd (zero when both inputs are zero).
template <FieldDescriptor F>
UniPoly<F> gcd(UniPoly<F> a, UniPoly<F> b) {
  while (!b.is_zero()) {
    auto r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

/// Returns (g, s, t) with g = s a + t b and g monic.
template <FieldDescriptor F>
std::tuple<UniPoly<F>, UniPoly<F>, UniPoly<F>> ext_gcd(const UniPoly<F>& a, const UniPoly<F>& b) {
  const F& K = a.field();
  UniPoly<F> r0 = a, r1 = b;
  UniPoly<F> s0 = UniPoly<F>::constant(K, K.one()), s1(K);
  UniPoly<F> t0(K), t1 = UniPoly<F>::constant(K, K.one());
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    auto s = s0 - q * s1;
    s0 = std::move(s1);
    s1 = std::move(s);
    auto t = t0 - q * t1;
    t0 = std::move(t1);
    t1 = std::move(t);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  auto inv = K.one() / r0.lc();
  return {r0 * inv, s0 * inv, t0 * inv};
}

/// Sylvester matrix of (f, g): deg g rows of f's coefficients followed by deg f
/// rows of g's, highest degree first.
template <FieldDescriptor F>
Matrix<F> sylvester_matrix(const UniPoly<F>& f, const UniPoly<F>& g) {
  const int m = f.degree(), n = g.degree();
  const std::size_t size = static_cast<std::size_t>(m + n);
  Matrix<F> s(f.field(), size, size);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k <= m; ++k) s(i, i + k) = f.coeff(m - k);
  for (int i = 0; i < m; ++i)
    for (int k = 0; k <= n; ++k) s(n + i, i + k) = g.coeff(n - k);
  return s;
}

/// Determinant of the Sylvester matrix. Res(0, c) = 1 for a nonzero constant c,
/// Res(0, g) = 0 for deg g >= 1.
template <FieldDescriptor F>
elem_t<F> resultant(const UniPoly<F>& f, const UniPoly<F>& g) {
  const F& K = f.field();
  if (f.is_zero() && g.is_zero()) fail(ErrorCode::DegenerateResultant, "resultant of two zero polynomials");
  if (f.is_zero()) return g.degree() == 0 ? K.one() : K.zero();
  if (g.is_zero()) return f.degree() == 0 ? K.one() : K.zero();
  if (f.degree() == 0) return power(f.lc(), static_cast<std::uint64_t>(g.degree()), K.one());
  if (g.degree() == 0) return power(g.lc(), static_cast<std::uint64_t>(f.degree()), K.one());
  return sylvester_matrix(f, g).det();
}

/// (-1)^{n(n-1)/2} Res(f, f') / lc(f).
template <FieldDescriptor F>
elem_t<F> discriminant(const UniPoly<F>& f) {
  const int n = f.degree();
  if (n < 2) fail(ErrorCode::DegreeTooSmall, "discriminant needs degree >= 2");
  auto r = resultant(f, f.derivative()) / f.lc();
  if ((static_cast<long>(n) * (n - 1) / 2) % 2 != 0) r = -r;
  return r;
}

/// Largest k with (x - a)^k | f.
template <FieldDescriptor F>
int ord_at(const UniPoly<F>& f, const elem_t<F>& a) {
  if (f.is_zero()) fail(ErrorCode::UndefinedOrder, "order of vanishing of the zero polynomial");
  const F& K = f.field();
  auto c = f.coeffs();
  int k = 0;
  while (c.size() > 1) {
    // synthetic division by (x - a)
    std::vector<elem_t<F>> q(c.size() - 1, K.zero());
    elem_t<F> acc = K.zero();
    for (std::size_t i = c.size(); i-- > 0;) {
      acc = acc * a + c[i];
      if (i > 0) q[i - 1] = acc;
    }
    if (!acc.is_zero()) break;
    c = std::move(q);
    ++k;
  }
  return k;
}

/// Unique polynomial of degree < samples.size() through the samples (Newton form).
template <FieldDescriptor F>
UniPoly<F> interpolate_univariate(const F& K, std::span<const std::pair<elem_t<F>, elem_t<F>>> samples) {
  using E = elem_t<F>;
  const std::size_t n = samples.size();
  if (n == 0) fail(ErrorCode::InvalidArgument, "interpolation needs at least one sample");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (samples[i].first == samples[j].first) fail(ErrorCode::DuplicateNode, "duplicate abscissa " + to_string(samples[i].first));
  std::vector<E> dd(n);
  for (std::size_t i = 0; i < n; ++i) dd[i] = samples[i].second;
  for (std::size_t level = 1; level < n; ++level)
    for (std::size_t i = n - 1; i >= level; --i)
      dd[i] = (dd[i] - dd[i - 1]) / (samples[i].first - samples[i - level].first);
  UniPoly<F> p = UniPoly<F>::constant(K, dd[n - 1]);
  for (std::size_t i = n - 1; i-- > 0;) {
    p = p * UniPoly<F>(K, {-samples[i].first, K.one()}) + UniPoly<F>::constant(K, dd[i]);
  }
  return p;
}

template <FieldDescriptor F>
UniPoly<F> interpolate_univariate(const F& K, const std::vector<std::pair<elem_t<F>, elem_t<F>>>& samples) {
  return interpolate_univariate(K, std::span<const std::pair<elem_t<F>, elem_t<F>>>(samples));
}

/// Vandermonde determinant prod_{i<j} (x_j - x_i).
template <FieldDescriptor F>
elem_t<F> vandermonde_det(const F& K, std::span<const elem_t<F>> xs) {
  auto d = K.one();
  for (std::size_t i = 0; i < xs.size(); ++i)
    for (std::size_t j = i + 1; j < xs.size(); ++j) d *= xs[j] - xs[i];
  return d;
}

template <class E>
struct Root {
  E value;
  int multiplicity;
};

namespace detail {

/// Splits a squarefree product of distinct linear factors over F_p, p odd.
inline void equal_degree_split(const UniPoly<PrimeField>& g, std::vector<Fp>& out) {
  const PrimeField& K = g.field();
  if (g.degree() <= 0) return;
  if (g.degree() == 1) {
    out.push_back(-g.coeff(0) / g.coeff(1));
    return;
  }
  for (std::uint64_t delta = 0;; ++delta) {
    UniPoly<PrimeField> shifted(K, {K.from_int(static_cast<long>(delta % K.p)), K.one()});
    auto h = powmod(shifted, (K.p - 1) / 2, g) - UniPoly<PrimeField>::constant(K, K.one());
    auto d = gcd(h, g);
    if (d.degree() > 0 && d.degree() < g.degree()) {
      equal_degree_split(d, out);
      equal_degree_split(exact_div(g, d), out);
      return;
    }
    if (delta > 4 * K.p + 64) fail(ErrorCode::InvariantViolation, "root splitting did not terminate");
  }
}

inline std::vector<mpz_class> divisors(mpz_class n) {
  n = abs(n);
  std::vector<std::pair<mpz_class, int>> fac;
  for (unsigned long q = 2; q <= 1000000UL && mpz_class(q) * q <= n; ++q) {
    if (n % q != 0) continue;
    int e = 0;
    while (n % q == 0) { n /= q; ++e; }
    fac.emplace_back(mpz_class(q), e);
  }
  if (n > 1) {
    if (mpz_probab_prime_p(n.get_mpz_t(), 30) == 0)
      fail(ErrorCode::Unsupported, "rational root search: cannot factor " + n.get_str());
    fac.emplace_back(n, 1);
  }
  std::vector<mpz_class> divs{1};
  for (auto& [q, e] : fac) {
    const std::size_t base = divs.size();
    mpz_class pw = 1;
    for (int k = 1; k <= e; ++k) {
      pw *= q;
      for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pw);
    }
  }
  return divs;
}

}  // namespace detail

/// All roots of f lying in the base field, with multiplicities.
inline std::vector<Root<Fp>> roots(const UniPoly<PrimeField>& f) {
  if (f.is_zero()) fail(ErrorCode::UndefinedOrder, "roots of the zero polynomial");
  const PrimeField& K = f.field();
  std::vector<Fp> distinct;
  if (K.p < 64) {
    for (std::uint64_t a = 0; a < K.p; ++a)
      if (f(Fp(a, K.p)).is_zero()) distinct.emplace_back(a, K.p);
  } else if (f.degree() > 0) {
    auto x = UniPoly<PrimeField>::x(K);
    auto xp = powmod(x, K.p, f.monic());
    auto g = gcd(xp - x, f);
    detail::equal_degree_split(g, distinct);
  }
  std::sort(distinct.begin(), distinct.end());
  std::vector<Root<Fp>> out;
  for (auto& r : distinct) out.push_back({r, ord_at(f, r)});
  return out;
}

inline std::vector<Root<Rational>> roots(const UniPoly<RationalField>& f) {
  if (f.is_zero()) fail(ErrorCode::UndefinedOrder, "roots of the zero polynomial");
  std::vector<Rational> distinct;
  // integer model of f
  mpz_class lcm_den = 1;
  for (const auto& c : f.coeffs()) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.den().get_mpz_t());
  std::vector<mpz_class> ic;
  for (const auto& c : f.coeffs()) ic.push_back(c.num() * (lcm_den / c.den()));
  std::size_t low = 0;
  while (low < ic.size() && ic[low] == 0) ++low;
  if (low > 0) distinct.emplace_back(0);
  if (ic.size() - low > 1) {
    auto nums = detail::divisors(ic[low]);
    auto dens = detail::divisors(ic.back());
    for (const auto& d : dens)
      for (const auto& n : nums)
        for (int sign : {1, -1}) {
          Rational r(mpz_class(sign * n), d);
          if (f(r).is_zero() && std::find(distinct.begin(), distinct.end(), r) == distinct.end())
            distinct.push_back(r);
        }
  }
  std::sort(distinct.begin(), distinct.end());
  std::vector<Root<Rational>> out;
  for (auto& r : distinct) out.push_back({r, ord_at(f, r)});
  return out;
}

/// True when f is a product of linear factors over its base field.
template <FieldDescriptor F>
bool splits(const UniPoly<F>& f, const std::vector<Root<elem_t<F>>>& rs) {
  int total = 0;
  for (const auto& r : rs) total += r.multiplicity;
  return total == f.degree();
}

}  // namespace g2k

#endif  // G2K_UNIPOLY_HPP
