#ifndef G2K_MULTIPOLY_HPP
#define G2K_MULTIPOLY_HPP

// Sparse multivariate polynomials over a field descriptor, plus fractions of
// them compared by cross-multiplication. No multivariate gcd: identities of
// rational functions are checked as Num1 * Den2 == Num2 * Den1.

#include <algorithm>
#include <cstdint>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "g2k/errors.hpp"
#include "g2k/field.hpp"
#include "g2k/matrix.hpp"

namespace g2k {

using Exponents = std::vector<unsigned>;

template <FieldDescriptor F>
class MultiPoly {
 public:
  using E = elem_t<F>;
  using TermMap = std::map<Exponents, E>;

  MultiPoly(F field, std::size_t arity) : field_(std::move(field)), arity_(arity) {}

  static MultiPoly constant(const F& field, std::size_t arity, const E& c) {
    MultiPoly p(field, arity);
    p.add_term(Exponents(arity, 0), c);
    return p;
  }
  static MultiPoly constant(const F& field, std::size_t arity, long c) { return constant(field, arity, field.from_int(c)); }

  static MultiPoly variable(const F& field, std::size_t arity, std::size_t i) {
    if (i >= arity) fail(ErrorCode::InvalidArgument, "variable index out of range");
    Exponents e(arity, 0);
    e[i] = 1;
    MultiPoly p(field, arity);
    p.add_term(e, field.one());
    return p;
  }

  static MultiPoly monomial(const F& field, Exponents e, const E& c) {
    MultiPoly p(field, e.size());
    p.add_term(std::move(e), c);
    return p;
  }

  const F& field() const { return field_; }
  std::size_t arity() const { return arity_; }
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  E coeff(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? field_.zero() : it->second;
  }

  void add_term(Exponents e, const E& c) {
    if (e.size() != arity_) fail(ErrorCode::InvalidArgument, "exponent vector has wrong length");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(std::move(e), c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  int total_degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) {
      int s = 0;
      for (auto k : e) s += static_cast<int>(k);
      d = std::max(d, s);
    }
    return d;
  }

  int degree_in(std::size_t var) const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, static_cast<int>(e[var]));
    return d;
  }

  /// Largest k such that var^k divides the polynomial (0 for the zero polynomial).
  unsigned valuation_in(std::size_t var) const {
    if (terms_.empty()) return 0;
    unsigned v = UINT32_MAX;
    for (const auto& [e, c] : terms_) v = std::min(v, e[var]);
    return v;
  }

  bool is_homogeneous() const {
    int d = -1;
    for (const auto& [e, c] : terms_) {
      int s = 0;
      for (auto k : e) s += static_cast<int>(k);
      if (d >= 0 && s != d) return false;
      d = s;
    }
    return true;
  }

  MultiPoly operator-() const {
    MultiPoly r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
  }

  MultiPoly& operator+=(const MultiPoly& o) {
    check_compatible(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  MultiPoly& operator-=(const MultiPoly& o) {
    check_compatible(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }

  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    a.check_compatible(b);
    MultiPoly r(a.field_, a.arity_);
    Exponents e(a.arity_);
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) {
        for (std::size_t i = 0; i < a.arity_; ++i) e[i] = ea[i] + eb[i];
        r.add_term(e, ca * cb);
      }
    return r;
  }
  friend MultiPoly operator*(MultiPoly a, const E& s) {
    if (s.is_zero()) return MultiPoly(a.field_, a.arity_);
    for (auto& [e, c] : a.terms_) c *= s;
    return a;
  }
  friend MultiPoly operator*(const E& s, MultiPoly a) { return std::move(a) * s; }

  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    return a.arity_ == b.arity_ && a.terms_ == b.terms_;
  }

  E eval(const std::vector<E>& point) const {
    if (point.size() != arity_) fail(ErrorCode::InvalidArgument, "evaluation point has wrong length");
    E acc = field_.zero();
    for (const auto& [e, c] : terms_) {
      E t = c;
      for (std::size_t i = 0; i < arity_; ++i)
        if (e[i]) t *= power(point[i], e[i], field_.one());
      acc += t;
    }
    return acc;
  }

  /// Replace variable `var` by the scalar `value` (arity is kept).
  MultiPoly subst(std::size_t var, const E& value) const {
    MultiPoly r(field_, arity_);
    for (const auto& [e, c] : terms_) {
      Exponents f = e;
      f[var] = 0;
      r.add_term(std::move(f), c * power(value, e[var], field_.one()));
    }
    return r;
  }

  /// Replace variable `var` by the polynomial `g` (same arity).
  MultiPoly subst(std::size_t var, const MultiPoly& g) const {
    check_compatible(g);
    std::vector<MultiPoly> powers{constant(field_, arity_, field_.one())};
    MultiPoly r(field_, arity_);
    for (const auto& [e, c] : terms_) {
      while (powers.size() <= e[var]) powers.push_back(powers.back() * g);
      Exponents f = e;
      f[var] = 0;
      r += monomial(field_, std::move(f), c) * powers[e[var]];
    }
    return r;
  }

  /// Simultaneous substitution x_i -> images[i]; the result lives in the images' ring.
  MultiPoly compose(const std::vector<MultiPoly>& images) const {
    if (images.size() != arity_) fail(ErrorCode::InvalidArgument, "compose needs one image per variable");
    if (images.empty()) return *this;
    const F& K = field_;
    const std::size_t out_arity = images[0].arity();
    std::vector<std::vector<MultiPoly>> powers(arity_, std::vector<MultiPoly>{constant(K, out_arity, K.one())});
    MultiPoly r(K, out_arity);
    for (const auto& [e, c] : terms_) {
      MultiPoly t = constant(K, out_arity, c);
      for (std::size_t i = 0; i < arity_; ++i) {
        while (powers[i].size() <= e[i]) powers[i].push_back(powers[i].back() * images[i]);
        if (e[i]) t *= powers[i][e[i]];
      }
      r += t;
    }
    return r;
  }

  /// Lexicographically largest term.
  std::pair<Exponents, E> leading_term() const {
    if (terms_.empty()) fail(ErrorCode::InvalidArgument, "leading term of zero");
    auto it = terms_.rbegin();
    return {it->first, it->second};
  }

  /// a / b by lex long division; throws InexactDivision if b does not divide a.
  friend MultiPoly exact_div(const MultiPoly& a, const MultiPoly& b) {
    if (b.is_zero()) fail(ErrorCode::DivisionByZero, "multivariate division by zero");
    a.check_compatible(b);
    MultiPoly q(a.field_, a.arity_), r = a;
    auto [lb, lcb] = b.leading_term();
    E inv = a.field_.one() / lcb;
    while (!r.is_zero()) {
      auto [lr, lcr] = r.leading_term();
      Exponents m(a.arity_);
      for (std::size_t i = 0; i < a.arity_; ++i) {
        if (lr[i] < lb[i]) fail(ErrorCode::InexactDivision, "multivariate division leaves a remainder");
        m[i] = lr[i] - lb[i];
      }
      auto t = monomial(a.field_, m, lcr * inv);
      q += t;
      r -= t * b;
    }
    return q;
  }

  std::string to_string(const std::vector<std::string>& names) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      const auto& [e, c] = *it;
      if (!first) os << " + ";
      first = false;
      bool constant_term = std::all_of(e.begin(), e.end(), [](unsigned k) { return k == 0; });
      bool unit = c.is_one();
      if (!unit || constant_term) os << g2k::to_string(c);
      bool need_star = !unit;
      for (std::size_t i = 0; i < arity_; ++i) {
        if (!e[i]) continue;
        if (need_star) os << "*";
        os << (i < names.size() ? names[i] : "v" + std::to_string(i));
        if (e[i] > 1) os << "^" << e[i];
        need_star = true;
      }
    }
    return os.str();
  }

 private:
  void check_compatible(const MultiPoly& o) const {
    if (o.arity_ != arity_) fail(ErrorCode::InvalidArgument, "arity mismatch in multivariate arithmetic");
  }

  F field_;
  std::size_t arity_;
  TermMap terms_;
};

template <FieldDescriptor F>
MultiPoly<F> pow(const MultiPoly<F>& base, unsigned e) {
  MultiPoly<F> r = MultiPoly<F>::constant(base.field(), base.arity(), base.field().one());
  for (unsigned i = 0; i < e; ++i) r *= base;
  return r;
}

template <FieldDescriptor F>
bool divisible_by_variable(const MultiPoly<F>& p, std::size_t var) {
  return p.subst(var, p.field().zero()).is_zero();
}

/// A fraction num / den of polynomials; never reduced, compared by cross-multiplication.
template <FieldDescriptor F>
struct Frac {
  MultiPoly<F> num;
  MultiPoly<F> den;

  static Frac of(MultiPoly<F> p) {
    auto one = MultiPoly<F>::constant(p.field(), p.arity(), p.field().one());
    return {std::move(p), std::move(one)};
  }

  friend Frac operator+(const Frac& a, const Frac& b) {
    if (a.den == b.den) return {a.num + b.num, a.den};
    return {a.num * b.den + b.num * a.den, a.den * b.den};
  }
  friend Frac operator-(const Frac& a, const Frac& b) {
    if (a.den == b.den) return {a.num - b.num, a.den};
    return {a.num * b.den - b.num * a.den, a.den * b.den};
  }
  friend Frac operator*(const Frac& a, const Frac& b) { return {a.num * b.num, a.den * b.den}; }
  friend Frac operator/(const Frac& a, const Frac& b) {
    if (b.num.is_zero()) fail(ErrorCode::DivisionByZero, "division by the zero fraction");
    return {a.num * b.den, a.den * b.num};
  }

  /// Equality as rational functions.
  friend bool same_function(const Frac& a, const Frac& b) { return a.num * b.den == b.num * a.den; }
};

/// Substitute var -> num/den into p, returning an unreduced fraction with
/// denominator den^(deg_var p).
template <FieldDescriptor F>
Frac<F> subst_rational(const MultiPoly<F>& p, std::size_t var, const MultiPoly<F>& num, const MultiPoly<F>& den) {
  const int d = std::max(0, p.degree_in(var));
  const F& K = p.field();
  const std::size_t n = p.arity();
  std::vector<MultiPoly<F>> num_pow{MultiPoly<F>::constant(K, n, K.one())}, den_pow{MultiPoly<F>::constant(K, n, K.one())};
  for (int k = 1; k <= d; ++k) {
    num_pow.push_back(num_pow.back() * num);
    den_pow.push_back(den_pow.back() * den);
  }
  MultiPoly<F> out(K, n);
  for (const auto& [e, c] : p.terms()) {
    Exponents f = e;
    f[var] = 0;
    out += MultiPoly<F>::monomial(K, std::move(f), c) * num_pow[e[var]] * den_pow[static_cast<std::size_t>(d) - e[var]];
  }
  return {std::move(out), den_pow[static_cast<std::size_t>(d)]};
}

template <FieldDescriptor F>
Frac<F> subst_rational(const Frac<F>& q, std::size_t var, const MultiPoly<F>& num, const MultiPoly<F>& den) {
  auto a = subst_rational(q.num, var, num, den);
  auto b = subst_rational(q.den, var, num, den);
  // a.num / den^da  divided by  b.num / den^db
  const int da = std::max(0, q.num.degree_in(var)), db = std::max(0, q.den.degree_in(var));
  if (da >= db) return {a.num, b.num * pow(den, static_cast<unsigned>(da - db))};
  return {a.num * pow(den, static_cast<unsigned>(db - da)), b.num};
}

/// Resultant of two univariate polynomials whose coefficients are multivariate
/// polynomials (given highest degree first), by Bareiss elimination on the
/// Sylvester matrix.
template <FieldDescriptor F>
MultiPoly<F> sylvester_resultant(const std::vector<MultiPoly<F>>& f, const std::vector<MultiPoly<F>>& g) {
  if (f.empty() || g.empty()) fail(ErrorCode::DegenerateResultant, "empty coefficient list");
  const F& K = f[0].field();
  const std::size_t arity = f[0].arity();
  const std::size_t m = f.size() - 1, n = g.size() - 1;
  const std::size_t size = m + n;
  const auto zero = MultiPoly<F>(K, arity);
  const auto one = MultiPoly<F>::constant(K, arity, K.one());
  if (size == 0) return one;
  std::vector<std::vector<MultiPoly<F>>> s(size, std::vector<MultiPoly<F>>(size, zero));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k <= m; ++k) s[i][i + k] = f[k];
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t k = 0; k <= n; ++k) s[n + i][i + k] = g[k];
  return bareiss_det(
      std::move(s), one, [](const MultiPoly<F>& a, const MultiPoly<F>& b) { return exact_div(a, b); },
      [](const MultiPoly<F>& a) { return a.is_zero(); });
}

}  // namespace g2k

#endif  // G2K_MULTIPOLY_HPP
