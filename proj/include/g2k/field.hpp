#ifndef G2K_FIELD_HPP
#define G2K_FIELD_HPP

// Exact scalars: arbitrary-precision rationals (GMP) and prime fields F_p, p < 2^62.
//
// Generic code is written against a *field descriptor* F (RationalField or
// PrimeField) whose element_type carries everything needed for arithmetic.
// The descriptor is only needed to manufacture constants from nothing.

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <cstdint>
#include <optional>
#include <ostream>
#include <random>
#include <string>
#include <utility>

#include "g2k/errors.hpp"

namespace g2k {

using Rng = std::mt19937_64;

/// Uniform integer in [0, n). Rejection sampling, so the stream is portable across
/// standard libraries (std::uniform_int_distribution is not).
inline std::uint64_t uniform_below(Rng& rng, std::uint64_t n) {
  if (n == 0) fail(ErrorCode::InvalidArgument, "uniform_below(0)");
  const std::uint64_t limit = UINT64_MAX - (UINT64_MAX % n);
  for (;;) {
    std::uint64_t r = rng();
    if (r < limit) return r % n;
  }
}

// ---------------------------------------------------------------------------
// Rationals

class Rational {
 public:
  Rational() = default;
  Rational(long n) : v_(n) {}  // NOLINT(google-explicit-constructor)
  Rational(int n) : v_(n) {}   // NOLINT(google-explicit-constructor)
  explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }
  Rational(const mpz_class& num, const mpz_class& den) : v_(num, den) {
    if (den == 0) fail(ErrorCode::DivisionByZero, "rational with zero denominator");
    v_.canonicalize();
  }

  const mpq_class& value() const { return v_; }
  mpz_class num() const { return v_.get_num(); }
  mpz_class den() const { return v_.get_den(); }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_one() const { return v_ == 1; }

  Rational inverse() const {
    if (is_zero()) fail(ErrorCode::DivisionByZero, "inverse of 0 in Q");
    return Rational(mpq_class(1) / v_);
  }

  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) fail(ErrorCode::DivisionByZero, "division by 0 in Q");
    v_ /= o.v_;
    return *this;
  }
  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  /// "num/den", or just "num" when the denominator is 1.
  std::string to_string() const {
    if (v_.get_den() == 1) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
  }

 private:
  mpq_class v_;
};

inline std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

// ---------------------------------------------------------------------------
// Prime field elements. The modulus travels with the value; a default-constructed
// element is a zero with no modulus yet and adopts the modulus of its partner.

class Fp {
 public:
  Fp() = default;
  Fp(std::uint64_t v, std::uint64_t p) : v_(p ? v % p : 0), p_(p) {}

  std::uint64_t value() const { return v_; }
  std::uint64_t modulus() const { return p_; }
  bool is_zero() const { return v_ == 0; }
  bool is_one() const { return v_ == 1; }

  Fp operator-() const { return Fp(v_ == 0 ? 0 : p_ - v_, p_); }

  Fp& operator+=(const Fp& o) {
    adopt(o);
    v_ += o.v_;
    if (v_ >= p_) v_ -= p_;
    return *this;
  }
  Fp& operator-=(const Fp& o) {
    adopt(o);
    v_ = v_ >= o.v_ ? v_ - o.v_ : v_ + p_ - o.v_;
    return *this;
  }
  Fp& operator*=(const Fp& o) {
    adopt(o);
    v_ = static_cast<std::uint64_t>((static_cast<unsigned __int128>(v_) * o.v_) % p_);
    return *this;
  }
  Fp& operator/=(const Fp& o) { return *this *= o.inverse(); }

  friend Fp operator+(Fp a, const Fp& b) { return a += b; }
  friend Fp operator-(Fp a, const Fp& b) { return a -= b; }
  friend Fp operator*(Fp a, const Fp& b) { return a *= b; }
  friend Fp operator/(Fp a, const Fp& b) { return a /= b; }

  Fp pow(std::uint64_t e) const {
    Fp base = *this, r(1, p_);
    while (e) {
      if (e & 1) r *= base;
      base *= base;
      e >>= 1;
    }
    return r;
  }

  Fp inverse() const {
    if (is_zero()) fail(ErrorCode::DivisionByZero, "inverse of 0 in F_p");
    // extended Euclid on signed 128-bit to stay exact for p < 2^62
    __int128 t = 0, nt = 1, r = p_, nr = v_;
    while (nr != 0) {
      __int128 q = r / nr;
      std::tie(t, nt) = std::pair<__int128, __int128>(nt, t - q * nt);
      std::tie(r, nr) = std::pair<__int128, __int128>(nr, r - q * nr);
    }
    if (t < 0) t += p_;
    return Fp(static_cast<std::uint64_t>(t), p_);
  }

  friend bool operator==(const Fp& a, const Fp& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Fp& a, const Fp& b) { return a.v_ <=> b.v_; }

  std::string to_string() const { return std::to_string(v_); }

 private:
  void adopt(const Fp& o) {
    if (p_ == 0) p_ = o.p_;
  }

  std::uint64_t v_ = 0;
  std::uint64_t p_ = 0;
};

inline std::ostream& operator<<(std::ostream& os, const Fp& a) { return os << a.to_string(); }

// ---------------------------------------------------------------------------
// Field descriptors

namespace detail {

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

inline std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

/// Deterministic Miller-Rabin for 64-bit inputs.
inline bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % q == 0) return n == q;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) { d >>= 1; ++s; }
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) { composite = false; break; }
    }
    if (composite) return false;
  }
  return true;
}

}  // namespace detail

struct RationalField {
  using element_type = Rational;

  static constexpr bool is_finite = false;

  Rational zero() const { return Rational(0); }
  Rational one() const { return Rational(1); }
  Rational from_int(long n) const { return Rational(n); }
  std::uint64_t characteristic() const { return 0; }
  std::string name() const { return "Q"; }

  /// Accepts "n" or "n/d" in decimal.
  Rational parse(const std::string& s) const {
    try {
      auto slash = s.find('/');
      if (slash == std::string::npos) return Rational(mpz_class(s), mpz_class(1));
      return Rational(mpz_class(s.substr(0, slash)), mpz_class(s.substr(slash + 1)));
    } catch (const std::invalid_argument&) {
      fail(ErrorCode::ParseError, "bad rational '" + s + "'");
    }
  }

  /// Exact square root when both numerator and denominator are perfect squares.
  std::optional<Rational> sqrt(const Rational& a) const {
    if (a < Rational(0)) return std::nullopt;
    mpz_class n = a.num(), d = a.den();
    if (mpz_perfect_square_p(n.get_mpz_t()) == 0 || mpz_perfect_square_p(d.get_mpz_t()) == 0) return std::nullopt;
    mpz_class rn, rd;
    mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
    return Rational(rn, rd);
  }

  bool is_square(const Rational& a) const { return sqrt(a).has_value(); }

  friend bool operator==(const RationalField&, const RationalField&) { return true; }
};

struct PrimeField {
  using element_type = Fp;

  static constexpr bool is_finite = true;

  explicit PrimeField(std::uint64_t prime) : p(prime) {
    if (prime >= (1ULL << 62) || !detail::is_prime_u64(prime)) {
      fail(ErrorCode::InvalidArgument, "modulus " + std::to_string(prime) + " is not a prime < 2^62");
    }
  }

  std::uint64_t p;

  Fp zero() const { return Fp(0, p); }
  Fp one() const { return Fp(1, p); }
  Fp from_int(long n) const {
    const auto m = static_cast<long long>(p);
    long long r = static_cast<long long>(n) % m;
    if (r < 0) r += m;
    return Fp(static_cast<std::uint64_t>(r), p);
  }
  std::uint64_t characteristic() const { return p; }
  std::string name() const { return "F_" + std::to_string(p); }

  /// Decimal residue; a leading '-' or a "num/den" form is reduced mod p.
  Fp parse(const std::string& s) const {
    try {
      auto slash = s.find('/');
      auto reduce = [&](const std::string& t) {
        mpz_class z(t);
        mpz_class r;
        mpz_fdiv_r_ui(r.get_mpz_t(), z.get_mpz_t(), p);
        return Fp(r.get_ui(), p);
      };
      if (slash == std::string::npos) return reduce(s);
      return reduce(s.substr(0, slash)) / reduce(s.substr(slash + 1));
    } catch (const std::invalid_argument&) {
      fail(ErrorCode::ParseError, "bad F_p residue '" + s + "'");
    }
  }

  Fp random(Rng& rng) const { return Fp(uniform_below(rng, p), p); }

  Fp random_nonzero(Rng& rng) const { return Fp(1 + uniform_below(rng, p - 1), p); }

  bool is_square(const Fp& a) const {
    if (a.is_zero() || p == 2) return true;
    return a.pow((p - 1) / 2).is_one();
  }

  /// Tonelli-Shanks. Returns nullopt for non-residues.
  std::optional<Fp> sqrt(const Fp& a) const {
    if (a.is_zero()) return zero();
    if (p == 2) return a;
    if (!is_square(a)) return std::nullopt;
    std::uint64_t q = p - 1;
    int s = 0;
    while ((q & 1) == 0) { q >>= 1; ++s; }
    Fp z(2, p);
    while (is_square(z)) z += one();
    Fp c = z.pow(q);
    Fp r = a.pow((q + 1) / 2);
    Fp t = a.pow(q);
    int m = s;
    while (!t.is_one()) {
      int i = 0;
      Fp t2 = t;
      while (!t2.is_one()) { t2 *= t2; ++i; }
      Fp b = c;
      for (int j = 0; j < m - i - 1; ++j) b *= b;
      r *= b;
      c = b * b;
      t *= c;
      m = i;
    }
    return r;
  }

  friend bool operator==(const PrimeField& a, const PrimeField& b) { return a.p == b.p; }
};

template <class F>
concept FieldDescriptor = requires(const F& f, long n, const std::string& s) {
  typename F::element_type;
  { f.zero() } -> std::same_as<typename F::element_type>;
  { f.one() } -> std::same_as<typename F::element_type>;
  { f.from_int(n) } -> std::same_as<typename F::element_type>;
  { f.parse(s) } -> std::same_as<typename F::element_type>;
  { f.name() } -> std::convertible_to<std::string>;
  { F::is_finite } -> std::convertible_to<bool>;
};

template <class F>
using elem_t = typename F::element_type;

template <class E>
E power(E base, std::uint64_t e, E one) {
  E r = std::move(one);
  while (e) {
    if (e & 1) r *= base;
    base *= base;
    e >>= 1;
  }
  return r;
}

inline std::string to_string(const Rational& r) { return r.to_string(); }
inline std::string to_string(const Fp& a) { return a.to_string(); }

}  // namespace g2k

#endif  // G2K_FIELD_HPP
