#pragma once

// Exact integer and rational arithmetic shared by every gplab module.
//
// All quantities are signed 64-bit integers. Products that could exceed the
// configured absolute bound (default 2^62) go through checked_mul/checked_pow
// and raise OverflowError instead of wrapping.

#include <compare>
#include <cstdint>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>

namespace gplab {

using Index = std::int64_t;
using Wide = __int128;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A precondition on an operation's arguments does not hold.
class DomainError : public Error {
 public:
  using Error::Error;
};

class OverflowError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// Largest magnitude any intermediate product may reach.
Index absolute_bound() noexcept;
void set_absolute_bound(Index bound);

// RAII override of the absolute bound, mostly for tests.
class ScopedAbsoluteBound {
 public:
  explicit ScopedAbsoluteBound(Index bound) : saved_(absolute_bound()) {
    set_absolute_bound(bound);
  }
  ~ScopedAbsoluteBound() { set_absolute_bound(saved_); }
  ScopedAbsoluteBound(const ScopedAbsoluteBound&) = delete;
  ScopedAbsoluteBound& operator=(const ScopedAbsoluteBound&) = delete;

 private:
  Index saved_;
};

Index checked_mul(Index a, Index b);
Index checked_add(Index a, Index b);
Index checked_pow(Index base, unsigned exponent);

// Non-throwing variants: false when the result would exceed the bound.
bool try_mul(Index a, Index b, Index& out) noexcept;
bool try_pow(Index base, unsigned exponent, Index& out) noexcept;

inline Index gcd(Index a, Index b) noexcept { return std::gcd(a, b); }
Index lcm_checked(Index a, Index b);

// Least non-negative residue.
inline Index mod(Index a, Index m) noexcept {
  Index r = a % m;
  return r < 0 ? r + m : r;
}
inline Wide mod(Wide a, Wide m) noexcept {
  Wide r = a % m;
  return r < 0 ? r + m : r;
}

// a*b mod m for 0 < m < 2^63, any a, b.
Index mulmod(Index a, Index b, Index m) noexcept;

// Inverse of a modulo m (m >= 1); throws DomainError when gcd(a, m) != 1.
Index modinv(Index a, Index m);

// Extended Euclid: returns g = gcd(a,b) >= 0 with x*a + y*b = g.
Index ext_gcd(Index a, Index b, Index& x, Index& y) noexcept;

std::string to_string(Wide v);

// Sign of a/b - c/d for a, c >= 0 and b, d > 0, without forming products.
int compare_fractions(Wide a, Wide b, Wide c, Wide d) noexcept;

/// Exact rational number with a positive denominator in lowest terms.
class Rational {
 public:
  constexpr Rational() = default;
  Rational(Index num, Index den = 1);

  Index num() const noexcept { return num_; }
  Index den() const noexcept { return den_; }

  long double to_long_double() const noexcept {
    return static_cast<long double>(num_) / static_cast<long double>(den_);
  }

  // Accepts "3", "-3/4", "0.25", "1e-9", "2.5e-3".
  static Rational parse(std::string_view text);

  std::string str() const;

  friend bool operator==(const Rational& a, const Rational& b) noexcept {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a,
                                          const Rational& b) noexcept {
    Wide l = static_cast<Wide>(a.num_) * b.den_;
    Wide r = static_cast<Wide>(b.num_) * a.den_;
    return l < r ? std::strong_ordering::less
                 : (l > r ? std::strong_ordering::greater
                          : std::strong_ordering::equal);
  }

 private:
  Index num_ = 0;
  Index den_ = 1;
};

Rational operator+(const Rational& a, const Rational& b);
Rational operator-(const Rational& a, const Rational& b);
Rational operator*(const Rational& a, const Rational& b);
Rational operator/(const Rational& a, const Rational& b);

/// Rational stand-in p/q for a real number, with a declared bound on
/// |alpha - p/q| and a flag recording whether alpha is meant to be irrational.
struct Approximant {
  Index num = 0;
  Index den = 1;
  long double precision = 0;
  bool irrational = false;

  // Decimal literal such as "0.41421356237309504880"; digits beyond 18 after
  // the point are truncated and folded into the precision. A trailing
  // "precision" argument <= 0 means "one unit in the last kept digit".
  static Approximant from_decimal(std::string_view text, bool irrational,
                                  long double precision = 0);

  std::string str() const;
};

// sqrt(2) - 1 and (sqrt(5) - 1)/2 to 18 decimal places.
Approximant sqrt2_minus_1();
Approximant golden_conjugate();

}  // namespace gplab
