#include "gplab/arith.hpp"

#include <atomic>
#include <cctype>
#include <charconv>
#include <cmath>

namespace gplab {

namespace {

std::atomic<Index> g_bound{Index{1} << 62};

Index ipow10(int e) {
  Index r = 1;
  for (int i = 0; i < e; ++i) r *= 10;
  return r;
}

}  // namespace

Index absolute_bound() noexcept { return g_bound.load(std::memory_order_relaxed); }

void set_absolute_bound(Index bound) {
  if (bound < 1) throw DomainError("absolute bound must be positive");
  g_bound.store(bound, std::memory_order_relaxed);
}

bool try_mul(Index a, Index b, Index& out) noexcept {
  Wide p = static_cast<Wide>(a) * b;
  Wide lim = absolute_bound();
  if (p > lim || p < -lim) return false;
  out = static_cast<Index>(p);
  return true;
}

Index checked_mul(Index a, Index b) {
  Index out;
  if (!try_mul(a, b, out))
    throw OverflowError("product " + std::to_string(a) + " * " +
                        std::to_string(b) + " exceeds the absolute bound");
  return out;
}

Index checked_add(Index a, Index b) {
  Wide s = static_cast<Wide>(a) + b;
  Wide lim = absolute_bound();
  if (s > lim || s < -lim)
    throw OverflowError("sum " + std::to_string(a) + " + " + std::to_string(b) +
                        " exceeds the absolute bound");
  return static_cast<Index>(s);
}

bool try_pow(Index base, unsigned exponent, Index& out) noexcept {
  Index r = 1;
  for (unsigned i = 0; i < exponent; ++i)
    if (!try_mul(r, base, r)) return false;
  out = r;
  return true;
}

Index checked_pow(Index base, unsigned exponent) {
  Index out;
  if (!try_pow(base, exponent, out))
    throw OverflowError(std::to_string(base) + "^" + std::to_string(exponent) +
                        " exceeds the absolute bound");
  return out;
}

Index lcm_checked(Index a, Index b) {
  if (a == 0 || b == 0) return 0;
  return checked_mul(a / gcd(a, b), b < 0 ? -b : b);
}

Index mulmod(Index a, Index b, Index m) noexcept {
  return static_cast<Index>(mod(static_cast<Wide>(a) * b, static_cast<Wide>(m)));
}

Index ext_gcd(Index a, Index b, Index& x, Index& y) noexcept {
  Index old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
  while (r != 0) {
    Index q = old_r / r;
    Index tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
    tmp = old_t - q * t;
    old_t = t;
    t = tmp;
  }
  if (old_r < 0) {
    old_r = -old_r;
    old_s = -old_s;
    old_t = -old_t;
  }
  x = old_s;
  y = old_t;
  return old_r;
}

Index modinv(Index a, Index m) {
  if (m < 1) throw DomainError("modulus must be positive");
  if (m == 1) return 0;
  Index x, y;
  if (ext_gcd(mod(a, m), m, x, y) != 1)
    throw DomainError(std::to_string(a) + " is not invertible modulo " +
                      std::to_string(m));
  return mod(x, m);
}

std::string to_string(Wide v) {
  if (v == 0) return "0";
  bool neg = v < 0;
  std::string s;
  while (v != 0) {
    int d = static_cast<int>(v % 10);
    s.push_back(static_cast<char>('0' + (d < 0 ? -d : d)));
    v /= 10;
  }
  if (neg) s.push_back('-');
  return {s.rbegin(), s.rend()};
}

Rational::Rational(Index num, Index den) {
  if (den == 0) throw DomainError("zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  Index g = gcd(num, den);
  num_ = num / g;
  den_ = den / g;
}

namespace {

Rational make_rational(Wide num, Wide den) {
  if (den < 0) {
    num = -num;
    den = -den;
  }
  Wide a = num < 0 ? -num : num, b = den;
  while (b != 0) {
    Wide t = a % b;
    a = b;
    b = t;
  }
  if (a > 1) {
    num /= a;
    den /= a;
  }
  constexpr Wide lim = std::numeric_limits<Index>::max();
  if (num > lim || num < -lim || den > lim)
    throw OverflowError("rational result does not fit in 64 bits");
  return Rational(static_cast<Index>(num), static_cast<Index>(den));
}

}  // namespace

Rational operator+(const Rational& a, const Rational& b) {
  return make_rational(static_cast<Wide>(a.num()) * b.den() +
                           static_cast<Wide>(b.num()) * a.den(),
                       static_cast<Wide>(a.den()) * b.den());
}

Rational operator-(const Rational& a, const Rational& b) {
  return a + Rational(-b.num(), b.den());
}

Rational operator*(const Rational& a, const Rational& b) {
  return make_rational(static_cast<Wide>(a.num()) * b.num(),
                       static_cast<Wide>(a.den()) * b.den());
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.num() == 0) throw DomainError("division by zero");
  return make_rational(static_cast<Wide>(a.num()) * b.den(),
                       static_cast<Wide>(a.den()) * b.num());
}

std::string Rational::str() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

namespace {

Index parse_int(std::string_view s) {
  Index v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size())
    throw DomainError("not an integer: '" + std::string(s) + "'");
  return v;
}

struct Decimal {
  bool negative = false;
  std::string digits;  // integer digits followed by fraction digits
  int scale = 0;       // number of fraction digits
};

Decimal split_decimal(std::string_view text) {
  Decimal d;
  std::size_t i = 0;
  if (i < text.size() && (text[i] == '-' || text[i] == '+'))
    d.negative = text[i++] == '-';
  bool seen_point = false, seen_digit = false;
  int exponent = 0;
  for (; i < text.size(); ++i) {
    char c = text[i];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      d.digits.push_back(c);
      seen_digit = true;
      if (seen_point) ++d.scale;
    } else if (c == '.' && !seen_point) {
      seen_point = true;
    } else if ((c == 'e' || c == 'E') && seen_digit) {
      exponent = static_cast<int>(parse_int(text.substr(i + 1)));
      i = text.size();
      break;
    } else {
      throw DomainError("malformed number: '" + std::string(text) + "'");
    }
  }
  if (!seen_digit) throw DomainError("malformed number: '" + std::string(text) + "'");
  d.scale -= exponent;
  while (d.scale < 0) {
    d.digits.push_back('0');
    ++d.scale;
  }
  return d;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  if (auto slash = text.find('/'); slash != std::string_view::npos)
    return Rational(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
  Decimal d = split_decimal(text);
  // strip leading zeros so long fractions like 0.000...1 still fit
  std::size_t nz = d.digits.find_first_not_of('0');
  std::string digits = nz == std::string::npos ? "0" : d.digits.substr(nz);
  if (digits.size() > 18 || d.scale > 18)
    throw OverflowError("decimal '" + std::string(text) + "' needs more than 18 digits");
  Index num = parse_int(digits);
  return Rational(d.negative ? -num : num, ipow10(d.scale));
}

int compare_fractions(Wide a, Wide b, Wide c, Wide d) noexcept {
  // continued-fraction expansion of both sides in lockstep
  int sign = 1;
  while (true) {
    Wide qa = a / b, qc = c / d;
    if (qa != qc) return qa < qc ? -sign : sign;
    a -= qa * b;
    c -= qc * d;
    if (a == 0 || c == 0) {
      if (a == c) return 0;
      return a == 0 ? -sign : sign;
    }
    // a/b < c/d  <=>  b/a > d/c
    Wide na = b, nb = a, nc = d, nd = c;
    a = na;
    b = nb;
    c = nc;
    d = nd;
    sign = -sign;
  }
}

Approximant Approximant::from_decimal(std::string_view text, bool irrational,
                                      long double precision) {
  Decimal d = split_decimal(text);
  if (d.negative) throw DomainError("approximant must be non-negative");
  long double dropped = 0;
  constexpr int kMaxScale = 18;
  if (d.scale > kMaxScale) {
    int cut = d.scale - kMaxScale;
    dropped = std::pow(10.0L, -static_cast<long double>(kMaxScale));
    d.digits.erase(d.digits.size() - static_cast<std::size_t>(cut));
    d.scale = kMaxScale;
  }
  // reduce modulo 1: only the fractional part matters for rotations
  std::string frac = d.digits.substr(d.digits.size() - static_cast<std::size_t>(d.scale));
  Approximant a;
  Rational r(frac.empty() ? 0 : parse_int(frac), ipow10(d.scale));
  a.num = r.num();
  a.den = r.den();
  a.irrational = irrational;
  long double ulp = std::pow(10.0L, -static_cast<long double>(d.scale));
  a.precision = precision > 0 ? precision : (dropped > 0 ? dropped : ulp);
  return a;
}

std::string Approximant::str() const {
  return std::to_string(num) + "/" + std::to_string(den);
}

Approximant sqrt2_minus_1() {
  return Approximant::from_decimal("0.41421356237309504880", true);
}

Approximant golden_conjugate() {
  return Approximant::from_decimal("0.61803398874989484820", true);
}

}  // namespace gplab
