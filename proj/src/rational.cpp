#include "cvec/rational.hpp"

#include <limits>
#include <ostream>

namespace cvec {
namespace {

using Wide = __int128;

Wide gcd_wide(Wide a, Wide b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    Wide t = a % b;
    a = b;
    b = t;
  }
  return a;
}

bool fits(Wide v) {
  return v >= std::numeric_limits<std::int64_t>::min() &&
         v <= std::numeric_limits<std::int64_t>::max();
}

}  // namespace

Rational::Rational(std::int64_t n, std::int64_t d) {
  if (d == 0) throw std::domain_error("Rational: zero denominator");
  *this = from_wide(n, d);
}

Rational Rational::from_wide(Wide n, Wide d) {
  if (d < 0) {
    n = -n;
    d = -d;
  }
  if (n == 0) return Rational();
  Wide g = gcd_wide(n, d);
  n /= g;
  d /= g;
  if (!fits(n) || !fits(d)) throw OverflowError("Rational: result exceeds 64-bit range");
  Rational r;
  r.num_ = static_cast<std::int64_t>(n);
  r.den_ = static_cast<std::int64_t>(d);
  return r;
}

Rational& Rational::operator+=(const Rational& o) {
  if (den_ == 1 && o.den_ == 1) {
    std::int64_t s;
    if (__builtin_add_overflow(num_, o.num_, &s)) throw OverflowError("Rational: addition overflow");
    num_ = s;
    return *this;
  }
  *this = from_wide(Wide(num_) * o.den_ + Wide(o.num_) * den_, Wide(den_) * o.den_);
  return *this;
}

Rational& Rational::operator-=(const Rational& o) { return *this += -o; }

Rational& Rational::operator*=(const Rational& o) {
  if (num_ == 0 || o.num_ == 0) {
    *this = Rational();
    return *this;
  }
  if (den_ == 1 && o.den_ == 1) {
    std::int64_t p;
    if (__builtin_mul_overflow(num_, o.num_, &p)) throw OverflowError("Rational: multiplication overflow");
    num_ = p;
    return *this;
  }
  *this = from_wide(Wide(num_) * o.num_, Wide(den_) * o.den_);
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.num_ == 0) throw std::domain_error("Rational: division by zero");
  *this = from_wide(Wide(num_) * o.den_, Wide(den_) * o.num_);
  return *this;
}

Rational Rational::operator-() const {
  if (num_ == std::numeric_limits<std::int64_t>::min()) throw OverflowError("Rational: negation overflow");
  Rational r = *this;
  r.num_ = -num_;
  return r;
}

bool operator<(const Rational& a, const Rational& b) {
  return Wide(a.num_) * b.den_ < Wide(b.num_) * a.den_;
}

std::string Rational::str() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.str(); }

}  // namespace cvec
