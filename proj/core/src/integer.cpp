#include "fqk/integer.hpp"

#include <ostream>
#include <stdexcept>

namespace fqk {

namespace {

mpz_class as_mpz(const Integer& v) { return v.to_mpz(); }

void set_int64(mpz_t z, std::int64_t v) {
  // mpz_set_si takes long, which is 64-bit on every supported target.
  static_assert(sizeof(long) == sizeof(std::int64_t));
  mpz_set_si(z, static_cast<long>(v));
}

}  // namespace

Integer::Integer(const mpz_class& v) {
  if (mpz_fits_slong_p(v.get_mpz_t()) != 0) {
    small_ = mpz_get_si(v.get_mpz_t());
  } else {
    big_ = std::make_unique<mpz_class>(v);
  }
}

Integer Integer::from_string(std::string_view text) {
  mpz_class z;
  if (z.set_str(std::string(text), 10) != 0) {
    throw std::invalid_argument("not an integer: " + std::string(text));
  }
  return Integer(z);
}

Integer::Integer(const Integer& other) : small_(other.small_) {
  if (other.big_) big_ = std::make_unique<mpz_class>(*other.big_);
}

Integer& Integer::operator=(const Integer& other) {
  if (this == &other) return *this;
  small_ = other.small_;
  if (other.big_) {
    big_ = std::make_unique<mpz_class>(*other.big_);
  } else {
    big_.reset();
  }
  return *this;
}

int Integer::sign() const noexcept {
  if (big_) return mpz_sgn(big_->get_mpz_t());
  return (small_ > 0) - (small_ < 0);
}

mpz_class Integer::to_mpz() const {
  if (big_) return *big_;
  mpz_class z;
  set_int64(z.get_mpz_t(), small_);
  return z;
}

std::string Integer::to_string() const {
  if (big_) return big_->get_str();
  return std::to_string(small_);
}

void Integer::demote() {
  if (big_ && mpz_fits_slong_p(big_->get_mpz_t()) != 0) {
    small_ = mpz_get_si(big_->get_mpz_t());
    big_.reset();
  }
}

Integer& Integer::operator+=(const Integer& rhs) {
  if (!big_ && !rhs.big_) {
    std::int64_t out = 0;
    if (!__builtin_add_overflow(small_, rhs.small_, &out)) {
      small_ = out;
      return *this;
    }
  }
  big_ = std::make_unique<mpz_class>(as_mpz(*this) + as_mpz(rhs));
  demote();
  return *this;
}

Integer& Integer::operator-=(const Integer& rhs) {
  if (!big_ && !rhs.big_) {
    std::int64_t out = 0;
    if (!__builtin_sub_overflow(small_, rhs.small_, &out)) {
      small_ = out;
      return *this;
    }
  }
  big_ = std::make_unique<mpz_class>(as_mpz(*this) - as_mpz(rhs));
  demote();
  return *this;
}

Integer& Integer::operator*=(const Integer& rhs) {
  if (!big_ && !rhs.big_) {
    std::int64_t out = 0;
    if (!__builtin_mul_overflow(small_, rhs.small_, &out)) {
      small_ = out;
      return *this;
    }
  }
  big_ = std::make_unique<mpz_class>(as_mpz(*this) * as_mpz(rhs));
  demote();
  return *this;
}

Integer Integer::operator-() const {
  if (!big_ && small_ != INT64_MIN) return Integer(-small_);
  return Integer(mpz_class(-as_mpz(*this)));
}

bool operator==(const Integer& a, const Integer& b) noexcept {
  if (!a.big_ && !b.big_) return a.small_ == b.small_;
  // Normalized values never keep a fitting value in big form.
  if (!a.big_ || !b.big_) return false;
  return mpz_cmp(a.big_->get_mpz_t(), b.big_->get_mpz_t()) == 0;
}

std::strong_ordering operator<=>(const Integer& a, const Integer& b) noexcept {
  if (!a.big_ && !b.big_) return a.small_ <=> b.small_;
  int c = 0;
  if (a.big_ && b.big_) {
    c = mpz_cmp(a.big_->get_mpz_t(), b.big_->get_mpz_t());
  } else if (a.big_) {
    c = mpz_cmp_si(a.big_->get_mpz_t(), static_cast<long>(b.small_));
  } else {
    c = -mpz_cmp_si(b.big_->get_mpz_t(), static_cast<long>(a.small_));
  }
  return c <=> 0;
}

std::ostream& operator<<(std::ostream& os, const Integer& v) {
  return os << v.to_string();
}

Integer abs(const Integer& v) { return v.sign() < 0 ? -v : v; }

Integer floor_div(const Integer& a, const Integer& b) {
  if (b.is_zero()) throw std::domain_error("division by zero");
  if (a.is_small() && b.is_small() &&
      !(a.small_value() == INT64_MIN && b.small_value() == -1)) {
    std::int64_t x = a.small_value();
    std::int64_t y = b.small_value();
    std::int64_t q = x / y;
    if ((x % y != 0) && ((x < 0) != (y < 0))) --q;
    return Integer(q);
  }
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), a.to_mpz().get_mpz_t(), b.to_mpz().get_mpz_t());
  return Integer(q);
}

Integer floor_mod(const Integer& a, const Integer& b) {
  return a - floor_div(a, b) * b;
}

Integer nearest_div(const Integer& a, const Integer& b) {
  Integer q = floor_div(a, b);
  Integer r = a - q * b;  // sign(r) == sign(b), |r| < |b|
  Integer twice = r + r;
  if (abs(twice) > abs(b)) q += 1;
  return q;
}

Integer exact_div(const Integer& a, const Integer& b) {
  if (a.is_small() && b.is_small() && b.small_value() != 0 &&
      !(a.small_value() == INT64_MIN && b.small_value() == -1)) {
    return Integer(a.small_value() / b.small_value());
  }
  mpz_class q;
  mpz_divexact(q.get_mpz_t(), a.to_mpz().get_mpz_t(), b.to_mpz().get_mpz_t());
  return Integer(q);
}

bool divides(const Integer& d, const Integer& a) {
  if (d.is_zero()) return a.is_zero();
  if (d.is_small() && a.is_small()) {
    if (d.small_value() == -1) return true;
    return a.small_value() % d.small_value() == 0;
  }
  return mpz_divisible_p(a.to_mpz().get_mpz_t(), d.to_mpz().get_mpz_t()) != 0;
}

Integer gcd(const Integer& a, const Integer& b) {
  if (a.is_small() && b.is_small() && a.small_value() != INT64_MIN &&
      b.small_value() != INT64_MIN) {
    std::int64_t x = a.small_value() < 0 ? -a.small_value() : a.small_value();
    std::int64_t y = b.small_value() < 0 ? -b.small_value() : b.small_value();
    while (y != 0) {
      std::int64_t t = x % y;
      x = y;
      y = t;
    }
    return Integer(x);
  }
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), a.to_mpz().get_mpz_t(), b.to_mpz().get_mpz_t());
  return Integer(g);
}

}  // namespace fqk
