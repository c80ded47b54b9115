#pragma once

#include <compare>
#include <concepts>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace fqk {

/// Exact integer. Values that fit in 64 bits live inline; anything larger
/// is promoted to a heap-allocated mpz and demoted again when it shrinks.
class Integer {
 public:
  Integer() = default;

  template <std::integral T>
  Integer(T v) {  // NOLINT(google-explicit-constructor)
    if constexpr (std::is_signed_v<T> || sizeof(T) < sizeof(std::int64_t)) {
      small_ = static_cast<std::int64_t>(v);
    } else if (v <= static_cast<T>(INT64_MAX)) {
      small_ = static_cast<std::int64_t>(v);
    } else {
      big_ = std::make_unique<mpz_class>();
      mpz_set_ui(big_->get_mpz_t(), static_cast<unsigned long>(v));
    }
  }

  explicit Integer(const mpz_class& v);
  static Integer from_string(std::string_view text);

  Integer(const Integer& other);
  Integer(Integer&&) noexcept = default;
  Integer& operator=(const Integer& other);
  Integer& operator=(Integer&&) noexcept = default;
  ~Integer() = default;

  [[nodiscard]] bool is_small() const noexcept { return !big_; }
  [[nodiscard]] bool is_zero() const noexcept { return !big_ && small_ == 0; }
  [[nodiscard]] int sign() const noexcept;
  [[nodiscard]] bool is_unit() const noexcept {
    return !big_ && (small_ == 1 || small_ == -1);
  }
  /// Only meaningful when is_small().
  [[nodiscard]] std::int64_t small_value() const noexcept { return small_; }
  [[nodiscard]] mpz_class to_mpz() const;
  [[nodiscard]] std::string to_string() const;

  Integer& operator+=(const Integer& rhs);
  Integer& operator-=(const Integer& rhs);
  Integer& operator*=(const Integer& rhs);

  friend Integer operator+(Integer a, const Integer& b) { return a += b; }
  friend Integer operator-(Integer a, const Integer& b) { return a -= b; }
  friend Integer operator*(Integer a, const Integer& b) { return a *= b; }
  Integer operator-() const;

  friend bool operator==(const Integer& a, const Integer& b) noexcept;
  friend std::strong_ordering operator<=>(const Integer& a,
                                          const Integer& b) noexcept;

  friend std::ostream& operator<<(std::ostream& os, const Integer& v);

 private:
  void demote();

  std::int64_t small_ = 0;
  std::unique_ptr<mpz_class> big_;
};

[[nodiscard]] Integer abs(const Integer& v);
/// Floor division: q = floor(a / b), r = a - q b with sign(r) = sign(b).
[[nodiscard]] Integer floor_div(const Integer& a, const Integer& b);
[[nodiscard]] Integer floor_mod(const Integer& a, const Integer& b);
/// Quotient rounded to nearest (ties toward -inf); keeps SNF remainders small.
[[nodiscard]] Integer nearest_div(const Integer& a, const Integer& b);
/// Exact division; b must divide a.
[[nodiscard]] Integer exact_div(const Integer& a, const Integer& b);
[[nodiscard]] bool divides(const Integer& d, const Integer& a);
[[nodiscard]] Integer gcd(const Integer& a, const Integer& b);

}  // namespace fqk
