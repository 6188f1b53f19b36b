#pragma once

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace evidence {

/// Exact rational number backed by GMP. Always kept in lowest terms with a
/// positive denominator; no operation ever rounds.
class Rational {
 public:
  Rational() = default;

  template <std::integral T>
  Rational(T value) {  // NOLINT(google-explicit-constructor)
    if constexpr (std::is_signed_v<T>) {
      value_ = static_cast<long>(value);
    } else {
      value_ = static_cast<unsigned long>(value);
    }
  }

  Rational(std::int64_t num, std::int64_t den);

  explicit Rational(mpq_class value);

  /// Accepts "a", "a/b" and plain decimals such as "0.01" or "-1.5".
  static Rational parse(std::string_view text);

  /// Builds num/den from arbitrary-size decimal integer strings.
  static Rational from_strings(std::string_view num, std::string_view den);

  const mpq_class& get() const { return value_; }

  std::string numerator_string() const;
  std::string denominator_string() const;

  bool numerator_fits_int64() const;
  bool denominator_fits_int64() const;
  std::int64_t numerator_int64() const;
  std::int64_t denominator_int64() const;

  int sign() const { return sgn(value_); }
  bool is_zero() const { return sign() == 0; }
  Rational abs() const;

  double to_double() const { return value_.get_d(); }

  /// "a/b", or "a" when the denominator is 1.
  std::string str() const;

  /// Fixed-point rendering rounded half away from zero. Display only.
  std::string to_decimal(int places) const;

  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
  Rational operator-() const;

  friend bool operator==(const Rational& a, const Rational& b) {
    return cmp(a.value_, b.value_) == 0;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

 private:
  mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace evidence
