#include "evidence/rational.hpp"

#include <cctype>
#include <limits>
#include <ostream>

#include "evidence/error.hpp"

namespace evidence {

namespace {

bool fits_int64(const mpz_class& z) {
  static const mpz_class lo(std::to_string(std::numeric_limits<std::int64_t>::min()));
  static const mpz_class hi(std::to_string(std::numeric_limits<std::int64_t>::max()));
  return z >= lo && z <= hi;
}

std::int64_t to_int64(const mpz_class& z) {
  if (!fits_int64(z)) {
    throw Error(Errc::out_of_range, "integer " + z.get_str() + " does not fit in 64 bits");
  }
  return std::stoll(z.get_str());
}

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

mpz_class parse_integer(std::string_view text, std::string_view whole) {
  std::string_view digits = text;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) digits.remove_prefix(1);
  if (!all_digits(digits)) {
    throw Error(Errc::parse_error, "malformed number '" + std::string(whole) + "'");
  }
  std::string s(text);
  if (s.front() == '+') s.erase(0, 1);
  return mpz_class(s, 10);
}

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw Error(Errc::out_of_range, "zero denominator");
  value_ = mpq_class(mpz_class(std::to_string(num)), mpz_class(std::to_string(den)));
  value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

Rational Rational::from_strings(std::string_view num, std::string_view den) {
  mpz_class n = parse_integer(num, num);
  mpz_class d = parse_integer(den, den);
  if (d == 0) throw Error(Errc::out_of_range, "zero denominator");
  return Rational(mpq_class(n, d));
}

Rational Rational::parse(std::string_view text) {
  if (text.empty()) throw Error(Errc::parse_error, "empty number");
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    return from_strings(text.substr(0, slash), text.substr(slash + 1));
  }
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view int_part = text.substr(0, dot);
    std::string_view frac_part = text.substr(dot + 1);
    bool negative = !int_part.empty() && int_part.front() == '-';
    if (!int_part.empty() && (int_part.front() == '-' || int_part.front() == '+')) {
      int_part.remove_prefix(1);
    }
    if ((!int_part.empty() && !all_digits(int_part)) || (!frac_part.empty() && !all_digits(frac_part)) ||
        (int_part.empty() && frac_part.empty())) {
      throw Error(Errc::parse_error, "malformed number '" + std::string(text) + "'");
    }
    mpz_class scale = 1;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac_part.size());
    mpz_class whole = int_part.empty() ? mpz_class(0) : mpz_class(std::string(int_part), 10);
    mpz_class frac = frac_part.empty() ? mpz_class(0) : mpz_class(std::string(frac_part), 10);
    mpz_class num = whole * scale + frac;
    if (negative) num = -num;
    return Rational(mpq_class(num, scale));
  }
  return Rational(mpq_class(parse_integer(text, text), 1));
}

std::string Rational::numerator_string() const { return value_.get_num().get_str(); }
std::string Rational::denominator_string() const { return value_.get_den().get_str(); }

bool Rational::numerator_fits_int64() const { return fits_int64(value_.get_num()); }
bool Rational::denominator_fits_int64() const { return fits_int64(value_.get_den()); }
std::int64_t Rational::numerator_int64() const { return to_int64(value_.get_num()); }
std::int64_t Rational::denominator_int64() const { return to_int64(value_.get_den()); }

Rational Rational::abs() const { return Rational(mpq_class(::abs(value_))); }

std::string Rational::str() const {
  if (value_.get_den() == 1) return numerator_string();
  return numerator_string() + "/" + denominator_string();
}

std::string Rational::to_decimal(int places) const {
  mpz_class scale = 1;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(places));
  mpz_class num = ::abs(value_.get_num()) * scale * 2 + value_.get_den();
  mpz_class den = value_.get_den() * 2;
  mpz_class scaled;
  mpz_fdiv_q(scaled.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  std::string digits = scaled.get_str();
  if (digits.size() <= static_cast<std::size_t>(places)) {
    digits.insert(0, static_cast<std::size_t>(places) + 1 - digits.size(), '0');
  }
  std::string out;
  if (sign() < 0 && scaled != 0) out += '-';
  out += digits.substr(0, digits.size() - places);
  if (places > 0) {
    out += '.';
    out += digits.substr(digits.size() - places);
  }
  return out;
}

Rational& Rational::operator+=(const Rational& rhs) {
  value_ += rhs.value_;
  return *this;
}
Rational& Rational::operator-=(const Rational& rhs) {
  value_ -= rhs.value_;
  return *this;
}
Rational& Rational::operator*=(const Rational& rhs) {
  value_ *= rhs.value_;
  return *this;
}
Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw Error(Errc::out_of_range, "division by zero");
  value_ /= rhs.value_;
  return *this;
}

Rational Rational::operator-() const { return Rational(mpq_class(-value_)); }

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace evidence
