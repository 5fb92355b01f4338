#pragma once

#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace drdp {

// Exact rational with 64-bit numerator and denominator. Always normalized:
// gcd(num, den) == 1 and den > 0. Model coefficients in this library only ever
// have denominators 1 and 2, so overflow is not a practical concern.
class Rational {
 public:
  constexpr Rational() = default;
  constexpr Rational(std::int64_t value) : num_(value), den_(1) {}  // NOLINT
  Rational(std::int64_t num, std::int64_t den) : num_(num), den_(den) {
    if (den_ == 0) throw std::invalid_argument("Rational: zero denominator");
    normalize();
  }

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }
  bool is_integer() const { return den_ == 1; }
  bool is_zero() const { return num_ == 0; }
  double to_double() const {
    return static_cast<double>(num_) / static_cast<double>(den_);
  }

  Rational operator-() const { return Rational(-num_, den_); }
  friend Rational operator+(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return a + (-b);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw std::domain_error("Rational: division by zero");
    return Rational(a.num_ * b.den_, a.den_ * b.num_);
  }
  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend auto operator<=>(const Rational& a, const Rational& b) {
    // Denominators are positive, so cross multiplication preserves order.
    return a.num_ * b.den_ <=> b.num_ * a.den_;
  }

  // Floor and ceiling towards -inf / +inf.
  std::int64_t floor() const {
    std::int64_t q = num_ / den_;
    if ((num_ % den_ != 0) && (num_ < 0)) --q;
    return q;
  }
  std::int64_t ceil() const {
    std::int64_t q = num_ / den_;
    if ((num_ % den_ != 0) && (num_ > 0)) ++q;
    return q;
  }

  // Exact decimal rendering ("3", "0.5", "-1.25"). Throws when the value has
  // no terminating decimal expansion.
  std::string to_decimal() const {
    std::int64_t d = den_;
    int twos = 0, fives = 0;
    while (d % 2 == 0) { d /= 2; ++twos; }
    while (d % 5 == 0) { d /= 5; ++fives; }
    if (d != 1) {
      throw std::invalid_argument("Rational " + to_string() +
                                  " has no terminating decimal form");
    }
    std::string out = num_ < 0 ? "-" : "";
    std::uint64_t a = static_cast<std::uint64_t>(num_ < 0 ? -num_ : num_);
    out += std::to_string(a / static_cast<std::uint64_t>(den_));
    std::uint64_t rem = a % static_cast<std::uint64_t>(den_);
    if (rem != 0) {
      out += '.';
      int digits = twos > fives ? twos : fives;
      for (int i = 0; i < digits && rem != 0; ++i) {
        rem *= 10;
        out += static_cast<char>('0' + rem / static_cast<std::uint64_t>(den_));
        rem %= static_cast<std::uint64_t>(den_);
      }
    }
    return out;
  }

  std::string to_string() const {
    return den_ == 1 ? std::to_string(num_)
                     : std::to_string(num_) + "/" + std::to_string(den_);
  }

  // Parses "12", "-3", "0.5", "+2.25" or "7/4" exactly.
  static Rational parse(std::string_view text) {
    if (text.empty()) throw std::invalid_argument("Rational: empty number");
    std::size_t i = 0;
    bool negative = false;
    if (text[0] == '+' || text[0] == '-') {
      negative = text[0] == '-';
      i = 1;
    }
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
      Rational n = parse(text.substr(i, slash - i));
      Rational d = parse(text.substr(slash + 1));
      Rational r = n / d;
      return negative ? -r : r;
    }
    std::int64_t num = 0, den = 1;
    bool seen_digit = false, seen_point = false;
    for (; i < text.size(); ++i) {
      char c = text[i];
      if (c == '.' && !seen_point) {
        seen_point = true;
      } else if (c >= '0' && c <= '9') {
        seen_digit = true;
        num = num * 10 + (c - '0');
        if (seen_point) den *= 10;
      } else {
        throw std::invalid_argument("Rational: bad number '" +
                                    std::string(text) + "'");
      }
    }
    if (!seen_digit) {
      throw std::invalid_argument("Rational: bad number '" +
                                  std::string(text) + "'");
    }
    return Rational(negative ? -num : num, den);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.to_string();
  }

 private:
  void normalize() {
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    std::int64_t g = std::gcd(num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

}  // namespace drdp
