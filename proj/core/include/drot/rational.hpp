#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <concepts>
#include <climits>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <type_traits>
#include <utility>

namespace drot {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational number, always kept in lowest terms with a positive
/// denominator. This is the only number type used for the rotation
/// parameter and for interval endpoints.
///
/// Values whose numerator and denominator fit in int64 are stored inline
/// and combined with 128-bit intermediates; anything larger lives in a
/// boost cpp_rational.
class Rational {
 public:
  Rational() = default;

  template <std::integral T>
  Rational(T n) {  // NOLINT(google-explicit-constructor)
    if constexpr (std::is_signed_v<T> || sizeof(T) < sizeof(std::int64_t)) {
      num_ = static_cast<std::int64_t>(n);
    } else if (n <= static_cast<T>(INT64_MAX)) {
      num_ = static_cast<std::int64_t>(n);
    } else {
      assign(boost::multiprecision::cpp_rational(BigInt(n)));
    }
  }

  /// Throws std::domain_error when den == 0.
  Rational(std::int64_t num, std::int64_t den);
  Rational(const BigInt& num, const BigInt& den);

  Rational(const Rational& other);
  Rational& operator=(const Rational& other);
  Rational(Rational&&) noexcept = default;
  Rational& operator=(Rational&&) noexcept = default;
  ~Rational() = default;

  /// Accepts "n", "-n", "p/q", "-p/q" (q may be negative; the result is
  /// canonicalized). Throws std::invalid_argument on anything else.
  static Rational parse(std::string_view text);

  BigInt numerator() const;
  BigInt denominator() const;

  /// Numerator and denominator when both fit in int64.
  std::optional<std::pair<std::int64_t, std::int64_t>> to_int64_pair() const;

  bool is_integer() const;
  int sign() const;
  BigInt floor() const;
  BigInt ceil() const;

  /// "p/q", or "n" for integers.
  std::string to_string() const;

  Rational operator-() const;
  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

  friend bool operator==(const Rational& a, const Rational& b) { return equal(a, b); }
  friend bool operator<(const Rational& a, const Rational& b) { return less(a, b); }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

 private:
  static bool equal(const Rational& a, const Rational& b);
  static bool less(const Rational& a, const Rational& b);

  __extension__ typedef __int128 i128_t;
  static void set(Rational& r, i128_t n, i128_t d);

  boost::multiprecision::cpp_rational wide() const;
  // Stores v inline when it fits, otherwise in big_.
  void assign(const boost::multiprecision::cpp_rational& v);

  // Inline value; meaningful only when big_ is null.
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  std::unique_ptr<boost::multiprecision::cpp_rational> big_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

Rational midpoint(const Rational& a, const Rational& b);
const Rational& min(const Rational& a, const Rational& b);
const Rational& max(const Rational& a, const Rational& b);

/// Fixed-point decimal rendering rounded half away from zero, computed
/// exactly. Used wherever a human-readable average is printed.
std::string to_decimal(const Rational& r, int digits);

}  // namespace drot
