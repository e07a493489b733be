#include "drot/rational.hpp"

#include <cctype>
#include <limits>
#include <memory>
#include <ostream>
#include <stdexcept>

namespace drot {

namespace mp = boost::multiprecision;

namespace {

bool fits_int64(const BigInt& v) {
  return v >= std::numeric_limits<std::int64_t>::min() &&
         v <= std::numeric_limits<std::int64_t>::max();
}

BigInt parse_integer(std::string_view text, std::string_view whole) {
  std::size_t i = 0;
  bool negative = false;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
    negative = text[i] == '-';
    ++i;
  }
  if (i == text.size()) {
    throw std::invalid_argument("malformed rational: '" + std::string(whole) + "'");
  }
  BigInt value = 0;
  for (; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
      throw std::invalid_argument("malformed rational: '" + std::string(whole) + "'");
    }
    value = value * 10 + (text[i] - '0');
  }
  return negative ? BigInt(-value) : value;
}

__extension__ typedef __int128 i128;
__extension__ typedef unsigned __int128 u128;

constexpr i128 kMin64 = std::numeric_limits<std::int64_t>::min();
constexpr i128 kMax64 = std::numeric_limits<std::int64_t>::max();

bool fits(i128 v) { return v >= kMin64 && v <= kMax64; }

u128 magnitude(i128 v) { return v < 0 ? u128(0) - static_cast<u128>(v) : static_cast<u128>(v); }

u128 gcd(u128 a, u128 b) {
  while (b != 0) {
    const u128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

BigInt to_big(i128 v) {
  const u128 mag = magnitude(v);
  BigInt out = static_cast<std::uint64_t>(mag >> 64);
  out <<= 64;
  out += static_cast<std::uint64_t>(mag);
  return v < 0 ? BigInt(-out) : out;
}

}  // namespace

// Reduces n/d (d != 0) into r, inline when the reduced pair fits.
void Rational::set(Rational& r, i128_t n, i128_t d) {
  if (d < 0) {
    n = -n;
    d = -d;
  }
  const u128 g = gcd(magnitude(n), static_cast<u128>(d));
  n /= static_cast<i128>(g);
  d /= static_cast<i128>(g);
  if (fits(n) && fits(d)) {
    r.num_ = static_cast<std::int64_t>(n);
    r.den_ = static_cast<std::int64_t>(d);
    r.big_.reset();
    return;
  }
  r.assign(mp::cpp_rational(to_big(n), to_big(d)));
}

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) {
    throw std::domain_error("rational with zero denominator");
  }
  set(*this, num, den);
}

Rational::Rational(const BigInt& num, const BigInt& den) {
  if (den == 0) {
    throw std::domain_error("rational with zero denominator");
  }
  // boost rejects a negative denominator here
  assign(den < 0 ? mp::cpp_rational(BigInt(-num), BigInt(-den)) : mp::cpp_rational(num, den));
}

Rational::Rational(const Rational& other)
    : num_(other.num_),
      den_(other.den_),
      big_(other.big_ ? std::make_unique<mp::cpp_rational>(*other.big_) : nullptr) {}

Rational& Rational::operator=(const Rational& other) {
  if (this != &other) {
    num_ = other.num_;
    den_ = other.den_;
    big_ = other.big_ ? std::make_unique<mp::cpp_rational>(*other.big_) : nullptr;
  }
  return *this;
}

void Rational::assign(const mp::cpp_rational& v) {
  const BigInt num = mp::numerator(v);
  const BigInt den = mp::denominator(v);
  if (fits_int64(num) && fits_int64(den)) {
    num_ = num.convert_to<std::int64_t>();
    den_ = den.convert_to<std::int64_t>();
    big_.reset();
  } else {
    big_ = std::make_unique<mp::cpp_rational>(v);
  }
}

mp::cpp_rational Rational::wide() const {
  return big_ ? *big_ : mp::cpp_rational(BigInt(num_), BigInt(den_));
}

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    Rational r;
    r.assign(mp::cpp_rational(parse_integer(text, text)));
    return r;
  }
  const BigInt den = parse_integer(text.substr(slash + 1), text);
  if (den == 0) {
    throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
  }
  return Rational(parse_integer(text.substr(0, slash), text), den);
}

bool Rational::equal(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  if (a.big_ && b.big_) {
    return *a.big_ == *b.big_;
  }
  return false;  // canonical: a small value is never stored wide
}

bool Rational::less(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) {
    if (a.den_ == b.den_) {
      return a.num_ < b.num_;
    }
    return static_cast<i128>(a.num_) * b.den_ < static_cast<i128>(b.num_) * a.den_;
  }
  const mp::cpp_rational x = a.wide();
  const mp::cpp_rational y = b.wide();
  return mp::numerator(x) * mp::denominator(y) < mp::numerator(y) * mp::denominator(x);
}

BigInt Rational::numerator() const { return big_ ? BigInt(mp::numerator(*big_)) : BigInt(num_); }
BigInt Rational::denominator() const { return big_ ? BigInt(mp::denominator(*big_)) : BigInt(den_); }

std::optional<std::pair<std::int64_t, std::int64_t>> Rational::to_int64_pair() const {
  if (big_) {
    return std::nullopt;
  }
  return std::pair{num_, den_};
}

bool Rational::is_integer() const { return big_ ? mp::denominator(*big_) == 1 : den_ == 1; }

int Rational::sign() const { return big_ ? big_->sign() : (num_ > 0) - (num_ < 0); }

BigInt Rational::floor() const {
  if (!big_) {
    std::int64_t q = num_ / den_;
    if (num_ < 0 && q * den_ != num_) {
      --q;
    }
    return q;
  }
  const BigInt num = numerator();
  const BigInt den = denominator();
  BigInt q = num / den;  // truncates toward zero
  if (num < 0 && q * den != num) {
    --q;
  }
  return q;
}

BigInt Rational::ceil() const {
  if (!big_) {
    std::int64_t q = num_ / den_;
    if (num_ > 0 && q * den_ != num_) {
      ++q;
    }
    return q;
  }
  const BigInt num = numerator();
  const BigInt den = denominator();
  BigInt q = num / den;
  if (num > 0 && q * den != num) {
    ++q;
  }
  return q;
}

std::string Rational::to_string() const {
  if (!big_) {
    return den_ == 1 ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_);
  }
  const BigInt den = denominator();
  if (den == 1) {
    return numerator().str();
  }
  return numerator().str() + "/" + den.str();
}

Rational Rational::operator-() const {
  Rational r;
  if (!big_) {
    set(r, -static_cast<i128>(num_), den_);
  } else {
    r.assign(-*big_);
  }
  return r;
}

// Products of two int64 values stay below 2^126, so the cross sums below
// cannot overflow 128 bits.
Rational& Rational::operator+=(const Rational& rhs) {
  if (!big_ && !rhs.big_) {
    if (den_ == rhs.den_) {
      set(*this, static_cast<i128>(num_) + rhs.num_, den_);
    } else {
      set(*this, static_cast<i128>(num_) * rhs.den_ + static_cast<i128>(rhs.num_) * den_,
          static_cast<i128>(den_) * rhs.den_);
    }
    return *this;
  }
  assign(wide() + rhs.wide());
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  if (!big_ && !rhs.big_) {
    if (den_ == rhs.den_) {
      set(*this, static_cast<i128>(num_) - rhs.num_, den_);
    } else {
      set(*this, static_cast<i128>(num_) * rhs.den_ - static_cast<i128>(rhs.num_) * den_,
          static_cast<i128>(den_) * rhs.den_);
    }
    return *this;
  }
  assign(wide() - rhs.wide());
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  if (!big_ && !rhs.big_) {
    set(*this, static_cast<i128>(num_) * rhs.num_, static_cast<i128>(den_) * rhs.den_);
    return *this;
  }
  assign(wide() * rhs.wide());
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.sign() == 0) {
    throw std::domain_error("division by zero");
  }
  if (!big_ && !rhs.big_) {
    set(*this, static_cast<i128>(num_) * rhs.den_, static_cast<i128>(den_) * rhs.num_);
    return *this;
  }
  assign(wide() / rhs.wide());
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

Rational midpoint(const Rational& a, const Rational& b) { return (a + b) / 2; }

const Rational& min(const Rational& a, const Rational& b) { return b < a ? b : a; }
const Rational& max(const Rational& a, const Rational& b) { return a < b ? b : a; }

std::string to_decimal(const Rational& r, int digits) {
  BigInt scale = 1;
  for (int i = 0; i < digits; ++i) {
    scale *= 10;
  }
  const BigInt num = r.numerator();
  const BigInt den = r.denominator();
  const BigInt mag = num < 0 ? BigInt(-num) : num;
  // round(|r| * scale) half away from zero
  const BigInt scaled = (2 * mag * scale + den) / (2 * den);
  const BigInt int_part = scaled / scale;
  const BigInt frac_part = scaled % scale;

  std::string out = (num < 0 && scaled != 0) ? "-" : "";
  out += int_part.str();
  if (digits > 0) {
    std::string frac = frac_part.str();
    out += '.';
    out.append(static_cast<std::size_t>(digits) - frac.size(), '0');
    out += frac;
  }
  return out;
}

}  // namespace drot
