#pragma once

#include <Eigen/Core>

#include <cstdint>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace splitrank {

/// Exact rational scalar over 64-bit integers. Always normalized: den > 0,
/// gcd(num, den) == 1. One float anywhere would poison the golden tables,
/// so every evaluation in this library runs on this type or on plain ints.
class Rational {
 public:
  constexpr Rational() = default;
  constexpr Rational(std::int64_t n) : num_(n), den_(1) {}
  Rational(std::int64_t n, std::int64_t d) : num_(n), den_(d) {
    if (den_ == 0) throw std::invalid_argument("Rational: zero denominator");
    normalize();
  }

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }
  bool is_zero() const { return num_ == 0; }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw std::domain_error("Rational: division by zero");
    return Rational(a.num_ * b.den_, a.den_ * b.num_);
  }
  Rational operator-() const {
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
  }
  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) {
    return a.num_ * b.den_ < b.num_ * a.den_;
  }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

  friend Rational abs(const Rational& a) { return a.num_ < 0 ? -a : a; }

  friend std::ostream& operator<<(std::ostream& os, const Rational& a) {
    os << a.num_;
    if (a.den_ != 1) os << '/' << a.den_;
    return os;
  }

  std::string str() const {
    std::string s = std::to_string(num_);
    if (den_ != 1) s += "/" + std::to_string(den_);
    return s;
  }

  /// Parses "p" or "p/q"; throws std::invalid_argument on malformed input.
  static Rational parse(std::string_view text);

 private:
  void normalize() {
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    std::int64_t g = std::gcd(num_ < 0 ? -num_ : num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
    if (num_ == 0) den_ = 1;
  }

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

inline Rational Rational::parse(std::string_view text) {
  auto parse_int = [](std::string_view s) -> std::int64_t {
    if (s.empty()) throw std::invalid_argument("Rational::parse: empty field");
    std::size_t pos = 0;
    bool neg = false;
    if (s[0] == '+' || s[0] == '-') {
      neg = s[0] == '-';
      pos = 1;
    }
    if (pos == s.size()) throw std::invalid_argument("Rational::parse: sign only");
    std::int64_t v = 0;
    for (; pos < s.size(); ++pos) {
      if (s[pos] < '0' || s[pos] > '9')
        throw std::invalid_argument("Rational::parse: bad digit in '" + std::string(s) + "'");
      v = v * 10 + (s[pos] - '0');
    }
    return neg ? -v : v;
  };
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text));
  return Rational(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
}

using IntScalar = std::int64_t;
using IntVec = Eigen::Matrix<IntScalar, Eigen::Dynamic, 1>;
using IntMat = Eigen::Matrix<IntScalar, Eigen::Dynamic, Eigen::Dynamic>;
using RatVec = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;
using RatMat = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;

}  // namespace splitrank

namespace Eigen {
template <>
struct NumTraits<splitrank::Rational> : GenericNumTraits<splitrank::Rational> {
  using Real = splitrank::Rational;
  using NonInteger = splitrank::Rational;
  using Nested = splitrank::Rational;
  using Literal = std::int64_t;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 2,
    AddCost = 8,
    MulCost = 8,
  };
  static inline Real epsilon() { return splitrank::Rational(0); }
  static inline Real dummy_precision() { return splitrank::Rational(0); }
  static inline int digits10() { return 0; }
};
}  // namespace Eigen
