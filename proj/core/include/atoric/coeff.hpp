#pragma once

#include <gmpxx.h>

#include <compare>
#include <stdexcept>
#include <string>

namespace atoric {

using Rational = mpq_class;

/// Raised when an operation would leave the ring Q + Q*tau (a tau^2 term, or
/// division by a coefficient that carries tau).
class CoeffRingError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Exact coefficient r + t*tau with tau = 2*pi kept as a formal constant.
///
/// Equality is componentwise. The total order used for canonical forms
/// compares the rational part first and the tau part second; it is a
/// bookkeeping order, not the order of the real numbers. Use sign() for the
/// real sign.
class Coeff {
 public:
  Coeff() = default;
  Coeff(long value) : rational_(value) {}  // NOLINT(google-explicit-constructor)
  Coeff(Rational rational, Rational tau = 0);

  static Coeff tau(Rational multiple) { return Coeff(0, std::move(multiple)); }

  const Rational& rational_part() const { return rational_; }
  const Rational& tau_part() const { return tau_; }

  bool is_zero() const { return sgn(rational_) == 0 && sgn(tau_) == 0; }
  bool has_tau() const { return sgn(tau_) != 0; }

  /// Sign of the real number r + 2*pi*t, decided exactly.
  int sign() const;

  /// "r", "t*tau" or "r+t*tau" with r, t printed as p/q.
  std::string to_string() const;

  Coeff operator-() const { return Coeff(-rational_, -tau_); }
  Coeff& operator+=(const Coeff& other);
  Coeff& operator-=(const Coeff& other);
  Coeff& operator*=(const Coeff& other);
  Coeff& operator/=(const Coeff& other);

  /// *this += a * b without temporaries.
  void add_product(const Coeff& a, const Coeff& b);

  friend Coeff operator+(Coeff a, const Coeff& b) { return a += b; }
  friend Coeff operator-(Coeff a, const Coeff& b) { return a -= b; }
  friend Coeff operator*(Coeff a, const Coeff& b) { return a *= b; }
  friend Coeff operator/(Coeff a, const Coeff& b) { return a /= b; }

  friend bool operator==(const Coeff& a, const Coeff& b) {
    return a.rational_ == b.rational_ && a.tau_ == b.tau_;
  }
  friend std::strong_ordering operator<=>(const Coeff& a, const Coeff& b);

 private:
  Rational rational_{0};
  Rational tau_{0};
};

/// Parses "p/q" or an integer into an exact rational; throws
/// std::invalid_argument on malformed text or a zero denominator.
Rational parse_rational(const std::string& text);

std::string rational_to_string(const Rational& value);

}  // namespace atoric
