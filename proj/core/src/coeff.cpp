#include "atoric/coeff.hpp"

#include <cctype>
#include <sstream>

namespace atoric {

namespace {

// pi lies strictly between these; 2*pi*t is bracketed with them.
const Rational& pi_lower() {
  static const Rational value("314159265358979323846/100000000000000000000");
  return value;
}

const Rational& pi_upper() {
  static const Rational value("314159265358979323847/100000000000000000000");
  return value;
}

int rational_sign(const Rational& value) { return sgn(value); }

}  // namespace

Coeff::Coeff(Rational rational, Rational tau) : rational_(std::move(rational)), tau_(std::move(tau)) {
  rational_.canonicalize();
  tau_.canonicalize();
}

int Coeff::sign() const {
  if (sgn(tau_) == 0) return rational_sign(rational_);
  Rational a = rational_ + 2 * tau_ * pi_lower();
  Rational b = rational_ + 2 * tau_ * pi_upper();
  int sa = rational_sign(a);
  int sb = rational_sign(b);
  if (sa == sb && sa != 0) return sa;
  throw CoeffRingError("sign of " + to_string() + " not decidable at 20-digit precision of pi");
}

std::string Coeff::to_string() const {
  if (sgn(tau_) == 0) return rational_to_string(rational_);
  std::string tau_text = rational_to_string(tau_) + "*tau";
  if (sgn(rational_) == 0) return tau_text;
  if (sgn(tau_) > 0) return rational_to_string(rational_) + "+" + tau_text;
  return rational_to_string(rational_) + tau_text;
}

Coeff& Coeff::operator+=(const Coeff& other) {
  rational_ += other.rational_;
  tau_ += other.tau_;
  return *this;
}

Coeff& Coeff::operator-=(const Coeff& other) {
  rational_ -= other.rational_;
  tau_ -= other.tau_;
  return *this;
}

Coeff& Coeff::operator*=(const Coeff& other) {
  if (has_tau() && other.has_tau()) {
    throw CoeffRingError("product " + to_string() + " * " + other.to_string() + " has a tau^2 term");
  }
  if (other.has_tau()) {
    tau_ = rational_ * other.tau_;
    rational_ *= other.rational_;
  } else {
    rational_ *= other.rational_;
    tau_ *= other.rational_;
  }
  return *this;
}

void Coeff::add_product(const Coeff& a, const Coeff& b) {
  const bool ta = a.has_tau();
  const bool tb = b.has_tau();
  if (ta && tb) throw CoeffRingError("product " + a.to_string() + " * " + b.to_string() + " has a tau^2 term");
  thread_local Rational scratch;
  if (sgn(a.rational_) != 0 && sgn(b.rational_) != 0) {
    scratch = a.rational_ * b.rational_;
    rational_ += scratch;
  }
  if (ta && sgn(b.rational_) != 0) {
    scratch = a.tau_ * b.rational_;
    tau_ += scratch;
  }
  if (tb && sgn(a.rational_) != 0) {
    scratch = a.rational_ * b.tau_;
    tau_ += scratch;
  }
}

Coeff& Coeff::operator/=(const Coeff& other) {
  if (other.has_tau()) throw CoeffRingError("division by " + other.to_string() + " leaves Q + Q*tau");
  if (sgn(other.rational_) == 0) throw std::domain_error("division by zero coefficient");
  rational_ /= other.rational_;
  tau_ /= other.rational_;
  return *this;
}

std::strong_ordering operator<=>(const Coeff& a, const Coeff& b) {
  int c = cmp(a.rational_, b.rational_);
  if (c == 0) c = cmp(a.tau_, b.tau_);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

Rational parse_rational(const std::string& text) {
  auto valid_integer = [](const std::string& s) {
    std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    }
    return true;
  };
  auto slash = text.find('/');
  std::string num = text.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
  if (!valid_integer(num) || !valid_integer(den) || den[0] == '-' || den[0] == '+') {
    throw std::invalid_argument("malformed rational '" + text + "'");
  }
  if (num[0] == '+') num.erase(0, 1);
  mpz_class n(num, 10);
  mpz_class d(den, 10);
  if (d == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
  Rational value(n, d);
  value.canonicalize();
  return value;
}

std::string rational_to_string(const Rational& value) { return value.get_str(10); }

}  // namespace atoric
