#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "atoric/coeff.hpp"

namespace atoric {

/// Default truncation degree for jets built without an explicit order.
inline constexpr int kDefaultOrder = 8;

class JetError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Truncated bivariate series sum c(p,q) X^p Y^q over p+q <= order.
///
/// Coefficients are stored densely in graded order: total degree ascending,
/// and within a degree the higher power of X first. That order is also the
/// serialization order used by the canonical forms in labels.hpp.
class Jet2 {
 public:
  struct Term {
    int p;
    int q;
    Coeff c;
  };

  explicit Jet2(int order = kDefaultOrder);

  static Jet2 x(int order = kDefaultOrder);
  static Jet2 y(int order = kDefaultOrder);
  static Jet2 constant(const Coeff& c, int order = kDefaultOrder);
  static Jet2 monomial(int p, int q, const Coeff& c, int order = kDefaultOrder);

  int order() const { return order_; }

  /// Zero for p + q > order.
  const Coeff& coeff(int p, int q) const;
  void set(int p, int q, Coeff c);
  void add(int p, int q, const Coeff& c);
  /// coeff(p, q) += a * b; ignored for p + q > order.
  void add_product(int p, int q, const Coeff& a, const Coeff& b);

  bool is_zero() const;
  bool has_tau() const;

  /// Nonzero terms in graded order.
  std::vector<Term> terms() const;

  /// Drops every term of degree above `order` (which must not exceed order()).
  Jet2 truncated(int order) const;

  std::string to_string() const;

  /// Dense coefficient access in graded order; size is (N+1)(N+2)/2.
  const std::vector<Coeff>& dense() const { return coeffs_; }

  static std::size_t index(int p, int q) {
    int d = p + q;
    return static_cast<std::size_t>(d * (d + 1) / 2 + q);
  }

  Jet2 operator-() const;
  Jet2& operator+=(const Jet2& other);
  Jet2& operator-=(const Jet2& other);
  Jet2& operator*=(const Coeff& scalar);

  friend Jet2 operator+(Jet2 a, const Jet2& b) { return a += b; }
  friend Jet2 operator-(Jet2 a, const Jet2& b) { return a -= b; }
  friend Jet2 operator*(const Jet2& a, const Jet2& b);
  friend Jet2 operator*(Jet2 a, const Coeff& s) { return a *= s; }
  friend Jet2 operator*(const Coeff& s, Jet2 a) { return a *= s; }

  friend bool operator==(const Jet2& a, const Jet2& b) {
    return a.order_ == b.order_ && a.coeffs_ == b.coeffs_;
  }

 private:
  int order_;
  std::vector<Coeff> coeffs_;
};

enum class ArithKind { kAdd, kSub, kMul };

/// Ring operation truncated to the common order; mismatched orders throw JetError.
Jet2 jet_arith(const Jet2& a, const Jet2& b, ArithKind kind);

/// f(X, g(X, Y)). g must have zero constant term.
Jet2 compose_y(const Jet2& f, const Jet2& g);

/// The h with g(X, h(X, Y)) = Y and h(X, g(X, Y)) = Y. Requires g(0,0) = 0 and
/// a nonzero, tau-free Y coefficient.
Jet2 invert_y(const Jet2& g);

/// f(-X, -Y).
Jet2 gamma_pullback(const Jet2& f);

/// A germ (first, second) of a map of the plane fixing the origin.
struct JetMap {
  Jet2 first;
  Jet2 second;

  static JetMap identity(int order = kDefaultOrder);
  int order() const { return first.order(); }
  friend bool operator==(const JetMap&, const JetMap&) = default;
};

/// f(a(X,Y), b(X,Y)) for a map (a, b) with zero constant terms.
Jet2 compose(const Jet2& f, const JetMap& inner);

/// outer o inner.
JetMap compose(const JetMap& outer, const JetMap& inner);

/// Two-sided inverse germ; the linear part must be invertible and tau-free.
JetMap inverse(const JetMap& map);

}  // namespace atoric
