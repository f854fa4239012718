#include "atoric/jet2.hpp"

#include <algorithm>
#include <sstream>

namespace atoric {

namespace {

const Coeff& zero_coeff() {
  static const Coeff zero;
  return zero;
}

void require_same_order(const Jet2& a, const Jet2& b, const char* what) {
  if (a.order() != b.order()) {
    std::ostringstream msg;
    msg << what << ": mismatched truncation orders " << a.order() << " and " << b.order();
    throw JetError(msg.str());
  }
}

std::size_t dense_size(int order) { return static_cast<std::size_t>((order + 1) * (order + 2) / 2); }

// Adds c * X^shift * src into dst, truncated to dst's order.
void add_shifted(Jet2& dst, const Jet2& src, int shift, const Coeff& c) {
  const int n = dst.order();
  for (int d = 0; d + shift <= n; ++d) {
    for (int q = 0; q <= d; ++q) {
      const Coeff& s = src.coeff(d - q, q);
      if (s.is_zero()) continue;
      dst.add_product(d - q + shift, q, c, s);
    }
  }
}

}  // namespace

Jet2::Jet2(int order) : order_(order) {
  if (order < 1) throw JetError("truncation order must be positive");
  coeffs_.resize(dense_size(order));
}

Jet2 Jet2::x(int order) { return monomial(1, 0, 1, order); }
Jet2 Jet2::y(int order) { return monomial(0, 1, 1, order); }

Jet2 Jet2::constant(const Coeff& c, int order) { return monomial(0, 0, c, order); }

Jet2 Jet2::monomial(int p, int q, const Coeff& c, int order) {
  Jet2 j(order);
  if (p + q <= order) j.set(p, q, c);
  return j;
}

const Coeff& Jet2::coeff(int p, int q) const {
  if (p < 0 || q < 0 || p + q > order_) return zero_coeff();
  return coeffs_[index(p, q)];
}

void Jet2::set(int p, int q, Coeff c) {
  if (p < 0 || q < 0 || p + q > order_) {
    std::ostringstream msg;
    msg << "monomial X^" << p << " Y^" << q << " outside truncation order " << order_;
    throw JetError(msg.str());
  }
  coeffs_[index(p, q)] = std::move(c);
}

void Jet2::add(int p, int q, const Coeff& c) {
  if (p < 0 || q < 0 || p + q > order_) return;
  coeffs_[index(p, q)] += c;
}

void Jet2::add_product(int p, int q, const Coeff& a, const Coeff& b) {
  if (p < 0 || q < 0 || p + q > order_) return;
  coeffs_[index(p, q)].add_product(a, b);
}

bool Jet2::is_zero() const {
  for (const auto& c : coeffs_) {
    if (!c.is_zero()) return false;
  }
  return true;
}

bool Jet2::has_tau() const {
  for (const auto& c : coeffs_) {
    if (c.has_tau()) return true;
  }
  return false;
}

std::vector<Jet2::Term> Jet2::terms() const {
  std::vector<Term> out;
  for (int d = 0; d <= order_; ++d) {
    for (int q = 0; q <= d; ++q) {
      const Coeff& c = coeffs_[index(d - q, q)];
      if (!c.is_zero()) out.push_back({d - q, q, c});
    }
  }
  return out;
}

Jet2 Jet2::truncated(int order) const {
  if (order > order_) throw JetError("cannot raise the truncation order of a jet");
  Jet2 out(order);
  std::copy_n(coeffs_.begin(), out.coeffs_.size(), out.coeffs_.begin());
  return out;
}

std::string Jet2::to_string() const {
  std::ostringstream out;
  bool first = true;
  for (const auto& t : terms()) {
    if (!first) out << " + ";
    first = false;
    out << "(" << t.c.to_string() << ")";
    if (t.p > 0) out << "*X" << (t.p > 1 ? "^" + std::to_string(t.p) : "");
    if (t.q > 0) out << "*Y" << (t.q > 1 ? "^" + std::to_string(t.q) : "");
  }
  if (first) out << "0";
  out << " + O(" << order_ + 1 << ")";
  return out.str();
}

Jet2 Jet2::operator-() const {
  Jet2 out(*this);
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

Jet2& Jet2::operator+=(const Jet2& other) {
  require_same_order(*this, other, "add");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  return *this;
}

Jet2& Jet2::operator-=(const Jet2& other) {
  require_same_order(*this, other, "sub");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  return *this;
}

Jet2& Jet2::operator*=(const Coeff& scalar) {
  for (auto& c : coeffs_) {
    if (!c.is_zero()) c *= scalar;
  }
  return *this;
}

Jet2 operator*(const Jet2& a, const Jet2& b) {
  require_same_order(a, b, "mul");
  const int n = a.order_;
  Jet2 out(n);
  for (int d1 = 0; d1 <= n; ++d1) {
    for (int q1 = 0; q1 <= d1; ++q1) {
      const Coeff& ca = a.coeffs_[Jet2::index(d1 - q1, q1)];
      if (ca.is_zero()) continue;
      for (int d2 = 0; d1 + d2 <= n; ++d2) {
        for (int q2 = 0; q2 <= d2; ++q2) {
          const Coeff& cb = b.coeffs_[Jet2::index(d2 - q2, q2)];
          if (cb.is_zero()) continue;
          out.coeffs_[Jet2::index(d1 - q1 + d2 - q2, q1 + q2)].add_product(ca, cb);
        }
      }
    }
  }
  return out;
}

Jet2 jet_arith(const Jet2& a, const Jet2& b, ArithKind kind) {
  switch (kind) {
    case ArithKind::kAdd:
      return a + b;
    case ArithKind::kSub:
      return a - b;
    case ArithKind::kMul:
      return a * b;
  }
  throw JetError("unknown arithmetic kind");
}

Jet2 compose_y(const Jet2& f, const Jet2& g) {
  require_same_order(f, g, "compose_y");
  if (!g.coeff(0, 0).is_zero()) {
    throw JetError("compose_y: substituted series has nonzero constant term " + g.coeff(0, 0).to_string());
  }
  const int n = f.order();
  int max_q = 0;
  for (const auto& t : f.terms()) max_q = std::max(max_q, t.q);

  // Horner in Y: f = sum_q F_q(X) Y^q, evaluated from the top power down.
  Jet2 acc(n);
  for (int q = max_q; q >= 0; --q) {
    if (q != max_q) acc = acc * g;
    for (int p = 0; p + q <= n; ++p) {
      const Coeff& c = f.coeff(p, q);
      if (!c.is_zero()) acc.add(p, 0, c);
    }
  }
  return acc;
}

Jet2 invert_y(const Jet2& g) {
  if (!g.coeff(0, 0).is_zero()) throw JetError("invert_y: series has nonzero constant term");
  const Coeff& lead = g.coeff(0, 1);
  if (lead.is_zero()) throw JetError("invert_y: Y coefficient is zero, series not invertible in Y");
  if (lead.has_tau()) throw CoeffRingError("invert_y: Y coefficient " + lead.to_string() + " carries tau");
  const int n = g.order();
  const Coeff inv_lead = Coeff(1) / lead;
  // Degree k of h is fixed by the degree-k part of g(X, h) - Y, which only
  // needs both series truncated at k.
  Jet2 h = Jet2::monomial(0, 1, inv_lead, n);
  for (int k = 1; k <= n; ++k) {
    const Jet2 residual = compose_y(g.truncated(k), h.truncated(k)) - Jet2::y(k);
    for (int q = 0; q <= k; ++q) {
      const Coeff& r = residual.coeff(k - q, q);
      if (!r.is_zero()) h.add(k - q, q, -(r * inv_lead));
    }
  }
  return h;
}

Jet2 gamma_pullback(const Jet2& f) {
  Jet2 out(f);
  for (int d = 1; d <= f.order(); d += 2) {
    for (int q = 0; q <= d; ++q) {
      const Coeff& c = f.coeff(d - q, q);
      if (!c.is_zero()) out.set(d - q, q, -c);
    }
  }
  return out;
}

JetMap JetMap::identity(int order) { return {Jet2::x(order), Jet2::y(order)}; }

Jet2 compose(const Jet2& f, const JetMap& inner) {
  require_same_order(f, inner.first, "compose");
  require_same_order(f, inner.second, "compose");
  if (!inner.first.coeff(0, 0).is_zero() || !inner.second.coeff(0, 0).is_zero()) {
    throw JetError("compose: inner map does not fix the origin");
  }
  const int n = f.order();
  int max_q = 0;
  for (const auto& t : f.terms()) max_q = std::max(max_q, t.q);
  std::vector<Jet2> a_pow{Jet2::constant(1, n)};
  for (int p = 1; p <= n; ++p) a_pow.push_back(a_pow.back() * inner.first);

  // sum_q (sum_p f_pq a^p) b^q, Horner in b.
  Jet2 acc(n);
  for (int q = max_q; q >= 0; --q) {
    if (q != max_q) acc = acc * inner.second;
    for (int p = 0; p + q <= n; ++p) {
      const Coeff& c = f.coeff(p, q);
      if (!c.is_zero()) add_shifted(acc, a_pow[p], 0, c);
    }
  }
  return acc;
}

JetMap compose(const JetMap& outer, const JetMap& inner) {
  return {compose(outer.first, inner), compose(outer.second, inner)};
}

JetMap inverse(const JetMap& map) {
  const int n = map.order();
  require_same_order(map.first, map.second, "inverse");
  if (!map.first.coeff(0, 0).is_zero() || !map.second.coeff(0, 0).is_zero()) {
    throw JetError("inverse: map does not fix the origin");
  }
  const Coeff& a = map.first.coeff(1, 0);
  const Coeff& b = map.first.coeff(0, 1);
  const Coeff& c = map.second.coeff(1, 0);
  const Coeff& d = map.second.coeff(0, 1);
  if (a.has_tau() || b.has_tau() || c.has_tau() || d.has_tau()) {
    throw CoeffRingError("inverse: linear part carries tau");
  }
  const Coeff det = a * d - b * c;
  if (det.is_zero()) throw JetError("inverse: linear part is singular");
  // L^{-1} = [[d, -b], [-c, a]] / det
  const Coeff ia = d / det, ib = -b / det, ic = -c / det, id = a / det;

  // As in invert_y: degree k of the inverse from the degree-k residual.
  JetMap h{Jet2::monomial(1, 0, ia, n) + Jet2::monomial(0, 1, ib, n),
           Jet2::monomial(1, 0, ic, n) + Jet2::monomial(0, 1, id, n)};
  for (int k = 2; k <= n; ++k) {
    const JetMap mk{map.first.truncated(k), map.second.truncated(k)};
    const JetMap fh = compose(mk, JetMap{h.first.truncated(k), h.second.truncated(k)});
    for (int q = 0; q <= k; ++q) {
      const Coeff& r1 = fh.first.coeff(k - q, q);
      const Coeff& r2 = fh.second.coeff(k - q, q);
      if (r1.is_zero() && r2.is_zero()) continue;
      h.first.add(k - q, q, -(r1 * ia + r2 * ib));
      h.second.add(k - q, q, -(r1 * ic + r2 * id));
    }
  }
  return h;
}

}  // namespace atoric
