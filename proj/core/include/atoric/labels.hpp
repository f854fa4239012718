#pragma once

#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "atoric/jet2.hpp"

namespace atoric {

/// A representative of an element of R_0[[X,Y]] / (2*pi*X*Z).
///
/// The quotient is applied eagerly: the tau part of the X coefficient is
/// reduced into [0, 1), so two series are equal in the quotient iff their
/// representatives are equal.
class ActionSeries {
 public:
  /// Throws JetError if rep has a nonzero constant term.
  explicit ActionSeries(Jet2 rep);

  const Jet2& rep() const { return rep_; }
  int order() const { return rep_.order(); }

  friend bool operator==(const ActionSeries&, const ActionSeries&) = default;

 private:
  Jet2 rep_;
};

/// Reduces the tau part of the X coefficient into [0, 1); other terms untouched.
Jet2 normalize_action(Jet2 rep);

/// Unquotiented relative action series; depends on the affine coordinates.
class RelativeActionSeries {
 public:
  explicit RelativeActionSeries(Jet2 rep);

  const Jet2& rep() const { return rep_; }
  ActionSeries quotient() const { return ActionSeries(rep_); }

  friend bool operator==(const RelativeActionSeries&, const RelativeActionSeries&) = default;

 private:
  Jet2 rep_;
};

enum class LabelCondition {
  kConstantTerm,         // s_u or g_{u,v} has a nonzero constant term
  kPositivity,           // (a) g_{u,v}^{(0,1)} > 0
  kActionCompatibility,  // (b) s_u = s_v(X, g_{u,v})
  kIdentity,             // (c) g_{u,u} = Y
  kCocycle,              // (d) g_{u,w} = g_{v,w}(X, g_{u,v})
};

const char* to_string(LabelCondition condition);

struct LabelViolation {
  LabelCondition condition;
  int u = -1;
  int v = -1;
  int w = -1;
  std::string detail;
};

struct LabelReport {
  std::vector<LabelViolation> violations;

  bool ok() const { return violations.empty(); }
  bool has(LabelCondition condition) const;
  std::string to_string() const;
};

/// Array shapes or orders inconsistent; distinct from an axiom failure.
class LabelShapeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class InvalidLabel : public std::invalid_argument {
 public:
  explicit InvalidLabel(LabelReport report);
  const LabelReport& report() const { return report_; }

 private:
  LabelReport report_;
};

/// Checks every focus-focus label axiom to the common truncation order and
/// reports all violations. `g` is row-major: g[u * m + v] is g_{u,v}.
LabelReport verify_label(int m, std::span<const Jet2> s, std::span<const Jet2> g);

/// A focus-focus label (s_u, g_{u,v}) of multiplicity m. Instances always
/// satisfy the axioms; the stored tuple is one representative of its Z_m orbit.
class FocusLabel {
 public:
  /// Throws LabelShapeError or InvalidLabel.
  static FocusLabel make(int m, std::vector<Jet2> s, std::vector<Jet2> g);

  int multiplicity() const { return m_; }
  int order() const { return s_.front().order(); }

  /// Indices are taken mod m.
  const ActionSeries& s(long u) const { return s_[wrap(u)]; }
  const Jet2& g(long u, long v) const { return g_[wrap(u) * m_ + wrap(v)]; }

  std::vector<Jet2> s_reps() const;
  const std::vector<Jet2>& g_all() const { return g_; }

  /// Exact equality of representatives (not of orbits; see labels_equal).
  friend bool operator==(const FocusLabel&, const FocusLabel&) = default;

 private:
  friend FocusLabel cyclic_act(long w, const FocusLabel& label);

  FocusLabel(int m, std::vector<ActionSeries> s, std::vector<Jet2> g)
      : m_(m), s_(std::move(s)), g_(std::move(g)) {}

  std::size_t wrap(long u) const { return static_cast<std::size_t>(((u % m_) + m_) % m_); }

  int m_;
  std::vector<ActionSeries> s_;
  std::vector<Jet2> g_;
};

/// [w] . (s_u, g_{u,v}) = (s_{u+w}, g_{u+w,v+w}).
FocusLabel cyclic_act(long w, const FocusLabel& label);

/// Canonical orbit representative: the rotation whose coefficient tuple is
/// smallest. The tuple lists, monomial by monomial in graded order, s_u for
/// every u and then g_{u,v} for every (u, v); coefficients compare by
/// rational part, then tau part. This choice of representative is a
/// convention of this library.
FocusLabel orbit_normal_form(const FocusLabel& label);

/// Same multiplicity and same orbit, to the truncation order.
bool labels_equal(const FocusLabel& a, const FocusLabel& b);

/// The sign flip: s'_u = -s_{-u}(-X,-Y), g'_{u,v} = -g_{-u,-v}(-X,-Y).
FocusLabel flip_label(const FocusLabel& label);

/// Tl_0[proj_2 o E_v o E_u^{-1}] for germs sharing their first component.
Jet2 transition_series(const JetMap& e_u, const JetMap& e_v);

class NotComparable : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// The integer k with st' - st = 2*k*pi*X; throws NotComparable otherwise.
long twisting_index(const RelativeActionSeries& st, const RelativeActionSeries& st_prime);

}  // namespace atoric
