#include "atoric/labels.hpp"

#include <algorithm>
#include <sstream>

namespace atoric {

namespace {

Rational floor_of(const Rational& value) {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
  return Rational(q);
}

void require_zero_constant(const Jet2& rep, const char* what) {
  if (!rep.coeff(0, 0).is_zero()) {
    throw JetError(std::string(what) + " must have zero constant term, got " + rep.coeff(0, 0).to_string());
  }
}

// Negative or zero; exact unless the coefficient sits within 1e-20 of -2*pi*t.
bool positive(const Coeff& c) {
  try {
    return c.sign() > 0;
  } catch (const CoeffRingError&) {
    return false;
  }
}

std::string where(int u, int v = -1, int w = -1) {
  std::ostringstream out;
  out << "u=" << u;
  if (v >= 0) out << " v=" << v;
  if (w >= 0) out << " w=" << w;
  return out.str();
}

// Lexicographic comparison of the serialized coefficient tuples of two labels
// with equal multiplicity and order.
std::strong_ordering compare_tuples(const FocusLabel& a, const FocusLabel& b) {
  const int m = a.multiplicity();
  const std::size_t size = a.s(0).rep().dense().size();
  for (std::size_t i = 0; i < size; ++i) {
    for (int u = 0; u < m; ++u) {
      auto c = a.s(u).rep().dense()[i] <=> b.s(u).rep().dense()[i];
      if (c != 0) return c;
    }
  }
  for (std::size_t i = 0; i < size; ++i) {
    for (int u = 0; u < m; ++u) {
      for (int v = 0; v < m; ++v) {
        auto c = a.g(u, v).dense()[i] <=> b.g(u, v).dense()[i];
        if (c != 0) return c;
      }
    }
  }
  return std::strong_ordering::equal;
}

}  // namespace

Jet2 normalize_action(Jet2 rep) {
  const Coeff& x = rep.coeff(1, 0);
  if (x.has_tau()) {
    Rational t = x.tau_part();
    t -= floor_of(t);
    rep.set(1, 0, Coeff(x.rational_part(), t));
  }
  return rep;
}

ActionSeries::ActionSeries(Jet2 rep) : rep_(normalize_action(std::move(rep))) {
  require_zero_constant(rep_, "action series");
}

RelativeActionSeries::RelativeActionSeries(Jet2 rep) : rep_(std::move(rep)) {
  require_zero_constant(rep_, "relative action series");
}

const char* to_string(LabelCondition condition) {
  switch (condition) {
    case LabelCondition::kConstantTerm:
      return "constant-term";
    case LabelCondition::kPositivity:
      return "a:positivity";
    case LabelCondition::kActionCompatibility:
      return "b:action-compatibility";
    case LabelCondition::kIdentity:
      return "c:identity";
    case LabelCondition::kCocycle:
      return "d:cocycle";
  }
  return "unknown";
}

bool LabelReport::has(LabelCondition condition) const {
  return std::any_of(violations.begin(), violations.end(),
                     [&](const LabelViolation& v) { return v.condition == condition; });
}

std::string LabelReport::to_string() const {
  if (ok()) return "pass";
  std::ostringstream out;
  for (const auto& v : violations) {
    out << atoric::to_string(v.condition) << " " << v.detail << "\n";
  }
  return out.str();
}

InvalidLabel::InvalidLabel(LabelReport report)
    : std::invalid_argument("invalid focus-focus label:\n" + report.to_string()), report_(std::move(report)) {}

LabelReport verify_label(int m, std::span<const Jet2> s, std::span<const Jet2> g) {
  if (m < 1) throw LabelShapeError("multiplicity must be positive");
  const auto mm = static_cast<std::size_t>(m);
  if (s.size() != mm || g.size() != mm * mm) {
    std::ostringstream msg;
    msg << "label of multiplicity " << m << " needs " << m << " action series and " << m * m
        << " transition series, got " << s.size() << " and " << g.size();
    throw LabelShapeError(msg.str());
  }
  const int n = s[0].order();
  for (const auto& j : s) {
    if (j.order() != n) throw LabelShapeError("action series with mixed truncation orders");
  }
  for (const auto& j : g) {
    if (j.order() != n) throw LabelShapeError("transition series with mixed truncation orders");
  }

  LabelReport report;
  auto gv = [&](int u, int v) -> const Jet2& { return g[static_cast<std::size_t>(u * m + v)]; };
  std::vector<bool> g_substitutable(mm * mm, true);

  for (int u = 0; u < m; ++u) {
    if (!s[u].coeff(0, 0).is_zero()) {
      report.violations.push_back({LabelCondition::kConstantTerm, u, -1, -1,
                                   "s " + where(u) + " constant " + s[u].coeff(0, 0).to_string()});
    }
  }
  for (int u = 0; u < m; ++u) {
    for (int v = 0; v < m; ++v) {
      const Jet2& guv = gv(u, v);
      if (!guv.coeff(0, 0).is_zero()) {
        g_substitutable[u * m + v] = false;
        report.violations.push_back({LabelCondition::kConstantTerm, u, v, -1,
                                     "g " + where(u, v) + " constant " + guv.coeff(0, 0).to_string()});
      }
      if (!positive(guv.coeff(0, 1))) {
        report.violations.push_back({LabelCondition::kPositivity, u, v, -1,
                                     "g " + where(u, v) + " Y coefficient " + guv.coeff(0, 1).to_string()});
      }
    }
  }

  // (b) s_u = s_v(X, g_{u,v}) modulo 2*pi*X*Z.
  for (int u = 0; u < m; ++u) {
    for (int v = 0; v < m; ++v) {
      if (!g_substitutable[u * m + v]) continue;
      if (normalize_action(s[u]) != normalize_action(compose_y(s[v], gv(u, v)))) {
        report.violations.push_back({LabelCondition::kActionCompatibility, u, v, -1, where(u, v)});
      }
    }
  }

  // (c) g_{u,u} = Y.
  const Jet2 y = Jet2::y(n);
  for (int u = 0; u < m; ++u) {
    if (gv(u, u) != y) {
      report.violations.push_back({LabelCondition::kIdentity, u, u, -1, "g " + where(u, u) + " = " + gv(u, u).to_string()});
    }
  }

  // (d) g_{u,w} = g_{v,w}(X, g_{u,v}).
  for (int u = 0; u < m; ++u) {
    for (int v = 0; v < m; ++v) {
      if (!g_substitutable[u * m + v]) continue;
      for (int w = 0; w < m; ++w) {
        if (gv(u, w) != compose_y(gv(v, w), gv(u, v))) {
          report.violations.push_back({LabelCondition::kCocycle, u, v, w, where(u, v, w)});
        }
      }
    }
  }
  return report;
}

FocusLabel FocusLabel::make(int m, std::vector<Jet2> s, std::vector<Jet2> g) {
  LabelReport report = verify_label(m, s, g);
  if (!report.ok()) throw InvalidLabel(std::move(report));
  std::vector<ActionSeries> series;
  series.reserve(s.size());
  for (auto& j : s) series.emplace_back(std::move(j));
  return FocusLabel(m, std::move(series), std::move(g));
}

std::vector<Jet2> FocusLabel::s_reps() const {
  std::vector<Jet2> out;
  out.reserve(s_.size());
  for (const auto& a : s_) out.push_back(a.rep());
  return out;
}

FocusLabel cyclic_act(long w, const FocusLabel& label) {
  const int m = label.multiplicity();
  std::vector<ActionSeries> s;
  std::vector<Jet2> g;
  for (int u = 0; u < m; ++u) s.push_back(label.s(u + w));
  for (int u = 0; u < m; ++u) {
    for (int v = 0; v < m; ++v) g.push_back(label.g(u + w, v + w));
  }
  return FocusLabel(m, std::move(s), std::move(g));
}

FocusLabel orbit_normal_form(const FocusLabel& label) {
  FocusLabel best = label;
  for (int w = 1; w < label.multiplicity(); ++w) {
    FocusLabel candidate = cyclic_act(w, label);
    if (compare_tuples(candidate, best) < 0) best = std::move(candidate);
  }
  return best;
}

bool labels_equal(const FocusLabel& a, const FocusLabel& b) {
  if (a.multiplicity() != b.multiplicity() || a.order() != b.order()) return false;
  return orbit_normal_form(a) == orbit_normal_form(b);
}

FocusLabel flip_label(const FocusLabel& label) {
  const int m = label.multiplicity();
  std::vector<Jet2> s;
  std::vector<Jet2> g;
  for (int u = 0; u < m; ++u) s.push_back(-gamma_pullback(label.s(-u).rep()));
  for (int u = 0; u < m; ++u) {
    for (int v = 0; v < m; ++v) g.push_back(-gamma_pullback(label.g(-u, -v)));
  }
  try {
    return FocusLabel::make(m, std::move(s), std::move(g));
  } catch (const InvalidLabel& e) {
    throw std::logic_error(std::string("flip_label produced an invalid label: ") + e.what());
  }
}

Jet2 transition_series(const JetMap& e_u, const JetMap& e_v) {
  if (e_u.first != e_v.first) {
    throw JetError("transition_series: germs do not share their first component");
  }
  JetMap composite = compose(e_v, inverse(e_u));
  if (composite.first != Jet2::x(e_u.order())) {
    throw std::logic_error("transition_series: composite is not triangular");
  }
  return composite.second;
}

long twisting_index(const RelativeActionSeries& st, const RelativeActionSeries& st_prime) {
  if (st.rep().order() != st_prime.rep().order()) {
    throw NotComparable("relative action series with different truncation orders");
  }
  Jet2 diff = st_prime.rep() - st.rep();
  const Coeff x = diff.coeff(1, 0);
  diff.set(1, 0, Coeff());
  if (!diff.is_zero() || sgn(x.rational_part()) != 0 || x.tau_part().get_den() != 1) {
    throw NotComparable("difference of relative action series is not 2*k*pi*X: " +
                        (st_prime.rep() - st.rep()).to_string());
  }
  return x.tau_part().get_num().get_si();
}

}  // namespace atoric
