#include "gen.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <string>

namespace atoric::testing {

std::uint64_t test_seed() {
  if (const char* env = std::getenv("ATORIC_SEED")) return std::stoull(env);
  return 20240611ULL;
}

Rational Rng::small_rational(long max_num, long max_den) {
  Rational r(uniform(-max_num, max_num), uniform(1, max_den));
  r.canonicalize();
  return r;
}

Rational Rng::nonzero_rational(long max_num, long max_den) {
  Rational r;
  do {
    r = small_rational(max_num, max_den);
  } while (r == 0);
  return r;
}

namespace {

void add_random_terms(Rng& rng, Jet2& jet, int count, int min_degree) {
  const int order = jet.order();
  if (order < min_degree) return;
  for (int i = 0; i < count; ++i) {
    int d = static_cast<int>(rng.uniform(min_degree, std::min(order, min_degree + 2)));
    int q = static_cast<int>(rng.uniform(0, d));
    jet.add(d - q, q, Coeff(rng.nonzero_rational()));
  }
}

}  // namespace

JetMap random_chart(Rng& rng, int order, int extra_terms) {
  Jet2 h(order);
  Rational lead(rng.uniform(1, 3), rng.uniform(1, 2));
  lead.canonicalize();
  h.set(0, 1, Coeff(lead));
  if (rng.coin()) h.set(1, 0, Coeff(rng.small_rational()));
  add_random_terms(rng, h, extra_terms, 2);
  return {Jet2::x(order), h};
}

std::vector<JetMap> random_compatible_germs(Rng& rng, int order, int count) {
  Jet2 first = Jet2::x(order);
  first.set(0, 1, Coeff(rng.small_rational()));
  add_random_terms(rng, first, 1, 2);
  std::vector<JetMap> out;
  while (static_cast<int>(out.size()) < count) {
    Jet2 second = random_chart(rng, order).second;
    Coeff det = first.coeff(1, 0) * second.coeff(0, 1) - first.coeff(0, 1) * second.coeff(1, 0);
    if (!det.is_zero()) out.push_back({first, second});
  }
  return out;
}

Jet2 random_action_series(Rng& rng, int order, int extra_terms) {
  Jet2 s(order);
  s.set(1, 0, Coeff(rng.small_rational(), rng.small_rational(2, 2)));
  s.set(0, 1, Coeff(rng.small_rational(), Rational(rng.uniform(0, 2))));
  add_random_terms(rng, s, extra_terms, 2);
  return s;
}

RawLabelData random_label_data(Rng& rng, int m, int order) {
  std::vector<JetMap> charts;
  charts.push_back(JetMap::identity(order));
  for (int u = 1; u < m; ++u) charts.push_back(random_chart(rng, order));
  std::vector<Jet2> inverses;
  for (const auto& c : charts) inverses.push_back(invert_y(c.second));

  const Jet2 sigma = random_action_series(rng, order);
  RawLabelData out{m, {}, {}};
  for (int u = 0; u < m; ++u) {
    Jet2 s = compose_y(sigma, inverses[u]);
    s.add(1, 0, Coeff(0, Rational(rng.uniform(-2, 2))));
    out.s.push_back(s);
  }
  for (int u = 0; u < m; ++u) {
    for (int v = 0; v < m; ++v) {
      out.g.push_back(u == v ? Jet2::y(order) : compose_y(charts[v].second, inverses[u]));
    }
  }
  return out;
}

FocusLabel random_label(Rng& rng, int m, int order) {
  RawLabelData d = random_label_data(rng, m, order);
  return FocusLabel::make(m, d.s, d.g);
}

BaseDiagram roof_diagram(const std::vector<int>& mults, std::vector<Rational> heights) {
  const long f = static_cast<long>(mults.size());
  long total = 0;
  for (int m : mults) total += m;
  // Top height above x = f + 1 is 1; walking left the slope drops by m_i at x = i.
  std::vector<Rational> top(static_cast<std::size_t>(f + 2));
  top[static_cast<std::size_t>(f + 1)] = 1;
  long slope = total;
  for (long x = f; x >= 0; --x) {
    top[static_cast<std::size_t>(x)] = top[static_cast<std::size_t>(x + 1)] + slope;
    if (x >= 1) slope -= mults[static_cast<std::size_t>(x - 1)];
  }
  BaseDiagram d;
  d.polygon.push_back({0, 0});
  d.polygon.push_back({f + 1, 0});
  d.polygon.push_back({f + 1, top[static_cast<std::size_t>(f + 1)]});
  for (long x = f; x >= 1; --x) d.polygon.push_back({x, top[static_cast<std::size_t>(x)]});
  d.polygon.push_back({0, top[0]});
  for (long i = 0; i < f; ++i) {
    Rational y = i < static_cast<long>(heights.size()) ? heights[static_cast<std::size_t>(i)] : Rational(1, 2);
    d.nodes.push_back({{i + 1, y}, mults[static_cast<std::size_t>(i)], {0, 1}, CutSign::kPlus});
  }
  return d;
}

AffineIso random_iso(Rng& rng, int bound, long max_shift) {
  IntMatrix2 m;
  do {
    m = {rng.uniform(-bound, bound), rng.uniform(-bound, bound), rng.uniform(-bound, bound), rng.uniform(-bound, bound)};
  } while (m.determinant() != 1);
  return {m, {rng.uniform(-max_shift, max_shift), rng.uniform(-max_shift, max_shift)}};
}

BaseDiagram random_diagram(Rng& rng, const std::vector<int>& mults) {
  std::vector<Rational> heights;
  for (std::size_t i = 0; i < mults.size(); ++i) {
    heights.emplace_back(rng.uniform(1, 3), rng.uniform(2, 3));
    heights.back().canonicalize();
  }
  return apply_iso(random_iso(rng, 2), roof_diagram(mults, heights));
}

CompleteIngredient random_ingredient(Rng& rng, int nodes, int max_mult, int order) {
  std::vector<int> mults;
  for (int i = 0; i < nodes; ++i) mults.push_back(static_cast<int>(rng.uniform(1, max_mult)));
  CompleteIngredient out;
  out.base = random_diagram(rng, mults);
  for (int m : mults) out.labels.push_back(random_label(rng, m, order));
  for (int i = 0; i < nodes; ++i) out.k.push_back(rng.uniform(-5, 5));
  return out;
}

std::string mutate(Rng& rng, RawLabelData& data, Mutation kind) {
  const int m = data.m;
  const int order = data.s.front().order();
  auto g = [&](int u, int v) -> Jet2& { return data.g[static_cast<std::size_t>(u * m + v)]; };
  auto pick_pair = [&](int& u, int& v) {
    u = static_cast<int>(rng.uniform(0, m - 1));
    v = static_cast<int>(rng.uniform(0, m - 2));
    if (v >= u) ++v;
  };
  if (m == 1 && (kind == Mutation::kBrokenAction || kind == Mutation::kBrokenCocycle)) kind = Mutation::kConstantTerm;
  int u = 0, v = 0;
  switch (kind) {
    case Mutation::kNegativeTransition: {
      if (m > 1) pick_pair(u, v);
      Jet2& t = g(u, v);
      t.set(0, 1, -t.coeff(0, 1));
      return to_string(LabelCondition::kPositivity);
    }
    case Mutation::kBrokenIdentity: {
      u = static_cast<int>(rng.uniform(0, m - 1));
      int p = static_cast<int>(rng.uniform(0, std::min(order - 1, 3)));
      g(u, u).add(p, 1 + (p == 0 ? 1 : 0), Coeff(rng.nonzero_rational()));
      return to_string(LabelCondition::kIdentity);
    }
    case Mutation::kBrokenAction: {
      u = static_cast<int>(rng.uniform(0, m - 1));
      int d = static_cast<int>(rng.uniform(1, std::min(order, 4)));
      int q = static_cast<int>(rng.uniform(0, d));
      data.s[static_cast<std::size_t>(u)].add(d - q, q, Coeff(rng.nonzero_rational()));
      return to_string(LabelCondition::kActionCompatibility);
    }
    case Mutation::kBrokenCocycle: {
      pick_pair(u, v);
      int d = static_cast<int>(rng.uniform(2, std::min(order, 4)));
      int q = static_cast<int>(rng.uniform(0, d));
      g(u, v).add(d - q, q, Coeff(rng.nonzero_rational()));
      return to_string(LabelCondition::kCocycle);
    }
    case Mutation::kConstantTerm: {
      u = static_cast<int>(rng.uniform(0, m - 1));
      data.s[static_cast<std::size_t>(u)].set(0, 0, Coeff(rng.nonzero_rational()));
      return to_string(LabelCondition::kConstantTerm);
    }
  }
  return {};
}

Permutation random_permutation(Rng& rng, std::size_t n) {
  Permutation p(n);
  std::iota(p.begin(), p.end(), std::size_t{0});
  std::shuffle(p.begin(), p.end(), rng.engine());
  return p;
}

}  // namespace atoric::testing
