#include "atoric/base.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace atoric {

namespace {

struct RVec {
  Rational x;
  Rational y;
};

RVec sub(const Point& a, const Point& b) { return {a.x - b.x, a.y - b.y}; }
Rational cross(const RVec& a, const RVec& b) { return a.x * b.y - a.y * b.x; }
Rational cross(const RVec& a, const IntVec& b) { return a.x * b.y - a.y * b.x; }

bool is_zero(const RVec& v) { return sgn(v.x) == 0 && sgn(v.y) == 0; }

// Primitive integer vector with the direction of a nonzero rational vector.
IntVec primitive(const RVec& v) {
  mpz_class l;
  mpz_lcm(l.get_mpz_t(), v.x.get_den_mpz_t(), v.y.get_den_mpz_t());
  mpz_class a = v.x.get_num() * (l / v.x.get_den());
  mpz_class b = v.y.get_num() * (l / v.y.get_den());
  mpz_class g = gcd(a, b);
  a /= g;
  b /= g;
  if (!a.fits_slong_p() || !b.fits_slong_p()) throw std::overflow_error("edge direction too large");
  return {a.get_si(), b.get_si()};
}

long gcd_long(long a, long b) { return std::gcd(std::labs(a), std::labs(b)); }

Point translate(const Point& p, const RVec& v) { return {p.x + v.x, p.y + v.y}; }

RVec apply_shear(const IntVec& e, long mult, const RVec& v, long power) {
  Rational k = Rational(mult * power) * cross(v, e);
  return {v.x + k * e.x, v.y + k * e.y};
}

// 0 outside, 1 on boundary, 2 strictly inside.
int locate(const std::vector<Point>& poly, const Point& p) {
  const std::size_t n = poly.size();
  bool inside = false;
  for (std::size_t i = 0; i < n; ++i) {
    const Point& a = poly[i];
    const Point& b = poly[(i + 1) % n];
    RVec ab = sub(b, a);
    RVec ap = sub(p, a);
    if (sgn(cross(ab, ap)) == 0) {
      Rational dot = ab.x * ap.x + ab.y * ap.y;
      Rational len = ab.x * ab.x + ab.y * ab.y;
      if (sgn(dot) >= 0 && dot <= len) return 1;
    }
    if ((a.y > p.y) != (b.y > p.y)) {
      Rational xint = a.x + (p.y - a.y) * (b.x - a.x) / (b.y - a.y);
      if (p.x < xint) inside = !inside;
    }
  }
  return inside ? 2 : 0;
}

bool on_segment(const Point& a, const Point& b, const Point& p) {
  RVec ab = sub(b, a);
  RVec ap = sub(p, a);
  if (sgn(cross(ab, ap)) != 0) return false;
  Rational dot = ab.x * ap.x + ab.y * ap.y;
  return sgn(dot) >= 0 && dot <= ab.x * ab.x + ab.y * ab.y;
}

bool segments_intersect(const Point& a, const Point& b, const Point& c, const Point& d) {
  int d1 = sgn(cross(sub(b, a), sub(c, a)));
  int d2 = sgn(cross(sub(b, a), sub(d, a)));
  int d3 = sgn(cross(sub(d, c), sub(a, c)));
  int d4 = sgn(cross(sub(d, c), sub(b, c)));
  if (d1 * d2 < 0 && d3 * d4 < 0) return true;
  return on_segment(a, b, c) || on_segment(a, b, d) || on_segment(c, d, a) || on_segment(c, d, b);
}

Rational twice_area(const std::vector<Point>& poly) {
  Rational area = 0;
  for (std::size_t i = 0; i < poly.size(); ++i) {
    const Point& a = poly[i];
    const Point& b = poly[(i + 1) % poly.size()];
    area += a.x * b.y - a.y * b.x;
  }
  return area;
}

std::string vec_string(const IntVec& v) {
  std::ostringstream out;
  out << "(" << v.x << "," << v.y << ")";
  return out.str();
}

// Polygon with `p` inserted on edge `edge` unless it already is a vertex;
// returns the vertex index of p.
std::size_t insert_vertex(std::vector<Point>& poly, const RayHit& hit) {
  if (hit.at_vertex) return hit.vertex;
  poly.insert(poly.begin() + static_cast<std::ptrdiff_t>(hit.edge + 1), hit.point);
  return hit.edge + 1;
}

bool collinear_through(const std::vector<Point>& poly, std::size_t i) {
  const std::size_t n = poly.size();
  RVec u = sub(poly[i], poly[(i + n - 1) % n]);
  RVec w = sub(poly[(i + 1) % n], poly[i]);
  return sgn(cross(u, w)) == 0 && sgn(u.x * w.x + u.y * w.y) > 0;
}

}  // namespace

std::string to_string(const Point& p) {
  return "(" + rational_to_string(p.x) + "," + rational_to_string(p.y) + ")";
}

std::string to_string(const IntMatrix2& m) {
  std::ostringstream out;
  out << "[[" << m.a << "," << m.b << "],[" << m.c << "," << m.d << "]]";
  return out.str();
}

bool same_presentation(const BaseDiagram& a, const BaseDiagram& b) {
  if (a.nodes != b.nodes || a.polygon.size() != b.polygon.size()) return false;
  const std::size_t n = a.polygon.size();
  if (n == 0) return true;
  for (std::size_t shift = 0; shift < n; ++shift) {
    bool match = true;
    for (std::size_t i = 0; i < n && match; ++i) match = a.polygon[i] == b.polygon[(i + shift) % n];
    if (match) return true;
  }
  return false;
}

IntVec shear(const IntVec& eigen, long mult, const IntVec& v, long power) {
  long k = mult * power * det(v, eigen);
  return {v.x + k * eigen.x, v.y + k * eigen.y};
}

Point AffineIso::apply(const Point& p) const {
  return {linear.a * p.x + linear.b * p.y + translate.x, linear.c * p.x + linear.d * p.y + translate.y};
}

AffineIso AffineIso::inverse() const {
  // det = 1, so the inverse linear part is the adjugate.
  IntMatrix2 inv{linear.d, -linear.b, -linear.c, linear.a};
  Point t{-(inv.a * translate.x + inv.b * translate.y), -(inv.c * translate.x + inv.d * translate.y)};
  return {inv, t};
}

AffineIso compose(const AffineIso& outer, const AffineIso& inner) {
  AffineIso out;
  out.linear = outer.linear * inner.linear;
  out.translate = outer.apply(inner.translate);
  return out;
}

BaseDiagram apply_iso(const AffineIso& g, const BaseDiagram& d) {
  BaseDiagram out;
  out.polygon.reserve(d.polygon.size());
  for (const auto& p : d.polygon) out.polygon.push_back(g.apply(p));
  for (const auto& node : d.nodes) {
    Node moved = node;
    moved.pos = g.apply(node.pos);
    moved.eigen = g.linear.apply(node.eigen);
    out.nodes.push_back(moved);
  }
  return out;
}

std::optional<RayHit> ray_exit(const std::vector<Point>& polygon, const Point& origin, const IntVec& dir) {
  std::optional<RayHit> best;
  std::optional<Rational> best_t;
  const std::size_t n = polygon.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Point& a = polygon[i];
    const Point& b = polygon[(i + 1) % n];
    RVec e = sub(b, a);
    Rational denom = cross(RVec{Rational(dir.x), Rational(dir.y)}, e);
    if (sgn(denom) == 0) continue;
    RVec ao = sub(a, origin);
    Rational t = cross(ao, e) / denom;
    Rational s = cross(ao, dir) / denom;
    if (sgn(t) <= 0 || sgn(s) < 0 || s > 1) continue;
    if (best_t && t >= *best_t) continue;
    RayHit hit;
    hit.point = {origin.x + t * dir.x, origin.y + t * dir.y};
    hit.edge = i;
    if (sgn(s) == 0) {
      hit.at_vertex = true;
      hit.vertex = i;
    } else if (s == 1) {
      hit.at_vertex = true;
      hit.vertex = (i + 1) % n;
    }
    best = hit;
    best_t = t;
  }
  return best;
}

ValidationReport validate_diagram(const BaseDiagram& d) {
  ValidationReport report;
  const auto& poly = d.polygon;
  const std::size_t n = poly.size();
  const std::string src = "diagram";

  if (n < 3) {
    report.add(src, "a:simple-ccw", "polygon needs at least 3 vertices");
    return report;
  }

  // (f) and degenerate edges.
  std::vector<IntVec> dirs(n);
  bool edges_ok = true;
  for (std::size_t i = 0; i < n; ++i) {
    RVec e = sub(poly[(i + 1) % n], poly[i]);
    if (is_zero(e)) {
      report.add(src, "f:rational-edges", "edge " + std::to_string(i) + " has zero length");
      edges_ok = false;
      continue;
    }
    dirs[i] = primitive(e);
  }
  if (!edges_ok) return report;

  // (a)
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const bool adjacent = j == i + 1 || (i == 0 && j == n - 1);
      const Point& a = poly[i];
      const Point& b = poly[(i + 1) % n];
      const Point& c = poly[j];
      const Point& e = poly[(j + 1) % n];
      if (!adjacent) {
        if (segments_intersect(a, b, c, e)) {
          report.add(src, "a:simple-ccw", "edges " + std::to_string(i) + " and " + std::to_string(j) + " intersect");
        }
      } else {
        // Adjacent edges may only share their common vertex: reject folding back.
        const IntVec& u = dirs[i];
        const IntVec& w = dirs[j];
        if (det(u, w) == 0 && u.x * w.x + u.y * w.y < 0) {
          report.add(src, "a:simple-ccw", "edges " + std::to_string(i) + " and " + std::to_string(j) + " overlap");
        }
      }
    }
  }
  if (sgn(twice_area(poly)) <= 0) report.add(src, "a:simple-ccw", "polygon is not counterclockwise");

  // Nodes, cut rays.
  std::vector<std::optional<RayHit>> cut_hits(d.nodes.size());
  std::vector<int> vertex_cut(n, -1);
  for (std::size_t i = 0; i < d.nodes.size(); ++i) {
    const Node& node = d.nodes[i];
    const std::string who = "node " + std::to_string(i + 1);
    if (node.mult < 1) report.add(src, "e:nodes", who + " has multiplicity " + std::to_string(node.mult));
    if (node.eigen.x == 0 && node.eigen.y == 0) {
      report.add(src, "d:eigen", who + " has zero eigen direction");
      continue;
    }
    if (gcd_long(node.eigen.x, node.eigen.y) != 1) {
      report.add(src, "d:eigen", who + " eigen " + vec_string(node.eigen) + " is not primitive");
    }
    if (shear(node.eigen, node.mult, node.eigen) != node.eigen) {
      report.add(src, "d:eigen", who + " eigen is not fixed by its shear");
    }
    if (locate(poly, node.pos) != 2) {
      report.add(src, "e:nodes", who + " at " + to_string(node.pos) + " is not strictly inside the polygon");
      continue;
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (d.nodes[j].pos == node.pos) report.add(src, "e:nodes", who + " coincides with node " + std::to_string(j + 1));
    }
    cut_hits[i] = ray_exit(poly, node.pos, node.cut_direction());
    if (!cut_hits[i]) {
      report.add(src, "e:nodes", who + " cut ray does not reach the boundary");
      continue;
    }
    if (!cut_hits[i]->at_vertex) {
      report.add(src, "c:cut-corner",
                 who + " cut ray ends inside edge " + std::to_string(cut_hits[i]->edge) + " at " +
                     to_string(cut_hits[i]->point) + "; the boundary must break there");
    } else {
      vertex_cut[cut_hits[i]->vertex] = static_cast<int>(i);
    }
  }
  for (std::size_t i = 0; i < d.nodes.size(); ++i) {
    if (!cut_hits[i]) continue;
    const Point& a = d.nodes[i].pos;
    const Point& b = cut_hits[i]->point;
    for (std::size_t j = 0; j < d.nodes.size(); ++j) {
      if (j == i) continue;
      if (on_segment(a, b, d.nodes[j].pos)) {
        report.add(src, "e:nodes", "node " + std::to_string(j + 1) + " lies on the cut of node " + std::to_string(i + 1));
      }
      if (j > i && cut_hits[j] && segments_intersect(a, b, d.nodes[j].pos, cut_hits[j]->point)) {
        report.add(src, "e:nodes", "cuts of nodes " + std::to_string(i + 1) + " and " + std::to_string(j + 1) + " meet");
      }
    }
  }

  // (b), (c) corners; u is the incoming, w the outgoing direction.
  for (std::size_t v = 0; v < n; ++v) {
    const IntVec& u = dirs[(v + n - 1) % n];
    const IntVec& w = dirs[v];
    const std::string at = "vertex " + std::to_string(v) + " " + to_string(poly[v]);
    if (vertex_cut[v] < 0) {
      if (det(u, w) != 1) {
        report.add(src, "b:corner", at + ": det" + vec_string(u) + vec_string(w) + " = " + std::to_string(det(u, w)));
      }
      continue;
    }
    const Node& node = d.nodes[static_cast<std::size_t>(vertex_cut[v])];
    IntVec su = shear(node.eigen, node.mult, u);
    const bool smooth = det(su, w) == 0 && su.x * w.x + su.y * w.y > 0;
    if (!smooth && det(su, w) != 1) {
      report.add(src, "c:cut-corner",
                 at + ": sheared incoming " + vec_string(su) + " vs outgoing " + vec_string(w) +
                     " is neither an edge point nor a unimodular corner");
    }
  }
  return report;
}

bool verify_iso(const BaseDiagram& d, const BaseDiagram& d_prime, const AffineIso& g) {
  if (g.linear.determinant() != 1) return false;
  if (d.polygon.size() != d_prime.polygon.size() || d.nodes.size() != d_prime.nodes.size()) return false;
  for (std::size_t i = 0; i < d.nodes.size(); ++i) {
    const Node& a = d.nodes[i];
    const Node& b = d_prime.nodes[i];
    if (a.mult != b.mult) return false;
    if (!(g.apply(a.pos) == b.pos)) return false;
    IntVec e = g.linear.apply(a.eigen);
    if (e != b.eigen && e != -b.eigen) return false;
    if (g.linear.apply(a.cut_direction()) != b.cut_direction()) return false;
  }
  std::vector<Point> mapped;
  mapped.reserve(d.polygon.size());
  for (const auto& p : d.polygon) mapped.push_back(g.apply(p));
  std::vector<Point> target = d_prime.polygon;
  std::sort(mapped.begin(), mapped.end());
  std::sort(target.begin(), target.end());
  return mapped == target;
}

std::optional<AffineIso> find_iso(const BaseDiagram& d, const BaseDiagram& d_prime, int bound) {
  if (d.nodes.size() != d_prime.nodes.size() || d.polygon.size() != d_prime.polygon.size() || d.polygon.empty()) {
    return std::nullopt;
  }
  for (std::size_t i = 0; i < d.nodes.size(); ++i) {
    if (d.nodes[i].mult != d_prime.nodes[i].mult) return std::nullopt;
  }
  if (twice_area(d.polygon) != twice_area(d_prime.polygon)) return std::nullopt;

  for (long a = -bound; a <= bound; ++a) {
    for (long b = -bound; b <= bound; ++b) {
      for (long c = -bound; c <= bound; ++c) {
        for (long e = -bound; e <= bound; ++e) {
          IntMatrix2 lin{a, b, c, e};
          if (lin.determinant() != 1) continue;
          AffineIso g{lin, Point{0, 0}};
          auto try_anchor = [&](const Point& from, const Point& to) -> std::optional<AffineIso> {
            Point image = g.apply(from);
            AffineIso candidate{lin, Point{to.x - image.x, to.y - image.y}};
            if (verify_iso(d, d_prime, candidate)) return candidate;
            return std::nullopt;
          };
          if (!d.nodes.empty()) {
            if (auto found = try_anchor(d.nodes[0].pos, d_prime.nodes[0].pos)) return found;
            continue;
          }
          for (const auto& target : d_prime.polygon) {
            if (auto found = try_anchor(d.polygon[0], target)) return found;
          }
        }
      }
    }
  }
  return std::nullopt;
}

BaseDiagram flip_cut(const BaseDiagram& d, std::size_t index) {
  if (index >= d.nodes.size()) throw std::out_of_range("flip_cut: no such node");
  const Node& node = d.nodes[index];
  auto plus = ray_exit(d.polygon, node.pos, node.eigen);
  auto minus = ray_exit(d.polygon, node.pos, -node.eigen);
  if (!plus || !minus) throw std::invalid_argument("flip_cut: eigenline of the node does not meet the boundary twice");

  std::vector<Point> poly = d.polygon;
  std::size_t i_plus = insert_vertex(poly, *plus);
  auto minus_now = ray_exit(poly, node.pos, -node.eigen);
  std::size_t i_minus = insert_vertex(poly, *minus_now);
  if (!minus_now->at_vertex && i_minus <= i_plus) ++i_plus;
  const std::size_t n = poly.size();

  // Right of +eigen: the boundary walked counterclockwise from the -eigen exit
  // to the +eigen exit, closed by the chord through the node.
  std::vector<Point> right_region{poly[i_minus]};
  std::vector<std::size_t> right_vertices;
  for (std::size_t k = (i_minus + 1) % n; k != i_plus; k = (k + 1) % n) {
    right_region.push_back(poly[k]);
    right_vertices.push_back(k);
  }
  right_region.push_back(poly[i_plus]);

  const long power = node.cut == CutSign::kPlus ? 1 : -1;
  auto transform = [&](const Point& p) {
    return translate(node.pos, apply_shear(node.eigen, node.mult, sub(p, node.pos), power));
  };

  BaseDiagram out;
  out.nodes = d.nodes;
  for (std::size_t j = 0; j < d.nodes.size(); ++j) {
    if (j == index) continue;
    if (right_region.size() >= 3 && locate(right_region, d.nodes[j].pos) == 2) {
      out.nodes[j].pos = transform(d.nodes[j].pos);
      out.nodes[j].eigen = shear(node.eigen, node.mult, d.nodes[j].eigen, power);
    }
  }
  out.nodes[index].cut = opposite(node.cut);
  for (std::size_t k : right_vertices) poly[k] = transform(poly[k]);

  // The old cut endpoint is now an ordinary edge point unless another cut ends there.
  const Point old_end = node.cut == CutSign::kPlus ? poly[i_plus] : poly[i_minus];
  bool other_cut_ends_there = false;
  for (std::size_t j = 0; j < out.nodes.size(); ++j) {
    if (j == index) continue;
    auto hit = ray_exit(poly, out.nodes[j].pos, out.nodes[j].cut_direction());
    if (hit && hit->point == old_end) other_cut_ends_there = true;
  }
  const std::size_t old_index = node.cut == CutSign::kPlus ? i_plus : i_minus;
  if (!other_cut_ends_there && collinear_through(poly, old_index)) {
    poly.erase(poly.begin() + static_cast<std::ptrdiff_t>(old_index));
  }
  out.polygon = std::move(poly);
  return out;
}

Branch Branch::principal() { return {-std::numbers::pi}; }
Branch Branch::sheet(int sheet) { return {-std::numbers::pi + 2.0 * std::numbers::pi * sheet}; }

LatticeBasis standard_lattice(int m, std::complex<double> z, Branch branch) {
  if (m < 1) throw std::invalid_argument("standard_lattice: multiplicity must be positive");
  const double r = std::abs(z);
  if (!(r > 0.0) || !(r < 1.0)) throw std::domain_error("standard_lattice: need 0 < |z| < 1");
  double arg = std::arg(z);
  const double two_pi = 2.0 * std::numbers::pi;
  while (arg <= branch.arg_lower) arg += two_pi;
  while (arg > branch.arg_lower + two_pi) arg -= two_pi;
  const double scale = -static_cast<double>(m) / two_pi;
  LatticeBasis basis;
  basis.at = {z.real(), z.imag()};
  basis.v1 = {1.0, 0.0};
  basis.v2 = {scale * arg, scale * std::log(r)};
  return basis;
}

std::array<std::array<double, 2>, 2> change_of_basis(const LatticeBasis& basis, const LatticeBasis& other) {
  const double a = basis.v1[0], b = basis.v2[0], c = basis.v1[1], e = basis.v2[1];
  const double dt = a * e - b * c;
  auto solve = [&](const std::array<double, 2>& v) -> std::array<double, 2> {
    return {(e * v[0] - b * v[1]) / dt, (-c * v[0] + a * v[1]) / dt};
  };
  auto c1 = solve(other.v1);
  auto c2 = solve(other.v2);
  // rows x columns
  return {{{c1[0], c2[0]}, {c1[1], c2[1]}}};
}

MonodromyResult node_monodromy(int m, LoopDirection loop, double radius, int steps) {
  if (!(radius > 0.0 && radius < 1.0)) throw std::domain_error("node_monodromy: need 0 < radius < 1");
  if (steps < 4) throw std::invalid_argument("node_monodromy: too few steps");
  const double two_pi = 2.0 * std::numbers::pi;
  const double sense = loop == LoopDirection::kCounterclockwise ? 1.0 : -1.0;

  const LatticeBasis start = standard_lattice(m, std::complex<double>(radius, 0.0));
  double arg = std::arg(std::complex<double>(radius, 0.0));
  double prev = arg;
  for (int j = 1; j <= steps; ++j) {
    const double theta = sense * two_pi * j / steps;
    const double principal = std::arg(std::polar(radius, theta));
    arg += std::remainder(principal - prev, two_pi);
    prev = principal;
  }
  const double scale = -static_cast<double>(m) / two_pi;
  LatticeBasis end = start;
  end.v2 = {scale * arg, scale * std::log(radius)};

  auto coords = change_of_basis(start, end);
  MonodromyResult result;
  long entries[2][2];
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      const double rounded = std::round(coords[i][j]);
      result.max_deviation = std::max(result.max_deviation, std::abs(coords[i][j] - rounded));
      entries[i][j] = static_cast<long>(rounded);
    }
  }
  if (result.max_deviation > 1e-6) {
    throw std::runtime_error("node_monodromy: transported basis is not integral (deviation " +
                             std::to_string(result.max_deviation) + ")");
  }
  result.matrix = {entries[0][0], entries[0][1], entries[1][0], entries[1][1]};
  return result;
}

SmithForm2 smith_normal_form(const IntMatrix2& m) {
  long g = gcd_long(gcd_long(m.a, m.b), gcd_long(m.c, m.d));
  if (g == 0) return {0, 0};
  return {g, std::labs(m.determinant()) / g};
}

}  // namespace atoric
