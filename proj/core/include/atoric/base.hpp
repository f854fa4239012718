#pragma once

#include <array>
#include <complex>
#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "atoric/coeff.hpp"
#include "atoric/report.hpp"

namespace atoric {

struct Point {
  Rational x;
  Rational y;

  friend bool operator==(const Point& a, const Point& b) { return a.x == b.x && a.y == b.y; }
  friend bool operator<(const Point& a, const Point& b) { return a.x < b.x || (a.x == b.x && a.y < b.y); }
};

std::string to_string(const Point& p);

struct IntVec {
  long x = 0;
  long y = 0;

  friend bool operator==(const IntVec&, const IntVec&) = default;
  IntVec operator-() const { return {-x, -y}; }
};

inline long det(const IntVec& a, const IntVec& b) { return a.x * b.y - a.y * b.x; }

/// Which half of the eigenline is the cut ray: kPlus runs along +eigen.
enum class CutSign { kPlus, kMinus };

inline CutSign opposite(CutSign s) { return s == CutSign::kPlus ? CutSign::kMinus : CutSign::kPlus; }

/// A node c_i: a focus-focus value of multiplicity `mult` with eigenline
/// direction `eigen` (primitive, oriented) and a cut ray along cut*eigen.
struct Node {
  Point pos;
  int mult = 1;
  IntVec eigen{0, 1};
  CutSign cut = CutSign::kPlus;

  IntVec cut_direction() const { return cut == CutSign::kPlus ? eigen : -eigen; }
  friend bool operator==(const Node&, const Node&) = default;
};

/// Concrete presentation of a marked almost-toric closed disk.
///
/// The polygon is the image of B under a chart that is integral affine away
/// from the straight cut rays; across each cut the chart jumps by the node's
/// shear. Vertices are listed counterclockwise, nodes in marking order.
struct BaseDiagram {
  std::vector<Point> polygon;
  std::vector<Node> nodes;

  friend bool operator==(const BaseDiagram&, const BaseDiagram&) = default;
};

/// Equal up to the choice of starting vertex of the polygon.
bool same_presentation(const BaseDiagram& a, const BaseDiagram& b);

/// Tangent-vector shear of a node: v + m * det(v, e) * e. Crossing a cut
/// counterclockwise around the node maps directions by this shear. `power`
/// may be negative.
IntVec shear(const IntVec& eigen, long mult, const IntVec& v, long power = 1);

/// [[a, b], [c, d]].
struct IntMatrix2 {
  long a = 1, b = 0, c = 0, d = 1;

  long determinant() const { return a * d - b * c; }
  IntVec apply(const IntVec& v) const { return {a * v.x + b * v.y, c * v.x + d * v.y}; }
  friend IntMatrix2 operator*(const IntMatrix2& l, const IntMatrix2& r) {
    return {l.a * r.a + l.b * r.c, l.a * r.b + l.b * r.d, l.c * r.a + l.d * r.c, l.c * r.b + l.d * r.d};
  }
  friend bool operator==(const IntMatrix2&, const IntMatrix2&) = default;
  friend auto operator<=>(const IntMatrix2&, const IntMatrix2&) = default;
};

std::string to_string(const IntMatrix2& m);

/// x -> linear * x + translate, with det(linear) = +1.
struct AffineIso {
  IntMatrix2 linear;
  Point translate{0, 0};

  static AffineIso identity() { return {}; }
  Point apply(const Point& p) const;
  AffineIso inverse() const;

  friend bool operator==(const AffineIso&, const AffineIso&) = default;
};

/// outer o inner.
AffineIso compose(const AffineIso& outer, const AffineIso& inner);

/// Image of a diagram: vertices, node positions, eigenlines and cut rays.
BaseDiagram apply_iso(const AffineIso& g, const BaseDiagram& d);

struct RayHit {
  Point point;
  std::size_t edge = 0;   // edge (edge, edge+1)
  bool at_vertex = false;
  std::size_t vertex = 0;  // valid when at_vertex
};

/// First point where origin + t*dir (t > 0) meets the polygon boundary.
std::optional<RayHit> ray_exit(const std::vector<Point>& polygon, const Point& origin, const IntVec& dir);

/// Checks the local models of an almost-toric closed disk on the diagram:
///   a:simple-ccw    polygon simple and counterclockwise
///   b:corner        det(u, w) = 1 for primitive edge directions at vertices off the cuts
///   c:cut-corner    cut rays end at vertices whose edges agree after the node shear
///                   (edge point) or form a unimodular corner after it
///   d:eigen         eigen primitive and fixed by its shear
///   e:nodes         nodes interior, distinct, off other cuts; cuts pairwise disjoint
///   f:rational-edges every edge has a rational direction
ValidationReport validate_diagram(const BaseDiagram& d);

/// G maps the polygon onto the polygon and node i onto node i with the same
/// multiplicity, eigenline and cut ray.
bool verify_iso(const BaseDiagram& d, const BaseDiagram& d_prime, const AffineIso& g);

/// Bounded exhaustive search. Linear parts are enumerated with entries in
/// [-bound, bound] in lexicographic order (a, b, c, d); the first verified
/// isomorphism is returned. std::nullopt means none within the bound, not
/// that none exists.
std::optional<AffineIso> find_iso(const BaseDiagram& d, const BaseDiagram& d_prime, int bound);

/// Moves the cut of node `index` to the other half of its eigenline and
/// redraws the diagram so it presents the same disk: the part of the polygon
/// to the right of the directed eigenline (+eigen) is sheared about the node,
/// by S for + -> - and by S^-1 for - -> +. Applying it twice is the identity
/// (up to the starting vertex).
BaseDiagram flip_cut(const BaseDiagram& d, std::size_t index);

// --- Period lattice of the standard focus-focus base -----------------------

/// Argument convention for ln: arg z in (arg_lower, arg_lower + 2*pi].
struct Branch {
  double arg_lower;

  static Branch principal();
  /// Principal branch shifted by 2*pi*sheet.
  static Branch sheet(int sheet);
};

struct LatticeBasis {
  std::array<double, 2> at{};
  std::array<double, 2> v1{};
  std::array<double, 2> v2{};
};

/// Fiber Z dx + Z (-(m/2pi) Im ln z dx - (m/2pi) Re ln z dy) at 0 < |z| < 1.
LatticeBasis standard_lattice(int m, std::complex<double> z, Branch branch = Branch::principal());

/// Coordinates of the columns of `other` (v1, v2) in the basis `basis`.
std::array<std::array<double, 2>, 2> change_of_basis(const LatticeBasis& basis, const LatticeBasis& other);

enum class LoopDirection { kCounterclockwise, kClockwise };

struct MonodromyResult {
  IntMatrix2 matrix;          // columns: transported v1, v2 in the initial basis
  double max_deviation = 0.0;  // distance of the entries from integers before rounding
};

/// Parallel transport of the standard_lattice basis once around the puncture
/// along |z| = radius, starting at z = radius, with ln continued along the loop.
MonodromyResult node_monodromy(int m, LoopDirection loop = LoopDirection::kCounterclockwise,
                               double radius = 0.5, int steps = 3600);

struct SmithForm2 {
  long d1 = 0;
  long d2 = 0;
};

/// Elementary divisors d1 | d2 of a 2x2 integer matrix.
SmithForm2 smith_normal_form(const IntMatrix2& m);

}  // namespace atoric
