#pragma once

// Plane realization of separated systems.
//
// Element k of [n] goes to the clockwise root of unity
// xi_k = (sin(2 pi k / n), cos(2 pi k / n)) and a set X to xi(X) = sum of xi_k
// over k in X. A separated system C gives the plabic complex Sigma(C):
// white cells are convex hulls of the nontrivial cliques W(K) = {X in C : K in X}
// for |K| = r-1, black cells those of B(L) = {X in C : X in L} for |L| = r+1.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <map>
#include <numbers>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "collection.hpp"
#include "necklace.hpp"
#include "regions.hpp"

namespace wsc {

/// Geometric tolerances, relative to the drawing scale (max |xi(X)|, at least 1).
inline constexpr double kPointTolerance = 1e-9;
inline constexpr double kGeometryTolerance = 1e-6;
inline constexpr double kAreaTolerance = 1e-6;

struct PlanePoint
{
  double x = 0;
  double y = 0;

  PlanePoint operator+(PlanePoint o) const { return {x + o.x, y + o.y}; }
  PlanePoint operator-(PlanePoint o) const { return {x - o.x, y - o.y}; }
  PlanePoint operator*(double s) const { return {x * s, y * s}; }
  bool operator==(const PlanePoint&) const = default;
};

inline double dot(PlanePoint a, PlanePoint b) { return a.x * b.x + a.y * b.y; }
inline double cross(PlanePoint a, PlanePoint b) { return a.x * b.y - a.y * b.x; }
inline double norm(PlanePoint a) { return std::hypot(a.x, a.y); }
inline double distance(PlanePoint a, PlanePoint b) { return norm(a - b); }

inline PlanePoint root_of_unity(Element k, int n)
{
  const double t = 2.0 * std::numbers::pi * k / n;
  return {std::sin(t), std::cos(t)};
}

inline PlanePoint embed(const Subset& x)
{
  PlanePoint p;
  for (Element k : x.elements())
    p = p + root_of_unity(k, x.ground());
  return p;
}

// ---------------------------------------------------------------------------
// Planar primitives

namespace geom {

inline double distance_to_segment(PlanePoint p, PlanePoint a, PlanePoint b)
{
  const PlanePoint ab = b - a;
  const double len2 = dot(ab, ab);
  if (len2 == 0)
    return distance(p, a);
  const double t = std::clamp(dot(p - a, ab) / len2, 0.0, 1.0);
  return distance(p, a + ab * t);
}

/// Closest distance between two segments (0 when they cross).
inline double segment_distance(PlanePoint a, PlanePoint b, PlanePoint c, PlanePoint d)
{
  const double d1 = cross(b - a, c - a);
  const double d2 = cross(b - a, d - a);
  const double d3 = cross(d - c, a - c);
  const double d4 = cross(d - c, b - c);
  if (((d1 > 0 && d2 < 0) || (d1 < 0 && d2 > 0)) && ((d3 > 0 && d4 < 0) || (d3 < 0 && d4 > 0)))
    return 0;
  return std::min({distance_to_segment(a, c, d), distance_to_segment(b, c, d), distance_to_segment(c, a, b),
                   distance_to_segment(d, a, b)});
}

inline double signed_area(const std::vector<PlanePoint>& poly)
{
  double s = 0;
  for (std::size_t k = 0; k < poly.size(); ++k)
    s += cross(poly[k], poly[(k + 1) % poly.size()]);
  return s / 2;
}

/// Length of the part of segment [a, b] inside a convex polygon
/// (Cyrus-Beck clipping against each edge half-plane).
inline double clipped_length(PlanePoint a, PlanePoint b, const std::vector<PlanePoint>& convex)
{
  const bool ccw = signed_area(convex) > 0;
  double lo = 0, hi = 1;
  const PlanePoint dir = b - a;
  for (std::size_t k = 0; k < convex.size(); ++k) {
    PlanePoint e0 = convex[k];
    PlanePoint e1 = convex[(k + 1) % convex.size()];
    PlanePoint edge = e1 - e0;
    // inside: cross(edge, p - e0) >= 0 for ccw
    double num = cross(edge, a - e0);
    double den = cross(edge, dir);
    if (!ccw) {
      num = -num;
      den = -den;
    }
    if (den == 0) {
      if (num < 0)
        return 0;
      continue;
    }
    double t = -num / den;
    if (den > 0)
      lo = std::max(lo, t);
    else
      hi = std::min(hi, t);
    if (lo > hi)
      return 0;
  }
  return (hi - lo) * norm(dir);
}

/// Even-odd rule, strict interior assumed (boundary handled by the caller).
inline bool crossing_inside(PlanePoint p, const std::vector<PlanePoint>& poly)
{
  bool inside = false;
  for (std::size_t k = 0, m = poly.size(), prev = m - 1; k < m; prev = k++) {
    const PlanePoint a = poly[k];
    const PlanePoint b = poly[prev];
    if ((a.y > p.y) != (b.y > p.y)) {
      const double xcross = a.x + (p.y - a.y) * (b.x - a.x) / (b.y - a.y);
      if (p.x < xcross)
        inside = !inside;
    }
  }
  return inside;
}

inline double boundary_distance(PlanePoint p, const std::vector<PlanePoint>& poly)
{
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < poly.size(); ++k)
    best = std::min(best, distance_to_segment(p, poly[k], poly[(k + 1) % poly.size()]));
  return best;
}

/// Convex polygons: interiors overlap by more than `tol` along every
/// separating-axis candidate.
inline bool interiors_overlap(const std::vector<PlanePoint>& a, const std::vector<PlanePoint>& b, double tol)
{
  auto separated_on_axes = [&](const std::vector<PlanePoint>& poly) {
    for (std::size_t k = 0; k < poly.size(); ++k) {
      PlanePoint e = poly[(k + 1) % poly.size()] - poly[k];
      double len = norm(e);
      if (len == 0)
        continue;
      PlanePoint axis{-e.y / len, e.x / len};
      double amin = 1e300, amax = -1e300, bmin = 1e300, bmax = -1e300;
      for (auto p : a) {
        amin = std::min(amin, dot(p, axis));
        amax = std::max(amax, dot(p, axis));
      }
      for (auto p : b) {
        bmin = std::min(bmin, dot(p, axis));
        bmax = std::max(bmax, dot(p, axis));
      }
      if (std::min(amax, bmax) - std::max(amin, bmin) <= tol)
        return true;
    }
    return false;
  };
  return !separated_on_axes(a) && !separated_on_axes(b);
}

} // namespace geom

// ---------------------------------------------------------------------------
// Tiling

enum class CellColor { white, black };

struct Cell
{
  CellColor color = CellColor::white;
  Subset key;                   // K (size r-1) or L (size r+1)
  std::vector<Subset> boundary; // clique members in boundary order
};

/// The complex Sigma(C).
struct Tiling
{
  GroundContext context;
  std::map<Subset, PlanePoint> vertices;
  std::vector<std::pair<Subset, Subset>> edges; // first < second, sorted
  std::vector<Cell> white_cells;                // sorted by key
  std::vector<Cell> black_cells;

  std::size_t cell_count() const { return white_cells.size() + black_cells.size(); }

  std::vector<const Cell*> cells() const
  {
    std::vector<const Cell*> out;
    for (const Cell& c : white_cells)
      out.push_back(&c);
    for (const Cell& c : black_cells)
      out.push_back(&c);
    return out;
  }

  std::vector<PlanePoint> polygon(const Cell& c) const
  {
    std::vector<PlanePoint> out;
    for (const Subset& s : c.boundary)
      out.push_back(vertices.at(s));
    return out;
  }

  /// V - E + F over 2-cells.
  long euler_characteristic() const
  {
    return static_cast<long>(vertices.size()) - static_cast<long>(edges.size()) + static_cast<long>(cell_count());
  }

  double scale() const
  {
    double s = 1;
    for (const auto& [k, p] : vertices)
      s = std::max(s, norm(p));
    return s;
  }
};

inline Tiling build_tiling(const Collection& c)
{
  if (!is_separated(c))
    throw InputError("build_tiling: collection is not separated");
  Tiling t;
  t.context = c.context();
  const int n = c.context().n;
  for (const Subset& x : c)
    t.vertices.emplace(x, embed(x));

  // Members of each clique, keyed by K or L. Iterating C in canonical order
  // and the changed element ascending puts each clique in clockwise order.
  std::map<Subset, std::vector<std::pair<Element, Subset>>> white, black;
  for (const Subset& x : c) {
    for (Element e = 1; e <= n; ++e) {
      if (x.contains(e))
        white[x.without(e)].emplace_back(e, x);
      else
        black[x.with(e)].emplace_back(e, x);
    }
  }
  auto collect = [](std::map<Subset, std::vector<std::pair<Element, Subset>>>& cliques, CellColor color,
                    std::vector<Cell>& cells) {
    for (auto& [key, members] : cliques) {
      if (members.size() < 3)
        continue;
      std::sort(members.begin(), members.end());
      Cell cell;
      cell.color = color;
      cell.key = key;
      for (auto& m : members)
        cell.boundary.push_back(m.second);
      cells.push_back(std::move(cell));
    }
  };
  collect(white, CellColor::white, t.white_cells);
  collect(black, CellColor::black, t.black_cells);

  std::set<std::pair<Subset, Subset>> edges;
  auto add_edge = [&](const Subset& a, const Subset& b) { edges.insert(a < b ? std::pair{a, b} : std::pair{b, a}); };
  for (const Cell* cell : t.cells())
    for (std::size_t k = 0; k < cell->boundary.size(); ++k)
      add_edge(cell->boundary[k], cell->boundary[(k + 1) % cell->boundary.size()]);
  for (std::size_t a = 0; a < c.size(); ++a)
    for (std::size_t b = a + 1; b < c.size(); ++b) {
      const Subset& x = c[a];
      const Subset& y = c[b];
      if (!neighbors(x, y))
        continue;
      auto w = white.find(x & y);
      auto bl = black.find(x | y);
      if (w != white.end() && w->second.size() == 2 && bl != black.end() && bl->second.size() == 2)
        add_edge(x, y);
    }
  t.edges.assign(edges.begin(), edges.end());
  return t;
}

struct ComplexReport
{
  bool pass = true;
  std::vector<std::string> violations;
};

namespace detail {

inline std::string point_text(PlanePoint p)
{
  char buf[64];
  std::snprintf(buf, sizeof buf, "(%.6f, %.6f)", p.x, p.y);
  return buf;
}

inline std::string cell_name(const Cell& c)
{
  return std::string(c.color == CellColor::white ? "W(" : "B(") + to_literal(c.key) + ")";
}

inline bool consecutive_in(const Cell& c, const Subset& a, const Subset& b)
{
  const std::size_t m = c.boundary.size();
  for (std::size_t k = 0; k < m; ++k) {
    const Subset& u = c.boundary[k];
    const Subset& v = c.boundary[(k + 1) % m];
    if ((u == a && v == b) || (u == b && v == a))
      return true;
  }
  return false;
}

} // namespace detail

/// Checks that Sigma(C) is a polygonal complex: distinct vertices, convex
/// cells, interior-disjoint cells meeting in a shared vertex or edge, the
/// segment condition for every neighbor pair, and non-crossing edges.
inline ComplexReport complex_check(const Tiling& t)
{
  ComplexReport rep;
  const double scale = t.scale();
  const double tol = kGeometryTolerance * scale;
  auto violation = [&](std::string s) {
    rep.pass = false;
    rep.violations.push_back(std::move(s));
  };

  std::vector<std::pair<Subset, PlanePoint>> verts(t.vertices.begin(), t.vertices.end());
  for (std::size_t a = 0; a < verts.size(); ++a)
    for (std::size_t b = a + 1; b < verts.size(); ++b)
      if (distance(verts[a].second, verts[b].second) <= kPointTolerance * scale)
        violation("vertices " + to_literal(verts[a].first) + " and " + to_literal(verts[b].first) + " coincide at " +
                  detail::point_text(verts[a].second));

  const auto cells = t.cells();
  std::vector<std::vector<PlanePoint>> polys;
  for (const Cell* c : cells) {
    polys.push_back(t.polygon(*c));
    const auto& poly = polys.back();
    const double area = geom::signed_area(poly);
    for (std::size_t k = 0; k < poly.size(); ++k) {
      const PlanePoint e0 = poly[(k + 1) % poly.size()] - poly[k];
      const PlanePoint e1 = poly[(k + 2) % poly.size()] - poly[(k + 1) % poly.size()];
      const double turn = cross(e0, e1);
      if (area == 0 || (area > 0 ? turn : -turn) <= tol * tol) {
        violation("cell " + detail::cell_name(*c) + " is not strictly convex at " +
                  detail::point_text(poly[(k + 1) % poly.size()]));
        break;
      }
    }
  }

  // neighbor segments meeting a cell in more than a point must be spanned by it
  const std::vector<Subset> members = [&] {
    std::vector<Subset> m;
    for (const auto& [s, p] : t.vertices)
      m.push_back(s);
    return m;
  }();
  for (std::size_t a = 0; a < members.size(); ++a)
    for (std::size_t b = a + 1; b < members.size(); ++b) {
      if (!neighbors(members[a], members[b]))
        continue;
      const PlanePoint pa = t.vertices.at(members[a]);
      const PlanePoint pb = t.vertices.at(members[b]);
      for (std::size_t k = 0; k < cells.size(); ++k) {
        if (geom::clipped_length(pa, pb, polys[k]) <= tol)
          continue;
        const auto& bd = cells[k]->boundary;
        const bool both = std::find(bd.begin(), bd.end(), members[a]) != bd.end() &&
                          std::find(bd.begin(), bd.end(), members[b]) != bd.end();
        if (!both)
          violation("segment " + to_literal(members[a]) + "-" + to_literal(members[b]) + " meets cell " +
                    detail::cell_name(*cells[k]) + " in more than one point");
      }
    }

  // pairwise cells
  for (std::size_t a = 0; a < cells.size(); ++a)
    for (std::size_t b = a + 1; b < cells.size(); ++b) {
      if (geom::interiors_overlap(polys[a], polys[b], tol)) {
        violation("cells " + detail::cell_name(*cells[a]) + " and " + detail::cell_name(*cells[b]) + " overlap");
        continue;
      }
      // contact set: vertices of one on the other, and edge crossings
      std::vector<PlanePoint> contact;
      auto on_or_in = [&](PlanePoint p, const std::vector<PlanePoint>& poly) {
        return geom::boundary_distance(p, poly) <= tol || geom::crossing_inside(p, poly);
      };
      for (auto p : polys[a])
        if (on_or_in(p, polys[b]))
          contact.push_back(p);
      for (auto p : polys[b])
        if (on_or_in(p, polys[a]))
          contact.push_back(p);
      const auto& pa = polys[a];
      const auto& pb = polys[b];
      for (std::size_t i = 0; i < pa.size(); ++i)
        for (std::size_t j = 0; j < pb.size(); ++j) {
          PlanePoint p0 = pa[i], p1 = pa[(i + 1) % pa.size()];
          PlanePoint q0 = pb[j], q1 = pb[(j + 1) % pb.size()];
          double den = cross(p1 - p0, q1 - q0);
          if (std::abs(den) <= tol * tol)
            continue;
          double s = cross(q0 - p0, q1 - q0) / den;
          double u = cross(q0 - p0, p1 - p0) / den;
          if (s > 0 && s < 1 && u > 0 && u < 1)
            contact.push_back(p0 + (p1 - p0) * s);
        }
      if (contact.empty())
        continue;
      PlanePoint e0 = contact.front(), e1 = contact.front();
      double best = 0;
      for (auto p : contact)
        for (auto q : contact)
          if (distance(p, q) > best) {
            best = distance(p, q);
            e0 = p;
            e1 = q;
          }
      auto shared_at = [&](PlanePoint p) -> std::optional<Subset> {
        for (const Subset& s : cells[a]->boundary)
          if (distance(t.vertices.at(s), p) <= tol &&
              std::find(cells[b]->boundary.begin(), cells[b]->boundary.end(), s) != cells[b]->boundary.end())
            return s;
        return std::nullopt;
      };
      const auto s0 = shared_at(e0);
      if (best <= tol) {
        if (!s0)
          violation("cells " + detail::cell_name(*cells[a]) + " and " + detail::cell_name(*cells[b]) +
                    " touch at " + detail::point_text(e0) + ", which is not a shared vertex");
        continue;
      }
      const auto s1 = shared_at(e1);
      if (!s0 || !s1 || !detail::consecutive_in(*cells[a], *s0, *s1) || !detail::consecutive_in(*cells[b], *s0, *s1))
        violation("cells " + detail::cell_name(*cells[a]) + " and " + detail::cell_name(*cells[b]) +
                  " meet along " + detail::point_text(e0) + "-" + detail::point_text(e1) +
                  ", which is not a shared edge");
    }

  // edges may only meet at common endpoints
  for (std::size_t a = 0; a < t.edges.size(); ++a)
    for (std::size_t b = a + 1; b < t.edges.size(); ++b) {
      const auto& [u0, u1] = t.edges[a];
      const auto& [v0, v1] = t.edges[b];
      if (u0 == v0 || u0 == v1 || u1 == v0 || u1 == v1)
        continue;
      if (geom::segment_distance(t.vertices.at(u0), t.vertices.at(u1), t.vertices.at(v0), t.vertices.at(v1)) <= tol)
        violation("edges " + to_literal(u0) + "-" + to_literal(u1) + " and " + to_literal(v0) + "-" + to_literal(v1) +
                  " intersect");
    }
  return rep;
}

// ---------------------------------------------------------------------------
// Closed curves

/// Closed polyline through embedded sets in cyclic order.
class PolyCurve
{
public:
  PolyCurve() = default;

  explicit PolyCurve(std::vector<Subset> source) : source_(std::move(source))
  {
    for (const Subset& s : source_)
      points_.push_back(embed(s));
    simple_ = compute_simple();
  }

  const std::vector<PlanePoint>& points() const noexcept { return points_; }
  const std::vector<Subset>& source() const noexcept { return source_; }
  bool simple() const noexcept { return simple_; }

  double scale() const
  {
    double s = 1;
    for (auto p : points_)
      s = std::max(s, norm(p));
    return s;
  }

  double area() const { return std::abs(geom::signed_area(points_)); }

private:
  bool compute_simple() const
  {
    const std::size_t m = points_.size();
    if (m < 3)
      return false;
    const double tol = kGeometryTolerance * scale();
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t b = a + 1; b < m; ++b)
        if (distance(points_[a], points_[b]) <= tol)
          return false;
    for (std::size_t a = 0; a < m; ++a) {
      const PlanePoint a0 = points_[a], a1 = points_[(a + 1) % m];
      for (std::size_t b = a + 1; b < m; ++b) {
        const PlanePoint b0 = points_[b], b1 = points_[(b + 1) % m];
        const bool adjacent_after = b == a + 1;
        const bool adjacent_before = (b + 1) % m == a;
        if (adjacent_after || adjacent_before) {
          // sharing one endpoint: neither far endpoint may lie on the other segment
          const PlanePoint far_a = adjacent_after ? a0 : a1;
          const PlanePoint far_b = adjacent_after ? b1 : b0;
          if (geom::distance_to_segment(far_a, b0, b1) <= tol || geom::distance_to_segment(far_b, a0, a1) <= tol)
            return false;
          continue;
        }
        if (geom::segment_distance(a0, a1, b0, b1) <= tol)
          return false;
      }
    }
    return true;
  }

  std::vector<Subset> source_;
  std::vector<PlanePoint> points_;
  bool simple_ = false;
};

inline PolyCurve curve_through(const std::vector<Subset>& sets) { return PolyCurve(sets); }

/// The curve xi(N) of a connected necklace; throws if it is not simple.
inline PolyCurve necklace_curve(const Necklace& nk)
{
  if (!nk.connected())
    throw PreconditionError("necklace_curve: necklace is not connected (its sets are not distinct)");
  PolyCurve c(nk.sets());
  if (!c.simple())
    throw ValidationError("the curve through the necklace is not simple");
  return c;
}

inline PolyCurve necklace_curve(const GeneralizedNecklace& k)
{
  PolyCurve c(k.sets());
  if (!c.simple())
    throw ValidationError("the curve through the generalized necklace is not simple");
  return c;
}

/// Closed-region membership: points within tolerance of the curve count as inside.
inline bool point_inside(const PolyCurve& curve, PlanePoint p)
{
  if (!curve.simple())
    throw InputError("point_inside: curve is not simple");
  const double tol = kGeometryTolerance * curve.scale();
  if (geom::boundary_distance(p, curve.points()) <= tol)
    return true;
  return geom::crossing_inside(p, curve.points());
}

struct GeometricInteriorReport
{
  std::size_t checked = 0;
  bool pass = true;
  std::vector<std::string> mismatches;
};

/// For every X in S(N): X in Int(N) iff xi(X) lies in the closed inside of xi(N).
inline GeometricInteriorReport verify_geometric_interior(const Necklace& nk)
{
  if (!nk.dummy_free())
    throw PreconditionError("verify_geometric_interior: necklace has dummy elements");
  const PolyCurve curve = necklace_curve(nk);
  GeometricInteriorReport rep;
  for (const Subset& x : separated_fan(nk)) {
    ++rep.checked;
    const bool comb = in_interior(nk, x);
    const bool geo = point_inside(curve, embed(x));
    if (comb != geo) {
      rep.pass = false;
      rep.mismatches.push_back(to_literal(x) + (comb ? " in Int but outside the curve" : " outside Int but inside the curve"));
    }
  }
  return rep;
}

/// Point-sampling estimate of the fraction of the curve's inside covered by cells.
inline double sampled_coverage(const Tiling& t, const PolyCurve& curve, int grid = 200)
{
  double xmin = 1e300, xmax = -1e300, ymin = 1e300, ymax = -1e300;
  for (auto p : curve.points()) {
    xmin = std::min(xmin, p.x);
    xmax = std::max(xmax, p.x);
    ymin = std::min(ymin, p.y);
    ymax = std::max(ymax, p.y);
  }
  const auto cells = t.cells();
  std::vector<std::vector<PlanePoint>> polys;
  for (const Cell* c : cells)
    polys.push_back(t.polygon(*c));
  const double tol = kGeometryTolerance * t.scale();
  long inside = 0, covered = 0;
  for (int gx = 0; gx < grid; ++gx)
    for (int gy = 0; gy < grid; ++gy) {
      // offset off the lattice so samples avoid symmetric edges
      PlanePoint p{xmin + (xmax - xmin) * (gx + 0.5137) / grid, ymin + (ymax - ymin) * (gy + 0.4721) / grid};
      if (!geom::crossing_inside(p, curve.points()))
        continue;
      ++inside;
      for (const auto& poly : polys)
        if (geom::crossing_inside(p, poly) || geom::boundary_distance(p, poly) <= tol) {
          ++covered;
          break;
        }
    }
  return inside == 0 ? 1.0 : static_cast<double>(covered) / static_cast<double>(inside);
}

/// Sigma(C) fills the inside of the curve: total cell area equals the
/// enclosed area. Requires a valid complex whose vertices lie in the closed inside.
inline bool fills_region(const Tiling& t, const PolyCurve& curve)
{
  if (!curve.simple())
    throw InputError("fills_region: curve is not simple");
  const ComplexReport cr = complex_check(t);
  if (!cr.pass)
    throw ValidationError("fills_region: tiling is not a valid complex: " + cr.violations.front());
  for (const auto& [s, p] : t.vertices)
    if (!point_inside(curve, p))
      throw PreconditionError("fills_region: vertex " + to_literal(s) + " lies outside the curve");

  double cells_area = 0;
  for (const Cell* c : t.cells())
    cells_area += std::abs(geom::signed_area(t.polygon(*c)));
  const double target = curve.area();
  const double diff = std::abs(cells_area - target);
  if (diff <= kAreaTolerance * target)
    return true;
  if (diff <= 1e-3 * target)
    return sampled_coverage(t, curve) == 1.0;
  return false;
}

// ---------------------------------------------------------------------------
// SVG

namespace detail {

inline std::string fmt3(double v)
{
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  std::string s = buf;
  if (s == "-0.000")
    s = "0.000";
  return s;
}

} // namespace detail

/// Deterministic SVG of a tiling (1000 x 1000 viewport), with the curve dashed.
inline std::string svg_document(const Tiling& t, const std::optional<PolyCurve>& curve)
{
  double extent = 0;
  for (const auto& [s, p] : t.vertices)
    extent = std::max(extent, norm(p));
  if (curve)
    for (auto p : curve->points())
      extent = std::max(extent, norm(p));
  if (extent <= 0)
    extent = 1;
  const double k = 450.0 / extent;
  auto X = [&](PlanePoint p) { return detail::fmt3(500.0 + k * p.x); };
  auto Y = [&](PlanePoint p) { return detail::fmt3(500.0 - k * p.y); };

  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"1000\" height=\"1000\" viewBox=\"0 0 1000 1000\">\n"
      << "<rect x=\"0\" y=\"0\" width=\"1000\" height=\"1000\" fill=\"white\"/>\n";
  auto polygon = [&](const Cell& c, const char* fill) {
    out << "<polygon data-key=\"" << to_literal(c.key) << "\" fill=\"" << fill
        << "\" stroke=\"black\" stroke-width=\"1.5\" points=\"";
    bool first = true;
    for (const Subset& s : c.boundary) {
      const PlanePoint p = t.vertices.at(s);
      out << (first ? "" : " ") << X(p) << "," << Y(p);
      first = false;
    }
    out << "\"/>\n";
  };
  out << "<g id=\"white-cells\">\n";
  for (const Cell& c : t.white_cells)
    polygon(c, "white");
  out << "</g>\n<g id=\"black-cells\">\n";
  for (const Cell& c : t.black_cells)
    polygon(c, "#808080");
  out << "</g>\n<g id=\"edges\" stroke=\"black\" stroke-width=\"1.5\">\n";
  for (const auto& [a, b] : t.edges) {
    const PlanePoint p = t.vertices.at(a), q = t.vertices.at(b);
    out << "<line x1=\"" << X(p) << "\" y1=\"" << Y(p) << "\" x2=\"" << X(q) << "\" y2=\"" << Y(q) << "\"/>\n";
  }
  out << "</g>\n";
  if (curve) {
    out << "<g id=\"curve\">\n<polygon fill=\"none\" stroke=\"black\" stroke-width=\"2\" stroke-dasharray=\"8,6\" points=\"";
    bool first = true;
    for (auto p : curve->points()) {
      out << (first ? "" : " ") << X(p) << "," << Y(p);
      first = false;
    }
    out << "\"/>\n</g>\n";
  }
  out << "<g id=\"vertices\" font-family=\"sans-serif\" font-size=\"16\">\n";
  for (const auto& [s, p] : t.vertices) {
    out << "<circle cx=\"" << X(p) << "\" cy=\"" << Y(p) << "\" r=\"4\" fill=\"black\"/>\n";
    out << "<text x=\"" << detail::fmt3(500.0 + k * p.x + 7) << "\" y=\"" << detail::fmt3(500.0 - k * p.y - 7)
        << "\">" << to_literal(s) << "</text>\n";
  }
  out << "</g>\n</svg>\n";
  return out.str();
}

inline void render_svg(const Tiling& t, const std::optional<PolyCurve>& curve, const std::string& path)
{
  std::ofstream f(path, std::ios::binary);
  if (!f)
    throw OutputError("cannot open '" + path + "' for writing");
  f << svg_document(t, curve);
  if (!f)
    throw OutputError("failed writing '" + path + "'");
}

} // namespace wsc
