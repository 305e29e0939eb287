#include "hmmvi/mesh_generators.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <tuple>

namespace hmmvi {

namespace {

constexpr double kTol = 1e-9;

bool on_line_y(const Point& a, const Point& b, double y0) {
  return std::abs(a.y() - y0) < kTol && std::abs(b.y() - y0) < kTol;
}
bool on_line_x(const Point& a, const Point& b, double x0) {
  return std::abs(a.x() - x0) < kTol && std::abs(b.x() - x0) < kTol;
}
bool on_slant(const Point& p) { return std::abs(p.x() + p.y() - dam::width) < kTol; }

// Deduplicates nearly-identical vertices produced by per-cell polygon
// construction; returns the shared vertex list and per-cell index lists.
struct VertexPool {
  std::vector<Point> points;
  std::map<std::pair<long long, long long>, std::size_t> lookup;
  double snap = 1e-10;

  std::size_t insert(const Point& p) {
    const auto key = std::make_pair(static_cast<long long>(std::llround(p.x() / snap)),
                                    static_cast<long long>(std::llround(p.y() / snap)));
    // probe the 3x3 key neighbourhood so points straddling a rounding
    // boundary still collapse
    for (long long dx = -1; dx <= 1; ++dx)
      for (long long dy = -1; dy <= 1; ++dy) {
        auto it = lookup.find({key.first + dx, key.second + dy});
        if (it != lookup.end() && (points[it->second] - p).norm() < 2 * snap)
          return it->second;
      }
    points.push_back(p);
    lookup[key] = points.size() - 1;
    return points.size() - 1;
  }
};

// Sutherland-Hodgman clip of a convex polygon against the half-plane
// n.x <= c, with an inclusive tolerance so on-line vertices are kept.
std::vector<Point> clip_halfplane(const std::vector<Point>& poly, const Point& n,
                                  double c) {
  std::vector<Point> out;
  const std::size_t m = poly.size();
  for (std::size_t i = 0; i < m; ++i) {
    const Point& p = poly[i];
    const Point& q = poly[(i + 1) % m];
    const double dp = n.dot(p) - c;
    const double dq = n.dot(q) - c;
    const bool pin = dp <= kTol, qin = dq <= kTol;
    if (pin) out.push_back(p);
    if (pin != qin && std::abs(dp - dq) > 0) {
      const double t = dp / (dp - dq);
      if (t > 0 && t < 1) out.push_back(p + t * (q - p));
    }
  }
  return out;
}

std::vector<Point> clip_to_unit_square(std::vector<Point> poly) {
  poly = clip_halfplane(poly, Point(-1, 0), 0);  // x >= 0
  if (poly.size() < 3) return {};
  poly = clip_halfplane(poly, Point(1, 0), 1);   // x <= 1
  if (poly.size() < 3) return {};
  poly = clip_halfplane(poly, Point(0, -1), 0);  // y >= 0
  if (poly.size() < 3) return {};
  poly = clip_halfplane(poly, Point(0, 1), 1);   // y <= 1
  if (poly.size() < 3) return {};
  return poly;
}

double poly_area(const std::vector<Point>& poly) {
  double a = 0;
  for (std::size_t i = 0; i < poly.size(); ++i) {
    const Point& p = poly[i];
    const Point& q = poly[(i + 1) % poly.size()];
    a += p.x() * q.y() - q.x() * p.y();
  }
  return 0.5 * a;
}

/// Unit square -> dam trapezoid; affine in x along each horizontal line.
Point dam_map(const Point& s) {
  const double eta = s.y();
  return Point(s.x() * (dam::width - dam::height * eta), dam::height * eta);
}

// Splits any boundary edge lying on the slant and straddling y = tail_level
// by inserting a vertex at (width - tail_level, tail_level), so the
// Gamma1/Gamma3 split is exact.
void insert_slant_tail_vertex(std::vector<Point>& vertices,
                              std::vector<std::vector<std::size_t>>& cells) {
  const Point cut(dam::width - dam::tail_level, dam::tail_level);
  int cut_id = -1;
  for (auto& cell : cells) {
    for (std::size_t i = 0; i < cell.size(); ++i) {
      const Point a = vertices[cell[i]];
      const Point b = vertices[cell[(i + 1) % cell.size()]];
      if (!on_slant(a) || !on_slant(b)) continue;
      if ((a.y() - dam::tail_level) * (b.y() - dam::tail_level) >= -kTol * kTol)
        continue;
      if (cut_id < 0) {
        vertices.push_back(cut);
        cut_id = static_cast<int>(vertices.size()) - 1;
      }
      cell.insert(cell.begin() + static_cast<std::ptrdiff_t>(i) + 1,
                  static_cast<std::size_t>(cut_id));
      break;
    }
  }
}

PolytopalMesh build_rect_family(std::size_t nx, std::size_t ny, const Point& lo,
                                const Point& hi, const SideTags& tags,
                                bool triangles) {
  if (nx == 0 || ny == 0) throw ParseError("grid sizes must be positive");
  std::vector<Point> verts;
  verts.reserve((nx + 1) * (ny + 1));
  for (std::size_t j = 0; j <= ny; ++j)
    for (std::size_t i = 0; i <= nx; ++i)
      verts.emplace_back(lo.x() + (hi.x() - lo.x()) * double(i) / double(nx),
                         lo.y() + (hi.y() - lo.y()) * double(j) / double(ny));
  auto vid = [nx](std::size_t i, std::size_t j) { return j * (nx + 1) + i; };

  std::vector<std::vector<std::size_t>> cells;
  for (std::size_t j = 0; j < ny; ++j)
    for (std::size_t i = 0; i < nx; ++i) {
      if (triangles) {
        cells.push_back({vid(i, j), vid(i + 1, j), vid(i + 1, j + 1)});
        cells.push_back({vid(i, j), vid(i + 1, j + 1), vid(i, j + 1)});
      } else {
        cells.push_back({vid(i, j), vid(i + 1, j), vid(i + 1, j + 1), vid(i, j + 1)});
      }
    }

  std::vector<TagRule> rules = {
      {tags.left, [&lo](const Point& a, const Point& b, const Point&) {
         return on_line_x(a, b, lo.x());
       }},
      {tags.right, [&hi](const Point& a, const Point& b, const Point&) {
         return on_line_x(a, b, hi.x());
       }},
      {tags.bottom, [&lo](const Point& a, const Point& b, const Point&) {
         return on_line_y(a, b, lo.y());
       }},
      {tags.top, [&hi](const Point& a, const Point& b, const Point&) {
         return on_line_y(a, b, hi.y());
       }},
  };
  return build_mesh(std::move(verts), std::move(cells), rules);
}

}  // namespace

PolytopalMesh generate_cartesian(std::size_t nx, std::size_t ny, const Point& lo,
                                 const Point& hi, const SideTags& tags) {
  return build_rect_family(nx, ny, lo, hi, tags, false);
}

PolytopalMesh generate_triangular(std::size_t nx, std::size_t ny, const Point& lo,
                                  const Point& hi, const SideTags& tags) {
  return build_rect_family(nx, ny, lo, hi, tags, true);
}

std::vector<TagRule> dam_tag_rules() {
  return {
      {BoundaryTag::Gamma2,
       [](const Point& a, const Point& b, const Point&) { return on_line_y(a, b, 0); }},
      {BoundaryTag::Gamma1,
       [](const Point& a, const Point& b, const Point& mid) {
         if (on_line_x(a, b, 0)) return true;
         return on_slant(a) && on_slant(b) && mid.y() <= dam::tail_level;
       }},
      {BoundaryTag::Gamma3,
       [](const Point& a, const Point& b, const Point& mid) {
         if (on_line_y(a, b, dam::height)) return true;
         return on_slant(a) && on_slant(b) && mid.y() > dam::tail_level;
       }},
  };
}

double dam_dirichlet_data(const Point& x) {
  return x.x() < kTol ? dam::upstream_head : dam::downstream_head;
}

PolytopalMesh generate_dam_hexagonal(std::size_t target_cells) {
  if (target_cells == 0) throw ParseError("target_cells must be >= 1");
  // Column/row counts scale with sqrt(target); (13, 31) gives exactly 441.
  const double scale = std::sqrt(double(target_cells) / 441.0);
  const std::size_t k = std::max<std::size_t>(2, std::lround(13.0 * scale));
  const std::size_t ny = std::max<std::size_t>(2, std::lround(31.0 * scale));
  const double A = 1.0 / (1.5 * double(k));  // half-width of a hexagon
  const double B = 1.0 / double(ny);         // vertical pitch

  VertexPool pool;
  pool.snap = 1e-10 / double(std::max(k, ny));
  std::vector<std::vector<std::size_t>> cells;

  for (std::size_t i = 0; i <= k; ++i) {
    const double cx = double(i) / double(k);
    const bool odd = (i % 2) == 1;
    const long jmin = odd ? 0 : -1;
    const long jmax = static_cast<long>(ny);
    for (long j = jmin; j <= jmax; ++j) {
      const double cy = double(j) / double(ny) + (odd ? 0.5 * B : 0.0);
      const std::vector<Point> hex = {
          {cx - A, cy},           {cx - 0.5 * A, cy - 0.5 * B},
          {cx + 0.5 * A, cy - 0.5 * B}, {cx + A, cy},
          {cx + 0.5 * A, cy + 0.5 * B}, {cx - 0.5 * A, cy + 0.5 * B}};
      std::vector<Point> clipped = clip_to_unit_square(hex);
      if (clipped.size() < 3 || poly_area(clipped) < 1e-14) continue;
      std::vector<std::size_t> ids;
      ids.reserve(clipped.size());
      for (const Point& p : clipped) {
        const std::size_t id = pool.insert(dam_map(p));
        if (ids.empty() || ids.back() != id) ids.push_back(id);
      }
      while (ids.size() > 1 && ids.front() == ids.back()) ids.pop_back();
      if (ids.size() >= 3) cells.push_back(std::move(ids));
    }
  }

  insert_slant_tail_vertex(pool.points, cells);
  return build_mesh(std::move(pool.points), std::move(cells), dam_tag_rules());
}

namespace {

// Zig-zag boundary profiles of the distorted-square family; eps is the
// plateau fraction of the squeezed half.
double profile_right(double eps, double t) {
  return t <= 0.5 ? (2.0 - eps) * t : 1.0 + eps * (t - 1.0);
}
double profile_left(double eps, double t) {
  return t <= 0.5 ? eps * t : (2.0 - eps) * t - 1.0 + eps;
}

double kershaw_eta(double xi, double t, int nstrips, double eps) {
  int s = std::min(nstrips - 1, static_cast<int>(xi * nstrips));
  const double lambda = xi * double(nstrips) - double(s);
  const auto prof = [&](int m) {
    return (m % 2 == 0) ? profile_left(eps, t) : profile_right(eps, t);
  };
  return (1.0 - lambda) * prof(s) + lambda * prof(s + 1);
}

}  // namespace

PolytopalMesh generate_dam_kershaw(std::size_t level) {
  if (level == 0) throw ParseError("kershaw level must be >= 1");
  const std::size_t n = 34 + 17 * level;
  const int nstrips = 7;
  const double eps = 0.1;

  std::vector<Point> verts((n + 1) * (n + 1));
  for (std::size_t j = 0; j <= n; ++j)
    for (std::size_t i = 0; i <= n; ++i) {
      const double xi = double(i) / double(n);
      const double t = double(j) / double(n);
      const double eta = kershaw_eta(xi, t, nstrips, eps);
      verts[j * (n + 1) + i] = dam_map(Point(xi, eta));
    }
  auto vid = [n](std::size_t i, std::size_t j) { return j * (n + 1) + i; };

  std::vector<std::vector<std::size_t>> cells;
  cells.reserve(n * n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i)
      cells.push_back({vid(i, j), vid(i + 1, j), vid(i + 1, j + 1), vid(i, j + 1)});

  insert_slant_tail_vertex(verts, cells);
  return build_mesh(std::move(verts), std::move(cells), dam_tag_rules());
}

}  // namespace hmmvi
