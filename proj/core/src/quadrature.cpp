#include "hmmvi/quadrature.hpp"

#include <cmath>

namespace hmmvi {

std::vector<QuadNode> face_quadrature(const Point& a, const Point& b) {
  static const double t = std::sqrt(3.0 / 5.0);
  const double len = (b - a).norm();
  const Point mid = 0.5 * (a + b);
  const Point half = 0.5 * (b - a);
  return {{mid - t * half, len * 5.0 / 18.0},
          {mid, len * 8.0 / 18.0},
          {mid + t * half, len * 5.0 / 18.0}};
}

std::vector<QuadNode> triangle_quadrature(const Point& a, const Point& b,
                                          const Point& c) {
  const double s15 = std::sqrt(15.0);
  const double w0 = 9.0 / 40.0;
  const double a1 = (6.0 - s15) / 21.0, w1 = (155.0 - s15) / 1200.0;
  const double a2 = (6.0 + s15) / 21.0, w2 = (155.0 + s15) / 1200.0;
  const double area =
      0.5 * std::abs((b - a).x() * (c - a).y() - (c - a).x() * (b - a).y());

  auto bary = [&](double l1, double l2, double l3) {
    return Point(l1 * a + l2 * b + l3 * c);
  };
  std::vector<QuadNode> rule;
  rule.reserve(7);
  rule.push_back({bary(1.0 / 3, 1.0 / 3, 1.0 / 3), w0 * area});
  for (auto [al, w] : {std::pair{a1, w1}, std::pair{a2, w2}}) {
    rule.push_back({bary(al, al, 1 - 2 * al), w * area});
    rule.push_back({bary(al, 1 - 2 * al, al), w * area});
    rule.push_back({bary(1 - 2 * al, al, al), w * area});
  }
  return rule;
}

std::vector<QuadNode> cell_quadrature(const PolytopalMesh& mesh, std::size_t cell) {
  const Cell& K = mesh.cell(cell);
  std::vector<QuadNode> rule;
  for (std::size_t i = 0; i < K.vertex_ids.size(); ++i) {
    const Point a = mesh.vertex(K.vertex_ids[i]);
    const Point b = mesh.vertex(K.vertex_ids[(i + 1) % K.vertex_ids.size()]);
    auto tri = triangle_quadrature(K.centre, a, b);
    rule.insert(rule.end(), tri.begin(), tri.end());
  }
  return rule;
}

std::vector<QuadNode> diamond_quadrature(const PolytopalMesh& mesh, std::size_t cell,
                                         std::size_t local_face) {
  const Cell& K = mesh.cell(cell);
  const Face& f = mesh.face(K.face_ids[local_face]);
  return triangle_quadrature(K.centre, mesh.vertex(f.vertex_ids[0]),
                             mesh.vertex(f.vertex_ids[1]));
}

std::vector<QuadNode> ball_quadrature(const Point& centre, double radius,
                                      int n_radial, int n_angular) {
  std::vector<QuadNode> rule;
  rule.reserve(static_cast<std::size_t>(n_radial * n_angular));
  const double w = M_PI * radius * radius / (n_radial * n_angular);
  for (int i = 0; i < n_radial; ++i) {
    const double r = radius * std::sqrt((i + 0.5) / n_radial);
    for (int j = 0; j < n_angular; ++j) {
      const double th = 2.0 * M_PI * (j + 0.5) / n_angular;
      rule.push_back({centre + r * Point(std::cos(th), std::sin(th)), w});
    }
  }
  return rule;
}

double integrate(const std::vector<QuadNode>& rule,
                 const std::function<double(const Point&)>& f) {
  double s = 0;
  for (const QuadNode& q : rule) {
    const double v = f(q.x);
    if (!std::isfinite(v))
      throw QuadratureFailure("non-finite integrand value at quadrature node");
    s += q.w * v;
  }
  return s;
}

}  // namespace hmmvi
