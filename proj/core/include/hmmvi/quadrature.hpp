// Quadrature rules used by interpolants and diagnostics:
//  - 3-point Gauss on faces,
//  - degree-5 rule on fan triangles for cell integrals,
//  - midpoint rule in (r^2, theta) on inscribed balls (exact for constants
//    and first moments, which is what the weight identities need).

#ifndef HMMVI_QUADRATURE_HPP
#define HMMVI_QUADRATURE_HPP

#include <functional>
#include <vector>

#include "hmmvi/mesh.hpp"

namespace hmmvi {

struct QuadNode {
  Point x;
  double w;
};

/// 3-point Gauss-Legendre rule on the segment [a, b]; exact to degree 5.
std::vector<QuadNode> face_quadrature(const Point& a, const Point& b);

/// Degree-5 (7-point) rule on the triangle (a, b, c).
std::vector<QuadNode> triangle_quadrature(const Point& a, const Point& b,
                                          const Point& c);

/// Fan of triangle rules over a star-shaped cell (apex x_K).
std::vector<QuadNode> cell_quadrature(const PolytopalMesh& mesh, std::size_t cell);

/// Triangle rule on one diamond D_{K,sigma}.
std::vector<QuadNode> diamond_quadrature(const PolytopalMesh& mesh, std::size_t cell,
                                         std::size_t local_face);

/// Midpoint rule in (r^2, theta) on the disc of given centre/radius;
/// n_radial x n_angular nodes of equal weight pi r^2 / (nr*nt).
std::vector<QuadNode> ball_quadrature(const Point& centre, double radius,
                                      int n_radial = 8, int n_angular = 16);

/// Evaluates f over a rule; throws QuadratureFailure on non-finite values.
double integrate(const std::vector<QuadNode>& rule,
                 const std::function<double(const Point&)>& f);

}  // namespace hmmvi

#endif
