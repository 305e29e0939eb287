// Mesh generators: Cartesian and triangular meshes of rectangles, and the
// two dam families (hexagonal-type and Kershaw-distorted) on the trapezoid
// with corners (0,0), (7,0), (2,5), (0,5).
//
// All generators are deterministic: same parameters, bit-identical meshes.

#ifndef HMMVI_MESH_GENERATORS_HPP
#define HMMVI_MESH_GENERATORS_HPP

#include <cstddef>

#include "hmmvi/mesh.hpp"

namespace hmmvi {

struct SideTags {
  BoundaryTag left = BoundaryTag::Dirichlet;
  BoundaryTag right = BoundaryTag::Dirichlet;
  BoundaryTag bottom = BoundaryTag::Dirichlet;
  BoundaryTag top = BoundaryTag::Dirichlet;
};

/// nx-by-ny grid of axis-aligned rectangles on [lo.x,hi.x] x [lo.y,hi.y].
PolytopalMesh generate_cartesian(std::size_t nx, std::size_t ny,
                                 const Point& lo = Point(0, 0),
                                 const Point& hi = Point(1, 1),
                                 const SideTags& tags = {});

/// Same grid with every rectangle split into two right triangles.
PolytopalMesh generate_triangular(std::size_t nx, std::size_t ny,
                                  const Point& lo = Point(0, 0),
                                  const Point& hi = Point(1, 1),
                                  const SideTags& tags = {});

// -- dam geometry -------------------------------------------------------

/// Trapezoid (0,0), (7,0), (2,5), (0,5); right side is the line x + y = 7.
namespace dam {
constexpr double width = 7.0;
constexpr double height = 5.0;
constexpr double area = 22.5;
constexpr double tail_level = 1.0;      ///< slant is Dirichlet below this ordinate
constexpr double upstream_head = 5.0;   ///< g on x = 0
constexpr double downstream_head = 1.0; ///< g on the lower slant
}  // namespace dam

/// Tag rules for the dam: Gamma1 on {x=0} and the slant below y=1 (by face
/// midpoint), Gamma2 on {y=0}, Gamma3 on {y=5} and the slant above y=1.
std::vector<TagRule> dam_tag_rules();

/// Boundary head data of the seepage benchmark: 5 on x=0, 1 elsewhere.
double dam_dirichlet_data(const Point& x);

/// Hexagonal-dominant mesh of the dam trapezoid (pentagon/quad cells at the
/// boundaries).  Built as a honeycomb of the unit square mapped onto the
/// trapezoid; target_cells=441 produces exactly 441 cells with h_M ~ 0.69.
PolytopalMesh generate_dam_hexagonal(std::size_t target_cells);

/// Kershaw-type distorted quadrilateral mesh of the dam, level >= 1.
/// Level 1 has 51x51 = 2601 cells; refinements follow n = 34 + 17*level.
PolytopalMesh generate_dam_kershaw(std::size_t level);

}  // namespace hmmvi

#endif
