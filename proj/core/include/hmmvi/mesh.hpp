// Polytopal mesh: cells, faces, centres, normals, boundary-part tags.
//
// A mesh is a family of disjoint polygonal cells whose closures cover the
// domain, a family of faces (edges in 2D) each incident to one boundary cell
// or two interior cells, and a cell point x_K w.r.t. which every cell is
// strictly star-shaped.  Immutable after construction; safe to share across
// threads.

#ifndef HMMVI_MESH_HPP
#define HMMVI_MESH_HPP

#include <array>
#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "hmmvi/errors.hpp"

namespace hmmvi {

using Point = Eigen::Vector2d;

/// Boundary-part tags.  Signorini runs use Gamma1/Gamma2/Gamma3
/// (Dirichlet / zero-flux / unilateral); obstacle and Bulkley runs
/// tag the whole boundary Dirichlet.
enum class BoundaryTag { Interior, Gamma1, Gamma2, Gamma3, Dirichlet, None };

std::string to_string(BoundaryTag tag);
BoundaryTag boundary_tag_from_string(const std::string& name);

struct Face {
  std::array<std::size_t, 2> vertex_ids;
  double measure = 0;      ///< |sigma|
  Point midpoint;          ///< centre of mass of sigma
  double diameter = 0;     ///< h_sigma
  std::array<int, 2> cells = {-1, -1};  ///< incident cells; [1] = -1 on the boundary
  BoundaryTag tag = BoundaryTag::None;

  bool is_boundary() const { return cells[1] < 0; }
};

struct Cell {
  std::vector<std::size_t> vertex_ids;  ///< ccw polygon
  std::vector<std::size_t> face_ids;    ///< ccw, face i joins vertex i and i+1
  Point centre;                         ///< x_K (centre of mass)
  double measure = 0;                   ///< |K|
  double diameter = 0;                  ///< h_K
  std::vector<Point> normals;           ///< n_{K,sigma}, aligned with face_ids
  std::vector<double> face_distances;   ///< d_{K,sigma}, aligned with face_ids

  std::size_t n_faces() const { return face_ids.size(); }
};

/// Mesh regularity metrics of the shape/neighbour kind used by HMM
/// convergence theory.
struct RegularityReport {
  double theta_shape = 0;      ///< max_K (max_sigma h_K/d_{K,sigma} + Card(E_K))
  double theta_neighbour = 0;  ///< max over interior faces of d_K/d_L + d_L/d_K
  double theta = 0;            ///< max of the two above
  double varrho = 0;           ///< max_K max_sigma h_K/d_{K,sigma}
  double h_mesh = 0;           ///< h_M
};

/// Rule used to tag boundary faces; first matching rule wins.
struct TagRule {
  BoundaryTag tag;
  /// Predicate on the face endpoints and midpoint.
  std::function<bool(const Point& a, const Point& b, const Point& mid)> match;
};

class PolytopalMesh {
 public:
  PolytopalMesh() = default;

  int dimension() const { return 2; }
  std::size_t n_vertices() const { return vertices_.size(); }
  std::size_t n_cells() const { return cells_.size(); }
  std::size_t n_faces() const { return faces_.size(); }

  const Point& vertex(std::size_t i) const { return vertices_[i]; }
  const Cell& cell(std::size_t i) const { return cells_[i]; }
  const Face& face(std::size_t i) const { return faces_[i]; }
  const std::vector<Point>& vertices() const { return vertices_; }
  const std::vector<Cell>& cells() const { return cells_; }
  const std::vector<Face>& faces() const { return faces_; }

  double h_max() const { return h_max_; }
  double total_measure() const { return total_measure_; }

  /// |D_{K,sigma}| = |sigma| d_{K,sigma} / d for the local face of a cell.
  double diamond_measure(std::size_t cell_id, std::size_t local_face) const {
    const Cell& K = cells_[cell_id];
    return faces_[K.face_ids[local_face]].measure * K.face_distances[local_face] /
           static_cast<double>(dimension());
  }

  /// Global indices of faces carrying a given tag (sorted).
  const std::vector<std::size_t>& faces_with_tag(BoundaryTag tag) const;
  const std::vector<std::size_t>& boundary_faces() const { return boundary_faces_; }
  const std::vector<std::size_t>& interior_faces() const { return interior_faces_; }

  RegularityReport regularity_report() const;

  friend PolytopalMesh build_mesh(std::vector<Point> vertices,
                                  std::vector<std::vector<std::size_t>> cell_vertices,
                                  const std::vector<TagRule>& tag_rules);
  friend PolytopalMesh build_mesh_tagged(std::vector<Point> vertices,
                                         std::vector<std::vector<std::size_t>> cell_vertices,
                                         const std::vector<BoundaryTag>& face_tags_by_key,
                                         const std::vector<std::array<std::size_t, 2>>& face_keys);

 private:
  std::vector<Point> vertices_;
  std::vector<Cell> cells_;
  std::vector<Face> faces_;
  std::vector<std::size_t> boundary_faces_;
  std::vector<std::size_t> interior_faces_;
  mutable std::vector<std::vector<std::size_t>> tag_index_;  // per BoundaryTag
  double h_max_ = 0;
  double total_measure_ = 0;

  void finalize_geometry();
};

/// Builds a mesh from raw vertices, counter-clockwise cell->vertex
/// connectivity and boundary tag rules.  Clockwise cells are reversed.
/// x_K defaults to the centre of mass of K.
///
/// Throws NonStarShaped, DanglingFace, UntaggedBoundary.
PolytopalMesh build_mesh(std::vector<Point> vertices,
                         std::vector<std::vector<std::size_t>> cell_vertices,
                         const std::vector<TagRule>& tag_rules);

/// Variant with explicit tags keyed by (sorted) vertex-index pairs,
/// used by the mesh file reader.
PolytopalMesh build_mesh_tagged(std::vector<Point> vertices,
                                std::vector<std::vector<std::size_t>> cell_vertices,
                                const std::vector<BoundaryTag>& face_tags_by_key,
                                const std::vector<std::array<std::size_t, 2>>& face_keys);

/// regularity_report(mesh) as a free function, mirroring the member.
RegularityReport regularity_report(const PolytopalMesh& mesh);

}  // namespace hmmvi

#endif
