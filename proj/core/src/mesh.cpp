#include "hmmvi/mesh.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

namespace hmmvi {

std::string to_string(BoundaryTag tag) {
  switch (tag) {
    case BoundaryTag::Interior: return "interior";
    case BoundaryTag::Gamma1: return "gamma1";
    case BoundaryTag::Gamma2: return "gamma2";
    case BoundaryTag::Gamma3: return "gamma3";
    case BoundaryTag::Dirichlet: return "dirichlet";
    case BoundaryTag::None: return "none";
  }
  return "none";
}

BoundaryTag boundary_tag_from_string(const std::string& name) {
  if (name == "interior") return BoundaryTag::Interior;
  if (name == "gamma1") return BoundaryTag::Gamma1;
  if (name == "gamma2") return BoundaryTag::Gamma2;
  if (name == "gamma3") return BoundaryTag::Gamma3;
  if (name == "dirichlet") return BoundaryTag::Dirichlet;
  if (name == "none") return BoundaryTag::None;
  throw ParseError("unknown boundary tag '" + name + "'");
}

namespace {

double polygon_signed_area(const std::vector<Point>& verts,
                           const std::vector<std::size_t>& ids) {
  double a = 0;
  const std::size_t n = ids.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Point& p = verts[ids[i]];
    const Point& q = verts[ids[(i + 1) % n]];
    a += p.x() * q.y() - q.x() * p.y();
  }
  return 0.5 * a;
}

Point polygon_centroid(const std::vector<Point>& verts,
                       const std::vector<std::size_t>& ids, double area) {
  Point c = Point::Zero();
  const std::size_t n = ids.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Point& p = verts[ids[i]];
    const Point& q = verts[ids[(i + 1) % n]];
    const double w = p.x() * q.y() - q.x() * p.y();
    c += w * (p + q);
  }
  return c / (6.0 * area);
}

double polygon_diameter(const std::vector<Point>& verts,
                        const std::vector<std::size_t>& ids) {
  double d2 = 0;
  for (std::size_t i = 0; i < ids.size(); ++i)
    for (std::size_t j = i + 1; j < ids.size(); ++j)
      d2 = std::max(d2, (verts[ids[i]] - verts[ids[j]]).squaredNorm());
  return std::sqrt(d2);
}

std::size_t tag_slot(BoundaryTag tag) { return static_cast<std::size_t>(tag); }

}  // namespace

void PolytopalMesh::finalize_geometry() {
  h_max_ = 0;
  total_measure_ = 0;
  for (std::size_t ic = 0; ic < cells_.size(); ++ic) {
    Cell& K = cells_[ic];
    K.normals.resize(K.face_ids.size());
    K.face_distances.resize(K.face_ids.size());
    for (std::size_t i = 0; i < K.face_ids.size(); ++i) {
      const Face& f = faces_[K.face_ids[i]];
      const Point a = vertices_[K.vertex_ids[i]];
      const Point b = vertices_[K.vertex_ids[(i + 1) % K.vertex_ids.size()]];
      // ccw polygon: outward normal is the edge direction rotated by -90 deg
      Point t = (b - a) / f.measure;
      Point n(t.y(), -t.x());
      const double dist = n.dot(f.midpoint - K.centre);
      if (!(dist > 0)) throw NonStarShaped(ic);
      K.normals[i] = n;
      K.face_distances[i] = dist;
    }
    h_max_ = std::max(h_max_, K.diameter);
    total_measure_ += K.measure;
  }
  boundary_faces_.clear();
  interior_faces_.clear();
  tag_index_.assign(6, {});
  for (std::size_t i = 0; i < faces_.size(); ++i) {
    (faces_[i].is_boundary() ? boundary_faces_ : interior_faces_).push_back(i);
    tag_index_[tag_slot(faces_[i].tag)].push_back(i);
  }
}

const std::vector<std::size_t>& PolytopalMesh::faces_with_tag(BoundaryTag tag) const {
  return tag_index_[tag_slot(tag)];
}

namespace {

// Shared face-construction body: geometry + connectivity, tags handled by
// the caller through `assign_tag(vertices, face_id, face)`.
template <typename TagAssigner>
PolytopalMesh build_mesh_impl(std::vector<Point> vertices,
                              std::vector<std::vector<std::size_t>> cell_vertices,
                              TagAssigner&& assign_tag) {
  PolytopalMesh mesh;
  for (const Point& v : vertices)
    if (!v.allFinite()) throw ParseError("non-finite vertex coordinate");
  mesh.vertices_ = std::move(vertices);

  mesh.cells_.resize(cell_vertices.size());
  std::map<std::array<std::size_t, 2>, std::size_t> face_of;
  for (std::size_t ic = 0; ic < cell_vertices.size(); ++ic) {
    std::vector<std::size_t>& ids = cell_vertices[ic];
    if (ids.size() < 3) throw ParseError("cell with fewer than 3 vertices");
    double area = polygon_signed_area(mesh.vertices_, ids);
    if (area < 0) {  // normalise to ccw
      std::reverse(ids.begin(), ids.end());
      area = -area;
    }
    if (!(area > 0)) throw ParseError("degenerate cell (zero area)");
    Cell& K = mesh.cells_[ic];
    K.vertex_ids = ids;
    K.measure = area;
    K.centre = polygon_centroid(mesh.vertices_, ids, area);
    K.diameter = polygon_diameter(mesh.vertices_, ids);
    K.face_ids.resize(ids.size());
    for (std::size_t i = 0; i < ids.size(); ++i) {
      const std::size_t a = ids[i], b = ids[(i + 1) % ids.size()];
      std::array<std::size_t, 2> key{std::min(a, b), std::max(a, b)};
      auto [it, inserted] = face_of.try_emplace(key, mesh.faces_.size());
      if (inserted) {
        Face f;
        f.vertex_ids = {a, b};
        const Point pa = mesh.vertices_[a], pb = mesh.vertices_[b];
        f.measure = (pb - pa).norm();
        if (!(f.measure > 0)) throw ParseError("degenerate face (zero length)");
        f.midpoint = 0.5 * (pa + pb);
        f.diameter = f.measure;
        f.cells = {static_cast<int>(ic), -1};
        mesh.faces_.push_back(f);
      } else {
        Face& f = mesh.faces_[it->second];
        if (f.cells[1] >= 0)
          throw DanglingFace("face " + std::to_string(it->second) +
                             " has more than two incident cells");
        f.cells[1] = static_cast<int>(ic);
        f.tag = BoundaryTag::Interior;
      }
      K.face_ids[i] = it->second;
    }
  }

  for (std::size_t i = 0; i < mesh.faces_.size(); ++i) {
    Face& f = mesh.faces_[i];
    if (!f.is_boundary()) {
      f.tag = BoundaryTag::Interior;
      continue;
    }
    assign_tag(mesh.vertices_, i, f);
  }

  mesh.finalize_geometry();
  return mesh;
}

}  // namespace

PolytopalMesh build_mesh(std::vector<Point> vertices,
                         std::vector<std::vector<std::size_t>> cell_vertices,
                         const std::vector<TagRule>& tag_rules) {
  return build_mesh_impl(
      std::move(vertices), std::move(cell_vertices),
      [&tag_rules](const std::vector<Point>& verts, std::size_t id, Face& f) {
        const Point a = verts[f.vertex_ids[0]];
        const Point b = verts[f.vertex_ids[1]];
        for (const TagRule& rule : tag_rules) {
          if (rule.match(a, b, f.midpoint)) {
            f.tag = rule.tag;
            return;
          }
        }
        throw UntaggedBoundary("boundary face " + std::to_string(id) +
                               " with midpoint (" + std::to_string(f.midpoint.x()) +
                               ", " + std::to_string(f.midpoint.y()) +
                               ") matches no tag rule");
      });
}

PolytopalMesh build_mesh_tagged(std::vector<Point> vertices,
                                std::vector<std::vector<std::size_t>> cell_vertices,
                                const std::vector<BoundaryTag>& face_tags_by_key,
                                const std::vector<std::array<std::size_t, 2>>& face_keys) {
  std::map<std::array<std::size_t, 2>, BoundaryTag> tag_of;
  for (std::size_t i = 0; i < face_keys.size(); ++i) {
    std::array<std::size_t, 2> key{std::min(face_keys[i][0], face_keys[i][1]),
                                   std::max(face_keys[i][0], face_keys[i][1])};
    tag_of[key] = face_tags_by_key[i];
  }
  return build_mesh_impl(
      std::move(vertices), std::move(cell_vertices),
      [&tag_of](const std::vector<Point>&, std::size_t id, Face& f) {
        std::array<std::size_t, 2> key{std::min(f.vertex_ids[0], f.vertex_ids[1]),
                                       std::max(f.vertex_ids[0], f.vertex_ids[1])};
        auto it = tag_of.find(key);
        if (it == tag_of.end() || it->second == BoundaryTag::Interior ||
            it->second == BoundaryTag::None)
          throw UntaggedBoundary("boundary face " + std::to_string(id) +
                                 " has no tag entry");
        f.tag = it->second;
      });
}

RegularityReport PolytopalMesh::regularity_report() const {
  RegularityReport rep;
  rep.h_mesh = h_max_;
  for (const Cell& K : cells_) {
    double ratio = 0;
    for (std::size_t i = 0; i < K.n_faces(); ++i)
      ratio = std::max(ratio, K.diameter / K.face_distances[i]);
    rep.varrho = std::max(rep.varrho, ratio);
    rep.theta_shape =
        std::max(rep.theta_shape, ratio + static_cast<double>(K.n_faces()));
  }
  rep.theta_neighbour = 1.0;  // neutral value when no interior faces exist
  for (std::size_t fid : interior_faces_) {
    const Face& f = faces_[fid];
    double d[2];
    for (int s = 0; s < 2; ++s) {
      const Cell& K = cells_[f.cells[s]];
      const auto it = std::find(K.face_ids.begin(), K.face_ids.end(), fid);
      d[s] = K.face_distances[it - K.face_ids.begin()];
    }
    rep.theta_neighbour = std::max(rep.theta_neighbour, d[0] / d[1] + d[1] / d[0]);
  }
  rep.theta = std::max(rep.theta_shape, rep.theta_neighbour);
  return rep;
}

RegularityReport regularity_report(const PolytopalMesh& mesh) {
  return mesh.regularity_report();
}

}  // namespace hmmvi
