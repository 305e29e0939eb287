#include "hmmvi/interpolation.hpp"

#include <algorithm>
#include <cmath>

#include "hmmvi/quadrature.hpp"

namespace hmmvi {

DiscreteVector interpolate_boundary(const HmmDiscretisation& disc, const ScalarField& g,
                                    const std::vector<BoundaryTag>& parts) {
  const PolytopalMesh& mesh = disc.mesh();
  DiscreteVector v = DiscreteVector::zero(mesh);
  for (BoundaryTag tag : parts) {
    for (std::size_t fid : mesh.faces_with_tag(tag)) {
      const Face& f = mesh.face(fid);
      const auto rule =
          face_quadrature(mesh.vertex(f.vertex_ids[0]), mesh.vertex(f.vertex_ids[1]));
      v.face_values[static_cast<Eigen::Index>(fid)] = integrate(rule, g) / f.measure;
    }
  }
  return v;
}

DiscreteVector interpolate_mean(const HmmDiscretisation& disc, const ScalarField& phi) {
  const PolytopalMesh& mesh = disc.mesh();
  DiscreteVector v = DiscreteVector::zero(mesh);
  for (std::size_t K = 0; K < mesh.n_cells(); ++K)
    v.cell_values[static_cast<Eigen::Index>(K)] =
        integrate(cell_quadrature(mesh, K), phi) / mesh.cell(K).measure;
  for (std::size_t fid = 0; fid < mesh.n_faces(); ++fid) {
    const Face& f = mesh.face(fid);
    const auto rule =
        face_quadrature(mesh.vertex(f.vertex_ids[0]), mesh.vertex(f.vertex_ids[1]));
    v.face_values[static_cast<Eigen::Index>(fid)] = integrate(rule, phi) / f.measure;
  }
  return v;
}

DiscreteVector interpolate_pointwise(const HmmDiscretisation& disc,
                                     const ScalarField& phi) {
  const PolytopalMesh& mesh = disc.mesh();
  DiscreteVector v = DiscreteVector::zero(mesh);
  for (std::size_t K = 0; K < mesh.n_cells(); ++K)
    v.cell_values[static_cast<Eigen::Index>(K)] = phi(mesh.cell(K).centre);
  for (std::size_t fid = 0; fid < mesh.n_faces(); ++fid)
    v.face_values[static_cast<Eigen::Index>(fid)] = phi(mesh.face(fid).midpoint);
  return v;
}

WeightFamily make_weight_family(const PolytopalMesh& mesh) {
  WeightFamily w;
  w.varrho = mesh.regularity_report().varrho;
  const Eigen::Index nc = static_cast<Eigen::Index>(mesh.n_cells());
  w.radius.resize(nc);
  w.magnitude.resize(nc);
  for (Eigen::Index K = 0; K < nc; ++K) {
    const Cell& cell = mesh.cell(static_cast<std::size_t>(K));
    w.radius[K] = cell.diameter / w.varrho;
    w.magnitude[K] = cell.measure / (M_PI * w.radius[K] * w.radius[K]);
  }
  return w;
}

DiscreteVector interpolate_weighted(const HmmDiscretisation& disc,
                                    const ScalarField& phi, const WeightFamily& weights,
                                    const BallQuadratureOptions& opts,
                                    BallQuadratureInfo* info) {
  const PolytopalMesh& mesh = disc.mesh();
  DiscreteVector v = interpolate_mean(disc, phi);  // face values reused below

  double richardson = 0;
  for (std::size_t K = 0; K < mesh.n_cells(); ++K) {
    const Point c = mesh.cell(K).centre;
    const double r = weights.radius[static_cast<Eigen::Index>(K)];
    const auto rule = ball_quadrature(c, r, opts.n_radial, opts.n_angular);
    const double ball_mean = integrate(rule, phi) / (M_PI * r * r);
    v.cell_values[static_cast<Eigen::Index>(K)] = ball_mean;
    if (opts.richardson_check) {
      const auto fine = ball_quadrature(c, r, 2 * opts.n_radial, 2 * opts.n_angular);
      const double fine_mean = integrate(fine, phi) / (M_PI * r * r);
      richardson = std::max(richardson, std::abs(fine_mean - ball_mean));
    }
  }
  if (info) {
    info->n_radial = opts.n_radial;
    info->n_angular = opts.n_angular;
    info->richardson_error = richardson;
  }
  return v;
}

}  // namespace hmmvi
