#include "hmmvi/discretisation.hpp"

#include <cmath>

#include "hmmvi/parallel.hpp"

namespace hmmvi {

HmmDiscretisation::HmmDiscretisation(const PolytopalMesh& mesh, double exponent,
                                     double stabilisation_scaling)
    : mesh_(&mesh), exponent_(exponent), stab_scaling_(stabilisation_scaling) {
  const std::size_t nc = mesh.n_cells();
  ops_.resize(nc);
  diamond_offset_.resize(nc + 1, 0);
  for (std::size_t K = 0; K < nc; ++K)
    diamond_offset_[K + 1] = diamond_offset_[K] + mesh.cell(K).n_faces();
  n_diamonds_ = diamond_offset_[nc];
  diamond_offset_.pop_back();

  const double sqrt_d = std::sqrt(static_cast<double>(mesh.dimension()));

  parallel_for(nc, [&](std::size_t Ki) {
    const Cell& K = mesh.cell(Ki);
    const Eigen::Index m = static_cast<Eigen::Index>(K.n_faces());
    CellOps& op = ops_[Ki];

    op.grad_weights.resize(2, m);
    for (Eigen::Index i = 0; i < m; ++i) {
      const Face& f = mesh.face(K.face_ids[i]);
      op.grad_weights.col(i) = (f.measure / K.measure) * K.normals[i];
    }

    op.residual = Eigen::MatrixXd::Zero(m, 1 + m);
    for (Eigen::Index i = 0; i < m; ++i) {
      const Face& f = mesh.face(K.face_ids[i]);
      const Point r = f.midpoint - K.centre;
      op.residual(i, 0) = -1.0;
      for (Eigen::Index j = 0; j < m; ++j)
        op.residual(i, 1 + j) = (i == j ? 1.0 : 0.0) - r.dot(op.grad_weights.col(j));
    }

    op.diamond_grad.resize(m);
    op.stiffness = Eigen::MatrixXd::Zero(1 + m, 1 + m);
    for (Eigen::Index i = 0; i < m; ++i) {
      Eigen::Matrix<double, 2, Eigen::Dynamic> B(2, 1 + m);
      B.col(0).setZero();
      B.rightCols(m) = op.grad_weights;
      const double coef = sqrt_d * stab_scaling_ / K.face_distances[i];
      B += coef * K.normals[i] * op.residual.row(i);
      op.diamond_grad[i] = B;
      op.stiffness += mesh.diamond_measure(Ki, i) * (B.transpose() * B);
    }
  });
}

Eigen::VectorXd HmmDiscretisation::reconstruct_function(const DiscreteVector& v) const {
  return v.cell_values;
}

Eigen::VectorXd HmmDiscretisation::reconstruct_trace(const DiscreteVector& v) const {
  const auto& bf = mesh_->boundary_faces();
  Eigen::VectorXd trace(bf.size());
  for (std::size_t i = 0; i < bf.size(); ++i)
    trace[static_cast<Eigen::Index>(i)] = v.face_values[static_cast<Eigen::Index>(bf[i])];
  return trace;
}

Eigen::VectorXd HmmDiscretisation::local_dofs(std::size_t cell,
                                              const DiscreteVector& v) const {
  const Cell& K = mesh_->cell(cell);
  Eigen::VectorXd z(1 + K.n_faces());
  z[0] = v.cell_values[static_cast<Eigen::Index>(cell)];
  for (std::size_t i = 0; i < K.n_faces(); ++i)
    z[static_cast<Eigen::Index>(1 + i)] =
        v.face_values[static_cast<Eigen::Index>(K.face_ids[i])];
  return z;
}

std::vector<Eigen::Vector2d> HmmDiscretisation::reconstruct_gradient(
    const DiscreteVector& v) const {
  std::vector<Eigen::Vector2d> g(n_diamonds_);
  for (std::size_t K = 0; K < mesh_->n_cells(); ++K) {
    const Eigen::VectorXd z = local_dofs(K, v);
    const CellOps& op = ops_[K];
    const std::size_t off = diamond_offset_[K];
    for (std::size_t i = 0; i < op.diamond_grad.size(); ++i)
      g[off + i] = op.diamond_grad[i] * z;
  }
  return g;
}

Eigen::Vector2d HmmDiscretisation::cell_gradient(std::size_t cell,
                                                 const DiscreteVector& v) const {
  const Cell& K = mesh_->cell(cell);
  Eigen::VectorXd f(K.n_faces());
  for (std::size_t i = 0; i < K.n_faces(); ++i)
    f[static_cast<Eigen::Index>(i)] =
        v.face_values[static_cast<Eigen::Index>(K.face_ids[i])];
  return ops_[cell].grad_weights * f;
}

double HmmDiscretisation::lp_norm_function(const DiscreteVector& v, double p) const {
  return lp_norm_cell_field(*mesh_, v.cell_values, p);
}

double HmmDiscretisation::lp_norm_gradient(const DiscreteVector& v, double p) const {
  return lp_norm_diamond_field(*this, reconstruct_gradient(v), p);
}

double HmmDiscretisation::lp_norm_trace(const DiscreteVector& v, double p) const {
  double s = 0;
  for (std::size_t fid : mesh_->boundary_faces())
    s += mesh_->face(fid).measure *
         std::pow(std::abs(v.face_values[static_cast<Eigen::Index>(fid)]), p);
  return std::pow(s, 1.0 / p);
}

double HmmDiscretisation::discrete_seminorm(const DiscreteVector& v, double p) const {
  double s = 0;
  for (std::size_t Ki = 0; Ki < mesh_->n_cells(); ++Ki) {
    const Cell& K = mesh_->cell(Ki);
    const double vK = v.cell_values[static_cast<Eigen::Index>(Ki)];
    for (std::size_t i = 0; i < K.n_faces(); ++i) {
      const Face& f = mesh_->face(K.face_ids[i]);
      const double d = K.face_distances[i];
      const double vs = v.face_values[static_cast<Eigen::Index>(K.face_ids[i])];
      s += f.measure * d * std::pow(std::abs((vs - vK) / d), p);
    }
  }
  return std::pow(s, 1.0 / p);
}

double lp_norm_diamond_field(const HmmDiscretisation& disc,
                             const std::vector<Eigen::Vector2d>& field, double p) {
  const PolytopalMesh& mesh = disc.mesh();
  double s = 0;
  for (std::size_t K = 0; K < mesh.n_cells(); ++K) {
    const std::size_t off = disc.diamond_offset(K);
    for (std::size_t i = 0; i < mesh.cell(K).n_faces(); ++i)
      s += mesh.diamond_measure(K, i) * std::pow(field[off + i].norm(), p);
  }
  return std::pow(s, 1.0 / p);
}

double lp_norm_cell_field(const PolytopalMesh& mesh, const Eigen::VectorXd& field,
                          double p) {
  double s = 0;
  for (std::size_t K = 0; K < mesh.n_cells(); ++K)
    s += mesh.cell(K).measure *
         std::pow(std::abs(field[static_cast<Eigen::Index>(K)]), p);
  return std::pow(s, 1.0 / p);
}

}  // namespace hmmvi
