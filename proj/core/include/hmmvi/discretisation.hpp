// The HMM gradient discretisation on a polytopal mesh.
//
// Degrees of freedom are one value per cell and one per face.  The function
// reconstruction is piecewise constant on cells, the trace reconstruction
// piecewise constant on boundary faces, and the gradient reconstruction is
// piecewise constant on the diamonds D_{K,sigma}:
//
//   grad_D v |_{D_{K,sigma}} = grad_K v
//       + (sqrt(d)/d_{K,sigma}) * (A_K R_K(v))_sigma * n_{K,sigma},
//
// with grad_K v = (1/|K|) sum_sigma |sigma| v_sigma n_{K,sigma} and
// R_K(v)_sigma = v_sigma - v_K - grad_K v . (xbar_sigma - x_K).
// A_K is a scalar multiple of the identity on Im(R_K) (1 by default).
//
// Immutable after assembly; all reconstructions are pure functions.

#ifndef HMMVI_DISCRETISATION_HPP
#define HMMVI_DISCRETISATION_HPP

#include <vector>

#include <Eigen/Dense>

#include "hmmvi/mesh.hpp"

namespace hmmvi {

/// An element of the discrete space: one real per cell, one per face.
struct DiscreteVector {
  Eigen::VectorXd cell_values;
  Eigen::VectorXd face_values;

  DiscreteVector() = default;
  DiscreteVector(Eigen::Index n_cells, Eigen::Index n_faces)
      : cell_values(Eigen::VectorXd::Zero(n_cells)),
        face_values(Eigen::VectorXd::Zero(n_faces)) {}

  static DiscreteVector zero(const PolytopalMesh& mesh) {
    return DiscreteVector(static_cast<Eigen::Index>(mesh.n_cells()),
                          static_cast<Eigen::Index>(mesh.n_faces()));
  }

  bool conforms_to(const PolytopalMesh& mesh) const {
    return cell_values.size() == static_cast<Eigen::Index>(mesh.n_cells()) &&
           face_values.size() == static_cast<Eigen::Index>(mesh.n_faces());
  }
  bool all_finite() const {
    return cell_values.allFinite() && face_values.allFinite();
  }

  /// Max norm over all degrees of freedom.
  double linf() const {
    double c = cell_values.size() ? cell_values.cwiseAbs().maxCoeff() : 0.0;
    double f = face_values.size() ? face_values.cwiseAbs().maxCoeff() : 0.0;
    return std::max(c, f);
  }

  DiscreteVector& operator+=(const DiscreteVector& o) {
    cell_values += o.cell_values;
    face_values += o.face_values;
    return *this;
  }
  DiscreteVector& operator-=(const DiscreteVector& o) {
    cell_values -= o.cell_values;
    face_values -= o.face_values;
    return *this;
  }
  DiscreteVector& operator*=(double s) {
    cell_values *= s;
    face_values *= s;
    return *this;
  }
  friend DiscreteVector operator+(DiscreteVector a, const DiscreteVector& b) {
    return a += b;
  }
  friend DiscreteVector operator-(DiscreteVector a, const DiscreteVector& b) {
    return a -= b;
  }
  friend DiscreteVector operator*(double s, DiscreteVector a) { return a *= s; }
};

class HmmDiscretisation {
 public:
  /// Per-cell operator data over the local dofs [v_K, v_{sigma_1}, ...].
  struct CellOps {
    /// 2 x m: grad_K v = grad_weights * (local face values)
    Eigen::Matrix<double, 2, Eigen::Dynamic> grad_weights;
    /// m x (1+m): residual map R_K
    Eigen::MatrixXd residual;
    /// per local face, 2 x (1+m): full gradient on the diamond
    std::vector<Eigen::Matrix<double, 2, Eigen::Dynamic>> diamond_grad;
    /// (1+m) x (1+m): sum_sigma |D_sigma| B_sigma^T B_sigma (unit coefficient)
    Eigen::MatrixXd stiffness;
  };

  /// Assembles the per-cell operators; parallel over cells.
  /// `stabilisation_scaling` is the scalar-multiple hook for A_K.
  explicit HmmDiscretisation(const PolytopalMesh& mesh, double exponent = 2.0,
                             double stabilisation_scaling = 1.0);

  const PolytopalMesh& mesh() const { return *mesh_; }
  double exponent() const { return exponent_; }
  double stabilisation_scaling() const { return stab_scaling_; }

  const CellOps& cell_ops(std::size_t cell) const { return ops_[cell]; }

  /// Diamonds are indexed cell by cell, local face by local face.
  std::size_t diamond_offset(std::size_t cell) const { return diamond_offset_[cell]; }
  std::size_t n_diamonds() const { return n_diamonds_; }

  // -- reconstructions ---------------------------------------------------

  /// Pi_D v: value on cell K is v_K.
  Eigen::VectorXd reconstruct_function(const DiscreteVector& v) const;

  /// T_D v: value on boundary face sigma is v_sigma (ordered like
  /// mesh().boundary_faces()).
  Eigen::VectorXd reconstruct_trace(const DiscreteVector& v) const;

  /// grad_D v per diamond.
  std::vector<Eigen::Vector2d> reconstruct_gradient(const DiscreteVector& v) const;

  Eigen::Vector2d cell_gradient(std::size_t cell, const DiscreteVector& v) const;

  // -- norms ---------------------------------------------------------------

  double lp_norm_function(const DiscreteVector& v, double p) const;
  double lp_norm_gradient(const DiscreteVector& v, double p) const;
  double lp_norm_trace(const DiscreteVector& v, double p) const;

  /// Discrete W^{1,p} semi-norm
  /// |v|_{T,p}^p = sum_K sum_sigma |sigma| d_{K,sigma} |(v_sigma-v_K)/d_{K,sigma}|^p.
  double discrete_seminorm(const DiscreteVector& v, double p) const;

  /// Gathers the local dof vector (v_K, v_sigma...) of one cell.
  Eigen::VectorXd local_dofs(std::size_t cell, const DiscreteVector& v) const;

 private:
  const PolytopalMesh* mesh_;
  double exponent_;
  double stab_scaling_;
  std::vector<CellOps> ops_;
  std::vector<std::size_t> diamond_offset_;
  std::size_t n_diamonds_ = 0;
};

/// Lp norm of a per-diamond vector field.
double lp_norm_diamond_field(const HmmDiscretisation& disc,
                             const std::vector<Eigen::Vector2d>& field, double p);

/// Lp norm of a per-cell scalar field.
double lp_norm_cell_field(const PolytopalMesh& mesh, const Eigen::VectorXd& field,
                          double p);

}  // namespace hmmvi

#endif
