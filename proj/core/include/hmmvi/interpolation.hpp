// Interpolants onto the discrete space:
//  - boundary interpolant (face averages of a boundary function on a tagged
//    part, zero elsewhere),
//  - plain interpolant (cell means + face averages),
//  - weighted interpolant: cell value is the mean over the inscribed ball
//    B_K of radius h_K / varrho, face values are face averages.

#ifndef HMMVI_INTERPOLATION_HPP
#define HMMVI_INTERPOLATION_HPP

#include <functional>
#include <vector>

#include "hmmvi/discretisation.hpp"

namespace hmmvi {

using ScalarField = std::function<double(const Point&)>;

/// Face values are 3-point-Gauss averages of g on faces carrying one of the
/// given tags; all other dofs are zero.  Throws QuadratureFailure if g is
/// non-finite at a node.
DiscreteVector interpolate_boundary(const HmmDiscretisation& disc, const ScalarField& g,
                                    const std::vector<BoundaryTag>& parts);

/// Cell means (fan quadrature) and face averages of phi - the constant-weight
/// interpolant.
DiscreteVector interpolate_mean(const HmmDiscretisation& disc, const ScalarField& phi);

/// Pointwise interpolant: phi(x_K) on cells, phi(xbar_sigma) on faces.
DiscreteVector interpolate_pointwise(const HmmDiscretisation& disc,
                                     const ScalarField& phi);

/// Per-cell constant weights supported on the inscribed ball B_K: value
/// |K|/|B_K| on B_K, 0 outside.  Satisfies the unit-mass and barycentre
/// identities and the bound 0 <= omega_K <= varrho^d.
struct WeightFamily {
  Eigen::VectorXd radius;     ///< h_K / varrho per cell
  Eigen::VectorXd magnitude;  ///< |K| / |B_K| per cell
  double varrho = 0;          ///< mesh regularity factor used for the radii
};

WeightFamily make_weight_family(const PolytopalMesh& mesh);

struct BallQuadratureOptions {
  int n_radial = 8;
  int n_angular = 16;
  bool richardson_check = false;  ///< also evaluate at doubled resolution
};

struct BallQuadratureInfo {
  int n_radial = 0;
  int n_angular = 0;
  double richardson_error = 0;  ///< max cell-value change under refinement
};

/// Weighted interpolant of phi; cell values are ball means, face values are
/// face averages.
DiscreteVector interpolate_weighted(const HmmDiscretisation& disc,
                                    const ScalarField& phi, const WeightFamily& weights,
                                    const BallQuadratureOptions& opts = {},
                                    BallQuadratureInfo* info = nullptr);

}  // namespace hmmvi

#endif
