// Error types shared across the library.
//
// Every recoverable failure is reported through one of these exceptions;
// the CLI maps them onto exit codes.

#ifndef HMMVI_ERRORS_HPP
#define HMMVI_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hmmvi {

/// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// -- mesh construction ---------------------------------------------------

/// A cell is not strictly star-shaped with respect to its centre
/// (some face distance d_{K,sigma} <= 0).
struct NonStarShaped : Error {
  std::size_t cell;
  explicit NonStarShaped(std::size_t cell_id)
      : Error("cell " + std::to_string(cell_id) +
              " is not strictly star-shaped w.r.t. its centre"),
        cell(cell_id) {}
};

/// A face has zero or more than two incident cells.
struct DanglingFace : Error {
  using Error::Error;
};

/// A boundary face matched no tagging rule.
struct UntaggedBoundary : Error {
  using Error::Error;
};

// -- quadrature / interpolation ------------------------------------------

/// A user-supplied function evaluated to NaN/Inf at a quadrature node.
struct QuadratureFailure : Error {
  using Error::Error;
};

/// A test function handed to a consistency diagnostic violates the
/// discrete convex set.
struct InadmissibleTestFunction : Error {
  using Error::Error;
};

// -- solvers ----------------------------------------------------------------

/// Active-set iteration exceeded its theoretical cap (number of
/// constrained faces); indicates a bug or a degenerate system.
struct IterationCapExceeded : Error {
  using Error::Error;
};

/// The sparse sub-solve could not reach its residual contract.
struct LinearSolveFailure : Error {
  using Error::Error;
};

/// Fixed-point outer loop hit its iteration budget without converging.
struct MaxOuterExceeded : Error {
  using Error::Error;
};

/// Damped Newton failed to reduce the residual.
struct NewtonDivergence : Error {
  using Error::Error;
};

/// Eigen-iteration in a diagnostic failed to converge.
struct SolverDivergence : Error {
  using Error::Error;
};

/// Dirichlet data strictly above the barrier on faces of the same cell.
struct InfeasibleProblem : Error {
  using Error::Error;
};

/// No constrained face at convergence; the seepage point is undefined.
struct EmptyActiveSet : Error {
  using Error::Error;
};

// -- operators / io --------------------------------------------------------

/// A permeability tensor is not symmetric positive definite.
struct NotSPD : Error {
  using Error::Error;
};

/// Malformed input file; message carries field/line context.
struct ParseError : Error {
  using Error::Error;
};

/// Filesystem-level write/read failure.
struct IOFailure : Error {
  using Error::Error;
};

}  // namespace hmmvi

#endif
