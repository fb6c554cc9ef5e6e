#pragma once

#include <Eigen/Dense>

#include <stdexcept>
#include <string>

namespace scvx {

template <typename Scalar>
using VecX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

template <typename Scalar>
using MatX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

/// Dimension or shape mismatch in user-supplied data.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A set or problem definition violates a structural invariant.
class InvariantError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An iterative numerical scheme failed to converge; the message carries
/// diagnostics (iteration count, residual).
class NonconvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when a supporting hyperplane is requested at a point strictly
/// inside the set, where no normal is defined. Callers should route such
/// points through the infeasible initialization routine instead.
class AmbiguousNormalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The halfspace intersection built by the initialization routine is empty:
/// the feasible corridor is fully obstructed and the scenario needs repair.
class ObstructedCorridorError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A cost model that the conic builder cannot encode.
class UnsupportedCostError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

namespace detail {

inline void require(bool cond, const std::string& msg) {
  if (!cond) throw InvariantError(msg);
}

inline void require_dim(bool cond, const std::string& msg) {
  if (!cond) throw DimensionError(msg);
}

}  // namespace detail

}  // namespace scvx
