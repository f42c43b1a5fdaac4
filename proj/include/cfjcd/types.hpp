#pragma once

#include <Eigen/Dense>
#include <complex>

namespace cfjcd {

using cplx = std::complex<double>;

// Per-AP antenna counts are small in cell-free deployments, so message-level
// matrices are stack-allocated up to this dimension. Scenario-level objects
// (full covariances, stacked channels) use unbounded Eigen types instead.
inline constexpr Eigen::Index kMaxDim = 4;

// Largest constellation the categorical messages support.
inline constexpr Eigen::Index kMaxSupport = 16;

using CMat = Eigen::Matrix<cplx, Eigen::Dynamic, Eigen::Dynamic, Eigen::ColMajor, kMaxDim, kMaxDim>;
using CVec = Eigen::Matrix<cplx, Eigen::Dynamic, 1, Eigen::ColMajor, kMaxDim, 1>;
using RVec = Eigen::Matrix<double, Eigen::Dynamic, 1, Eigen::ColMajor, kMaxSupport, 1>;

// Relative Frobenius tolerance for Hermitian checks.
inline constexpr double kHermitianTol = 1e-10;

// Shift must lie in the range of the precision within this tolerance.
inline constexpr double kShiftRangeTol = 1e-8;

// Positive-definiteness threshold: min eigenvalue must exceed
// kEpsPdRel * trace / n for a precision or covariance to count as PD.
inline constexpr double kEpsPdRel = 1e-12;

// Floor applied to categorical weights before division.
inline constexpr double kEpsCat = 1e-30;

}  // namespace cfjcd
