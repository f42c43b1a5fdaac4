#pragma once

#include "cfjcd/diagnostics.hpp"
#include "cfjcd/types.hpp"

#include <optional>
#include <span>

namespace cfjcd {

/// Complex multivariate Gaussian message in precision form: Lambda = C^-1 and
/// shift = Lambda * mu. The all-zero pair is the uninformative message and is
/// a legal state; it is what message initialization uses.
struct GaussianMessage {
  CMat precision;  // Hermitian PSD
  CVec shift;

  GaussianMessage() = default;
  GaussianMessage(CMat lambda, CVec gamma);

  static GaussianMessage uninformative(Eigen::Index n);
  static GaussianMessage from_moments(const CVec& mean, const CMat& cov);

  Eigen::Index dim() const { return shift.size(); }
  bool is_uninformative() const;

  // Checks the full message contract (Hermitian precision, PSD spectrum,
  // shift in the range of the precision). Throws std::logic_error on
  // violation; meant for tests and debugging hooks, not for hot paths.
  void validate() const;
};

struct MeanCov {
  CVec mean;
  CMat cov;
};

struct MixtureComponent {
  double weight = 0.0;
  CVec mean;
  CMat cov;
};

// Product of Gaussian densities: precisions and shifts add.
GaussianMessage multiply(const GaussianMessage& a, const GaussianMessage& b);

// Quotient of Gaussian densities. The raw precision difference can be
// indefinite; negative eigenvalues are zeroed and the shift is projected onto
// the range of the clipped precision so the implied mean stays finite.
GaussianMessage divide(const GaussianMessage& num, const GaussianMessage& den,
                       Diagnostics* diag = nullptr);

// Zeroes the negative eigenvalues of a Hermitian matrix (same eigenvectors).
CMat clip_psd(const CMat& m);

// Covariance form (C = Lambda^-1, mu = C * shift). Returns nullopt when the
// precision is not strictly positive definite (min eigenvalue must exceed
// eps_rel * trace / n); callers must branch on the unbounded-covariance case.
std::optional<MeanCov> mean_cov(const GaussianMessage& m, double eps_rel = kEpsPdRel);

// Density of the circularly-symmetric complex normal N(0; mean, cov),
// i.e. exp(-mean^H cov^-1 mean) / (pi^n det cov). Throws std::domain_error
// when cov is not positive definite.
double log_gaussian_density_at_zero(const CVec& mean, const CMat& cov);
double gaussian_density_at_zero(const CVec& mean, const CMat& cov);

// Moment matching of a Gaussian mixture: mean = sum w_i mu_i and
// cov = sum w_i (mu_i mu_i^H + C_i) - mean mean^H. Weights are normalized
// internally; the list must be nonempty.
MeanCov mixture_moment_match(std::span<const MixtureComponent> components);

// Raises eigenvalues below eps_rel * trace / n up to that floor. Used before
// inverting moment-matched covariances that may be numerically degenerate.
CMat regularize_pd(const CMat& m, double eps_rel, Diagnostics* diag = nullptr);

// Inverse of a Hermitian positive definite matrix (Cholesky based, with a
// regularized retry if the factorization fails).
CMat inverse_pd(const CMat& m, double eps_rel = kEpsPdRel, Diagnostics* diag = nullptr);

CMat hermitianized(const CMat& m);

}  // namespace cfjcd
