#include "cfjcd/gaussian.hpp"

#include <Eigen/Cholesky>
#include <Eigen/Eigenvalues>

#include <cmath>
#include <stdexcept>

namespace cfjcd {

namespace {

constexpr double kPi = 3.14159265358979323846;

void check_hermitian(const CMat& m, const char* what) {
  const double scale = m.norm();
  if (scale == 0.0) return;
  if ((m - m.adjoint()).norm() > kHermitianTol * scale) {
    throw std::invalid_argument(std::string(what) + ": matrix is not Hermitian");
  }
}

}  // namespace

CMat hermitianized(const CMat& m) {
  CMat h = 0.5 * (m + m.adjoint());
  return h;
}

GaussianMessage::GaussianMessage(CMat lambda, CVec gamma)
    : precision(std::move(lambda)), shift(std::move(gamma)) {
  if (precision.rows() != precision.cols() || precision.rows() != shift.size()) {
    throw std::invalid_argument("GaussianMessage: dimension mismatch");
  }
  precision = hermitianized(precision);
}

GaussianMessage GaussianMessage::uninformative(Eigen::Index n) {
  GaussianMessage m;
  m.precision = CMat::Zero(n, n);
  m.shift = CVec::Zero(n);
  return m;
}

GaussianMessage GaussianMessage::from_moments(const CVec& mean, const CMat& cov) {
  check_hermitian(cov, "from_moments");
  CMat lambda = inverse_pd(cov);
  CVec gamma = lambda * mean;
  return GaussianMessage(std::move(lambda), std::move(gamma));
}

bool GaussianMessage::is_uninformative() const {
  return (precision.array() == cplx(0.0, 0.0)).all() && (shift.array() == cplx(0.0, 0.0)).all();
}

void GaussianMessage::validate() const {
  const Eigen::Index n = dim();
  const double scale = precision.norm();
  if (scale > 0.0 && (precision - precision.adjoint()).norm() > kHermitianTol * scale) {
    throw std::logic_error("GaussianMessage: precision not Hermitian");
  }
  if (n == 1) {
    const double lam = precision(0, 0).real();
    if (lam < -kHermitianTol * std::abs(lam)) {
      throw std::logic_error("GaussianMessage: negative precision");
    }
    if (lam == 0.0 && std::abs(shift(0)) > kShiftRangeTol) {
      throw std::logic_error("GaussianMessage: shift outside precision range");
    }
    return;
  }
  Eigen::SelfAdjointEigenSolver<CMat> es(precision);
  const auto& d = es.eigenvalues();
  if (d.minCoeff() < -1e-10 * scale) {
    throw std::logic_error("GaussianMessage: precision not PSD");
  }
  // Components of the shift along (near-)null eigenvectors must vanish.
  CVec w = es.eigenvectors().adjoint() * shift;
  const double shift_scale = std::max(1.0, shift.norm());
  for (Eigen::Index i = 0; i < n; ++i) {
    if (d(i) <= kEpsPdRel * std::max(scale, 1e-300) && std::abs(w(i)) > kShiftRangeTol * shift_scale) {
      throw std::logic_error("GaussianMessage: shift outside precision range");
    }
  }
}

GaussianMessage multiply(const GaussianMessage& a, const GaussianMessage& b) {
  if (a.dim() != b.dim()) {
    throw std::invalid_argument("multiply: dimension mismatch");
  }
  return GaussianMessage(a.precision + b.precision, a.shift + b.shift);
}

GaussianMessage divide(const GaussianMessage& num, const GaussianMessage& den, Diagnostics* diag) {
  if (num.dim() != den.dim()) {
    throw std::invalid_argument("divide: dimension mismatch");
  }
  const Eigen::Index n = num.dim();
  if (n == 1) {
    const double lam = num.precision(0, 0).real() - den.precision(0, 0).real();
    GaussianMessage out = GaussianMessage::uninformative(1);
    if (lam > 0.0) {
      out.precision(0, 0) = lam;
      out.shift(0) = num.shift(0) - den.shift(0);
    } else if (diag && (lam < 0.0 || num.shift(0) != den.shift(0))) {
      ++diag->psd_clips;
    }
    return out;
  }

  CMat raw = hermitianized(num.precision - den.precision);
  CVec gamma = num.shift - den.shift;
  Eigen::SelfAdjointEigenSolver<CMat> es(raw);
  const auto& d = es.eigenvalues();
  if (d.minCoeff() >= 0.0) {
    return GaussianMessage(std::move(raw), std::move(gamma));
  }
  if (diag) ++diag->psd_clips;
  Eigen::Matrix<double, Eigen::Dynamic, 1, 0, kMaxDim, 1> dc = d.cwiseMax(0.0);
  const CMat& v = es.eigenvectors();
  CMat lambda = hermitianized(v * dc.asDiagonal() * v.adjoint());
  // Project the shift onto the range of the clipped precision.
  CVec w = v.adjoint() * gamma;
  for (Eigen::Index i = 0; i < n; ++i) {
    if (dc(i) <= 0.0) w(i) = cplx(0.0, 0.0);
  }
  gamma = v * w;
  return GaussianMessage(std::move(lambda), std::move(gamma));
}

CMat clip_psd(const CMat& m) {
  check_hermitian(m, "clip_psd");
  const Eigen::Index n = m.rows();
  if (n == 1) {
    CMat out(1, 1);
    out(0, 0) = std::max(m(0, 0).real(), 0.0);
    return out;
  }
  CMat h = hermitianized(m);
  Eigen::SelfAdjointEigenSolver<CMat> es(h);
  const auto& d = es.eigenvalues();
  if (d.minCoeff() >= 0.0) return h;
  Eigen::Matrix<double, Eigen::Dynamic, 1, 0, kMaxDim, 1> dc = d.cwiseMax(0.0);
  const CMat& v = es.eigenvectors();
  return hermitianized(v * dc.asDiagonal() * v.adjoint());
}

std::optional<MeanCov> mean_cov(const GaussianMessage& m, double eps_rel) {
  const Eigen::Index n = m.dim();
  if (n == 1) {
    const double lam = m.precision(0, 0).real();
    if (!(lam > 0.0) || !std::isfinite(lam)) return std::nullopt;
    MeanCov mc;
    mc.cov = CMat::Constant(1, 1, cplx(1.0 / lam, 0.0));
    mc.mean = m.shift / lam;
    return mc;
  }
  Eigen::SelfAdjointEigenSolver<CMat> es(m.precision);
  const auto& d = es.eigenvalues();
  const double tr = d.sum();
  if (!(tr > 0.0) || !std::isfinite(tr)) return std::nullopt;
  if (d.minCoeff() <= eps_rel * (tr / static_cast<double>(n))) return std::nullopt;
  const CMat& v = es.eigenvectors();
  Eigen::Matrix<double, Eigen::Dynamic, 1, 0, kMaxDim, 1> dinv = d.cwiseInverse();
  MeanCov mc;
  mc.cov = hermitianized(v * dinv.asDiagonal() * v.adjoint());
  mc.mean = v * (dinv.asDiagonal() * (v.adjoint() * m.shift));
  return mc;
}

double log_gaussian_density_at_zero(const CVec& mean, const CMat& cov) {
  const Eigen::Index n = cov.rows();
  if (cov.cols() != n || mean.size() != n) {
    throw std::invalid_argument("log_gaussian_density_at_zero: dimension mismatch");
  }
  if (n == 1) {
    const double c = cov(0, 0).real();
    if (!(c > 0.0)) throw std::domain_error("gaussian density: covariance not PD");
    return -std::norm(mean(0)) / c - std::log(kPi * c);
  }
  Eigen::LLT<CMat> llt(cov);
  if (llt.info() != Eigen::Success) {
    throw std::domain_error("gaussian density: covariance not PD");
  }
  double logdet = 0.0;
  for (Eigen::Index i = 0; i < n; ++i) {
    logdet += 2.0 * std::log(llt.matrixLLT()(i, i).real());
  }
  const double q = mean.dot(llt.solve(mean)).real();
  return -q - static_cast<double>(n) * std::log(kPi) - logdet;
}

double gaussian_density_at_zero(const CVec& mean, const CMat& cov) {
  return std::exp(log_gaussian_density_at_zero(mean, cov));
}

MeanCov mixture_moment_match(std::span<const MixtureComponent> components) {
  if (components.empty()) {
    throw std::invalid_argument("mixture_moment_match: empty component list");
  }
  const Eigen::Index n = components[0].mean.size();
  double wsum = 0.0;
  for (const auto& c : components) wsum += c.weight;
  if (!(wsum > 0.0) || !std::isfinite(wsum)) {
    throw std::invalid_argument("mixture_moment_match: weights do not sum to a positive value");
  }
  CVec mean = CVec::Zero(n);
  CMat second = CMat::Zero(n, n);
  for (const auto& c : components) {
    const double w = c.weight / wsum;
    mean.noalias() += w * c.mean;
    second.noalias() += w * (c.mean * c.mean.adjoint() + c.cov);
  }
  MeanCov out;
  out.cov = hermitianized(second - mean * mean.adjoint());
  out.mean = std::move(mean);
  return out;
}

CMat regularize_pd(const CMat& m, double eps_rel, Diagnostics* diag) {
  const Eigen::Index n = m.rows();
  const double tr = m.trace().real();
  const double floor = eps_rel * std::max(tr / static_cast<double>(n), 1e-100);
  if (n == 1) {
    CMat out(1, 1);
    const double lam = m(0, 0).real();
    if (lam < floor) {
      out(0, 0) = floor;
      if (diag) ++diag->sigma_regularizations;
    } else {
      out(0, 0) = lam;
    }
    return out;
  }
  CMat h = hermitianized(m);
  Eigen::SelfAdjointEigenSolver<CMat> es(h);
  const auto& d = es.eigenvalues();
  if (d.minCoeff() >= floor) return h;
  if (diag) ++diag->sigma_regularizations;
  Eigen::Matrix<double, Eigen::Dynamic, 1, 0, kMaxDim, 1> dc = d.cwiseMax(floor);
  const CMat& v = es.eigenvectors();
  return hermitianized(v * dc.asDiagonal() * v.adjoint());
}

CMat inverse_pd(const CMat& m, double eps_rel, Diagnostics* diag) {
  const Eigen::Index n = m.rows();
  if (n == 1) {
    const double c = m(0, 0).real();
    if (c > 0.0) {
      return CMat::Constant(1, 1, cplx(1.0 / c, 0.0));
    }
    CMat r = regularize_pd(m, eps_rel, diag);
    return CMat::Constant(1, 1, cplx(1.0 / r(0, 0).real(), 0.0));
  }
  Eigen::LLT<CMat> llt(m);
  if (llt.info() != Eigen::Success) {
    CMat r = regularize_pd(m, eps_rel, diag);
    llt.compute(r);
    if (llt.info() != Eigen::Success) {
      throw std::domain_error("inverse_pd: matrix not positive definite after regularization");
    }
  }
  CMat inv = llt.solve(CMat::Identity(n, n));
  return hermitianized(inv);
}

}  // namespace cfjcd
