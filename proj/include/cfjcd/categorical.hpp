#pragma once

#include "cfjcd/diagnostics.hpp"
#include "cfjcd/types.hpp"

namespace cfjcd {

/// Normalized PMF over a finite ordered support (the constellation). Weights
/// always sum to one and never drop below kEpsCat, so logarithms and
/// divisions stay finite over long schedules.
class CategoricalMessage {
 public:
  explicit CategoricalMessage(RVec weights, Diagnostics* diag = nullptr);

  static CategoricalMessage uniform(Eigen::Index n);
  static CategoricalMessage from_log_weights(const RVec& logw, Diagnostics* diag = nullptr);

  const RVec& weights() const { return w_; }
  double weight(Eigen::Index i) const { return w_(i); }
  Eigen::Index size() const { return w_.size(); }

  bool operator==(const CategoricalMessage& other) const {
    return w_.size() == other.w_.size() && (w_.array() == other.w_.array()).all();
  }

 private:
  CategoricalMessage() = default;
  RVec w_;
};

// Log-domain product accumulator. The engine and the fronthaul CPU both build
// their joint symbol messages through this, which keeps the two execution
// paths arithmetically identical.
class CatProductAccumulator {
 public:
  void multiply(const CategoricalMessage& m);
  CategoricalMessage normalized(Diagnostics* diag = nullptr) const;
  bool empty() const { return empty_; }

 private:
  RVec logw_;
  bool empty_ = true;
};

CategoricalMessage cat_multiply(const CategoricalMessage& a, const CategoricalMessage& b,
                                Diagnostics* diag = nullptr);

// Elementwise quotient with the denominator floored at kEpsCat, renormalized.
CategoricalMessage cat_divide(const CategoricalMessage& num, const CategoricalMessage& den,
                              Diagnostics* diag = nullptr);

// Index of the largest weight; ties break to the lowest index.
Eigen::Index argmax_index(const CategoricalMessage& m);

CategoricalMessage soft_update_categorical(const CategoricalMessage& fresh,
                                           const CategoricalMessage& old, double eta);

}  // namespace cfjcd
