#pragma once

#include <cstdint>

namespace cfjcd {

// Event counters for the numerical guard rails. None of these abort a run;
// they record how often a repair fired so experiments can report it.
struct Diagnostics {
  std::uint64_t psd_clips = 0;              // negative precision eigenvalue zeroed in divide
  std::uint64_t sigma_regularizations = 0;  // moment-matched covariance floored before inversion
  std::uint64_t cavity_regularizations = 0; // cavity precision lost definiteness to rounding
  std::uint64_t uninformative_psi0 = 0;     // interference sum had unbounded covariance
  std::uint64_t degenerate_categoricals = 0; // all-zero / non-finite weight vector replaced by uniform

  void merge(const Diagnostics& other) {
    psd_clips += other.psd_clips;
    sigma_regularizations += other.sigma_regularizations;
    cavity_regularizations += other.cavity_regularizations;
    uninformative_psi0 += other.uninformative_psi0;
    degenerate_categoricals += other.degenerate_categoricals;
  }

  std::uint64_t total() const {
    return psd_clips + sigma_regularizations + cavity_regularizations +
           uninformative_psi0 + degenerate_categoricals;
  }
};

}  // namespace cfjcd
