#include "bosonic/fock.hpp"

#include <cmath>
#include <numeric>

namespace bosonic {

void ensure_photon_budget(int total_photons) {
  if (total_photons < 0) {
    throw std::domain_error("total photon number must be nonnegative");
  }
  if (total_photons > kMaxTotalPhotons) {
    throw std::domain_error("total photon number exceeds the supported limit of " +
                            std::to_string(kMaxTotalPhotons));
  }
}

int subspace_dim(int total_photons) {
  ensure_photon_budget(total_photons);
  return total_photons + 1;
}

namespace {

double norm_sq(const std::vector<cdouble>& amps) {
  double s = 0.0;
  for (const auto& a : amps) s += std::norm(a);
  return s;
}

}  // namespace

TwoModeState::TwoModeState(int total_photons, std::vector<cdouble> amplitudes,
                           bool allow_unnormalized)
    : total_photons_(total_photons), amplitudes_(std::move(amplitudes)) {
  ensure_photon_budget(total_photons_);
  if (static_cast<int>(amplitudes_.size()) != total_photons_ + 1) {
    throw std::domain_error("amplitude vector must have length M+1");
  }
  if (!allow_unnormalized) {
    const double n2 = norm_sq(amplitudes_);
    if (std::abs(n2 - 1.0) > kNormTolerance) {
      throw std::domain_error("state is not normalized");
    }
  }
}

double TwoModeState::norm() const { return std::sqrt(norm_sq(amplitudes_)); }

TwoModeState fock_state(int total_photons, int photons_in_mode2) {
  ensure_photon_budget(total_photons);
  if (photons_in_mode2 < 0 || photons_in_mode2 > total_photons) {
    throw std::domain_error("mode-2 photon count out of range");
  }
  std::vector<cdouble> amps(total_photons + 1, cdouble{0.0, 0.0});
  amps[photons_in_mode2] = 1.0;
  return TwoModeState(total_photons, std::move(amps));
}

double number_expectation(const TwoModeState& state, int mode) {
  if (mode != 1 && mode != 2) {
    throw std::domain_error("mode must be 1 or 2");
  }
  const int m = state.total_photons();
  double value = 0.0;
  for (int n = 0; n <= m; ++n) {
    const double p = std::norm(state.amplitude(n));
    value += p * (mode == 2 ? n : m - n);
  }
  return value;
}

cdouble inner_product(const TwoModeState& a, const TwoModeState& b) {
  if (a.total_photons() != b.total_photons()) {
    throw std::domain_error("states live on different subspaces");
  }
  cdouble s{0.0, 0.0};
  for (int n = 0; n < a.dim(); ++n) {
    s += std::conj(a.amplitude(n)) * b.amplitude(n);
  }
  return s;
}

CoherentTruncation truncated_coherent(cdouble alpha, double epsilon) {
  if (!(epsilon > 0.0) || !(epsilon < 1.0)) {
    throw std::domain_error("truncation epsilon must lie in (0, 1)");
  }
  CoherentTruncation result;
  result.alpha = alpha;

  // a_{n+1} = a_n * alpha / sqrt(n+1), |a_0|^2 = exp(-|alpha|^2)
  cdouble amp = std::exp(-0.5 * std::norm(alpha));
  double kept = 0.0;
  for (int n = 0; n <= kMaxTotalPhotons; ++n) {
    result.amplitudes.push_back(amp);
    kept += std::norm(amp);
    if (1.0 - kept < epsilon) {
      result.cutoff = n;
      result.discarded_weight = std::max(0.0, 1.0 - kept);
      return result;
    }
    amp *= alpha / std::sqrt(static_cast<double>(n + 1));
  }
  throw std::domain_error(
      "coherent truncation does not reach the requested epsilon within the "
      "photon budget");
}

MultiModeState::MultiModeState(int photon_budget, AmplitudeMap amplitudes,
                               bool allow_unnormalized)
    : photon_budget_(photon_budget), amplitudes_(std::move(amplitudes)) {
  ensure_photon_budget(photon_budget_);
  double n2 = 0.0;
  for (const auto& [occ, amp] : amplitudes_) {
    int total = 0;
    for (int k = 0; k < 4; ++k) {
      if (occ[k] < 0) throw std::domain_error("negative occupation number");
      total += occ[k];
    }
    if (total > photon_budget_) {
      throw std::domain_error("occupation tuple exceeds the photon budget");
    }
    n2 += std::norm(amp);
  }
  if (!allow_unnormalized && std::abs(n2 - 1.0) > kNormTolerance) {
    throw std::domain_error("state is not normalized");
  }
}

MultiModeState MultiModeState::fock(const Occupation& occupation) {
  const int total = std::accumulate(occupation.begin(), occupation.end(), 0);
  AmplitudeMap amps;
  amps[occupation] = 1.0;
  return MultiModeState(total, std::move(amps));
}

cdouble MultiModeState::amplitude(const Occupation& occupation) const {
  const auto it = amplitudes_.find(occupation);
  return it == amplitudes_.end() ? cdouble{0.0, 0.0} : it->second;
}

double MultiModeState::norm() const {
  double s = 0.0;
  for (const auto& [occ, amp] : amplitudes_) s += std::norm(amp);
  return std::sqrt(s);
}

double MultiModeState::number_expectation(int mode) const {
  if (mode < 1 || mode > 4) {
    throw std::domain_error("mode must be in 1..4");
  }
  double value = 0.0;
  for (const auto& [occ, amp] : amplitudes_) {
    value += std::norm(amp) * occ[mode - 1];
  }
  return value;
}

}  // namespace bosonic
