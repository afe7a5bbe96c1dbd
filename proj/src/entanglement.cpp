#include "bosonic/entanglement.hpp"

#include <cmath>

namespace bosonic {

ProbabilityDistribution::ProbabilityDistribution(std::vector<double> weights)
    : weights_(std::move(weights)) {
  if (weights_.empty()) {
    throw std::domain_error("distribution has no weights");
  }
  double sum = 0.0;
  for (double w : weights_) {
    if (!(w >= 0.0)) {
      throw std::domain_error("distribution weights must be nonnegative");
    }
    sum += w;
  }
  if (std::abs(sum - 1.0) > 1e-10) {
    throw std::domain_error("distribution weights must sum to one");
  }
}

double shannon_entropy(const ProbabilityDistribution& dist) {
  double h = 0.0;
  for (double w : dist.weights()) {
    if (w > 0.0) h -= w * std::log2(w);
  }
  return h;
}

namespace {

ProbabilityDistribution squared_coefficients(int total_photons, int x_index) {
  const std::vector<double> coeffs = coefficient_vector(total_photons, x_index);
  std::vector<double> weights(coeffs.size());
  for (std::size_t n = 0; n < coeffs.size(); ++n) weights[n] = coeffs[n] * coeffs[n];
  return ProbabilityDistribution(std::move(weights));
}

}  // namespace

EntanglementReport eigenstate_entanglement(int total_photons, int x_index,
                                           double gamma_magnitude) {
  if (x_index < 0 || x_index > total_photons) {
    throw std::domain_error("lattice index out of range");
  }
  const double energy = (2.0 * x_index - total_photons) * gamma_magnitude;
  const double s =
      2.0 * shannon_entropy(squared_coefficients(total_photons, x_index));
  return EntanglementReport{total_photons, energy, s};
}

double reduced_entropy(const TwoModeState& state) {
  double norm_sq = 0.0;
  std::vector<double> weights(state.dim());
  for (int n = 0; n < state.dim(); ++n) {
    weights[n] = std::norm(state.amplitude(n));
    norm_sq += weights[n];
  }
  if (std::abs(norm_sq - 1.0) > kNormTolerance) {
    throw std::domain_error("reduced entropy needs a normalized state");
  }
  return 2.0 * shannon_entropy(ProbabilityDistribution(std::move(weights)));
}

int peak_count(const ProbabilityDistribution& dist) {
  const auto& w = dist.weights();
  const int n = dist.size();
  int peaks = 0;
  int run_start = 0;
  for (int i = 0; i < n; ++i) {
    if (i + 1 < n && w[i + 1] == w[i]) continue;  // extend the plateau
    const bool rises = run_start == 0 || w[run_start - 1] < w[run_start];
    const bool falls = i == n - 1 || w[i + 1] < w[i];
    if (rises && falls) ++peaks;
    run_start = i + 1;
  }
  return peaks;
}

EntropyVsPhotonNumber entropy_vs_photon_number(std::optional<double> fixed_energy,
                                               int m_min, int m_max,
                                               double gamma_magnitude) {
  if (m_min < 0 || m_max < m_min) {
    throw std::domain_error("empty photon-number range");
  }
  if (!(gamma_magnitude > 0.0)) {
    throw std::domain_error("gamma magnitude must be positive");
  }
  EntropyVsPhotonNumber out;
  for (int m = m_min; m <= m_max; ++m) {
    int x_index = m;  // max-E rule
    if (fixed_energy) {
      // E = (2x - M)|gamma| must land on an integer lattice point in range.
      const double x_real = (*fixed_energy / gamma_magnitude + m) / 2.0;
      const double x_round = std::round(x_real);
      if (std::abs(x_real - x_round) > 1e-9 || x_round < 0.0 ||
          x_round > static_cast<double>(m)) {
        out.skipped_photon_numbers.push_back(m);
        continue;
      }
      x_index = static_cast<int>(x_round);
    }
    out.reports.push_back(eigenstate_entanglement(m, x_index, gamma_magnitude));
  }
  return out;
}

std::vector<EntanglementReport> entropy_vs_energy(int total_photons,
                                                  double gamma_magnitude) {
  ensure_photon_budget(total_photons);
  std::vector<EntanglementReport> reports;
  reports.reserve(total_photons + 1);
  for (int x = 0; x <= total_photons; ++x) {
    reports.push_back(eigenstate_entanglement(total_photons, x, gamma_magnitude));
  }
  return reports;
}

}  // namespace bosonic
