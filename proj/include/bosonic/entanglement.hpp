// entanglement.hpp
// Entanglement of two-mode pure states on fixed-M subspaces. In the
// |M-n, n> basis such states are already Schmidt-decomposed, so the measure
// S_ent = 2 S(rho_1) = 2 S(rho_2) reduces to twice the Shannon entropy of the
// photon distribution |c_n|^2. Entropies are in bits (base-2 logs).

#pragma once

#include <optional>

#include "bosonic/krawtchouk.hpp"

namespace bosonic {

/// Nonnegative weights summing to one within 1e-10.
class ProbabilityDistribution {
 public:
  explicit ProbabilityDistribution(std::vector<double> weights);

  const std::vector<double>& weights() const { return weights_; }
  int size() const { return static_cast<int>(weights_.size()); }

 private:
  std::vector<double> weights_;
};

/// -sum w log2 w with 0 log 0 = 0.
double shannon_entropy(const ProbabilityDistribution& dist);

struct EntanglementReport {
  int total_photons = 0;
  double energy = 0.0;
  double entanglement_bits = 0.0;
};

/// S_ent of the H0 eigenstate with lattice index x; independent of the
/// coupling phase, gamma_magnitude only scales the reported energy.
EntanglementReport eigenstate_entanglement(int total_photons, int x_index,
                                           double gamma_magnitude = 1.0);

/// 2 H(|amplitude_n|^2) of an arbitrary normalized state.
double reduced_entropy(const TwoModeState& state);

/// Number of local maxima. A maximal run of equal weights flanked by strictly
/// smaller neighbors (or the boundary) counts as one peak.
int peak_count(const ProbabilityDistribution& dist);

/// S_ent per M over [m_min, m_max]. With fixed_energy set, M values where
/// that energy is not on the spectrum lattice (parity or range mismatch) are
/// skipped and reported; otherwise each M uses its largest eigenvalue.
struct EntropyVsPhotonNumber {
  std::vector<EntanglementReport> reports;
  std::vector<int> skipped_photon_numbers;
};

EntropyVsPhotonNumber entropy_vs_photon_number(std::optional<double> fixed_energy,
                                               int m_min, int m_max,
                                               double gamma_magnitude = 1.0);

/// S_ent for every eigenstate of one subspace, ordered by energy ascending.
std::vector<EntanglementReport> entropy_vs_energy(int total_photons,
                                                  double gamma_magnitude = 1.0);

}  // namespace bosonic
