// fock.hpp
// Fixed-total-photon-number Fock-subspace state algebra for two and four modes.
//
// Basis convention used throughout the project: on the subspace with M total
// photons, index n counts photons in mode 2, so basis vector n is |M-n, n>.

#pragma once

#include <array>
#include <complex>
#include <map>
#include <stdexcept>
#include <vector>

namespace bosonic {

using cdouble = std::complex<double>;

// Soft photon budget. Running-product factorials and 2^M normalizations stay
// comfortably finite in double precision up to here.
inline constexpr int kMaxTotalPhotons = 60;

// Norm tolerance for construction-time validation of quantum states.
inline constexpr double kNormTolerance = 1e-12;

void ensure_photon_budget(int total_photons);

/// Dimension of the two-mode subspace with M total photons.
int subspace_dim(int total_photons);

/// Normalized pure state on a fixed-M two-mode subspace.
class TwoModeState {
 public:
  /// Throws std::domain_error unless the amplitudes have length M+1 and unit
  /// norm within kNormTolerance. Pass allow_unnormalized=true for
  /// intermediate states (norm is then left untouched).
  TwoModeState(int total_photons, std::vector<cdouble> amplitudes,
               bool allow_unnormalized = false);

  int total_photons() const { return total_photons_; }
  int dim() const { return static_cast<int>(amplitudes_.size()); }
  const std::vector<cdouble>& amplitudes() const { return amplitudes_; }
  cdouble amplitude(int n) const { return amplitudes_.at(n); }

  double norm() const;

 private:
  int total_photons_;
  std::vector<cdouble> amplitudes_;
};

/// Basis state |M-n, n>: all amplitude at index n.
TwoModeState fock_state(int total_photons, int photons_in_mode2);

/// <n_1> or <n_2> of a normalized state; the two always sum to M.
double number_expectation(const TwoModeState& state, int mode);

/// <a|b> with the physics convention (conjugate on the left argument).
cdouble inner_product(const TwoModeState& a, const TwoModeState& b);

/// Coherent-state amplitudes exp(-|alpha|^2/2) alpha^n / sqrt(n!) truncated at
/// the smallest cutoff whose discarded tail weight is below epsilon.
struct CoherentTruncation {
  cdouble alpha;
  int cutoff = 0;  // N_max; amplitudes has cutoff+1 entries
  std::vector<cdouble> amplitudes;
  double discarded_weight = 0.0;
};

CoherentTruncation truncated_coherent(cdouble alpha, double epsilon);

/// Pure state of four modes. Sparse map keyed by occupation tuple
/// (n1,n2,n3,n4). Components may live in different total-photon sectors (a
/// superposition fed through a photon-conserving cascade stays sector-block
/// diagonal); photon_budget is the largest admissible total.
class MultiModeState {
 public:
  using Occupation = std::array<int, 4>;
  using AmplitudeMap = std::map<Occupation, cdouble>;

  MultiModeState(int photon_budget, AmplitudeMap amplitudes,
                 bool allow_unnormalized = false);

  static MultiModeState fock(const Occupation& occupation);

  int photon_budget() const { return photon_budget_; }
  const AmplitudeMap& amplitudes() const { return amplitudes_; }
  cdouble amplitude(const Occupation& occupation) const;

  double norm() const;
  double number_expectation(int mode) const;  // mode in 1..4

 private:
  int photon_budget_;
  AmplitudeMap amplitudes_;
};

}  // namespace bosonic
