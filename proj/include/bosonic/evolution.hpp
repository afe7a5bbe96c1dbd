// evolution.hpp
// Exact time evolution by spectral decomposition. Every Hamiltonian here
// shares the analytic H0 eigenbasis, so exp(-iHt) is assembled as
// sum_x exp(-i eps_x t) |E_x><E_x| with no series truncation.

#pragma once

#include "bosonic/hamiltonian.hpp"

namespace bosonic {

struct Propagator {
  int total_photons;
  SubspaceMatrix matrix;
  double time;

  /// max |U U^dag - I|
  double unitarity_error() const;
};

Propagator propagator(const HamiltonianSpec& spec, int total_photons, double t);

TwoModeState evolve(const HamiltonianSpec& spec, const TwoModeState& state,
                    double t);

struct TrajectorySample {
  double t = 0.0;
  double n2_expectation = 0.0;
  std::optional<TwoModeState> state;
};

/// <n_2>(t) along a time grid. Snapshots are kept when requested (the JSON
/// trajectory format carries full amplitudes).
std::vector<TrajectorySample> n2_trajectory(const HamiltonianSpec& spec,
                                            const TwoModeState& initial,
                                            const std::vector<double>& t_grid,
                                            bool with_snapshots = false);

/// n_points uniform samples covering [0, t_max], endpoints included.
std::vector<double> uniform_grid(double t_max, int n_points);

/// Superposition over total-photon sectors: blocks[M] holds the M-subspace
/// amplitudes (length M+1), globally weighted so the squared norms of all
/// blocks sum to the total norm. Sectors evolve independently.
struct BlockwiseState {
  std::vector<std::vector<cdouble>> blocks;

  double norm() const;
};

cdouble inner_product(const BlockwiseState& a, const BlockwiseState& b);

/// |<a|b>|^2 / (|a|^2 |b|^2)
double fidelity(const BlockwiseState& a, const BlockwiseState& b);

BlockwiseState evolve_blockwise(const HamiltonianSpec& spec,
                                const BlockwiseState& state, double t);

/// Result of feeding a coherent state through the even-conditioned swap:
/// mode 2 receives the even cat, mode 1 keeps i times the odd cat.
struct CatResult {
  CoherentTruncation truncation;
  BlockwiseState state;
};

CatResult cat_from_coherent(cdouble alpha, const Coupling& coupling, double tau,
                            double epsilon);

/// The target superposition built directly from the truncated coherent
/// amplitudes: |0>(|a>+|-a>)/2 in mode 2 plus i(|a>-|-a>)/2 |0> in mode 1.
BlockwiseState cat_reference(const CoherentTruncation& truncation);

/// Lifts a two-mode propagator to a four-mode state: the state is decomposed
/// by photon count within the (mode_i, mode_j) pair, each block evolves under
/// propagator(spec, block_total, t), spectator modes are untouched. Modes are
/// 1-based; mode_j plays the "mode 2" role of the pair.
MultiModeState apply_pairwise(const MultiModeState& state, int mode_i,
                              int mode_j, const HamiltonianSpec& spec,
                              double t);

/// Photon-sorting cascade: evenswap on modes (1,2), then halved pswap(N=1) on
/// (1,3) and halved pswap(N=2) on (2,4), each for duration tau. A Fock input
/// |M> with M in 1..4 ends with its M photons in mode M.
MultiModeState sort_cascade(const std::vector<cdouble>& input_amplitudes,
                            const Coupling& coupling, double tau);

}  // namespace bosonic
