#include "bosonic/evolution.hpp"

#include <algorithm>
#include <cmath>

namespace bosonic {

double Propagator::unitarity_error() const {
  return (matrix * matrix.adjoint())
      .max_abs_difference(SubspaceMatrix::identity(total_photons));
}

Propagator propagator(const HamiltonianSpec& spec, int total_photons,
                      double t) {
  validate(spec);
  const EigenSystem system = eigensystem(total_photons, spec.coupling);
  const int d = total_photons + 1;
  SubspaceMatrix u(total_photons);
  for (int x = 0; x < d; ++x) {
    const cdouble phase =
        std::exp(cdouble{0.0, -nonlinear_eigenvalue(spec, total_photons, x) * t});
    const auto& vec = system.eigenvectors[x].amplitudes();
    for (int i = 0; i < d; ++i) {
      const cdouble left = phase * vec[i];
      for (int j = 0; j < d; ++j) {
        u.at(i, j) += left * std::conj(vec[j]);
      }
    }
  }
  return Propagator{total_photons, std::move(u), t};
}

TwoModeState evolve(const HamiltonianSpec& spec, const TwoModeState& state,
                    double t) {
  const Propagator u = propagator(spec, state.total_photons(), t);
  return TwoModeState(state.total_photons(), u.matrix.apply(state.amplitudes()));
}

std::vector<TrajectorySample> n2_trajectory(const HamiltonianSpec& spec,
                                            const TwoModeState& initial,
                                            const std::vector<double>& t_grid,
                                            bool with_snapshots) {
  validate(spec);
  for (double t : t_grid) {
    if (!std::isfinite(t)) throw std::domain_error("time grid must be finite");
  }
  const int m = initial.total_photons();
  const EigenSystem system = eigensystem(m, spec.coupling);

  // Expand once in the eigenbasis; each sample is a phase twist away.
  std::vector<cdouble> overlaps(m + 1);
  std::vector<double> energies(m + 1);
  for (int x = 0; x <= m; ++x) {
    overlaps[x] = inner_product(system.eigenvectors[x], initial);
    energies[x] = nonlinear_eigenvalue(spec, m, x);
  }

  std::vector<TrajectorySample> samples;
  samples.reserve(t_grid.size());
  for (double t : t_grid) {
    std::vector<cdouble> amps(m + 1, cdouble{0.0, 0.0});
    for (int x = 0; x <= m; ++x) {
      const cdouble weight = overlaps[x] * std::exp(cdouble{0.0, -energies[x] * t});
      const auto& vec = system.eigenvectors[x].amplitudes();
      for (int n = 0; n <= m; ++n) {
        amps[n] += weight * vec[n];
      }
    }
    TwoModeState state(m, std::move(amps));
    TrajectorySample sample{t, number_expectation(state, 2), std::nullopt};
    if (with_snapshots) sample.state = std::move(state);
    samples.push_back(std::move(sample));
  }
  return samples;
}

std::vector<double> uniform_grid(double t_max, int n_points) {
  if (n_points < 2 || !(t_max > 0.0)) {
    throw std::domain_error("grid needs t_max > 0 and at least two points");
  }
  std::vector<double> grid(n_points);
  for (int k = 0; k < n_points; ++k) {
    grid[k] = t_max * k / (n_points - 1);
  }
  return grid;
}

double BlockwiseState::norm() const {
  double s = 0.0;
  for (const auto& block : blocks) {
    for (const auto& a : block) s += std::norm(a);
  }
  return std::sqrt(s);
}

cdouble inner_product(const BlockwiseState& a, const BlockwiseState& b) {
  cdouble s{0.0, 0.0};
  const std::size_t common = std::min(a.blocks.size(), b.blocks.size());
  for (std::size_t m = 0; m < common; ++m) {
    const std::size_t len = std::min(a.blocks[m].size(), b.blocks[m].size());
    for (std::size_t n = 0; n < len; ++n) {
      s += std::conj(a.blocks[m][n]) * b.blocks[m][n];
    }
  }
  return s;
}

double fidelity(const BlockwiseState& a, const BlockwiseState& b) {
  const double na = a.norm();
  const double nb = b.norm();
  if (na == 0.0 || nb == 0.0) {
    throw std::domain_error("fidelity of a zero state is undefined");
  }
  const double overlap = std::abs(inner_product(a, b));
  return overlap * overlap / (na * na * nb * nb);
}

BlockwiseState evolve_blockwise(const HamiltonianSpec& spec,
                                const BlockwiseState& state, double t) {
  BlockwiseState out;
  out.blocks.reserve(state.blocks.size());
  for (std::size_t m = 0; m < state.blocks.size(); ++m) {
    const auto& block = state.blocks[m];
    if (block.size() != m + 1) {
      throw std::domain_error("block M must hold M+1 amplitudes");
    }
    const Propagator u = propagator(spec, static_cast<int>(m), t);
    out.blocks.push_back(u.matrix.apply(block));
  }
  return out;
}

CatResult cat_from_coherent(cdouble alpha, const Coupling& coupling, double tau,
                            double epsilon) {
  const CoherentTruncation trunc = truncated_coherent(alpha, epsilon);
  BlockwiseState input;
  input.blocks.resize(trunc.cutoff + 1);
  for (int m = 0; m <= trunc.cutoff; ++m) {
    input.blocks[m].assign(m + 1, cdouble{0.0, 0.0});
    input.blocks[m][0] = trunc.amplitudes[m];  // |M, 0>
  }
  const HamiltonianSpec spec = design_evenswap(coupling, tau);
  return CatResult{trunc, evolve_blockwise(spec, input, tau)};
}

BlockwiseState cat_reference(const CoherentTruncation& truncation) {
  BlockwiseState ref;
  ref.blocks.resize(truncation.cutoff + 1);
  for (int m = 0; m <= truncation.cutoff; ++m) {
    ref.blocks[m].assign(m + 1, cdouble{0.0, 0.0});
    if (m % 2 == 0) {
      ref.blocks[m][m] = truncation.amplitudes[m];  // even branch: |0, M>
    } else {
      ref.blocks[m][0] = cdouble{0.0, 1.0} * truncation.amplitudes[m];  // i |M, 0>
    }
  }
  return ref;
}

MultiModeState apply_pairwise(const MultiModeState& state, int mode_i,
                              int mode_j, const HamiltonianSpec& spec,
                              double t) {
  if (mode_i < 1 || mode_i > 4 || mode_j < 1 || mode_j > 4) {
    throw std::domain_error("modes must be in 1..4");
  }
  if (mode_i == mode_j) {
    throw std::domain_error("pairwise coupling needs two distinct modes");
  }
  validate(spec);
  const int i = mode_i - 1;
  const int j = mode_j - 1;

  // Group components by spectator occupations and pair photon count.
  struct Block {
    MultiModeState::Occupation base;  // occupation with the pair zeroed
    int pair_total;
    std::vector<cdouble> amplitudes;  // indexed by photons in mode_j
  };
  std::map<std::pair<MultiModeState::Occupation, int>, std::vector<cdouble>>
      blocks;
  for (const auto& [occ, amp] : state.amplitudes()) {
    const int pair_total = occ[i] + occ[j];
    MultiModeState::Occupation base = occ;
    base[i] = 0;
    base[j] = 0;
    auto& vec = blocks[{base, pair_total}];
    if (vec.empty()) vec.assign(pair_total + 1, cdouble{0.0, 0.0});
    vec[occ[j]] = amp;
  }

  MultiModeState::AmplitudeMap out;
  for (auto& [key, amps] : blocks) {
    const auto& [base, pair_total] = key;
    const Propagator u = propagator(spec, pair_total, t);
    const std::vector<cdouble> evolved = u.matrix.apply(amps);
    for (int n = 0; n <= pair_total; ++n) {
      if (evolved[n] == cdouble{0.0, 0.0}) continue;
      MultiModeState::Occupation occ = base;
      occ[i] = pair_total - n;
      occ[j] = n;
      out[occ] += evolved[n];
    }
  }
  return MultiModeState(state.photon_budget(), std::move(out),
                        /*allow_unnormalized=*/true);
}

MultiModeState sort_cascade(const std::vector<cdouble>& input_amplitudes,
                            const Coupling& coupling, double tau) {
  constexpr int kSorterCapacity = 4;
  if (input_amplitudes.empty()) {
    throw std::domain_error("sorter input is empty");
  }
  double norm_sq = 0.0;
  int top = 0;
  for (std::size_t m = 0; m < input_amplitudes.size(); ++m) {
    const double p = std::norm(input_amplitudes[m]);
    if (p > 0.0 && static_cast<int>(m) > kSorterCapacity) {
      throw std::domain_error("sorter input has support above 4 photons");
    }
    if (p > 0.0) top = static_cast<int>(m);
    norm_sq += p;
  }
  if (std::abs(norm_sq - 1.0) > kNormTolerance) {
    throw std::domain_error("sorter input is not normalized");
  }

  MultiModeState::AmplitudeMap amps;
  for (int m = 0; m <= top; ++m) {
    const cdouble a = input_amplitudes[m];
    if (a != cdouble{0.0, 0.0}) amps[{m, 0, 0, 0}] = a;
  }
  MultiModeState state(top, std::move(amps));

  state = apply_pairwise(state, 1, 2, design_evenswap(coupling, tau), tau);
  state = apply_pairwise(state, 1, 3, design_pswap(coupling, tau, 1, true), tau);
  state = apply_pairwise(state, 2, 4, design_pswap(coupling, tau, 2, true), tau);
  return state;
}

}  // namespace bosonic
