#include <cmath>

#include "doctest.h"

#include "bosonic/evolution.hpp"
#include "bosonic/oracle.hpp"

using namespace bosonic;

namespace {

const Coupling kUnitGamma(cdouble{1.0, 0.0});
const cdouble kImaginary{0.0, 1.0};

double max_amplitude_difference(const TwoModeState& a, const TwoModeState& b) {
  double worst = 0.0;
  for (int n = 0; n < a.dim(); ++n) {
    worst = std::max(worst, std::abs(a.amplitude(n) - b.amplitude(n)));
  }
  return worst;
}

}  // namespace

TEST_CASE("zero-time propagator is the identity") {
  for (const auto& spec :
       {design_lswap(kUnitGamma, 1.0), design_evenswap(kUnitGamma, 1.0)}) {
    for (int m : {0, 1, 6}) {
      const Propagator u = propagator(spec, m, 0.0);
      CHECK(u.matrix.max_abs_difference(SubspaceMatrix::identity(m)) < 1e-12);
    }
  }
}

TEST_CASE("propagators are unitary") {
  const std::vector<HamiltonianSpec> specs = {
      design_lswap(kUnitGamma, 1.0),
      design_evenswap(kUnitGamma, 1.0),
      design_pswap(kUnitGamma, 1.0, 2, false),
      design_pswap(Coupling(cdouble{0.6, 0.8}), 0.7, 3, true),
  };
  for (const auto& spec : specs) {
    for (int m : {0, 1, 5, 17, 40}) {
      for (double t : {0.31, 1.0, 2.7}) {
        CHECK(propagator(spec, m, t).unitarity_error() < 1e-10);
      }
    }
  }
}

TEST_CASE("spectral propagator matches the dense matrix exponential") {
  const std::vector<HamiltonianSpec> specs = {
      design_lswap(kUnitGamma, 1.0),
      design_evenswap(kUnitGamma, 1.0),
      design_pswap(kUnitGamma, 1.0, 1, false),
  };
  for (const auto& spec : specs) {
    for (int m = 0; m <= 20; ++m) {
      for (double t : {0.37, 1.0}) {
        const Propagator analytic = propagator(spec, m, t);
        const SubspaceMatrix dense = dense_propagator(nonlinear_matrix(spec, m), t);
        CHECK(analytic.matrix.max_abs_difference(dense) < 1e-8);
      }
    }
  }
}

TEST_CASE("lswap sends |M,0> to |0,M> at tau for every M") {
  const HamiltonianSpec spec = design_lswap(kUnitGamma, 1.0);
  for (int m = 0; m <= 20; ++m) {
    const TwoModeState out = evolve(spec, fock_state(m, 0), 1.0);
    CHECK(max_amplitude_difference(out, fock_state(m, m)) < 1e-9);
  }
}

TEST_CASE("lswap swaps generic basis states |M-n,n> -> |n,M-n>") {
  const HamiltonianSpec spec = design_lswap(kUnitGamma, 1.0);
  for (int m : {4, 9, 10}) {
    for (int n = 0; n <= m; ++n) {
      const TwoModeState out = evolve(spec, fock_state(m, n), 1.0);
      CHECK(max_amplitude_difference(out, fock_state(m, m - n)) < 1e-9);
      CHECK(number_expectation(out, 2) == doctest::Approx(m - n).epsilon(1e-9));
    }
  }
}

TEST_CASE("lswap swaps whole single-mode superpositions blockwise") {
  // |psi>|0> with psi = (0.5, 0.5 i, 1/sqrt(2)) over photon numbers 0..2
  // becomes |0>|psi>: every M-sector swaps simultaneously.
  const HamiltonianSpec spec = design_lswap(kUnitGamma, 1.0);
  BlockwiseState in;  // xi_M sits at n = 0 of block M, i.e. on |M, 0>
  in.blocks = {{0.5}, {cdouble{0.0, 0.5}, 0.0}, {1.0 / std::sqrt(2.0), 0.0, 0.0}};

  const BlockwiseState out = evolve_blockwise(spec, in, 1.0);
  CHECK(std::abs(out.blocks[0][0] - 0.5) < 1e-10);
  CHECK(std::abs(out.blocks[1][1] - cdouble{0.0, 0.5}) < 1e-10);
  CHECK(std::abs(out.blocks[2][2] - 1.0 / std::sqrt(2.0)) < 1e-10);
  CHECK(std::abs(out.blocks[1][0]) < 1e-10);
  CHECK(std::abs(out.blocks[2][0]) < 1e-10);
  CHECK(out.norm() == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("evenswap swaps even sectors and phases odd ones") {
  const HamiltonianSpec spec = design_evenswap(kUnitGamma, 1.0);
  for (int m = 0; m <= 20; m += 2) {
    const TwoModeState out = evolve(spec, fock_state(m, 0), 1.0);
    CHECK(max_amplitude_difference(out, fock_state(m, m)) < 1e-9);
  }
  for (int m = 1; m <= 19; m += 2) {
    const TwoModeState out = evolve(spec, fock_state(m, 0), 1.0);
    CHECK(std::abs(out.amplitude(0) - kImaginary) < 1e-9);
    for (int n = 1; n <= m; ++n) {
      CHECK(std::abs(out.amplitude(n)) < 1e-9);
    }
  }
}

TEST_CASE("evolve at t=0 returns the input") {
  const TwoModeState state(2, {0.6, cdouble{0.0, 0.8}, 0.0});
  const TwoModeState out = evolve(design_evenswap(kUnitGamma, 1.0), state, 0.0);
  CHECK(max_amplitude_difference(out, state) < 1e-12);
}

TEST_CASE("pswap leaves the protected sector alone and swaps its neighbors") {
  for (int n : {1, 4, 10}) {
    const HamiltonianSpec spec = design_pswap(kUnitGamma, 1.0, n, false);

    const TwoModeState kept = evolve(spec, fock_state(n, 0), 1.0);
    CHECK(max_amplitude_difference(kept, fock_state(n, 0)) < 1e-10);

    const TwoModeState above = evolve(spec, fock_state(n + 1, 0), 1.0);
    CHECK(max_amplitude_difference(above, fock_state(n + 1, n + 1)) < 1e-9);
    if (n >= 1) {
      const TwoModeState below = evolve(spec, fock_state(n - 1, 0), 1.0);
      CHECK(max_amplitude_difference(below, fock_state(n - 1, n - 1)) < 1e-9);
    }
  }
}

TEST_CASE("pswap protects every state of the N-photon sector") {
  const int n = 3;
  const HamiltonianSpec spec = design_pswap(kUnitGamma, 1.0, n, false);
  const TwoModeState state(n, {0.5, cdouble{0.0, 0.5}, -0.5, cdouble{0.5, 0.0}});
  const TwoModeState out = evolve(spec, state, 1.0);
  CHECK(max_amplitude_difference(out, state) < 1e-10);
}

TEST_CASE("halved pswap swaps |N+-2, 0>") {
  for (int n : {2, 5}) {
    const HamiltonianSpec half = design_pswap(kUnitGamma, 1.0, n, true);

    const TwoModeState above = evolve(half, fock_state(n + 2, 0), 1.0);
    CHECK(max_amplitude_difference(above, fock_state(n + 2, n + 2)) < 1e-9);

    const TwoModeState below = evolve(half, fock_state(n - 2, 0), 1.0);
    CHECK(max_amplitude_difference(below, fock_state(n - 2, n - 2)) < 1e-9);

    const TwoModeState kept = evolve(half, fock_state(n, 0), 1.0);
    CHECK(max_amplitude_difference(kept, fock_state(n, 0)) < 1e-10);
  }
}

TEST_CASE("lswap trajectory oscillates with period 2 tau") {
  const HamiltonianSpec spec = design_lswap(kUnitGamma, 1.0);
  const std::vector<double> grid = uniform_grid(4.0, 401);  // spacing 0.01
  const auto samples = n2_trajectory(spec, fock_state(10, 0), grid);

  CHECK(samples.front().n2_expectation == doctest::Approx(0.0).epsilon(1e-12));
  // Max 10 reached at t = 1.
  CHECK(samples[100].t == doctest::Approx(1.0));
  CHECK(samples[100].n2_expectation == doctest::Approx(10.0).epsilon(1e-9));
  double peak = 0.0;
  for (const auto& s : samples) peak = std::max(peak, s.n2_expectation);
  CHECK(peak == doctest::Approx(10.0).epsilon(1e-9));

  // Period 2: sample k and sample k+200 agree.
  for (std::size_t k = 0; k + 200 < samples.size(); ++k) {
    CHECK(std::abs(samples[k].n2_expectation - samples[k + 200].n2_expectation) <
          1e-9);
  }

  // Photon conservation along the way.
  const auto with_states = n2_trajectory(spec, fock_state(10, 0), grid, true);
  for (const auto& s : with_states) {
    REQUIRE(s.state.has_value());
    const double total =
        number_expectation(*s.state, 1) + number_expectation(*s.state, 2);
    CHECK(std::abs(total - 10.0) < 1e-10);
  }
}

TEST_CASE("evenswap trajectories distinguish even from odd photon numbers") {
  const HamiltonianSpec spec = design_evenswap(kUnitGamma, 1.0);
  const std::vector<double> grid = uniform_grid(4.0, 401);

  const auto even = n2_trajectory(spec, fock_state(10, 0), grid);
  CHECK(even[100].n2_expectation == doctest::Approx(10.0).epsilon(1e-9));

  const auto odd = n2_trajectory(spec, fock_state(11, 0), grid);
  double odd_peak = 0.0;
  for (const auto& s : odd) odd_peak = std::max(odd_peak, s.n2_expectation);
  CHECK(odd_peak <= 5.5 + 1e-6);
}

TEST_CASE("evenswap trajectories from two-sided initial states") {
  const HamiltonianSpec spec = design_evenswap(kUnitGamma, 1.0);
  const std::vector<double> grid = uniform_grid(4.0, 401);

  // |8,2>: even total, so the swap completes: <n2> = 8 at t = 1.
  const auto even = n2_trajectory(spec, fock_state(10, 2), grid);
  CHECK(even[100].n2_expectation == doctest::Approx(8.0).epsilon(1e-9));
  double even_min = 1e9;
  for (const auto& s : even) even_min = std::min(even_min, s.n2_expectation);
  CHECK(even_min == doctest::Approx(2.0).epsilon(1e-6));

  // |9,2>: odd total, the nine photons of mode 1 never fully transfer.
  const auto odd = n2_trajectory(spec, fock_state(11, 2), grid);
  double odd_peak = 0.0;
  for (const auto& s : odd) odd_peak = std::max(odd_peak, s.n2_expectation);
  CHECK(odd_peak < 9.0);
}

TEST_CASE("time grids must be sane") {
  CHECK_THROWS_AS(uniform_grid(0.0, 10), std::domain_error);
  CHECK_THROWS_AS(uniform_grid(1.0, 1), std::domain_error);
  const auto grid = uniform_grid(2.0, 5);
  CHECK(grid.front() == 0.0);
  CHECK(grid.back() == 2.0);
  CHECK_THROWS_AS(n2_trajectory(design_lswap(kUnitGamma, 1.0), fock_state(2, 0),
                                {0.0, std::nan("")}),
                  std::domain_error);
}

TEST_CASE("cat generation degenerates to vacuum at alpha=0") {
  const CatResult result = cat_from_coherent(0.0, kUnitGamma, 1.0, 1e-9);
  REQUIRE(result.state.blocks.size() == 1);
  CHECK(std::abs(result.state.blocks[0][0] - 1.0) < 1e-12);
}

TEST_CASE("cat generation splits a coherent state into two cat branches") {
  const CatResult result = cat_from_coherent(2.0, kUnitGamma, 1.0, 1e-12);
  const BlockwiseState reference = cat_reference(result.truncation);
  CHECK(fidelity(result.state, reference) >= 1.0 - 1e-10);

  // Mode-2 branch |0, M> holds the even cat: odd components vanish.
  for (std::size_t m = 1; m < result.state.blocks.size(); m += 2) {
    CHECK(std::abs(result.state.blocks[m][m]) < 1e-10);
  }
  // Mode-1 branch keeps i times the odd part: check one amplitude directly.
  const cdouble expected_m1 = kImaginary * result.truncation.amplitudes[1];
  CHECK(std::abs(result.state.blocks[1][0] - expected_m1) < 1e-10);

  // Norm only misses the truncation tail.
  CHECK(result.state.norm() == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("pairwise application evolves only the chosen pair") {
  const HamiltonianSpec spec = design_evenswap(kUnitGamma, 1.0);

  const MultiModeState two = MultiModeState::fock({2, 0, 0, 0});
  const MultiModeState swapped = apply_pairwise(two, 1, 2, spec, 1.0);
  CHECK(std::abs(swapped.amplitude({0, 2, 0, 0}) - 1.0) < 1e-9);

  const MultiModeState one = MultiModeState::fock({1, 0, 0, 0});
  const MultiModeState phased = apply_pairwise(one, 1, 2, spec, 1.0);
  CHECK(std::abs(phased.amplitude({1, 0, 0, 0}) - kImaginary) < 1e-9);

  // Spectators ride along untouched: pair (1,2) of |1,0,2,0> holds one photon.
  const MultiModeState mixed = MultiModeState::fock({1, 0, 2, 0});
  const MultiModeState out = apply_pairwise(mixed, 1, 2, spec, 1.0);
  CHECK(std::abs(out.amplitude({1, 0, 2, 0}) - kImaginary) < 1e-9);
  CHECK(out.norm() == doctest::Approx(1.0).epsilon(1e-10));

  // t = 0 is the identity.
  const MultiModeState still = apply_pairwise(mixed, 1, 2, spec, 0.0);
  CHECK(std::abs(still.amplitude({1, 0, 2, 0}) - 1.0) < 1e-12);

  CHECK_THROWS_AS(apply_pairwise(mixed, 2, 2, spec, 1.0), std::domain_error);
  CHECK_THROWS_AS(apply_pairwise(mixed, 0, 2, spec, 1.0), std::domain_error);
}

TEST_CASE("sorting cascade routes M photons to mode M") {
  // Stage by stage: the even-conditioned swap leaves odd inputs in mode 1
  // with a factor i, then the two halved protected swaps move three photons
  // to mode 3 and four photons to mode 4. The factor i survives on every odd
  // branch, M=3 included.
  struct Expected {
    int input;
    MultiModeState::Occupation occupation;
    cdouble amplitude;
  };
  const std::vector<Expected> expected = {
      {1, {1, 0, 0, 0}, kImaginary},
      {2, {0, 2, 0, 0}, 1.0},
      {3, {0, 0, 3, 0}, kImaginary},
      {4, {0, 0, 0, 4}, 1.0},
  };
  for (const auto& e : expected) {
    std::vector<cdouble> input(e.input + 1, cdouble{0.0, 0.0});
    input[e.input] = 1.0;
    const MultiModeState out = sort_cascade(input, kUnitGamma, 1.0);
    CHECK(std::abs(out.amplitude(e.occupation) - e.amplitude) < 1e-9);
    CHECK(out.norm() == doctest::Approx(1.0).epsilon(1e-10));
    // Everything else is empty.
    for (const auto& [occ, amp] : out.amplitudes()) {
      if (occ != e.occupation) CHECK(std::abs(amp) < 1e-9);
    }
  }
}

TEST_CASE("sorting cascade is linear on superpositions") {
  const cdouble a{0.6, 0.0};
  const cdouble b{0.0, 0.8};
  const MultiModeState out = sort_cascade({0.0, a, b}, kUnitGamma, 1.0);
  CHECK(std::abs(out.amplitude({1, 0, 0, 0}) - a * kImaginary) < 1e-9);
  CHECK(std::abs(out.amplitude({0, 2, 0, 0}) - b) < 1e-9);
  CHECK(out.norm() == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("sorting cascade rejects bad inputs") {
  CHECK_THROWS_AS(sort_cascade({}, kUnitGamma, 1.0), std::domain_error);
  CHECK_THROWS_AS(sort_cascade({0, 0, 0, 0, 0, 1.0}, kUnitGamma, 1.0),
                  std::domain_error);
  CHECK_THROWS_AS(sort_cascade({0.5, 0.5}, kUnitGamma, 1.0), std::domain_error);
  // Trailing zeros above four photons are harmless.
  CHECK_NOTHROW(sort_cascade({1.0, 0.0, 0.0, 0.0, 0.0, 0.0}, kUnitGamma, 1.0));
}
