// krawtchouk.hpp
// Spectral solver for the two-mode beam-splitter coupling
//
//   H0 = gamma a1^dag a2 + conj(gamma) a2^dag a1
//
// restricted to the subspace with M total photons. The Fock-basis expansion
// coefficients of the eigenvectors satisfy the symmetric Krawtchouk
// three-term recurrence at p = 1/2,
//
//   (E/|gamma|) c_n = sqrt((n+1)(M-n)) c_{n+1} + sqrt(n(M-n+1)) c_{n-1},
//
// whose lattice x = (E/|gamma| + M)/2 runs over 0..M. Eigenvalues are exact,
// E_x = (2x - M)|gamma|; eigenvectors are Krawtchouk coefficient vectors with
// the mode-2 phase twist exp(-i n g), g = arg(gamma).

#pragma once

#include "bosonic/fock.hpp"

namespace bosonic {

/// Beam-splitter coupling strength gamma = |gamma| e^{ig}, |gamma| > 0.
class Coupling {
 public:
  explicit Coupling(cdouble gamma);

  cdouble value() const { return gamma_; }
  double magnitude() const { return std::abs(gamma_); }
  double phase() const { return std::arg(gamma_); }

 private:
  cdouble gamma_;
};

/// K_n(x; 1/2, M) by upward recurrence in n, normalized so K_0 = 1.
///
/// n = M+1 is the boundary case: the returned value is the recurrence
/// residual (2x - M) K_M - sqrt(M) K_{M-1}, a degree-(M+1) polynomial whose
/// roots are exactly the lattice points x = 0..M. n beyond M+1 has no meaning
/// on the subspace and throws.
double krawtchouk_value(int n, double x, int total_photons);

/// Closed-form evaluation of K_n(x; 1/2, M) through the terminating
/// hypergeometric sum with Pochhammer running products. Alternating terms
/// lose precision as M grows; kept as an independent cross-check for small M,
/// not used by the solver.
double krawtchouk_value_closed_form(int n, double x, int total_photons);

/// Normalized eigenvector coefficients c_n for the eigenvalue with lattice
/// index x: sum c_n^2 = 1 and c_0 > 0. Real, coupling-phase free.
std::vector<double> coefficient_vector(int total_photons, int x_index);

/// Coefficients of the top eigenvector E = M|gamma| in closed form:
/// c_n = 2^{-M/2} sqrt(binomial(M, n)).
std::vector<double> top_eigenvector_closed_form(int total_photons);

/// Complete analytic eigensystem of H0 on one M-subspace.
/// eigenvalues[x] = (2x - M)|gamma|, ascending by construction;
/// eigenvectors[x] has amplitudes c_n(E_x) exp(-i n g).
struct EigenSystem {
  int total_photons;
  Coupling coupling;
  std::vector<double> eigenvalues;
  std::vector<TwoModeState> eigenvectors;
};

EigenSystem eigensystem(int total_photons, const Coupling& coupling);

}  // namespace bosonic
