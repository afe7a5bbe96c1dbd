// hamiltonian.hpp
// Matrix representations of the beam-splitter coupling H0 and of nonlinear
// Hamiltonians built from monomials n^a H0^b on fixed-M subspaces, plus the
// three designed conditional-swap Hamiltonians.
//
// On a fixed-M subspace the number operator is the scalar M, so every such
// Hamiltonian shares the H0 eigenvectors and commutes with H0; the monomial
// (a, b, coeff) contributes coeff * M^a * E^b to the eigenvalue at energy E.

#pragma once

#include <optional>
#include <string>

#include "bosonic/krawtchouk.hpp"

namespace bosonic {

/// Dense complex matrix on one M-subspace, (M+1) x (M+1), row-major.
class SubspaceMatrix {
 public:
  SubspaceMatrix(int total_photons, cdouble fill = cdouble{0.0, 0.0});

  static SubspaceMatrix identity(int total_photons);

  int total_photons() const { return total_photons_; }
  int dim() const { return total_photons_ + 1; }

  cdouble& at(int row, int col) { return data_[row * dim() + col]; }
  const cdouble& at(int row, int col) const { return data_[row * dim() + col]; }

  SubspaceMatrix operator*(const SubspaceMatrix& rhs) const;
  SubspaceMatrix& operator+=(const SubspaceMatrix& rhs);
  SubspaceMatrix& operator*=(cdouble scale);

  SubspaceMatrix adjoint() const;

  /// Apply to an amplitude vector.
  std::vector<cdouble> apply(const std::vector<cdouble>& vec) const;

  /// max_ij |A_ij - B_ij|
  double max_abs_difference(const SubspaceMatrix& rhs) const;
  /// max_ij |A_ij - (A^dag)_ij|
  double hermiticity_error() const;
  double max_abs() const;

 private:
  int total_photons_;
  std::vector<cdouble> data_;
};

/// One monomial coeff * n^a * H0^b.
struct HamiltonianTerm {
  int number_power = 0;  // a
  int h0_power = 0;      // b
  double coeff = 0.0;
};

/// Symbolic Hamiltonian sum_k coeff_k n^{a_k} H0^{b_k} with its coupling.
/// Designed instances carry a label and their design parameters.
struct HamiltonianSpec {
  Coupling coupling;
  std::vector<HamiltonianTerm> terms;
  std::string label;
  double tau = 0.0;
  std::optional<int> protected_photons;  // N of the photon-protecting designs
};

/// Throws std::domain_error when the term list is empty, all-zero or not finite.
void validate(const HamiltonianSpec& spec);

/// Tridiagonal matrix of H0 = gamma a1^dag a2 + conj(gamma) a2^dag a1 in the
/// |M-n, n> basis: entry (n, n+1) is gamma sqrt((n+1)(M-n)), entry (n+1, n)
/// its conjugate, zero diagonal.
SubspaceMatrix h0_matrix(int total_photons, const Coupling& coupling);

/// sum_k coeff_k M^{a_k} (H0)^{b_k} as a dense Hermitian matrix.
SubspaceMatrix nonlinear_matrix(const HamiltonianSpec& spec, int total_photons);

/// Eigenvalue of the Hamiltonian on subspace M at lattice index x:
/// sum_k coeff_k M^{a_k} E_x^{b_k} with E_x = (2x - M)|gamma|.
double nonlinear_eigenvalue(const HamiltonianSpec& spec, int total_photons,
                            int x_index);

/// H = pi/(2|gamma| tau) (3|gamma| n + H0): swaps |M,0> -> |0,M> at t = tau
/// for every M.
HamiltonianSpec design_lswap(const Coupling& coupling, double tau);

/// H = pi/(|gamma| tau) (|gamma| n + |gamma|/4 n^2 + 1/(4|gamma|) H0^2):
/// swaps at t = tau only for even M; odd-M states pick up a global factor i.
HamiltonianSpec design_evenswap(const Coupling& coupling, double tau);

/// H = pi/(2|gamma| tau) (3|gamma| n^2 + n H0 - 3N|gamma| n - N H0): leaves
/// the N-photon sector untouched and swaps |N+-1, 0> at t = tau. The halved
/// variant (H/2) swaps |N+-2, 0> instead.
HamiltonianSpec design_pswap(const Coupling& coupling, double tau,
                             int protected_photons, bool half);

/// JSON document with keys gamma_re, gamma_im, terms[{a,b,coeff}], label,
/// tau, N. Round-trips through from_json_string.
std::string to_json_string(const HamiltonianSpec& spec);
HamiltonianSpec from_json_string(const std::string& text);

}  // namespace bosonic
