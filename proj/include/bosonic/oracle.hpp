// oracle.hpp
// Independent brute-force validation path: a self-contained cyclic Jacobi
// eigensolver for complex Hermitian matrices, used in tests and in the CLI
// verify mode to cross-check the analytic Krawtchouk solver. Shares no code
// with the recurrence path.

#pragma once

#include "bosonic/evolution.hpp"

namespace bosonic {

struct DenseEigenResult {
  std::vector<double> eigenvalues;  // ascending
  SubspaceMatrix eigenvectors;      // orthonormal columns, column x <-> eigenvalue x
};

/// Full eigendecomposition by cyclic Jacobi rotations. Input must be
/// Hermitian within 1e-12 relative to its largest entry.
DenseEigenResult dense_hermitian_eig(const SubspaceMatrix& matrix);

struct SpectraComparison {
  double max_eigenvalue_gap = 0.0;
  double max_eigenvector_gap = 0.0;
};

/// Eigenvalues compared sorted; eigenvectors compared after aligning each
/// pair by the global phase that makes its largest-magnitude component real
/// and positive.
SpectraComparison compare_spectra(const DenseEigenResult& dense,
                                  const EigenSystem& analytic);

/// exp(-iHt) assembled from the dense eigendecomposition. Degeneracy-safe
/// (works on the spectral projectors summed over columns).
SubspaceMatrix dense_propagator(const SubspaceMatrix& hamiltonian, double t);

}  // namespace bosonic
