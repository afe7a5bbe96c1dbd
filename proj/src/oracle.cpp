#include "bosonic/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace bosonic {

namespace {

double off_diagonal_norm(const SubspaceMatrix& a) {
  double s = 0.0;
  for (int i = 0; i < a.dim(); ++i) {
    for (int j = 0; j < a.dim(); ++j) {
      if (i != j) s += std::norm(a.at(i, j));
    }
  }
  return std::sqrt(s);
}

}  // namespace

DenseEigenResult dense_hermitian_eig(const SubspaceMatrix& matrix) {
  const double scale = std::max(1.0, matrix.max_abs());
  if (matrix.hermiticity_error() > 1e-12 * scale) {
    throw std::domain_error("matrix is not Hermitian");
  }

  const int d = matrix.dim();
  SubspaceMatrix a = matrix;
  SubspaceMatrix v = SubspaceMatrix::identity(matrix.total_photons());

  // Cyclic sweeps of 2x2 unitary rotations annihilating a(p,q). The pivot
  // angle solves r t^2 - (a_qq - a_pp) t - r = 0 with r = |a_pq|; the smaller
  // root keeps the rotation well conditioned.
  const double tolerance = 1e-15 * scale * d;
  const int max_sweeps = 64;
  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    if (off_diagonal_norm(a) <= tolerance) break;
    for (int p = 0; p < d - 1; ++p) {
      for (int q = p + 1; q < d; ++q) {
        const cdouble apq = a.at(p, q);
        const double r = std::abs(apq);
        if (r <= 1e-300) continue;
        const cdouble phase = apq / r;
        const double app = a.at(p, p).real();
        const double aqq = a.at(q, q).real();
        const double tau = (aqq - app) / (2.0 * r);
        const double t = tau >= 0.0 ? -1.0 / (tau + std::sqrt(1.0 + tau * tau))
                                    : 1.0 / (-tau + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;

        // Columns p and q of A and V: right-multiply by the rotation
        //   J = [[c, -s e^{i phi}], [s e^{-i phi}, c]].
        for (int k = 0; k < d; ++k) {
          const cdouble akp = a.at(k, p);
          const cdouble akq = a.at(k, q);
          a.at(k, p) = akp * c + akq * s * std::conj(phase);
          a.at(k, q) = -akp * s * phase + akq * c;

          const cdouble vkp = v.at(k, p);
          const cdouble vkq = v.at(k, q);
          v.at(k, p) = vkp * c + vkq * s * std::conj(phase);
          v.at(k, q) = -vkp * s * phase + vkq * c;
        }
        // Rows p and q of A: left-multiply by J^dag.
        for (int k = 0; k < d; ++k) {
          const cdouble apk = a.at(p, k);
          const cdouble aqk = a.at(q, k);
          a.at(p, k) = apk * c + aqk * s * phase;
          a.at(q, k) = -apk * s * std::conj(phase) + aqk * c;
        }
        a.at(p, q) = 0.0;
        a.at(q, p) = 0.0;
        a.at(p, p) = cdouble{a.at(p, p).real(), 0.0};
        a.at(q, q) = cdouble{a.at(q, q).real(), 0.0};
      }
    }
  }

  std::vector<int> order(d);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&a](int lhs, int rhs) {
    return a.at(lhs, lhs).real() < a.at(rhs, rhs).real();
  });

  DenseEigenResult result{std::vector<double>(d),
                          SubspaceMatrix(matrix.total_photons())};
  for (int x = 0; x < d; ++x) {
    result.eigenvalues[x] = a.at(order[x], order[x]).real();
    for (int k = 0; k < d; ++k) {
      result.eigenvectors.at(k, x) = v.at(k, order[x]);
    }
  }
  return result;
}

namespace {

cdouble phase_making_positive(cdouble component) {
  const double a = std::abs(component);
  return a > 0.0 ? a / component : cdouble{1.0, 0.0};
}

}  // namespace

SpectraComparison compare_spectra(const DenseEigenResult& dense,
                                  const EigenSystem& analytic) {
  const int d = dense.eigenvectors.dim();
  if (d != analytic.total_photons + 1) {
    throw std::domain_error("eigensystem dimensions do not match");
  }
  SpectraComparison report;
  for (int x = 0; x < d; ++x) {
    report.max_eigenvalue_gap =
        std::max(report.max_eigenvalue_gap,
                 std::abs(dense.eigenvalues[x] - analytic.eigenvalues[x]));

    std::vector<cdouble> dense_vec(d);
    for (int k = 0; k < d; ++k) dense_vec[k] = dense.eigenvectors.at(k, x);
    const std::vector<cdouble>& analytic_vec =
        analytic.eigenvectors[x].amplitudes();

    // Mirror symmetry produces exact magnitude ties, so both vectors are
    // aligned at the same component: the largest of the analytic one.
    int ref = 0;
    double best = -1.0;
    for (int k = 0; k < d; ++k) {
      const double a = std::abs(analytic_vec[k]);
      if (a > best) {
        best = a;
        ref = k;
      }
    }
    const cdouble pd = phase_making_positive(dense_vec[ref]);
    const cdouble pa = phase_making_positive(analytic_vec[ref]);
    double diff_sq = 0.0;
    for (int k = 0; k < d; ++k) {
      diff_sq += std::norm(pd * dense_vec[k] - pa * analytic_vec[k]);
    }
    report.max_eigenvector_gap =
        std::max(report.max_eigenvector_gap, std::sqrt(diff_sq));
  }
  return report;
}

SubspaceMatrix dense_propagator(const SubspaceMatrix& hamiltonian, double t) {
  const DenseEigenResult eig = dense_hermitian_eig(hamiltonian);
  const int d = hamiltonian.dim();
  SubspaceMatrix u(hamiltonian.total_photons());
  for (int x = 0; x < d; ++x) {
    const cdouble phase = std::exp(cdouble{0.0, -eig.eigenvalues[x] * t});
    for (int i = 0; i < d; ++i) {
      const cdouble left = phase * eig.eigenvectors.at(i, x);
      for (int j = 0; j < d; ++j) {
        u.at(i, j) += left * std::conj(eig.eigenvectors.at(j, x));
      }
    }
  }
  return u;
}

}  // namespace bosonic
