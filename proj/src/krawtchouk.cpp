#include "bosonic/krawtchouk.hpp"

#include <cmath>

namespace bosonic {

Coupling::Coupling(cdouble gamma) : gamma_(gamma) {
  if (std::abs(gamma_) <= 0.0) {
    throw std::domain_error("coupling gamma must be nonzero");
  }
}

namespace {

// Runs the recurrence upward and returns (K_{n-1}, K_n) for 1 <= n <= M,
// starting from K_0 = 1. Coefficients sqrt((n+1)(M-n)) never vanish below
// the boundary, so the upward direction is well defined. Extended precision
// keeps the accumulated error well below the 1e-10 residual budget out to
// the largest supported subspaces.
std::pair<long double, long double> recurrence_pair(int n, long double x,
                                                    int m) {
  long double prev = 0.0L;  // K_{-1}
  long double cur = 1.0L;   // K_0
  for (int k = 0; k < n; ++k) {
    const long double up = std::sqrt(static_cast<long double>(k + 1) * (m - k));
    const long double down = std::sqrt(static_cast<long double>(k) * (m - k + 1));
    const long double next = ((2.0L * x - m) * cur - down * prev) / up;
    prev = cur;
    cur = next;
  }
  return {prev, cur};
}

}  // namespace

double krawtchouk_value(int n, double x, int total_photons) {
  ensure_photon_budget(total_photons);
  const int m = total_photons;
  if (n < 0 || n > m + 1) {
    throw std::domain_error("polynomial degree out of range for this subspace");
  }
  if (n == 0) return 1.0;
  if (n <= m) return static_cast<double>(recurrence_pair(n, x, m).second);
  // Boundary residual: vanishes exactly when x is a lattice point.
  const auto [k_prev, k_last] = recurrence_pair(m, x, m);
  return static_cast<double>((2.0L * x - m) * k_last -
                             std::sqrt(static_cast<long double>(m)) * k_prev);
}

double krawtchouk_value_closed_form(int n, double x, int total_photons) {
  ensure_photon_budget(total_photons);
  const int m = total_photons;
  if (n < 0 || n > m) {
    throw std::domain_error("closed form is defined for 0 <= n <= M");
  }
  // (-1)^n sqrt(M!/(n!(M-n)!)) * sum_k (-n)_k (-x)_k / ((-M)_k k!) * 2^k
  // The sum alternates and cancels, so it runs in extended precision.
  long double term = 1.0L;
  long double sum = 1.0L;
  for (int k = 1; k <= n; ++k) {
    term *= (-n + k - 1.0L) * (-x + k - 1.0L) / ((-m + k - 1.0L) * k) * 2.0L;
    sum += term;
  }
  long double root_binom = 1.0L;
  for (int k = 0; k < n; ++k) {
    root_binom *= std::sqrt(static_cast<long double>(m - k) / (k + 1));
  }
  return static_cast<double>((n % 2 == 0 ? 1.0L : -1.0L) * root_binom * sum);
}

std::vector<double> coefficient_vector(int total_photons, int x_index) {
  ensure_photon_budget(total_photons);
  const int m = total_photons;
  if (x_index < 0 || x_index > m) {
    throw std::domain_error("lattice index out of range");
  }
  std::vector<long double> raw(m + 1);
  raw[0] = 1.0L;
  long double prev = 0.0L;
  for (int n = 0; n < m; ++n) {
    const long double up = std::sqrt(static_cast<long double>(n + 1) * (m - n));
    const long double down = std::sqrt(static_cast<long double>(n) * (m - n + 1));
    const long double next = ((2.0L * x_index - m) * raw[n] - down * prev) / up;
    prev = raw[n];
    raw[n + 1] = next;
  }
  long double norm_sq = 0.0L;
  for (long double c : raw) norm_sq += c * c;
  const long double scale = 1.0L / std::sqrt(norm_sq);
  std::vector<double> coeffs(m + 1);
  for (int n = 0; n <= m; ++n) {
    coeffs[n] = static_cast<double>(raw[n] * scale);
  }
  if (coeffs[0] < 0.0) {
    for (double& c : coeffs) c = -c;
  }
  return coeffs;
}

std::vector<double> top_eigenvector_closed_form(int total_photons) {
  ensure_photon_budget(total_photons);
  const int m = total_photons;
  std::vector<double> coeffs(m + 1);
  coeffs[0] = std::pow(2.0, -0.5 * m);
  for (int n = 0; n < m; ++n) {
    coeffs[n + 1] = coeffs[n] * std::sqrt(static_cast<double>(m - n) / (n + 1));
  }
  return coeffs;
}

EigenSystem eigensystem(int total_photons, const Coupling& coupling) {
  ensure_photon_budget(total_photons);
  const int m = total_photons;
  const double mag = coupling.magnitude();
  const double g = coupling.phase();

  EigenSystem system{total_photons, coupling, {}, {}};
  system.eigenvalues.reserve(m + 1);
  system.eigenvectors.reserve(m + 1);
  for (int x = 0; x <= m; ++x) {
    system.eigenvalues.push_back((2.0 * x - m) * mag);
    const std::vector<double> coeffs = coefficient_vector(m, x);
    std::vector<cdouble> amps(m + 1);
    for (int n = 0; n <= m; ++n) {
      amps[n] = coeffs[n] * std::exp(cdouble{0.0, -g * n});
    }
    system.eigenvectors.emplace_back(m, std::move(amps));
  }
  return system;
}

}  // namespace bosonic
