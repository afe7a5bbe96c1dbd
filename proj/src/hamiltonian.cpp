#include "bosonic/hamiltonian.hpp"

#include <cmath>
#include <numbers>

#include "json.hpp"

namespace bosonic {

SubspaceMatrix::SubspaceMatrix(int total_photons, cdouble fill)
    : total_photons_(total_photons),
      data_(static_cast<std::size_t>(total_photons + 1) * (total_photons + 1),
            fill) {
  ensure_photon_budget(total_photons);
}

SubspaceMatrix SubspaceMatrix::identity(int total_photons) {
  SubspaceMatrix m(total_photons);
  for (int i = 0; i < m.dim(); ++i) m.at(i, i) = 1.0;
  return m;
}

SubspaceMatrix SubspaceMatrix::operator*(const SubspaceMatrix& rhs) const {
  if (rhs.total_photons_ != total_photons_) {
    throw std::domain_error("matrix dimensions do not match");
  }
  const int d = dim();
  SubspaceMatrix out(total_photons_);
  for (int i = 0; i < d; ++i) {
    for (int k = 0; k < d; ++k) {
      const cdouble aik = at(i, k);
      if (aik == cdouble{0.0, 0.0}) continue;
      for (int j = 0; j < d; ++j) {
        out.at(i, j) += aik * rhs.at(k, j);
      }
    }
  }
  return out;
}

SubspaceMatrix& SubspaceMatrix::operator+=(const SubspaceMatrix& rhs) {
  if (rhs.total_photons_ != total_photons_) {
    throw std::domain_error("matrix dimensions do not match");
  }
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += rhs.data_[i];
  return *this;
}

SubspaceMatrix& SubspaceMatrix::operator*=(cdouble scale) {
  for (auto& v : data_) v *= scale;
  return *this;
}

SubspaceMatrix SubspaceMatrix::adjoint() const {
  const int d = dim();
  SubspaceMatrix out(total_photons_);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      out.at(j, i) = std::conj(at(i, j));
    }
  }
  return out;
}

std::vector<cdouble> SubspaceMatrix::apply(
    const std::vector<cdouble>& vec) const {
  const int d = dim();
  if (static_cast<int>(vec.size()) != d) {
    throw std::domain_error("vector length does not match matrix dimension");
  }
  std::vector<cdouble> out(d, cdouble{0.0, 0.0});
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      out[i] += at(i, j) * vec[j];
    }
  }
  return out;
}

double SubspaceMatrix::max_abs_difference(const SubspaceMatrix& rhs) const {
  if (rhs.total_photons_ != total_photons_) {
    throw std::domain_error("matrix dimensions do not match");
  }
  double worst = 0.0;
  for (std::size_t i = 0; i < data_.size(); ++i) {
    worst = std::max(worst, std::abs(data_[i] - rhs.data_[i]));
  }
  return worst;
}

double SubspaceMatrix::hermiticity_error() const {
  return max_abs_difference(adjoint());
}

double SubspaceMatrix::max_abs() const {
  double worst = 0.0;
  for (const auto& v : data_) worst = std::max(worst, std::abs(v));
  return worst;
}

void validate(const HamiltonianSpec& spec) {
  if (spec.terms.empty()) {
    throw std::domain_error("Hamiltonian has no terms");
  }
  bool any_nonzero = false;
  for (const auto& term : spec.terms) {
    if (term.number_power < 0 || term.h0_power < 0) {
      throw std::domain_error("monomial powers must be nonnegative");
    }
    if (!std::isfinite(term.coeff)) {
      throw std::domain_error("Hamiltonian coefficient is not finite");
    }
    if (term.coeff != 0.0) any_nonzero = true;
  }
  if (!any_nonzero) {
    throw std::domain_error("Hamiltonian has only zero terms");
  }
}

SubspaceMatrix h0_matrix(int total_photons, const Coupling& coupling) {
  ensure_photon_budget(total_photons);
  const int m = total_photons;
  SubspaceMatrix h(m);
  const cdouble gamma = coupling.value();
  for (int n = 0; n < m; ++n) {
    const double w = std::sqrt(static_cast<double>(n + 1) * (m - n));
    h.at(n, n + 1) = gamma * w;
    h.at(n + 1, n) = std::conj(gamma) * w;
  }
  return h;
}

SubspaceMatrix nonlinear_matrix(const HamiltonianSpec& spec,
                                int total_photons) {
  validate(spec);
  ensure_photon_budget(total_photons);
  const SubspaceMatrix h0 = h0_matrix(total_photons, spec.coupling);

  // Cache H0^b up to the largest power that occurs.
  int max_power = 0;
  for (const auto& term : spec.terms) max_power = std::max(max_power, term.h0_power);
  std::vector<SubspaceMatrix> h0_powers;
  h0_powers.push_back(SubspaceMatrix::identity(total_photons));
  for (int b = 1; b <= max_power; ++b) h0_powers.push_back(h0_powers.back() * h0);

  SubspaceMatrix result(total_photons);
  for (const auto& term : spec.terms) {
    SubspaceMatrix part = h0_powers[term.h0_power];
    part *= term.coeff * std::pow(static_cast<double>(total_photons),
                                  static_cast<double>(term.number_power));
    result += part;
  }
  return result;
}

double nonlinear_eigenvalue(const HamiltonianSpec& spec, int total_photons,
                            int x_index) {
  validate(spec);
  ensure_photon_budget(total_photons);
  if (x_index < 0 || x_index > total_photons) {
    throw std::domain_error("lattice index out of range");
  }
  const double energy =
      (2.0 * x_index - total_photons) * spec.coupling.magnitude();
  double value = 0.0;
  for (const auto& term : spec.terms) {
    value += term.coeff *
             std::pow(static_cast<double>(total_photons),
                      static_cast<double>(term.number_power)) *
             std::pow(energy, static_cast<double>(term.h0_power));
  }
  return value;
}

namespace {

double require_positive_tau(double tau) {
  if (!(tau > 0.0) || !std::isfinite(tau)) {
    throw std::domain_error("design time tau must be positive");
  }
  return tau;
}

}  // namespace

HamiltonianSpec design_lswap(const Coupling& coupling, double tau) {
  require_positive_tau(tau);
  const double pi = std::numbers::pi;
  const double mag = coupling.magnitude();
  HamiltonianSpec spec{coupling,
                       {{1, 0, 3.0 * pi / (2.0 * tau)},
                        {0, 1, pi / (2.0 * mag * tau)}},
                       "lswap",
                       tau,
                       std::nullopt};
  return spec;
}

HamiltonianSpec design_evenswap(const Coupling& coupling, double tau) {
  require_positive_tau(tau);
  const double pi = std::numbers::pi;
  const double mag = coupling.magnitude();
  HamiltonianSpec spec{coupling,
                       {{1, 0, pi / tau},
                        {2, 0, pi / (4.0 * tau)},
                        {0, 2, pi / (4.0 * mag * mag * tau)}},
                       "evenswap",
                       tau,
                       std::nullopt};
  return spec;
}

HamiltonianSpec design_pswap(const Coupling& coupling, double tau,
                             int protected_photons, bool half) {
  require_positive_tau(tau);
  if (protected_photons < 0) {
    throw std::domain_error("protected photon number must be nonnegative");
  }
  const double pi = std::numbers::pi;
  const double mag = coupling.magnitude();
  const double n = protected_photons;
  const double scale = half ? 0.5 : 1.0;
  const double base = scale * pi / (2.0 * tau);
  HamiltonianSpec spec{coupling,
                       {{2, 0, 3.0 * base},
                        {1, 1, base / mag},
                        {1, 0, -3.0 * n * base},
                        {0, 1, -n * base / mag}},
                       half ? "pswap/2" : "pswap",
                       tau,
                       protected_photons};
  return spec;
}

std::string to_json_string(const HamiltonianSpec& spec) {
  nlohmann::json doc;
  doc["gamma_re"] = spec.coupling.value().real();
  doc["gamma_im"] = spec.coupling.value().imag();
  doc["terms"] = nlohmann::json::array();
  for (const auto& term : spec.terms) {
    doc["terms"].push_back(
        {{"a", term.number_power}, {"b", term.h0_power}, {"coeff", term.coeff}});
  }
  doc["label"] = spec.label;
  doc["tau"] = spec.tau;
  if (spec.protected_photons) {
    doc["N"] = *spec.protected_photons;
  }
  return doc.dump();
}

HamiltonianSpec from_json_string(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw std::domain_error(std::string("malformed Hamiltonian JSON: ") +
                            e.what());
  }
  try {
    const Coupling coupling(
        cdouble{doc.at("gamma_re").get<double>(), doc.at("gamma_im").get<double>()});
    HamiltonianSpec spec{coupling, {}, doc.value("label", ""), doc.value("tau", 0.0),
                         std::nullopt};
    for (const auto& term : doc.at("terms")) {
      spec.terms.push_back({term.at("a").get<int>(), term.at("b").get<int>(),
                            term.at("coeff").get<double>()});
    }
    if (doc.contains("N")) {
      spec.protected_photons = doc.at("N").get<int>();
    }
    validate(spec);
    return spec;
  } catch (const nlohmann::json::exception& e) {
    throw std::domain_error(std::string("malformed Hamiltonian JSON: ") +
                            e.what());
  }
}

}  // namespace bosonic
