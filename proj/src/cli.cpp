#include "bosonic/cli.hpp"

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "bosonic/entanglement.hpp"
#include "bosonic/oracle.hpp"
#include "bosonic/report.hpp"

namespace bosonic::cli {

namespace {

struct OutputOptions {
  std::string format = "csv";
  std::string out_path;
};

void add_output_options(CLI::App* cmd, OutputOptions& opts) {
  cmd->add_option("--format", opts.format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}));
  cmd->add_option("--out", opts.out_path, "Write the table to this file");
}

struct GnuplotHint {
  std::string title;
  int xcol = 1;
  int ycol = 2;
  std::string xlabel;
  std::string ylabel;
};

// Tables go to --out when given, otherwise to the stream; CSV output next to
// a plot hint also gets a companion <out>.gp gnuplot script.
void emit_table(const report::Table& table, const OutputOptions& opts,
                std::ostream& out,
                const std::optional<GnuplotHint>& plot = std::nullopt,
                const nlohmann::json& json_extra = nlohmann::json::object()) {
  const auto write_out = [&](std::ostream& sink) {
    if (opts.format == "json") {
      nlohmann::json doc = json_extra;
      doc["columns"] = table.columns;
      doc["rows"] = table.rows;
      sink << doc.dump() << '\n';
    } else {
      report::write_csv(table, sink);
    }
  };
  if (opts.out_path.empty()) {
    write_out(out);
    return;
  }
  std::ofstream file(opts.out_path, std::ios::binary);
  if (!file) {
    throw std::domain_error("cannot open output file " + opts.out_path);
  }
  write_out(file);
  if (plot && opts.format == "csv") {
    std::ofstream script(opts.out_path + ".gp", std::ios::binary);
    report::write_gnuplot_script(script, opts.out_path, plot->title, plot->xcol,
                                 plot->ycol, plot->xlabel, plot->ylabel);
  }
}

Coupling make_coupling(double re, double im) { return Coupling(cdouble{re, im}); }

int lattice_index_for_energy(int total_photons, double energy,
                             double gamma_magnitude) {
  const double x_real = (energy / gamma_magnitude + total_photons) / 2.0;
  const double x_round = std::round(x_real);
  if (std::abs(x_real - x_round) > 1e-9 || x_round < 0.0 ||
      x_round > static_cast<double>(total_photons)) {
    throw std::domain_error("energy " + report::format_float(energy) +
                            " is not on the spectrum lattice of M=" +
                            std::to_string(total_photons));
  }
  return static_cast<int>(x_round);
}

// "m,n" -> |m,n>
std::pair<int, int> parse_initial(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) {
    throw std::domain_error("--initial expects a pair \"m,n\"");
  }
  try {
    const int m1 = std::stoi(text.substr(0, comma));
    const int n2 = std::stoi(text.substr(comma + 1));
    return {m1, n2};
  } catch (const std::exception&) {
    throw std::domain_error("--initial expects a pair \"m,n\"");
  }
}

// Amplitude list "re[:im],re[:im],..." for photon numbers 0,1,2,...
std::vector<cdouble> parse_amplitudes(const std::string& text) {
  std::vector<cdouble> amps;
  std::stringstream stream(text);
  std::string token;
  while (std::getline(stream, token, ',')) {
    try {
      const auto colon = token.find(':');
      if (colon == std::string::npos) {
        amps.emplace_back(std::stod(token), 0.0);
      } else {
        amps.emplace_back(std::stod(token.substr(0, colon)),
                          std::stod(token.substr(colon + 1)));
      }
    } catch (const std::exception&) {
      throw std::domain_error("--amps expects comma-separated re[:im] values");
    }
  }
  if (amps.empty()) {
    throw std::domain_error("--amps parsed to an empty amplitude list");
  }
  return amps;
}

void cmd_spectrum(int total_photons, const Coupling& coupling,
                  const OutputOptions& opts, std::ostream& out) {
  const EigenSystem system = eigensystem(total_photons, coupling);
  report::Table table;
  table.columns = {"x", "E"};
  for (int n = 0; n <= total_photons; ++n) {
    table.columns.push_back("c" + std::to_string(n));
  }
  for (int x = 0; x <= total_photons; ++x) {
    std::vector<double> row{static_cast<double>(x), system.eigenvalues[x]};
    for (double c : coefficient_vector(total_photons, x)) row.push_back(c);
    table.rows.push_back(std::move(row));
  }
  emit_table(table, opts, out);
}

void cmd_distribution(int total_photons, const std::vector<double>& energies,
                      const Coupling& coupling, const OutputOptions& opts,
                      std::ostream& out) {
  if (energies.empty()) {
    throw std::domain_error("distribution needs at least one --energy");
  }
  report::Table table;
  table.columns = {"E", "n", "probability", "peak_count"};
  for (double energy : energies) {
    const int x =
        lattice_index_for_energy(total_photons, energy, coupling.magnitude());
    const std::vector<double> coeffs = coefficient_vector(total_photons, x);
    std::vector<double> weights(coeffs.size());
    for (std::size_t n = 0; n < coeffs.size(); ++n) {
      weights[n] = coeffs[n] * coeffs[n];
    }
    const int peaks = peak_count(ProbabilityDistribution(weights));
    for (std::size_t n = 0; n < weights.size(); ++n) {
      table.rows.push_back({energy, static_cast<double>(n), weights[n],
                            static_cast<double>(peaks)});
    }
  }
  emit_table(table, opts, out,
             GnuplotHint{"photon distribution in mode 2", 2, 3, "n",
                         "|c_n|^2"});
}

void cmd_entropy(const std::string& against, int total_photons, int m_min,
                 std::optional<double> fixed_energy, const Coupling& coupling,
                 const OutputOptions& opts, std::ostream& out) {
  report::Table table;
  table.columns = {"M", "E", "s_ent"};
  if (against == "E") {
    for (const auto& r : entropy_vs_energy(total_photons, coupling.magnitude())) {
      table.rows.push_back({static_cast<double>(r.total_photons), r.energy,
                            r.entanglement_bits});
    }
    emit_table(table, opts, out,
               GnuplotHint{"entanglement against energy", 2, 3, "E", "S_ent"});
    return;
  }
  const EntropyVsPhotonNumber result = entropy_vs_photon_number(
      fixed_energy, m_min, total_photons, coupling.magnitude());
  for (const auto& r : result.reports) {
    table.rows.push_back({static_cast<double>(r.total_photons), r.energy,
                          r.entanglement_bits});
  }
  for (int skipped : result.skipped_photon_numbers) {
    out << "skipped M=" << skipped << " (energy off the spectrum lattice)\n";
  }
  emit_table(table, opts, out,
             GnuplotHint{"entanglement against photon number", 1, 3, "M",
                         "S_ent"});
}

HamiltonianSpec build_design(const std::string& design, const Coupling& coupling,
                             double tau, int protected_photons, bool half) {
  if (design == "lswap") return design_lswap(coupling, tau);
  if (design == "evenswap") return design_evenswap(coupling, tau);
  if (design == "pswap") {
    return design_pswap(coupling, tau, protected_photons, half);
  }
  throw std::domain_error("unknown design '" + design + "'");
}

void cmd_evolve(const HamiltonianSpec& spec, const TwoModeState& initial,
                double t_max, int samples, const OutputOptions& opts,
                std::ostream& out) {
  const std::vector<double> grid = uniform_grid(t_max, samples);
  const bool with_snapshots = opts.format == "json";
  const std::vector<TrajectorySample> trajectory =
      n2_trajectory(spec, initial, grid, with_snapshots);

  report::Table table;
  table.columns = {"t", "n2_expectation"};
  nlohmann::json states = nlohmann::json::array();
  for (const auto& sample : trajectory) {
    table.rows.push_back({sample.t, sample.n2_expectation});
    if (sample.state) {
      nlohmann::json amps = nlohmann::json::array();
      for (const auto& a : sample.state->amplitudes()) {
        amps.push_back({a.real(), a.imag()});
      }
      states.push_back(std::move(amps));
    }
  }
  nlohmann::json extra = nlohmann::json::object();
  if (with_snapshots) extra["states"] = std::move(states);
  emit_table(table, opts, out,
             GnuplotHint{"mode-2 photon number", 1, 2, "t", "<n2>"}, extra);
}

void cmd_cat(cdouble alpha, const Coupling& coupling, double tau, double epsilon,
             const OutputOptions& opts, std::ostream& out) {
  const CatResult result = cat_from_coherent(alpha, coupling, tau, epsilon);
  const BlockwiseState reference = cat_reference(result.truncation);
  const double fid = fidelity(result.state, reference);

  // Largest odd-photon component of the mode-2 branch |0, M>.
  double max_odd = 0.0;
  for (std::size_t m = 1; m < result.state.blocks.size(); m += 2) {
    max_odd = std::max(max_odd, std::abs(result.state.blocks[m][m]));
  }

  out << "cutoff=" << result.truncation.cutoff
      << " discarded_weight=" << report::format_float(result.truncation.discarded_weight)
      << " fidelity=" << report::format_float(fid)
      << " mode2_max_odd_component=" << report::format_float(max_odd) << '\n';

  report::Table table;
  table.columns = {"M", "n", "re", "im"};
  for (std::size_t m = 0; m < result.state.blocks.size(); ++m) {
    for (std::size_t n = 0; n < result.state.blocks[m].size(); ++n) {
      const cdouble a = result.state.blocks[m][n];
      table.rows.push_back({static_cast<double>(m), static_cast<double>(n),
                            a.real(), a.imag()});
    }
  }
  nlohmann::json extra;
  extra["fidelity"] = fid;
  extra["cutoff"] = result.truncation.cutoff;
  extra["discarded_weight"] = result.truncation.discarded_weight;
  extra["mode2_max_odd_component"] = max_odd;
  emit_table(table, opts, out, std::nullopt, extra);
}

void cmd_sort(const std::vector<cdouble>& input, const Coupling& coupling,
              double tau, const OutputOptions& opts, std::ostream& out) {
  const MultiModeState result = sort_cascade(input, coupling, tau);
  report::Table table;
  table.columns = {"n1", "n2", "n3", "n4", "re", "im"};
  for (const auto& [occ, amp] : result.amplitudes()) {
    if (std::abs(amp) < 1e-14) continue;
    table.rows.push_back({static_cast<double>(occ[0]), static_cast<double>(occ[1]),
                          static_cast<double>(occ[2]), static_cast<double>(occ[3]),
                          amp.real(), amp.imag()});
  }
  emit_table(table, opts, out);
}

}  // namespace

bool run_verification(int max_total_photons, bool inject_perturbation,
                      std::ostream& out) {
  const Coupling gamma(cdouble{1.0, 0.0});
  bool all_passed = true;
  const auto check = [&](const std::string& name, double worst, double bound) {
    const bool ok = worst < bound;
    all_passed = all_passed && ok;
    out << (ok ? "[PASS] " : "[FAIL] ") << name << " (max "
        << report::format_float(worst) << ", bound "
        << report::format_float(bound) << ")\n";
  };

  double worst_eigenvalue = 0.0;
  double worst_eigenvector = 0.0;
  double worst_distribution = 0.0;
  double worst_residual = 0.0;
  for (int m = 0; m <= max_total_photons; ++m) {
    const EigenSystem analytic = eigensystem(m, gamma);
    DenseEigenResult dense = dense_hermitian_eig(h0_matrix(m, gamma));
    if (inject_perturbation && !dense.eigenvalues.empty()) {
      dense.eigenvalues[0] += 1e-6;
    }
    const SpectraComparison cmp = compare_spectra(dense, analytic);
    worst_eigenvalue = std::max(worst_eigenvalue, cmp.max_eigenvalue_gap);
    worst_eigenvector = std::max(worst_eigenvector, cmp.max_eigenvector_gap);

    for (int x = 0; x <= m; ++x) {
      const std::vector<double> coeffs = coefficient_vector(m, x);
      for (int n = 0; n <= m; ++n) {
        const double dense_prob = std::norm(dense.eigenvectors.at(n, x));
        worst_distribution = std::max(
            worst_distribution, std::abs(dense_prob - coeffs[n] * coeffs[n]));
        // Three-term recurrence residual of the normalized coefficients.
        const double up = n < m ? std::sqrt((n + 1.0) * (m - n)) * coeffs[n + 1] : 0.0;
        const double down = n > 0 ? std::sqrt(n * (m - n + 1.0)) * coeffs[n - 1] : 0.0;
        worst_residual = std::max(
            worst_residual, std::abs((2.0 * x - m) * coeffs[n] - up - down));
      }
    }
  }
  check("eigenvalues: analytic lattice vs dense solver", worst_eigenvalue, 1e-9);
  check("eigenvectors: analytic vs dense, phase aligned", worst_eigenvector, 1e-8);
  check("photon distributions: analytic vs dense", worst_distribution, 1e-8);
  check("three-term recurrence residual", worst_residual, 1e-10);

  double worst_unitarity = 0.0;
  double worst_propagator = 0.0;
  const int m_prop = std::min(max_total_photons, 20);
  for (int m = 0; m <= m_prop; ++m) {
    const std::vector<HamiltonianSpec> designs = {
        design_lswap(gamma, 1.0), design_evenswap(gamma, 1.0),
        design_pswap(gamma, 1.0, 1, false)};
    for (const auto& spec : designs) {
      for (double t : {0.37, 1.0}) {
        const Propagator u = propagator(spec, m, t);
        worst_unitarity = std::max(worst_unitarity, u.unitarity_error());
        const SubspaceMatrix u_dense =
            dense_propagator(nonlinear_matrix(spec, m), t);
        worst_propagator =
            std::max(worst_propagator, u.matrix.max_abs_difference(u_dense));
      }
    }
  }
  check("propagator unitarity", worst_unitarity, 1e-10);
  check("propagators: spectral vs dense matrix exponential", worst_propagator,
        1e-8);

  out << (all_passed ? "verification passed" : "verification FAILED") << '\n';
  return all_passed;
}

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Exact two-mode bosonic simulator: beam-splitter spectra, "
               "designed conditional swaps, cat states and photon sorting"};
  app.require_subcommand(0, 1);

  double gamma_re = 1.0;
  double gamma_im = 0.0;
  double tau = 1.0;
  app.add_option("--gamma-re", gamma_re, "Coupling, real part")->capture_default_str();
  app.add_option("--gamma-im", gamma_im, "Coupling, imaginary part")->capture_default_str();
  app.add_option("--tau", tau, "Design time of the swap Hamiltonians")->capture_default_str();

  bool top_level_verify = false;
  int verify_m_max = 40;
  bool inject_perturbation = false;
  app.add_flag("--verify", top_level_verify,
               "Run the oracle cross-check suite and exit");

  OutputOptions spectrum_opts;
  int spectrum_m = 0;
  auto* spectrum = app.add_subcommand("spectrum", "Eigenvalues and coefficient vectors");
  spectrum->add_option("--M", spectrum_m, "Total photon number")->required();
  add_output_options(spectrum, spectrum_opts);

  OutputOptions dist_opts;
  int dist_m = 0;
  std::vector<double> dist_energies;
  auto* distribution =
      app.add_subcommand("distribution", "Photon probability distributions");
  distribution->add_option("--M", dist_m, "Total photon number")->required();
  distribution->add_option("--energy", dist_energies,
                           "Eigenvalue to plot (repeatable)");
  add_output_options(distribution, dist_opts);

  OutputOptions entropy_opts;
  std::string entropy_against = "E";
  int entropy_m = 0;
  int entropy_m_min = 1;
  double entropy_energy = 0.0;
  auto* entropy = app.add_subcommand("entropy", "Eigenstate entanglement tables");
  entropy->add_option("--against", entropy_against, "Sweep variable: E or M")
      ->check(CLI::IsMember({"E", "M"}));
  entropy->add_option("--M", entropy_m, "Subspace (vs E) or largest M (vs M)")
      ->required();
  entropy->add_option("--M-min", entropy_m_min, "Smallest M of the vs-M sweep")
      ->capture_default_str();
  auto* entropy_energy_opt = entropy->add_option(
      "--energy", entropy_energy, "Fix this energy in the vs-M sweep");
  add_output_options(entropy, entropy_opts);

  OutputOptions evolve_opts;
  std::string evolve_design;
  std::string evolve_spec_json;
  std::string evolve_emit_spec;
  std::string evolve_initial;
  int evolve_m = -1;
  int evolve_n = 1;
  bool evolve_half = false;
  double t_max = -1.0;
  int samples = 400;
  auto* evolve_cmd = app.add_subcommand("evolve", "Mode-2 photon number trajectory");
  evolve_cmd->add_option("design", evolve_design,
                         "Hamiltonian design: lswap, evenswap or pswap");
  evolve_cmd->add_option("--spec-json", evolve_spec_json,
                         "Load the Hamiltonian from a JSON file instead");
  evolve_cmd->add_option("--emit-spec", evolve_emit_spec,
                         "Also write the Hamiltonian JSON here");
  evolve_cmd->add_option("--M", evolve_m, "Start from |M, 0>");
  evolve_cmd->add_option("--initial", evolve_initial, "Start from |m, n>");
  evolve_cmd->add_option("--N", evolve_n, "Protected photon number of pswap")
      ->capture_default_str();
  evolve_cmd->add_flag("--half", evolve_half, "Use the halved pswap variant");
  evolve_cmd->add_option("--t-max", t_max, "End of the time grid (default 4 tau)");
  evolve_cmd->add_option("--samples", samples, "Number of grid points")
      ->capture_default_str();
  add_output_options(evolve_cmd, evolve_opts);

  OutputOptions cat_opts;
  double alpha_re = 2.0;
  double alpha_im = 0.0;
  double epsilon = 1e-12;
  auto* cat = app.add_subcommand("cat", "Split a coherent state into two cat states");
  cat->add_option("--alpha-re", alpha_re, "Coherent amplitude, real part")
      ->capture_default_str();
  cat->add_option("--alpha-im", alpha_im, "Coherent amplitude, imaginary part")
      ->capture_default_str();
  cat->add_option("--epsilon", epsilon, "Coherent truncation tail bound")
      ->capture_default_str();
  add_output_options(cat, cat_opts);

  OutputOptions sort_opts;
  int sort_m = -1;
  std::string sort_amps;
  auto* sort_cmd = app.add_subcommand("sort", "Four-mode photon-sorting cascade");
  sort_cmd->add_option("--M", sort_m, "Sort the Fock input |M>, M in 0..4");
  sort_cmd->add_option("--amps", sort_amps,
                       "Input amplitudes re[:im],... for photon numbers 0,1,...");
  add_output_options(sort_cmd, sort_opts);

  auto* verify = app.add_subcommand("verify", "Cross-check the analytic solver "
                                              "against the dense eigensolver");
  verify->add_option("--M", verify_m_max, "Largest total photon number checked")
      ->capture_default_str();
  verify->add_flag("--inject-perturbation", inject_perturbation,
                   "Negative control: corrupt one dense eigenvalue");

  std::vector<const char*> argv;
  argv.push_back("bosonic");
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  try {
    const Coupling coupling = make_coupling(gamma_re, gamma_im);
    if (top_level_verify && !verify->parsed()) {
      return run_verification(verify_m_max, false, out) ? 0 : 2;
    }
    if (spectrum->parsed()) {
      cmd_spectrum(spectrum_m, coupling, spectrum_opts, out);
    } else if (distribution->parsed()) {
      cmd_distribution(dist_m, dist_energies, coupling, dist_opts, out);
    } else if (entropy->parsed()) {
      std::optional<double> fixed;
      if (entropy_energy_opt->count() > 0) fixed = entropy_energy;
      cmd_entropy(entropy_against, entropy_m, entropy_m_min, fixed, coupling,
                  entropy_opts, out);
    } else if (evolve_cmd->parsed()) {
      HamiltonianSpec spec =
          !evolve_spec_json.empty()
              ? [&] {
                  std::ifstream in(evolve_spec_json);
                  if (!in) {
                    throw std::domain_error("cannot read " + evolve_spec_json);
                  }
                  std::stringstream buffer;
                  buffer << in.rdbuf();
                  return from_json_string(buffer.str());
                }()
              : build_design(evolve_design, coupling, tau, evolve_n, evolve_half);
      if (!evolve_emit_spec.empty()) {
        std::ofstream spec_out(evolve_emit_spec, std::ios::binary);
        spec_out << to_json_string(spec) << '\n';
      }
      int m1 = evolve_m;
      int n2 = 0;
      if (!evolve_initial.empty()) {
        std::tie(m1, n2) = parse_initial(evolve_initial);
      } else if (evolve_m < 0) {
        throw std::domain_error("evolve needs --M or --initial");
      }
      const TwoModeState initial = fock_state(m1 + n2, n2);
      const double horizon = t_max > 0.0 ? t_max : 4.0 * (spec.tau > 0.0 ? spec.tau : tau);
      cmd_evolve(spec, initial, horizon, samples, evolve_opts, out);
    } else if (cat->parsed()) {
      cmd_cat(cdouble{alpha_re, alpha_im}, coupling, tau, epsilon, cat_opts, out);
    } else if (sort_cmd->parsed()) {
      std::vector<cdouble> input;
      if (!sort_amps.empty()) {
        input = parse_amplitudes(sort_amps);
      } else if (sort_m >= 0) {
        input.assign(sort_m + 1, cdouble{0.0, 0.0});
        input[sort_m] = 1.0;
      } else {
        throw std::domain_error("sort needs --M or --amps");
      }
      cmd_sort(input, coupling, tau, sort_opts, out);
    } else if (verify->parsed()) {
      return run_verification(verify_m_max, inject_perturbation, out) ? 0 : 2;
    } else {
      err << app.help();
      return 1;
    }
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

}  // namespace bosonic::cli
