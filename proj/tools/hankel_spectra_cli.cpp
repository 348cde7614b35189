// Command line front end for the spectral-map library.
//
// Exit codes: 0 success, 1 tolerance exceeded (check verbs), 2 parse/input
// errors, 3 numerical degeneracy.

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hankel_spectra/discretize.hpp"
#include "hankel_spectra/errors.hpp"
#include "hankel_spectra/lyapunov.hpp"
#include "hankel_spectra/measure.hpp"
#include "hankel_spectra/measure_io.hpp"
#include "hankel_spectra/reference.hpp"
#include "hankel_spectra/spectral_map.hpp"

namespace hs = hankel_spectra;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitTolerance = 1;
constexpr int kExitParse = 2;
constexpr int kExitDegenerate = 3;

struct DiscretizeFlags {
  int nodes = 400;
  double truncate_lo = 0.0;  // 0 = use default
  double truncate_hi = 0.0;
  int panels = 0;
  bool single_panel = false;

  void attach(CLI::App* cmd) {
    cmd->add_option("--nodes", nodes, "quadrature nodes for density inputs");
    cmd->add_option("--truncate-lo", truncate_lo, "truncation lower bound");
    cmd->add_option("--truncate-hi", truncate_hi, "truncation upper bound");
    cmd->add_option("--panels", panels, "geometric panels (0 = auto)");
    cmd->add_flag("--single-panel", single_panel, "one Gauss-Legendre panel");
  }

  hs::DiscretizationConfig config(const hs::DensityMeasure& d) const {
    hs::DiscretizationConfig cfg = hs::default_config(d, nodes);
    if (truncate_lo > 0.0) cfg.t_lo = truncate_lo;
    if (truncate_hi > 0.0) cfg.t_hi = truncate_hi;
    cfg.panels = panels;
    cfg.rule = single_panel ? hs::PanelRule::single_panel
                            : hs::PanelRule::composite_gauss_legendre;
    return cfg;
  }
};

hs::AtomicMeasure to_atomic(const hs::Measure& mu, const DiscretizeFlags& flags) {
  if (hs::is_atomic(mu)) return hs::as_atomic(mu);
  const hs::DensityMeasure& d = hs::as_density(mu);
  return hs::discretize(d, flags.config(d));
}

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot open output file " + path);
  return out;
}

void emit(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
  } else {
    open_out(path) << text;
  }
}

json report_to_json(const hs::IdentityReport& r) {
  return json{{"mass_error", r.mass_error},
              {"trace_error", r.trace_error},
              {"hs_error", r.hs_error},
              {"lyapunov_residual", r.lyapunov_residual},
              {"roundtrip_node_error", r.roundtrip_node_error},
              {"roundtrip_weight_error", r.roundtrip_weight_error}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"spectral map for positive Hankel operators (model-operator route)"};
  app.require_subcommand(1);

  std::string input, output, solver = "accurate", check_set = "all", ref_name;
  std::string density_table;
  double tol = 1e-6;
  int ref_nodes = 400;
  double ref_truncate = 30.0;
  double gramian_T = 40.0;
  int gramian_steps = 4000;
  DiscretizeFlags flags;

  auto* map_cmd = app.add_subcommand("map", "spectral map: sigma = Omega(mu), CSV output");
  map_cmd->add_option("--input", input)->required();
  map_cmd->add_option("--output", output);
  map_cmd->add_option("--solver", solver)->check(CLI::IsMember({"accurate", "baseline"}));
  flags.attach(map_cmd);

  auto* sharp_cmd = app.add_subcommand("sharp-map", "co-finite map: rho = Omega(sharp(mu))");
  sharp_cmd->add_option("--input", input)->required();
  sharp_cmd->add_option("--output", output);
  sharp_cmd->add_option("--solver", solver)->check(CLI::IsMember({"accurate", "baseline"}));
  flags.attach(sharp_cmd);

  auto* classify_cmd = app.add_subcommand("classify", "measure class flags as JSON");
  classify_cmd->add_option("--input", input)->required();
  classify_cmd->add_option("--output", output);

  auto* check_cmd = app.add_subcommand("check", "identity checks; nonzero exit on breach");
  check_cmd->add_option("set", check_set)->check(CLI::IsMember({"involution", "identities", "all"}));
  check_cmd->add_option("--input", input)->required();
  check_cmd->add_option("--output", output);
  check_cmd->add_option("--tol", tol, "tolerance for the checked errors");
  check_cmd->add_option("--solver", solver)->check(CLI::IsMember({"accurate", "baseline"}));
  flags.attach(check_cmd);

  auto* disc_cmd = app.add_subcommand("discretize", "density -> atomic measure JSON");
  disc_cmd->add_option("--input", input)->required();
  disc_cmd->add_option("--output", output);
  flags.attach(disc_cmd);

  auto* ref_cmd = app.add_subcommand("reference", "Mehler/Rosenblum reproduction pipelines");
  ref_cmd->add_option("name", ref_name)->required()->check(CLI::IsMember({"mehler", "rosenblum"}));
  ref_cmd->add_option("--nodes", ref_nodes);
  ref_cmd->add_option("--truncate", ref_truncate, "upper truncation for the mehler pipeline");
  ref_cmd->add_option("--output", output, "CSV: lambda,empirical_cdf,reference_cdf");
  ref_cmd->add_option("--density-table", density_table, "CSV: lambda,density,cdf");

  auto* lyap_cmd = app.add_subcommand("lyapunov", "Gramian/Lyapunov residual report");
  lyap_cmd->add_option("--input", input, "atomic measure; a = positions, b = sqrt(weights)")->required();
  lyap_cmd->add_option("--output", output);
  lyap_cmd->add_option("--gramian-T", gramian_T);
  lyap_cmd->add_option("--gramian-steps", gramian_steps);

  CLI11_PARSE(app, argc, argv);

  try {
    const hs::SolverMethod method =
        solver == "baseline" ? hs::SolverMethod::baseline : hs::SolverMethod::accurate;

    if (map_cmd->parsed() || sharp_cmd->parsed()) {
      const hs::Measure mu = hs::load_measure(input);
      hs::AtomicMeasure atomic = to_atomic(mu, flags);
      const hs::AtomicMeasure sigma = map_cmd->parsed() ? hs::omega(atomic, method)
                                                        : hs::omega_sharp(atomic, method);
      std::ostringstream csv;
      hs::write_spectrum_csv(csv, sigma);
      emit(output, csv.str());
      return kExitOk;
    }

    if (classify_cmd->parsed()) {
      const hs::Measure mu = hs::load_measure(input);
      const hs::MeasureClass c = hs::classify(mu);
      const json j{{"is_finite", c.is_finite},
                   {"is_cofinite", c.is_cofinite},
                   {"is_carleson", c.is_carleson},
                   {"bounded_support", c.bounded_support},
                   {"blaschke_atomic", c.blaschke_atomic}};
      emit(output, j.dump(2) + "\n");
      return kExitOk;
    }

    if (check_cmd->parsed()) {
      const hs::Measure mu = hs::load_measure(input);
      const hs::AtomicMeasure atomic = to_atomic(mu, flags);
      const hs::IdentityReport r = hs::identity_report(atomic, method);
      json j = report_to_json(r);
      bool ok = true;
      if (check_set == "involution" || check_set == "all")
        ok = ok && r.roundtrip_node_error <= tol && r.roundtrip_weight_error <= tol;
      if (check_set == "identities" || check_set == "all")
        ok = ok && r.mass_error <= tol && r.trace_error <= tol && r.hs_error <= tol;
      j["tolerance"] = tol;
      j["pass"] = ok;
      emit(output, j.dump(2) + "\n");
      return ok ? kExitOk : kExitTolerance;
    }

    if (disc_cmd->parsed()) {
      const hs::Measure mu = hs::load_measure(input);
      if (hs::is_atomic(mu)) throw std::invalid_argument("discretize expects a density measure");
      const hs::AtomicMeasure atoms = to_atomic(mu, flags);
      emit(output, hs::measure_to_json(hs::Measure(atoms)) + "\n");
      return kExitOk;
    }

    if (ref_cmd->parsed()) {
      const bool mehler = ref_name == "mehler";
      const hs::ReferencePipelineResult result =
          mehler ? hs::run_mehler_pipeline(ref_nodes, 1e-8, ref_truncate)
                 : hs::run_rosenblum_pipeline(ref_nodes);
      const hs::ReferenceName name =
          mehler ? hs::ReferenceName::mehler_sigma : hs::ReferenceName::rosenblum_rho;

      if (!output.empty()) {
        auto os = open_out(output);
        os << "lambda,empirical_cdf,reference_cdf\n";
        double empirical = 0.0;
        for (const hs::Atom& a : result.spectrum.atoms()) {
          empirical += a.weight;
          os << hs::format_double(a.position) << "," << hs::format_double(empirical) << ","
             << hs::format_double(hs::reference_cdf(name, a.position)) << "\n";
        }
      }
      if (!density_table.empty()) {
        auto os = open_out(density_table);
        os << "lambda,density,cdf\n";
        for (int i = 1; i < 400; ++i) {
          const double lam = M_PI * i / 400.0;
          const double dens = mehler ? hs::mehler_density(lam) : hs::rosenblum_density(lam);
          os << hs::format_double(lam) << "," << hs::format_double(dens) << ","
             << hs::format_double(hs::reference_cdf(name, lam)) << "\n";
        }
      }
      std::cout << "kolmogorov " << hs::format_double(result.kolmogorov) << "\n"
                << "mass " << hs::format_double(result.mass) << "\n"
                << "lambda_max " << hs::format_double(result.lambda_max) << "\n";
      return kExitOk;
    }

    if (lyap_cmd->parsed()) {
      const hs::Measure mu = hs::load_measure(input);
      const hs::AtomicMeasure& atomic = hs::as_atomic(mu);
      hs::DiagonalSystem sys;
      for (const hs::Atom& a : atomic.atoms()) {
        sys.a.push_back(a.position);
        sys.b.push_back(std::sqrt(a.weight));
      }
      const hs::DenseMatrix w = hs::solve_lyapunov(sys);
      const hs::GramianResult g = hs::gramian_quadrature(sys, gramian_T, gramian_steps);
      const json j{{"lyapunov_residual", hs::lyapunov_residual(sys, w)},
                   {"gramian_max_abs_diff", w.max_abs_diff(g.w)},
                   {"gramian_tail_bound", g.tail_bound},
                   {"gramian_tail_ok", g.tail_ok},
                   {"impulse_response_t0", hs::impulse_response(sys, 0.0)}};
      emit(output, j.dump(2) + "\n");
      return kExitOk;
    }
  } catch (const hs::conditioning_error& e) {
    std::cerr << "numerical degeneracy: " << e.what() << "\n";
    return kExitDegenerate;
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitParse;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  }
  return kExitOk;
}
