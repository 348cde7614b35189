#include "hankel_spectra/measure_io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace hankel_spectra {

namespace {

using nlohmann::json;

double support_slot(const json& j) {
  if (j.is_null()) return std::numeric_limits<double>::infinity();
  return j.get<double>();
}

json support_to_json(double lo, double hi) {
  json out = json::array();
  out.push_back(lo);
  if (std::isinf(hi)) {
    out.push_back(nullptr);
  } else {
    out.push_back(hi);
  }
  return out;
}

Measure parse_inner(const json& j) {
  const std::string type = j.at("type").get<std::string>();
  if (type == "atomic") {
    std::vector<Atom> atoms;
    for (const auto& item : j.at("atoms")) {
      const double x = item.at("x").get<double>();
      const double w = item.at("w").get<double>();
      if (!(x > 0.0)) throw std::invalid_argument("atom position must be > 0");
      if (!(w > 0.0)) throw std::invalid_argument("atom weight must be > 0");
      atoms.push_back({x, w});
    }
    return AtomicMeasure(std::move(atoms));
  }
  if (type != "density") throw std::invalid_argument("measure type must be atomic or density");

  const std::string kind = j.at("kind").get<std::string>();
  const json params = j.value("params", json::object());

  DensityMeasure base = [&]() -> DensityMeasure {
    if (kind == "exp_scale") return DensityMeasure::exp_scale(params.at("beta").get<double>());
    if (kind == "indicator") {
      const double a = params.at("a").get<double>();
      const double b = params.contains("b") && !params.at("b").is_null()
                           ? params.at("b").get<double>()
                           : std::numeric_limits<double>::infinity();
      return DensityMeasure::indicator(a, b);
    }
    if (kind == "mehler_sigma") return DensityMeasure::mehler_sigma();
    if (kind == "rosenblum_rho") return DensityMeasure::rosenblum_rho();
    if (kind == "tabulated") {
      std::vector<std::pair<double, double>> samples;
      for (const auto& s : params.at("samples"))
        samples.emplace_back(s.at(0).get<double>(), s.at(1).get<double>());
      return DensityMeasure::tabulated(std::move(samples));
    }
    throw std::invalid_argument("unknown density kind: " + kind);
  }();

  const bool inverted = j.value("inverted", false);
  const double mass_scale = j.value("mass_scale", 1.0);
  const double var_scale = j.value("variable_scale", 1.0);
  if (inverted || mass_scale != 1.0 || var_scale != 1.0)
    base = DensityMeasure::with_transforms(std::move(base), inverted, mass_scale, var_scale);

  if (j.contains("support")) {
    const json& s = j.at("support");
    const double lo = support_slot(s.at(0));
    const double hi = support_slot(s.at(1));
    if (!(lo >= 0.0) || !(hi > lo))
      throw std::invalid_argument("support must satisfy 0 <= lo < hi");
  }
  return base;
}

}  // namespace

Measure parse_measure_json(const std::string& text) {
  try {
    return parse_inner(json::parse(text));
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("measure JSON: ") + e.what());
  }
}

Measure load_measure(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_measure_json(buf.str());
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string measure_to_json(const Measure& mu) {
  json j;
  if (is_atomic(mu)) {
    j["type"] = "atomic";
    json atoms = json::array();
    for (const Atom& a : as_atomic(mu).atoms())
      atoms.push_back({{"x", a.position}, {"w", a.weight}});
    j["atoms"] = std::move(atoms);
    return j.dump(2);
  }
  const DensityMeasure& d = as_density(mu);
  j["type"] = "density";
  switch (d.kind()) {
    case DensityKind::exp_scale:
      j["kind"] = "exp_scale";
      j["params"] = {{"beta", d.exp_rate()}};
      break;
    case DensityKind::indicator: {
      const auto [a, b] = d.base_support();
      j["kind"] = "indicator";
      j["params"] = {{"a", a}};
      if (std::isinf(b)) {
        j["params"]["b"] = nullptr;
      } else {
        j["params"]["b"] = b;
      }
      break;
    }
    case DensityKind::mehler_sigma:
      j["kind"] = "mehler_sigma";
      break;
    case DensityKind::rosenblum_rho:
      j["kind"] = "rosenblum_rho";
      break;
    case DensityKind::tabulated: {
      j["kind"] = "tabulated";
      json samples = json::array();
      for (const auto& [x, v] : d.samples()) samples.push_back({x, v});
      j["params"] = {{"samples", std::move(samples)}};
      break;
    }
  }
  if (d.inverted()) j["inverted"] = true;
  if (d.mass_scale() != 1.0) j["mass_scale"] = d.mass_scale();
  if (d.variable_scale() != 1.0) j["variable_scale"] = d.variable_scale();
  j["support"] = support_to_json(d.support_lower(), d.support_upper());
  return j.dump(2);
}

void save_measure(const Measure& mu, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot open " + path.string() + " for writing");
  out << measure_to_json(mu) << "\n";
}

void write_spectrum_csv(std::ostream& os, const AtomicMeasure& sigma) {
  os << "lambda,mass\n";
  for (const Atom& a : sigma.atoms())
    os << format_double(a.position) << "," << format_double(a.weight) << "\n";
}

}  // namespace hankel_spectra
