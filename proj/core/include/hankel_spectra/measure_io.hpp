#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "hankel_spectra/measure.hpp"

namespace hankel_spectra {

// JSON measure schema:
//   {"type":"atomic","atoms":[{"x":1.0,"w":1.0}, ...]}
//   {"type":"density","kind":"exp_scale","params":{"beta":2.0},"support":[0,null]}
// null in a support slot means +inf. Parsing rejects x <= 0 and w <= 0.
// Transformed densities round-trip through optional "inverted",
// "mass_scale" and "variable_scale" fields.
Measure parse_measure_json(const std::string& text);
Measure load_measure(const std::filesystem::path& path);

std::string measure_to_json(const Measure& mu);
void save_measure(const Measure& mu, const std::filesystem::path& path);

// CSV spectrum rows "lambda,mass", 17 significant digits (round-trip safe).
void write_spectrum_csv(std::ostream& os, const AtomicMeasure& sigma);

std::string format_double(double v);  // %.17g

}  // namespace hankel_spectra
