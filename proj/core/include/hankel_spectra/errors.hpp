#pragma once

#include <stdexcept>
#include <string>

namespace hankel_spectra {

// Numerical degeneracy: near-coincident nodes, eigenvalue ties at working
// precision, Jacobi non-convergence. Distinct from invalid input
// (std::invalid_argument) so callers can map it to its own exit code.
class conditioning_error : public std::runtime_error {
 public:
  explicit conditioning_error(const std::string& what)
      : std::runtime_error(what) {}
};

}  // namespace hankel_spectra
