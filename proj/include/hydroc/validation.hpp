// This file is part of hydroc, released under the MIT License.

#ifndef HYDROC_VALIDATION_HPP
#define HYDROC_VALIDATION_HPP

#include <string>
#include <vector>

#include "hydroc/quadrature.hpp"

namespace hydroc {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// The self-validation suite behind `hydroc validate`: density
/// normalizations, Z-invariance and covariance, agreement of the three
/// computation methods, the n = 1 reduction of the circular closed forms,
/// the complexity orderings, the C[rho] C[gamma] >= e/2 bound, and the
/// wrong-exponent probe of the position quartic assembly.
/// `quick` restricts the grid to D <= 4, n <= 2.
std::vector<CheckResult> run_validation(bool quick,
                                        const QuadratureConfig& config = {},
                                        bool parallel = true);

}  // namespace hydroc

#endif
