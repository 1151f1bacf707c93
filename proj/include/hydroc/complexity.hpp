// This file is part of hydroc, released under the MIT License.

#ifndef HYDROC_COMPLEXITY_HPP
#define HYDROC_COMPLEXITY_HPP

#include "hydroc/functionals.hpp"
#include "hydroc/quadrature.hpp"
#include "hydroc/states.hpp"

namespace hydroc {

enum class Space { position, momentum };

enum class Method {
  automatic,     // closed form when available, else functional
  closed_form,   // ground/circular log-gamma expressions only
  functional,    // disequilibrium and entropy assembled from the
                 // polynomial functionals and closed constants
  direct_oracle, // quadrature of the densities themselves, no decomposition
};

/// Shape complexity C = <density> * exp(S) of one state in one space,
/// with its two ingredients and the radial/angular entropy split.
/// entropy_total = entropy_radial + entropy_angular holds by construction,
/// and complexity = disequilibrium * exp(entropy_total).
/// The log fields stay meaningful when the linear ones leave double range
/// (large-D regimes).
struct MeasureReport {
  Space space = Space::position;
  Method method = Method::closed_form;
  double disequilibrium = 0.0;
  double entropy_radial = 0.0;
  double entropy_angular = 0.0;
  double entropy_total = 0.0;
  double complexity = 0.0;
  double log_disequilibrium = 0.0;
  double log_complexity = 0.0;
  double error_estimate = 0.0;
  bool converged = false;
};

/// Compute the report for one state/space. Method::closed_form throws
/// std::invalid_argument for states that are neither ground nor circular;
/// quadrature trouble is reported through converged = false.
MeasureReport measure(const StateSpec& spec, Space space,
                      Method method = Method::automatic,
                      const QuadratureConfig& config = {});

/// Ground-state closed forms, any D >= 2. Complexity is Z-free; the
/// entropies carry -+ D ln Z and the disequilibria Z^{+-D}.
MeasureReport closed_ground(int D, double Z, Space space);

/// Circular-state closed forms (mu_i = n-1); reduces exactly to
/// closed_ground at n = 1.
MeasureReport closed_circular(int n, int D, double Z, Space space);

enum class LimitKind { dimensional, rydberg };
enum class LimitQuantity { position_complexity, momentum_complexity, product };

/// Which asymptotic regime to evaluate: D -> inf at fixed n (dimensional,
/// pseudoclassical) or n -> inf at fixed D (Rydberg) for circular states.
struct AsymptoticRequest {
  LimitKind limit = LimitKind::dimensional;
  LimitQuantity quantity = LimitQuantity::position_complexity;
  int n = 1;  // fixed state for the dimensional limit; evaluation point for Rydberg
  int D = 3;  // evaluation point for dimensional; fixed dimension for Rydberg
};

/// Asymptotic value in log space; `value` is filled only when exp(log_value)
/// is representable (flagged by `representable`).
struct AsymptoticValue {
  double log_value = 0.0;
  bool representable = false;
  double value = 0.0;
};

AsymptoticValue asymptotic(const AsymptoticRequest& request);

/// ln C of the exact circular closed form (Z drops out of complexities);
/// companion to `asymptotic` for exact-vs-limit tables at large n or D.
double log_closed_complexity(int n, int D, Space space);

/// C[rho] * C[gamma]; observed to stay above e/2 ~ 1.359 on the whole grid.
double uncertainty_product(const StateSpec& spec,
                           Method method = Method::automatic,
                           const QuadratureConfig& config = {});

}  // namespace hydroc

#endif
