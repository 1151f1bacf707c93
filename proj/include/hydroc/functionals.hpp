// This file is part of hydroc, released under the MIT License.

#ifndef HYDROC_FUNCTIONALS_HPP
#define HYDROC_FUNCTIONALS_HPP

#include "hydroc/quadrature.hpp"
#include "hydroc/states.hpp"

namespace hydroc {

/// A quadrature-backed quantity. Non-convergence is reported, never silent.
struct Estimate {
  double value = 0.0;
  double error = 0.0;
  bool converged = false;
};

/// Entropy functional of the orthonormal Laguerre polynomial y~_k^alpha:
///   -int_0^inf x w_alpha(x) y~^2(x) ln y~^2(x) dx,  w_alpha = x^alpha e^-x.
/// The integrand has integrable log spikes at the k polynomial zeros; the
/// quadrature is split there. Degree 0 closed form: (alpha+1) ln Gamma(alpha+1).
Estimate laguerre_entropy(int degree, double alpha,
                          const QuadratureConfig& config = {});

/// Entropy functional of the orthonormal Gegenbauer polynomial on [-1,1]:
///   -int w*_lambda(x) y~^2(x) ln y~^2(x) dx,  w*_lambda = (1-x^2)^{lambda-1/2}.
/// Degree 0 closed form: ln( sqrt(pi) Gamma(lambda+1/2) / Gamma(lambda+1) ).
Estimate gegenbauer_entropy(int degree, double lambda,
                            const QuadratureConfig& config = {});

/// Quartic angular norm int |Y_{l,{mu}}|^4 dOmega, factorized into one
/// 1-d integral per hypersphere angle.
Estimate angular_quartic(const StateSpec& spec,
                         const QuadratureConfig& config = {});

/// Radial quartic integrals behind the disequilibria. The position-space
/// integrand carries x^{3-D} [w_{2L+1}(x)]^2 [L~(x)]^4; that power is pinned
/// by requiring the assembled <rho> to reproduce the ground-state closed
/// form (cmd_validate carries a deliberate wrong-power probe).
Estimate position_radial_quartic(const StateSpec& spec,
                                 const QuadratureConfig& config = {});
/// Same integral with an explicit power of x replacing 3-D (probe hook).
Estimate position_radial_quartic_power(const StateSpec& spec, double x_power,
                                       const QuadratureConfig& config = {});
/// Momentum-space analogue: int y^{4l+D-1} (1+y^2)^{-(4L+8)} [C~]^4 dy with
/// the Gegenbauer factor evaluated at (1-y^2)/(1+y^2).
Estimate momentum_radial_quartic(const StateSpec& spec,
                                 const QuadratureConfig& config = {});

/// Disequilibria assembled from the radial and angular quartics:
///   <rho>   = 2^{D-2} eta^{-(D+2)} Z^D K_pos K_ang
///   <gamma> = 2^{4L+8} eta^D Z^{-D} K_mom K_ang
Estimate position_disequilibrium(const StateSpec& spec,
                                 const QuadratureConfig& config = {});
Estimate momentum_disequilibrium(const StateSpec& spec,
                                 const QuadratureConfig& config = {});

/// Closed-form constants of the entropy decomposition (digamma/log-gamma).
double radial_entropy_offset(int n, int l, int D);        // position, "A"
double angular_entropy_offset(const StateSpec& spec);     // hyperspherical, "B"
double momentum_entropy_offset(int n, int l, int D);      // momentum, "F"

/// Hyperspherical-harmonic entropy S[Y] = B + sum_j E2[C~ factors].
/// Reduces to ln(2 pi^{D/2} / Gamma(D/2)) when every mu vanishes.
Estimate angular_entropy(const StateSpec& spec,
                         const QuadratureConfig& config = {});

/// Radial entropies assembled from the constants and entropy functionals:
///   S[R] = A + E1/(2 eta) - D ln Z,   S[M] = F + E2 + D ln Z.
Estimate radial_entropy(const StateSpec& spec,
                        const QuadratureConfig& config = {});
Estimate momentum_radial_entropy(const StateSpec& spec,
                                 const QuadratureConfig& config = {});

}  // namespace hydroc

#endif
