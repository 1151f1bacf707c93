// This file is part of hydroc, released under the MIT License.

#ifndef HYDROC_STATES_HPP
#define HYDROC_STATES_HPP

#include <span>
#include <vector>

#include "hydroc/specfun.hpp"

namespace hydroc {

/// A D-dimensional hydrogenic bound state (Hartree atomic units).
///
/// The D-1 hyperquantum numbers mu = (mu_1 = l, mu_2, ..., mu_{D-1} = m)
/// must satisfy l >= mu_2 >= ... >= |m| >= 0 and 0 <= l <= n-1. For D = 2
/// the list holds the single magnetic number m, and l = |m|.
struct StateSpec {
  int D = 3;
  double Z = 1.0;
  int n = 1;
  std::vector<int> mu;

  int l() const { return D == 2 ? std::abs(mu.front()) : mu.front(); }

  /// Throws std::invalid_argument naming the violated inequality.
  void validate() const;

  static StateSpec ground(int D, double Z = 1.0);
  /// Circular state: mu_i = n-1 for every i.
  static StateSpec circular(int n, int D, double Z = 1.0);
};

bool is_ground(const StateSpec& spec);
bool is_circular(const StateSpec& spec);

/// Scalars derived from a state, exact on half-integers:
/// eta = n + (D-3)/2, L = l + (D-3)/2, lambda = eta/(2Z),
/// alpha_j = (D-j-1)/2 for j = 1..D-2.
struct DerivedParams {
  double eta = 0.0;
  double L = 0.0;
  double lambda = 0.0;
  std::vector<double> alpha;

  static DerivedParams from(const StateSpec& spec);
};

/// E = -Z^2 / (2 eta^2).
double energy(const StateSpec& spec);

/// One Gegenbauer factor of the hyperspherical harmonic, for angle theta_j:
/// [C~_degree^lambda(cos theta)] (sin theta)^{sin_power}, integrated against
/// (sin theta)^{weight_power} d(theta). The magnetic number enters through
/// its absolute value.
struct AngularFactor {
  int degree = 0;
  double lambda = 0.0;
  int sin_power = 0;
  int weight_power = 0;
};

/// The D-2 factors (empty for D = 2, where |Y|^2 = 1/(2 pi)).
std::vector<AngularFactor> angular_factors(const StateSpec& spec);

/// Radial position wavefunction R_{n,l}(r), r > 0; also in log form.
double radial_position(const StateSpec& spec, double r);
SignedLog radial_position_log(const StateSpec& spec, double r);

/// Radial momentum wavefunction M_{n,l}(p), p > 0; also in log form.
double radial_momentum(const StateSpec& spec, double p);
SignedLog radial_momentum_log(const StateSpec& spec, double p);

/// |Y_{l,{mu}}(Omega)|^2 at angles (theta_1..theta_{D-2}, phi).
/// theta_j in [0, pi], phi in [0, 2 pi); out-of-range angles throw
/// (the factorized quadratures rely on exact angle handling, silently
/// wrapping would hide caller bugs).
double angular_density(const StateSpec& spec, std::span<const double> angles);

/// rho = R^2 |Y|^2 and gamma = M^2 |Y|^2; both integrate to 1 over their
/// full spaces.
double position_density(const StateSpec& spec, double r,
                        std::span<const double> angles);
double momentum_density(const StateSpec& spec, double p,
                        std::span<const double> angles);

}  // namespace hydroc

#endif
