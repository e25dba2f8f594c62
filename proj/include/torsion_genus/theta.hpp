#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "torsion_genus/fraction.hpp"

namespace torsion_genus {

/// Odd Jacobi theta function
///   theta(z,tau) = -i sum_{n in Z} (-1)^n e^{pi i tau (n+1/2)^2} e^{2 pi i z (n+1/2)},
/// summed outward from n = 0 until three consecutive terms fall below
/// tol * max(1, |partial sum|). Requires Im tau > 0.
std::complex<double> theta(std::complex<double> z, std::complex<double> tau, double tol = 1e-14);

/// Same, also reporting the largest term magnitude seen (the natural scale
/// for pole rejection).
std::complex<double> theta_scaled(std::complex<double> z, std::complex<double> tau, double tol,
                                  double* scale_out);

/// Sample point of the theta-quotient function: group data enters only
/// through the tangent eigenvalue angles lambda_g, lambda_h in [0,1).
struct ModularPoint {
  std::complex<double> z;
  std::complex<double> tau;
  std::complex<double> x;
  Frac lambda_g;
  Frac lambda_h;
};

/// theta(x/2pi i + lambda_g - tau lambda_h - z) / theta(x/2pi i + lambda_g
/// - tau lambda_h) * e^{2 pi i z lambda_h}. Throws std::domain_error at
/// (near-)poles of the quotient.
std::complex<double> phi(const ModularPoint& pt, double tol = 1e-14);

struct IdentityCheck {
  std::string name;
  std::size_t samples = 0;
  double max_rel_error = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

struct ThetaReport {
  std::vector<IdentityCheck> checks;
  bool all_pass = true;
};

/// Verifies the transformation laws of the theta quotient over seeded
/// random sample points with eigenvalue angles drawn from
/// {0, 1/2, 1/3, 2/3, 1/4, 3/4}: the z -> z+1 law, the tau -> tau+1 law
/// (with the shifted first angle), the z -> z+n tau laws for n = 1,2, the
/// modular inversion law, and the internal quasi-periodicity of theta
/// itself (checked at tolerance/10).
ThetaReport check_identities(std::size_t samples, double tolerance, std::uint64_t seed = 20240901);

}  // namespace torsion_genus
