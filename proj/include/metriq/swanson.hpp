#pragma once

#include <string>
#include <vector>

#include "metriq/matrix.hpp"
#include "metriq/quadrature.hpp"

namespace metriq {

// Parameters of the non-Hermitian oscillator
//   H = hbar omega (a^dag a + 1/2) + hbar alpha a^2 + hbar beta a^dag^2.
// The closed-form Gaussian metric requires z = 1; energies are z-independent.
struct SwansonParams {
  double omega = 1.0;
  double alpha = 0.0;
  double beta = 0.0;
  double mass = 1.0;
  double hbar = 1.0;
  double z = 1.0;
};

// Frequency of the equivalent Hermitian oscillator: Omega^2 = omega^2 - 4 alpha beta.
double swanson_Omega(const SwansonParams& p);

// Effective mass M(z) from the closed-form similarity transformation; valid
// for any z in [-1, 1] with M(z) > 0.
double swanson_mass(const SwansonParams& p);

// E_n = hbar Omega (n + 1/2); independent of z.
double swanson_energy(const SwansonParams& p, std::size_t n);

// Truncated matrix realization of the z = 1 model in the oscillator basis
// {u_n} of the Hermitian counterpart (length scale Lcap).  x and p are exact
// tridiagonal matrices there, so truncation error is confined to the last two
// rows and columns; every verification runs on the top-left (N-2) block.
struct SwansonModel {
  SwansonParams params;
  double ell;    // sqrt(hbar / m omega)
  double Omega;  // sqrt(omega^2 - 4 alpha beta)
  double M;      // effective mass M(z)
  double Lcap;   // sqrt(hbar / M Omega)
  double gamma;  // hbar (alpha-beta) / ((omega-alpha-beta) ell^2)
  bool hermitian_limit = false;  // alpha == beta degenerate case
  std::size_t N = 0;
  ComplexMatrix Xmat, Pmat, Hmat, Hdagmat, EtaMat;
  ComplexMatrix RhoMat, RhoInvMat;  // EtaMat^{1/2} and its inverse
  QuadratureGrid grid;              // rule used for the metric entries
};

SwansonModel build_model(const SwansonParams& p, std::size_t n_trunc,
                         std::size_t quad_nodes);

double energy(const SwansonModel& model, std::size_t n);

// Pointwise metric eta(x) = exp(-((alpha-beta)/(omega-alpha-beta)) x^2 / ell^2).
double metric_at(const SwansonModel& model, double x);

// U_n(x) = eta(x)^{-1/2} u_n(x); the eigenfunction of the non-Hermitian H.
double eigenfunction_U(const SwansonModel& model, std::size_t n, double x);

struct CheckResult {
  std::string name;
  double residual;
  double tolerance;
  bool pass;
};

struct ModelReport {
  std::vector<CheckResult> checks;
  bool all_pass = true;
};

// Quasi-Hermiticity of X, P, H against the quadrature metric, the canonical
// commutator, the eta-Gram of the eigenfunctions, and the interior spectrum
// against the closed-form energies.
ModelReport verify_model(const SwansonModel& model);

enum class SwansonSide { H, H_dagger };

// Spectral action of H (or H^dag) on a coefficient vector through the
// eigenfunction expansion; agrees with the direct matrix action on the
// interior block.
ComplexVector spectral_apply(const SwansonModel& model, const ComplexVector& coeffs,
                             SwansonSide which);

}  // namespace metriq
