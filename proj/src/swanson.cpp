#include "metriq/swanson.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "metriq/eigen.hpp"

namespace metriq {

double swanson_Omega(const SwansonParams& p) {
  const double o2 = p.omega * p.omega - 4.0 * p.alpha * p.beta;
  if (o2 <= 0.0)
    throw InvalidParameters("swanson: Omega^2 = omega^2 - 4 alpha beta must be > 0");
  return std::sqrt(o2);
}

double swanson_mass(const SwansonParams& p) {
  const double s = p.alpha + p.beta;
  const double dmn = s - p.z * p.omega;
  if (p.z <= -1.0 || p.z > 1.0)
    throw InvalidParameters("swanson: z must lie in (-1, 1]");
  if (dmn == 0.0)
    throw InvalidParameters("swanson: alpha + beta - z omega vanishes");
  const double ell2 = p.hbar / (p.mass * p.omega);
  const double d = p.alpha - p.beta;
  const double arg = 1.0 - (1.0 - p.z * p.z) * d * d / (dmn * dmn);
  if (arg < 0.0)
    throw InvalidParameters("swanson: similarity transformation is not real here");
  const double minv =
      (-p.z * s + p.omega - dmn * std::sqrt(arg)) / ((1.0 + p.z) * p.hbar / ell2);
  if (minv <= 0.0) throw InvalidParameters("swanson: M(z) must be positive");
  return 1.0 / minv;
}

double swanson_energy(const SwansonParams& p, std::size_t n) {
  return p.hbar * swanson_Omega(p) * (static_cast<double>(n) + 0.5);
}

namespace {

// Exact tridiagonal position/momentum matrices in the oscillator basis with
// length scale L.
ComplexMatrix position_matrix(std::size_t n, double L) {
  ComplexMatrix x(n, n);
  for (std::size_t k = 1; k < n; ++k) {
    const double v = L * std::sqrt(0.5 * static_cast<double>(k));
    x(k - 1, k) = v;
    x(k, k - 1) = v;
  }
  return x;
}

ComplexMatrix momentum_matrix(std::size_t n, double L, double hbar) {
  ComplexMatrix p(n, n);
  for (std::size_t k = 1; k < n; ++k) {
    const double v = (hbar / L) * std::sqrt(0.5 * static_cast<double>(k));
    p(k - 1, k) = cplx{0.0, -v};
    p(k, k - 1) = cplx{0.0, v};
  }
  return p;
}

// <u_n| eta(x) |u_m> by Gauss-Hermite quadrature on the scaled grid.
ComplexMatrix metric_matrix(std::size_t n, double L, double gprime,
                            const QuadratureGrid& grid) {
  const std::size_t kk = grid.nodes.size();
  std::vector<std::vector<double>> u(n, std::vector<double>(kk));
  std::vector<double> w(kk);
  for (std::size_t k = 0; k < kk; ++k) {
    const double t = grid.nodes[k];
    const double x = L * t;
    for (std::size_t row = 0; row < n; ++row) u[row][k] = hermite_function(row, x, L);
    w[k] = L * grid.scaled_weights[k] * std::exp(-gprime * x * x);
  }
  ComplexMatrix eta(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      double s = 0.0;
      for (std::size_t k = 0; k < kk; ++k) s += w[k] * u[i][k] * u[j][k];
      eta(i, j) = s;
      eta(j, i) = s;
    }
  return eta;
}

}  // namespace

SwansonModel build_model(const SwansonParams& p, std::size_t n_trunc,
                         std::size_t quad_nodes) {
  std::string problems;
  auto complain = [&problems](const char* msg) {
    if (!problems.empty()) problems += "; ";
    problems += msg;
  };
  if (p.omega <= 0.0) complain("omega must be positive");
  if (p.hbar <= 0.0) complain("hbar must be positive");
  if (p.mass <= 0.0) complain("mass must be positive");
  if (p.omega > 0.0 && p.omega * p.omega - 4.0 * p.alpha * p.beta <= 0.0)
    complain("Omega^2 = omega^2 - 4 alpha beta must be positive");
  if (std::abs(p.z - 1.0) > 1e-12)
    complain("the closed-form metric requires z = 1");
  if (p.omega - p.alpha - p.beta <= 0.0)
    complain("omega - alpha - beta must be positive (M(1) > 0)");
  if (n_trunc < 4) complain("truncation must be at least 4");
  if (quad_nodes < 2 * n_trunc + 32)
    complain("quadrature nodes must be at least 2N + 32");
  if (!problems.empty()) throw InvalidParameters("build_model: " + problems);

  SwansonModel m;
  m.params = p;
  m.ell = std::sqrt(p.hbar / (p.mass * p.omega));
  m.Omega = swanson_Omega(p);
  m.M = swanson_mass(p);
  m.Lcap = std::sqrt(p.hbar / (m.M * m.Omega));
  const double ell2 = m.ell * m.ell;
  const double gprime = (p.alpha - p.beta) / ((p.omega - p.alpha - p.beta) * ell2);
  m.gamma = p.hbar * gprime;
  m.hermitian_limit = p.alpha == p.beta;
  m.N = n_trunc;

  if (gprime < 0.0)
    throw InvalidParameters(
        "build_model: (alpha-beta)/(omega-alpha-beta) must be >= 0 for a bounded "
        "transformation");
  if (1.0 / (m.Lcap * m.Lcap) <= gprime)
    throw InvalidParameters(
        "build_model: eigenfunctions are not normalizable (1/L^2 <= gamma')");

  m.Xmat = position_matrix(n_trunc, m.Lcap);
  const ComplexMatrix pmat = momentum_matrix(n_trunc, m.Lcap, p.hbar);
  m.Pmat = pmat + cplx{0.0, m.gamma} * m.Xmat;
  m.Hmat = (1.0 / (2.0 * m.M)) * (m.Pmat * m.Pmat) +
           (0.5 * m.M * m.Omega * m.Omega) * (m.Xmat * m.Xmat);
  m.Hdagmat = m.Hmat.adjoint();

  m.grid = gauss_hermite(quad_nodes);
  m.EtaMat = metric_matrix(n_trunc, m.Lcap, gprime, m.grid);

  // Resolution check: the rule must already be converged for these entries.
  const std::size_t refined = std::min<std::size_t>(quad_nodes + 17, 512);
  if (refined > quad_nodes) {
    const ComplexMatrix eta2 =
        metric_matrix(n_trunc, m.Lcap, gprime, gauss_hermite(refined));
    if ((m.EtaMat - eta2).frobenius_norm() > 1e-9 * eta2.frobenius_norm())
      throw QuadratureUnderresolved("build_model: metric matrix not converged");
  }

  SqrtPair sp = pd_sqrt_pair(m.EtaMat);
  m.RhoMat = std::move(sp.sqrt);
  m.RhoInvMat = std::move(sp.inv_sqrt);
  return m;
}

double energy(const SwansonModel& model, std::size_t n) {
  return swanson_energy(model.params, n);
}

double metric_at(const SwansonModel& model, double x) {
  const double gprime = model.gamma / model.params.hbar;
  return std::exp(-gprime * x * x);
}

double eigenfunction_U(const SwansonModel& model, std::size_t n, double x) {
  return hermite_function(n, x, model.Lcap) / std::sqrt(metric_at(model, x));
}

ModelReport verify_model(const SwansonModel& model) {
  ModelReport report;
  const std::size_t n = model.N;
  const std::size_t interior = n - 2;
  const double hbar = model.params.hbar;

  auto add = [&report](std::string name, double residual, double tol) {
    report.checks.push_back({std::move(name), residual, tol, residual <= tol});
    report.all_pass = report.all_pass && report.checks.back().pass;
  };

  auto quasi_interior = [&](const ComplexMatrix& a) {
    const ComplexMatrix r = a.adjoint() * model.EtaMat - model.EtaMat * a;
    return r.top_left(interior).frobenius_norm() /
           (a.frobenius_norm() * model.EtaMat.frobenius_norm());
  };
  add("quasi_hermiticity_X", quasi_interior(model.Xmat), 1e-8);
  add("quasi_hermiticity_P", quasi_interior(model.Pmat), 1e-8);
  add("quasi_hermiticity_H", quasi_interior(model.Hmat), 1e-8);

  {
    ComplexMatrix c = model.Xmat * model.Pmat - model.Pmat * model.Xmat;
    c -= cplx{0.0, hbar} * ComplexMatrix::identity(n);
    add("canonical_commutator",
        c.top_left(interior).frobenius_norm() /
            (hbar * std::sqrt(static_cast<double>(interior))),
        1e-8);
  }

  {
    const std::size_t gmax = std::min<std::size_t>(20, n >= 4 ? n - 4 : 0);
    double worst = 0.0;
    for (std::size_t i = 0; i <= gmax; ++i)
      for (std::size_t j = i; j <= gmax; ++j) {
        double s = 0.0;
        for (std::size_t k = 0; k < model.grid.nodes.size(); ++k) {
          const double t = model.grid.nodes[k];
          const double x = model.Lcap * t;
          s += model.Lcap * model.grid.scaled_weights[k] *
               eigenfunction_U(model, i, x) * metric_at(model, x) *
               eigenfunction_U(model, j, x);
        }
        worst = std::max(worst, std::abs(s - (i == j ? 1.0 : 0.0)));
      }
    add("eta_orthonormality", worst, 1e-8);
  }

  {
    // Diagonalize the interior Galerkin pair: the interior blocks of H and
    // eta are exact projections (the truncation corrupts only the outer
    // corner), while the full-size similarity factors would smear that
    // corner over every entry.
    const SqrtPair sp = pd_sqrt_pair(model.EtaMat.top_left(interior));
    ComplexMatrix h = sp.sqrt * model.Hmat.top_left(interior) * sp.inv_sqrt;
    h = 0.5 * (h + h.adjoint());
    EigenDecomposition d = hermitian_eigen(h);
    double worst = 0.0;
    for (std::size_t k = 0; k <= n / 2 && k < interior; ++k) {
      const double exact = swanson_energy(model.params, k);
      worst = std::max(worst, std::abs(d.eigenvalues[k] - exact) / exact);
    }
    add("interior_spectrum", worst, 1e-6);
  }

  return report;
}

ComplexVector spectral_apply(const SwansonModel& model, const ComplexVector& coeffs,
                             SwansonSide which) {
  if (coeffs.size() != model.N)
    throw DimensionMismatch("spectral_apply: length mismatch");
  // In coefficient space U_n = RhoInv e_n, so the expansion-scale-recompose
  // chain collapses to RhoInv diag(E) Rho (and its eta-conjugate for H^dag).
  const ComplexMatrix& fwd =
      which == SwansonSide::H ? model.RhoMat : model.RhoInvMat;
  const ComplexMatrix& back =
      which == SwansonSide::H ? model.RhoInvMat : model.RhoMat;
  ComplexVector c = fwd * coeffs;
  for (std::size_t k = 0; k < c.size(); ++k) c[k] *= swanson_energy(model.params, k);
  return back * c;
}

}  // namespace metriq
