// End-to-end acceptance suite: one pass/fail line per criterion.

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <regex>
#include <sstream>

#include "metriq/biorth.hpp"
#include "metriq/cli.hpp"
#include "metriq/intertwiner.hpp"
#include "metriq/matrix_io.hpp"
#include "metriq/swanson.hpp"
#include "metriq/transform.hpp"
#include "test_helpers.hpp"

using namespace metriq;
using namespace metriq::testing;

namespace {

int failures = 0;

void report(int index, const char* name, bool pass, double worst, double tol) {
  std::printf("%s  criterion %d: %-38s (worst %.3e, tol %.1e)\n",
              pass ? "PASS" : "FAIL", index, name, worst, tol);
  if (!pass) ++failures;
}

SwansonParams reference_params() {
  SwansonParams p;
  p.omega = 2.0;
  p.alpha = 0.5;
  p.beta = 0.3;
  return p;
}

struct ConstructedSystem {
  ComplexMatrix a;
  MetricOperator metric;
};

ConstructedSystem construct_system(std::size_t n, std::mt19937_64& rng,
                                   bool distinct_spectrum = false) {
  ComplexMatrix h = random_hermitian(n, rng);
  if (distinct_spectrum) {
    // Re-assemble with well-separated eigenvalues.
    EigenDecomposition d = hermitian_eigen(h);
    ComplexMatrix sep(n, n);
    for (std::size_t k = 0; k < n; ++k) {
      const double lam = static_cast<double>(k) + 0.3 * uniform(rng, 0.0, 1.0);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          sep(i, j) += lam * d.eigenvectors(i, k) * std::conj(d.eigenvectors(j, k));
    }
    h = sep;
  }
  const PdPair rho = random_pd_pair(n, rng);
  return {rho.rho_inv * h * rho.rho, MetricOperator::make(rho.rho * rho.rho)};
}

void criterion_1_swanson_spectrum() {
  auto model = build_model(reference_params(), 64, 160);
  const SqrtPair sp = pd_sqrt_pair(model.EtaMat.top_left(model.N - 2));
  ComplexMatrix hh =
      sp.sqrt * model.Hmat.top_left(model.N - 2) * sp.inv_sqrt;
  hh = 0.5 * (hh + hh.adjoint());
  EigenDecomposition d = hermitian_eigen(hh);
  double worst = 0.0;
  for (std::size_t n = 0; n <= 10; ++n) {
    const double exact = swanson_energy(model.params, n);
    worst = std::max(worst, std::abs(d.eigenvalues[n] - exact) / exact);
  }
  report(1, "Swanson interior spectrum", worst <= 1e-6, worst, 1e-6);
}

void criterion_2_eta_orthonormality() {
  auto model = build_model(reference_params(), 64, 160);
  auto grid = gauss_hermite(128);
  double worst = 0.0;
  for (std::size_t n = 0; n <= 20; ++n)
    for (std::size_t m = n; m <= 20; ++m) {
      const cplx g = integrate(
          grid,
          [&](double x) {
            return cplx{eigenfunction_U(model, n, x) * metric_at(model, x) *
                            eigenfunction_U(model, m, x),
                        0.0};
          },
          model.Lcap);
      worst = std::max(worst, std::abs(g - (n == m ? 1.0 : 0.0)));
    }
  report(2, "eta-orthonormality of eigenfunctions", worst <= 1e-8, worst, 1e-8);
}

void criterion_3_quasi_hermiticity() {
  double worst = 0.0;

  auto hand_metric = MetricOperator::make(ComplexMatrix(2, 2, {1, -1, -1, 2}));
  worst = std::max(worst, quasi_hermiticity_residual(
                              hand_metric, ComplexMatrix(2, 2, {1, 1, 0, 2})));

  std::mt19937_64 rng(1001);
  for (int rep = 0; rep < 50; ++rep) {
    const std::size_t n = 2 + rep % 7;
    auto sys = construct_system(n, rng);
    worst = std::max(worst, quasi_hermiticity_residual(sys.metric, sys.a));
  }
  bool pass = worst <= 1e-10;

  auto model = build_model(reference_params(), 64, 160);
  double worst_swanson = 0.0;
  for (const ComplexMatrix* op : {&model.Xmat, &model.Pmat, &model.Hmat}) {
    const ComplexMatrix r = op->adjoint() * model.EtaMat - model.EtaMat * *op;
    worst_swanson =
        std::max(worst_swanson, r.top_left(model.N - 2).frobenius_norm() /
                                    (op->frobenius_norm() *
                                     model.EtaMat.frobenius_norm()));
  }
  pass = pass && worst_swanson <= 1e-8;
  report(3, "quasi-Hermiticity residuals", pass,
         std::max(worst, worst_swanson), 1e-8);
}

void criterion_4_biorthogonality() {
  std::mt19937_64 rng(2002);
  double worst = 0.0;
  for (std::size_t n : {2, 4, 8, 12, 16}) {
    auto sys = construct_system(n, rng);
    auto basis = diagonalize(QuasiHermitianSystem::make(sys.a, sys.metric));
    const ComplexMatrix gram = basis.eta_kets.adjoint() * basis.h_kets;
    worst = std::max(
        worst, (gram - ComplexMatrix::identity(n)).frobenius_norm());
    worst = std::max(worst, completeness_residual(basis));
  }
  report(4, "bi-orthogonal completeness/orthonormality", worst <= 1e-10, worst,
         1e-10);
}

void criterion_5_spectral_expansion() {
  std::mt19937_64 rng(3003);
  double worst = 0.0;
  for (int rep = 0; rep < 100; ++rep) {
    const std::size_t n = 2 + rep % 7;
    auto sys = construct_system(n, rng);
    auto basis = diagonalize(QuasiHermitianSystem::make(sys.a, sys.metric));
    const ComplexVector phi = random_vector(n, rng);
    const double scale = sys.a.frobenius_norm() * norm2(phi);
    worst = std::max(worst,
                     vec_distance(apply_spectral(basis, phi, SpectralSide::A),
                                  sys.a * phi) /
                         scale);
    worst = std::max(
        worst, vec_distance(apply_spectral(basis, phi, SpectralSide::A_dagger),
                            sys.a.adjoint() * phi) /
                   scale);
  }
  bool pass = worst <= 1e-10;

  auto model = build_model(reference_params(), 64, 160);
  ComplexVector coeffs(model.N);
  for (std::size_t k = 0; k < model.N; ++k)
    coeffs[k] = integrate(
        model.grid,
        [&](double x) {
          return cplx{hermite_function(k, x, model.Lcap) * std::exp(-0.5 * x * x),
                      0.0};
        },
        model.Lcap);
  auto interior_err = [&](const ComplexVector& x, const ComplexVector& y) {
    double s = 0.0;
    for (std::size_t i = 0; i + 2 < model.N; ++i) s += std::norm(x[i] - y[i]);
    return std::sqrt(s) / norm2(coeffs);
  };
  const double sw = std::max(
      interior_err(spectral_apply(model, coeffs, SwansonSide::H),
                   model.Hmat * coeffs),
      interior_err(spectral_apply(model, coeffs, SwansonSide::H_dagger),
                   model.Hdagmat * coeffs));
  pass = pass && sw <= 1e-6;
  report(5, "spectral-expansion equivalence", pass, std::max(worst, sw), 1e-6);
}

void criterion_6_metric_recovery() {
  std::mt19937_64 rng(4004);
  double worst = 0.0;
  bool pass = true;
  for (int rep = 0; rep < 20; ++rep) {
    const std::size_t n = 2 + rep % 7;
    auto sys = construct_system(n, rng, /*distinct_spectrum=*/true);
    try {
      auto sol = solve_metric(sys.a, 1000, 5000 + rep);
      worst = std::max(worst, sol.residual);
    } catch (const MetricNotFound&) {
      pass = false;
    }
  }
  pass = pass && worst <= 1e-9;

  bool rejected = false;
  try {
    solve_metric(ComplexMatrix(2, 2, {0, 1, -1, 0}), 500, 1);
  } catch (const MetricNotFound&) {
    rejected = true;
  }
  report(6, "metric recovery and nonexistence", pass && rejected, worst, 1e-9);
}

void criterion_7_transformation() {
  double worst_conj = 0.0, worst_round = 0.0;

  auto eval = [&](const HermitianBasis& hb, const BiorthogonalBasis& bb,
                  const MetricOperator& m) {
    auto t = build_table(hb, bb, m);
    const ComplexMatrix rev_eta = bb.h_kets.adjoint() * m.eta() * hb.kets;
    const ComplexMatrix rev_h = bb.h_kets.adjoint() * hb.kets;
    const ComplexMatrix de = rev_eta - t.factors_eta.adjoint();
    const ComplexMatrix dh = rev_h - t.factors_h.adjoint();
    for (std::size_t i = 0; i < de.rows(); ++i)
      for (std::size_t j = 0; j < de.cols(); ++j) {
        worst_conj = std::max(worst_conj, std::abs(de(i, j)));
        worst_conj = std::max(worst_conj, std::abs(dh(i, j)));
      }
    worst_round = std::max(worst_round, roundtrip_residual(t));
  };

  // Hand example.
  {
    auto m = MetricOperator::make(ComplexMatrix(2, 2, {1, -1, -1, 2}));
    BiorthogonalBasis bb;
    bb.eigenvalues = {1.0, 2.0};
    bb.h_kets = ComplexMatrix(2, 2, {1, 1, 0, 1});
    bb.eta_kets = ComplexMatrix(2, 2, {1, 0, -1, 1});
    eval(HermitianBasis::from_operator(ComplexMatrix(2, 2, {0, 1, 1, 0})), bb, m);
  }

  std::mt19937_64 rng(5005);
  for (int rep = 0; rep < 20; ++rep) {
    const std::size_t n = 2 + rep % 6;
    auto sys = construct_system(n, rng);
    auto bb = diagonalize(QuasiHermitianSystem::make(sys.a, sys.metric));
    eval(HermitianBasis::from_operator(random_hermitian(n, rng)), bb, sys.metric);
  }
  report(7, "transformation theory", worst_conj <= 1e-12 && worst_round <= 1e-10,
         std::max(worst_conj, worst_round), 1e-10);
}

void criterion_8_trivial_limit() {
  std::mt19937_64 rng(6006);
  double worst = 0.0;
  const std::size_t n = 5;
  auto id = MetricOperator::make(ComplexMatrix::identity(n));

  const ComplexVector phi = random_vector(n, rng), psi = random_vector(n, rng);
  worst = std::max(worst, std::abs(eta_inner(id, phi, psi) - dot(phi, psi)));
  worst = std::max(
      worst, vec_distance(apply_metric(id, phi, MetricDirection::forward), phi));
  worst = std::max(
      worst, vec_distance(apply_metric(id, phi, MetricDirection::inverse), phi));

  const ComplexMatrix a = random_matrix(n, rng);
  worst = std::max(worst, (eta_adjoint(id, a) - a.adjoint()).frobenius_norm());

  const ComplexMatrix h = random_hermitian(n, rng);
  auto basis = diagonalize(QuasiHermitianSystem::make(h, id));
  worst = std::max(worst, (basis.h_kets - basis.eta_kets).frobenius_norm());
  worst = std::max(worst, vec_distance(expand_coefficients(basis, phi),
                                       basis.h_kets.adjoint() * phi));

  HermitianBasis hb{basis.eigenvalues, basis.h_kets};
  auto t = build_table(hb, basis, id);
  worst = std::max(worst, (t.factors_eta - t.factors_h).frobenius_norm());

  report(8, "trivial-limit collapse at eta = I", worst <= 1e-14, worst, 1e-14);
}

void criterion_9_cli_determinism() {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "metriq_acceptance";
  fs::create_directories(dir);
  const fs::path a = dir / "a.json";
  save_matrix(a.string(), ComplexMatrix(2, 2, {1, 1, 0, 2}));

  auto run_once = [&]() {
    std::ostringstream out, err;
    cli::run({"solve-metric", "--input", a.string(), "--seed", "77"}, out, err);
    return std::regex_replace(out.str(), std::regex("\"timing_ms\": [0-9.]+"),
                              "\"timing_ms\": X");
  };
  const std::string r1 = run_once(), r2 = run_once();
  const bool pass = !r1.empty() && r1 == r2;
  report(9, "CLI determinism", pass, pass ? 0.0 : 1.0, 0.0);
}

}  // namespace

int main() {
  criterion_1_swanson_spectrum();
  criterion_2_eta_orthonormality();
  criterion_3_quasi_hermiticity();
  criterion_4_biorthogonality();
  criterion_5_spectral_expansion();
  criterion_6_metric_recovery();
  criterion_7_transformation();
  criterion_8_trivial_limit();
  criterion_9_cli_determinism();
  if (failures == 0)
    std::cout << "all acceptance criteria passed\n";
  else
    std::cout << failures << " acceptance criteria FAILED\n";
  return failures == 0 ? 0 : 1;
}
