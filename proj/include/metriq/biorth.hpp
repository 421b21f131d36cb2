#pragma once

#include <vector>

#include "metriq/metric.hpp"

namespace metriq {

// A non-Hermitian operator A paired with a metric under which it is
// quasi-Hermitian: A^dag eta = eta A within tolerance.
struct QuasiHermitianSystem {
  ComplexMatrix a;
  MetricOperator metric;
  double residual;

  static QuasiHermitianSystem make(const ComplexMatrix& a,
                                   const MetricOperator& metric,
                                   double max_residual = 1e-9);
};

// Real eigenvalues of A with the paired ket families: plain eigenvectors v_n
// and their metric images eta v_n.  Together they form a complete
// bi-orthogonal system: (eta v_m)^dag v_n = delta_mn and
// sum_n v_n (eta v_n)^dag = I.
struct BiorthogonalBasis {
  std::vector<double> eigenvalues;
  ComplexMatrix h_kets;                 // columns v_n
  ComplexMatrix eta_kets;               // columns eta v_n
  ComplexMatrix hermitian_counterpart;  // h = rho A rho^{-1}
};

enum class SpectralSide { A, A_dagger };

// Diagonalize through the similarity route h = rho A rho^{-1}; the real
// spectrum and bi-orthogonality come from the Hermitian decomposition of h.
BiorthogonalBasis diagonalize(const QuasiHermitianSystem& sys);

// Expansion coefficients c_n = (eta v_n)^dag phi.
ComplexVector expand_coefficients(const BiorthogonalBasis& basis,
                                  const ComplexVector& phi);

// sum_n c_n v_n.
ComplexVector reconstruct(const BiorthogonalBasis& basis, const ComplexVector& coeffs);

// Spectral action of A (or A^dag) on phi through the bi-orthogonal expansion.
ComplexVector apply_spectral(const BiorthogonalBasis& basis, const ComplexVector& phi,
                             SpectralSide which);

// O = rho^{-1} o rho for Hermitian o; the image is quasi-Hermitian with the
// same spectrum.
ComplexMatrix observable_from_hermitian(const MetricOperator& m,
                                        const ComplexMatrix& o);

// max over both orderings of || sum_n (ket)(bra) - I ||_F.
double completeness_residual(const BiorthogonalBasis& basis);

}  // namespace metriq
