#include "metriq/biorth.hpp"

#include <algorithm>

namespace metriq {

QuasiHermitianSystem QuasiHermitianSystem::make(const ComplexMatrix& a,
                                                const MetricOperator& metric,
                                                double max_residual) {
  const double r = quasi_hermiticity_residual(metric, a);
  if (r > max_residual)
    throw SimilarityNotHermitian(
        "QuasiHermitianSystem: quasi-Hermiticity residual too large");
  return {a, metric, r};
}

BiorthogonalBasis diagonalize(const QuasiHermitianSystem& sys) {
  const MetricOperator& m = sys.metric;
  ComplexMatrix h = m.rho() * sys.a * m.rho_inv();
  if (h.hermiticity_residual() > 1e-9)
    throw SimilarityNotHermitian("diagonalize: rho A rho^{-1} is not Hermitian");
  h = 0.5 * (h + h.adjoint());

  EigenDecomposition d = hermitian_eigen(h);
  BiorthogonalBasis basis;
  basis.eigenvalues = d.eigenvalues;
  basis.h_kets = m.rho_inv() * d.eigenvectors;
  basis.eta_kets = m.rho() * d.eigenvectors;  // eta v_n = rho^2 rho^{-1} w_n
  basis.hermitian_counterpart = h;
  return basis;
}

ComplexVector expand_coefficients(const BiorthogonalBasis& basis,
                                  const ComplexVector& phi) {
  return basis.eta_kets.adjoint() * phi;
}

ComplexVector reconstruct(const BiorthogonalBasis& basis, const ComplexVector& coeffs) {
  return basis.h_kets * coeffs;
}

ComplexVector apply_spectral(const BiorthogonalBasis& basis, const ComplexVector& phi,
                             SpectralSide which) {
  const std::size_t n = basis.eigenvalues.size();
  if (phi.size() != n) throw DimensionMismatch("apply_spectral: dimension mismatch");
  if (which == SpectralSide::A) {
    ComplexVector c = expand_coefficients(basis, phi);
    for (std::size_t i = 0; i < n; ++i) c[i] *= basis.eigenvalues[i];
    return reconstruct(basis, c);
  }
  // A^dag phi = sum_n lambda_n (v_n^dag phi) eta v_n
  ComplexVector c = basis.h_kets.adjoint() * phi;
  for (std::size_t i = 0; i < n; ++i) c[i] *= basis.eigenvalues[i];
  return basis.eta_kets * c;
}

ComplexMatrix observable_from_hermitian(const MetricOperator& m,
                                        const ComplexMatrix& o) {
  if (o.rows() != o.cols() || o.rows() != m.dim())
    throw DimensionMismatch("observable_from_hermitian: dimension mismatch");
  if (!o.is_hermitian())
    throw NotHermitian("observable_from_hermitian: o must be Hermitian");
  return m.rho_inv() * o * m.rho();
}

double completeness_residual(const BiorthogonalBasis& basis) {
  const std::size_t n = basis.eigenvalues.size();
  const ComplexMatrix eye = ComplexMatrix::identity(n);
  const double r1 =
      (basis.h_kets * basis.eta_kets.adjoint() - eye).frobenius_norm();
  const double r2 =
      (basis.eta_kets * basis.h_kets.adjoint() - eye).frobenius_norm();
  return std::max(r1, r2);
}

}  // namespace metriq
