#include "metriq/transform.hpp"

namespace metriq {

HermitianBasis HermitianBasis::from_operator(const ComplexMatrix& b) {
  EigenDecomposition d = hermitian_eigen(b);
  return {d.eigenvalues, d.eigenvectors};
}

TransformTable build_table(const HermitianBasis& hb, const BiorthogonalBasis& bb,
                           const MetricOperator& m) {
  if (hb.kets.rows() != m.dim() || bb.h_kets.rows() != m.dim())
    throw DimensionMismatch("build_table: dimension mismatch");
  TransformTable t;
  t.factors_eta = hb.kets.adjoint() * bb.eta_kets;
  t.factors_h = hb.kets.adjoint() * bb.h_kets;
  t.b_eigenvalues = hb.eigenvalues;
  t.a_eigenvalues = bb.eigenvalues;
  return t;
}

ComplexVector change_representation(const TransformTable& t,
                                    const ComplexVector& coeffs,
                                    TransformDirection direction) {
  if (direction == TransformDirection::lambda_to_omega) {
    if (coeffs.size() != t.factors_eta.cols())
      throw DimensionMismatch("change_representation: length mismatch");
    return t.factors_eta * coeffs;
  }
  if (coeffs.size() != t.factors_h.rows())
    throw DimensionMismatch("change_representation: length mismatch");
  return t.factors_h.adjoint() * coeffs;
}

double roundtrip_residual(const TransformTable& t) {
  const std::size_t n = t.a_eigenvalues.size();
  return (t.factors_h.adjoint() * t.factors_eta - ComplexMatrix::identity(n))
      .frobenius_norm();
}

}  // namespace metriq
