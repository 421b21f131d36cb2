#include "metriq/metric.hpp"

#include <utility>

namespace metriq {

MetricOperator::MetricOperator(ComplexMatrix eta, ComplexMatrix rho,
                               ComplexMatrix rho_inv, ComplexMatrix eta_inv)
    : eta_(std::move(eta)),
      rho_(std::move(rho)),
      rho_inv_(std::move(rho_inv)),
      eta_inv_(std::move(eta_inv)) {}

MetricOperator MetricOperator::make(const ComplexMatrix& eta) {
  if (eta.rows() != eta.cols())
    throw NotHermitian("make_metric: eta must be square");
  if (!eta.is_hermitian())
    throw NotHermitian("make_metric: eta must be Hermitian");
  SqrtPair p = pd_sqrt_pair(eta);
  ComplexMatrix eta_inv = p.inv_sqrt * p.inv_sqrt;
  return MetricOperator(eta, std::move(p.sqrt), std::move(p.inv_sqrt),
                        std::move(eta_inv));
}

KetPair make_ket_pair(const MetricOperator& m, const ComplexVector& h_ket) {
  if (h_ket.size() != m.dim())
    throw DimensionMismatch("make_ket_pair: dimension mismatch");
  return {h_ket, m.eta() * h_ket};
}

cplx eta_inner(const MetricOperator& m, const ComplexVector& phi,
               const ComplexVector& psi) {
  if (phi.size() != m.dim() || psi.size() != m.dim())
    throw DimensionMismatch("eta_inner: dimension mismatch");
  return dot(phi, m.eta() * psi);
}

ComplexVector apply_metric(const MetricOperator& m, const ComplexVector& k,
                           MetricDirection direction) {
  if (k.size() != m.dim())
    throw DimensionMismatch("apply_metric: dimension mismatch");
  return direction == MetricDirection::forward ? m.eta() * k : m.eta_inv() * k;
}

ComplexMatrix eta_adjoint(const MetricOperator& m, const ComplexMatrix& a) {
  if (a.rows() != a.cols() || a.rows() != m.dim())
    throw DimensionMismatch("eta_adjoint: dimension mismatch");
  return m.eta_inv() * a.adjoint() * m.eta();
}

double quasi_hermiticity_residual(const MetricOperator& m, const ComplexMatrix& a) {
  if (a.rows() != a.cols() || a.rows() != m.dim())
    throw DimensionMismatch("quasi_hermiticity_residual: dimension mismatch");
  const double denom = a.frobenius_norm() * m.eta().frobenius_norm();
  if (denom == 0.0) return 0.0;
  return (a.adjoint() * m.eta() - m.eta() * a).frobenius_norm() / denom;
}

}  // namespace metriq
