#pragma once

#include "metriq/eigen.hpp"
#include "metriq/matrix.hpp"

namespace metriq {

// Positive-definite Hermitian metric eta with its similarity factors
// rho = eta^{1/2}, rho^{-1} and eta^{-1} precomputed on construction.
class MetricOperator {
 public:
  static MetricOperator make(const ComplexMatrix& eta);

  const ComplexMatrix& eta() const { return eta_; }
  const ComplexMatrix& rho() const { return rho_; }
  const ComplexMatrix& rho_inv() const { return rho_inv_; }
  const ComplexMatrix& eta_inv() const { return eta_inv_; }
  std::size_t dim() const { return eta_.rows(); }

 private:
  MetricOperator(ComplexMatrix eta, ComplexMatrix rho, ComplexMatrix rho_inv,
                 ComplexMatrix eta_inv);
  ComplexMatrix eta_, rho_, rho_inv_, eta_inv_;
};

// A coordinate vector together with its metric image eta * v; the ket in
// both representations of the same state.
struct KetPair {
  ComplexVector h_ket;
  ComplexVector eta_ket;
};

KetPair make_ket_pair(const MetricOperator& m, const ComplexVector& h_ket);

enum class MetricDirection { forward, inverse };

// <phi, psi>_eta = phi^dag eta psi.
cplx eta_inner(const MetricOperator& m, const ComplexVector& phi,
               const ComplexVector& psi);

// forward: eta * k (plain ket -> metric ket); inverse: eta^{-1} * k.
ComplexVector apply_metric(const MetricOperator& m, const ComplexVector& k,
                           MetricDirection direction);

// eta^{-1} A^dag eta; an involution.
ComplexMatrix eta_adjoint(const MetricOperator& m, const ComplexMatrix& a);

// ||A^dag eta - eta A||_F / (||A||_F ||eta||_F); zero exactly when A is
// quasi-Hermitian with respect to eta.
double quasi_hermiticity_residual(const MetricOperator& m, const ComplexMatrix& a);

}  // namespace metriq
