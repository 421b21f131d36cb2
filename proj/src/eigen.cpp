#include "metriq/eigen.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace metriq {

namespace {

constexpr int kMaxSweeps = 64;
constexpr double kOffdiagTol = 1e-13;

double offdiag_norm(const ComplexMatrix& a) {
  const std::size_t n = a.rows();
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) s += std::norm(a(i, j));
  return std::sqrt(s);
}

// One complex Jacobi rotation annihilating a(p,q); updates a and the
// accumulated eigenvector matrix v in place.
void rotate(ComplexMatrix& a, ComplexMatrix& v, std::size_t p, std::size_t q) {
  const cplx b = a(p, q);
  const double ab = std::abs(b);
  if (ab == 0.0) return;
  const cplx phase = b / ab;  // e^{i phi}

  const double app = a(p, p).real();
  const double aqq = a(q, q).real();
  const double tau = (aqq - app) / (2.0 * ab);
  double t;
  if (tau >= 0.0)
    t = 1.0 / (tau + std::sqrt(1.0 + tau * tau));
  else
    t = -1.0 / (-tau + std::sqrt(1.0 + tau * tau));
  const double c = 1.0 / std::sqrt(1.0 + t * t);
  const double s = t * c;
  const cplx sp = s * phase;             // s e^{i phi}
  const cplx spc = s * std::conj(phase); // s e^{-i phi}
  const cplx cpc = c * std::conj(phase); // c e^{-i phi}

  const std::size_t n = a.rows();
  // A <- U^dag A U, U differing from I only in the (p,q) block.
  for (std::size_t i = 0; i < n; ++i) {
    const cplx aip = a(i, p), aiq = a(i, q);
    a(i, p) = aip * c - aiq * spc;
    a(i, q) = aip * s + aiq * cpc;
  }
  for (std::size_t j = 0; j < n; ++j) {
    const cplx apj = a(p, j), aqj = a(q, j);
    a(p, j) = c * apj - sp * aqj;
    a(q, j) = s * apj + c * phase * aqj;
  }
  a(p, q) = 0.0;
  a(q, p) = 0.0;
  a(p, p) = cplx{a(p, p).real(), 0.0};
  a(q, q) = cplx{a(q, q).real(), 0.0};

  for (std::size_t i = 0; i < n; ++i) {
    const cplx vip = v(i, p), viq = v(i, q);
    v(i, p) = vip * c - viq * spc;
    v(i, q) = vip * s + viq * cpc;
  }
}

void fix_column_phase(ComplexMatrix& v, std::size_t j) {
  for (std::size_t i = 0; i < v.rows(); ++i) {
    const double mag = std::abs(v(i, j));
    if (mag > 1e-8) {
      const cplx u = std::conj(v(i, j)) / mag;
      for (std::size_t k = 0; k < v.rows(); ++k) v(k, j) *= u;
      return;
    }
  }
}

}  // namespace

EigenDecomposition hermitian_eigen(const ComplexMatrix& m) {
  if (m.rows() != m.cols())
    throw NotHermitian("hermitian_eigen: matrix is not square");
  const double nrm = m.frobenius_norm();
  if ((m - m.adjoint()).frobenius_norm() > 1e-12 * nrm)
    throw NotHermitian("hermitian_eigen: matrix is not Hermitian");

  const std::size_t n = m.rows();
  // Symmetrize to strip representational roundoff before sweeping.
  ComplexMatrix a = 0.5 * (m + m.adjoint());
  ComplexMatrix v = ComplexMatrix::identity(n);

  const double target = kOffdiagTol * nrm;
  bool converged = nrm == 0.0 || offdiag_norm(a) <= target;
  for (int sweep = 0; sweep < kMaxSweeps && !converged; ++sweep) {
    for (std::size_t p = 0; p + 1 < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) rotate(a, v, p, q);
    converged = offdiag_norm(a) <= target;
  }
  if (!converged)
    throw NoConvergence("hermitian_eigen: Jacobi sweep limit exceeded");

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    return a(i, i).real() < a(j, j).real();
  });

  EigenDecomposition d;
  d.eigenvalues.resize(n);
  d.eigenvectors = ComplexMatrix(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    d.eigenvalues[k] = a(order[k], order[k]).real();
    d.eigenvectors.set_column(k, v.column(order[k]));
    fix_column_phase(d.eigenvectors, k);
  }
  return d;
}

SqrtPair pd_sqrt_pair(const ComplexMatrix& m) {
  EigenDecomposition d = hermitian_eigen(m);
  const std::size_t n = m.rows();
  const double lmax = n == 0 ? 0.0 : d.eigenvalues.back();
  for (double lam : d.eigenvalues)
    if (lam <= 1e-12 * lmax || lmax <= 0.0)
      throw NotPositiveDefinite("pd_sqrt_pair: eigenvalue below threshold");

  ComplexMatrix s(n, n), si(n, n);
  const ComplexMatrix& vecs = d.eigenvectors;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      cplx acc_s = 0.0, acc_i = 0.0;
      for (std::size_t k = 0; k < n; ++k) {
        const double r = std::sqrt(d.eigenvalues[k]);
        const cplx w = vecs(i, k) * std::conj(vecs(j, k));
        acc_s += r * w;
        acc_i += w / r;
      }
      s(i, j) = acc_s;
      si(i, j) = acc_i;
    }
  return {std::move(s), std::move(si)};
}

std::vector<ComplexVector> nullspace_gram(const ComplexMatrix& k, double threshold) {
  if (threshold <= 0.0)
    throw InvalidParameters("nullspace_gram: threshold must be positive");
  ComplexMatrix gram = k.adjoint() * k;
  EigenDecomposition d = hermitian_eigen(gram);
  const double lmax = d.eigenvalues.empty() ? 0.0 : d.eigenvalues.back();
  // The cutoff is relative to the largest Gram eigenvalue.  Squaring the
  // threshold instead would put it below the eigensolver's noise floor and
  // genuine null vectors would be dropped.
  const double cutoff = threshold * lmax;
  std::vector<ComplexVector> basis;
  for (std::size_t i = 0; i < d.eigenvalues.size(); ++i)
    if (d.eigenvalues[i] <= cutoff) basis.push_back(d.eigenvectors.column(i));
  return basis;
}

}  // namespace metriq
