#include "metriq/intertwiner.hpp"

#include <cmath>
#include <random>

namespace metriq {

namespace {

ComplexMatrix reshape(const ComplexVector& v, std::size_t d) {
  ComplexMatrix m(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) m(i, j) = v[i * d + j];
  return m;
}

// Real inner product on the space of Hermitian matrices.
double herm_dot(const ComplexMatrix& x, const ComplexMatrix& y) {
  double s = 0.0;
  for (std::size_t i = 0; i < x.entries().size(); ++i)
    s += (std::conj(x.entries()[i]) * y.entries()[i]).real();
  return s;
}

bool is_positive_definite(const ComplexMatrix& h) {
  EigenDecomposition d = hermitian_eigen(0.5 * (h + h.adjoint()));
  const double lmax = d.eigenvalues.back();
  return lmax > 0.0 && d.eigenvalues.front() > 1e-12 * lmax;
}

// Bit-stable uniform draw on (0, 1].
double uniform01(std::mt19937_64& rng) {
  return static_cast<double>((rng() >> 11) + 1) * 0x1.0p-53;
}

}  // namespace

ComplexMatrix canonicalize_metric(const ComplexMatrix& eta) {
  if (!eta.is_hermitian())
    throw NotPositiveDefinite("canonicalize_metric: eta must be Hermitian");
  if (!is_positive_definite(eta))
    throw NotPositiveDefinite("canonicalize_metric: eta must be positive-definite");
  const double tr = eta.trace().real();
  return (static_cast<double>(eta.rows()) / tr) * eta;
}

IntertwinerSolution solve_metric(const ComplexMatrix& a, std::size_t trials,
                                 std::uint64_t seed) {
  if (a.rows() != a.cols())
    throw DimensionMismatch("solve_metric: A must be square");
  const std::size_t d = a.rows();
  if (d > 32) throw DimensionTooLarge("solve_metric: dim exceeds 32");

  // Vectorized intertwining map K acting on vec(X): A^dag X - X A.
  const ComplexMatrix adag = a.adjoint();
  ComplexMatrix k(d * d, d * d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t l = 0; l < d; ++l) {
        k(i * d + j, l * d + j) += adag(i, l);
        k(i * d + j, i * d + l) -= a(l, j);
      }

  std::vector<ComplexVector> null = nullspace_gram(k, 1e-10);

  // Project onto Hermitian matrices and orthonormalize; the null space is
  // closed under X -> X^dag, so Hermitian and anti-Hermitian parts span it.
  std::vector<ComplexMatrix> basis;
  for (const ComplexVector& v : null) {
    const ComplexMatrix b = reshape(v, d);
    const ComplexMatrix parts[2] = {0.5 * (b + b.adjoint()),
                                    cplx{0.0, -0.5} * (b - b.adjoint())};
    for (ComplexMatrix cand : parts) {
      if (cand.frobenius_norm() < 1e-10) continue;
      for (const ComplexMatrix& e : basis) cand -= herm_dot(e, cand) * e;
      const double nrm = cand.frobenius_norm();
      if (nrm < 1e-8) continue;
      basis.push_back((1.0 / nrm) * cand);
    }
  }

  auto accept = [&](const ComplexMatrix& eta_raw) -> IntertwinerSolution {
    ComplexMatrix eta = canonicalize_metric(0.5 * (eta_raw + eta_raw.adjoint()));
    MetricOperator metric = MetricOperator::make(eta);
    return {metric, quasi_hermiticity_residual(metric, a), basis.size()};
  };

  // A Hermitian input admits the identity; prefer that canonical member.
  if (a.is_hermitian()) return accept(ComplexMatrix::identity(d));

  for (const ComplexMatrix& b : basis) {
    if (is_positive_definite(b)) return accept(b);
    if (is_positive_definite(-1.0 * b)) return accept(-1.0 * b);
  }

  // Seeded random-restart search for a positive-definite combination.  Plain
  // rejection sampling is hopeless when the positive cone occupies a sliver
  // of coefficient space, so each restart climbs the smallest eigenvalue:
  // lambda_min(sum_k c_k B_k) is concave in c and its subgradient in c_k is
  // z^dag B_k z with z the bottom eigenvector.
  if (basis.size() > 1) {
    std::mt19937_64 rng(seed);
    constexpr std::size_t kClimbSteps = 60;
    const std::size_t restarts = std::max<std::size_t>(1, trials / kClimbSteps);
    std::vector<double> c(basis.size());
    for (std::size_t restart = 0; restart < restarts; ++restart) {
      for (double& x : c)
        x = ((rng() & 1) ? 1.0 : -1.0) * uniform01(rng);
      for (std::size_t step = 0; step <= kClimbSteps; ++step) {
        double nrm = 0.0;
        for (double x : c) nrm += x * x;
        nrm = std::sqrt(nrm);
        ComplexMatrix cand(d, d);
        for (std::size_t k = 0; k < basis.size(); ++k)
          cand += (c[k] / nrm) * basis[k];
        cand = 0.5 * (cand + cand.adjoint());
        EigenDecomposition dec = hermitian_eigen(cand);
        if (dec.eigenvalues.front() > 1e-8 * std::abs(dec.eigenvalues.back()))
          return accept(cand);
        if (step == kClimbSteps) break;
        const ComplexVector z = dec.eigenvectors.column(0);
        const double rate = 0.5 / (1.0 + static_cast<double>(step));
        for (std::size_t k = 0; k < basis.size(); ++k) {
          const cplx g = dot(z, basis[k] * z);
          c[k] = c[k] / nrm + rate * g.real();
        }
      }
    }
  }

  throw MetricNotFound(
      basis.size() <= 1
          ? "solve_metric: no positive-definite intertwiner exists"
          : "solve_metric: no positive-definite combination found within budget");
}

}  // namespace metriq
