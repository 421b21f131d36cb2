#pragma once

#include <functional>
#include <vector>

#include "metriq/matrix.hpp"

namespace metriq {

// Gauss-Hermite rule for the weight e^{-t^2}: nodes symmetric about zero,
// weights summing to sqrt(pi), exact for polynomials of degree <= 2n-1.
// scaled_weights holds w_k e^{+t_k^2}, computed directly from the Christoffel
// function 1 / sum_j u_j(t_k)^2 so the tail values stay fully accurate; the
// naive product w_k e^{+t_k^2} loses all precision once w_k is subnormal.
struct QuadratureGrid {
  std::vector<double> nodes;
  std::vector<double> weights;
  std::vector<double> scaled_weights;
};

// Golub-Welsch on the symmetric tridiagonal Jacobi matrix, reusing the shared
// Hermitian eigensolver.  1 <= n <= 512.
QuadratureGrid gauss_hermite(std::size_t n);

// Physicists' Hermite polynomial H_n(x) by the three-term recurrence.
double hermite_poly(std::size_t n, double x);

// Normalized oscillator eigenfunction
//   u_n(x) = sqrt(2^{-n} / (sqrt(pi) n! L)) e^{-x^2/2L^2} H_n(x/L),
// evaluated through a normalized recurrence so large n does not overflow.
double hermite_function(std::size_t n, double x, double length);

// scale * sum_k w_k e^{+t_k^2} f(scale * t_k): the Gaussian weight is divided
// back out, so f must carry its own decay (strictly faster than e^{-x^2} over
// the scaled range).
cplx integrate(const QuadratureGrid& grid, const std::function<cplx(double)>& f,
               double scale);

}  // namespace metriq
