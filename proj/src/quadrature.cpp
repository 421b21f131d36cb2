#include "metriq/quadrature.hpp"

#include <cmath>

#include "metriq/eigen.hpp"

namespace metriq {

namespace {

// Runs the normalized oscillator-eigenfunction recurrence up to degree n at
// abscissa t, carrying an explicit power-of-two exponent so nothing under- or
// overflows even near t = 32.  Returns the mantissas of u_n and u_{n-1} at a
// common scale (their ratio is exact) and the Christoffel sum
// sum_{j<n} u_j(t)^2 assembled from consistently scaled squares.
struct HermiteLadder {
  double last;      // u_n * 2^{-exp2}
  double prev;      // u_{n-1} * 2^{-exp2}
  double chris;     // sum_{j<n} u_j^2 * 2^{-2 exp2}
  int exp2;
};

HermiteLadder hermite_ladder(std::size_t n, double t) {
  constexpr double kLn2 = 0.69314718055994530942;
  HermiteLadder l{};
  l.exp2 = static_cast<int>(std::lround(-0.5 * t * t / kLn2));
  double um1 = std::pow(M_PI, -0.25) *
               std::exp(-0.5 * t * t - static_cast<double>(l.exp2) * kLn2);
  double um2 = 0.0;
  l.chris = um1 * um1;
  for (std::size_t k = 1; k <= n; ++k) {
    const double dk = static_cast<double>(k);
    const double u =
        t * std::sqrt(2.0 / dk) * um1 - std::sqrt((dk - 1.0) / dk) * um2;
    um2 = um1;
    um1 = u;
    if (k < n) l.chris += u * u;
    if (std::abs(um1) > 0x1p300) {
      um1 = std::ldexp(um1, -300);
      um2 = std::ldexp(um2, -300);
      l.chris = std::ldexp(l.chris, -600);
      l.exp2 += 300;
    }
  }
  l.last = um1;
  l.prev = um2;
  return l;
}

}  // namespace

QuadratureGrid gauss_hermite(std::size_t n) {
  if (n < 1 || n > 512)
    throw SizeOutOfRange("gauss_hermite: node count out of [1, 512]");

  // Jacobi matrix of the Hermite weight: zero diagonal, off-diagonal sqrt(k/2).
  ComplexMatrix j(n, n);
  for (std::size_t k = 1; k < n; ++k) {
    const double b = std::sqrt(0.5 * static_cast<double>(k));
    j(k - 1, k) = b;
    j(k, k - 1) = b;
  }
  EigenDecomposition d = hermitian_eigen(j);

  QuadratureGrid g;
  g.nodes.resize(n);
  g.weights.resize(n);
  g.scaled_weights.resize(n);
  for (std::size_t k = 0; k < n; ++k) g.nodes[k] = d.eigenvalues[k];
  // Enforce the exact +/- symmetry of the rule.
  for (std::size_t k = 0; k < n / 2; ++k) {
    const std::size_t r = n - 1 - k;
    const double t = 0.5 * (g.nodes[r] - g.nodes[k]);
    g.nodes[k] = -t;
    g.nodes[r] = t;
  }
  if (n % 2 == 1) g.nodes[n / 2] = 0.0;

  const double dn = static_cast<double>(n);
  for (std::size_t k = n / 2; k < n; ++k) {
    // Polish the eigenvalue with Newton steps on the degree-n eigenfunction;
    // the common exponent cancels in the ratio u_n / u_{n-1}.
    double t = g.nodes[k];
    if (t != 0.0) {
      for (int iter = 0; iter < 2; ++iter) {
        const HermiteLadder l = hermite_ladder(n, t);
        t -= l.last / (std::sqrt(2.0 * dn) * l.prev);
      }
    }
    const HermiteLadder l = hermite_ladder(n, t);
    const double scaled = std::ldexp(1.0 / l.chris, -2 * l.exp2);
    const std::size_t mirror = n - 1 - k;
    g.nodes[k] = t;
    g.nodes[mirror] = -t;
    g.scaled_weights[k] = scaled;
    g.scaled_weights[mirror] = scaled;
    const double w = scaled * std::exp(-t * t);
    g.weights[k] = w;
    g.weights[mirror] = w;
  }
  return g;
}

double hermite_poly(std::size_t n, double x) {
  double hm2 = 1.0;  // H_0
  if (n == 0) return hm2;
  double hm1 = 2.0 * x;  // H_1
  for (std::size_t k = 2; k <= n; ++k) {
    const double h = 2.0 * x * hm1 - 2.0 * static_cast<double>(k - 1) * hm2;
    hm2 = hm1;
    hm1 = h;
  }
  return hm1;
}

double hermite_function(std::size_t n, double x, double length) {
  if (length <= 0.0)
    throw InvalidParameters("hermite_function: length scale must be positive");
  if (n > 200) throw DegreeOutOfRange("hermite_function: degree exceeds 200");

  const double t = x / length;
  // Recurrence directly on the normalized functions keeps every intermediate
  // bounded; the factorial never appears explicitly.
  double um2 = std::pow(M_PI, -0.25) * std::exp(-0.5 * t * t);
  if (n == 0) return um2 / std::sqrt(length);
  double um1 = t * std::sqrt(2.0) * um2;
  for (std::size_t k = 2; k <= n; ++k) {
    const double dk = static_cast<double>(k);
    const double u = t * std::sqrt(2.0 / dk) * um1 - std::sqrt((dk - 1.0) / dk) * um2;
    um2 = um1;
    um1 = u;
  }
  return um1 / std::sqrt(length);
}

cplx integrate(const QuadratureGrid& grid, const std::function<cplx(double)>& f,
               double scale) {
  if (scale <= 0.0) throw InvalidParameters("integrate: scale must be positive");
  cplx acc = 0.0;
  for (std::size_t k = 0; k < grid.nodes.size(); ++k) {
    const double t = grid.nodes[k];
    acc += grid.scaled_weights[k] * f(scale * t);
  }
  return scale * acc;
}

}  // namespace metriq
