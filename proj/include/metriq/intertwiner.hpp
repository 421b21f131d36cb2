#pragma once

#include <cstdint>

#include "metriq/metric.hpp"

namespace metriq {

struct IntertwinerSolution {
  MetricOperator metric;
  double residual;            // relative Frobenius residual of A^dag eta - eta A
  std::size_t nullspace_dim;  // real dimension of the Hermitian solution space
};

// Find a positive-definite Hermitian eta with A^dag eta = eta A by solving the
// vectorized intertwining equation for its Hermitian null space and searching
// that space for a positive-definite member.  The returned eta is scaled so
// trace eta = dim and is deterministic for a fixed seed.
//
// Throws MetricNotFound when no positive-definite member is located within the
// trial budget (for a one-dimensional solution space this is a definite
// nonexistence answer; otherwise the search is a heuristic) and
// DimensionTooLarge above dim 32.
IntertwinerSolution solve_metric(const ComplexMatrix& a, std::size_t trials = 1000,
                                 std::uint64_t seed = 0);

// Scale a positive-definite Hermitian eta so that trace eta = dim.
ComplexMatrix canonicalize_metric(const ComplexMatrix& eta);

}  // namespace metriq
