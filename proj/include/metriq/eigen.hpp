#pragma once

#include <vector>

#include "metriq/matrix.hpp"

namespace metriq {

// Full spectrum of a Hermitian matrix.  Eigenvalues ascending, eigenvector
// columns orthonormal; the first component of each column with magnitude
// above 1e-8 is rotated real-positive so repeated runs agree bit for bit.
struct EigenDecomposition {
  std::vector<double> eigenvalues;
  ComplexMatrix eigenvectors;  // column k pairs with eigenvalues[k]
};

// Cyclic Jacobi on the complex Hermitian matrix.  Converges when the
// off-diagonal Frobenius norm drops below 1e-13 * ||M||_F; at most 64 sweeps.
// Throws NotHermitian / NoConvergence.
EigenDecomposition hermitian_eigen(const ComplexMatrix& m);

struct SqrtPair {
  ComplexMatrix sqrt;
  ComplexMatrix inv_sqrt;
};

// Principal square root of a positive-definite Hermitian matrix plus its
// inverse, both via the eigendecomposition.  Rejects matrices whose smallest
// eigenvalue is below 1e-12 times the largest (NotPositiveDefinite).
SqrtPair pd_sqrt_pair(const ComplexMatrix& m);

// Orthonormal basis of the (near-)null space of K, found from the Gram matrix
// K^dag K: eigenvectors whose eigenvalue is at most threshold^2 times the
// largest.  May be empty.
std::vector<ComplexVector> nullspace_gram(const ComplexMatrix& k, double threshold);

}  // namespace metriq
