#pragma once

#include <vector>

#include "metriq/biorth.hpp"

namespace metriq {

// Orthonormal eigenbasis of a Hermitian reference observable B.
struct HermitianBasis {
  std::vector<double> eigenvalues;  // omega, ascending
  ComplexMatrix kets;               // orthonormal columns w_m

  static HermitianBasis from_operator(const ComplexMatrix& b);
};

// Transformation factors between B's eigenbasis and a bi-orthogonal basis:
// factors_eta(m, n) = w_m^dag eta v_n and factors_h(m, n) = w_m^dag v_n,
// rows ordered by omega ascending, columns by lambda ascending.
struct TransformTable {
  ComplexMatrix factors_eta;
  ComplexMatrix factors_h;
  std::vector<double> b_eigenvalues;
  std::vector<double> a_eigenvalues;
};

enum class TransformDirection { lambda_to_omega, omega_to_lambda };

TransformTable build_table(const HermitianBasis& hb, const BiorthogonalBasis& bb,
                           const MetricOperator& m);

// lambda_to_omega consumes plain-side lambda coefficients a_n = v_n^dag phi and
// returns the projections b_m = w_m^dag phi; omega_to_lambda inverts through
// the conjugated plain-factor table.  The round trip is the identity.
ComplexVector change_representation(const TransformTable& t,
                                    const ComplexVector& coeffs,
                                    TransformDirection direction);

// || factors_h^dag factors_eta - I ||_F: the discrete contraction identity
// tying the two factor tables together.
double roundtrip_residual(const TransformTable& t);

}  // namespace metriq
