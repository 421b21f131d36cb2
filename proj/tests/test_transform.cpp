#include <doctest.h>

#include <cmath>

#include "metriq/transform.hpp"
#include "test_helpers.hpp"

using namespace metriq;
using namespace metriq::testing;

namespace {

MetricOperator hand_metric() {
  return MetricOperator::make(ComplexMatrix(2, 2, {1, -1, -1, 2}));
}

BiorthogonalBasis hand_basis() {
  BiorthogonalBasis b;
  b.eigenvalues = {1.0, 2.0};
  b.h_kets = ComplexMatrix(2, 2, {1, 1, 0, 1});    // v1 = (1,0), v2 = (1,1)
  b.eta_kets = ComplexMatrix(2, 2, {1, 0, -1, 1});  // eta v1, eta v2
  return b;
}

}  // namespace

TEST_CASE("HermitianBasis invariants") {
  const ComplexMatrix b(2, 2, {0, 1, 1, 0});
  auto hb = HermitianBasis::from_operator(b);
  CHECK(hb.eigenvalues[0] == doctest::Approx(-1.0));
  CHECK(hb.eigenvalues[1] == doctest::Approx(1.0));
  const ComplexMatrix gram = hb.kets.adjoint() * hb.kets;
  CHECK((gram - ComplexMatrix::identity(2)).frobenius_norm() < 1e-12);
  const ComplexMatrix proj = hb.kets * hb.kets.adjoint();
  CHECK((proj - ComplexMatrix::identity(2)).frobenius_norm() < 1e-10);
}

TEST_CASE("build_table with eta = I on a shared basis is the identity") {
  auto id = MetricOperator::make(ComplexMatrix::identity(3));
  auto sys = QuasiHermitianSystem::make(ComplexMatrix::diagonal({1.0, 2.0, 3.0}), id);
  auto bb = diagonalize(sys);
  HermitianBasis hb{bb.eigenvalues, bb.h_kets};
  auto t = build_table(hb, bb, id);
  CHECK((t.factors_eta - ComplexMatrix::identity(3)).frobenius_norm() < 1e-12);
  CHECK((t.factors_h - ComplexMatrix::identity(3)).frobenius_norm() < 1e-12);
  // eta = I collapse: both factor tables coincide exactly.
  CHECK((t.factors_eta - t.factors_h).frobenius_norm() == 0.0);
}

TEST_CASE("build_table reproduces the hand-computed factors") {
  auto m = hand_metric();
  auto bb = hand_basis();
  auto hb = HermitianBasis::from_operator(ComplexMatrix(2, 2, {0, 1, 1, 0}));

  auto t = build_table(hb, bb, m);
  const double r = 1.0 / std::sqrt(2.0);
  // Rows ordered omega ascending (-1 then +1); w-: (1,-1)/sqrt2, w+: (1,1)/sqrt2.
  CHECK(std::abs(t.factors_eta(0, 0) - std::sqrt(2.0)) < 1e-12);
  CHECK(std::abs(t.factors_eta(0, 1) + r) < 1e-12);
  CHECK(std::abs(t.factors_eta(1, 0)) < 1e-12);
  CHECK(std::abs(t.factors_eta(1, 1) - r) < 1e-12);

  CHECK(std::abs(t.factors_h(0, 0) - r) < 1e-12);
  CHECK(std::abs(t.factors_h(0, 1)) < 1e-12);
  CHECK(std::abs(t.factors_h(1, 0) - r) < 1e-12);
  CHECK(std::abs(t.factors_h(1, 1) - std::sqrt(2.0)) < 1e-12);
}

TEST_CASE("conjugation relation: reverse tables are the conjugate transposes") {
  auto m = hand_metric();
  auto bb = hand_basis();
  auto hb = HermitianBasis::from_operator(ComplexMatrix(2, 2, {0, 1, 1, 0}));
  auto t = build_table(hb, bb, m);

  const ComplexMatrix rev_eta = bb.h_kets.adjoint() * m.eta() * hb.kets;
  const ComplexMatrix rev_h = bb.h_kets.adjoint() * hb.kets;
  CHECK((rev_eta - t.factors_eta.adjoint()).frobenius_norm() < 1e-12);
  CHECK((rev_h - t.factors_h.adjoint()).frobenius_norm() < 1e-12);
}

TEST_CASE("change_representation forward matches the plain projections") {
  auto m = hand_metric();
  auto bb = hand_basis();
  auto hb = HermitianBasis::from_operator(ComplexMatrix(2, 2, {0, 1, 1, 0}));
  auto t = build_table(hb, bb, m);

  // phi = (0,1): plain lambda-side coefficients v_n^dag phi = (0, 1).
  const ComplexVector a{0, 1};
  const ComplexVector b =
      change_representation(t, a, TransformDirection::lambda_to_omega);
  const double r = 1.0 / std::sqrt(2.0);
  CHECK(std::abs(b[0] + r) < 1e-12);  // w_-^dag phi
  CHECK(std::abs(b[1] - r) < 1e-12);  // w_+^dag phi

  const ComplexVector back =
      change_representation(t, b, TransformDirection::omega_to_lambda);
  CHECK(vec_distance(back, a) < 1e-10);
}

TEST_CASE("identity table leaves coefficients unchanged") {
  auto id = MetricOperator::make(ComplexMatrix::identity(2));
  auto sys = QuasiHermitianSystem::make(ComplexMatrix::diagonal({1.0, 2.0}), id);
  auto bb = diagonalize(sys);
  HermitianBasis hb{bb.eigenvalues, bb.h_kets};
  auto t = build_table(hb, bb, id);
  const ComplexVector c{cplx{0.3, 0.1}, cplx{-0.2, 0.5}};
  CHECK(vec_distance(change_representation(t, c, TransformDirection::lambda_to_omega),
                     c) < 1e-12);
  CHECK(roundtrip_residual(t) < 1e-13);
}

TEST_CASE("roundtrip_residual detects corruption") {
  auto m = hand_metric();
  auto t = build_table(
      HermitianBasis::from_operator(ComplexMatrix(2, 2, {0, 1, 1, 0})),
      hand_basis(), m);
  CHECK(roundtrip_residual(t) <= 1e-10);
  t.factors_eta(0, 1) += 0.05;
  CHECK(roundtrip_residual(t) > 1e-3);
}

TEST_CASE("random (B, system) pairs satisfy the transform identities") {
  std::mt19937_64 rng(606);
  for (int rep = 0; rep < 20; ++rep) {
    const std::size_t n = 2 + rep % 5;
    const ComplexMatrix h = random_hermitian(n, rng);
    const PdPair rho = random_pd_pair(n, rng);
    const ComplexMatrix a = rho.rho_inv * h * rho.rho;
    auto metric = MetricOperator::make(rho.rho * rho.rho);
    auto bb = diagonalize(QuasiHermitianSystem::make(a, metric));
    auto hb = HermitianBasis::from_operator(random_hermitian(n, rng));
    auto t = build_table(hb, bb, metric);

    const ComplexMatrix rev_eta = bb.h_kets.adjoint() * metric.eta() * hb.kets;
    const ComplexMatrix rev_h = bb.h_kets.adjoint() * hb.kets;
    CHECK((rev_eta - t.factors_eta.adjoint()).frobenius_norm() < 1e-12 * n * 10);
    CHECK((rev_h - t.factors_h.adjoint()).frobenius_norm() < 1e-12 * n * 10);
    CHECK(roundtrip_residual(t) <= 1e-10 * n);

    const ComplexVector c = random_vector(n, rng);
    const ComplexVector round = change_representation(
        t, change_representation(t, c, TransformDirection::lambda_to_omega),
        TransformDirection::omega_to_lambda);
    CHECK(vec_distance(round, c) <= 1e-10 * n);
  }
}
