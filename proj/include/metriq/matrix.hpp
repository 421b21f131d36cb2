#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "metriq/errors.hpp"

namespace metriq {

using cplx = std::complex<double>;
using ComplexVector = std::vector<cplx>;

// Dense row-major complex matrix; the carrier for every operator in the
// library.  Entries are validated finite on construction.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  ComplexMatrix(std::size_t rows, std::size_t cols);
  ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<cplx> entries);

  static ComplexMatrix identity(std::size_t n);
  static ComplexMatrix zero(std::size_t rows, std::size_t cols);
  static ComplexMatrix diagonal(const std::vector<cplx>& d);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  cplx& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const cplx& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  const std::vector<cplx>& entries() const { return data_; }

  ComplexMatrix adjoint() const;
  ComplexMatrix transpose() const;
  ComplexMatrix conj() const;

  double frobenius_norm() const;
  cplx trace() const;
  double hermiticity_residual() const;  // ||M - M^dag||_F / ||M||_F (0 if M = 0)
  bool is_hermitian(double rel_tol = 1e-12) const;

  ComplexVector column(std::size_t j) const;
  void set_column(std::size_t j, const ComplexVector& v);

  // Top-left square block, for truncation-insensitive checks.
  ComplexMatrix top_left(std::size_t n) const;

  ComplexMatrix& operator+=(const ComplexMatrix& other);
  ComplexMatrix& operator-=(const ComplexMatrix& other);
  ComplexMatrix& operator*=(cplx s);

  friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) {
    return a += b;
  }
  friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) {
    return a -= b;
  }
  friend ComplexMatrix operator*(cplx s, ComplexMatrix a) { return a *= s; }
  friend ComplexMatrix operator*(ComplexMatrix a, cplx s) { return a *= s; }

  friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
  friend ComplexVector operator*(const ComplexMatrix& a, const ComplexVector& v);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<cplx> data_;

  void check_finite() const;
};

// Vector helpers shared by the modules.
cplx dot(const ComplexVector& a, const ComplexVector& b);  // a^dag b
double norm2(const ComplexVector& v);
ComplexVector operator+(const ComplexVector& a, const ComplexVector& b);
ComplexVector operator-(const ComplexVector& a, const ComplexVector& b);
ComplexVector operator*(cplx s, const ComplexVector& v);
double vec_distance(const ComplexVector& a, const ComplexVector& b);

}  // namespace metriq
