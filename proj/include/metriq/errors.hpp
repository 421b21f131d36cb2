#pragma once

#include <stdexcept>
#include <string>

namespace metriq {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DimensionMismatch : Error {
  using Error::Error;
};
struct NotHermitian : Error {
  using Error::Error;
};
struct NotPositiveDefinite : Error {
  using Error::Error;
};
struct NoConvergence : Error {
  using Error::Error;
};
struct SizeOutOfRange : Error {
  using Error::Error;
};
struct DegreeOutOfRange : Error {
  using Error::Error;
};
struct MetricNotFound : Error {
  using Error::Error;
};
struct DimensionTooLarge : Error {
  using Error::Error;
};
struct SimilarityNotHermitian : Error {
  using Error::Error;
};
struct InvalidParameters : Error {
  using Error::Error;
};
struct QuadratureUnderresolved : Error {
  using Error::Error;
};
struct ParseError : Error {
  using Error::Error;
};
struct KindViolation : Error {
  using Error::Error;
};

}  // namespace metriq
