#pragma once

#include <string>

#include "metriq/matrix.hpp"

namespace metriq {

enum class MatrixKind { general, hermitian, metric };

std::string to_string(MatrixKind k);
MatrixKind matrix_kind_from_string(const std::string& s);

struct LoadedMatrix {
  ComplexMatrix matrix;
  MatrixKind kind;
};

// JSON matrix files: rows, cols, a kind tag and row-major [re, im] entry
// pairs, written with fixed 17-significant-digit decimals so that
// save-load-save round trips are byte identical.
LoadedMatrix load_matrix(const std::string& path);
void save_matrix(const std::string& path, const ComplexMatrix& m,
                 MatrixKind kind = MatrixKind::general);

std::string format_matrix(const ComplexMatrix& m, MatrixKind kind);

// FNV-1a digest of a file's bytes, for input provenance in reports.
std::string file_digest(const std::string& path);

}  // namespace metriq
