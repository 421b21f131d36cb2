#include "metriq/matrix_io.hpp"

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "metriq/eigen.hpp"

namespace metriq {

namespace {

std::string fmt17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void validate_kind(const ComplexMatrix& m, MatrixKind kind) {
  if (kind == MatrixKind::general) return;
  if (!m.is_hermitian())
    throw KindViolation("matrix tagged '" + to_string(kind) + "' is not Hermitian");
  if (kind == MatrixKind::metric) {
    try {
      pd_sqrt_pair(m);
    } catch (const NotPositiveDefinite&) {
      throw KindViolation("matrix tagged 'metric' is not positive-definite");
    }
  }
}

}  // namespace

std::string to_string(MatrixKind k) {
  switch (k) {
    case MatrixKind::general: return "general";
    case MatrixKind::hermitian: return "hermitian";
    case MatrixKind::metric: return "metric";
  }
  return "general";
}

MatrixKind matrix_kind_from_string(const std::string& s) {
  if (s == "general") return MatrixKind::general;
  if (s == "hermitian") return MatrixKind::hermitian;
  if (s == "metric") return MatrixKind::metric;
  throw ParseError("unknown matrix kind '" + s + "'");
}

LoadedMatrix load_matrix(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(path + ": " + e.what());
  }
  if (!j.contains("rows") || !j.contains("cols") || !j.contains("entries"))
    throw ParseError(path + ": missing field (need rows, cols, entries)");
  const std::size_t rows = j["rows"].get<std::size_t>();
  const std::size_t cols = j["cols"].get<std::size_t>();
  const auto& ent = j["entries"];
  if (!ent.is_array() || ent.size() != rows * cols)
    throw ParseError(path + ": field 'entries' must hold rows*cols pairs");
  std::vector<cplx> data;
  data.reserve(rows * cols);
  for (const auto& pair : ent) {
    if (!pair.is_array() || pair.size() != 2)
      throw ParseError(path + ": field 'entries' must hold [re, im] pairs");
    data.emplace_back(pair[0].get<double>(), pair[1].get<double>());
  }
  MatrixKind kind = MatrixKind::general;
  if (j.contains("kind")) kind = matrix_kind_from_string(j["kind"].get<std::string>());
  ComplexMatrix m(rows, cols, std::move(data));
  validate_kind(m, kind);
  return {std::move(m), kind};
}

std::string format_matrix(const ComplexMatrix& m, MatrixKind kind) {
  std::ostringstream out;
  out << "{\n";
  out << "  \"rows\": " << m.rows() << ",\n";
  out << "  \"cols\": " << m.cols() << ",\n";
  out << "  \"kind\": \"" << to_string(kind) << "\",\n";
  out << "  \"entries\": [\n";
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const cplx& z = m(i, j);
      out << "    [" << fmt17(z.real()) << ", " << fmt17(z.imag()) << "]";
      if (i + 1 != m.rows() || j + 1 != m.cols()) out << ",";
      out << "\n";
    }
  out << "  ]\n}\n";
  return out.str();
}

void save_matrix(const std::string& path, const ComplexMatrix& m, MatrixKind kind) {
  validate_kind(m, kind);
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot write '" + path + "'");
  out << format_matrix(m, kind);
}

std::string file_digest(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::uint64_t h = 0xcbf29ce484222325ULL;
  char c;
  while (in.get(c)) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ULL;
  }
  char buf[32];
  std::snprintf(buf, sizeof(buf), "fnv64:%016llx",
                static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace metriq
