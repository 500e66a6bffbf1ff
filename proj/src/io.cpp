#include "corrtensor/io.hpp"

#include <charconv>
#include <cstring>
#include <istream>
#include <ostream>
#include <vector>

#include <nlohmann/json.hpp>

namespace ct {

namespace {

constexpr char kMagic[4] = {'C', 'T', 'N', 'S'};
constexpr std::uint32_t kVersion = 1;

void write_u32(std::ostream& os, std::uint32_t v) {
  unsigned char b[4] = {static_cast<unsigned char>(v & 0xff),
                        static_cast<unsigned char>((v >> 8) & 0xff),
                        static_cast<unsigned char>((v >> 16) & 0xff),
                        static_cast<unsigned char>((v >> 24) & 0xff)};
  os.write(reinterpret_cast<const char*>(b), 4);
}

std::uint32_t read_u32(std::istream& is) {
  unsigned char b[4];
  is.read(reinterpret_cast<char*>(b), 4);
  if (!is) throw IoError("tensor binary: truncated header");
  return static_cast<std::uint32_t>(b[0]) |
         (static_cast<std::uint32_t>(b[1]) << 8) |
         (static_cast<std::uint32_t>(b[2]) << 16) |
         (static_cast<std::uint32_t>(b[3]) << 24);
}

void write_f64_le(std::ostream& os, Real v) {
  static_assert(sizeof(Real) == 8);
  std::uint64_t bits;
  std::memcpy(&bits, &v, 8);
  unsigned char b[8];
  for (int i = 0; i < 8; ++i) b[i] = static_cast<unsigned char>(bits >> (8 * i));
  os.write(reinterpret_cast<const char*>(b), 8);
}

Real read_f64_le(std::istream& is) {
  unsigned char b[8];
  is.read(reinterpret_cast<char*>(b), 8);
  if (!is) throw IoError("tensor binary: truncated payload");
  std::uint64_t bits = 0;
  for (int i = 0; i < 8; ++i) bits |= static_cast<std::uint64_t>(b[i]) << (8 * i);
  Real v;
  std::memcpy(&v, &bits, 8);
  return v;
}

}  // namespace

std::string format_real(Real value) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), value,
                                 std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

void write_tensor_csv(const CorrTensor& t, std::ostream& os) {
  const int m = t.order();
  for (int i = 1; i <= m; ++i) os << "alpha_" << i << ",";
  os << "value\n";
  std::vector<int> digits(m, 1);
  for (Index flat = 0; flat < t.size(); ++flat) {
    Index rest = flat;
    for (int i = m - 1; i >= 0; --i) {
      digits[i] = static_cast<int>(rest % 3) + 1;
      rest /= 3;
    }
    for (int d : digits) os << d << ",";
    os << format_real(t.entries[flat]) << "\n";
  }
  if (!os) throw IoError("tensor csv: write failed");
}

void write_tensor_binary(const CorrTensor& t, std::ostream& os) {
  os.write(kMagic, 4);
  write_u32(os, kVersion);
  write_u32(os, static_cast<std::uint32_t>(t.order()));
  write_u32(os, 3);
  for (Index i = 0; i < t.size(); ++i) write_f64_le(os, t.entries[i]);
  if (!os) throw IoError("tensor binary: write failed");
}

CorrTensor read_tensor_binary(std::istream& is) {
  char magic[4];
  is.read(magic, 4);
  if (!is || std::memcmp(magic, kMagic, 4) != 0)
    throw IoError("tensor binary: bad magic");
  const std::uint32_t version = read_u32(is);
  if (version != kVersion) throw IoError("tensor binary: unsupported version");
  const std::uint32_t order = read_u32(is);
  const std::uint32_t mode_dim = read_u32(is);
  if (mode_dim != 3) throw IoError("tensor binary: unsupported mode dimension");
  std::vector<int> labels(order);
  for (std::uint32_t i = 0; i < order; ++i) labels[i] = static_cast<int>(i) + 1;
  CorrTensor t = CorrTensor::zero(std::move(labels));
  for (Index i = 0; i < t.size(); ++i) t.entries[i] = read_f64_le(is);
  return t;
}

nlohmann::json to_json(const MeasureReport& report) {
  nlohmann::json j;
  j["norm"] = report.norm;
  j["e_t"] = report.e_t;
  j["e_t_log"] = report.e_t_log;
  j["normalized"] =
      report.normalized ? nlohmann::json(*report.normalized) : nlohmann::json();
  j["n_qubits"] = report.n_qubits;
  j["elapsed_ms"] = report.elapsed_ms;
  return j;
}

nlohmann::json to_json(const PovmExperimentReport& report) {
  nlohmann::json j;
  j["input_e_t"] = report.input_e_t;
  j["expected_e_t"] = report.expected_e_t;
  j["gap"] = report.gap;
  j["outcomes"] = nlohmann::json::array();
  for (const auto& o : report.outcomes) {
    j["outcomes"].push_back({{"probability", o.probability}, {"e_t", o.e_t}});
  }
  return j;
}

nlohmann::json to_json(const RoofEstimate& estimate) {
  nlohmann::json j;
  j["value"] = estimate.value;
  j["restarts_used"] = estimate.restarts_used;
  j["converged"] = estimate.converged;
  j["bound_kind"] = "upper";
  j["weights"] = estimate.decomposition.weights;
  return j;
}

void write_grover_csv(const GroverTrace& trace, std::ostream& os,
                      std::optional<Real> normalization) {
  if (normalization) {
    os << "iteration,e_t,e_t_normalized,success_prob\n";
  } else {
    os << "iteration,e_t,success_prob\n";
  }
  for (const auto& row : trace.rows) {
    os << row.iteration << "," << format_real(row.e_t);
    if (normalization) os << "," << format_real(row.e_t / *normalization);
    os << "," << format_real(row.success_prob) << "\n";
  }
  if (!os) throw IoError("grover csv: write failed");
}

DensityMatrix read_density_matrix_json(std::istream& is) {
  nlohmann::json j;
  try {
    is >> j;
  } catch (const nlohmann::json::exception& e) {
    throw IoError(std::string("density matrix json: ") + e.what());
  }
  if (!j.contains("qubits") || !j.contains("matrix"))
    throw IoError("density matrix json: need 'qubits' and 'matrix' fields");
  const int n = j["qubits"].get<int>();
  if (n < 1 || n > 10) throw IoError("density matrix json: bad qubit count");
  const Index dim = Index{1} << n;
  const auto& rows = j["matrix"];
  if (!rows.is_array() || static_cast<Index>(rows.size()) != dim)
    throw IoError("density matrix json: matrix must have 2^qubits rows");
  Eigen::MatrixXcd m(dim, dim);
  for (Index r = 0; r < dim; ++r) {
    const auto& row = rows[static_cast<std::size_t>(r)];
    if (!row.is_array() || static_cast<Index>(row.size()) != dim)
      throw IoError("density matrix json: ragged matrix row");
    for (Index c = 0; c < dim; ++c) {
      const auto& cell = row[static_cast<std::size_t>(c)];
      if (!cell.is_array() || cell.size() != 2)
        throw IoError("density matrix json: entries must be [re, im] pairs");
      m(r, c) = Complex{cell[0].get<Real>(), cell[1].get<Real>()};
    }
  }
  std::vector<int> labels(n);
  for (int i = 0; i < n; ++i) labels[i] = i + 1;
  return DensityMatrix::from_matrix(std::move(labels), std::move(m));
}

}  // namespace ct
