#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include <nlohmann/json_fwd.hpp>

#include "corrtensor/grover.hpp"
#include "corrtensor/measure.hpp"
#include "corrtensor/monotonicity.hpp"
#include "corrtensor/roof.hpp"
#include "corrtensor/tensor.hpp"

namespace ct {

/// Shortest-exact decimal rendering ('%.17g'-equivalent precision),
/// locale independent.
std::string format_real(Real value);

/// One row per entry: the 1-based index tuple then the value,
/// comma separated, header included. Canonical entry order.
void write_tensor_csv(const CorrTensor& t, std::ostream& os);

/// Raw little-endian dump. 16-byte header: magic "CTNS", then uint32
/// version (1), uint32 order, uint32 mode dimension (3); entries follow as
/// float64 in canonical order. Qubit labels are not stored.
void write_tensor_binary(const CorrTensor& t, std::ostream& os);
CorrTensor read_tensor_binary(std::istream& is);

/// Field names: norm, e_t, e_t_log, normalized (null when not requested),
/// n_qubits, elapsed_ms.
nlohmann::json to_json(const MeasureReport& report);
nlohmann::json to_json(const PovmExperimentReport& report);
nlohmann::json to_json(const RoofEstimate& estimate);

/// Columns: iteration,e_t[,e_t_normalized],success_prob. The normalized
/// column appears when a normalization constant is supplied.
void write_grover_csv(const GroverTrace& trace, std::ostream& os,
                      std::optional<Real> normalization);

/// Dense complex matrix from JSON: object with "qubits" (int) and "matrix"
/// (row-major nested arrays of [re, im] pairs).
DensityMatrix read_density_matrix_json(std::istream& is);

}  // namespace ct
