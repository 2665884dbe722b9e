#pragma once

// JSON file formats.
//
//   state        {"dims": [d1, ...], "matrix": [[[re, im], ...], ...]}
//   hamiltonian  {"beta": b, "matrix": [[[re, im], ...], ...]}
//   measurement  {"dimension": d, "basis": [[[re, im], ...], ...]}  (columns are the basis)
//   optimizer    {"restarts": n, "grid_points": g, "max_iterations": k, "tolerance": t, "seed": s}
//   protocol     {"mode": "CLOCC" | "NLOCC", "steps": [{"op": "LocalUnitary", "side": "A",
//                 "matrix": ...}, {"op": "SendQubit", "from": "A", "qubit": 0}, ...]}
//   result       {"value_bits": v, "measurement": {...}, "trace": [[i, v_i], ...]}
//
// Matrices are row-major. Parsers reject non-finite numbers. Output numbers
// carry 12 significant digits and +infinity is written as the string "inf".

#include <nlohmann/json.hpp>

#include <filesystem>
#include <stdexcept>
#include <string>

#include "resourceforge/measurements.hpp"
#include "resourceforge/monotones.hpp"
#include "resourceforge/optimizer.hpp"
#include "resourceforge/protocol.hpp"
#include "resourceforge/quantumness.hpp"

namespace resourceforge::io {

using nlohmann::json;

/// Malformed input or unreadable file; distinct from domain errors.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A parsed but not yet validated state.
struct StateFile {
  ComplexMatrix matrix;
  Dims dims;
};

json load_json(const std::filesystem::path& path);

ComplexMatrix parse_matrix(const json& j);
StateFile parse_state(const json& j);
Hamiltonian parse_hamiltonian(const json& j);
ProjectiveMeasurement parse_measurement(const json& j);
OptimizerConfig parse_optimizer_config(const json& j, OptimizerConfig base = {});
ProtocolScript parse_protocol(const json& j);

/// Rounds to 12 significant digits; +infinity becomes "inf".
json number(double v);
json matrix_json(const ComplexMatrix& m);
json state_json(const DensityMatrix& rho);
json measurement_json(const ProjectiveMeasurement& m);
json result_json(const QuantumnessResult& r);
json rate_json(const RateResult& r);

}  // namespace resourceforge::io
