#include "resourceforge/io.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>

namespace resourceforge::io {

namespace {

double finite_number(const json& j, const char* what) {
  if (!j.is_number()) throw FormatError(std::string(what) + " must be a number");
  const double v = j.get<double>();
  if (!std::isfinite(v)) throw FormatError(std::string(what) + " is not finite");
  return v;
}

std::size_t count(const json& j, const char* what) {
  if (!j.is_number_integer() || j.get<long long>() < 0) {
    throw FormatError(std::string(what) + " must be a non-negative integer");
  }
  return j.get<std::size_t>();
}

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw FormatError(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

Party parse_party(const json& j) {
  if (j == "A") return Party::A;
  if (j == "B") return Party::B;
  throw FormatError("party must be \"A\" or \"B\"");
}

}  // namespace

json load_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw FormatError(path.string() + ": " + e.what());
  }
}

ComplexMatrix parse_matrix(const json& j) {
  if (!j.is_array() || j.empty()) throw FormatError("matrix must be a non-empty array of rows");
  const std::size_t rows = j.size();
  if (!j[0].is_array() || j[0].empty()) throw FormatError("matrix rows must be non-empty arrays");
  const std::size_t cols = j[0].size();
  ComplexMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    if (!j[r].is_array() || j[r].size() != cols) throw FormatError("ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c) {
      const json& entry = j[r][c];
      if (!entry.is_array() || entry.size() != 2) {
        throw FormatError("matrix entries must be [re, im] pairs");
      }
      m(r, c) = {finite_number(entry[0], "real part"), finite_number(entry[1], "imaginary part")};
    }
  }
  return m;
}

StateFile parse_state(const json& j) {
  StateFile out;
  const json& dims = field(j, "dims");
  if (!dims.is_array() || dims.empty()) throw FormatError("dims must be a non-empty array");
  for (const json& d : dims) out.dims.push_back(count(d, "dimension"));
  out.matrix = parse_matrix(field(j, "matrix"));
  return out;
}

Hamiltonian parse_hamiltonian(const json& j) {
  const double beta = finite_number(field(j, "beta"), "beta");
  return Hamiltonian(parse_matrix(field(j, "matrix")), beta);
}

ProjectiveMeasurement parse_measurement(const json& j) {
  const std::size_t d = count(field(j, "dimension"), "dimension");
  const ComplexMatrix basis = parse_matrix(field(j, "basis"));
  if (static_cast<std::size_t>(basis.rows()) != d) {
    throw Error(ErrorCode::DimensionMismatch, "basis size differs from declared dimension");
  }
  return ProjectiveMeasurement::from_basis(basis);
}

OptimizerConfig parse_optimizer_config(const json& j, OptimizerConfig base) {
  if (!j.is_object()) throw FormatError("optimizer config must be an object");
  if (j.contains("restarts")) base.restarts = count(j["restarts"], "restarts");
  if (j.contains("grid_points")) base.grid_points = count(j["grid_points"], "grid_points");
  if (j.contains("max_iterations")) base.max_iterations = count(j["max_iterations"], "max_iterations");
  if (j.contains("tolerance")) base.tolerance = finite_number(j["tolerance"], "tolerance");
  if (j.contains("seed")) base.seed = count(j["seed"], "seed");
  base.check();
  return base;
}

ProtocolScript parse_protocol(const json& j) {
  ProtocolScript script;
  const json& mode = field(j, "mode");
  if (mode == "CLOCC") {
    script.mode = ProtocolMode::CLOCC;
  } else if (mode == "NLOCC") {
    script.mode = ProtocolMode::NLOCC;
  } else {
    throw FormatError("mode must be \"CLOCC\" or \"NLOCC\"");
  }
  const json& steps = field(j, "steps");
  if (!steps.is_array()) throw FormatError("steps must be an array");
  for (const json& s : steps) {
    const json& op = field(s, "op");
    if (op == "LocalUnitary") {
      script.steps.emplace_back(LocalUnitary{parse_party(field(s, "side")), parse_matrix(field(s, "matrix"))});
    } else if (op == "AddMaxMixedAncilla") {
      script.steps.emplace_back(AddMaxMixedAncilla{parse_party(field(s, "side")), count(field(s, "dim"), "dim")});
    } else if (op == "LocalPartialTrace") {
      script.steps.emplace_back(
          LocalPartialTrace{parse_party(field(s, "side")), count(field(s, "subsystem"), "subsystem")});
    } else if (op == "SendQubit") {
      script.steps.emplace_back(SendQubit{parse_party(field(s, "from")), count(field(s, "qubit"), "qubit")});
    } else {
      throw FormatError("unknown protocol op " + op.dump());
    }
  }
  return script;
}

json number(double v) {
  if (std::isinf(v) && v > 0) return "inf";
  if (std::isinf(v)) return "-inf";
  if (v == 0.0) return 0.0;  // no "-0.0"
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return std::strtod(buf, nullptr);
}

json matrix_json(const ComplexMatrix& m) {
  json rows = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      row.push_back(json::array({number(m(r, c).real()), number(m(r, c).imag())}));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

json state_json(const DensityMatrix& rho) {
  return {{"dims", rho.dims()}, {"matrix", matrix_json(rho.matrix())}};
}

json measurement_json(const ProjectiveMeasurement& m) {
  return {{"dimension", m.dimension()}, {"basis", matrix_json(m.basis())}};
}

json result_json(const QuantumnessResult& r) {
  json out;
  out["value_bits"] = number(r.value);
  if (r.measurements.size() == 1) {
    out["measurement"] = measurement_json(r.measurements.front());
  } else if (r.measurements.size() == 2) {
    out["measurement"] = {{"A", measurement_json(r.measurements[0])},
                          {"B", measurement_json(r.measurements[1])}};
  }
  if (r.isometry) out["isometry"] = matrix_json(r.isometry->matrix());
  json trace = json::array();
  for (const auto& [index, value] : r.trace) trace.push_back(json::array({index, number(value)}));
  out["trace"] = std::move(trace);
  return out;
}

json rate_json(const RateResult& r) {
  return {{"rate", number(r.rate)},
          {"numerator_bits", number(r.numerator_bits)},
          {"denominator_bits", number(r.denominator_bits)}};
}

}  // namespace resourceforge::io
