#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "resourceforge/entropy.hpp"
#include "resourceforge/measurements.hpp"
#include "resourceforge/monotones.hpp"
#include "resourceforge/protocol.hpp"
#include "resourceforge/quantumness.hpp"

namespace py = pybind11;
using namespace resourceforge;

namespace {

// Optimizer searches can run for seconds; let other Python threads run.
using release = py::call_guard<py::gil_scoped_release>;

DensityMatrix make_state(const ComplexMatrix& m, std::optional<Dims> dims) {
  return DensityMatrix::validate(m, dims.value_or(Dims{static_cast<std::size_t>(m.rows())}));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Quantum resource-theory toolkit: entropies, discord and deficits, rates, CLOCC/NLOCC protocols";

  // Raised for every domain error; `code` carries the error name.
  static PyObject* error_type = py::exception<Error>(m, "ResourceForgeError", PyExc_ValueError).ptr();
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object exc = py::handle(error_type)(e.what());
      exc.attr("code") = std::string(e.name());
      PyErr_SetObject(error_type, exc.ptr());
    }
  });

  // qstate
  py::class_<DensityMatrix>(m, "DensityMatrix")
      .def(py::init(&make_state), py::arg("matrix"), py::arg("dims") = std::nullopt)
      .def_property_readonly("matrix", &DensityMatrix::matrix)
      .def_property_readonly("dims", &DensityMatrix::dims)
      .def_property_readonly("dim", &DensityMatrix::dim)
      .def("__repr__", [](const DensityMatrix& r) {
        std::string s = "DensityMatrix(dims=[";
        for (std::size_t i = 0; i < r.dims().size(); ++i) s += (i ? ", " : "") + std::to_string(r.dims()[i]);
        return s + "])";
      });

  m.def("tensor", &tensor, py::arg("a"), py::arg("b"), py::arg("max_dim") = kDefaultMaxDim);
  m.def(
      "partial_trace",
      [](const DensityMatrix& rho, const std::vector<std::size_t>& keep) { return partial_trace(rho, keep); },
      py::arg("rho"), py::arg("keep"));
  m.def(
      "spectrum", [](const DensityMatrix& rho) { return eig_hermitian(rho.matrix()).spectrum.values(); },
      py::arg("rho"), "Eigenvalues, descending.");
  m.def(
      "embed", [](const DensityMatrix& rho, const ComplexMatrix& v, std::size_t subsystem) {
        return embed(rho, Isometry::from_matrix(v), subsystem);
      },
      py::arg("rho"), py::arg("isometry"), py::arg("subsystem"));
  m.def("random_density", py::overload_cast<const Dims&, std::size_t, std::uint64_t>(&random_density),
        py::arg("dims"), py::arg("rank"), py::arg("seed"));
  m.def("pure_state", &pure_state, py::arg("psi"), py::arg("dims"));
  m.def("maximally_mixed", &maximally_mixed, py::arg("dims"));

  // entropy
  py::class_<Hamiltonian>(m, "Hamiltonian")
      .def(py::init<const ComplexMatrix&, double>(), py::arg("matrix"), py::arg("beta"))
      .def_property_readonly("matrix", &Hamiltonian::matrix)
      .def_property_readonly("beta", &Hamiltonian::beta);
  m.def("vn_entropy", &vn_entropy, py::arg("rho"));
  m.def("relative_entropy", &relative_entropy, py::arg("rho"), py::arg("sigma"));
  m.def("mutual_information", &mutual_information, py::arg("rho"));
  m.def("negentropy", &negentropy, py::arg("rho"));
  m.def("gibbs_state", &gibbs_state, py::arg("h"));
  m.def("free_energy_gap", &free_energy_gap, py::arg("rho"), py::arg("h"));

  // measurements
  py::class_<ProjectiveMeasurement>(m, "ProjectiveMeasurement")
      .def_static("from_basis", &ProjectiveMeasurement::from_basis, py::arg("basis"))
      .def_static("computational", &ProjectiveMeasurement::computational, py::arg("dimension"))
      .def_property_readonly("dimension", &ProjectiveMeasurement::dimension)
      .def_property_readonly("basis", &ProjectiveMeasurement::basis)
      .def("projector", &ProjectiveMeasurement::projector, py::arg("i"));
  m.def(
      "unitary_from_params",
      [](const std::vector<double>& angles, std::size_t d) { return unitary_from_params(angles, d); },
      py::arg("angles"), py::arg("d"));
  m.def(
      "params_from_unitary", [](const ComplexMatrix& u) { return params_from_unitary(u).angles; }, py::arg("u"));
  m.def(
      "measurement_from_params",
      [](const std::vector<double>& angles, std::size_t d) {
        return measurement_from_params(MeasurementParams{angles}, d);
      },
      py::arg("angles"), py::arg("d"));
  m.def("measure_local", &measure_local, py::arg("rho"), py::arg("m"), py::arg("side"));
  m.def("measure_both", &measure_both, py::arg("rho"), py::arg("ma"), py::arg("mb"));
  m.def("dephasing_channel", &dephasing_channel, py::arg("rho"), py::arg("qubit"));

  // quantumness
  py::class_<OptimizerConfig>(m, "OptimizerConfig")
      .def(py::init([](std::size_t restarts, std::size_t grid_points, std::size_t max_iterations, double tolerance,
                       std::uint64_t seed) {
             OptimizerConfig c{restarts, grid_points, max_iterations, tolerance, seed};
             c.check();
             return c;
           }),
           py::arg("restarts") = 32, py::arg("grid_points") = 12, py::arg("max_iterations") = 500,
           py::arg("tolerance") = 1e-6, py::arg("seed") = 0)
      .def_readwrite("restarts", &OptimizerConfig::restarts)
      .def_readwrite("grid_points", &OptimizerConfig::grid_points)
      .def_readwrite("max_iterations", &OptimizerConfig::max_iterations)
      .def_readwrite("tolerance", &OptimizerConfig::tolerance)
      .def_readwrite("seed", &OptimizerConfig::seed);

  py::class_<QuantumnessResult>(m, "QuantumnessResult")
      .def_readonly("value", &QuantumnessResult::value)
      .def_readonly("measurements", &QuantumnessResult::measurements)
      .def_property_readonly("isometry",
                             [](const QuantumnessResult& r) -> std::optional<ComplexMatrix> {
                               if (r.isometry) return r.isometry->matrix();
                               return std::nullopt;
                             })
      .def_readonly("trace", &QuantumnessResult::trace)
      .def("__repr__", [](const QuantumnessResult& r) {
        return "QuantumnessResult(value=" + std::to_string(r.value) + ")";
      });

  m.def("deficit_one_way_fixed", &deficit_one_way_fixed, py::arg("rho"), py::arg("m"));
  m.def("discord_fixed", &discord_fixed, py::arg("rho"), py::arg("m"));
  m.def("deficit_zero_way_fixed", &deficit_zero_way_fixed, py::arg("rho"), py::arg("ma"), py::arg("mb"));
  m.def("discord_zero_way_fixed", &discord_zero_way_fixed, py::arg("rho"), py::arg("ma"), py::arg("mb"));
  const OptimizerConfig defaults;
  m.def("deficit_one_way", &deficit_one_way, py::arg("rho"), py::arg("cfg") = defaults, release());
  m.def("discord", &discord, py::arg("rho"), py::arg("cfg") = defaults, release());
  m.def("deficit_zero_way", &deficit_zero_way, py::arg("rho"), py::arg("cfg") = defaults, release());
  m.def("discord_zero_way", &discord_zero_way, py::arg("rho"), py::arg("cfg") = defaults, release());
  m.def("relent_to_cq", &relent_to_cq, py::arg("rho"), py::arg("cfg") = defaults, release());
  m.def("relent_to_cc", &relent_to_cc, py::arg("rho"), py::arg("cfg") = defaults, release());
  m.def("generalized_deficit", &generalized_deficit, py::arg("rho"), py::arg("extra_dim"),
        py::arg("cfg") = defaults, py::arg("max_dim") = kDefaultMaxDim, release());
  m.def("multicopy_deficit", &multicopy_deficit, py::arg("rho"), py::arg("copies"), py::arg("cfg") = defaults,
        py::arg("max_dim") = kDefaultMaxDim, release());

  // monotones
  py::class_<RateResult>(m, "RateResult")
      .def_readonly("rate", &RateResult::rate)
      .def_readonly("numerator_bits", &RateResult::numerator_bits)
      .def_readonly("denominator_bits", &RateResult::denominator_bits)
      .def("__repr__", [](const RateResult& r) { return "RateResult(rate=" + std::to_string(r.rate) + ")"; });
  m.def(
      "majorizes",
      [](const std::vector<double>& x, const std::vector<double>& y) { return majorizes(Spectrum(x), Spectrum(y)); },
      py::arg("x"), py::arg("y"));
  m.def("single_shot_noisy_transition", &single_shot_noisy_transition, py::arg("rho"), py::arg("sigma"),
        py::arg("max_dim") = kDefaultMaxDim);
  m.def("purity_rate", &purity_rate, py::arg("rho"));
  m.def("conversion_rate", &conversion_rate, py::arg("er_source"), py::arg("er_target"));
  m.def("thermo_rate", &thermo_rate, py::arg("rho"), py::arg("target"), py::arg("h"));

  // protocols
  py::enum_<Party>(m, "Party").value("A", Party::A).value("B", Party::B);
  py::enum_<ProtocolMode>(m, "ProtocolMode").value("CLOCC", ProtocolMode::CLOCC).value("NLOCC", ProtocolMode::NLOCC);
  py::class_<LocalUnitary>(m, "LocalUnitary")
      .def(py::init<Party, ComplexMatrix>(), py::arg("side"), py::arg("matrix"))
      .def_readonly("side", &LocalUnitary::side)
      .def_readonly("matrix", &LocalUnitary::matrix);
  py::class_<AddMaxMixedAncilla>(m, "AddMaxMixedAncilla")
      .def(py::init<Party, std::size_t>(), py::arg("side"), py::arg("dim"))
      .def_readonly("side", &AddMaxMixedAncilla::side)
      .def_readonly("dim", &AddMaxMixedAncilla::dim);
  py::class_<LocalPartialTrace>(m, "LocalPartialTrace")
      .def(py::init<Party, std::size_t>(), py::arg("side"), py::arg("subsystem"))
      .def_readonly("side", &LocalPartialTrace::side)
      .def_readonly("subsystem", &LocalPartialTrace::subsystem);
  py::class_<SendQubit>(m, "SendQubit")
      .def(py::init<Party, std::size_t>(), py::arg("sender"), py::arg("qubit"))
      .def_readonly("sender", &SendQubit::from)
      .def_readonly("qubit", &SendQubit::qubit);
  py::class_<ProtocolScript>(m, "ProtocolScript")
      .def(py::init([](ProtocolMode mode, std::vector<ProtocolStep> steps) { return ProtocolScript{mode, steps}; }),
           py::arg("mode") = ProtocolMode::CLOCC, py::arg("steps") = std::vector<ProtocolStep>{})
      .def_readwrite("mode", &ProtocolScript::mode)
      .def_readwrite("steps", &ProtocolScript::steps);
  py::class_<Register>(m, "Register")
      .def(py::init<DensityMatrix, std::vector<Party>>(), py::arg("state"), py::arg("ownership"))
      .def_static("bipartite", &Register::bipartite, py::arg("rho"))
      .def_property_readonly("state", &Register::state)
      .def_property_readonly("ownership", &Register::ownership)
      .def("owned_by", &Register::owned_by, py::arg("side"));
  m.def("apply_step", &apply_step, py::arg("register"), py::arg("step"), py::arg("mode"),
        py::arg("max_dim") = kDefaultMaxDim);
  m.def("run_protocol", &run_protocol, py::arg("register"), py::arg("script"), py::arg("max_dim") = kDefaultMaxDim);
  m.def("extracted_local_purity", &extracted_local_purity, py::arg("register"),
        py::arg("epsilon") = kDefaultPurityEpsilon, py::arg("exhaustive") = false);
  m.def("deficit_bound", &deficit_bound, py::arg("rho"), py::arg("script"), py::arg("epsilon") = kDefaultPurityEpsilon,
        py::arg("max_dim") = kDefaultMaxDim);
}
