// Command-line front end. Every subcommand prints one JSON document (or
// key/value TSV lines) on stdout.
//
// Exit status: 0 success, 1 domain error (error name on stderr), 2 bad
// arguments, unreadable or malformed files.

#include <CLI11.hpp>

#include <cmath>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>

#include "resourceforge/entropy.hpp"
#include "resourceforge/io.hpp"
#include "resourceforge/measurements.hpp"
#include "resourceforge/monotones.hpp"
#include "resourceforge/protocol.hpp"
#include "resourceforge/quantumness.hpp"

using namespace resourceforge;
using io::FormatError;
using io::json;

namespace {

struct Args {
  std::string state, state2, ham, script, basis, basis2, config, out = "json";
  std::optional<std::size_t> restarts, grid, max_iterations;
  std::optional<std::uint64_t> seed;
  std::optional<double> tol;
  std::size_t extra_dim = 1;
  std::size_t copies = 2;
  double epsilon = kDefaultPurityEpsilon;
  bool zero_way = false;
  bool exhaustive = false;
  std::string x, y, keep, dims, owners;
  std::optional<double> source, target;
  std::size_t side = 0;
  std::size_t qubit = 0;
  std::size_t rank = 0;
  std::uint64_t random_seed = 0;
};

std::size_t max_dim_from_env() {
  const char* v = std::getenv("RESOURCEFORGE_MAX_DIM");
  if (v == nullptr || *v == '\0') return kDefaultMaxDim;
  char* end = nullptr;
  const unsigned long long n = std::strtoull(v, &end, 10);
  if (*end != '\0' || n == 0) throw FormatError("RESOURCEFORGE_MAX_DIM must be a positive integer");
  return static_cast<std::size_t>(n);
}

std::vector<double> parse_list(const std::string& text, const char* what) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    char* end = nullptr;
    const double v = std::strtod(item.c_str(), &end);
    if (item.empty() || *end != '\0' || !std::isfinite(v)) {
      throw FormatError(std::string(what) + ": cannot parse \"" + item + "\"");
    }
    out.push_back(v);
  }
  if (out.empty()) throw FormatError(std::string(what) + " is empty");
  return out;
}

std::vector<std::size_t> parse_counts(const std::string& text, const char* what) {
  std::vector<std::size_t> out;
  for (double v : parse_list(text, what)) {
    if (v < 0 || v != std::floor(v)) throw FormatError(std::string(what) + " must list non-negative integers");
    out.push_back(static_cast<std::size_t>(v));
  }
  return out;
}

class Runner {
 public:
  Runner(const Args& a, std::size_t max_dim) : a_(a), max_dim_(max_dim) {}

  DensityMatrix state(const std::string& path, const char* flag) const {
    if (path.empty()) throw FormatError(std::string(flag) + " is required");
    const io::StateFile f = io::parse_state(io::load_json(path));
    const std::size_t d = static_cast<std::size_t>(f.matrix.rows());
    if (d > max_dim_) {
      throw Error(ErrorCode::DimensionTooLarge, std::to_string(d) + " exceeds cap " + std::to_string(max_dim_));
    }
    return DensityMatrix::validate(f.matrix, f.dims);
  }
  DensityMatrix state() const { return state(a_.state, "--state"); }
  DensityMatrix state2() const { return state(a_.state2, "--state2"); }

  Hamiltonian hamiltonian() const {
    if (a_.ham.empty()) throw FormatError("--ham is required");
    return io::parse_hamiltonian(io::load_json(a_.ham));
  }

  ProjectiveMeasurement measurement(const std::string& path) const {
    return io::parse_measurement(io::load_json(path));
  }

  OptimizerConfig optimizer() const {
    OptimizerConfig cfg;
    if (!a_.config.empty()) cfg = io::parse_optimizer_config(io::load_json(a_.config));
    if (a_.restarts) cfg.restarts = *a_.restarts;
    if (a_.grid) cfg.grid_points = *a_.grid;
    if (a_.max_iterations) cfg.max_iterations = *a_.max_iterations;
    if (a_.tol) cfg.tolerance = *a_.tol;
    if (a_.seed) cfg.seed = *a_.seed;
    cfg.check();
    return cfg;
  }

  json fixed_result(Bits v, const std::vector<ProjectiveMeasurement>& ms) const {
    QuantumnessResult r;
    r.value = v;
    r.measurements = ms;
    json j = io::result_json(r);
    j.erase("trace");
    return j;
  }

  json one_way(QuantumnessResult (*search)(const DensityMatrix&, const OptimizerConfig&),
               Bits (*fixed)(const DensityMatrix&, const ProjectiveMeasurement&)) const {
    const auto rho = state();
    if (!a_.basis.empty()) {
      const auto m = measurement(a_.basis);
      return fixed_result(fixed(rho, m), {m});
    }
    return io::result_json(search(rho, optimizer()));
  }

  json zero_way(QuantumnessResult (*search)(const DensityMatrix&, const OptimizerConfig&),
                Bits (*fixed)(const DensityMatrix&, const ProjectiveMeasurement&,
                              const ProjectiveMeasurement&)) const {
    const auto rho = state();
    if (!a_.basis.empty() || !a_.basis2.empty()) {
      if (a_.basis.empty() || a_.basis2.empty()) throw FormatError("--basis and --basis2 go together");
      const auto ma = measurement(a_.basis);
      const auto mb = measurement(a_.basis2);
      return fixed_result(fixed(rho, ma, mb), {ma, mb});
    }
    return io::result_json(search(rho, optimizer()));
  }

  json protocol() const {
    const auto rho = state();
    if (a_.script.empty()) throw FormatError("--script is required");
    const ProtocolScript script = io::parse_protocol(io::load_json(a_.script));
    std::vector<Party> owners;
    if (a_.owners.empty()) {
      if (rho.subsystems() != 2) throw FormatError("--owners is required unless the state is bipartite");
      owners = {Party::A, Party::B};
    } else {
      std::stringstream ss(a_.owners);
      std::string item;
      while (std::getline(ss, item, ',')) {
        if (item == "A") {
          owners.push_back(Party::A);
        } else if (item == "B") {
          owners.push_back(Party::B);
        } else {
          throw FormatError("--owners takes a comma-separated list of A and B");
        }
      }
    }
    const Register out = run_protocol(Register(rho, owners), script, max_dim_);
    json j;
    j["state"] = io::state_json(out.state());
    json own = json::array();
    for (Party p : out.ownership()) own.push_back(p == Party::A ? "A" : "B");
    j["ownership"] = own;
    j["extracted_local_purity"] = extracted_local_purity(out, a_.epsilon, a_.exhaustive);
    if (script.mode == ProtocolMode::CLOCC && a_.owners.empty()) {
      j["deficit_bound"] = io::number(deficit_bound(rho, script, a_.epsilon, max_dim_));
    }
    return j;
  }

  json rate() const {
    const int modes = !a_.state.empty() + !a_.x.empty() + (a_.source || a_.target);
    if (modes != 1) throw FormatError("rate takes exactly one of --state, --x, or --source with --target");
    if (a_.source || a_.target) {
      if (!a_.source || !a_.target) throw FormatError("--source and --target go together");
      return io::rate_json(conversion_rate(*a_.source, *a_.target));
    }
    if (!a_.state.empty()) return io::rate_json(purity_rate(state()));
    const auto p = parse_list(a_.x, "--x");
    ComplexMatrix m = ComplexMatrix::Zero(p.size(), p.size());
    for (std::size_t i = 0; i < p.size(); ++i) m(i, i) = p[i];
    return io::rate_json(purity_rate(DensityMatrix::validate(m, {p.size()})));
  }

  json measure() const {
    const auto rho = state();
    if (a_.basis.empty()) throw FormatError("--basis is required");
    const auto ma = measurement(a_.basis);
    if (!a_.basis2.empty()) return io::state_json(measure_both(rho, ma, measurement(a_.basis2)));
    return io::state_json(measure_local(rho, ma, a_.side));
  }

  json random() const {
    if (a_.dims.empty()) throw FormatError("--dims is required");
    const Dims dims = parse_counts(a_.dims, "--dims");
    std::size_t d = 1;
    for (std::size_t k : dims) d *= k;
    if (d > max_dim_) {
      throw Error(ErrorCode::DimensionTooLarge, std::to_string(d) + " exceeds cap " + std::to_string(max_dim_));
    }
    return io::state_json(random_density(dims, a_.rank == 0 ? d : a_.rank, a_.random_seed));
  }

  const Args& args() const { return a_; }
  std::size_t max_dim() const { return max_dim_; }

 private:
  const Args& a_;
  std::size_t max_dim_;
};

json bits(const char* key, Bits v) { return {{key, io::number(v)}}; }

using Handler = std::function<json(const Runner&)>;

const std::map<std::string, Handler>& handlers() {
  static const std::map<std::string, Handler> table = {
      {"entropy", [](const Runner& r) { return bits("entropy_bits", vn_entropy(r.state())); }},
      {"relent",
       [](const Runner& r) { return bits("relative_entropy_bits", relative_entropy(r.state(), r.state2())); }},
      {"mutinfo", [](const Runner& r) { return bits("mutual_information_bits", mutual_information(r.state())); }},
      {"negentropy", [](const Runner& r) { return bits("negentropy_bits", negentropy(r.state())); }},
      {"gibbs", [](const Runner& r) { return io::state_json(gibbs_state(r.hamiltonian())); }},
      {"fgap",
       [](const Runner& r) { return bits("free_energy_gap_bits", free_energy_gap(r.state(), r.hamiltonian())); }},
      {"discord",
       [](const Runner& r) {
         return r.args().zero_way ? r.zero_way(&discord_zero_way, &discord_zero_way_fixed)
                                  : r.one_way(&discord, &discord_fixed);
       }},
      {"deficit", [](const Runner& r) { return r.one_way(&deficit_one_way, &deficit_one_way_fixed); }},
      {"deficit0", [](const Runner& r) { return r.zero_way(&deficit_zero_way, &deficit_zero_way_fixed); }},
      {"relent-cq", [](const Runner& r) { return io::result_json(relent_to_cq(r.state(), r.optimizer())); }},
      {"relent-cc", [](const Runner& r) { return io::result_json(relent_to_cc(r.state(), r.optimizer())); }},
      {"gendeficit",
       [](const Runner& r) {
         return io::result_json(generalized_deficit(r.state(), r.args().extra_dim, r.optimizer(), r.max_dim()));
       }},
      {"multicopy",
       [](const Runner& r) {
         json j = io::result_json(multicopy_deficit(r.state(), r.args().copies, r.optimizer(), r.max_dim()));
         j["copies"] = r.args().copies;
         return j;
       }},
      {"majorize",
       [](const Runner& r) {
         if (r.args().x.empty() || r.args().y.empty()) throw FormatError("--x and --y are required");
         return json{{"majorizes", majorizes(Spectrum(parse_list(r.args().x, "--x")),
                                             Spectrum(parse_list(r.args().y, "--y")))}};
       }},
      {"transition",
       [](const Runner& r) {
         return json{{"transition", single_shot_noisy_transition(r.state(), r.state2(), r.max_dim())}};
       }},
      {"rate", [](const Runner& r) { return r.rate(); }},
      {"thermorate",
       [](const Runner& r) { return io::rate_json(thermo_rate(r.state(), r.state2(), r.hamiltonian())); }},
      {"protocol", [](const Runner& r) { return r.protocol(); }},
      {"validate",
       [](const Runner& r) {
         const auto rho = r.state();
         return json{{"valid", true}, {"dims", rho.dims()}};
       }},
      {"spectrum",
       [](const Runner& r) {
         json values = json::array();
         for (double v : eig_hermitian(r.state().matrix()).spectrum.values()) values.push_back(io::number(v));
         return json{{"spectrum", values}};
       }},
      {"tensor", [](const Runner& r) { return io::state_json(tensor(r.state(), r.state2(), r.max_dim())); }},
      {"ptrace",
       [](const Runner& r) {
         if (r.args().keep.empty()) throw FormatError("--keep is required");
         const auto keep = parse_counts(r.args().keep, "--keep");
         return io::state_json(partial_trace(r.state(), keep));
       }},
      {"measure", [](const Runner& r) { return r.measure(); }},
      {"dephase", [](const Runner& r) { return io::state_json(dephasing_channel(r.state(), r.args().qubit)); }},
      {"random", [](const Runner& r) { return r.random(); }},
  };
  return table;
}

void write_tsv(const json& j, const std::string& prefix, std::ostream& os) {
  auto scalar = [](const json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); };
  auto flat_row = [&](const json& row) {
    std::string line;
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) line += '\t';
      line += row[i].is_array() ? scalar(row[i][0]) + "," + scalar(row[i][1]) : scalar(row[i]);
    }
    return line;
  };
  for (auto it = j.begin(); it != j.end(); ++it) {
    const std::string key = prefix.empty() ? it.key() : prefix + "." + it.key();
    const json& v = it.value();
    if (v.is_object()) {
      write_tsv(v, key, os);
    } else if (v.is_array() && !v.empty() && v[0].is_array()) {
      for (std::size_t i = 0; i < v.size(); ++i) os << key << '\t' << flat_row(v[i]) << '\n';
    } else if (v.is_array()) {
      os << key << '\t' << flat_row(v) << '\n';
    } else {
      os << key << '\t' << scalar(v) << '\n';
    }
  }
}

void add_optimizer_flags(CLI::App* sub, Args& a) {
  sub->add_option("--restarts", a.restarts, "simplex restarts");
  sub->add_option("--grid", a.grid, "lattice points per angle");
  sub->add_option("--max-iter", a.max_iterations, "iterations per simplex run");
  sub->add_option("--tol", a.tol, "simplex size tolerance");
  sub->add_option("--seed", a.seed, "random seed");
  sub->add_option("--config", a.config, "optimizer config file")->check(CLI::ExistingFile);
}

}  // namespace

int main(int argc, char** argv) {
  Args a;
  CLI::App app{"Quantum resource-theory toolkit"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--out", a.out, "output format")->check(CLI::IsMember({"json", "tsv"}));

  auto sub = [&](const char* name, const char* help) { return app.add_subcommand(name, help); };
  auto with_state = [&](CLI::App* s) { s->add_option("--state", a.state, "state file"); return s; };
  auto with_two = [&](CLI::App* s) {
    with_state(s)->add_option("--state2", a.state2, "second state file");
    return s;
  };

  with_state(sub("entropy", "von Neumann entropy"));
  with_two(sub("relent", "relative entropy S(state || state2)"));
  with_state(sub("mutinfo", "mutual information of a bipartite state"));
  with_state(sub("negentropy", "log d - S"));
  sub("gibbs", "Gibbs state of a Hamiltonian")->add_option("--ham", a.ham, "Hamiltonian file");
  with_state(sub("fgap", "free-energy gap to the Gibbs state"))->add_option("--ham", a.ham, "Hamiltonian file");

  {
    auto* disc = with_state(sub("discord", "discord (one-way, or zero-way)"));
    auto* def = with_state(sub("deficit", "one-way deficit"));
    auto* def0 = with_state(sub("deficit0", "zero-way deficit"));
    for (auto* s : {disc, def, def0}) {
      add_optimizer_flags(s, a);
      s->add_option("--basis", a.basis, "fixed measurement on A instead of optimizing");
    }
    disc->add_option("--basis2", a.basis2, "fixed measurement on B (zero-way)");
    def0->add_option("--basis2", a.basis2, "fixed measurement on B");
    disc->add_flag("--zero-way", a.zero_way, "measure both sides");
  }
  add_optimizer_flags(with_state(sub("relent-cq", "relative entropy to classical-quantum states")), a);
  add_optimizer_flags(with_state(sub("relent-cc", "relative entropy to classical-classical states")), a);
  {
    auto* s = with_state(sub("gendeficit", "one-way deficit after a local isometry"));
    add_optimizer_flags(s, a);
    s->add_option("--extra-dim", a.extra_dim, "dimensions added to A")->capture_default_str();
  }
  {
    auto* s = with_state(sub("multicopy", "per-copy deficit of two copies"));
    add_optimizer_flags(s, a);
    s->add_option("--copies", a.copies, "1 or 2")->capture_default_str();
  }
  {
    auto* s = sub("majorize", "majorization of two spectra");
    s->add_option("--x", a.x, "comma-separated spectrum");
    s->add_option("--y", a.y, "comma-separated spectrum");
  }
  with_two(sub("transition", "single-shot noisy transition state -> state2"));
  {
    auto* s = with_state(sub("rate", "purity rate, or conversion rate from relative-entropy distances"));
    s->add_option("--x", a.x, "spectrum of a diagonal state");
    s->add_option("--source", a.source, "distance of the source state (bits)");
    s->add_option("--target", a.target, "distance of the target state (bits)");
  }
  with_two(sub("thermorate", "thermodynamic conversion rate state -> state2"))
      ->add_option("--ham", a.ham, "Hamiltonian file");
  {
    auto* s = with_state(sub("protocol", "run a CLOCC/NLOCC script"));
    s->add_option("--script", a.script, "protocol file");
    s->add_option("--epsilon", a.epsilon, "purity fidelity slack")->capture_default_str();
    s->add_option("--owners", a.owners, "comma-separated A/B per subsystem");
    s->add_flag("--exhaustive", a.exhaustive, "exhaustive pure-qubit search");
  }
  with_state(sub("validate", "check a state file"));
  with_state(sub("spectrum", "eigenvalues, descending"));
  with_two(sub("tensor", "state (x) state2"));
  with_state(sub("ptrace", "partial trace"))->add_option("--keep", a.keep, "subsystems to keep, comma-separated");
  {
    auto* s = with_state(sub("measure", "dephase in a measurement basis"));
    s->add_option("--basis", a.basis, "measurement file");
    s->add_option("--basis2", a.basis2, "measurement on subsystem 1; measures both sides");
    s->add_option("--side", a.side, "measured subsystem")->capture_default_str();
  }
  with_state(sub("dephase", "computational-basis dephasing of a qubit"))
      ->add_option("--qubit", a.qubit, "qubit subsystem")
      ->required();
  {
    auto* s = sub("random", "random density matrix (Hilbert-Schmidt for full rank)");
    s->add_option("--dims", a.dims, "comma-separated dimensions")->required();
    s->add_option("--rank", a.rank, "rank (default full)");
    s->add_option("--seed", a.random_seed, "seed");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    const Runner runner(a, max_dim_from_env());
    const std::string name = app.get_subcommands().front()->get_name();
    const json result = handlers().at(name)(runner);
    if (a.out == "tsv") {
      write_tsv(result, "", std::cout);
    } else {
      std::cout << result.dump() << '\n';
    }
    return 0;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const FormatError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
