#include "resourceforge/protocol.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "resourceforge/measurements.hpp"

namespace resourceforge {

namespace {

const char* party_name(Party p) { return p == Party::A ? "A" : "B"; }

Party other(Party p) { return p == Party::A ? Party::B : Party::A; }

std::size_t resolve(const Register& r, Party side, std::size_t local) {
  const auto owned = r.owned_by(side);
  if (local >= owned.size()) {
    throw Error(ErrorCode::IndexOutOfRange, std::string(party_name(side)) + " owns " +
                                                std::to_string(owned.size()) +
                                                " subsystems, index " + std::to_string(local));
  }
  return owned[local];
}

Register apply(const Register& r, const LocalUnitary& step, ProtocolMode, std::size_t) {
  const auto owned = r.owned_by(step.side);
  const Dims& dims = r.state().dims();
  std::size_t local_dim = 1;
  for (std::size_t k : owned) local_dim *= dims[k];
  if (owned.empty() || static_cast<std::size_t>(step.matrix.rows()) != local_dim) {
    throw Error(ErrorCode::DimensionMismatch,
                std::string(party_name(step.side)) + " holds dimension " +
                    std::to_string(owned.empty() ? 0 : local_dim) + ", unitary is " +
                    std::to_string(step.matrix.rows()));
  }
  if (!is_unitary(step.matrix)) throw Error(ErrorCode::NotUnitary, "local operation is not unitary");

  // Bring the side's subsystems to the front, act, and restore the layout.
  std::vector<std::size_t> order = owned;
  for (std::size_t k = 0; k < dims.size(); ++k) {
    if (std::find(owned.begin(), owned.end(), k) == owned.end()) order.push_back(k);
  }
  std::vector<std::size_t> inverse(order.size());
  for (std::size_t k = 0; k < order.size(); ++k) inverse[order[k]] = k;

  const DensityMatrix front = permute_subsystems(r.state(), order);
  const auto rest = static_cast<Eigen::Index>(front.dim() / local_dim);
  const ComplexMatrix full = kron(step.matrix, ComplexMatrix::Identity(rest, rest));
  const DensityMatrix acted =
      DensityMatrix::trusted(full * front.matrix() * full.adjoint(), front.dims());
  return Register(permute_subsystems(acted, inverse), r.ownership());
}

Register apply(const Register& r, const AddMaxMixedAncilla& step, ProtocolMode mode,
               std::size_t max_dim) {
  if (mode != ProtocolMode::NLOCC) {
    throw Error(ErrorCode::IllegalStepForMode, "CLOCC does not allow adding ancillas");
  }
  if (step.dim < 2) throw Error(ErrorCode::InvalidArgument, "ancilla dimension must be at least 2");
  const DensityMatrix ancilla = maximally_mixed(Dims{step.dim});
  std::vector<Party> ownership = r.ownership();
  if (step.side == Party::A) {
    ownership.insert(ownership.begin(), Party::A);
    return Register(tensor(ancilla, r.state(), max_dim), std::move(ownership));
  }
  ownership.push_back(Party::B);
  return Register(tensor(r.state(), ancilla, max_dim), std::move(ownership));
}

Register apply(const Register& r, const LocalPartialTrace& step, ProtocolMode, std::size_t) {
  const std::size_t target = resolve(r, step.side, step.subsystem);
  std::vector<std::size_t> keep;
  std::vector<Party> ownership;
  for (std::size_t k = 0; k < r.ownership().size(); ++k) {
    if (k == target) continue;
    keep.push_back(k);
    ownership.push_back(r.ownership()[k]);
  }
  return Register(partial_trace(r.state(), keep), std::move(ownership));
}

Register apply(const Register& r, const SendQubit& step, ProtocolMode, std::size_t) {
  const std::size_t target = resolve(r, step.from, step.qubit);
  std::vector<Party> ownership = r.ownership();
  ownership[target] = other(step.from);
  return Register(dephasing_channel(r.state(), target), std::move(ownership));
}

// Fidelity of the reduced state on `qubits` with the product of the given
// single-qubit vectors.
double product_fidelity(const DensityMatrix& state, std::vector<std::size_t> qubits,
                        const std::vector<ComplexVector>& top) {
  std::sort(qubits.begin(), qubits.end());
  const DensityMatrix reduced = partial_trace(state, qubits);
  ComplexVector psi = ComplexVector::Ones(1);
  for (std::size_t q : qubits) {
    const ComplexVector& v = top[q];
    ComplexVector next(psi.size() * v.size());
    for (Eigen::Index i = 0; i < psi.size(); ++i) next.segment(i * v.size(), v.size()) = psi(i) * v;
    psi = std::move(next);
  }
  return (psi.adjoint() * reduced.matrix() * psi)(0).real();
}

}  // namespace

Register::Register(DensityMatrix state, std::vector<Party> ownership)
    : state_(std::move(state)), ownership_(std::move(ownership)) {
  if (ownership_.size() != state_.subsystems()) {
    throw Error(ErrorCode::DimensionMismatch, "ownership list length differs from subsystem count");
  }
}

Register Register::bipartite(const DensityMatrix& rho) {
  if (rho.subsystems() != 2) {
    throw Error(ErrorCode::NotBipartite,
                "expected 2 subsystems, got " + std::to_string(rho.subsystems()));
  }
  return Register(rho, {Party::A, Party::B});
}

std::vector<std::size_t> Register::owned_by(Party side) const {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < ownership_.size(); ++k) {
    if (ownership_[k] == side) out.push_back(k);
  }
  return out;
}

Register apply_step(const Register& r, const ProtocolStep& step, ProtocolMode mode,
                    std::size_t max_dim) {
  return std::visit([&](const auto& s) { return apply(r, s, mode, max_dim); }, step);
}

Register run_protocol(const Register& r, const ProtocolScript& script, std::size_t max_dim) {
  Register current = r;
  for (std::size_t i = 0; i < script.steps.size(); ++i) {
    try {
      current = apply_step(current, script.steps[i], script.mode, max_dim);
    } catch (const Error& e) {
      throw Error(e.code(), "step " + std::to_string(i) + ": " + e.detail());
    }
  }
  return current;
}

std::size_t extracted_local_purity(const Register& r, double epsilon, bool exhaustive) {
  if (!(epsilon > 0.0 && epsilon < 1.0)) {
    throw Error(ErrorCode::InvalidArgument, "epsilon must lie in (0, 1)");
  }
  const DensityMatrix& state = r.state();
  std::vector<std::size_t> qubits;
  std::vector<ComplexVector> top(state.subsystems());
  std::vector<double> purity(state.subsystems(), 0.0);
  for (std::size_t k = 0; k < state.subsystems(); ++k) {
    if (state.dims()[k] != 2) continue;
    qubits.push_back(k);
    const EigenDecomposition eig = eig_hermitian(partial_trace(state, {k}).matrix());
    top[k] = eig.vectors.col(0);
    purity[k] = eig.spectrum[0];
  }
  const double threshold = 1.0 - epsilon;

  if (exhaustive) {
    if (qubits.size() > kExhaustiveQubitLimit) {
      throw Error(ErrorCode::InvalidArgument, "exhaustive purity search is limited to " +
                                                  std::to_string(kExhaustiveQubitLimit) + " qubits");
    }
    std::size_t best = 0;
    for (std::size_t mask = 1; mask < (std::size_t{1} << qubits.size()); ++mask) {
      std::vector<std::size_t> subset;
      for (std::size_t b = 0; b < qubits.size(); ++b) {
        if (mask & (std::size_t{1} << b)) subset.push_back(qubits[b]);
      }
      if (subset.size() > best && product_fidelity(state, subset, top) >= threshold) {
        best = subset.size();
      }
    }
    return best;
  }

  std::stable_sort(qubits.begin(), qubits.end(),
                   [&](std::size_t a, std::size_t b) { return purity[a] > purity[b]; });
  std::size_t count = 0;
  std::vector<std::size_t> chosen;
  for (std::size_t q : qubits) {
    chosen.push_back(q);
    if (product_fidelity(state, chosen, top) < threshold) break;
    ++count;
  }
  return count;
}

Bits deficit_bound(const DensityMatrix& rho, const ProtocolScript& script, double epsilon,
                   std::size_t max_dim) {
  if (script.mode != ProtocolMode::CLOCC) {
    throw Error(ErrorCode::IllegalStepForMode, "the deficit relation is stated for CLOCC scripts");
  }
  const Register out = run_protocol(Register::bipartite(rho), script, max_dim);
  const double n = std::log2(static_cast<double>(rho.dim()));
  return n - vn_entropy(rho) - static_cast<double>(extracted_local_purity(out, epsilon));
}

}  // namespace resourceforge
