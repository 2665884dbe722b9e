#pragma once

// Protocol simulator for closed and noisy local operations with classical
// communication over dephasing channels (CLOCC / NLOCC).
//
// A register is a density matrix whose subsystems are each owned by Alice
// or Bob. Steps address subsystems by their position among the acting
// party's own subsystems (in register order), so "A's qubit 0" is the first
// subsystem Alice owns. No primitive creates purity: every step is unital
// except the partial trace.

#include <cstddef>
#include <variant>
#include <vector>

#include "resourceforge/entropy.hpp"

namespace resourceforge {

enum class Party { A, B };
enum class ProtocolMode { CLOCC, NLOCC };

struct LocalUnitary {
  Party side;
  /// Acts on everything `side` owns, in register order.
  ComplexMatrix matrix;
};

/// NLOCC only. Alice's ancillas are prepended to the register, Bob's appended.
struct AddMaxMixedAncilla {
  Party side;
  std::size_t dim;
};

struct LocalPartialTrace {
  Party side;
  std::size_t subsystem;
};

/// Computational-basis dephasing of one of the sender's qubits, after which
/// the qubit belongs to the other party.
struct SendQubit {
  Party from;
  std::size_t qubit;
};

using ProtocolStep = std::variant<LocalUnitary, AddMaxMixedAncilla, LocalPartialTrace, SendQubit>;

struct ProtocolScript {
  ProtocolMode mode = ProtocolMode::CLOCC;
  std::vector<ProtocolStep> steps;
};

class Register {
 public:
  Register(DensityMatrix state, std::vector<Party> ownership);

  /// Subsystem 0 to Alice, subsystem 1 to Bob.
  static Register bipartite(const DensityMatrix& rho);

  const DensityMatrix& state() const noexcept { return state_; }
  const std::vector<Party>& ownership() const noexcept { return ownership_; }

  /// Register positions of the subsystems owned by `side`.
  std::vector<std::size_t> owned_by(Party side) const;

 private:
  DensityMatrix state_;
  std::vector<Party> ownership_;
};

Register apply_step(const Register& r, const ProtocolStep& step, ProtocolMode mode,
                    std::size_t max_dim = kDefaultMaxDim);

/// Left-to-right fold of apply_step. A failing step is reported with its
/// index and the original error code.
Register run_protocol(const Register& r, const ProtocolScript& script,
                      std::size_t max_dim = kDefaultMaxDim);

inline constexpr double kDefaultPurityEpsilon = 0.01;
inline constexpr std::size_t kExhaustiveQubitLimit = 4;

/// Number of qubit subsystems that are jointly within fidelity 1 - epsilon
/// of a pure product state (each qubit's top eigenvector). Greedy selection
/// by single-qubit purity by default; `exhaustive` tries every subset and is
/// limited to registers with at most kExhaustiveQubitLimit qubits.
///
/// A single-shot count, not the asymptotic localisable information.
std::size_t extracted_local_purity(const Register& r, double epsilon = kDefaultPurityEpsilon,
                                   bool exhaustive = false);

/// N - S(rho) - extracted_local_purity(run_protocol(rho, script)), with
/// N = log2 of the total dimension. Upper bound on the deficit achieved by
/// this CLOCC script. NLOCC scripts are rejected with IllegalStepForMode.
Bits deficit_bound(const DensityMatrix& rho, const ProtocolScript& script,
                   double epsilon = kDefaultPurityEpsilon, std::size_t max_dim = kDefaultMaxDim);

}  // namespace resourceforge
