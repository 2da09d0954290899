// Dense statevector ground truth for small qubit counts.
//
// Basis states are indexed little-endian: qubit 1 is the least significant
// bit of the amplitude index. Nothing here uses the GF(2) arithmetic of the
// binary core; bit patterns are only read, never multiplied.

#pragma once

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

#include "lcgraph/clifford.hpp"
#include "lcgraph/decomposition.hpp"
#include "lcgraph/graph.hpp"
#include "lcgraph/reduction.hpp"
#include "lcgraph/stabilizer.hpp"

namespace lcg::oracle {

inline constexpr double tolerance = 1e-9;
inline constexpr std::size_t default_qubit_limit = 12;

class TooLargeError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct StateVector {
    std::size_t qubits = 0;
    Eigen::VectorXcd amplitudes;

    [[nodiscard]] double norm() const { return amplitudes.norm(); }
};

/// |0...0>.
[[nodiscard]] StateVector zero_state(std::size_t n);

/// Controlled-Z on every edge applied to |+>^n.
[[nodiscard]] StateVector build_graph_state(const Graph& g, std::size_t qubit_limit = default_qubit_limit);

/// Applies a 2x2 matrix to the 0-based qubit q.
void apply_single_qubit(StateVector& state, const Eigen::Matrix2cd& u, std::size_t q);

/// Tensor product of sigma matrices with no extra phase; Y is the Hermitian sigma_y.
[[nodiscard]] StateVector apply_pauli(const StateVector& state, const PauliString& p);

/// K_j |psi> == |psi> for every vertex j, within tolerance.
[[nodiscard]] bool satisfies_graph_equations(const StateVector& state, const Graph& g);

/// A single-qubit Clifford unitary together with the binary matrix
/// [[a, b], [c, d]] of its conjugation action on (Z, X) up to signs.
struct SingleQubitClifford {
    Eigen::Matrix2cd u;
    QubitSymplectic action;
};

/// The 24 single-qubit Cliffords modulo global phase, generated from words in
/// Hadamard and the phase gate.
[[nodiscard]] const std::vector<SingleQubitClifford>& clifford_table();

/// The binary action of a 2x2 unitary, or throws std::invalid_argument when it
/// does not normalize the Pauli group.
[[nodiscard]] QubitSymplectic conjugation_action(const Eigen::Matrix2cd& u);

/// One unitary per qubit realizing q up to Pauli factors.
[[nodiscard]] std::vector<SingleQubitClifford> lift_local_clifford(const LocalCliffordOp& q);

/// Applies the tensor product of per-qubit unitaries.
[[nodiscard]] StateVector apply_local(const StateVector& state, const std::vector<SingleQubitClifford>& ops);
[[nodiscard]] StateVector apply_local(const StateVector& state, const std::vector<Eigen::Matrix2cd>& ops);

/// |<psi|M_j|psi>| == 1 for every generator column, i.e. psi is a +-1
/// eigenvector of each generator.
[[nodiscard]] bool stabilized_up_to_signs(const StateVector& state, const StabilizerGenMatrix& s);

/// The joint +1 eigenvector of the (phaseless, Hermitian) generators,
/// obtained by projecting basis states with prod_j (I + M_j) / 2.
[[nodiscard]] StateVector stabilizer_state(const StabilizerGenMatrix& s, std::size_t qubit_limit = default_qubit_limit);

// End-to-end checks of binary-level claims against the statevector.

/// lift(q) maps the state of S to a state stabilized up to signs by S'.
[[nodiscard]] bool check_clifford_maps(const LocalCliffordOp& q, const StabilizerGenMatrix& s,
                                       const StabilizerGenMatrix& s_prime);

/// lift(q) maps |G> to a state stabilized up to signs by the generators of `image`.
[[nodiscard]] bool check_graph_action(const LocalCliffordOp& q, const Graph& g, const Graph& image);

/// Replays the sequence as lifted single-vertex local complementation
/// unitaries on |G> and checks the result against the generators of `target`.
[[nodiscard]] bool check_sequence(const Graph& g, const LCSequence& seq, const Graph& target);

/// lift(w.q) maps the state of S onto a state stabilized up to signs by w.graph.
[[nodiscard]] bool check_reduction(const StabilizerGenMatrix& s, const ReductionWitness& w);

}  // namespace lcg::oracle
