#include "lcgraph/oracle.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

namespace lcg::oracle {

namespace {

using cd = std::complex<double>;
constexpr cd I_unit{0.0, 1.0};

Eigen::Matrix2cd pauli_x() {
    Eigen::Matrix2cd m;
    m << 0, 1, 1, 0;
    return m;
}

Eigen::Matrix2cd pauli_y() {
    Eigen::Matrix2cd m;
    m << 0, -I_unit, I_unit, 0;
    return m;
}

Eigen::Matrix2cd pauli_z() {
    Eigen::Matrix2cd m;
    m << 1, 0, 0, -1;
    return m;
}

Eigen::Matrix2cd hadamard() {
    Eigen::Matrix2cd m;
    m << 1, 1, 1, -1;
    return m / std::sqrt(2.0);
}

Eigen::Matrix2cd phase_gate() {
    Eigen::Matrix2cd m;
    m << 1, 0, 0, I_unit;
    return m;
}

void check_size(std::size_t n, std::size_t limit) {
    if (n > limit)
        throw TooLargeError("statevector oracle limited to " + std::to_string(limit) + " qubits, got " +
                            std::to_string(n));
}

// Scales u so that its first non-negligible entry is real and positive.
Eigen::Matrix2cd strip_global_phase(const Eigen::Matrix2cd& u) {
    for (Eigen::Index k = 0; k < 4; ++k) {
        const cd x = u(k % 2, k / 2);
        if (std::abs(x) > 1e-6) return u * (std::conj(x) / std::abs(x));
    }
    return u;
}

}  // namespace

StateVector zero_state(std::size_t n) {
    StateVector s{n, Eigen::VectorXcd::Zero(Eigen::Index{1} << n)};
    s.amplitudes(0) = 1.0;
    return s;
}

StateVector build_graph_state(const Graph& g, std::size_t qubit_limit) {
    const auto n = g.size();
    check_size(n, qubit_limit);
    const auto dim = std::size_t{1} << n;
    StateVector s{n, Eigen::VectorXcd::Constant(static_cast<Eigen::Index>(dim), 1.0 / std::sqrt(double(dim)))};
    for (auto [a, b] : g.edges()) {
        const std::size_t mask = (std::size_t{1} << (a - 1)) | (std::size_t{1} << (b - 1));
        for (std::size_t x = 0; x < dim; ++x)
            if ((x & mask) == mask) s.amplitudes(static_cast<Eigen::Index>(x)) *= -1.0;
    }
    return s;
}

void apply_single_qubit(StateVector& state, const Eigen::Matrix2cd& u, std::size_t q) {
    if (q >= state.qubits) throw std::out_of_range("apply_single_qubit: qubit out of range");
    const auto dim = static_cast<Eigen::Index>(state.amplitudes.size());
    const Eigen::Index bit = Eigen::Index{1} << q;
    for (Eigen::Index x = 0; x < dim; ++x) {
        if (x & bit) continue;
        const cd a0 = state.amplitudes(x);
        const cd a1 = state.amplitudes(x | bit);
        state.amplitudes(x) = u(0, 0) * a0 + u(0, 1) * a1;
        state.amplitudes(x | bit) = u(1, 0) * a0 + u(1, 1) * a1;
    }
}

StateVector apply_pauli(const StateVector& state, const PauliString& p) {
    if (p.size() != state.qubits) throw std::invalid_argument("apply_pauli: size mismatch");
    StateVector out = state;
    for (std::size_t q = 0; q < p.size(); ++q) {
        switch (p.at(q)) {
            case 'X': apply_single_qubit(out, pauli_x(), q); break;
            case 'Y': apply_single_qubit(out, pauli_y(), q); break;
            case 'Z': apply_single_qubit(out, pauli_z(), q); break;
            default: break;
        }
    }
    return out;
}

bool satisfies_graph_equations(const StateVector& state, const Graph& g) {
    if (g.size() != state.qubits) throw std::invalid_argument("satisfies_graph_equations: size mismatch");
    const auto n = g.size();
    for (std::size_t j = 0; j < n; ++j) {
        StateVector k = state;
        apply_single_qubit(k, pauli_x(), j);
        for (std::size_t i = 0; i < n; ++i)
            if (g.adjacency()(i, j)) apply_single_qubit(k, pauli_z(), i);
        if ((k.amplitudes - state.amplitudes).norm() > tolerance) return false;
    }
    return true;
}

QubitSymplectic conjugation_action(const Eigen::Matrix2cd& u) {
    // (z, x) bits of the Pauli that u P u^dagger is proportional to.
    auto image = [&u](const Eigen::Matrix2cd& p) -> std::pair<bool, bool> {
        const Eigen::Matrix2cd m = u * p * u.adjoint();
        const std::array<std::pair<Eigen::Matrix2cd, std::pair<bool, bool>>, 3> paulis{
            {{pauli_z(), {true, false}}, {pauli_x(), {false, true}}, {pauli_y(), {true, true}}}};
        for (const auto& [sigma, bits] : paulis)
            if ((m - sigma).norm() < tolerance || (m + sigma).norm() < tolerance) return bits;
        throw std::invalid_argument("conjugation_action: unitary is not a Clifford");
    };
    const auto [a, c] = image(pauli_z());
    const auto [b, d] = image(pauli_x());
    return {a, b, c, d};
}

const std::vector<SingleQubitClifford>& clifford_table() {
    static const std::vector<SingleQubitClifford> table = [] {
        std::vector<SingleQubitClifford> found;
        auto known = [&found](const Eigen::Matrix2cd& u) {
            const Eigen::Matrix2cd key = strip_global_phase(u);
            for (const auto& e : found)
                if ((strip_global_phase(e.u) - key).norm() < tolerance) return true;
            return false;
        };

        std::vector<Eigen::Matrix2cd> frontier{Eigen::Matrix2cd::Identity()};
        found.push_back({Eigen::Matrix2cd::Identity(), QubitSymplectic::identity()});
        const std::array<Eigen::Matrix2cd, 2> generators{hadamard(), phase_gate()};
        for (int length = 1; length <= 6; ++length) {
            std::vector<Eigen::Matrix2cd> next;
            for (const auto& w : frontier)
                for (const auto& gen : generators) {
                    const Eigen::Matrix2cd u = gen * w;
                    if (known(u)) continue;
                    found.push_back({u, conjugation_action(u)});
                    next.push_back(u);
                }
            frontier = std::move(next);
        }
        return found;
    }();
    return table;
}

std::vector<SingleQubitClifford> lift_local_clifford(const LocalCliffordOp& q) {
    std::vector<SingleQubitClifford> out;
    out.reserve(q.qubits());
    for (std::size_t i = 0; i < q.qubits(); ++i) {
        const auto want = q.qubit(i);
        const auto& table = clifford_table();
        auto it = std::find_if(table.begin(), table.end(), [&](const auto& e) { return e.action == want; });
        if (it == table.end()) throw std::logic_error("lift_local_clifford: no unitary for qubit " + std::to_string(i + 1));
        out.push_back(*it);
    }
    return out;
}

StateVector apply_local(const StateVector& state, const std::vector<SingleQubitClifford>& ops) {
    if (ops.size() != state.qubits) throw std::invalid_argument("apply_local: size mismatch");
    StateVector out = state;
    for (std::size_t q = 0; q < ops.size(); ++q) apply_single_qubit(out, ops[q].u, q);
    return out;
}

StateVector apply_local(const StateVector& state, const std::vector<Eigen::Matrix2cd>& ops) {
    if (ops.size() != state.qubits) throw std::invalid_argument("apply_local: size mismatch");
    StateVector out = state;
    for (std::size_t q = 0; q < ops.size(); ++q) apply_single_qubit(out, ops[q], q);
    return out;
}

bool stabilized_up_to_signs(const StateVector& state, const StabilizerGenMatrix& s) {
    if (s.qubits() != state.qubits) throw std::invalid_argument("stabilized_up_to_signs: size mismatch");
    if (std::abs(state.norm() - 1.0) > tolerance) return false;
    for (std::size_t j = 0; j < s.qubits(); ++j) {
        const cd expectation = state.amplitudes.dot(apply_pauli(state, s.generator(j)).amplitudes);
        if (std::abs(std::abs(expectation) - 1.0) > tolerance) return false;
    }
    return true;
}

StateVector stabilizer_state(const StabilizerGenMatrix& s, std::size_t qubit_limit) {
    const auto n = s.qubits();
    check_size(n, qubit_limit);
    const auto gens = s.to_pauli_strings();
    for (std::size_t x = 0; x < (std::size_t{1} << n); ++x) {
        StateVector v = zero_state(n);
        v.amplitudes.setZero();
        v.amplitudes(static_cast<Eigen::Index>(x)) = 1.0;
        for (const auto& m : gens) v.amplitudes = 0.5 * (v.amplitudes + apply_pauli(v, m).amplitudes);
        const double nrm = v.norm();
        if (nrm > 1e-6) {
            v.amplitudes /= nrm;
            return v;
        }
    }
    throw std::logic_error("stabilizer_state: generators have no joint +1 eigenvector");
}

bool check_clifford_maps(const LocalCliffordOp& q, const StabilizerGenMatrix& s, const StabilizerGenMatrix& s_prime) {
    const StateVector mapped = apply_local(stabilizer_state(s), lift_local_clifford(q));
    return stabilized_up_to_signs(mapped, s_prime);
}

bool check_graph_action(const LocalCliffordOp& q, const Graph& g, const Graph& image) {
    const StateVector mapped = apply_local(build_graph_state(g), lift_local_clifford(q));
    return stabilized_up_to_signs(mapped, StabilizerGenMatrix::from_graph(image));
}

bool check_sequence(const Graph& g, const LCSequence& seq, const Graph& target) {
    StateVector state = build_graph_state(g);
    Graph current = g;
    for (auto v : seq.expanded()) {
        state = apply_local(state, lift_local_clifford(local_complement_clifford(current, v)));
        current = local_complement(current, v);
    }
    return stabilized_up_to_signs(state, StabilizerGenMatrix::from_graph(target));
}

bool check_reduction(const StabilizerGenMatrix& s, const ReductionWitness& w) {
    return check_clifford_maps(w.q, s, StabilizerGenMatrix::from_graph(w.graph));
}

}  // namespace lcg::oracle
