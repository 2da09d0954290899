// Local Clifford operations in the binary picture.
//
// A local Clifford operation is Q = [[A, B], [C, D]] with diagonal n x n
// blocks, acting on (z | x) vectors. Only the four diagonals are stored.
// On qubit i it is the 2x2 matrix [[a_i, b_i], [c_i, d_i]] with
// a_i d_i + b_i c_i = 1.

#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>

#include "lcgraph/gf2.hpp"
#include "lcgraph/graph.hpp"
#include "lcgraph/stabilizer.hpp"

namespace lcg {

/// Action on one qubit: z' = a z + b x, x' = c z + d x.
struct QubitSymplectic {
    bool a = true;
    bool b = false;
    bool c = false;
    bool d = true;

    [[nodiscard]] constexpr bool invertible() const noexcept { return (a && d) != (b && c); }
    friend constexpr bool operator==(QubitSymplectic, QubitSymplectic) = default;

    static constexpr QubitSymplectic identity() { return {true, false, false, true}; }
    /// Swaps Z and X.
    static constexpr QubitSymplectic hadamard() { return {false, true, true, false}; }
    /// Fixes Z and sends X to Y.
    static constexpr QubitSymplectic phase() { return {true, true, false, true}; }
};

/// q2 * q1 as 2x2 matrices over GF(2): q1 acts first.
[[nodiscard]] constexpr QubitSymplectic operator*(QubitSymplectic q2, QubitSymplectic q1) noexcept {
    return {(q2.a && q1.a) != (q2.b && q1.c), (q2.a && q1.b) != (q2.b && q1.d), (q2.c && q1.a) != (q2.d && q1.c),
            (q2.c && q1.b) != (q2.d && q1.d)};
}

class LocalCliffordOp {
public:
    /// Throws std::invalid_argument when lengths differ or some qubit is singular.
    LocalCliffordOp(BitVec a, BitVec b, BitVec c, BitVec d);

    static LocalCliffordOp identity(std::size_t n);
    static LocalCliffordOp hadamard_all(std::size_t n);
    static LocalCliffordOp uniform(std::size_t n, QubitSymplectic q);

    [[nodiscard]] std::size_t qubits() const noexcept { return a_.size(); }
    [[nodiscard]] const BitVec& a() const noexcept { return a_; }
    [[nodiscard]] const BitVec& b() const noexcept { return b_; }
    [[nodiscard]] const BitVec& c() const noexcept { return c_; }
    [[nodiscard]] const BitVec& d() const noexcept { return d_; }

    /// 0-based qubit.
    [[nodiscard]] QubitSymplectic qubit(std::size_t q) const noexcept { return {a_[q], b_[q], c_[q], d_[q]}; }
    /// Returns a copy with qubit q replaced; throws when `value` is singular.
    [[nodiscard]] LocalCliffordOp with_qubit(std::size_t q, QubitSymplectic value) const;

    friend bool operator==(const LocalCliffordOp&, const LocalCliffordOp&) = default;

private:
    BitVec a_, b_, c_, d_;
};

/// q1 then q2.
[[nodiscard]] LocalCliffordOp compose(const LocalCliffordOp& q2, const LocalCliffordOp& q1);

/// The full 2n x 2n matrix [[A, B], [C, D]]. For cross-checks only.
[[nodiscard]] BitMatrix to_symplectic_matrix(const LocalCliffordOp& q);
/// Q^T P Q == P.
[[nodiscard]] bool is_symplectic(const BitMatrix& q);

/// Q S for any 2n-row matrix S.
[[nodiscard]] BitMatrix apply_to_stabilizer(const LocalCliffordOp& q, const BitMatrix& s);
[[nodiscard]] BitMatrix apply_to_stabilizer(const LocalCliffordOp& q, const StabilizerGenMatrix& s);

/// Outcome of acting with Q on a graph. `image` is set exactly when both
/// C theta + D is invertible and (A theta + B)(C theta + D)^{-1} has zero diagonal.
struct GraphDomainReport {
    bool invertible_cd = false;
    bool zero_diagonal = false;
    std::optional<Graph> image;

    [[nodiscard]] bool in_domain() const noexcept { return image.has_value(); }
};

/// C theta + D.
[[nodiscard]] BitMatrix lower_product(const BitMatrix& theta, const BitVec& c, const BitVec& d);
/// A theta + B.
[[nodiscard]] BitMatrix upper_product(const BitMatrix& theta, const BitVec& a, const BitVec& b);

/// Evaluates theta' = (A theta + B)(C theta + D)^{-1}. Symmetry of theta' is a
/// consequence of Q being symplectic; a violation throws std::logic_error.
[[nodiscard]] GraphDomainReport graph_action(const LocalCliffordOp& q, const Graph& g);

/// The operation realizing local complementation at i on g:
/// A = I, B = diag(row i of theta), C = e_i e_i^T, D = I.
[[nodiscard]] LocalCliffordOp local_complement_clifford(const Graph& g, VertexId i);

/// The unique (A, B) completing lower blocks (C, D) so that g lies in the
/// domain. Throws SingularError when C theta + D is singular.
[[nodiscard]] LocalCliffordOp complete_from_cd(const Graph& g, const BitVec& c, const BitVec& d);

}  // namespace lcg
