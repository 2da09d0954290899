// Translating a local Clifford action on a graph into a sequence of local
// complementations.
//
// The matrix-level counterpart of local complementation at i on R = C theta + D
// is the map R -> R (e_i e_i^T R + R_ii e_i e_i^T + I). Driving R to the
// identity with these maps yields a vertex sequence; replaying that sequence
// as local complementations on theta reproduces the action of the unique
// local Clifford with lower blocks (C, D) whose domain contains theta.

#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "lcgraph/clifford.hpp"
#include "lcgraph/gf2.hpp"
#include "lcgraph/graph.hpp"

namespace lcg {

/// An invertible matrix R = diag(c) theta + diag(d).
class InvertibleCDForm {
public:
    /// Throws SingularError when C theta + D is singular.
    InvertibleCDForm(Graph theta, BitVec c, BitVec d);

    [[nodiscard]] const Graph& theta() const noexcept { return theta_; }
    [[nodiscard]] const BitVec& c() const noexcept { return c_; }
    [[nodiscard]] const BitVec& d() const noexcept { return d_; }
    [[nodiscard]] const BitMatrix& r() const noexcept { return r_; }

private:
    Graph theta_;
    BitVec c_, d_;
    BitMatrix r_;
};

/// One step: local complementation at j, or the triple j, k, j.
struct LCStep {
    enum class Kind { single, triple };

    Kind kind = Kind::single;
    VertexId j;
    VertexId k;  // triple only

    static LCStep single(VertexId i) { return {Kind::single, i, i}; }
    static LCStep triple(VertexId j, VertexId k) { return {Kind::triple, j, k}; }

    friend bool operator==(const LCStep&, const LCStep&) = default;
};

struct LCSequence {
    std::vector<LCStep> steps;

    /// Vertices in application order, triples unrolled to j, k, j.
    [[nodiscard]] std::vector<VertexId> expanded() const;
    [[nodiscard]] bool empty() const noexcept { return steps.empty(); }
    friend bool operator==(const LCSequence&, const LCSequence&) = default;
};

/// No vertex index occurs in two different steps (or twice in one triple).
[[nodiscard]] bool all_indices_distinct(const LCSequence& seq);
/// Every single step comes before every triple step.
[[nodiscard]] bool singles_precede_triples(const LCSequence& seq);

/// x (Lambda_i x + x_ii Lambda_i + I), evaluated with dense products.
[[nodiscard]] BitMatrix f_transform(const BitMatrix& x, VertexId i);

/// Folds f_transform over the expanded steps, in order.
[[nodiscard]] BitMatrix apply_f_sequence(const BitMatrix& x, const LCSequence& seq);

/// Raised when the reduction exceeds its 3n step budget.
class NonTerminationError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Steps that drive form.r() to the identity: first single steps at the
/// lowest-index row with a unit diagonal that is not yet a basis row, then
/// triples (j, k) with j the lowest row whose diagonal is zero and k the
/// lowest row with R_kj = 1.
[[nodiscard]] LCSequence reduce_to_identity(const InvertibleCDForm& form);

class NotInDomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A local complementation sequence whose action on g equals Q(g).
/// Throws NotInDomainError when g is outside the domain of q.
[[nodiscard]] LCSequence decompose_local_clifford(const LocalCliffordOp& q, const Graph& g);

[[nodiscard]] Graph apply_sequence(const Graph& g, const LCSequence& seq);

}  // namespace lcg
