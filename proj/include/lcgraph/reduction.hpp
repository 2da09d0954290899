// Reduction of an arbitrary stabilizer state to a graph state by a local
// Clifford operation and a change of generators.

#pragma once

#include "lcgraph/clifford.hpp"
#include "lcgraph/gf2.hpp"
#include "lcgraph/graph.hpp"
#include "lcgraph/stabilizer.hpp"

namespace lcg {

/// Certificate that Q S R = [theta; I] for the stabilizer S it was built from.
struct ReductionWitness {
    Graph graph;
    LocalCliffordOp q;
    BitMatrix r;
};

/// Brings S to graph form. Hadamards go on the qubits outside the
/// lowest-index invertible row subset of the column-reduced X block, then
/// phase gates clear the diagonal. Deterministic in S; S = [theta; I] maps to
/// (theta, identity, I).
[[nodiscard]] ReductionWitness to_graph_state(const StabilizerGenMatrix& s);

/// Recomputes Q S R and compares bit-exactly with [theta; I].
[[nodiscard]] bool verify_witness(const StabilizerGenMatrix& s, const ReductionWitness& w);

}  // namespace lcg
