// Local Clifford equivalence of stabilizer states.
//
// S and S' are equivalent iff some local Clifford Q has S^T Q^T P S' = 0.
// That is n^2 linear equations in the 4n diagonal entries of Q, plus the n
// quadratic constraints a_i d_i + b_i c_i = 1. The linear part is solved
// exactly; its solution space is then searched for the quadratic part.

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>

#include "lcgraph/clifford.hpp"
#include "lcgraph/gf2.hpp"
#include "lcgraph/graph.hpp"
#include "lcgraph/stabilizer.hpp"

namespace lcg {

inline constexpr std::uint64_t default_search_cap = std::uint64_t{1} << 24;

enum class Verdict { equivalent, inequivalent, indeterminate };

struct EquivalenceResult {
    Verdict verdict = Verdict::indeterminate;
    std::optional<LocalCliffordOp> witness;  // set iff equivalent
    std::uint64_t searched = 0;              // candidate vectors examined
    std::size_t space_dim = 0;               // dimension of the linear solution space
};

/// n^2 x 4n system. Row a*n + b is the (a, b) entry of S^T Q^T P S'; unknowns
/// are ordered (a_1..a_n, b_1..b_n, c_1..c_n, d_1..d_n).
[[nodiscard]] BitMatrix build_linear_system(const StabilizerGenMatrix& s, const StabilizerGenMatrix& s_prime);

/// Splits a 4n-vector of unknowns into Q when every qubit is invertible.
[[nodiscard]] std::optional<LocalCliffordOp> clifford_from_unknowns(const BitVec& unknowns);

/// Enumerates nonzero combinations of the null-space basis in lexicographic
/// order of the coefficient tuple (first basis vector most significant) and
/// returns the first one that is a valid local Clifford. The zero vector is
/// never a candidate. With 2^d candidate vectors in total, the verdict is
/// inequivalent when 2^d <= search_cap and none is valid, otherwise
/// indeterminate once search_cap vectors have been examined.
[[nodiscard]] EquivalenceResult test_equivalence(const StabilizerGenMatrix& s, const StabilizerGenMatrix& s_prime,
                                                 std::uint64_t search_cap = default_search_cap);

[[nodiscard]] EquivalenceResult test_equivalence_graphs(const Graph& g, const Graph& g_prime,
                                                        std::uint64_t search_cap = default_search_cap);

}  // namespace lcg
