#include "lcgraph/reduction.hpp"

#include <stdexcept>

namespace lcg {

namespace {

// Row-reduces the X half of the generator rows (S^T), recording the row
// operations. Returns (E, k) with E S^T having nonzero X parts exactly in its
// first k rows.
std::pair<BitMatrix, std::size_t> column_reduce_x(const StabilizerGenMatrix& s) {
    const auto n = s.qubits();
    BitMatrix gens = transpose(s.matrix());
    BitMatrix ops = identity(n);
    std::size_t next = 0;
    for (std::size_t c = n; c < 2 * n && next < n; ++c) {
        std::size_t p = next;
        while (p < n && !gens(p, c)) ++p;
        if (p == n) continue;
        gens.swap_rows(next, p);
        ops.swap_rows(next, p);
        for (std::size_t r = next + 1; r < n; ++r)
            if (gens(r, c)) {
                gens.xor_row(r, next);
                ops.xor_row(r, next);
            }
        ++next;
    }
    return {std::move(ops), next};
}

}  // namespace

ReductionWitness to_graph_state(const StabilizerGenMatrix& s) {
    const auto n = s.qubits();

    auto [ops, k] = column_reduce_x(s);
    const BitMatrix r1 = transpose(ops);
    const BitMatrix s1 = s.matrix() * r1;

    // Rows of the n x k block R_x forming an invertible k x k submatrix.
    const BitMatrix rx = block(s1, n, 0, n, k);
    const auto pivot_rows = reduced_echelon(transpose(rx)).pivots;
    std::vector<bool> keep(n, false);
    for (auto r : pivot_rows) keep[r] = true;

    LocalCliffordOp hadamards = LocalCliffordOp::identity(n);
    for (std::size_t q = 0; q < n; ++q)
        if (!keep[q]) hadamards = hadamards.with_qubit(q, QubitSymplectic::hadamard());

    const BitMatrix s2 = apply_to_stabilizer(hadamards, s1);
    const auto x_inv = try_invert(block(s2, n, 0, n, n));
    if (!x_inv) throw std::logic_error("to_graph_state: X block singular after Hadamards");
    const BitMatrix s3 = s2 * *x_inv;

    const BitMatrix gamma = block(s3, 0, 0, n, n);
    if (!is_symmetric(gamma)) throw std::logic_error("to_graph_state: Z X^-1 is not symmetric");

    LocalCliffordOp phases = LocalCliffordOp::identity(n);
    const BitVec flips = diagonal(gamma);
    for (auto q = flips.find_first(); q < n; q = flips.find_next(q + 1))
        phases = phases.with_qubit(q, QubitSymplectic::phase());

    return ReductionWitness{Graph(set_diagonal_zero(gamma)), compose(phases, hadamards), r1 * *x_inv};
}

bool verify_witness(const StabilizerGenMatrix& s, const ReductionWitness& w) {
    const auto n = s.qubits();
    if (w.q.qubits() != n || w.graph.size() != n || w.r.rows() != n || w.r.cols() != n) return false;
    if (!is_invertible(w.r)) return false;
    return apply_to_stabilizer(w.q, s) * w.r == vstack(w.graph.adjacency(), identity(n));
}

}  // namespace lcg
