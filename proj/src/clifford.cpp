#include "lcgraph/clifford.hpp"

#include <array>
#include <string>

namespace lcg {

LocalCliffordOp::LocalCliffordOp(BitVec a, BitVec b, BitVec c, BitVec d)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
    const auto n = a_.size();
    if (b_.size() != n || c_.size() != n || d_.size() != n)
        throw std::invalid_argument("LocalCliffordOp: diagonal lengths differ");
    for (std::size_t q = 0; q < n; ++q)
        if (!qubit(q).invertible())
            throw std::invalid_argument("LocalCliffordOp: qubit " + std::to_string(q + 1) + " is not invertible");
}

LocalCliffordOp LocalCliffordOp::identity(std::size_t n) { return uniform(n, QubitSymplectic::identity()); }

LocalCliffordOp LocalCliffordOp::hadamard_all(std::size_t n) { return uniform(n, QubitSymplectic::hadamard()); }

LocalCliffordOp LocalCliffordOp::uniform(std::size_t n, QubitSymplectic q) {
    auto fill = [n](bool v) { return v ? BitVec::ones(n) : BitVec(n); };
    return LocalCliffordOp(fill(q.a), fill(q.b), fill(q.c), fill(q.d));
}

LocalCliffordOp LocalCliffordOp::with_qubit(std::size_t q, QubitSymplectic value) const {
    if (q >= qubits()) throw std::out_of_range("LocalCliffordOp::with_qubit: qubit out of range");
    BitVec a = a_, b = b_, c = c_, d = d_;
    a.set(q, value.a);
    b.set(q, value.b);
    c.set(q, value.c);
    d.set(q, value.d);
    return LocalCliffordOp(std::move(a), std::move(b), std::move(c), std::move(d));
}

LocalCliffordOp compose(const LocalCliffordOp& q2, const LocalCliffordOp& q1) {
    const auto n = q1.qubits();
    if (q2.qubits() != n) throw std::invalid_argument("compose: qubit count mismatch");
    // Per-qubit 2x2 products, done word-parallel on the diagonals.
    BitVec a = (q2.a() & q1.a()) ^ (q2.b() & q1.c());
    BitVec b = (q2.a() & q1.b()) ^ (q2.b() & q1.d());
    BitVec c = (q2.c() & q1.a()) ^ (q2.d() & q1.c());
    BitVec d = (q2.c() & q1.b()) ^ (q2.d() & q1.d());
    return LocalCliffordOp(std::move(a), std::move(b), std::move(c), std::move(d));
}

BitMatrix to_symplectic_matrix(const LocalCliffordOp& q) {
    return vstack(hstack(diag(q.a()), diag(q.b())), hstack(diag(q.c()), diag(q.d())));
}

bool is_symplectic(const BitMatrix& q) {
    if (!q.is_square() || q.rows() % 2 != 0) return false;
    const SymplecticForm form{q.rows() / 2};
    return transpose(q) * form.matrix() * q == form.matrix();
}

BitMatrix apply_to_stabilizer(const LocalCliffordOp& q, const BitMatrix& s) {
    const auto n = q.qubits();
    if (s.rows() != 2 * n) throw std::invalid_argument("apply_to_stabilizer: expected 2n rows");
    BitMatrix out(s.rows(), s.cols());
    for (std::size_t i = 0; i < n; ++i) {
        const auto qi = q.qubit(i);
        if (qi.a) out.xor_into_row(i, s.row(i));
        if (qi.b) out.xor_into_row(i, s.row(n + i));
        if (qi.c) out.xor_into_row(n + i, s.row(i));
        if (qi.d) out.xor_into_row(n + i, s.row(n + i));
    }
    return out;
}

BitMatrix apply_to_stabilizer(const LocalCliffordOp& q, const StabilizerGenMatrix& s) {
    return apply_to_stabilizer(q, s.matrix());
}

BitMatrix lower_product(const BitMatrix& theta, const BitVec& c, const BitVec& d) {
    const auto n = theta.rows();
    BitMatrix out(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        if (c[i]) out.set_row(i, theta.row(i));
        if (d[i]) out.flip(i, i);
    }
    return out;
}

BitMatrix upper_product(const BitMatrix& theta, const BitVec& a, const BitVec& b) {
    return lower_product(theta, a, b);
}

GraphDomainReport graph_action(const LocalCliffordOp& q, const Graph& g) {
    const auto n = g.size();
    if (q.qubits() != n) throw std::invalid_argument("graph_action: qubit count mismatch");
    GraphDomainReport report;
    const auto inv = try_invert(lower_product(g.adjacency(), q.c(), q.d()));
    if (!inv) return report;
    report.invertible_cd = true;

    BitMatrix image = upper_product(g.adjacency(), q.a(), q.b()) * *inv;
    if (diagonal(image).any()) return report;
    report.zero_diagonal = true;
    if (!is_symmetric(image)) throw std::logic_error("graph_action: image of a graph is not symmetric");
    report.image.emplace(std::move(image));
    return report;
}

LocalCliffordOp local_complement_clifford(const Graph& g, VertexId i) {
    g.check_vertex(i);
    const auto n = g.size();
    return LocalCliffordOp(BitVec::ones(n), g.adjacency().row(i.index()), BitVec::unit(n, i.index()), BitVec::ones(n));
}

LocalCliffordOp complete_from_cd(const Graph& g, const BitVec& c, const BitVec& d) {
    const auto n = g.size();
    if (c.size() != n || d.size() != n) throw std::invalid_argument("complete_from_cd: diagonal length mismatch");
    const BitMatrix& theta = g.adjacency();
    const auto inv = try_invert(lower_product(theta, c, d));
    if (!inv) throw SingularError("complete_from_cd: C theta + D is singular");

    static constexpr std::array<std::pair<bool, bool>, 3> candidates{{{false, true}, {true, false}, {true, true}}};
    BitVec a(n), b(n);
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t found = 0;
        std::array<std::pair<bool, bool>, 2> valid{};
        for (auto [ai, bi] : candidates)
            if (QubitSymplectic{ai, bi, c[i], d[i]}.invertible()) valid[found++] = {ai, bi};
        // found == 2 whenever row i of C theta + D is nonzero.

        // Diagonal entry i of (A theta + B) M with (a_i, b_i) = valid[0].
        BitVec row = valid[0].first ? theta.row(i) : BitVec(n);
        if (valid[0].second) row.flip(i);
        const bool entry = row.dot(column(*inv, i));
        const auto [ai, bi] = entry ? valid[1] : valid[0];
        a.set(i, ai);
        b.set(i, bi);
    }
    return LocalCliffordOp(std::move(a), std::move(b), c, d);
}

}  // namespace lcg
