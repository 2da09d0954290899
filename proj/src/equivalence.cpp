#include "lcgraph/equivalence.hpp"

#include <stdexcept>

namespace lcg {

BitMatrix build_linear_system(const StabilizerGenMatrix& s, const StabilizerGenMatrix& s_prime) {
    const auto n = s.qubits();
    if (s_prime.qubits() != n) throw std::invalid_argument("build_linear_system: qubit count mismatch");
    const BitMatrix& m = s.matrix();
    const BitMatrix& mp = s_prime.matrix();

    // Entry (a, b) = sum_i a_i z_ai x'_bi + b_i x_ai x'_bi + c_i z_ai z'_bi + d_i x_ai z'_bi.
    BitMatrix system(n * n, 4 * n);
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
            const std::size_t row = a * n + b;
            for (std::size_t i = 0; i < n; ++i) {
                const bool z = m(i, a), x = m(n + i, a);
                const bool zp = mp(i, b), xp = mp(n + i, b);
                system.set(row, i, z && xp);
                system.set(row, n + i, x && xp);
                system.set(row, 2 * n + i, z && zp);
                system.set(row, 3 * n + i, x && zp);
            }
        }
    }
    return system;
}

namespace {

bool satisfies_constraints(const BitVec& u, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        const bool det = (u[i] && u[3 * n + i]) != (u[n + i] && u[2 * n + i]);
        if (!det) return false;
    }
    return true;
}

}  // namespace

std::optional<LocalCliffordOp> clifford_from_unknowns(const BitVec& unknowns) {
    if (unknowns.size() % 4 != 0) throw std::invalid_argument("clifford_from_unknowns: length must be 4n");
    const auto n = unknowns.size() / 4;
    if (!satisfies_constraints(unknowns, n)) return std::nullopt;
    return LocalCliffordOp(slice(unknowns, 0, n), slice(unknowns, n, n), slice(unknowns, 2 * n, n),
                           slice(unknowns, 3 * n, n));
}

EquivalenceResult test_equivalence(const StabilizerGenMatrix& s, const StabilizerGenMatrix& s_prime,
                                   std::uint64_t search_cap) {
    const auto n = s.qubits();
    const auto basis = solve_homogeneous(build_linear_system(s, s_prime));
    const std::size_t d = basis.size();

    EquivalenceResult result;
    result.space_dim = d;
    const bool fits = d < 64;
    const std::uint64_t total = fits ? (std::uint64_t{1} << d) : 0;
    const std::uint64_t limit = (fits && total <= search_cap) ? total : search_cap;

    // Coefficient of basis[j] is bit (d - 1 - j) of the counter t. Moving from
    // t - 1 to t flips a run of low bits, i.e. a suffix of the basis.
    BitVec candidate(4 * n);
    std::uint64_t t = 1;
    for (; t < limit; ++t) {
        const std::uint64_t changed = t ^ (t - 1);
        for (std::size_t bit = 0; bit < d && bit < 64 && (changed >> bit); ++bit)
            if ((changed >> bit) & 1u) candidate ^= basis[d - 1 - bit];
        if (!satisfies_constraints(candidate, n)) continue;

        auto q = clifford_from_unknowns(candidate);
        if (!same_subspace(apply_to_stabilizer(*q, s), s_prime.matrix()))
            throw std::logic_error("test_equivalence: solution of the linear system fails verification");
        result.verdict = Verdict::equivalent;
        result.witness = std::move(q);
        result.searched = t + 1;
        return result;
    }

    result.searched = limit;
    result.verdict = (fits && total <= search_cap) ? Verdict::inequivalent : Verdict::indeterminate;
    return result;
}

EquivalenceResult test_equivalence_graphs(const Graph& g, const Graph& g_prime, std::uint64_t search_cap) {
    return test_equivalence(StabilizerGenMatrix::from_graph(g), StabilizerGenMatrix::from_graph(g_prime),
                            search_cap);
}

}  // namespace lcg
