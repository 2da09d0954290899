#include "lcgraph/stabilizer.hpp"

#include <random>

namespace lcg {

PauliString::PauliString(BitVec z_part, BitVec x_part) : z(std::move(z_part)), x(std::move(x_part)) {
    if (z.size() != x.size()) throw std::invalid_argument("PauliString: z and x parts differ in length");
}

PauliString PauliString::parse(const std::string& text) {
    std::size_t start = 0;
    if (!text.empty() && (text[0] == '+' || text[0] == '-')) start = 1;
    PauliString p(text.size() - start);
    for (std::size_t k = start; k < text.size(); ++k) {
        const std::size_t q = k - start;
        switch (text[k]) {
            case 'I': break;
            case 'X': p.x.set(q); break;
            case 'Z': p.z.set(q); break;
            case 'Y':
                p.x.set(q);
                p.z.set(q);
                break;
            default:
                throw std::invalid_argument(std::string("PauliString: unexpected character '") + text[k] + "'");
        }
    }
    return p;
}

char PauliString::at(std::size_t q) const {
    static constexpr char table[2][2] = {{'I', 'X'}, {'Z', 'Y'}};
    return table[z.get(q)][x.get(q)];
}

std::string PauliString::to_string() const {
    std::string s(size(), 'I');
    for (std::size_t q = 0; q < size(); ++q) s[q] = at(q);
    return s;
}

PauliString PauliString::from_binary(const BitVec& zx) {
    if (zx.size() % 2 != 0) throw std::invalid_argument("PauliString::from_binary: odd length");
    const auto n = zx.size() / 2;
    return PauliString(slice(zx, 0, n), slice(zx, n, n));
}

bool commutes(const PauliString& a, const PauliString& b) {
    if (a.size() != b.size()) throw std::invalid_argument("commutes: length mismatch");
    return a.z.dot(b.x) == a.x.dot(b.z);
}

NotCommutingError::NotCommutingError(std::size_t a, std::size_t b)
    : StabilizerError("generators " + std::to_string(a + 1) + " and " + std::to_string(b + 1) + " do not commute"),
      first(a),
      second(b) {}

StabilizerGenMatrix::StabilizerGenMatrix(BitMatrix s) : s_(std::move(s)) {
    const auto n = s_.cols();
    if (s_.rows() != 2 * n)
        throw WrongCountError("generator matrix must be 2n x n, got " + std::to_string(s_.rows()) + " x " +
                              std::to_string(n));
    const auto gram = SymplecticForm{n}.gram(s_, s_);
    for (std::size_t a = 0; a < n; ++a) {
        const auto b = gram.row(a).find_next(a + 1);
        if (b < n) throw NotCommutingError(a, b);
    }
    if (rank(s_) != n) throw NotIndependentError();
}

StabilizerGenMatrix StabilizerGenMatrix::from_pauli_strings(const std::vector<PauliString>& generators) {
    const auto n = generators.size();
    for (const auto& p : generators)
        if (p.size() != n)
            throw WrongCountError("expected " + std::to_string(n) + " generators on " + std::to_string(n) +
                                  " qubits, found one of length " + std::to_string(p.size()));
    BitMatrix s(2 * n, n);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t q = 0; q < n; ++q) {
            s.set(q, j, generators[j].z.get(q));
            s.set(n + q, j, generators[j].x.get(q));
        }
    return StabilizerGenMatrix(std::move(s));
}

StabilizerGenMatrix StabilizerGenMatrix::from_graph(const Graph& g) {
    return StabilizerGenMatrix(vstack(g.adjacency(), identity(g.size())));
}

std::vector<PauliString> StabilizerGenMatrix::to_pauli_strings() const {
    std::vector<PauliString> out;
    out.reserve(qubits());
    for (std::size_t j = 0; j < qubits(); ++j) out.push_back(generator(j));
    return out;
}

StabilizerGenMatrix basis_change(const StabilizerGenMatrix& s, const BitMatrix& r) {
    if (r.rows() != s.qubits() || !r.is_square()) throw std::invalid_argument("basis_change: R must be n x n");
    if (!is_invertible(r)) throw SingularError("basis_change: R is singular");
    return StabilizerGenMatrix(s.matrix() * r);
}

bool same_subspace(const BitMatrix& s, const BitMatrix& s_prime) {
    if (s.rows() != s_prime.rows()) return false;
    const auto r = rank(s);
    return r == rank(s_prime) && rank(hstack(s, s_prime)) == r;
}

bool same_subspace(const StabilizerGenMatrix& s, const StabilizerGenMatrix& s_prime) {
    return same_subspace(s.matrix(), s_prime.matrix());
}

StabilizerGenMatrix random_stabilizer(std::size_t n, std::uint64_t seed, std::size_t transvections) {
    if (n == 0) throw std::invalid_argument("random_stabilizer: n must be at least 1");
    std::mt19937_64 rng(seed);
    const SymplecticForm form{n};

    std::vector<BitVec> cols;
    cols.reserve(n);
    for (std::size_t j = 0; j < n; ++j) cols.push_back(BitVec::unit(2 * n, n + j));

    for (std::size_t t = 0; t < transvections; ++t) {
        BitVec v(2 * n);
        do {
            for (std::size_t i = 0; i < 2 * n; ++i) v.set(i, (rng() >> 33) & 1u);
        } while (v.none());
        for (auto& c : cols)
            if (form.inner(v, c)) c ^= v;
    }

    BitMatrix s(2 * n, n);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < 2 * n; ++i) s.set(i, j, cols[j].get(i));
    return StabilizerGenMatrix(std::move(s));
}

StabilizerGenMatrix random_stabilizer(std::size_t n, std::uint64_t seed) {
    return random_stabilizer(n, seed, 8 * n);
}

}  // namespace lcg
