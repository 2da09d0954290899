// Naive reference implementations and random instance generators shared by
// the test binaries. Everything here works on plain int matrices so that it
// shares no code path with the packed arithmetic under test.

#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "lcgraph/clifford.hpp"
#include "lcgraph/gf2.hpp"
#include "lcgraph/graph.hpp"

namespace lcg::testing {

using Dense = std::vector<std::vector<int>>;

inline Dense to_dense(const BitMatrix& m) {
    Dense out(m.rows(), std::vector<int>(m.cols(), 0));
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) out[r][c] = m(r, c) ? 1 : 0;
    return out;
}

inline BitMatrix from_dense(const Dense& d, std::size_t cols) {
    BitMatrix m(d.size(), cols);
    for (std::size_t r = 0; r < d.size(); ++r)
        for (std::size_t c = 0; c < cols; ++c)
            if (d[r][c] & 1) m.set(r, c);
    return m;
}

inline Dense naive_mul(const Dense& a, const Dense& b, std::size_t inner, std::size_t cols) {
    Dense out(a.size(), std::vector<int>(cols, 0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < cols; ++j) {
            int s = 0;
            for (std::size_t k = 0; k < inner; ++k) s += a[i][k] * b[k][j];
            out[i][j] = s % 2;
        }
    return out;
}

// Row echelon form by textbook elimination; returns the number of nonzero rows.
inline std::size_t naive_rank(Dense m) {
    if (m.empty()) return 0;
    const std::size_t rows = m.size(), cols = m[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && m[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(m[p], m[r]);
        for (std::size_t i = r + 1; i < rows; ++i)
            if (m[i][c])
                for (std::size_t k = 0; k < cols; ++k) m[i][k] ^= m[r][k];
        ++r;
    }
    std::size_t nonzero = 0;
    for (const auto& row : m)
        for (int v : row)
            if (v) {
                ++nonzero;
                break;
            }
    return nonzero;
}

inline BitMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols) {
    BitMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c)
            if (rng() & 1u) m.set(r, c);
    return m;
}

inline BitMatrix random_invertible(std::mt19937_64& rng, std::size_t n) {
    for (;;) {
        BitMatrix m = random_matrix(rng, n, n);
        if (naive_rank(to_dense(m)) == n) return m;
    }
}

inline BitVec random_bits(std::mt19937_64& rng, std::size_t n) {
    BitVec v(n);
    for (std::size_t i = 0; i < n; ++i)
        if (rng() & 1u) v.set(i);
    return v;
}

inline Graph random_graph(std::mt19937_64& rng, std::size_t n) {
    BitMatrix adj(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (rng() & 1u) {
                adj.set(i, j);
                adj.set(j, i);
            }
    return Graph(std::move(adj));
}

// All labeled graphs on n vertices, numbered by the bitmask over pairs i<j
// in row-major order.
inline std::vector<Graph> enumerate_graphs(std::size_t n) {
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
    std::vector<Graph> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
        BitMatrix adj(n, n);
        for (std::size_t p = 0; p < pairs.size(); ++p)
            if (mask >> p & 1u) {
                adj.set(pairs[p].first, pairs[p].second);
                adj.set(pairs[p].second, pairs[p].first);
            }
        out.emplace_back(std::move(adj));
    }
    return out;
}

// Local complementation by direct edge toggling on the neighbor set.
inline Dense naive_local_complement(Dense adj, std::size_t i) {
    const std::size_t n = adj.size();
    std::vector<std::size_t> nb;
    for (std::size_t k = 0; k < n; ++k)
        if (adj[i][k]) nb.push_back(k);
    for (std::size_t x = 0; x < nb.size(); ++x)
        for (std::size_t y = x + 1; y < nb.size(); ++y) {
            adj[nb[x]][nb[y]] ^= 1;
            adj[nb[y]][nb[x]] ^= 1;
        }
    return adj;
}

// diag(c) theta + diag(d) built entry by entry.
inline Dense naive_lower_product(const Graph& g, const BitVec& c, const BitVec& d) {
    const auto n = g.size();
    Dense r(n, std::vector<int>(n, 0));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) r[i][j] = c[i] && g.adjacency()(i, j) ? 1 : 0;
        r[i][i] ^= d[i] ? 1 : 0;
    }
    return r;
}

// Factorization oracle for matrices of the form diag(c) theta + diag(d).
// Row i of such a matrix is either d_i e_i (c_i = 0) or row i of theta with
// d_i on the diagonal (c_i = 1). Choosing c_i = 1 exactly when the row is not
// a multiple of e_i is always possible; the remaining unknown entries of theta
// are forced by symmetry. Returns the factorization when one exists.
struct CDFactorization {
    Graph theta;
    BitVec c;
    BitVec d;
};

inline std::optional<CDFactorization> factor_cd(const BitMatrix& x) {
    const auto n = x.rows();
    if (x.cols() != n) return std::nullopt;
    const Dense m = to_dense(x);
    std::vector<int> c(n, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (j != i && m[i][j]) c[i] = 1;

    Dense theta(n, std::vector<int>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            // Only rows with c = 1 constrain theta; rows with c = 0 must be zero off the diagonal.
            int v = 0;
            if (c[i] && c[j]) {
                if (m[i][j] != m[j][i]) return std::nullopt;
                v = m[i][j];
            } else if (c[i]) {
                v = m[i][j];
            } else if (c[j]) {
                v = m[j][i];
            }
            theta[i][j] = theta[j][i] = v;
        }

    CDFactorization f{Graph(from_dense(theta, n)), BitVec(n), BitVec(n)};
    for (std::size_t i = 0; i < n; ++i) {
        if (c[i]) f.c.set(i);
        if (m[i][i]) f.d.set(i);
    }
    if (naive_lower_product(f.theta, f.c, f.d) != m) return std::nullopt;
    return f;
}

// A random graph together with a local Clifford whose domain contains it:
// lower diagonals are drawn until C theta + D is invertible, and the upper
// diagonals are then forced.
inline std::pair<LocalCliffordOp, Graph> random_domain_pair(std::mt19937_64& rng, std::size_t n) {
    Graph g = random_graph(rng, n);
    for (;;) {
        const BitVec c = random_bits(rng, n);
        const BitVec d = random_bits(rng, n);
        if (naive_rank(naive_lower_product(g, c, d)) != n) continue;
        return {complete_from_cd(g, c, d), std::move(g)};
    }
}

}  // namespace lcg::testing
