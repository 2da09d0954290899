// Simple undirected graphs on vertices 1..n and local complementation.

#pragma once

#include <compare>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "lcgraph/gf2.hpp"

namespace lcg {

/// A 1-based vertex label. Public interfaces speak 1..n; storage is 0-based.
class VertexId {
public:
    constexpr VertexId() = default;
    constexpr explicit VertexId(std::size_t one_based) : value_(one_based) {}

    [[nodiscard]] constexpr std::size_t value() const noexcept { return value_; }
    [[nodiscard]] constexpr std::size_t index() const noexcept { return value_ - 1; }
    [[nodiscard]] static constexpr VertexId from_index(std::size_t zero_based) { return VertexId(zero_based + 1); }

    friend constexpr auto operator<=>(VertexId, VertexId) = default;

private:
    std::size_t value_ = 1;
};

class Graph {
public:
    Graph() = default;
    explicit Graph(std::size_t n) : adj_(n, n) {}
    /// Throws std::invalid_argument unless adj is square, symmetric and zero on the diagonal.
    explicit Graph(BitMatrix adj);

    static Graph empty(std::size_t n) { return Graph(n); }
    static Graph complete(std::size_t n);
    /// 1-based pairs.
    static Graph from_edges(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges);
    static Graph path(std::size_t n);
    static Graph star(std::size_t n, VertexId center);

    [[nodiscard]] std::size_t size() const noexcept { return adj_.rows(); }
    [[nodiscard]] const BitMatrix& adjacency() const noexcept { return adj_; }

    [[nodiscard]] bool has_edge(VertexId a, VertexId b) const;
    [[nodiscard]] std::size_t edge_count() const;
    /// Sorted 1-based pairs with first < second.
    [[nodiscard]] std::vector<std::pair<std::size_t, std::size_t>> edges() const;

    /// Throws std::out_of_range unless 1 <= v <= size().
    void check_vertex(VertexId v) const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    BitMatrix adj_;
};

/// Complements the subgraph induced on the neighborhood of i: every pair j, k
/// of neighbors of i toggles its edge.
[[nodiscard]] Graph local_complement(const Graph& g, VertexId i);

/// theta + theta Lambda_i theta + Lambda, evaluated with dense products and the
/// diagonal correction Lambda chosen to zero the diagonal. Independent of
/// local_complement; the two are kept as mutual cross-checks.
[[nodiscard]] BitMatrix local_complement_matrix_form(const BitMatrix& theta, VertexId i);

/// Adjacency theta + (J - I).
[[nodiscard]] Graph complement(const Graph& g);

[[nodiscard]] std::vector<VertexId> neighborhood(const Graph& g, VertexId i);
[[nodiscard]] BitVec neighborhood_mask(const Graph& g, VertexId i);

/// Vertices of the result are the members of `vertices` in ascending order, relabeled 1..|A|.
[[nodiscard]] Graph induced_subgraph(const Graph& g, const std::vector<VertexId>& vertices);

/// Upper-triangular adjacency bits in row-major order: (1,2), (1,3), ..., (n-1,n).
[[nodiscard]] BitVec upper_triangle_key(const Graph& g);

/// Lexicographic order on upper_triangle_key, with 0 < 1 at the first difference.
/// Graphs of different size compare by size first.
[[nodiscard]] bool lex_less(const Graph& a, const Graph& b);

/// Every labeled simple graph on n vertices, in order of the integer whose
/// bit k is the k-th upper-triangle entry. Intended for n <= 6.
[[nodiscard]] std::vector<Graph> all_graphs(std::size_t n);

}  // namespace lcg

template <>
struct std::hash<lcg::Graph> {
    std::size_t operator()(const lcg::Graph& g) const noexcept;
};
