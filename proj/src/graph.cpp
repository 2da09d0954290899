#include "lcgraph/graph.hpp"

#include <algorithm>

namespace lcg {

Graph::Graph(BitMatrix adj) : adj_(std::move(adj)) {
    if (!adj_.is_square()) throw std::invalid_argument("Graph: adjacency matrix is not square");
    if (diagonal(adj_).any()) throw std::invalid_argument("Graph: adjacency matrix has a nonzero diagonal");
    if (!is_symmetric(adj_)) throw std::invalid_argument("Graph: adjacency matrix is not symmetric");
}

Graph Graph::complete(std::size_t n) { return Graph(all_ones_offdiag(n)); }

Graph Graph::from_edges(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
    BitMatrix adj(n, n);
    for (auto [a, b] : edges) {
        if (a < 1 || a > n || b < 1 || b > n)
            throw std::out_of_range("Graph::from_edges: vertex outside 1.." + std::to_string(n));
        if (a == b) throw std::invalid_argument("Graph::from_edges: self-loop on vertex " + std::to_string(a));
        adj.set(a - 1, b - 1);
        adj.set(b - 1, a - 1);
    }
    return Graph(std::move(adj));
}

Graph Graph::path(std::size_t n) {
    std::vector<std::pair<std::size_t, std::size_t>> e;
    for (std::size_t v = 1; v < n; ++v) e.emplace_back(v, v + 1);
    return from_edges(n, e);
}

Graph Graph::star(std::size_t n, VertexId center) {
    std::vector<std::pair<std::size_t, std::size_t>> e;
    for (std::size_t v = 1; v <= n; ++v)
        if (v != center.value()) e.emplace_back(center.value(), v);
    return from_edges(n, e);
}

void Graph::check_vertex(VertexId v) const {
    if (v.value() < 1 || v.value() > size())
        throw std::out_of_range("vertex " + std::to_string(v.value()) + " outside 1.." + std::to_string(size()));
}

bool Graph::has_edge(VertexId a, VertexId b) const {
    check_vertex(a);
    check_vertex(b);
    return adj_(a.index(), b.index());
}

std::size_t Graph::edge_count() const {
    std::size_t c = 0;
    for (std::size_t r = 0; r < size(); ++r) c += adj_.row(r).count();
    return c / 2;
}

std::vector<std::pair<std::size_t, std::size_t>> Graph::edges() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t r = 0; r < size(); ++r) {
        const auto& row = adj_.row(r);
        for (auto c = row.find_next(r + 1); c < row.size(); c = row.find_next(c + 1)) out.emplace_back(r + 1, c + 1);
    }
    return out;
}

Graph local_complement(const Graph& g, VertexId i) {
    g.check_vertex(i);
    const BitVec& nbrs = g.adjacency().row(i.index());
    BitMatrix adj = g.adjacency();
    for (auto j = nbrs.find_first(); j < nbrs.size(); j = nbrs.find_next(j + 1)) {
        adj.xor_into_row(j, nbrs);
        adj.flip(j, j);
    }
    return Graph(std::move(adj));
}

BitMatrix local_complement_matrix_form(const BitMatrix& theta, VertexId i) {
    if (!theta.is_square() || i.value() < 1 || i.value() > theta.rows())
        throw std::out_of_range("local_complement_matrix_form: vertex out of range");
    const BitMatrix lambda_i = diag(BitVec::unit(theta.rows(), i.index()));
    const BitMatrix raw = theta + theta * lambda_i * theta;
    // Lambda is the diagonal part of raw.
    return raw + diag(diagonal(raw));
}

Graph complement(const Graph& g) { return Graph(g.adjacency() + all_ones_offdiag(g.size())); }

std::vector<VertexId> neighborhood(const Graph& g, VertexId i) {
    const auto mask = neighborhood_mask(g, i);
    std::vector<VertexId> out;
    for (auto j = mask.find_first(); j < mask.size(); j = mask.find_next(j + 1)) out.push_back(VertexId::from_index(j));
    return out;
}

BitVec neighborhood_mask(const Graph& g, VertexId i) {
    g.check_vertex(i);
    return g.adjacency().row(i.index());
}

Graph induced_subgraph(const Graph& g, const std::vector<VertexId>& vertices) {
    std::vector<VertexId> vs = vertices;
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    for (auto v : vs) g.check_vertex(v);
    BitMatrix adj(vs.size(), vs.size());
    for (std::size_t a = 0; a < vs.size(); ++a)
        for (std::size_t b = 0; b < vs.size(); ++b)
            if (g.adjacency()(vs[a].index(), vs[b].index())) adj.set(a, b);
    return Graph(std::move(adj));
}

BitVec upper_triangle_key(const Graph& g) {
    const auto n = g.size();
    BitVec key(n * (n - (n > 0 ? 1 : 0)) / 2);
    std::size_t k = 0;
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = r + 1; c < n; ++c, ++k)
            if (g.adjacency()(r, c)) key.set(k);
    return key;
}

bool lex_less(const Graph& a, const Graph& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    const auto ka = upper_triangle_key(a);
    const auto kb = upper_triangle_key(b);
    const auto diff = (ka ^ kb).find_first();
    if (diff == ka.size()) return false;
    return kb.get(diff);
}

std::vector<Graph> all_graphs(std::size_t n) {
    const std::size_t slots = n * (n - (n > 0 ? 1 : 0)) / 2;
    if (slots >= 32) throw std::invalid_argument("all_graphs: n too large to enumerate");
    std::vector<Graph> out;
    out.reserve(std::size_t{1} << slots);
    for (std::size_t mask = 0; mask < (std::size_t{1} << slots); ++mask) {
        BitMatrix adj(n, n);
        std::size_t k = 0;
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = r + 1; c < n; ++c, ++k)
                if ((mask >> k) & 1u) {
                    adj.set(r, c);
                    adj.set(c, r);
                }
        out.emplace_back(std::move(adj));
    }
    return out;
}

}  // namespace lcg

std::size_t std::hash<lcg::Graph>::operator()(const lcg::Graph& g) const noexcept {
    std::size_t h = g.size();
    for (std::size_t r = 0; r < g.size(); ++r)
        h ^= std::hash<lcg::BitVec>{}(g.adjacency().row(r)) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
}
