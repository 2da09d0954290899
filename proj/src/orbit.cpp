#include "lcgraph/orbit.hpp"

#include <algorithm>

namespace lcg {

LCSequence Orbit::transcript(const Graph& member) const {
    auto it = index_.find(member);
    if (it == index_.end()) throw std::out_of_range("Orbit::transcript: graph is not a member");
    LCSequence seq;
    for (std::size_t k = it->second; k != 0; k = parent_[k]) seq.steps.push_back(LCStep::single(move_[k]));
    std::reverse(seq.steps.begin(), seq.steps.end());
    return seq;
}

Orbit enumerate_orbit(const Graph& g, std::size_t member_cap) {
    Orbit orbit;
    auto add = [&](Graph m, std::size_t parent, VertexId move) {
        if (orbit.members_.size() >= member_cap) throw CapExceededError(member_cap);
        orbit.index_.emplace(m, orbit.members_.size());
        orbit.members_.push_back(std::move(m));
        orbit.parent_.push_back(parent);
        orbit.move_.push_back(move);
    };
    add(g, 0, VertexId{});

    for (std::size_t head = 0; head < orbit.members_.size(); ++head) {
        for (std::size_t v = 0; v < g.size(); ++v) {
            const auto vid = VertexId::from_index(v);
            Graph next = local_complement(orbit.members_[head], vid);
            if (!orbit.index_.contains(next)) add(std::move(next), head, vid);
        }
    }

    for (std::size_t k = 1; k < orbit.members_.size(); ++k)
        if (lex_less(orbit.members_[k], orbit.members_[orbit.canonical_])) orbit.canonical_ = k;
    return orbit;
}

Graph canonical_form(const Graph& g, std::size_t member_cap) { return enumerate_orbit(g, member_cap).canonical(); }

bool same_orbit(const Graph& g, const Graph& g_prime, std::size_t member_cap) {
    if (g.size() != g_prime.size()) return false;
    return canonical_form(g, member_cap) == canonical_form(g_prime, member_cap);
}

}  // namespace lcg
