// Orbits of labeled graphs under local complementation.

#pragma once

#include <cstddef>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "lcgraph/decomposition.hpp"
#include "lcgraph/graph.hpp"

namespace lcg {

inline constexpr std::size_t default_member_cap = 1'000'000;

class CapExceededError : public std::runtime_error {
public:
    explicit CapExceededError(std::size_t cap)
        : std::runtime_error("orbit exceeds member cap of " + std::to_string(cap)), cap(cap) {}
    std::size_t cap;
};

/// Breadth-first closure of a seed graph under g_1..g_n. Members are kept in
/// discovery order, so members()[0] is the seed and every member's transcript
/// is a shortest sequence of single local complementations from the seed.
class Orbit {
public:
    [[nodiscard]] const std::vector<Graph>& members() const noexcept { return members_; }
    [[nodiscard]] std::size_t size() const noexcept { return members_.size(); }
    [[nodiscard]] const Graph& seed() const { return members_.front(); }
    [[nodiscard]] const Graph& canonical() const { return members_[canonical_]; }
    [[nodiscard]] bool contains(const Graph& g) const { return index_.contains(g); }
    /// Throws std::out_of_range for a non-member.
    [[nodiscard]] LCSequence transcript(const Graph& member) const;

    friend Orbit enumerate_orbit(const Graph& g, std::size_t member_cap);

private:
    std::vector<Graph> members_;
    std::vector<std::size_t> parent_;
    std::vector<VertexId> move_;
    std::unordered_map<Graph, std::size_t> index_;
    std::size_t canonical_ = 0;
};

/// Throws CapExceededError when more than member_cap graphs are reached.
[[nodiscard]] Orbit enumerate_orbit(const Graph& g, std::size_t member_cap = default_member_cap);

/// The orbit member minimal under lex_less.
[[nodiscard]] Graph canonical_form(const Graph& g, std::size_t member_cap = default_member_cap);

[[nodiscard]] bool same_orbit(const Graph& g, const Graph& g_prime, std::size_t member_cap = default_member_cap);

}  // namespace lcg
