// Binary (phaseless) Pauli strings and stabilizer generator matrices.
//
// A Pauli string on n qubits is the pair (z | x) in GF(2)^{2n}:
// I -> (0,0), X -> (0,1), Z -> (1,0), Y -> (1,1). Signs and phases are not
// represented anywhere in the binary core.

#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "lcgraph/gf2.hpp"
#include "lcgraph/graph.hpp"

namespace lcg {

struct PauliString {
    BitVec z;
    BitVec x;

    PauliString() = default;
    explicit PauliString(std::size_t n) : z(n), x(n) {}
    PauliString(BitVec z_part, BitVec x_part);

    /// Parses e.g. "XZIY" or "-XZ"; a leading '+' or '-' is accepted and dropped.
    /// Character k is qubit k+1.
    static PauliString parse(const std::string& text);

    [[nodiscard]] std::size_t size() const noexcept { return z.size(); }
    /// One of 'I', 'X', 'Y', 'Z' for the 0-based qubit q.
    [[nodiscard]] char at(std::size_t q) const;
    [[nodiscard]] std::string to_string() const;
    /// The 2n-bit (z | x) vector.
    [[nodiscard]] BitVec to_binary() const { return concat(z, x); }
    static PauliString from_binary(const BitVec& zx);

    friend bool operator==(const PauliString&, const PauliString&) = default;
};

/// True when the two strings commute, i.e. their symplectic product vanishes.
[[nodiscard]] bool commutes(const PauliString& a, const PauliString& b);

class StabilizerError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class NotCommutingError : public StabilizerError {
public:
    NotCommutingError(std::size_t first, std::size_t second);
    std::size_t first;
    std::size_t second;
};

class NotIndependentError : public StabilizerError {
public:
    NotIndependentError() : StabilizerError("stabilizer generators are not independent") {}
};

class WrongCountError : public StabilizerError {
public:
    using StabilizerError::StabilizerError;
};

/// A full-rank 2n x n matrix S = [Z; X] with S^T P S = 0. Column j encodes
/// generator j.
class StabilizerGenMatrix {
public:
    /// Validates shape, rank and self-orthogonality; throws a StabilizerError subclass.
    explicit StabilizerGenMatrix(BitMatrix s);

    static StabilizerGenMatrix from_pauli_strings(const std::vector<PauliString>& generators);
    /// S = [theta; I].
    static StabilizerGenMatrix from_graph(const Graph& g);

    [[nodiscard]] std::size_t qubits() const noexcept { return s_.cols(); }
    [[nodiscard]] const BitMatrix& matrix() const noexcept { return s_; }
    [[nodiscard]] BitMatrix z_block() const { return block(s_, 0, 0, qubits(), qubits()); }
    [[nodiscard]] BitMatrix x_block() const { return block(s_, qubits(), 0, qubits(), qubits()); }
    [[nodiscard]] PauliString generator(std::size_t j) const { return PauliString::from_binary(column(s_, j)); }
    [[nodiscard]] std::vector<PauliString> to_pauli_strings() const;

    friend bool operator==(const StabilizerGenMatrix&, const StabilizerGenMatrix&) = default;

private:
    BitMatrix s_;
};

/// S R for invertible R; throws SingularError otherwise.
[[nodiscard]] StabilizerGenMatrix basis_change(const StabilizerGenMatrix& s, const BitMatrix& r);

/// Column spans coincide: rank [S | S'] == n.
[[nodiscard]] bool same_subspace(const BitMatrix& s, const BitMatrix& s_prime);
[[nodiscard]] bool same_subspace(const StabilizerGenMatrix& s, const StabilizerGenMatrix& s_prime);

/// Applies `transvections` random symplectic transvections x -> x + (v^T P x) v
/// to the columns of [0; I]. Deterministic in (n, seed, transvections).
[[nodiscard]] StabilizerGenMatrix random_stabilizer(std::size_t n, std::uint64_t seed, std::size_t transvections);
/// Uses 8n transvections.
[[nodiscard]] StabilizerGenMatrix random_stabilizer(std::size_t n, std::uint64_t seed);

}  // namespace lcg
