// Bit-packed dense linear algebra over GF(2).
//
// Rows are packed little-endian: bit b of word w holds column 64*w + b.
// Every operation is a pure function of its arguments.

#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace lcg {

/// Raised when an inverse is requested for a rank-deficient matrix.
class SingularError : public std::runtime_error {
public:
    explicit SingularError(const std::string& what) : std::runtime_error(what) {}
};

class BitVec {
public:
    using word_type = std::uint64_t;
    static constexpr std::size_t word_bits = 64;

    BitVec() = default;
    explicit BitVec(std::size_t len) : len_(len), words_(word_count(len), 0) {}

    static BitVec unit(std::size_t len, std::size_t i);
    static BitVec ones(std::size_t len);
    /// Parses a string of '0'/'1'; throws std::invalid_argument otherwise.
    static BitVec from_string(const std::string& bits);

    [[nodiscard]] std::size_t size() const noexcept { return len_; }
    [[nodiscard]] bool empty() const noexcept { return len_ == 0; }

    [[nodiscard]] bool get(std::size_t i) const noexcept {
        return (words_[i / word_bits] >> (i % word_bits)) & 1u;
    }
    [[nodiscard]] bool operator[](std::size_t i) const noexcept { return get(i); }
    void set(std::size_t i, bool v = true) noexcept {
        const word_type mask = word_type{1} << (i % word_bits);
        if (v)
            words_[i / word_bits] |= mask;
        else
            words_[i / word_bits] &= ~mask;
    }
    void flip(std::size_t i) noexcept { words_[i / word_bits] ^= word_type{1} << (i % word_bits); }
    void clear() noexcept { std::fill(words_.begin(), words_.end(), 0); }

    [[nodiscard]] bool any() const noexcept;
    [[nodiscard]] bool none() const noexcept { return !any(); }
    [[nodiscard]] std::size_t count() const noexcept;
    /// Index of the lowest set bit at or after `from`, or size() if none.
    [[nodiscard]] std::size_t find_next(std::size_t from) const noexcept;
    [[nodiscard]] std::size_t find_first() const noexcept { return find_next(0); }

    /// Parity of the bitwise AND, i.e. the GF(2) dot product.
    [[nodiscard]] bool dot(const BitVec& other) const;

    BitVec& operator^=(const BitVec& other);
    BitVec& operator&=(const BitVec& other);
    BitVec& operator|=(const BitVec& other);

    [[nodiscard]] std::span<const word_type> words() const noexcept { return words_; }

    [[nodiscard]] std::string to_string() const;

    friend bool operator==(const BitVec&, const BitVec&) = default;

    static constexpr std::size_t word_count(std::size_t len) noexcept {
        return (len + word_bits - 1) / word_bits;
    }

private:
    std::size_t len_ = 0;
    std::vector<word_type> words_;
};

[[nodiscard]] BitVec operator^(BitVec a, const BitVec& b);
[[nodiscard]] BitVec operator&(BitVec a, const BitVec& b);
[[nodiscard]] BitVec operator|(BitVec a, const BitVec& b);

/// Concatenation [a | b].
[[nodiscard]] BitVec concat(const BitVec& a, const BitVec& b);
/// Bits [first, first + len).
[[nodiscard]] BitVec slice(const BitVec& v, std::size_t first, std::size_t len);

class BitMatrix {
public:
    BitMatrix() = default;
    BitMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows, BitVec(cols)) {}
    /// Builds from explicit rows; all rows must share one length.
    static BitMatrix from_rows(std::vector<BitVec> rows, std::size_t cols);
    /// Convenience for literals, e.g. {{1,0},{0,1}}.
    static BitMatrix from_ints(const std::vector<std::vector<int>>& entries);

    [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
    [[nodiscard]] std::size_t cols() const noexcept { return cols_; }
    [[nodiscard]] bool is_square() const noexcept { return rows_ == cols_; }

    [[nodiscard]] bool get(std::size_t r, std::size_t c) const noexcept { return data_[r].get(c); }
    [[nodiscard]] bool operator()(std::size_t r, std::size_t c) const noexcept { return data_[r].get(c); }
    void set(std::size_t r, std::size_t c, bool v = true) noexcept { data_[r].set(c, v); }
    void flip(std::size_t r, std::size_t c) noexcept { data_[r].flip(c); }

    [[nodiscard]] const BitVec& row(std::size_t r) const noexcept { return data_[r]; }
    void set_row(std::size_t r, BitVec v);
    /// row[dst] ^= row[src]
    void xor_row(std::size_t dst, std::size_t src) { data_[dst] ^= data_[src]; }
    void xor_into_row(std::size_t dst, const BitVec& v) { data_[dst] ^= v; }
    void swap_rows(std::size_t a, std::size_t b) noexcept { std::swap(data_[a], data_[b]); }

    [[nodiscard]] bool is_zero() const noexcept;
    [[nodiscard]] bool is_identity() const noexcept;

    [[nodiscard]] std::string to_string() const;

    friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<BitVec> data_;
};

// Constructors.
[[nodiscard]] BitMatrix identity(std::size_t n);
[[nodiscard]] BitMatrix zeros(std::size_t rows, std::size_t cols);
/// All ones except a zero diagonal; the adjacency matrix of the complete graph.
[[nodiscard]] BitMatrix all_ones_offdiag(std::size_t n);
/// Square diagonal matrix with the given diagonal.
[[nodiscard]] BitMatrix diag(const BitVec& d);

// Structure.
[[nodiscard]] BitMatrix transpose(const BitMatrix& m);
[[nodiscard]] BitVec column(const BitMatrix& m, std::size_t c);
[[nodiscard]] BitVec diagonal(const BitMatrix& m);
[[nodiscard]] BitMatrix set_diagonal_zero(BitMatrix m);
[[nodiscard]] bool is_symmetric(const BitMatrix& m);
/// Rows [r0, r0+nr) and columns [c0, c0+nc).
[[nodiscard]] BitMatrix block(const BitMatrix& m, std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc);
/// [top; bottom]
[[nodiscard]] BitMatrix vstack(const BitMatrix& top, const BitMatrix& bottom);
/// [left | right]
[[nodiscard]] BitMatrix hstack(const BitMatrix& left, const BitMatrix& right);

// Arithmetic. Dimension mismatches throw std::invalid_argument.
[[nodiscard]] BitMatrix mat_mul(const BitMatrix& a, const BitMatrix& b);
[[nodiscard]] BitVec mat_vec(const BitMatrix& m, const BitVec& v);
[[nodiscard]] BitMatrix operator*(const BitMatrix& a, const BitMatrix& b);
[[nodiscard]] BitMatrix operator+(const BitMatrix& a, const BitMatrix& b);

// Elimination.
[[nodiscard]] std::size_t rank(const BitMatrix& m);
[[nodiscard]] std::optional<BitMatrix> try_invert(const BitMatrix& m);
/// Throws SingularError when m is not invertible, std::invalid_argument when not square.
[[nodiscard]] BitMatrix invert(const BitMatrix& m);
[[nodiscard]] bool is_invertible(const BitMatrix& m);

/// Reduced row echelon form with lowest-index pivot rows. `pivots[k]` is the
/// pivot column of row k.
struct EchelonForm {
    BitMatrix reduced;
    std::vector<std::size_t> pivots;
};
[[nodiscard]] EchelonForm reduced_echelon(const BitMatrix& m);

/// Basis of {x : m x = 0}. One vector per free column in ascending order;
/// that column's coordinate is 1 and the other free coordinates are 0.
[[nodiscard]] std::vector<BitVec> solve_homogeneous(const BitMatrix& m);

/// The symplectic form P = [[0, I], [I, 0]] on GF(2)^{2n}, with the Z half
/// of a vector in coordinates [0, n) and the X half in [n, 2n).
struct SymplecticForm {
    std::size_t n = 0;

    [[nodiscard]] bool inner(const BitVec& a, const BitVec& b) const;
    /// a^T P b for every pair of columns, an a.cols() x b.cols() matrix.
    [[nodiscard]] BitMatrix gram(const BitMatrix& a, const BitMatrix& b) const;
    [[nodiscard]] BitMatrix matrix() const;
};

}  // namespace lcg

template <>
struct std::hash<lcg::BitVec> {
    std::size_t operator()(const lcg::BitVec& v) const noexcept;
};
