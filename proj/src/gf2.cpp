#include "lcgraph/gf2.hpp"

#include <bit>
#include <utility>

namespace lcg {

namespace {

void require(bool ok, const char* what) {
    if (!ok) throw std::invalid_argument(what);
}

}  // namespace

// ---------------------------------------------------------------- BitVec

BitVec BitVec::unit(std::size_t len, std::size_t i) {
    BitVec v(len);
    v.set(i);
    return v;
}

BitVec BitVec::ones(std::size_t len) {
    BitVec v(len);
    for (auto& w : v.words_) w = ~word_type{0};
    if (len % word_bits != 0 && !v.words_.empty())
        v.words_.back() &= (word_type{1} << (len % word_bits)) - 1;
    return v;
}

BitVec BitVec::from_string(const std::string& bits) {
    BitVec v(bits.size());
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (bits[i] == '1')
            v.set(i);
        else if (bits[i] != '0')
            throw std::invalid_argument("bit string may only contain '0' and '1'");
    }
    return v;
}

bool BitVec::any() const noexcept {
    for (auto w : words_)
        if (w != 0) return true;
    return false;
}

std::size_t BitVec::count() const noexcept {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
}

std::size_t BitVec::find_next(std::size_t from) const noexcept {
    if (from >= len_) return len_;
    std::size_t w = from / word_bits;
    word_type cur = words_[w] & (~word_type{0} << (from % word_bits));
    while (true) {
        if (cur != 0) return w * word_bits + static_cast<std::size_t>(std::countr_zero(cur));
        if (++w == words_.size()) return len_;
        cur = words_[w];
    }
}

bool BitVec::dot(const BitVec& other) const {
    require(len_ == other.len_, "BitVec::dot: length mismatch");
    word_type acc = 0;
    for (std::size_t w = 0; w < words_.size(); ++w) acc ^= words_[w] & other.words_[w];
    return std::popcount(acc) & 1;
}

BitVec& BitVec::operator^=(const BitVec& other) {
    require(len_ == other.len_, "BitVec::operator^=: length mismatch");
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= other.words_[w];
    return *this;
}

BitVec& BitVec::operator&=(const BitVec& other) {
    require(len_ == other.len_, "BitVec::operator&=: length mismatch");
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= other.words_[w];
    return *this;
}

BitVec& BitVec::operator|=(const BitVec& other) {
    require(len_ == other.len_, "BitVec::operator|=: length mismatch");
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] |= other.words_[w];
    return *this;
}

std::string BitVec::to_string() const {
    std::string s(len_, '0');
    for (std::size_t i = 0; i < len_; ++i)
        if (get(i)) s[i] = '1';
    return s;
}

BitVec operator^(BitVec a, const BitVec& b) { return a ^= b; }
BitVec operator&(BitVec a, const BitVec& b) { return a &= b; }
BitVec operator|(BitVec a, const BitVec& b) { return a |= b; }

BitVec concat(const BitVec& a, const BitVec& b) {
    BitVec out(a.size() + b.size());
    for (auto i = a.find_first(); i < a.size(); i = a.find_next(i + 1)) out.set(i);
    for (auto i = b.find_first(); i < b.size(); i = b.find_next(i + 1)) out.set(a.size() + i);
    return out;
}

BitVec slice(const BitVec& v, std::size_t first, std::size_t len) {
    require(first + len <= v.size(), "slice: range out of bounds");
    BitVec out(len);
    for (auto i = v.find_next(first); i < first + len; i = v.find_next(i + 1)) out.set(i - first);
    return out;
}

// ------------------------------------------------------------- BitMatrix

BitMatrix BitMatrix::from_rows(std::vector<BitVec> rows, std::size_t cols) {
    for (const auto& r : rows) require(r.size() == cols, "BitMatrix::from_rows: ragged rows");
    BitMatrix m;
    m.rows_ = rows.size();
    m.cols_ = cols;
    m.data_ = std::move(rows);
    return m;
}

BitMatrix BitMatrix::from_ints(const std::vector<std::vector<int>>& entries) {
    const std::size_t cols = entries.empty() ? 0 : entries.front().size();
    BitMatrix m(entries.size(), cols);
    for (std::size_t r = 0; r < entries.size(); ++r) {
        require(entries[r].size() == cols, "BitMatrix::from_ints: ragged rows");
        for (std::size_t c = 0; c < cols; ++c) m.set(r, c, (entries[r][c] & 1) != 0);
    }
    return m;
}

void BitMatrix::set_row(std::size_t r, BitVec v) {
    require(v.size() == cols_, "BitMatrix::set_row: length mismatch");
    data_[r] = std::move(v);
}

bool BitMatrix::is_zero() const noexcept {
    for (const auto& r : data_)
        if (r.any()) return false;
    return true;
}

bool BitMatrix::is_identity() const noexcept {
    if (rows_ != cols_) return false;
    for (std::size_t r = 0; r < rows_; ++r)
        if (data_[r].count() != 1 || !data_[r].get(r)) return false;
    return true;
}

std::string BitMatrix::to_string() const {
    std::string s;
    for (const auto& r : data_) {
        s += r.to_string();
        s += '\n';
    }
    return s;
}

// ----------------------------------------------------------- free funcs

BitMatrix identity(std::size_t n) {
    BitMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i);
    return m;
}

BitMatrix zeros(std::size_t rows, std::size_t cols) { return BitMatrix(rows, cols); }

BitMatrix all_ones_offdiag(std::size_t n) {
    BitMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        auto r = BitVec::ones(n);
        r.set(i, false);
        m.set_row(i, std::move(r));
    }
    return m;
}

BitMatrix diag(const BitVec& d) {
    BitMatrix m(d.size(), d.size());
    for (auto i = d.find_first(); i < d.size(); i = d.find_next(i + 1)) m.set(i, i);
    return m;
}

BitMatrix transpose(const BitMatrix& m) {
    BitMatrix t(m.cols(), m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        const auto& row = m.row(r);
        for (auto c = row.find_first(); c < row.size(); c = row.find_next(c + 1)) t.set(c, r);
    }
    return t;
}

BitVec column(const BitMatrix& m, std::size_t c) {
    require(c < m.cols(), "column: index out of range");
    BitVec v(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r)
        if (m(r, c)) v.set(r);
    return v;
}

BitVec diagonal(const BitMatrix& m) {
    const auto k = std::min(m.rows(), m.cols());
    BitVec v(k);
    for (std::size_t i = 0; i < k; ++i)
        if (m(i, i)) v.set(i);
    return v;
}

BitMatrix set_diagonal_zero(BitMatrix m) {
    const auto k = std::min(m.rows(), m.cols());
    for (std::size_t i = 0; i < k; ++i) m.set(i, i, false);
    return m;
}

bool is_symmetric(const BitMatrix& m) { return m.is_square() && transpose(m) == m; }

BitMatrix block(const BitMatrix& m, std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) {
    require(r0 + nr <= m.rows() && c0 + nc <= m.cols(), "block: range out of bounds");
    BitMatrix b(nr, nc);
    for (std::size_t r = 0; r < nr; ++r) b.set_row(r, slice(m.row(r0 + r), c0, nc));
    return b;
}

BitMatrix vstack(const BitMatrix& top, const BitMatrix& bottom) {
    require(top.cols() == bottom.cols(), "vstack: column mismatch");
    BitMatrix m(top.rows() + bottom.rows(), top.cols());
    for (std::size_t r = 0; r < top.rows(); ++r) m.set_row(r, top.row(r));
    for (std::size_t r = 0; r < bottom.rows(); ++r) m.set_row(top.rows() + r, bottom.row(r));
    return m;
}

BitMatrix hstack(const BitMatrix& left, const BitMatrix& right) {
    require(left.rows() == right.rows(), "hstack: row mismatch");
    BitMatrix m(left.rows(), left.cols() + right.cols());
    for (std::size_t r = 0; r < left.rows(); ++r) m.set_row(r, concat(left.row(r), right.row(r)));
    return m;
}

BitMatrix mat_mul(const BitMatrix& a, const BitMatrix& b) {
    require(a.cols() == b.rows(), "mat_mul: dimension mismatch");
    BitMatrix out(a.rows(), b.cols());
    for (std::size_t r = 0; r < a.rows(); ++r) {
        const auto& sel = a.row(r);
        for (auto k = sel.find_first(); k < sel.size(); k = sel.find_next(k + 1)) out.xor_into_row(r, b.row(k));
    }
    return out;
}

BitVec mat_vec(const BitMatrix& m, const BitVec& v) {
    require(m.cols() == v.size(), "mat_vec: dimension mismatch");
    BitVec out(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r)
        if (m.row(r).dot(v)) out.set(r);
    return out;
}

BitMatrix operator*(const BitMatrix& a, const BitMatrix& b) { return mat_mul(a, b); }

BitMatrix operator+(const BitMatrix& a, const BitMatrix& b) {
    require(a.rows() == b.rows() && a.cols() == b.cols(), "operator+: dimension mismatch");
    BitMatrix out = a;
    for (std::size_t r = 0; r < a.rows(); ++r) out.xor_into_row(r, b.row(r));
    return out;
}

EchelonForm reduced_echelon(const BitMatrix& m) {
    EchelonForm ef{m, {}};
    auto& w = ef.reduced;
    std::size_t next = 0;
    for (std::size_t c = 0; c < w.cols() && next < w.rows(); ++c) {
        std::size_t p = next;
        while (p < w.rows() && !w(p, c)) ++p;
        if (p == w.rows()) continue;
        w.swap_rows(next, p);
        for (std::size_t r = 0; r < w.rows(); ++r)
            if (r != next && w(r, c)) w.xor_row(r, next);
        ef.pivots.push_back(c);
        ++next;
    }
    return ef;
}

std::size_t rank(const BitMatrix& m) {
    // Forward elimination only; no back substitution needed for the count.
    BitMatrix w = m;
    std::size_t next = 0;
    for (std::size_t c = 0; c < w.cols() && next < w.rows(); ++c) {
        std::size_t p = next;
        while (p < w.rows() && !w(p, c)) ++p;
        if (p == w.rows()) continue;
        w.swap_rows(next, p);
        for (std::size_t r = next + 1; r < w.rows(); ++r)
            if (w(r, c)) w.xor_row(r, next);
        ++next;
    }
    return next;
}

std::optional<BitMatrix> try_invert(const BitMatrix& m) {
    require(m.is_square(), "invert: matrix is not square");
    const auto n = m.rows();
    BitMatrix w = m;
    BitMatrix inv = identity(n);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && !w(p, c)) ++p;
        if (p == n) return std::nullopt;
        w.swap_rows(c, p);
        inv.swap_rows(c, p);
        for (std::size_t r = 0; r < n; ++r) {
            if (r != c && w(r, c)) {
                w.xor_row(r, c);
                inv.xor_row(r, c);
            }
        }
    }
    return inv;
}

BitMatrix invert(const BitMatrix& m) {
    auto inv = try_invert(m);
    if (!inv) throw SingularError("invert: matrix of size " + std::to_string(m.rows()) + " is singular");
    return *std::move(inv);
}

bool is_invertible(const BitMatrix& m) { return m.is_square() && rank(m) == m.rows(); }

std::vector<BitVec> solve_homogeneous(const BitMatrix& m) {
    const auto ef = reduced_echelon(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : ef.pivots) is_pivot[c] = true;

    std::vector<BitVec> basis;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        BitVec v(m.cols());
        v.set(f);
        for (std::size_t k = 0; k < ef.pivots.size(); ++k)
            if (ef.reduced(k, f)) v.set(ef.pivots[k]);
        basis.push_back(std::move(v));
    }
    return basis;
}

bool SymplecticForm::inner(const BitVec& a, const BitVec& b) const {
    require(a.size() == 2 * n && b.size() == 2 * n, "SymplecticForm::inner: length mismatch");
    bool acc = false;
    for (std::size_t i = 0; i < n; ++i) acc ^= (a[i] && b[n + i]) != (a[n + i] && b[i]);
    return acc;
}

BitMatrix SymplecticForm::gram(const BitMatrix& a, const BitMatrix& b) const {
    require(a.rows() == 2 * n && b.rows() == 2 * n, "SymplecticForm::gram: row count must be 2n");
    // P b swaps the Z and X halves.
    const BitMatrix pb = vstack(block(b, n, 0, n, b.cols()), block(b, 0, 0, n, b.cols()));
    return transpose(a) * pb;
}

BitMatrix SymplecticForm::matrix() const {
    BitMatrix p(2 * n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        p.set(i, n + i);
        p.set(n + i, i);
    }
    return p;
}

}  // namespace lcg

std::size_t std::hash<lcg::BitVec>::operator()(const lcg::BitVec& v) const noexcept {
    std::size_t h = v.size() * 0x9e3779b97f4a7c15ULL;
    for (auto w : v.words()) h ^= std::hash<std::uint64_t>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
}
