#include "hqc/gf2.hpp"

#include <bit>
#include <stdexcept>

namespace hqc {

std::size_t BitVector::weight() const {
    std::size_t w = 0;
    for (uint64_t word : words_) w += std::popcount(word);
    return w;
}

bool BitVector::is_zero() const {
    for (uint64_t word : words_)
        if (word) return false;
    return true;
}

bool BitVector::dot(const BitVector& o) const {
    if (n_ != o.n_) throw std::invalid_argument("BitVector::dot: length mismatch");
    uint64_t acc = 0;
    for (std::size_t w = 0; w < words_.size(); ++w) acc ^= words_[w] & o.words_[w];
    return std::popcount(acc) & 1;
}

std::vector<std::size_t> BitVector::ones() const {
    std::vector<std::size_t> out;
    for (std::size_t w = 0; w < words_.size(); ++w) {
        uint64_t word = words_[w];
        while (word) {
            out.push_back(w * 64 + std::countr_zero(word));
            word &= word - 1;
        }
    }
    return out;
}

BitVector BitVector::from_ones(std::size_t n, const std::vector<std::size_t>& idx) {
    BitVector v(n);
    for (std::size_t i : idx) v.flip(i);
    return v;
}

BitMatrix BitMatrix::from_entries(std::size_t rows, std::size_t cols,
                                  const std::vector<std::pair<std::size_t, std::size_t>>& entries) {
    BitMatrix m(rows, cols);
    for (auto [r, c] : entries) {
        if (r >= rows || c >= cols) throw std::out_of_range("BitMatrix entry out of range");
        m.set(r, c, true);
    }
    return m;
}

BitMatrix BitMatrix::identity(std::size_t n) {
    BitMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
    return m;
}

BitVector BitMatrix::row(std::size_t r) const {
    BitVector v(cols_);
    for (std::size_t w = 0; w < stride_; ++w) v.words()[w] = data_[r * stride_ + w];
    return v;
}

void BitMatrix::xor_row_into(std::size_t r, BitVector& acc) const {
    for (std::size_t w = 0; w < stride_; ++w) acc.words()[w] ^= data_[r * stride_ + w];
}

std::vector<std::pair<std::size_t, std::size_t>> BitMatrix::entries() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t w = 0; w < stride_; ++w) {
            uint64_t word = data_[r * stride_ + w];
            while (word) {
                out.emplace_back(r, w * 64 + std::countr_zero(word));
                word &= word - 1;
            }
        }
    return out;
}

BitMatrix BitMatrix::transposed() const {
    BitMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t w = 0; w < stride_; ++w) {
            uint64_t word = data_[r * stride_ + w];
            while (word) {
                t.set(w * 64 + std::countr_zero(word), r, true);
                word &= word - 1;
            }
        }
    return t;
}

BitVector BitMatrix::mul(const BitVector& v) const {
    if (v.size() != cols_) throw std::invalid_argument("BitMatrix::mul: length mismatch");
    BitVector out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        uint64_t acc = 0;
        for (std::size_t w = 0; w < stride_; ++w) acc ^= data_[r * stride_ + w] & v.words()[w];
        if (std::popcount(acc) & 1) out.set(r, true);
    }
    return out;
}

BitMatrix BitMatrix::mul(const BitMatrix& o) const {
    if (o.rows_ != cols_) throw std::invalid_argument("BitMatrix::mul: shape mismatch");
    BitMatrix out(rows_, o.cols_);
    for (std::size_t r = 0; r < rows_; ++r) {
        BitVector acc(o.cols_);
        for (std::size_t w = 0; w < stride_; ++w) {
            uint64_t word = data_[r * stride_ + w];
            while (word) {
                o.xor_row_into(w * 64 + std::countr_zero(word), acc);
                word &= word - 1;
            }
        }
        for (std::size_t w = 0; w < out.stride_; ++w) out.data_[r * out.stride_ + w] = acc.words()[w];
    }
    return out;
}

bool BitMatrix::is_zero() const {
    for (uint64_t w : data_)
        if (w) return false;
    return true;
}

std::size_t BitMatrix::row_weight(std::size_t r) const {
    std::size_t w = 0;
    for (std::size_t i = 0; i < stride_; ++i) w += std::popcount(data_[r * stride_ + i]);
    return w;
}

std::size_t BitMatrix::col_weight(std::size_t c) const {
    std::size_t w = 0;
    for (std::size_t r = 0; r < rows_; ++r) w += get(r, c);
    return w;
}

namespace {

// In-place row echelon form. Pivot order: leftmost nonzero column, lowest
// remaining row index. Returns pivot columns in order.
std::vector<std::size_t> echelonize(std::vector<uint64_t>& data, std::size_t rows,
                                    std::size_t cols, std::size_t stride, bool reduced) {
    std::vector<std::size_t> pivots;
    std::size_t pr = 0;  // next pivot row
    for (std::size_t c = 0; c < cols && pr < rows; ++c) {
        std::size_t wi = c >> 6;
        uint64_t mask = uint64_t(1) << (c & 63);
        std::size_t sel = rows;
        for (std::size_t r = pr; r < rows; ++r)
            if (data[r * stride + wi] & mask) { sel = r; break; }
        if (sel == rows) continue;
        if (sel != pr)
            for (std::size_t w = 0; w < stride; ++w)
                std::swap(data[sel * stride + w], data[pr * stride + w]);
        std::size_t lo = reduced ? 0 : pr + 1;
        for (std::size_t r = lo; r < rows; ++r) {
            if (r == pr) continue;
            if (data[r * stride + wi] & mask)
                for (std::size_t w = wi; w < stride; ++w)
                    data[r * stride + w] ^= data[pr * stride + w];
        }
        if (reduced)
            for (std::size_t r = 0; r < pr; ++r)
                if (data[r * stride + wi] & mask)
                    for (std::size_t w = wi; w < stride; ++w)
                        data[r * stride + w] ^= data[pr * stride + w];
        pivots.push_back(c);
        ++pr;
    }
    return pivots;
}

}  // namespace

std::size_t rank(const BitMatrix& m) {
    std::vector<uint64_t> data = m.data_;
    return echelonize(data, m.rows_, m.cols_, m.stride_, false).size();
}

std::vector<BitVector> kernel_basis(const BitMatrix& m) {
    std::vector<uint64_t> data = m.data_;
    std::vector<std::size_t> pivots = echelonize(data, m.rows_, m.cols_, m.stride_, true);

    std::vector<bool> is_pivot(m.cols_, false);
    for (std::size_t c : pivots) is_pivot[c] = true;

    std::vector<BitVector> basis;
    for (std::size_t free = 0; free < m.cols_; ++free) {
        if (is_pivot[free]) continue;
        BitVector v(m.cols_);
        v.set(free, true);
        for (std::size_t i = 0; i < pivots.size(); ++i)
            if (data[i * m.stride_ + (free >> 6)] >> (free & 63) & 1) v.set(pivots[i], true);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<BitVector> solve(const BitMatrix& m, const BitVector& b) {
    if (b.size() != m.rows_) throw std::invalid_argument("solve: rhs length mismatch");
    // Augmented elimination with b tracked as an extra column.
    std::vector<uint64_t> data = m.data_;
    BitVector rhs = b;
    std::vector<std::size_t> pivots;
    std::size_t pr = 0;
    for (std::size_t c = 0; c < m.cols_ && pr < m.rows_; ++c) {
        std::size_t wi = c >> 6;
        uint64_t mask = uint64_t(1) << (c & 63);
        std::size_t sel = m.rows_;
        for (std::size_t r = pr; r < m.rows_; ++r)
            if (data[r * m.stride_ + wi] & mask) { sel = r; break; }
        if (sel == m.rows_) continue;
        if (sel != pr) {
            for (std::size_t w = 0; w < m.stride_; ++w)
                std::swap(data[sel * m.stride_ + w], data[pr * m.stride_ + w]);
            bool t = rhs.get(sel);
            rhs.set(sel, rhs.get(pr));
            rhs.set(pr, t);
        }
        for (std::size_t r = pr + 1; r < m.rows_; ++r)
            if (data[r * m.stride_ + wi] & mask) {
                for (std::size_t w = wi; w < m.stride_; ++w)
                    data[r * m.stride_ + w] ^= data[pr * m.stride_ + w];
                if (rhs.get(pr)) rhs.flip(r);
            }
        pivots.push_back(c);
        ++pr;
    }
    for (std::size_t r = pr; r < m.rows_; ++r)
        if (rhs.get(r)) return std::nullopt;

    // Back substitution; free variables set to zero.
    BitVector x(m.cols_);
    for (std::size_t i = pivots.size(); i-- > 0;) {
        bool v = rhs.get(i);
        for (std::size_t c = pivots[i] + 1; c < m.cols_; ++c)
            if ((data[i * m.stride_ + (c >> 6)] >> (c & 63) & 1) && x.get(c)) v = !v;
        x.set(pivots[i], v);
    }
    return x;
}

RowBasis::RowBasis(const BitMatrix& m) : ncols_(m.cols()) {
    for (std::size_t r = 0; r < m.rows(); ++r) insert(m.row(r));
}

bool RowBasis::insert(BitVector v) {
    v = reduce(std::move(v));
    auto one = v.ones();
    if (one.empty()) return false;
    std::size_t pivot = one.front();
    // Keep rows sorted by pivot column.
    std::size_t pos = 0;
    while (pos < pivots_.size() && pivots_[pos] < pivot) ++pos;
    rows_.insert(rows_.begin() + pos, std::move(v));
    pivots_.insert(pivots_.begin() + pos, pivot);
    return true;
}

bool RowBasis::contains(const BitVector& v) const { return reduce(v).is_zero(); }

BitVector RowBasis::reduce(BitVector v) const {
    for (std::size_t i = 0; i < rows_.size(); ++i)
        if (v.get(pivots_[i])) v ^= rows_[i];
    return v;
}

}  // namespace hqc
