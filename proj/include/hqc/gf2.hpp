#pragma once

#include <cstdint>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

namespace hqc {

/// Bit vector over GF(2), packed into 64-bit words.
class BitVector {
public:
    BitVector() = default;
    explicit BitVector(std::size_t n) : n_(n), words_((n + 63) / 64, 0) {}

    std::size_t size() const { return n_; }

    bool get(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1; }
    void set(std::size_t i, bool v) {
        uint64_t mask = uint64_t(1) << (i & 63);
        if (v) words_[i >> 6] |= mask; else words_[i >> 6] &= ~mask;
    }
    void flip(std::size_t i) { words_[i >> 6] ^= uint64_t(1) << (i & 63); }

    void operator^=(const BitVector& o) {
        for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= o.words_[w];
    }

    std::size_t weight() const;
    bool is_zero() const;

    /// Parity of the overlap <this, other> (both must have equal length).
    bool dot(const BitVector& o) const;

    /// Indices of set bits, ascending.
    std::vector<std::size_t> ones() const;

    static BitVector from_ones(std::size_t n, const std::vector<std::size_t>& idx);

    bool operator==(const BitVector& o) const { return n_ == o.n_ && words_ == o.words_; }

    const std::vector<uint64_t>& words() const { return words_; }
    std::vector<uint64_t>& words() { return words_; }

private:
    std::size_t n_ = 0;
    std::vector<uint64_t> words_;
};

/// Dense bit-packed matrix over GF(2). Construction is sparse (entry list);
/// elimination-style operations run on the packed rows.
class BitMatrix {
public:
    BitMatrix() = default;
    BitMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), stride_((cols + 63) / 64), data_(rows * stride_, 0) {}

    static BitMatrix from_entries(std::size_t rows, std::size_t cols,
                                  const std::vector<std::pair<std::size_t, std::size_t>>& entries);
    static BitMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    bool get(std::size_t r, std::size_t c) const {
        return (data_[r * stride_ + (c >> 6)] >> (c & 63)) & 1;
    }
    void set(std::size_t r, std::size_t c, bool v) {
        uint64_t mask = uint64_t(1) << (c & 63);
        uint64_t& w = data_[r * stride_ + (c >> 6)];
        if (v) w |= mask; else w &= ~mask;
    }
    void flip(std::size_t r, std::size_t c) {
        data_[r * stride_ + (c >> 6)] ^= uint64_t(1) << (c & 63);
    }

    BitVector row(std::size_t r) const;
    void xor_row_into(std::size_t r, BitVector& acc) const;

    /// Sorted (row, col) positions of all ones.
    std::vector<std::pair<std::size_t, std::size_t>> entries() const;

    BitMatrix transposed() const;

    /// Matrix-vector product over GF(2); v.size() must equal cols().
    BitVector mul(const BitVector& v) const;

    /// this * other, with other.rows() == cols().
    BitMatrix mul(const BitMatrix& o) const;

    bool is_zero() const;

    std::size_t row_weight(std::size_t r) const;
    std::size_t col_weight(std::size_t c) const;

    bool operator==(const BitMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }

private:
    friend std::size_t rank(const BitMatrix&);
    friend std::vector<BitVector> kernel_basis(const BitMatrix&);
    friend std::optional<BitVector> solve(const BitMatrix&, const BitVector&);

    std::size_t rows_ = 0, cols_ = 0, stride_ = 0;
    std::vector<uint64_t> data_;
};

/// Dimension of the row space.
std::size_t rank(const BitMatrix& m);

/// Basis of the null space {x : m x = 0}, in reduced echelon order
/// (one vector per free column, ascending). Size is cols - rank.
std::vector<BitVector> kernel_basis(const BitMatrix& m);

/// Some x with m x = b, or nullopt when the system is inconsistent.
/// Throws std::invalid_argument on a length mismatch.
std::optional<BitVector> solve(const BitMatrix& m, const BitVector& b);

/// Incrementally built row-echelon basis of a subspace; used for repeated
/// membership tests against a fixed row space (stabilizer groups, images).
class RowBasis {
public:
    explicit RowBasis(std::size_t ncols) : ncols_(ncols) {}
    explicit RowBasis(const BitMatrix& m);

    std::size_t dim() const { return rows_.size(); }
    std::size_t ncols() const { return ncols_; }

    /// Adds v to the basis; returns false if v was already in the span.
    bool insert(BitVector v);

    /// True iff v lies in the span.
    bool contains(const BitVector& v) const;

    /// v reduced against the basis (the coset representative).
    BitVector reduce(BitVector v) const;

private:
    std::size_t ncols_;
    std::vector<BitVector> rows_;      // echelon rows
    std::vector<std::size_t> pivots_;  // pivot column of each row
};

}  // namespace hqc
