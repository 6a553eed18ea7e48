#pragma once

#include <cstddef>
#include <memory>
#include <vector>

#include "hqc/complex.hpp"
#include "hqc/gf2.hpp"

namespace hqc {

enum class Pauli { X, Z };

/// Symplectically paired logical representatives: |X_i ∩ Z_j| odd iff i = j.
struct LogicalBasis {
    std::vector<BitVector> x_ops;
    std::vector<BitVector> z_ops;
};

/// CSS code with qubits on level i of a chain complex: Z-checks from the
/// (i+1)-cell boundaries, X-checks from the (i-1)-cell coboundaries.
class CssCode {
public:
    static CssCode from_complex(const ChainComplex& c, int qubit_level);

    std::size_t n() const { return n_; }
    int qubit_level() const { return qubit_level_; }
    const ChainComplex& complex() const { return *complex_; }
    const BitMatrix& h_x() const { return h_x_; }
    const BitMatrix& h_z() const { return h_z_; }

    std::size_t compute_k() const;

    /// Deterministic symplectically paired basis. Throws std::runtime_error
    /// when k = 0.
    LogicalBasis logical_basis() const;

    /// Violated checks of the opposite type: H_X e for a Z-type error,
    /// H_Z e for an X-type error.
    BitVector syndrome(const BitVector& error_support, Pauli side) const;

    /// For a zero-syndrome residual, true iff it lies outside the row space
    /// of the same-type stabilizers. Throws std::invalid_argument when the
    /// syndrome is nonzero.
    bool is_logical_failure(const BitVector& residual, Pauli side) const;

    /// Row space of the same-type stabilizer matrix (H_Z rows for Z, H_X
    /// rows for X), precomputed at construction.
    const RowBasis& stabilizer_span(Pauli side) const {
        return side == Pauli::Z ? span_z_ : span_x_;
    }

private:
    std::size_t n_ = 0;
    int qubit_level_ = 0;
    std::shared_ptr<const ChainComplex> complex_;
    BitMatrix h_x_, h_z_;
    RowBasis span_x_{0}, span_z_{0};
};

}  // namespace hqc
