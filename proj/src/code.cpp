#include "hqc/code.hpp"

#include <stdexcept>

namespace hqc {

CssCode CssCode::from_complex(const ChainComplex& c, int qubit_level) {
    if (qubit_level < 1 || qubit_level > c.dimension - 1)
        throw std::invalid_argument("CssCode::from_complex: qubit level out of range");
    CssCode code;
    code.n_ = c.level_sizes[qubit_level];
    code.qubit_level_ = qubit_level;
    code.complex_ = std::make_shared<ChainComplex>(c);
    code.h_x_ = c.boundary(qubit_level);
    code.h_z_ = c.boundary(qubit_level + 1).transposed();
    code.span_x_ = RowBasis(code.h_x_);
    code.span_z_ = RowBasis(code.h_z_);
    return code;
}

std::size_t CssCode::compute_k() const { return n_ - rank(h_x_) - rank(h_z_); }

LogicalBasis CssCode::logical_basis() const {
    std::size_t k = compute_k();
    if (k == 0) throw std::runtime_error("logical_basis: trivial code (k = 0)");
    // Cycle representatives modulo stabilizers, each side.
    auto candidates = [](const BitMatrix& checks, const RowBasis& stab) {
        std::vector<BitVector> out;
        RowBasis grow = stab;
        for (const BitVector& v : kernel_basis(checks))
            if (grow.insert(v)) out.push_back(v);
        return out;
    };
    // Z-type logicals commute with every X-check; X-type with every Z-check.
    std::vector<BitVector> z_ops = candidates(h_x_, span_z_);
    std::vector<BitVector> x_ops = candidates(h_z_, span_x_);
    if (z_ops.size() != k || x_ops.size() != k)
        throw std::runtime_error("logical_basis: homology dimension mismatch");

    // Symplectic reduction of the overlap matrix to the identity.
    for (std::size_t i = 0; i < k; ++i) {
        std::size_t pivot = k;
        for (std::size_t j = i; j < k; ++j)
            if (x_ops[i].dot(z_ops[j])) { pivot = j; break; }
        if (pivot == k) {
            // x_i pairs with nothing left; swap in a later X row that does.
            std::size_t xi = k;
            for (std::size_t a = i + 1; a < k && xi == k; ++a)
                for (std::size_t j = i; j < k; ++j)
                    if (x_ops[a].dot(z_ops[j])) { xi = a; break; }
            if (xi == k) throw std::runtime_error("logical_basis: degenerate pairing");
            std::swap(x_ops[i], x_ops[xi]);
            for (std::size_t j = i; j < k; ++j)
                if (x_ops[i].dot(z_ops[j])) { pivot = j; break; }
        }
        std::swap(z_ops[i], z_ops[pivot]);
        for (std::size_t j = 0; j < k; ++j)
            if (j != i && x_ops[i].dot(z_ops[j])) z_ops[j] ^= z_ops[i];
        for (std::size_t a = 0; a < k; ++a)
            if (a != i && x_ops[a].dot(z_ops[i])) x_ops[a] ^= x_ops[i];
    }
    return {std::move(x_ops), std::move(z_ops)};
}

BitVector CssCode::syndrome(const BitVector& error_support, Pauli side) const {
    if (error_support.size() != n_)
        throw std::invalid_argument("syndrome: support length mismatch");
    return side == Pauli::Z ? h_x_.mul(error_support) : h_z_.mul(error_support);
}

bool CssCode::is_logical_failure(const BitVector& residual, Pauli side) const {
    if (!syndrome(residual, side).is_zero())
        throw std::invalid_argument("is_logical_failure: residual has nonzero syndrome");
    return !stabilizer_span(side).contains(residual);
}

}  // namespace hqc
