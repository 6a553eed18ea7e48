#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "hqc/gf2.hpp"

namespace hqc {

/// Cellulation as a chain complex over GF(2): cell counts per level and the
/// boundary maps between adjacent levels.
struct ChainComplex {
    int dimension = 0;                       // D
    std::vector<std::size_t> level_sizes;    // D+1 entries, level 0..D
    std::vector<BitMatrix> boundaries;       // boundaries[i-1] = boundary map level i -> i-1
    std::string family;
    std::map<std::string, std::string> params;

    /// Boundary map from level i to level i-1, 1 <= i <= D.
    const BitMatrix& boundary(int i) const { return boundaries.at(i - 1); }

    /// Checks boundary-of-boundary = 0 and the incidence parity condition:
    /// for every (i+1)-cell and (i-1)-cell, the number of common incident
    /// i-cells is 0 or 2. Throws std::runtime_error on violation.
    void validate() const;

    /// Alternating sum of cell counts.
    long long euler_characteristic() const;
};

/// dim H_i = dim ker boundary(i) - rank boundary(i+1), with the maps at the
/// ends taken as zero.
std::size_t homology_dimension(const ChainComplex& c, int i);

/// Level D-i cells become level i cells; boundary maps transpose.
ChainComplex dual(const ChainComplex& c);

/// Square tessellation of the torus, L x L, periodic both axes.
ChainComplex build_toric_2d(std::size_t L);

/// Rotated (checkerboard) toric layout with L^2 qubits on lattice points;
/// even squares are 0-cells, odd squares 2-cells. L must be even.
ChainComplex build_rotated_toric(std::size_t L);

/// Hypercubic tessellation of the 4-torus, level sizes C(4,i) L^4.
ChainComplex build_toric_4d(std::size_t L);

/// L x L x (L-1) x (L-1) box with the cells inside the x in {0,L} and
/// y in {0,L} hyperplanes removed (relative complex).
ChainComplex build_tesseract(std::size_t L);

/// Refine every (square) face of a 2-complex into an l x l grid. l = 1
/// returns a copy. Throws std::invalid_argument on non-square faces or
/// degenerate edges.
ChainComplex semi_hyperbolic(const ChainComplex& base, std::size_t l);

}  // namespace hqc
