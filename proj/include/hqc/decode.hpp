#pragma once

#include <array>
#include <cstdint>
#include <random>
#include <vector>

#include "hqc/code.hpp"
#include "hqc/graph.hpp"

namespace hqc {

enum class Outcome { success, logical_failure, stuck_failure };

struct DecodeOutcome {
    Outcome classification = Outcome::success;
    BitVector correction;
    std::size_t sweeps = 0;
};

/// Check-bit vectors per round: round 0 is the fictitious perfect start,
/// rounds 1..T are measured, round T+1 is the true final syndrome.
struct SpacetimeSyndrome {
    std::size_t T = 0;
    std::vector<BitVector> rounds;  // T+2 entries
};

/// MWPM decoding on a fixed 2D code; precomputes the matching graphs for
/// both error types once.
class MatchingDecoder2D {
public:
    explicit MatchingDecoder2D(const CssCode& code);

    /// Minimum-weight correction with the given syndrome. Throws
    /// std::invalid_argument when the syndrome is not a valid boundary.
    BitVector decode(const BitVector& syndrome, Pauli side) const;

    /// Space-time decoding: matching over syndrome differences in the
    /// (T+1)-layer graph, horizontal and vertical edges both weight 1.
    /// Returns the final correction projected onto the last time slice.
    BitVector decode_noisy(const SpacetimeSyndrome& st, Pauli side) const;

    const CssCode& code() const { return *code_; }

private:
    const EdgeGraph& graph(Pauli side) const { return side == Pauli::Z ? gz_ : gx_; }

    std::shared_ptr<const CssCode> code_;
    EdgeGraph gz_, gx_;  // Z errors match on X-checks, X errors on Z-checks
};

BitVector mwpm_decode_2d(const CssCode& code, const BitVector& syndrome, Pauli side);

/// Classifies a zero-syndrome residual (error + correction).
DecodeOutcome classify_residual(const CssCode& code, const BitVector& residual, Pauli side);

/// Index tables of the 4D hypercubic torus, matching the builder's cell
/// order: edge (d, v), face ({d1,d2}, v) with plane groups in the order
/// xy, xz, xw, yz, yw, zw.
struct Toric4dGeometry {
    std::size_t L = 0, n4 = 0;
    std::size_t num_faces = 0, num_edges = 0;
    std::vector<std::array<std::uint32_t, 4>> face_edges;
    std::vector<std::array<std::uint32_t, 2>> face_ne;  // edges at the largest-coordinate vertex
    std::vector<std::uint8_t> face_color;               // update phase within a plane group
    int num_colors = 0;

    explicit Toric4dGeometry(std::size_t L);

    BitVector syndrome_of(const BitVector& error) const;
    void flip_face(std::size_t f, BitVector& error, BitVector& syndrome) const;
};

/// Error bits on faces with the maintained perfect syndrome on edges.
struct CaGrid4D {
    BitVector error;
    BitVector syndrome;
    explicit CaGrid4D(const Toric4dGeometry& g)
        : error(g.num_faces), syndrome(g.num_edges) {}
};

/// One full sweep of Toom's NE rule over the six plane groups in order;
/// faces within a group update in parallel, the syndrome is recomputed
/// between groups. noise, when non-null, is XORed onto the syndrome reads.
void toom_sweep(const Toric4dGeometry& g, CaGrid4D& grid, const BitVector* noise = nullptr);

/// One full sweep of the majority-vote rule; ties flip with probability
/// 1/2. Faces update in parallel within independent (non-edge-sharing)
/// phases of each plane group.
void dklp_sweep(const Toric4dGeometry& g, CaGrid4D& grid, std::mt19937_64& rng,
                const BitVector* noise = nullptr);

enum class CaRule { toom, dklp };

/// Runs the rule with perfect syndrome until the syndrome clears (success
/// or logical failure) or the syndrome weight stops improving for v_max
/// consecutive sweeps (stuck failure).
DecodeOutcome verify_correctable(const CssCode& code, const Toric4dGeometry& g,
                                 const CaGrid4D& grid, CaRule rule, std::mt19937_64& rng,
                                 std::size_t v_max);

/// Projects a measured 4D edge syndrome onto the closest valid one by
/// matching the endpoints of broken strings.
BitVector repair_syndrome_4d(const CssCode& code, const BitVector& measured);

}  // namespace hqc
