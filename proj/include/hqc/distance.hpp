#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "hqc/code.hpp"

namespace hqc {

struct DistanceResult {
    std::size_t d = 0;
    std::optional<BitVector> witness;  // a minimum-weight logical support
};

/// Minimum weight of a Z-type logical operator of a code on a 2-complex
/// (qubits on edges): shortest cycle through the support of any X logical,
/// found on the doubled graph. Throws std::runtime_error when k = 0.
DistanceResult z_distance(const CssCode& code, const LogicalBasis& logicals,
                          bool want_witness = true);

/// Same on the dual graph, giving the minimum X-type logical weight.
DistanceResult x_distance(const CssCode& code, const LogicalBasis& logicals,
                          bool want_witness = true);

struct MinWeightCount {
    std::size_t d = 0;
    std::size_t count = 0;  // distinct minimum-weight logical supports
};

/// Enumerates all distinct minimum-weight logicals of the given type via
/// shortest-path expansion, deduplicated by support. Throws
/// std::runtime_error when more than `cap` operators accumulate.
MinWeightCount count_min_weight_logicals(const CssCode& code, const LogicalBasis& logicals,
                                         Pauli side, std::size_t cap = 1000000);

/// Exhaustive distance oracle: smallest weight w <= w_max admitting a
/// zero-syndrome logically nontrivial support, or nullopt. Refuses when the
/// subset count up to w_max exceeds 10^8.
std::optional<std::size_t> brute_force_distance(const CssCode& code, Pauli side,
                                                std::size_t w_max);

}  // namespace hqc
