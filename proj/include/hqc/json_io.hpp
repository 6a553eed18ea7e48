#pragma once

#include <string>

#include "hqc/code.hpp"
#include "hqc/complex.hpp"

namespace hqc {

/// Sparse artifact encoding: {dimension, levels, boundaries, qubit_level,
/// meta}; codes add h_x, h_z and logicals. Field order is fixed and entry
/// lists are sorted, so output is byte-stable for a fixed input.
std::string complex_to_json(const ChainComplex& c, int qubit_level);
std::string code_to_json(const CssCode& code, const LogicalBasis* logicals = nullptr);

ChainComplex complex_from_json(const std::string& text);

/// Rebuilds the code from the embedded complex and qubit_level; when check
/// matrices are present they must match the rebuilt ones.
CssCode code_from_json(const std::string& text);

void write_file(const std::string& path, const std::string& content);
std::string read_file(const std::string& path);

}  // namespace hqc
