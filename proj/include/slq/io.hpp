#pragma once

#include <string>
#include <vector>

#include "slq/group.hpp"
#include "slq/growth.hpp"

namespace slq {

/// Generator-set file: {"d": 2, "generators": [[[1,2],[0,1]], ...],
/// "symmetrize": true}; matrices are row-major integer arrays. With
/// "symmetrize" true the inverses are appended and deduplicated.
GeneratorSet load_generator_set(const std::string& path);
GeneratorSet parse_generator_set(const std::string& json_text);

/// Subset files are sorted JSON arrays of element indices.
std::vector<u32> load_subset_indices(const std::string& path);
void save_subset_indices(const std::string& path, const std::vector<u32>& idx);

/// Deterministic float rendering used for all emitted numbers.
std::string fmt_double(double x);
std::string fmt_rational(const Rational& r);

}  // namespace slq
