#pragma once

#include <array>
#include <utility>
#include <vector>

#include "golden.hpp"

namespace kite {
// (jk, vertices) for branches B11..B34 of the first three layers.
extern const std::vector<std::pair<int, std::vector<std::array<i64, 6>>>> kBranchVertices;
}  // namespace kite
