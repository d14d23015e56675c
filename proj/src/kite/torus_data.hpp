#pragma once

#include <array>
#include <vector>

#include "golden.hpp"

namespace kite {
// P0..P42 as printed in the appendix; vertex (a+b phi, c+d phi, e+f phi).
extern const std::vector<std::vector<std::array<i64, 6>>> kPieceVertices;
}  // namespace kite
