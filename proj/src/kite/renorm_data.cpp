#include "renorm_data.hpp"

namespace kite {

// Branch vertex tables for the first three layers of B-hat;
// layers 4..6 are involution images of layers 3..1.
const std::vector<std::pair<int, std::vector<std::array<i64, 6>>>> kBranchVertices = {
    {11, {{1,0,1,0,0,0}, {-7,5,6,-3,0,0}, {6,-3,-2,2,5,-3}, {-7,5,4,-2,2,-1}, {1,0,1,0,2,-1}, {-7,5,6,-3,2,-1}, {6,-3,1,0,2,-1}}},
    {12, {{9,-5,-4,3,2,-1}, {1,0,1,0,2,-1}, {9,-5,-2,2,2,-1}, {-4,3,1,0,2,-1}, {1,0,1,0,0,0}, {-4,3,3,-1,0,0}}},
    {13, {{9,-5,0,1,0,0}, {22,-13,-3,3,0,0}, {-4,3,3,-1,5,-3}, {9,-5,-10,7,10,-6}, {-25,16,11,-6,10,-6}, {-25,16,11,-6,2,-1}, {-4,3,3,-1,2,-1}, {-12,8,3,-1,2,-1}, {22,-13,-5,4,2,-1}, {9,-5,0,1,2,-1}}},
    {14, {{1,0,2,0,-3,2}, {1,0,2,0,0,0}, {-4,3,2,0,0,0}, {9,-5,0,1,2,-1}, {-4,3,0,1,2,-1}, {-12,8,5,-2,2,-1}}},
    {21, {{-7,5,4,-2,2,-1}, {1,0,1,0,2,-1}, {-7,5,6,-3,2,-1}, {-15,10,9,-5,2,-1}, {-15,10,4,-2,7,-4}, {6,-3,-1,1,-1,1}, {6,-3,-1,1,4,-2}, {1,0,1,0,4,-2}}},
    {22, {{1,0,1,0,4,-2}, {9,-5,-4,3,4,-2}, {-4,3,4,-2,-1,1}, {1,0,1,0,2,-1}, {9,-5,-4,3,2,-1}, {-4,3,1,0,2,-1}, {9,-5,-2,2,2,-1}}},
    {23, {{6,-3,-1,1,4,-2}, {-15,10,4,-2,4,-2}, {6,-3,4,-2,-1,1}, {-15,10,4,-2,7,-4}}},
    {24, {{-10,7,4,-2,4,-2}, {-15,10,4,-2,4,-2}, {6,-3,4,-2,-1,1}, {-15,10,4,-2,7,-4}, {-15,10,9,-5,2,-1}, {6,-3,1,0,2,-1}, {-10,7,6,-3,2,-1}, {-15,10,6,-3,2,-1}}},
    {31, {{6,-3,-2,2,4,-2}, {1,0,1,0,4,-2}, {1,0,1,0,1,0}, {14,-8,-4,3,1,0}, {6,-3,1,0,1,0}}},
    {32, {{1,0,1,0,1,0}, {22,-13,-12,8,9,-5}, {1,0,1,0,4,-2}, {22,-13,-7,5,4,-2}}},
    {33, {{6,-3,-1,1,9,-5}, {-7,5,4,-2,4,-2}, {-15,10,4,-2,4,-2}, {6,-3,-1,1,1,0}, {-15,10,4,-2,1,0}, {-7,5,4,-2,1,0}}},
    {34, {{-15,10,4,-2,4,-2}, {11,-6,-2,2,4,-2}, {-15,10,4,-2,1,0}, {-2,2,1,0,1,0}, {11,-6,1,0,1,0}, {-2,2,4,-2,1,0}}},
};

}  // namespace kite
