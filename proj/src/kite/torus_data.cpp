#include "torus_data.hpp"

namespace kite {

// Vertex tables for the 43 listed exchange pieces; the other 21
// are involution images.  Each vertex is (a+b phi, c+d phi, e+f phi).
const std::vector<std::vector<std::array<i64, 6>>> kPieceVertices = {
    {{3,-1,0,1,2,-1}, {-3,3,2,0,2,-1}, {0,1,2,0,2,0}, {1,0,1,0,2,0}, {3,-1,0,0,2,0}, {0,1,0,0,2,0}, {-3,3,2,-1,2,0}, {-1,2,2,0,2,0}, {0,1,2,0,0,0}},  // P0
    {{-1,1,2,0,2,-1}, {5,-3,0,1,2,-1}, {2,-1,0,0,2,0}, {1,0,1,0,2,0}, {-1,1,2,0,2,0}, {2,-1,2,0,2,0}, {5,-3,0,1,2,0}, {3,-2,0,0,2,0}, {2,-1,2,0,0,0}},  // P1
    {{3,-1,0,0,0,1}, {-3,3,2,-1,0,1}, {0,1,0,0,2,0}, {0,1,2,0,0,0}, {1,0,1,0,0,0}, {3,-1,0,0,0,0}, {0,1,0,0,0,0}, {-3,3,2,-1,0,0}, {-1,2,2,0,0,0}},  // P2
    {{-1,1,2,-1,0,1}, {5,-3,0,0,0,1}, {2,-1,0,0,2,0}, {2,-1,0,0,0,0}, {1,0,1,0,0,0}, {-1,1,2,0,0,0}, {2,-1,2,0,0,0}, {5,-3,0,1,0,0}, {3,-2,0,0,0,0}},  // P3
    {{1,0,0,0,1,0}, {6,-3,-1,1,0,0}, {1,0,0,0,0,0}, {2,-1,0,0,0,0}, {1,0,1,0,0,0}},  // P4
    {{1,0,2,0,1,0}, {-4,3,3,-1,2,0}, {1,0,2,0,2,0}, {0,1,2,0,2,0}, {1,0,1,0,2,0}},  // P5
    {{1,0,1,0,1,0}, {-4,3,3,-1,0,0}, {1,0,2,0,0,0}, {0,1,2,0,0,0}, {1,0,1,0,0,0}},  // P6
    {{1,0,1,0,1,0}, {6,-3,-1,1,2,0}, {1,0,0,0,2,0}, {2,-1,0,0,2,0}, {1,0,1,0,2,0}},  // P7
    {{6,-3,2,0,-1,1}, {-4,3,3,-1,-1,1}, {1,0,1,0,1,0}, {1,0,2,0,1,0}, {6,-3,-2,2,3,-1}, {-4,3,3,-1,3,-1}, {1,0,1,0,2,0}, {1,0,2,0,0,0}},  // P8
    {{-4,3,4,-2,-1,1}, {6,-3,-1,1,-1,1}, {1,0,0,0,1,0}, {1,0,1,0,1,0}, {6,-3,-1,1,3,-1}, {-4,3,0,0,3,-1}, {1,0,0,0,2,0}, {1,0,1,0,0,0}},  // P9
    {{6,-3,0,0,-1,1}, {1,0,0,0,0,0}, {6,-3,0,0,0,0}, {11,-6,-3,2,0,0}, {6,-3,-1,1,0,0}},  // P10
    {{-4,3,3,-1,-1,1}, {1,0,2,0,0,0}, {-4,3,2,0,0,0}, {-9,6,5,-2,0,0}, {-4,3,3,-1,0,0}},  // P11
    {{11,-6,0,0,-3,2}, {6,-3,0,0,0,0}, {11,-6,-3,2,0,0}, {3,-1,0,0,0,0}},  // P12
    {{-9,6,5,-2,-3,2}, {-4,3,2,0,0,0}, {-9,6,5,-2,0,0}, {-1,1,2,0,0,0}},  // P13
    {{5,-2,0,0,-3,2}, {0,1,0,0,0,0}, {-3,3,2,-1,0,0}, {5,-2,0,0,0,0}},  // P14
    {{-3,2,5,-2,-3,2}, {2,-1,2,0,0,0}, {5,-3,0,1,0,0}, {-3,2,2,0,0,0}},  // P15
    {{1,0,0,0,2,0}, {6,-3,0,0,2,0}, {11,-6,-3,2,2,0}, {6,-3,-1,1,2,0}, {6,-3,-1,1,3,-1}},  // P16
    {{1,0,2,0,2,0}, {-4,3,2,0,2,0}, {-9,6,5,-2,2,0}, {-4,3,3,-1,2,0}, {-4,3,2,0,3,-1}},  // P17
    {{6,-3,0,0,2,0}, {11,-6,-3,2,2,0}, {3,-1,0,0,2,0}, {11,-6,-3,2,5,-2}},  // P18
    {{-4,3,2,0,2,0}, {-9,6,5,-2,2,0}, {-1,1,2,0,2,0}, {-9,6,2,0,5,-2}},  // P19
    {{0,1,0,0,2,0}, {-3,3,2,-1,2,0}, {5,-2,0,0,2,0}, {5,-2,-3,2,5,-2}},  // P20
    {{2,-1,2,0,2,0}, {5,-3,0,1,2,0}, {-3,2,2,0,2,0}, {-3,2,2,0,5,-2}},  // P21
    {{-4,3,3,-1,-1,1}, {1,0,1,0,1,0}, {1,0,2,0,0,0}, {-4,3,3,-1,0,0}},  // P22
    {{5,-3,0,1,2,-1}, {3,-2,0,0,1,0}, {3,-2,0,0,2,0}, {2,-1,0,0,2,0}, {2,-1,2,0,0,0}, {5,-3,0,1,0,0}},  // P23
    {{3,-1,0,1,2,-1}, {-5,4,0,0,5,-2}, {3,-1,0,0,2,0}, {0,1,0,0,2,0}, {-5,4,5,-2,0,0}, {0,1,2,0,0,0}},  // P24
    {{-1,1,0,0,2,-1}, {1,0,1,0,1,0}, {1,0,0,0,2,0}, {2,-1,0,0,2,0}, {2,-1,0,0,0,0}, {-1,1,2,-1,0,0}},  // P25
    {{3,-1,0,0,2,-1}, {11,-6,-3,2,5,-2}, {3,-1,0,0,2,0}, {6,-3,0,0,2,0}, {11,-6,-3,2,0,0}, {6,-3,0,0,0,0}},  // P26
    {{8,-5,0,0,-1,1}, {3,-2,0,0,1,0}, {3,-2,0,0,0,0}, {8,-5,-1,1,0,0}},  // P27
    {{5,-2,-3,2,5,-2}, {5,-2,0,0,2,0}, {0,1,0,0,2,0}, {0,1,0,0,3,-1}},  // P28
    {{1,0,0,0,5,-2}, {1,0,0,0,2,0}, {6,-3,0,0,2,0}, {6,-3,-1,1,3,-1}},  // P29
    {{-9,6,7,-4,-3,2}, {-1,1,0,0,2,-1}, {-4,3,0,0,4,-2}, {-9,6,0,0,4,-2}, {-1,1,2,-1,0,0}, {-4,3,4,-2,0,0}},  // P30
    {{5,-2,0,0,-3,2}, {-3,3,2,-1,2,-1}, {0,1,0,0,4,-2}, {5,-2,0,0,4,-2}, {-3,3,2,-1,0,0}, {0,1,0,0,0,0}},  // P31
    {{-7,5,6,-3,0,1}, {3,-1,0,0,0,1}, {1,0,1,0,5,-2}, {-5,4,0,0,5,-2}, {-7,5,4,-2,2,0}, {3,-1,0,0,2,0}, {1,0,1,0,0,0}, {-5,4,5,-2,0,0}},  // P32
    {{1,0,1,0,5,-2}, {1,0,1,0,2,0}, {-7,5,4,-2,2,0}, {-7,5,6,-3,0,1}},  // P33
    {{-9,6,7,-4,-3,2}, {-4,3,4,-2,-1,1}, {-4,3,0,0,4,-2}, {-9,6,0,0,4,-2}, {1,0,0,0,1,0}, {-4,3,0,0,3,-1}, {1,0,1,0,0,0}, {-4,3,4,-2,0,0}},  // P34
    {{5,-2,0,0,4,-2}, {0,1,0,0,4,-2}, {0,1,0,0,3,-1}, {-3,3,2,-1,2,0}, {5,-2,0,0,2,0}, {-3,3,2,-1,2,-1}},  // P35
    {{-9,6,2,0,5,-2}, {-9,6,5,-2,2,0}, {-1,1,2,0,2,0}, {-1,1,2,0,0,1}},  // P36
    {{1,0,2,0,-3,2}, {-4,3,3,-1,-1,1}, {-4,3,2,0,4,-2}, {1,0,2,0,4,-2}, {-9,6,5,-2,1,0}, {-4,3,3,-1,3,-1}, {-9,6,5,-2,0,0}, {-4,3,2,0,0,0}},  // P37
    {{-4,3,2,0,3,-1}, {-9,6,5,-2,2,0}, {-4,3,3,-1,2,0}, {-9,6,5,-2,1,0}},  // P38
    {{-4,3,3,-1,3,-1}, {-4,3,3,-1,2,0}, {1,0,1,0,2,0}, {1,0,2,0,1,0}},  // P39
    {{-11,8,2,0,4,-2}, {-6,5,2,0,4,-2}, {-6,5,3,-1,3,-1}, {-3,3,2,-1,2,0}, {-11,8,4,-2,2,0}, {-3,3,2,0,2,-1}},  // P40
    {{-1,2,2,0,1,0}, {-6,5,2,0,3,-1}, {-6,5,3,-1,3,-1}, {-11,8,4,-2,2,0}, {-6,5,3,-1,2,0}, {-11,8,2,0,4,-2}, {-6,5,2,0,4,-2}},  // P41
    {{-9,6,5,-2,1,0}, {-4,3,3,-1,3,-1}, {-4,3,2,0,3,-1}, {1,0,2,0,2,0}, {-4,3,3,-1,2,0}, {1,0,2,0,4,-2}, {-4,3,2,0,4,-2}},  // P42
};

}  // namespace kite
