#!/usr/bin/env python3
"""Parse the appendix coordinate tables out of paper.md and emit C++ data.

Reads the P0..P42 polyhedron blocks and the B11..B34 branch blocks, each a
sequence of \\left[\\matrix{a&b\\cr c&d\\cr e&f}\\right] vertex matrices, and
writes src/kite/torus_data.cpp and src/kite/renorm_data.cpp.
"""

import re
import sys

SRC = "paper.md"
MAT = re.compile(r"\\left\[\\matrix\{(-?\d+)&(-?\d+)\\cr\s*(-?\d+)&(-?\d+)\\cr\s*(-?\d+)&(-?\d+)\}\\right\]")
NAME = re.compile(r"^(P|B)(\d+)=")

def parse_blocks(text, prefix):
    """Return {index: [ (a,b,c,d,e,f), ... ]} for blocks named prefix<k>=..."""
    out = {}
    # blocks live inside eqnarray environments; a block starts at "P<k>=" and
    # runs to the closing \end{eqnarray}
    for m in re.finditer(prefix + r"(\d+)=(.*?)\\end\{eqnarray\}", text, re.S):
        idx = int(m.group(1))
        body = m.group(2)
        verts = [tuple(int(g) for g in mm.groups()) for mm in MAT.finditer(body)]
        if idx in out:
            if out[idx] != verts:
                sys.exit(f"{prefix}{idx} duplicated with different content")
            continue  # duplicated block (P31/P32 are printed twice)
        out[idx] = verts
    return out

def main():
    text = open(SRC).read()
    polys = parse_blocks(text, "P")
    branches = parse_blocks(text, "B")
    assert sorted(polys) == list(range(43)), sorted(polys)
    expect_b = [11, 12, 13, 14, 21, 22, 23, 24, 31, 32, 33, 34]
    assert sorted(branches) == expect_b, sorted(branches)

    with open("src/kite/torus_data.cpp", "w") as f:
        f.write('#include "torus_data.hpp"\n\nnamespace kite {\n\n')
        f.write("// Vertex tables for the 43 listed exchange pieces; the other 21\n")
        f.write("// are involution images.  Each vertex is (a+b phi, c+d phi, e+f phi).\n")
        f.write("const std::vector<std::vector<std::array<i64, 6>>> kPieceVertices = {\n")
        for k in range(43):
            rows = ", ".join("{%d,%d,%d,%d,%d,%d}" % v for v in polys[k])
            f.write("    {" + rows + "},  // P%d\n" % k)
        f.write("};\n\n}  // namespace kite\n")

    with open("src/kite/renorm_data.cpp", "w") as f:
        f.write('#include "renorm_data.hpp"\n\nnamespace kite {\n\n')
        f.write("// Branch vertex tables for the first three layers of B-hat;\n")
        f.write("// layers 4..6 are involution images of layers 3..1.\n")
        f.write("const std::vector<std::pair<int, std::vector<std::array<i64, 6>>>> kBranchVertices = {\n")
        for k in expect_b:
            rows = ", ".join("{%d,%d,%d,%d,%d,%d}" % v for v in branches[k])
            f.write("    {%d, {" % k + rows + "}},\n")
        f.write("};\n\n}  // namespace kite\n")

    counts = {k: len(v) for k, v in polys.items()}
    print("pieces:", len(polys), "vertex counts:", counts)
    print("branches:", {k: len(v) for k, v in branches.items()})

if __name__ == "__main__":
    main()
