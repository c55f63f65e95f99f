#pragma once

#include <map>
#include <string>
#include <utility>

#include "pats/cnf.hpp"
#include "pats/pattern.hpp"
#include "pats/tiles.hpp"

namespace pats {
namespace satreduce {

// The reduction maps a 3-CNF formula F to a height-6 pattern that a tile set
// with m = |colors|+3 types can self-assemble iff F is satisfiable. The
// pattern is a row of gadget subpatterns separated by columns of unique
// colors:
//   [u][p][u][q1][u]..[q5] ([u][r1(v)][u][r2(v)][u][r3(v)] per variable)
//   ([u][s(C)] per clause) [u]
// with every gadget's bottom row on pattern row 2, so rows 1 and 6 and all
// cells not covered by a gadget are unique.

struct PatsInstance {
    Pattern pattern;
    long long m = 0;  // |colors| + 3
    Cnf3 formula;
    std::map<std::string, Color> color_atlas;  // role -> color token
};

struct SubpatternKind {
    char kind;              // 'p', 'q', 'r', 's'
    int index = 0;          // q: 1..5, r: 1..3
    Variable var;           // for r
    Clause3 clause;         // for s
};

Pattern gen_subpattern(const SubpatternKind& k);

PatsInstance build_pattern(const Cnf3& f);

// Explicit tile set (one type per color, four for the or-gate) assembling the
// reduction pattern, derived from a satisfying assignment. Glues on edges the
// gadget layouts leave unconstrained are named canonically per tile type;
// every remaining edge (unique-color outputs and the seed) is named after its
// grid coordinates.
TileSet witness_tileset(const Cnf3& f, const VarAssignment& assignment);

// Reads the assignment back out of any conforming tile set: f(v) = 1 iff the
// north glue of the tile colored lit.v equals the north glue of the tile
// colored up1.white.
VarAssignment extract_assignment(const TileSet& t, const PatsInstance& inst);

// Standalone or-gadget instance: the 16x2 or-gate subpattern framed by unique
// colors into an 18x4 pattern, plus a tile set assembling it. Exercises the
// 4-tile or color outside a full formula reduction.
std::pair<Pattern, TileSet> standalone_or_instance();

}  // namespace satreduce
}  // namespace pats
