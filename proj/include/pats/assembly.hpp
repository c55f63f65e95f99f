#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "pats/pattern.hpp"
#include "pats/tiles.hpp"

namespace pats {

struct AssemblyError {
    enum class Kind { NotDirected, SeedSize, NoTileFits, ColorMismatch };
    Kind kind;
    int x = 0, y = 0;          // failing position (1-based) where applicable
    Glue s_glue, w_glue;       // required inputs for NoTileFits
    Color expected, got;       // for ColorMismatch
    std::string message() const;
};

// A complete tile assignment of a directed tile set on a w x h rectangle.
struct Assignment {
    int width = 0, height = 0;
    TileSet tileset;
    std::vector<int> cells;  // tile indices, row-major from (1,1)

    const TileType& tile(int x, int y) const {
        return tileset.tiles[cells[static_cast<size_t>(y - 1) * width + (x - 1)]];
    }
};

// Deterministic row-major fill: each cell takes the unique tile whose (s,w)
// inputs match the outputs of its south/west neighbors (seed glues on the
// borders). Materializes the assignment; use verify_stream for large grids.
std::variant<Assignment, AssemblyError> assemble(const TileSet& ts, int width, int height);

// Equivalent to pattern_of(assemble(ts, p.width, p.height)) == p, but keeps
// only one row of output glues (O(width) memory) and never materializes the
// assignment.
std::optional<AssemblyError> verify_stream(const TileSet& ts, const Pattern& p);

Pattern pattern_of(const Assignment& a);

// One tile per cell with coordinate-named glues; always assembles p (with
// |area| tiles, so nothing minimal about it). Handy as a known-good tile set
// for patterns whose cells are all distinct colors.
TileSet coordinate_tileset(const Pattern& p);

// True iff some bijection on horizontal glues together with some bijection on
// vertical glues maps a's tiles (and seeds, when include_seeds) onto b's.
bool glue_isomorphic(const TileSet& a, const TileSet& b, bool include_seeds);

// Multiset variant used for comparing induced sub-assignment tile multisets.
bool tiles_isomorphic(std::vector<TileType> a, std::vector<TileType> b);

}  // namespace pats
