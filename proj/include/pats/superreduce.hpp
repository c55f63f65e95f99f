#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "pats/cnf.hpp"
#include "pats/pattern.hpp"
#include "pats/tiles.hpp"

namespace pats {
namespace superreduce {

// The blowup maps a pattern P whose border colors are all unique to a 3-color
// pattern Q: every cell of P becomes an LxL "supertile" (L = 5k+8, k =
// |colors of P|) whose top row and right column carry a color counter
// identifying the original color, and Q is closed off by three gadget rows at
// the top and three gadget columns at the right that pin down the counter
// tile structure. Q has (L*w+2) x (L*h+2) cells and is kept procedural.

struct MbpatsInstance {
    Pattern q;  // procedural, colors {black, gray, white}
    long long m_b = 0, m_w = 0, m_g = 0;
    long long ell = 0;
    int w_p = 0, h_p = 0;
    int k = 0;
    std::vector<int> color_idx;            // P's palette index + 1, row-major from (1,1)
    std::vector<Color> source_palette;     // P's palette; may be empty when
                                           // loaded from a descriptor without one
};

struct Bounds {
    long long m_b, m_w, m_g, ell;
};

// Border colors of P (rows 1 and h, columns 1 and w) must be unique in P; the
// white bound must be positive. strict_formula, when given, additionally
// regenerates the reduction pattern from the formula and compares cell by cell.
void validate_source(const Pattern& p, const Cnf3* strict_formula = nullptr);

Bounds bounds(const Pattern& p);

// One LxL supertile portraying color c of [k]; trimming drops the white
// bottom row / left column for supertiles on P's border.
Pattern supertile_pattern(int c, int k, bool has_bottom_row, bool has_left_column);

struct SupertileView {
    int bx = 0, by = 0;
    bool has_bottom_row = true, has_left_column = true;
    Pattern cells;
};

// Reads the color back off the counters (white cell positions in the top row
// and right column); throws MalformedSupertile when the two disagree.
int portrayed_color(const SupertileView& view);

MbpatsInstance build_q(const Pattern& p);

// Replaces the north glue of tiles whose color sits on P's top row, and the
// east glue of tiles on P's right column, with the blowup's black-edge glue.
// Outputs across the top/right border are never matched against anything, so
// this is sound for any tile set assembling P, and the blowup needs it so its
// gadget rows can attach.
TileSet normalize_border(const TileSet& t, const Pattern& p);

// The explicit 3-color tile set assembling Q, built from a tile set T that
// assembles P: one black tile, 2k+3 gray tiles, and per tile of T the white
// supertile-role tiles (border/control), sharing roles between tiles of one
// color where the glue keys coincide.
TileSet witness_theta(const TileSet& t, const Pattern& p);

// Streams the assembly of Q, captures each supertile's interface glues, and
// emits one tile per distinct supertile; the result assembles P.
TileSet decode_supertiles(const TileSet& theta, const MbpatsInstance& inst);

// Procedural descriptor: `qdesc <ell> <wP> <hP>`, the w*h color indices
// row-major from (1,1), and an optional `palette <tok>...` trailer.
void write_qdesc(std::ostream& os, const MbpatsInstance& inst);
MbpatsInstance read_qdesc(std::istream& is);
MbpatsInstance load_qdesc(const std::string& path);
void save_qdesc(const std::string& path, const MbpatsInstance& inst);

}  // namespace superreduce
}  // namespace pats
