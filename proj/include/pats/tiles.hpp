#pragma once

#include <string>
#include <vector>

namespace pats {

// Colors and glue labels are opaque tokens. Glues on north/south edges live
// in the horizontal namespace, glues on east/west edges in the vertical one;
// equal tokens across namespaces never compare equal because the namespace is
// implied by the field a token is stored in.
using Color = std::string;
using Glue = std::string;

struct TileType {
    Color color;
    Glue n, e, s, w;  // n,s horizontal; e,w vertical

    bool operator==(const TileType&) const = default;
    auto operator<=>(const TileType&) const = default;
};

// L-shaped seed: north glues under row 1 (length = width), east glues left of
// column 1 (length = height, bottom to top).
struct Seed {
    std::vector<Glue> north;
    std::vector<Glue> east;

    bool operator==(const Seed&) const = default;
};

struct TileSet {
    std::vector<TileType> tiles;
    Seed seed;
};

// True iff no two tile types share the same (south, west) input pair.
bool is_directed(const TileSet& ts);

}  // namespace pats
