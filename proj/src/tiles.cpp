#include "pats/tiles.hpp"

#include <set>
#include <utility>

namespace pats {

bool is_directed(const TileSet& ts) {
    std::set<std::pair<Glue, Glue>> seen;
    for (const auto& t : ts.tiles)
        if (!seen.insert({t.s, t.w}).second) return false;
    return true;
}

}  // namespace pats
