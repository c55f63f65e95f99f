#include "pats/assembly.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

namespace pats {

std::string AssemblyError::message() const {
    switch (kind) {
        case Kind::NotDirected:
            return "tile set is not directed: duplicate (south,west) input pair";
        case Kind::SeedSize:
            return "seed glue lists do not match the requested rectangle";
        case Kind::NoTileFits:
            return "no tile fits at (" + std::to_string(x) + "," + std::to_string(y) +
                   ") with inputs south=" + s_glue + " west=" + w_glue;
        case Kind::ColorMismatch:
            return "color mismatch at (" + std::to_string(x) + "," + std::to_string(y) +
                   "): expected " + expected + ", assembled " + got;
    }
    return "";
}

std::variant<Assignment, AssemblyError> assemble(const TileSet& ts, int width, int height) {
    if (!is_directed(ts)) return AssemblyError{AssemblyError::Kind::NotDirected};
    if (static_cast<int>(ts.seed.north.size()) != width ||
        static_cast<int>(ts.seed.east.size()) != height)
        return AssemblyError{AssemblyError::Kind::SeedSize};

    std::map<std::pair<Glue, Glue>, int> by_input;
    for (size_t i = 0; i < ts.tiles.size(); ++i)
        by_input[{ts.tiles[i].s, ts.tiles[i].w}] = static_cast<int>(i);

    Assignment a;
    a.width = width;
    a.height = height;
    a.tileset = ts;
    a.cells.reserve(static_cast<size_t>(width) * height);
    std::vector<Glue> north = ts.seed.north;  // output glue below each column
    for (int y = 1; y <= height; ++y) {
        Glue east = ts.seed.east[y - 1];  // output glue left of current cell
        for (int x = 1; x <= width; ++x) {
            auto it = by_input.find({north[x - 1], east});
            if (it == by_input.end()) {
                AssemblyError e{AssemblyError::Kind::NoTileFits, x, y};
                e.s_glue = north[x - 1];
                e.w_glue = east;
                return e;
            }
            const TileType& t = ts.tiles[it->second];
            a.cells.push_back(it->second);
            north[x - 1] = t.n;
            east = t.e;
        }
    }
    return a;
}

Pattern pattern_of(const Assignment& a) {
    std::vector<Color> cells;
    cells.reserve(a.cells.size());
    for (int c : a.cells) cells.push_back(a.tileset.tiles[c].color);
    return Pattern::dense(a.width, a.height, std::move(cells));
}

TileSet coordinate_tileset(const Pattern& p) {
    TileSet ts;
    std::map<TileType, bool> seen;
    auto hg = [](int x, int y) { return "h@" + std::to_string(x) + "_" + std::to_string(y); };
    auto vg = [](int x, int y) { return "v@" + std::to_string(x) + "_" + std::to_string(y); };
    for (int y = 1; y <= p.height(); ++y)
        for (int x = 1; x <= p.width(); ++x) {
            TileType t{p.at(x, y), hg(x, y), vg(x, y), hg(x, y - 1), vg(x - 1, y)};
            if (!seen.emplace(t, true).second) continue;
            ts.tiles.push_back(std::move(t));
        }
    for (int x = 1; x <= p.width(); ++x) ts.seed.north.push_back(hg(x, 0));
    for (int y = 1; y <= p.height(); ++y) ts.seed.east.push_back(vg(0, y));
    return ts;
}

std::optional<AssemblyError> verify_stream(const TileSet& ts, const Pattern& p) {
    if (!is_directed(ts)) return AssemblyError{AssemblyError::Kind::NotDirected};
    if (static_cast<int>(ts.seed.north.size()) != p.width() ||
        static_cast<int>(ts.seed.east.size()) != p.height())
        return AssemblyError{AssemblyError::Kind::SeedSize};

    // Intern glues per namespace and colors against the pattern palette, then
    // drive the fill through flat integer tables: the hot loop is two array
    // loads and two stores per cell.
    std::unordered_map<Glue, int> hid, vid;
    auto intern = [](std::unordered_map<Glue, int>& m, const Glue& g) {
        return m.emplace(g, static_cast<int>(m.size())).first->second;
    };
    std::map<Color, int> pal;
    for (size_t i = 0; i < p.palette().size(); ++i) pal[p.palette()[i]] = static_cast<int>(i);

    struct Row {
        int n, e, color;
    };
    std::vector<int> seed_n, seed_e;
    for (const auto& g : ts.seed.north) seed_n.push_back(intern(hid, g));
    for (const auto& g : ts.seed.east) seed_e.push_back(intern(vid, g));
    for (const auto& t : ts.tiles) {
        intern(hid, t.n);
        intern(hid, t.s);
        intern(vid, t.e);
        intern(vid, t.w);
    }
    const int nh = static_cast<int>(hid.size()), nv = static_cast<int>(vid.size());
    std::vector<int> lookup(static_cast<size_t>(nh) * nv, -1);
    std::vector<Row> rows(ts.tiles.size());
    for (size_t i = 0; i < ts.tiles.size(); ++i) {
        const TileType& t = ts.tiles[i];
        lookup[static_cast<size_t>(hid[t.s]) * nv + vid[t.w]] = static_cast<int>(i);
        auto pc = pal.find(t.color);
        rows[i] = {hid[t.n], vid[t.e], pc == pal.end() ? -1 : pc->second};
    }

    const int w = p.width(), h = p.height();
    std::vector<int> north = seed_n;
    for (int y = 1; y <= h; ++y) {
        int east = seed_e[y - 1];
        for (int x = 1; x <= w; ++x) {
            int idx = lookup[static_cast<size_t>(north[x - 1]) * nv + east];
            if (idx < 0) {
                AssemblyError e{AssemblyError::Kind::NoTileFits, x, y};
                for (const auto& [g, id] : hid)
                    if (id == north[x - 1]) e.s_glue = g;
                for (const auto& [g, id] : vid)
                    if (id == east) e.w_glue = g;
                return e;
            }
            const Row& r = rows[idx];
            if (r.color != p.palette_index(x, y)) {
                AssemblyError e{AssemblyError::Kind::ColorMismatch, x, y};
                e.expected = p.at(x, y);
                e.got = ts.tiles[idx].color;
                return e;
            }
            north[x - 1] = r.n;
            east = r.e;
        }
    }
    return std::nullopt;
}

namespace {

// Partial pair of glue bijections (horizontal and vertical namespaces) with a
// rollback trail, extended tile by tile during the isomorphism search.
struct IsoState {
    std::map<Glue, Glue> h_ab, h_ba, v_ab, v_ba;
    std::vector<std::pair<int, Glue>> trail;  // (0=h,1=v, key in ab)

    bool bind(int ns, const Glue& a, const Glue& b) {
        auto& ab = ns ? v_ab : h_ab;
        auto& ba = ns ? v_ba : h_ba;
        auto it = ab.find(a);
        if (it != ab.end()) return it->second == b;
        auto jt = ba.find(b);
        if (jt != ba.end()) return false;
        ab[a] = b;
        ba[b] = a;
        trail.push_back({ns, a});
        return true;
    }
    size_t mark() const { return trail.size(); }
    void rollback(size_t m) {
        while (trail.size() > m) {
            auto [ns, a] = trail.back();
            trail.pop_back();
            auto& ab = ns ? v_ab : h_ab;
            auto& ba = ns ? v_ba : h_ba;
            ba.erase(ab[a]);
            ab.erase(a);
        }
    }
    bool bind_tile(const TileType& a, const TileType& b) {
        return bind(0, a.n, b.n) && bind(0, a.s, b.s) && bind(1, a.e, b.e) && bind(1, a.w, b.w);
    }
};

bool match_tiles(const std::vector<TileType>& a, const std::vector<TileType>& b, size_t i,
                 std::vector<bool>& used, IsoState& st) {
    if (i == a.size()) return true;
    for (size_t j = 0; j < b.size(); ++j) {
        if (used[j] || a[i].color != b[j].color) continue;
        size_t m = st.mark();
        if (st.bind_tile(a[i], b[j])) {
            used[j] = true;
            if (match_tiles(a, b, i + 1, used, st)) return true;
            used[j] = false;
        }
        st.rollback(m);
    }
    return false;
}

bool iso_impl(std::vector<TileType> a, std::vector<TileType> b, IsoState st) {
    if (a.size() != b.size()) return false;
    // Distinct colors must appear with equal multiplicity on both sides.
    auto census = [](const std::vector<TileType>& v) {
        std::map<Color, int> m;
        for (const auto& t : v) m[t.color]++;
        return m;
    };
    if (census(a) != census(b)) return false;
    // Match rarest colors first to cut branching.
    auto ca = census(a);
    auto key = [&](const TileType& t) { return std::pair(ca[t.color], t.color); };
    std::stable_sort(a.begin(), a.end(), [&](auto& x, auto& y) { return key(x) < key(y); });
    std::vector<bool> used(b.size(), false);
    return match_tiles(a, b, 0, used, st);
}

}  // namespace

bool glue_isomorphic(const TileSet& a, const TileSet& b, bool include_seeds) {
    IsoState st;
    if (include_seeds) {
        if (a.seed.north.size() != b.seed.north.size() || a.seed.east.size() != b.seed.east.size())
            return false;
        for (size_t i = 0; i < a.seed.north.size(); ++i)
            if (!st.bind(0, a.seed.north[i], b.seed.north[i])) return false;
        for (size_t i = 0; i < a.seed.east.size(); ++i)
            if (!st.bind(1, a.seed.east[i], b.seed.east[i])) return false;
    }
    return iso_impl(a.tiles, b.tiles, std::move(st));
}

bool tiles_isomorphic(std::vector<TileType> a, std::vector<TileType> b) {
    return iso_impl(std::move(a), std::move(b), IsoState{});
}

}  // namespace pats
