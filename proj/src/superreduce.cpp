#include "pats/superreduce.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <memory>
#include <set>
#include <sstream>
#include <unordered_map>

#include "pats/assembly.hpp"
#include "pats/errors.hpp"
#include "pats/satreduce.hpp"
#include "pats/textio.hpp"

namespace pats {
namespace superreduce {

namespace {

constexpr int kBlack = 0, kGray = 1, kWhite = 2;
const std::vector<Color> kPalette = {"black", "gray", "white"};

std::string ctok(long long i) { return std::to_string(i); }
std::string pair_glue(const Glue& g, int c) { return "pair(" + g + "," + ctok(c) + ")"; }
// Glues of the source tile set, renamed apart from the blowup's own glue
// alphabet. The black-edge glue maps to itself: border normalization makes it
// a genuine source glue, and the gadget rows rely on meeting it there.
Glue map_glue(const Glue& g) { return g == "bul" ? g : "t." + g; }

// Local color of one supertile cell, 1-based true local coordinates in
// [1,ell]^2; c is the portrayed color.
int supertile_cell(int lx, int ly, int c, long long ell) {
    if (ly == 1) return kWhite;  // A, B1, C1
    if (lx == 1) return kWhite;  // B2, C2
    if (lx == ell) return ly == c + 2 ? kWhite : kGray;  // counter, D1, F1, G
    if (ly == ell) return lx == c + 2 ? kWhite : kGray;  // counter, D2, F2
    return kBlack;
}

struct QGeometry {
    long long ell;
    int wp, hp, k;
    std::vector<int> cidx;  // 1..k, row-major
    long long wq() const { return ell * wp + 2; }
    long long hq() const { return ell * hp + 2; }

    int color_at(long long x, long long y) const {
        long long gx = x - ell * wp, gy = y - ell * hp;  // >= 0 means gadget band
        if (gx >= 0 && gy >= 0) return (gx == 1 || gy == 1) ? kGray : kBlack;
        if (gx >= 0) {
            long long ly = y % ell + 1;
            if (gx != 1) return ly == ell ? kGray : kBlack;
            return y == k + 1 ? kWhite : kGray;
        }
        if (gy >= 0) {
            long long lx = x % ell + 1;
            if (gy != 1) return lx == ell ? kGray : kBlack;
            return x == k + 1 ? kWhite : kGray;
        }
        int bx = static_cast<int>(x / ell) + 1, by = static_cast<int>(y / ell) + 1;
        int lx = static_cast<int>(x % ell) + 1, ly = static_cast<int>(y % ell) + 1;
        return supertile_cell(lx, ly, cidx[static_cast<size_t>(by - 1) * wp + bx - 1],
                              static_cast<int>(ell));
    }
};

MbpatsInstance make_instance(QGeometry g, std::vector<Color> palette) {
    MbpatsInstance inst;
    inst.ell = g.ell;
    inst.w_p = g.wp;
    inst.h_p = g.hp;
    inst.k = g.k;
    inst.color_idx = g.cidx;
    inst.source_palette = std::move(palette);
    inst.m_b = 1;
    inst.m_w = 5LL * g.k - 3LL * (g.wp + g.hp) + 14;
    inst.m_g = 2LL * g.k + 3;
    auto geo = std::make_shared<QGeometry>(std::move(g));
    inst.q = Pattern::procedural(
        static_cast<int>(geo->wq()), static_cast<int>(geo->hq()), kPalette,
        [geo](int x, int y) { return geo->color_at(x, y); });
    return inst;
}

std::vector<int> palette_indices(const Pattern& p) {
    std::vector<int> cidx;
    cidx.reserve(p.area());
    for (int y = 1; y <= p.height(); ++y)
        for (int x = 1; x <= p.width(); ++x) cidx.push_back(p.palette_index(x, y) + 1);
    return cidx;
}

}  // namespace

void validate_source(const Pattern& p, const Cnf3* strict_formula) {
    Census c = color_census(p);
    auto check = [&](int x, int y, const char* where) {
        if (!c.unique_colors.count(p.at(x, y)))
            throw Error(Errc::Precondition, std::string("color at ") + where +
                                                " border is not unique: " + p.at(x, y));
    };
    for (int x = 1; x <= p.width(); ++x) {
        check(x, 1, "south");
        check(x, p.height(), "north");
    }
    for (int y = 1; y <= p.height(); ++y) {
        check(1, y, "west");
        check(p.width(), y, "east");
    }
    long long k = static_cast<long long>(c.counts.size());
    if (5 * k - 3LL * (p.width() + p.height()) + 14 <= 0)
        throw Error(Errc::Precondition, "white tile bound is not positive");
    if (strict_formula) {
        auto inst = satreduce::build_pattern(*strict_formula);
        if (!(inst.pattern == p))
            throw Error(Errc::Precondition, "pattern is not the reduction of the given formula");
    }
}

Bounds bounds(const Pattern& p) {
    validate_source(p);
    long long k = static_cast<long long>(p.palette().size());
    return {1, 5 * k - 3LL * (p.width() + p.height()) + 14, 2 * k + 3, 5 * k + 8};
}

Pattern supertile_pattern(int c, int k, bool has_bottom_row, bool has_left_column) {
    if (c < 1 || c > k) throw Error(Errc::Range, "portrayed color out of range");
    int ell = 5 * k + 8;
    int x0 = has_left_column ? 1 : 2, y0 = has_bottom_row ? 1 : 2;
    std::vector<Color> cells;
    for (int ly = y0; ly <= ell; ++ly)
        for (int lx = x0; lx <= ell; ++lx)
            cells.push_back(kPalette[supertile_cell(lx, ly, c, ell)]);
    return Pattern::dense(ell - x0 + 1, ell - y0 + 1, std::move(cells));
}

int portrayed_color(const SupertileView& view) {
    const Pattern& p = view.cells;
    int xoff = view.has_left_column ? 0 : 1, yoff = view.has_bottom_row ? 0 : 1;
    int from_top = -1, from_right = -1;
    // Scan between the white C2/C1 corner and the gray G corner.
    for (int x = (view.has_left_column ? 2 : 1); x < p.width(); ++x)
        if (p.at(x, p.height()) == "white") {
            if (from_top != -1) throw Error(Errc::MalformedSupertile, "two whites in top row");
            from_top = x + xoff - 2;
        }
    for (int y = (view.has_bottom_row ? 2 : 1); y < p.height(); ++y)
        if (p.at(p.width(), y) == "white") {
            if (from_right != -1)
                throw Error(Errc::MalformedSupertile, "two whites in right column");
            from_right = y + yoff - 2;
        }
    if (from_top < 1 || from_top != from_right)
        throw Error(Errc::MalformedSupertile,
                    "counters disagree: top says " + std::to_string(from_top) +
                        ", right says " + std::to_string(from_right));
    return from_top;
}

MbpatsInstance build_q(const Pattern& p) {
    validate_source(p);
    QGeometry g;
    g.k = static_cast<int>(p.palette().size());
    g.ell = 5LL * g.k + 8;
    g.wp = p.width();
    g.hp = p.height();
    g.cidx = palette_indices(p);
    return make_instance(std::move(g), p.palette());
}

TileSet normalize_border(const TileSet& t, const Pattern& p) {
    std::set<Color> top, right;
    for (int x = 1; x <= p.width(); ++x) top.insert(p.at(x, p.height()));
    for (int y = 1; y <= p.height(); ++y) right.insert(p.at(p.width(), y));
    TileSet out = t;
    for (auto& tile : out.tiles) {
        if (top.count(tile.color)) tile.n = "bul";
        if (right.count(tile.color)) tile.e = "bul";
    }
    return out;
}

TileSet witness_theta(const TileSet& t, const Pattern& p) {
    if (auto err = verify_stream(t, p))
        throw Error(Errc::Precondition, "tile set does not assemble the source pattern: " +
                                            err->message());
    validate_source(p);
    const int k = static_cast<int>(p.palette().size());
    const long long ell = 5LL * k + 8;
    TileSet n = normalize_border(t, p);

    std::map<Color, std::vector<const TileType*>> by_color;
    for (const auto& tile : n.tiles) by_color[tile.color].push_back(&tile);
    for (const auto& [col, tiles] : by_color)
        if (tiles.size() != 1 && tiles.size() != 4)
            throw Error(Errc::Structure,
                        "color " + col + " has " + std::to_string(tiles.size()) +
                            " tile types; expected 1, or 4 for an or-gate color");

    std::set<Color> row1, col1;
    for (int x = 1; x <= p.width(); ++x) row1.insert(p.at(x, 1));
    for (int y = 1; y <= p.height(); ++y) col1.insert(p.at(1, y));

    TileSet theta;
    auto add = [&](Color c, Glue gn, Glue ge, Glue gs, Glue gw) {
        theta.tiles.push_back({std::move(c), std::move(gn), std::move(ge), std::move(gs),
                               std::move(gw)});
    };
    add("black", "bul", "bul", "bul", "bul");
    for (int i = 1; i <= k; ++i) add("gray", ctok(i - 1), "bul", ctok(i), "bul");  // vertical
    for (int i = 1; i <= k; ++i) add("gray", "bul", ctok(i - 1), "bul", ctok(i));  // horizontal
    add("gray", "dia", "bul", "dia", "bul");   // F1
    add("gray", "bul", "dia", "bul", "dia");   // F2
    add("gray", "dia", "dia", "dia", "dia");   // G
    add("white", "dia", "bul", "0", "bul");    // D1
    add("white", "bul", "dia", "bul", "0");    // D2

    for (int ci = 0; ci < k; ++ci) {
        const Color& col = p.palette()[ci];
        int c = ci + 1;
        auto it = by_color.find(col);
        if (it == by_color.end())
            throw Error(Errc::Structure, "no tile type for color " + col);
        bool in_row1 = row1.count(col) > 0, in_col1 = col1.count(col) > 0;
        if (!in_row1 && !in_col1)
            for (const TileType* tt : it->second)
                add("white", pair_glue(tt->n, c), pair_glue(tt->e, c), map_glue(tt->s),
                    map_glue(tt->w));
        std::vector<Glue> norths, easts;  // distinct, first-appearance order
        for (const TileType* tt : it->second) {
            if (std::find(norths.begin(), norths.end(), tt->n) == norths.end())
                norths.push_back(tt->n);
            if (std::find(easts.begin(), easts.end(), tt->e) == easts.end())
                easts.push_back(tt->e);
        }
        if (!in_col1)
            for (const Glue& gn : norths) {
                add("white", pair_glue(gn, c), "bul", pair_glue(gn, c), "bul");        // B2
                add("white", map_glue(gn), ctok(c), pair_glue(gn, c), "dia");          // C2
            }
        if (!in_row1)
            for (const Glue& ge : easts) {
                add("white", "bul", pair_glue(ge, c), "bul", pair_glue(ge, c));        // B1
                add("white", ctok(c), map_glue(ge), "dia", pair_glue(ge, c));          // C1
            }
    }

    // Seed: bul everywhere except the counter starts (color counters under
    // lx = ell columns / left of ly = ell rows and the gadget middle band) and
    // the supertile interface glues under bottom-border B2 columns / left of
    // left-border B1 rows.
    auto tile_of = [&](int x, int y) -> const TileType& {
        const auto& v = by_color.at(p.at(x, y));
        if (v.size() != 1)
            throw Error(Errc::Structure, "border color " + p.at(x, y) + " has several tiles");
        return *v.front();
    };
    auto cidx_of = [&](int x, int y) { return p.palette_index(x, y) + 1; };
    const long long wq = ell * p.width() + 2, hq = ell * p.height() + 2;
    theta.seed.north.assign(wq, "bul");
    theta.seed.east.assign(hq, "bul");
    for (int b = 1; b <= p.width(); ++b) {
        theta.seed.north[b * ell - 1 - 1] = ctok(cidx_of(b, 1));
        if (b >= 2) theta.seed.north[(b - 1) * ell - 1] = pair_glue(tile_of(b, 1).n, cidx_of(b, 1));
    }
    theta.seed.north[ell * p.width() + 1 - 1] = ctok(k);
    for (int b = 1; b <= p.height(); ++b) {
        theta.seed.east[b * ell - 1 - 1] = ctok(cidx_of(1, b));
        if (b >= 2) theta.seed.east[(b - 1) * ell - 1] = pair_glue(tile_of(1, b).e, cidx_of(1, b));
    }
    theta.seed.east[ell * p.height() + 1 - 1] = ctok(k);

    if (!is_directed(theta))
        throw Error(Errc::Structure, "blowup tile set is not directed for this input");
    return theta;
}

TileSet decode_supertiles(const TileSet& theta, const MbpatsInstance& inst) {
    if (!is_directed(theta)) throw Error(Errc::Precondition, "tile set is not directed");
    const long long ell = inst.ell;
    const int wp = inst.w_p, hp = inst.h_p;
    const long long wq = inst.q.width(), hq = inst.q.height();
    if (static_cast<long long>(theta.seed.north.size()) != wq ||
        static_cast<long long>(theta.seed.east.size()) != hq)
        throw Error(Errc::Precondition, "seed does not match the blowup dimensions");

    // Interned single-pass assembly of Q (verifying colors as we go), with
    // interface capture at each supertile's control/corner positions.
    std::unordered_map<Glue, int> hid, vid;
    std::vector<Glue> htok, vtok;
    auto intern = [](std::unordered_map<Glue, int>& m, std::vector<Glue>& toks, const Glue& g) {
        auto [it, fresh] = m.emplace(g, static_cast<int>(m.size()));
        if (fresh) toks.push_back(g);
        return it->second;
    };
    for (const auto& g : theta.seed.north) intern(hid, htok, g);
    for (const auto& g : theta.seed.east) intern(vid, vtok, g);
    for (const auto& tile : theta.tiles) {
        intern(hid, htok, tile.n);
        intern(hid, htok, tile.s);
        intern(vid, vtok, tile.e);
        intern(vid, vtok, tile.w);
    }
    const size_t nv = vid.size();
    std::vector<int> lookup(hid.size() * nv, -1);
    struct Out {
        int n, e, color;
    };
    std::vector<Out> outs(theta.tiles.size());
    std::map<Color, int> pal;
    for (size_t i = 0; i < kPalette.size(); ++i) pal[kPalette[i]] = static_cast<int>(i);
    for (size_t i = 0; i < theta.tiles.size(); ++i) {
        const TileType& tile = theta.tiles[i];
        lookup[static_cast<size_t>(hid[tile.s]) * nv + vid[tile.w]] = static_cast<int>(i);
        auto pc = pal.find(tile.color);
        outs[i] = {hid[tile.n], vid[tile.e], pc == pal.end() ? -1 : pc->second};
    }

    struct Block {
        int a_s = -1, a_w = -1;  // control tile inputs (complete supertiles)
        int n_out = -1, e_out = -1;
        int c_top = -1, c_right = -1;  // counter readings
    };
    std::vector<Block> blocks(static_cast<size_t>(wp) * hp);
    auto block_at = [&](long long bx, long long by) -> Block& {
        return blocks[static_cast<size_t>(by - 1) * wp + (bx - 1)];
    };

    std::vector<int> north(wq);
    for (long long x = 0; x < wq; ++x) north[x] = hid[theta.seed.north[x]];
    for (long long y = 1; y <= hq; ++y) {
        int east = vid[theta.seed.east[y - 1]];
        long long by = y / ell + 1, ly = y % ell + 1;
        bool block_row = y < ell * hp;
        for (long long x = 1; x <= wq; ++x) {
            int s = north[x - 1], w = east;
            int idx = lookup[static_cast<size_t>(s) * nv + w];
            if (idx < 0)
                throw Error(Errc::Precondition,
                            "no tile fits at (" + std::to_string(x) + "," + std::to_string(y) +
                                ") while assembling the blowup");
            const Out& o = outs[idx];
            if (o.color != inst.q.palette_index(static_cast<int>(x), static_cast<int>(y)))
                throw Error(Errc::Precondition,
                            "tile set does not assemble the blowup pattern at (" +
                                std::to_string(x) + "," + std::to_string(y) + ")");
            if (block_row && x < ell * wp) {
                long long bx = x / ell + 1, lx = x % ell + 1;
                Block& b = block_at(bx, by);
                if (lx == 1 && ly == 1) {
                    b.a_s = s;
                    b.a_w = w;
                }
                if (lx == 1 && ly == ell) b.n_out = o.n;
                if (lx == ell && ly == 1) b.e_out = o.e;
                // Counter reads skip ly/lx == 1 (the white C1/C2 corners).
                if (lx == ell && ly != 1 && ly != ell && o.color == kWhite)
                    b.c_right = static_cast<int>(ly) - 2;
                if (ly == ell && lx != 1 && lx != ell && o.color == kWhite)
                    b.c_top = static_cast<int>(lx) - 2;
            }
            north[x - 1] = o.n;
            east = o.e;
        }
    }

    TileSet out;
    std::map<std::pair<int, int>, size_t> complete;  // A inputs -> emitted tile
    auto color_name = [&](int c) {
        if (!inst.source_palette.empty()) return inst.source_palette[c - 1];
        return Color("c" + std::to_string(c));
    };
    for (int by = 1; by <= hp; ++by)
        for (int bx = 1; bx <= wp; ++bx) {
            const Block& b = block_at(bx, by);
            if (b.c_top < 1 || b.c_top != b.c_right)
                throw Error(Errc::MalformedSupertile,
                            "counters disagree in supertile (" + std::to_string(bx) + "," +
                                std::to_string(by) + ")");
            Color col = color_name(b.c_top);
            std::string sx = std::to_string(bx), sy = std::to_string(by);
            if (bx >= 2 && by >= 2) {
                auto key = std::pair(b.a_s, b.a_w);
                auto it = complete.find(key);
                if (it != complete.end()) {
                    const TileType& prev = out.tiles[it->second];
                    if (prev.n != htok[b.n_out] || prev.e != vtok[b.e_out] || prev.color != col)
                        throw Error(Errc::Structure,
                                    "supertiles with equal control inputs differ");
                    continue;
                }
                complete[key] = out.tiles.size();
                out.tiles.push_back({col, htok[b.n_out], vtok[b.e_out], htok[b.a_s],
                                     vtok[b.a_w]});
            } else if (by == 1 && bx >= 2) {
                // Bottom border: no control row; invent matching glues on the
                // undefined south/west/east sides.
                out.tiles.push_back({col, htok[b.n_out],
                                     bx == wp ? Glue("bul") : "hb@" + sx, "sn@" + sx,
                                     "hb@" + std::to_string(bx - 1)});
            } else if (bx == 1 && by >= 2) {
                out.tiles.push_back({col, by == hp ? Glue("bul") : "vl@" + sy, vtok[b.e_out],
                                     "vl@" + std::to_string(by - 1), "se@" + sy});
            } else {
                out.tiles.push_back({col, "vl@1", "hb@1", "sn@1", "se@1"});
            }
        }
    for (int bx = 1; bx <= wp; ++bx) out.seed.north.push_back("sn@" + std::to_string(bx));
    for (int by = 1; by <= hp; ++by) out.seed.east.push_back("se@" + std::to_string(by));
    return out;
}

void write_qdesc(std::ostream& os, const MbpatsInstance& inst) {
    os << "qdesc " << inst.ell << " " << inst.w_p << " " << inst.h_p << "\n";
    for (int y = 0; y < inst.h_p; ++y) {
        for (int x = 0; x < inst.w_p; ++x) {
            if (x) os << " ";
            os << inst.color_idx[static_cast<size_t>(y) * inst.w_p + x];
        }
        os << "\n";
    }
    if (!inst.source_palette.empty()) {
        os << "palette";
        for (const auto& c : inst.source_palette) os << " " << escape_token(c);
        os << "\n";
    }
}

MbpatsInstance read_qdesc(std::istream& is) {
    std::string word;
    if (!(is >> word) || word != "qdesc") throw Error(Errc::Parse, "expected 'qdesc' header");
    QGeometry g;
    if (!(is >> g.ell >> g.wp >> g.hp) || g.ell <= 0 || g.wp <= 0 || g.hp <= 0)
        throw Error(Errc::Parse, "bad qdesc dimensions");
    g.cidx.resize(static_cast<size_t>(g.wp) * g.hp);
    g.k = 0;
    for (auto& c : g.cidx) {
        if (!(is >> c) || c <= 0) throw Error(Errc::Parse, "bad color index in qdesc");
        g.k = std::max(g.k, c);
    }
    if (g.ell != 5LL * g.k + 8)
        throw Error(Errc::Parse, "qdesc scale does not match its color count");
    std::vector<Color> palette;
    if (is >> word) {
        if (word != "palette") throw Error(Errc::Parse, "unexpected trailing data in qdesc");
        std::string tok;
        while (is >> tok) palette.push_back(unescape_token(tok));
        if (static_cast<int>(palette.size()) != g.k)
            throw Error(Errc::Parse, "qdesc palette size does not match its color count");
    }
    return make_instance(std::move(g), std::move(palette));
}

MbpatsInstance load_qdesc(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw Error(Errc::Io, "cannot open " + path);
    return read_qdesc(f);
}

void save_qdesc(const std::string& path, const MbpatsInstance& inst) {
    std::ofstream f(path);
    if (!f) throw Error(Errc::Io, "cannot write " + path);
    write_qdesc(f, inst);
}

}  // namespace superreduce
}  // namespace pats
