#include "pats/satreduce.hpp"

#include <cassert>
#include <set>
#include <stdexcept>

#include "pats/errors.hpp"

namespace pats {
namespace satreduce {

namespace {

// Edges the gadget layouts leave unconstrained get a canonical per-tile-type
// glue; sharing it across all occurrences of the type keeps multi-use tiles
// (b.gray, lit.v, ...) placeable everywhere they appear.
Glue blank_h(const Color& c, char side) { return "h." + c + "." + side; }
Glue blank_v(const Color& c, char side) { return "v." + c + "." + side; }

struct FixedCell {
    Color color;
    Glue n, e, s, w;
};

FixedCell fixed(const Color& c, Glue n, Glue e, Glue s, Glue w) {
    if (n.empty()) n = blank_h(c, 'n');
    if (s.empty()) s = blank_h(c, 's');
    if (e.empty()) e = blank_v(c, 'e');
    if (w.empty()) w = blank_v(c, 'w');
    return {c, n, e, s, w};
}

struct LCell {
    enum Kind { Unique, Fixed, Or } kind = Unique;
    FixedCell cell;  // valid when kind == Fixed
};

LCell F(const FixedCell& c) { return {LCell::Fixed, c}; }
LCell OR() { return {LCell::Or, {}}; }

struct Sub {
    int w = 0, h = 0;
    std::vector<std::vector<LCell>> rows;  // bottom-up, rows[y][x] 0-based
    // forced input glues on edges whose outer neighbor is a unique cell:
    // s_ann[{x,y}] = glue below local cell (x,y); w_ann likewise to the left
    std::map<std::pair<int, int>, Glue> s_ann, w_ann;

    void add_row(std::vector<LCell> r) {
        w = static_cast<int>(r.size());
        rows.push_back(std::move(r));
        h = static_cast<int>(rows.size());
    }
};

const char* kXGlues[8][2] = {
    // {e, w}; n is the row below's or-input, see table in sub_p
    {"0", ""}, {"0", "0"}, {"1", "1"}, {"1", "1"},
    {"0", "1"}, {"0", "0"}, {"1", "1"}, {"1", "1"}};
const char* kXN[8] = {"0", "0", "0", "0", "1", "1", "1", "1"};
const char* kYSW[8][2] = {  // {s, w}
    {"A", "0"}, {"B", "0"}, {"C", "0"}, {"D", "0"},
    {"A", "1"}, {"B", "1"}, {"C", "1"}, {"D", "1"}};

Sub sub_p() {
    Sub s;
    std::vector<LCell> r1, r2;
    for (int i = 0; i < 8; ++i) {
        std::string xi = "X" + std::to_string(i + 1);
        std::string yi = "Y" + std::to_string(i + 1);
        r1.push_back(F(fixed(xi, kXN[i], kXGlues[i][0], "", kXGlues[i][1])));
        r1.push_back(OR());
        r2.push_back(OR());
        // Y8's east edge faces the frame and is unconstrained; the others output 0.
        r2.push_back(F(fixed(yi, "", i == 7 ? "" : "0", kYSW[i][0], kYSW[i][1])));
    }
    s.add_row(std::move(r1));
    s.add_row(std::move(r2));
    // South inputs of the bottom or-row alternate 0/1 so its tiles run
    // A,B,C,D,A,B,C,D; the top-left or takes west input 0 from the frame.
    for (int i = 0; i < 8; ++i) s.s_ann[{2 * i + 2, 1}] = (i % 2 ? "1" : "0");
    s.w_ann[{1, 2}] = "0";
    return s;
}

FixedCell up_cell(int bit, bool dark) {
    std::string b = std::to_string(bit);
    std::string c = "up" + b + (dark ? ".dark" : ".white");
    Glue g = dark ? "bul" : "dia";
    return fixed(c, b, g, b, g);
}
FixedCell right_cell(int bit, bool dark) {
    std::string b = std::to_string(bit);
    std::string c = "right" + b + (dark ? ".dark" : ".white");
    Glue g = dark ? "bul" : "dia";
    return fixed(c, g, b, g, b);
}
FixedCell letter_cell(const std::string& L) { return fixed(L, "", "star", L, "star"); }
FixedCell plus_cell() { return fixed("plus", "star", "", "star", "1"); }
FixedCell minus_cell() { return fixed("minus", "star", "", "star", "0"); }
FixedCell a_cell() { return fixed("a", "dia", "dia", "dia", "dia"); }
FixedCell bgray_cell() { return fixed("b.gray", "star", "", "star", "dia"); }

Sub sub_q(int i) {
    // (w, s, sign, letter) per gadget: the or tile under test gets inputs
    // (s, w) and must output letter north and w|s east.
    static const int kW[4] = {0, 0, 1, 1}, kS[4] = {0, 1, 0, 1};
    static const char* kL[4] = {"A", "B", "C", "D"};
    int w = kW[i - 1], si = kS[i - 1];
    Sub s;
    s.add_row({F(fixed("Z1", "bul", "bul", "", "")), F(fixed("Z2", "dia", "bul", "", "bul")),
               F(up_cell(si, true)), F(fixed("b.dark", "star", "", "", "bul"))});
    s.add_row({F(fixed("Z3", "bul", "dia", "bul", "")), F(a_cell()), F(up_cell(si, false)),
               F(bgray_cell())});
    s.add_row({F(right_cell(w, true)), F(right_cell(w, false)), OR(),
               F(i == 1 ? minus_cell() : plus_cell())});
    s.add_row({F(fixed("c.dark", "", "star", "bul", "")), F(fixed("c.gray", "", "star", "dia", "star")),
               F(letter_cell(kL[i - 1])), F(fixed("d", "", "", "star", "star"))});
    return s;
}

Sub sub_q5() {
    Sub s;
    s.add_row({F(a_cell()), F(up_cell(0, false)), F(up_cell(1, false)), F(up_cell(0, false)),
               F(up_cell(1, false)), F(bgray_cell())});
    s.add_row({F(right_cell(0, false)), OR(), OR(), OR(), OR(), F(plus_cell())});
    s.add_row({F(fixed("c.gray", "", "star", "dia", "star")), F(letter_cell("A")),
               F(letter_cell("B")), F(letter_cell("C")), F(letter_cell("D")),
               F(fixed("d", "", "", "star", "star"))});
    return s;
}

FixedCell lit_cell(const Variable& v, bool neg, int fv) {
    std::string c = neg ? "lit.~" + v : "lit." + v;
    std::string sg = (neg ? "nvar." : "var.") + v;
    int out = neg ? 1 - fv : fv;
    return fixed(c, std::to_string(out), "dia", sg, "dia");
}

Sub sub_r(int j, const Variable& v, int fv) {
    Sub s;
    if (j == 1 || j == 2) {
        bool neg = (j == 2);
        s.add_row({F(fixed("Z4", "tri", "dia", "", "")), F(lit_cell(v, neg, fv))});
        std::string dark = neg ? "neg." + v : "pos." + v;
        int out = neg ? 1 - fv : fv;
        s.add_row({F(fixed("aux." + v, "", "var." + v, "tri", "")),
                   F(fixed(dark, "", "", std::to_string(out), "var." + v))});
    } else {
        s.add_row({F(a_cell()), F(lit_cell(v, false, fv)), F(lit_cell(v, true, fv)),
                   F(bgray_cell())});
        s.add_row({F(right_cell(0, false)), OR(), OR(), F(plus_cell())});
    }
    return s;
}

Sub sub_s(const Clause3& c, const VarAssignment* f) {
    auto fv = [&](const Variable& v) { return f ? f->at(v) : 0; };
    Sub s;
    s.add_row({F(a_cell()), F(lit_cell(c[0].var, c[0].neg, fv(c[0].var))),
               F(lit_cell(c[1].var, c[1].neg, fv(c[1].var))),
               F(lit_cell(c[2].var, c[2].neg, fv(c[2].var))), F(bgray_cell())});
    s.add_row({F(right_cell(0, false)), OR(), OR(), OR(), F(plus_cell())});
    return s;
}

struct Layout {
    int w = 0, h = 0;
    std::vector<LCell> grid;  // row-major from (1,1)
    std::map<std::pair<int, int>, Glue> s_ann, w_ann;  // global coords

    LCell& at(int x, int y) { return grid[static_cast<size_t>(y - 1) * w + (x - 1)]; }
    const LCell& at(int x, int y) const {
        return grid[static_cast<size_t>(y - 1) * w + (x - 1)];
    }
};

// Gadgets go left to right with one unique column before each and one after
// all of them; every gadget's bottom row is pattern row 2.
Layout make_layout(const std::vector<Sub>& subs, int height) {
    Layout L;
    L.h = height;
    L.w = 1;
    for (const auto& s : subs) L.w += s.w + 1;
    L.grid.assign(static_cast<size_t>(L.w) * L.h, LCell{});
    int x0 = 2;
    for (const auto& s : subs) {
        for (int y = 0; y < s.h; ++y)
            for (int x = 0; x < s.w; ++x) L.at(x0 + x, 2 + y) = s.rows[y][x];
        for (const auto& [xy, g] : s.s_ann)
            L.s_ann[{x0 + xy.first - 1, 2 + xy.second - 1}] = g;
        for (const auto& [xy, g] : s.w_ann)
            L.w_ann[{x0 + xy.first - 1, 2 + xy.second - 1}] = g;
        x0 += s.w + 1;
    }
    return L;
}

std::vector<Sub> formula_subs(const Cnf3& f, const VarAssignment* assign) {
    auto fv = [&](const Variable& v) { return assign ? assign->at(v) : 0; };
    std::vector<Sub> subs;
    subs.push_back(sub_p());
    for (int i = 1; i <= 4; ++i) subs.push_back(sub_q(i));
    subs.push_back(sub_q5());
    for (const auto& v : f.variables)
        for (int j = 1; j <= 3; ++j) subs.push_back(sub_r(j, v, fv(v)));
    for (const auto& c : f.clauses) subs.push_back(sub_s(c, assign));
    return subs;
}

Pattern layout_pattern(const Layout& L) {
    std::vector<Color> cells;
    cells.reserve(static_cast<size_t>(L.w) * L.h);
    for (int y = 1; y <= L.h; ++y)
        for (int x = 1; x <= L.w; ++x) {
            const LCell& c = L.at(x, y);
            if (c.kind == LCell::Fixed)
                cells.push_back(c.cell.color);
            else if (c.kind == LCell::Or)
                cells.push_back("or");
            else
                cells.push_back("u@" + std::to_string(x) + "_" + std::to_string(y));
        }
    return Pattern::dense(L.w, L.h, std::move(cells));
}

// Or-gate tile table: type by inputs (s, w), east output = w|s, norths all
// distinct.
const FixedCell kOrTiles[4] = {{"or", "A", "0", "0", "0"},
                               {"or", "B", "1", "1", "0"},
                               {"or", "C", "1", "0", "1"},
                               {"or", "D", "1", "1", "1"}};

TileSet layout_tileset(const Layout& L) {
    const int W = L.w, H = L.h;
    // hedge[x][y] = glue above cell (x,y) (y=0: below row 1); vedge[x][y] =
    // glue right of cell (x,y) (x=0: left of column 1). Empty = undecided.
    std::vector<std::vector<Glue>> hedge(W + 1, std::vector<Glue>(H + 1));
    std::vector<std::vector<Glue>> vedge(W + 1, std::vector<Glue>(H + 1));
    auto set_edge = [](Glue& slot, const Glue& g) {
        if (!slot.empty() && slot != g)
            throw std::logic_error("gadget glue conflict: " + slot + " vs " + g);
        slot = g;
    };
    for (int y = 1; y <= H; ++y)
        for (int x = 1; x <= W; ++x) {
            const LCell& c = L.at(x, y);
            if (c.kind != LCell::Fixed) continue;
            set_edge(hedge[x][y], c.cell.n);
            set_edge(hedge[x][y - 1], c.cell.s);
            set_edge(vedge[x][y], c.cell.e);
            set_edge(vedge[x - 1][y], c.cell.w);
        }
    for (const auto& [xy, g] : L.s_ann) set_edge(hedge[xy.first][xy.second - 1], g);
    for (const auto& [xy, g] : L.w_ann) set_edge(vedge[xy.first - 1][xy.second], g);
    // Resolve or cells row-major: both inputs are fixed tiles, annotations, or
    // earlier or cells, so they are decided by now.
    for (int y = 1; y <= H; ++y)
        for (int x = 1; x <= W; ++x) {
            if (L.at(x, y).kind != LCell::Or) continue;
            const Glue& s = hedge[x][y - 1];
            const Glue& w = vedge[x - 1][y];
            if ((s != "0" && s != "1") || (w != "0" && w != "1"))
                throw std::logic_error("or-gate inputs undecided at " + std::to_string(x) + "," +
                                       std::to_string(y));
            const FixedCell& t = kOrTiles[(s == "1" ? 1 : 0) + (w == "1" ? 2 : 0)];
            set_edge(hedge[x][y], t.n);
            set_edge(vedge[x][y], t.e);
        }
    // Everything still undecided is an output of (or seed input under) a
    // unique cell; name it after its coordinates.
    for (int x = 0; x <= W; ++x)
        for (int y = 0; y <= H; ++y) {
            std::string xy = std::to_string(x) + "_" + std::to_string(y);
            if (x >= 1 && hedge[x][y].empty()) hedge[x][y] = "h@" + xy;
            if (y >= 1 && vedge[x][y].empty()) vedge[x][y] = "v@" + xy;
        }
    Pattern pat = layout_pattern(L);
    std::set<TileType> tiles;
    for (int y = 1; y <= H; ++y)
        for (int x = 1; x <= W; ++x)
            tiles.insert(TileType{pat.at(x, y), hedge[x][y], vedge[x][y], hedge[x][y - 1],
                                  vedge[x - 1][y]});
    TileSet ts;
    ts.tiles.assign(tiles.begin(), tiles.end());
    for (int x = 1; x <= W; ++x) ts.seed.north.push_back(hedge[x][0]);
    for (int y = 1; y <= H; ++y) ts.seed.east.push_back(vedge[0][y]);
    return ts;
}

}  // namespace

Pattern gen_subpattern(const SubpatternKind& k) {
    Sub s;
    switch (k.kind) {
        case 'p': s = sub_p(); break;
        case 'q':
            if (k.index < 1 || k.index > 5) throw Error(Errc::Range, "q index must be 1..5");
            s = k.index == 5 ? sub_q5() : sub_q(k.index);
            break;
        case 'r':
            if (k.index < 1 || k.index > 3) throw Error(Errc::Range, "r index must be 1..3");
            if (k.var.empty()) throw Error(Errc::Range, "r gadget needs a variable");
            s = sub_r(k.index, k.var, 0);
            break;
        case 's':
            for (const auto& lit : k.clause)
                if (lit.var.empty()) throw Error(Errc::Range, "s gadget needs a full clause");
            s = sub_s(k.clause, nullptr);
            break;
        default: throw Error(Errc::Range, std::string("unknown gadget kind '") + k.kind + "'");
    }
    std::vector<Color> cells;
    for (int y = 0; y < s.h; ++y)
        for (int x = 0; x < s.w; ++x) {
            const LCell& c = s.rows[y][x];
            cells.push_back(c.kind == LCell::Or ? "or" : c.cell.color);
        }
    return Pattern::dense(s.w, s.h, std::move(cells));
}

PatsInstance build_pattern(const Cnf3& f) {
    Layout L = make_layout(formula_subs(f, nullptr), 6);
    PatsInstance inst;
    inst.pattern = layout_pattern(L);
    inst.formula = f;
    inst.m = static_cast<long long>(inst.pattern.palette().size()) + 3;
    for (const auto& c : inst.pattern.palette()) {
        std::string role = c;
        if (c.rfind("lit.~", 0) == 0)
            role = "negv_white(" + c.substr(5) + ")";
        else if (c.rfind("lit.", 0) == 0)
            role = "v_white(" + c.substr(4) + ")";
        else if (c.rfind("aux.", 0) == 0)
            role = "v_gray(" + c.substr(4) + ")";
        else if (c.rfind("pos.", 0) == 0)
            role = "v_dark(" + c.substr(4) + ")";
        else if (c.rfind("neg.", 0) == 0)
            role = "negv_dark(" + c.substr(4) + ")";
        else if (c.rfind("u@", 0) == 0) {
            auto us = c.find('_');
            role = "unique@(" + c.substr(2, us - 2) + "," + c.substr(us + 1) + ")";
        }
        inst.color_atlas[role] = c;
    }
    return inst;
}

TileSet witness_tileset(const Cnf3& f, const VarAssignment& assignment) {
    if (!eval(f, assignment))
        throw Error(Errc::UnsatisfyingAssignment, "assignment does not satisfy the formula");
    return layout_tileset(make_layout(formula_subs(f, &assignment), 6));
}

VarAssignment extract_assignment(const TileSet& t, const PatsInstance& inst) {
    auto find_unique = [&](const Color& c) -> const TileType& {
        const TileType* hit = nullptr;
        for (const auto& tt : t.tiles)
            if (tt.color == c) {
                if (hit) throw Error(Errc::AmbiguousColor, "multiple tiles colored " + c);
                hit = &tt;
            }
        if (!hit) throw Error(Errc::AmbiguousColor, "no tile colored " + c);
        return *hit;
    };
    Glue g1 = find_unique("up1.white").n;
    VarAssignment out;
    for (const auto& v : inst.formula.variables) {
        find_unique("lit.~" + v);  // must exist exactly once too
        out[v] = find_unique("lit." + v).n == g1 ? 1 : 0;
    }
    return out;
}

std::pair<Pattern, TileSet> standalone_or_instance() {
    Layout L = make_layout({sub_p()}, 4);
    return {layout_pattern(L), layout_tileset(L)};
}

}  // namespace satreduce
}  // namespace pats
