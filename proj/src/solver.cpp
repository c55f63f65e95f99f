#include "pats/solver.hpp"

#include <chrono>
#include <limits>
#include <map>

#include "pats/errors.hpp"

namespace pats {
namespace solver {

namespace {

using Clock = std::chrono::steady_clock;

// Backtracking state. Glues are canonical integers per namespace: the only
// fresh glue ever offered is the next unused integer, so each glue partition
// is visited exactly once and the search is exhaustive up to renaming.
struct Search {
    int w, h;
    std::vector<int> pcolor;            // palette index per cell
    int ncolors;
    long long max_total;
    std::vector<long long> bound;       // per palette color, -1 = unbounded
    long long node_limit;
    double time_limit;
    Clock::time_point start;

    std::vector<int> tcolor, tn, te, ts, tw;
    std::map<std::pair<int, int>, int> by_input;
    std::vector<long long> count;       // tiles per color
    long long total = 0;
    int colors_missing;                 // colors with no tile yet
    int nh = 0, nv = 0;                 // glues introduced per namespace
    std::vector<int> seed_n, seed_e;    // -1 = not yet chosen
    std::vector<int> north;             // current output glue per column

    long long nodes = 0;
    bool budget_hit = false;
    bool found = false;

    bool out_of_budget() {
        if (node_limit >= 0 && nodes >= node_limit) return budget_hit = true;
        if (time_limit >= 0 && (nodes & 1023) == 0 &&
            std::chrono::duration<double>(Clock::now() - start).count() > time_limit)
            return budget_hit = true;
        return false;
    }

    bool place(int cell, int s, int w_in) {
        int x = cell % w, y = cell / w;
        int pc = pcolor[cell];
        auto it = by_input.find({s, w_in});
        if (it != by_input.end()) {
            int t = it->second;
            if (tcolor[t] != pc) return false;
            int saved = north[x];
            north[x] = tn[t];
            bool ok = step(cell + 1, te[t]);
            north[x] = saved;
            return ok;
        }
        if (total >= max_total) return false;
        if (bound[pc] >= 0 && count[pc] >= bound[pc]) return false;
        // Every still-uncovered color needs at least one future tile.
        long long needed = colors_missing - (count[pc] == 0 ? 1 : 0);
        if (max_total - total - 1 < needed) return false;
        int t = static_cast<int>(tcolor.size());
        tcolor.push_back(pc);
        ts.push_back(s);
        tw.push_back(w_in);
        tn.push_back(0);
        te.push_back(0);
        by_input[{s, w_in}] = t;
        ++count[pc];
        ++total;
        if (count[pc] == 1) --colors_missing;
        int saved = north[x];
        bool ok = false;
        for (int n = 0; n <= nh && !ok; ++n) {
            tn[t] = n;
            int nh_saved = nh;
            if (n == nh) ++nh;
            north[x] = n;
            for (int e = 0; e <= nv && !ok; ++e) {
                te[t] = e;
                int nv_saved = nv;
                if (e == nv) ++nv;
                ok = step(cell + 1, e);
                nv = nv_saved;
            }
            nh = nh_saved;
        }
        north[x] = saved;
        if (ok) return true;  // keep the placed tiles: they are the witness
        if (count[pc] == 1) ++colors_missing;
        --count[pc];
        --total;
        by_input.erase({s, w_in});
        tcolor.pop_back();
        ts.pop_back();
        tw.pop_back();
        tn.pop_back();
        te.pop_back();
        return ok;
    }

    bool with_west(int cell, int s) {
        int x = cell % w, y = cell / w;
        if (x > 0) return false;  // east input is threaded by the caller
        if (seed_e[y] >= 0) return place(cell, s, seed_e[y]);
        for (int g = 0; g <= nv; ++g) {
            seed_e[y] = g;
            int nv_saved = nv;
            if (g == nv) ++nv;
            if (place(cell, s, g)) return true;
            nv = nv_saved;
            seed_e[y] = -1;
        }
        return false;
    }

    bool step(int cell, int east_in) {
        if (cell == w * h) return found = true;
        ++nodes;
        if (out_of_budget()) return false;
        int x = cell % w, y = cell / w;
        bool west_from_seed = (x == 0);
        auto continue_with_s = [&](int s) {
            if (!west_from_seed) return place(cell, s, east_in);
            return with_west(cell, s);
        };
        if (y > 0) return continue_with_s(north[x]);
        if (seed_n[x] >= 0) return continue_with_s(seed_n[x]);
        for (int g = 0; g <= nh; ++g) {
            seed_n[x] = g;
            int nh_saved = nh;
            if (g == nh) ++nh;
            if (continue_with_s(g)) return true;
            nh = nh_saved;
            seed_n[x] = -1;
        }
        return false;
    }
};

SearchResult run(const Pattern& p, const SearchBudget& budget) {
    if (!p.is_dense())
        throw Error(Errc::Precondition, "exact search needs a dense pattern");
    Search s;
    s.w = p.width();
    s.h = p.height();
    s.ncolors = static_cast<int>(p.palette().size());
    for (int y = 1; y <= s.h; ++y)
        for (int x = 1; x <= s.w; ++x) s.pcolor.push_back(p.palette_index(x, y));
    long long cells = p.area();
    s.max_total = budget.max_total_tiles ? std::min(*budget.max_total_tiles, cells) : cells;
    s.bound.assign(s.ncolors, -1);
    for (const auto& [color, b] : budget.per_color_bounds) {
        for (int i = 0; i < s.ncolors; ++i)
            if (p.palette()[i] == color) s.bound[i] = b;
    }
    s.node_limit = budget.node_limit ? *budget.node_limit : -1;
    s.time_limit = budget.time_limit_s ? *budget.time_limit_s : -1;
    s.start = Clock::now();
    s.count.assign(s.ncolors, 0);
    s.colors_missing = s.ncolors;
    s.seed_n.assign(s.w, -1);
    s.seed_e.assign(s.h, -1);
    s.north.assign(s.w, -1);

    SearchResult res;
    bool ok = s.step(0, -1);
    res.nodes_explored = s.nodes;
    if (ok) {
        res.status = Status::Found;
        TileSet ts;
        for (size_t i = 0; i < s.tcolor.size(); ++i)
            ts.tiles.push_back({p.palette()[s.tcolor[i]], "h" + std::to_string(s.tn[i]),
                                "v" + std::to_string(s.te[i]), "h" + std::to_string(s.ts[i]),
                                "v" + std::to_string(s.tw[i])});
        for (int g : s.seed_n) ts.seed.north.push_back("h" + std::to_string(g));
        for (int g : s.seed_e) ts.seed.east.push_back("v" + std::to_string(g));
        res.tileset = std::move(ts);
    } else {
        res.status = s.budget_hit ? Status::BudgetExceeded : Status::Infeasible;
    }
    return res;
}

}  // namespace

SearchResult solve_exact(const Pattern& p, const SearchBudget& budget) {
    return run(p, budget);
}

SearchResult minimize(const Pattern& p, long long cap, std::optional<long long> node_limit) {
    long long nodes = 0;
    for (long long m = static_cast<long long>(p.palette().size()); m <= cap; ++m) {
        SearchBudget b;
        b.max_total_tiles = m;
        b.node_limit = node_limit;
        SearchResult r = run(p, b);
        nodes += r.nodes_explored;
        r.nodes_explored = nodes;
        if (r.status != Status::Infeasible) return r;  // Found or BudgetExceeded
    }
    SearchResult r;
    r.status = Status::Infeasible;
    r.nodes_explored = nodes;
    return r;
}

SearchResult solve_mbpats(const Pattern& p, const std::map<Color, long long>& per_color_bounds,
                          std::optional<long long> node_limit) {
    SearchBudget b;
    b.per_color_bounds = per_color_bounds;
    b.node_limit = node_limit;
    return run(p, b);
}

}  // namespace solver
}  // namespace pats
