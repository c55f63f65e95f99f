#pragma once

#include <map>
#include <optional>
#include <string>

#include "pats/pattern.hpp"
#include "pats/tiles.hpp"

namespace pats {
namespace solver {

struct SearchBudget {
    std::optional<long long> max_total_tiles;
    std::map<Color, long long> per_color_bounds;  // absent color = unbounded
    std::optional<long long> node_limit;
    std::optional<double> time_limit_s;
};

enum class Status { Found, Infeasible, BudgetExceeded };

struct SearchResult {
    Status status = Status::BudgetExceeded;
    std::optional<TileSet> tileset;  // present iff Found
    long long nodes_explored = 0;
};

// Complete backtracking search over directed tile sets up to glue renaming:
// cells are processed row-major, a cell's inputs are forced by seed/neighbor
// outputs, matching inputs force tile reuse, and new glues are introduced
// canonically (next integer in the namespace), collapsing glue labelings to
// glue partitions. Exhaustive within the given bounds.
SearchResult solve_exact(const Pattern& p, const SearchBudget& budget);

// Iterative deepening on the total tile bound, from |colors| up to cap.
SearchResult minimize(const Pattern& p, long long cap,
                      std::optional<long long> node_limit = std::nullopt);

SearchResult solve_mbpats(const Pattern& p, const std::map<Color, long long>& per_color_bounds,
                          std::optional<long long> node_limit = std::nullopt);

}  // namespace solver
}  // namespace pats
