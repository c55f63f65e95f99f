#pragma once

#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "pats/tiles.hpp"

namespace pats {

// A w x h grid of colors, (1,1) bottom-left. Backing is either a dense grid
// or a pure cell function (procedural); procedural patterns stream through
// row-major scans without ever being materialized.
class Pattern {
  public:
    Pattern() = default;  // empty 0x0 placeholder; fill via dense/procedural
    static Pattern dense(int width, int height, std::vector<Color> cells_row_major_bottom_up);
    // idx(x,y) must return an index into `palette` for all 1<=x<=w, 1<=y<=h.
    static Pattern procedural(int width, int height, std::vector<Color> palette,
                              std::function<int(int, int)> idx);

    int width() const { return width_; }
    int height() const { return height_; }
    long long area() const { return static_cast<long long>(width_) * height_; }
    bool is_dense() const { return !fn_; }

    // Palette of distinct colors; for dense patterns this is in order of
    // first appearance, scanning row-major from (1,1).
    const std::vector<Color>& palette() const { return palette_; }

    int palette_index(int x, int y) const {
        return fn_ ? fn_(x, y) : cells_[static_cast<size_t>(y - 1) * width_ + (x - 1)];
    }
    const Color& at(int x, int y) const { return palette_[palette_index(x, y)]; }

    bool operator==(const Pattern& other) const;

  private:
    int width_ = 0, height_ = 0;
    std::vector<Color> palette_;
    std::vector<int> cells_;               // dense backing, row-major from (1,1)
    std::function<int(int, int)> fn_;      // procedural backing
};

struct Census {
    std::map<Color, long long> counts;
    std::set<Color> unique_colors;
};

// Exact multiset counts over a full row-major scan.
Census color_census(const Pattern& p);

}  // namespace pats
