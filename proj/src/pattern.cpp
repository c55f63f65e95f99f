#include "pats/pattern.hpp"

#include <stdexcept>

namespace pats {

Pattern Pattern::dense(int width, int height, std::vector<Color> cells) {
    if (width <= 0 || height <= 0)
        throw std::invalid_argument("pattern dimensions must be positive");
    if (cells.size() != static_cast<size_t>(width) * height)
        throw std::invalid_argument("cell count does not match dimensions");
    Pattern p;
    p.width_ = width;
    p.height_ = height;
    std::map<Color, int> index;
    p.cells_.reserve(cells.size());
    for (auto& c : cells) {
        auto [it, fresh] = index.emplace(c, static_cast<int>(p.palette_.size()));
        if (fresh) p.palette_.push_back(c);
        p.cells_.push_back(it->second);
    }
    return p;
}

Pattern Pattern::procedural(int width, int height, std::vector<Color> palette,
                            std::function<int(int, int)> idx) {
    if (width <= 0 || height <= 0)
        throw std::invalid_argument("pattern dimensions must be positive");
    if (palette.empty()) throw std::invalid_argument("empty palette");
    Pattern p;
    p.width_ = width;
    p.height_ = height;
    p.palette_ = std::move(palette);
    p.fn_ = std::move(idx);
    return p;
}

bool Pattern::operator==(const Pattern& other) const {
    if (width_ != other.width_ || height_ != other.height_) return false;
    for (int y = 1; y <= height_; ++y)
        for (int x = 1; x <= width_; ++x)
            if (at(x, y) != other.at(x, y)) return false;
    return true;
}

Census color_census(const Pattern& p) {
    Census c;
    // Count palette indices over the scan, then translate once; keeps the hot
    // loop free of string hashing for procedural patterns.
    std::vector<long long> counts(p.palette().size(), 0);
    for (int y = 1; y <= p.height(); ++y)
        for (int x = 1; x <= p.width(); ++x) counts[p.palette_index(x, y)]++;
    for (size_t i = 0; i < counts.size(); ++i)
        if (counts[i] > 0) c.counts[p.palette()[i]] = counts[i];
    for (const auto& [color, n] : c.counts)
        if (n == 1) c.unique_colors.insert(color);
    return c;
}

}  // namespace pats
