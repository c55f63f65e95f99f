#pragma once

#include <array>
#include <iosfwd>
#include <map>
#include <string>

#include "pats/pattern.hpp"

namespace pats {

using Rgb = std::array<unsigned char, 3>;

// Deterministic injective palette: black/white/gray keep their names, every
// other color gets a hashed hue (probed until distinct).
std::map<Color, Rgb> default_palette(const Pattern& p);

void render_ppm(std::ostream& os, const Pattern& p, const std::map<Color, Rgb>& palette,
                int cell_size = 1);
void render_svg(std::ostream& os, const Pattern& p, const std::map<Color, Rgb>& palette,
                int cell_size = 8);

}  // namespace pats
