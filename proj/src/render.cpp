#include "pats/render.hpp"

#include <cmath>
#include <ostream>
#include <set>

namespace pats {

namespace {

Rgb hsv(double h, double s, double v) {
    double c = v * s, hp = h / 60.0, x = c * (1 - std::fabs(std::fmod(hp, 2.0) - 1));
    double r = 0, g = 0, b = 0;
    switch (static_cast<int>(hp) % 6) {
        case 0: r = c, g = x; break;
        case 1: r = x, g = c; break;
        case 2: g = c, b = x; break;
        case 3: g = x, b = c; break;
        case 4: r = c, b = x; break;
        default: r = c, b = x; break;
    }
    double m = v - c;
    auto q = [&](double t) { return static_cast<unsigned char>((t + m) * 255.0 + 0.5); };
    return {q(r), q(g), q(b)};
}

uint64_t fnv1a(const std::string& s) {
    uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) h = (h ^ c) * 1099511628211ull;
    return h;
}

}  // namespace

std::map<Color, Rgb> default_palette(const Pattern& p) {
    std::map<Color, Rgb> out;
    std::set<Rgb> used;
    auto claim = [&](const Color& c, Rgb rgb) {
        // Probe hue/value until distinct so the palette stays injective.
        uint64_t salt = 1;
        while (!used.insert(rgb).second) {
            uint64_t h = fnv1a(c + "#" + std::to_string(salt++));
            rgb = hsv(static_cast<double>(h % 360), 0.45 + (h >> 9) % 40 / 100.0,
                      0.55 + (h >> 17) % 40 / 100.0);
        }
        out[c] = rgb;
    };
    for (const auto& c : p.palette()) {
        if (c == "black")
            claim(c, {0, 0, 0});
        else if (c == "white")
            claim(c, {255, 255, 255});
        else if (c == "gray")
            claim(c, {170, 170, 170});
        else {
            uint64_t h = fnv1a(c);
            claim(c, hsv(static_cast<double>(h % 360), 0.55 + (h >> 9) % 35 / 100.0,
                         0.65 + (h >> 17) % 30 / 100.0));
        }
    }
    return out;
}

void render_ppm(std::ostream& os, const Pattern& p, const std::map<Color, Rgb>& palette,
                int cell_size) {
    const int cs = cell_size < 1 ? 1 : cell_size;
    const long long w = static_cast<long long>(p.width()) * cs;
    const long long h = static_cast<long long>(p.height()) * cs;
    os << "P6\n" << w << " " << h << "\n255\n";
    std::vector<Rgb> by_idx;
    for (const auto& c : p.palette()) by_idx.push_back(palette.at(c));
    std::string row;
    for (int y = p.height(); y >= 1; --y) {  // image top row = pattern top row
        row.clear();
        for (int x = 1; x <= p.width(); ++x) {
            const Rgb& c = by_idx[p.palette_index(x, y)];
            for (int i = 0; i < cs; ++i) row.append(reinterpret_cast<const char*>(c.data()), 3);
        }
        for (int i = 0; i < cs; ++i) os.write(row.data(), static_cast<std::streamsize>(row.size()));
    }
}

void render_svg(std::ostream& os, const Pattern& p, const std::map<Color, Rgb>& palette,
                int cell_size) {
    const int cs = cell_size < 1 ? 1 : cell_size;
    auto hex = [](const Rgb& c) {
        char buf[8];
        std::snprintf(buf, sizeof buf, "#%02x%02x%02x", c[0], c[1], c[2]);
        return std::string(buf);
    };
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << p.width() * cs << "\" height=\""
       << p.height() * cs << "\">\n";
    for (int y = 1; y <= p.height(); ++y) {
        // Merge horizontal runs of one color into a single rect.
        int x = 1;
        while (x <= p.width()) {
            int idx = p.palette_index(x, y);
            int x2 = x;
            while (x2 < p.width() && p.palette_index(x2 + 1, y) == idx) ++x2;
            os << "<rect x=\"" << (x - 1) * cs << "\" y=\"" << (p.height() - y) * cs
               << "\" width=\"" << (x2 - x + 1) * cs << "\" height=\"" << cs << "\" fill=\""
               << hex(palette.at(p.palette()[idx])) << "\"/>\n";
            x = x2 + 1;
        }
    }
    os << "</svg>\n";
}

}  // namespace pats
