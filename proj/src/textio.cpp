#include "pats/textio.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "pats/errors.hpp"

namespace pats {

namespace {

bool needs_escape(char c) {
    return c == '%' || c == '=' || std::isspace(static_cast<unsigned char>(c));
}

std::vector<std::string> split_ws(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream ss(line);
    std::string tok;
    while (ss >> tok) out.push_back(tok);
    return out;
}

// Reads the next non-empty line; returns false on EOF.
bool next_line(std::istream& is, std::string& line, int& lineno) {
    while (std::getline(is, line)) {
        ++lineno;
        if (line.find_first_not_of(" \t\r") != std::string::npos) return true;
    }
    return false;
}

long long to_int(const std::string& s, int lineno) {
    try {
        size_t pos = 0;
        long long v = std::stoll(s, &pos);
        if (pos != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw Error(Errc::Parse, "expected an integer, got '" + s + "'", lineno);
    }
}

}  // namespace

std::string escape_token(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (needs_escape(c)) {
            static const char* hex = "0123456789abcdef";
            out += '%';
            out += hex[(static_cast<unsigned char>(c) >> 4) & 0xf];
            out += hex[static_cast<unsigned char>(c) & 0xf];
        } else {
            out += c;
        }
    }
    return out;
}

std::string unescape_token(const std::string& s) {
    std::string out;
    for (size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '%') {
            if (i + 2 >= s.size()) throw Error(Errc::Parse, "truncated %xx escape in '" + s + "'");
            auto hexval = [&](char c) -> int {
                if (c >= '0' && c <= '9') return c - '0';
                if (c >= 'a' && c <= 'f') return c - 'a' + 10;
                if (c >= 'A' && c <= 'F') return c - 'A' + 10;
                throw Error(Errc::Parse, "bad %xx escape in '" + s + "'");
            };
            out += static_cast<char>(hexval(s[i + 1]) * 16 + hexval(s[i + 2]));
            i += 2;
        } else {
            out += s[i];
        }
    }
    return out;
}

void write_pattern(std::ostream& os, const Pattern& p) {
    os << "pattern " << p.width() << " " << p.height() << "\n";
    for (int y = p.height(); y >= 1; --y) {
        for (int x = 1; x <= p.width(); ++x) {
            if (x > 1) os << " ";
            os << escape_token(p.at(x, y));
        }
        os << "\n";
    }
}

Pattern read_pattern(std::istream& is) {
    std::string line;
    int lineno = 0;
    if (!next_line(is, line, lineno)) throw Error(Errc::Parse, "empty pattern file");
    auto head = split_ws(line);
    if (head.size() != 3 || head[0] != "pattern")
        throw Error(Errc::Parse, "expected 'pattern <width> <height>'", lineno);
    long long w = to_int(head[1], lineno), h = to_int(head[2], lineno);
    if (w <= 0 || h <= 0 || w * h > 100'000'000)
        throw Error(Errc::Parse, "bad pattern dimensions", lineno);
    std::vector<Color> cells(static_cast<size_t>(w) * h);
    for (long long row = 0; row < h; ++row) {
        if (!next_line(is, line, lineno))
            throw Error(Errc::Parse, "pattern truncated: expected " + std::to_string(h) + " rows",
                        lineno);
        auto toks = split_ws(line);
        if (static_cast<long long>(toks.size()) != w)
            throw Error(Errc::Parse, "expected " + std::to_string(w) + " tokens", lineno);
        long long y = h - row;  // top row first
        for (long long x = 0; x < w; ++x)
            cells[static_cast<size_t>(y - 1) * w + x] = unescape_token(toks[x]);
    }
    return Pattern::dense(static_cast<int>(w), static_cast<int>(h), std::move(cells));
}

void write_tileset(std::ostream& os, const TileSet& ts) {
    os << "tileset\n";
    for (const auto& t : ts.tiles)
        os << "tile " << escape_token(t.color) << " N=" << escape_token(t.n)
           << " E=" << escape_token(t.e) << " S=" << escape_token(t.s)
           << " W=" << escape_token(t.w) << "\n";
    os << "seed north";
    for (const auto& g : ts.seed.north) os << " " << escape_token(g);
    os << "\nseed east";
    for (const auto& g : ts.seed.east) os << " " << escape_token(g);
    os << "\n";
}

TileSet read_tileset(std::istream& is) {
    std::string line;
    int lineno = 0;
    if (!next_line(is, line, lineno) || split_ws(line) != std::vector<std::string>{"tileset"})
        throw Error(Errc::Parse, "expected 'tileset' header", lineno);
    TileSet ts;
    bool saw_north = false, saw_east = false;
    while (next_line(is, line, lineno)) {
        auto toks = split_ws(line);
        if (toks[0] == "tile") {
            if (toks.size() != 6)
                throw Error(Errc::Parse, "expected 'tile <color> N=.. E=.. S=.. W=..'", lineno);
            TileType t;
            t.color = unescape_token(toks[1]);
            for (int i = 2; i < 6; ++i) {
                const std::string& f = toks[i];
                if (f.size() < 2 || f[1] != '=')
                    throw Error(Errc::Parse, "bad glue field '" + f + "'", lineno);
                Glue g = unescape_token(f.substr(2));
                switch (f[0]) {
                    case 'N': t.n = g; break;
                    case 'E': t.e = g; break;
                    case 'S': t.s = g; break;
                    case 'W': t.w = g; break;
                    default: throw Error(Errc::Parse, "bad glue field '" + f + "'", lineno);
                }
            }
            ts.tiles.push_back(std::move(t));
        } else if (toks[0] == "seed" && toks.size() >= 2 &&
                   (toks[1] == "north" || toks[1] == "east")) {
            std::vector<Glue> glues;
            for (size_t i = 2; i < toks.size(); ++i) glues.push_back(unescape_token(toks[i]));
            (toks[1] == "north" ? ts.seed.north : ts.seed.east) = std::move(glues);
            (toks[1] == "north" ? saw_north : saw_east) = true;
        } else {
            throw Error(Errc::Parse, "unrecognized line '" + line + "'", lineno);
        }
    }
    if (!saw_north || !saw_east) throw Error(Errc::Parse, "missing seed lines", lineno);
    return ts;
}

namespace {
std::ifstream open_in(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw Error(Errc::Io, "cannot open " + path);
    return f;
}
std::ofstream open_out(const std::string& path) {
    std::ofstream f(path);
    if (!f) throw Error(Errc::Io, "cannot write " + path);
    return f;
}
}  // namespace

Pattern load_pattern(const std::string& path) {
    auto f = open_in(path);
    return read_pattern(f);
}
TileSet load_tileset(const std::string& path) {
    auto f = open_in(path);
    return read_tileset(f);
}
void save_pattern(const std::string& path, const Pattern& p) {
    auto f = open_out(path);
    write_pattern(f, p);
}
void save_tileset(const std::string& path, const TileSet& ts) {
    auto f = open_out(path);
    write_tileset(f, ts);
}

}  // namespace pats
