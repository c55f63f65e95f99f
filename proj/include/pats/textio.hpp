#pragma once

#include <iosfwd>
#include <string>

#include "pats/pattern.hpp"
#include "pats/tiles.hpp"

namespace pats {

// Token escaping shared by all text formats: '%', '=', and whitespace become
// %xx (lowercase hex) so tokens can hold arbitrary strings.
std::string escape_token(const std::string& s);
std::string unescape_token(const std::string& s);

// `pattern <width> <height>` then height lines, top row first.
void write_pattern(std::ostream& os, const Pattern& p);
Pattern read_pattern(std::istream& is);

// `tileset`, then `tile <color> N=.. E=.. S=.. W=..` lines, then
// `seed north ...` and `seed east ...` (east bottom-to-top).
void write_tileset(std::ostream& os, const TileSet& ts);
TileSet read_tileset(std::istream& is);

// Convenience wrappers; throw Error{Io} on filesystem failure.
Pattern load_pattern(const std::string& path);
TileSet load_tileset(const std::string& path);
void save_pattern(const std::string& path, const Pattern& p);
void save_tileset(const std::string& path, const TileSet& ts);

}  // namespace pats
