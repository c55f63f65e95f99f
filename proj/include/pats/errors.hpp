#pragma once

#include <stdexcept>
#include <string>

namespace pats {

enum class Errc {
    Parse,                   // malformed input text
    Arity,                   // clause with more than three literals
    MissingVariable,         // assignment not total on the formula's variables
    TooLarge,                // instance exceeds a guard
    UnsatisfyingAssignment,  // witness requested for a falsifying assignment
    AmbiguousColor,          // a color that must have exactly one tile doesn't
    Precondition,            // structural precondition violated
    Structure,               // tile set shape doesn't match the expected form
    MalformedSupertile,      // inconsistent color counters
    Range,                   // index out of range
    Io,                      // file could not be read/written
};

struct Error : std::runtime_error {
    Errc code;
    int line;  // 1-based input line for parse errors, 0 otherwise

    Error(Errc c, const std::string& msg, int ln = 0)
        : std::runtime_error(ln ? msg + " (line " + std::to_string(ln) + ")" : msg),
          code(c),
          line(ln) {}
};

}  // namespace pats
