#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace pats {

using Variable = std::string;

struct Literal {
    Variable var;
    bool neg = false;
    bool operator==(const Literal&) const = default;
};

using Clause3 = std::array<Literal, 3>;

struct Cnf3 {
    std::vector<Variable> variables;  // in order of first appearance
    std::vector<Clause3> clauses;
};

using VarAssignment = std::map<Variable, int>;  // values in {0,1}

// DIMACS CNF. Clauses with fewer than three literals are padded by repeating
// the last literal; longer clauses are rejected (Errc::Arity). Variables are
// named x<i> after their DIMACS index.
Cnf3 parse_dimacs(const std::string& text);

// Throws Errc::MissingVariable if f is not total on F's variables.
bool eval(const Cnf3& f, const VarAssignment& a);

// Exact DPLL; nullopt = unsatisfiable. Throws Errc::TooLarge beyond the
// variable guard.
std::optional<VarAssignment> solve_sat(const Cnf3& f, int max_vars = 26);

}  // namespace pats
