#include "pats/cnf.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "pats/errors.hpp"

namespace pats {

Cnf3 parse_dimacs(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    int lineno = 0;
    Cnf3 f;
    std::set<std::string> seen;
    bool saw_header = false;
    std::vector<Literal> current;
    auto flush_clause = [&](int ln) {
        if (current.empty()) throw Error(Errc::Parse, "empty clause", ln);
        if (current.size() > 3)
            throw Error(Errc::Arity,
                        "clause with " + std::to_string(current.size()) + " literals", ln);
        while (current.size() < 3) current.push_back(current.back());
        f.clauses.push_back({current[0], current[1], current[2]});
        current.clear();
    };
    while (std::getline(is, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok)) continue;
        if (tok == "c" || tok[0] == 'c') continue;
        if (tok == "p") {
            std::string fmt;
            long long nv, nc;
            if (!(ls >> fmt >> nv >> nc) || fmt != "cnf")
                throw Error(Errc::Parse, "expected 'p cnf <vars> <clauses>'", lineno);
            saw_header = true;
            continue;
        }
        if (!saw_header) throw Error(Errc::Parse, "clause before 'p cnf' header", lineno);
        ls.clear();
        ls.seekg(0);
        long long v;
        while (ls >> v) {
            if (v == 0) {
                flush_clause(lineno);
                continue;
            }
            std::string name = "x" + std::to_string(v < 0 ? -v : v);
            if (seen.insert(name).second) f.variables.push_back(name);
            current.push_back({name, v < 0});
        }
        if (!ls.eof()) throw Error(Errc::Parse, "non-integer token in clause", lineno);
    }
    if (!saw_header) throw Error(Errc::Parse, "missing 'p cnf' header");
    if (!current.empty()) flush_clause(lineno);  // tolerate a missing final 0
    return f;
}

bool eval(const Cnf3& f, const VarAssignment& a) {
    for (const auto& v : f.variables)
        if (!a.count(v)) throw Error(Errc::MissingVariable, "assignment lacks " + v);
    for (const auto& cl : f.clauses) {
        bool sat = false;
        for (const auto& lit : cl)
            if (a.at(lit.var) == (lit.neg ? 0 : 1)) sat = true;
        if (!sat) return false;
    }
    return true;
}

namespace {

// Plain DPLL over literal-index clauses: unit propagation plus first-unset
// branching.
bool dpll(std::vector<std::vector<int>> clauses, std::vector<int>& val, int nvars) {
    for (;;) {
        bool changed = false;
        for (auto& cl : clauses) {
            int unset = 0, last = 0;
            bool sat = false;
            for (int lit : cl) {
                int var = std::abs(lit) - 1;
                if (val[var] == -1) {
                    ++unset;
                    last = lit;
                } else if ((lit > 0) == (val[var] == 1)) {
                    sat = true;
                }
            }
            if (sat) continue;
            if (unset == 0) return false;
            if (unset == 1) {
                val[std::abs(last) - 1] = last > 0 ? 1 : 0;
                changed = true;
            }
        }
        if (!changed) break;
    }
    int branch = -1;
    for (int i = 0; i < nvars; ++i)
        if (val[i] == -1) {
            branch = i;
            break;
        }
    if (branch == -1) {
        for (const auto& cl : clauses) {
            bool sat = false;
            for (int lit : cl)
                if ((lit > 0) == (val[std::abs(lit) - 1] == 1)) sat = true;
            if (!sat) return false;
        }
        return true;
    }
    for (int b : {1, 0}) {
        auto saved = val;
        val[branch] = b;
        if (dpll(clauses, val, nvars)) return true;
        val = saved;
    }
    return false;
}

}  // namespace

std::optional<VarAssignment> solve_sat(const Cnf3& f, int max_vars) {
    if (static_cast<int>(f.variables.size()) > max_vars)
        throw Error(Errc::TooLarge, "formula has " + std::to_string(f.variables.size()) +
                                        " variables, guard is " + std::to_string(max_vars));
    std::map<Variable, int> index;
    for (const auto& v : f.variables) index.emplace(v, static_cast<int>(index.size()));
    std::vector<std::vector<int>> clauses;
    for (const auto& cl : f.clauses) {
        std::vector<int> c;
        for (const auto& lit : cl) c.push_back((index[lit.var] + 1) * (lit.neg ? -1 : 1));
        clauses.push_back(std::move(c));
    }
    std::vector<int> val(f.variables.size(), -1);
    if (!dpll(std::move(clauses), val, static_cast<int>(f.variables.size())))
        return std::nullopt;
    VarAssignment a;
    for (const auto& [v, i] : index) a[v] = val[i] == -1 ? 0 : val[i];
    return a;
}

}  // namespace pats
