#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <pats/cnf.hpp>
#include <pats/errors.hpp>

#include <random>
#include <sstream>

using namespace pats;

namespace {

std::optional<VarAssignment> brute_force(const Cnf3& f) {
    size_t n = f.variables.size();
    for (unsigned long long bits = 0; bits < (1ull << n); ++bits) {
        VarAssignment a;
        for (size_t i = 0; i < n; ++i) a[f.variables[i]] = (bits >> i) & 1;
        if (eval(f, a)) return a;
    }
    return std::nullopt;
}

Cnf3 random_formula(std::mt19937& rng, int nvars, int nclauses) {
    std::ostringstream os;
    os << "p cnf " << nvars << " " << nclauses << "\n";
    for (int c = 0; c < nclauses; ++c) {
        for (int j = 0; j < 3; ++j) {
            int v = static_cast<int>(rng() % nvars) + 1;
            os << (rng() % 2 ? v : -v) << " ";
        }
        os << "0\n";
    }
    return parse_dimacs(os.str());
}

}  // namespace

TEST_CASE("dimacs parsing") {
    Cnf3 f = parse_dimacs("c comment\np cnf 3 2\n1 -2 3 0\n-1 2 -3 0\n");
    CHECK(f.variables == std::vector<Variable>{"x1", "x2", "x3"});
    REQUIRE(f.clauses.size() == 2);
    CHECK(f.clauses[0][0] == Literal{"x1", false});
    CHECK(f.clauses[0][1] == Literal{"x2", true});
    CHECK(f.clauses[1][2] == Literal{"x3", true});
}

TEST_CASE("short clauses are padded by repeating the last literal") {
    Cnf3 f = parse_dimacs("p cnf 2 2\n1 0\n-1 2 0\n");
    CHECK(f.clauses[0] == Clause3{Literal{"x1", false}, {"x1", false}, {"x1", false}});
    CHECK(f.clauses[1] == Clause3{Literal{"x1", true}, {"x2", false}, {"x2", false}});
}

TEST_CASE("missing final zero is tolerated") {
    Cnf3 f = parse_dimacs("p cnf 1 1\n1 1 1");
    CHECK(f.clauses.size() == 1);
}

TEST_CASE("parse errors") {
    auto code_of = [](const std::string& text) {
        try {
            parse_dimacs(text);
        } catch (const Error& e) {
            return e.code;
        }
        return Errc::Io;  // sentinel: no throw
    };
    CHECK(code_of("p cnf 4 1\n1 2 3 4 0\n") == Errc::Arity);
    CHECK(code_of("") == Errc::Parse);
    CHECK(code_of("p cnf x y\n") == Errc::Parse);
    CHECK(code_of("1 2 3 0\n") == Errc::Parse);  // clause before header
}

TEST_CASE("eval") {
    Cnf3 f = parse_dimacs("p cnf 2 2\n1 2 2 0\n-1 -2 -2 0\n");  // x1 xor-ish
    CHECK(eval(f, {{"x1", 1}, {"x2", 0}}));
    CHECK(eval(f, {{"x1", 0}, {"x2", 1}}));
    CHECK_FALSE(eval(f, {{"x1", 0}, {"x2", 0}}));
    CHECK_FALSE(eval(f, {{"x1", 1}, {"x2", 1}}));
    try {
        eval(f, {{"x1", 1}});
        FAIL("expected MissingVariable");
    } catch (const Error& e) {
        CHECK(e.code == Errc::MissingVariable);
    }
}

TEST_CASE("solve_sat on fixed formulas") {
    auto sat = solve_sat(parse_dimacs("p cnf 1 1\n1 1 1 0\n"));
    REQUIRE(sat.has_value());
    CHECK(sat->at("x1") == 1);

    // x and not x, both forced via unit clauses.
    CHECK_FALSE(solve_sat(parse_dimacs("p cnf 1 2\n1 0\n-1 0\n")).has_value());

    // Pigeonhole-ish contradiction over two variables.
    CHECK_FALSE(solve_sat(parse_dimacs("p cnf 2 4\n1 2 2 0\n1 -2 -2 0\n-1 2 2 0\n-1 -2 -2 0\n"))
                    .has_value());
}

TEST_CASE("solve_sat agrees with truth-table enumeration") {
    std::mt19937 rng(4242);
    for (int trial = 0; trial < 120; ++trial) {
        int nvars = 1 + static_cast<int>(rng() % 8);
        int nclauses = 1 + static_cast<int>(rng() % 12);
        Cnf3 f = random_formula(rng, nvars, nclauses);
        auto expect = brute_force(f);
        auto got = solve_sat(f);
        CHECK(got.has_value() == expect.has_value());
        if (got) CHECK(eval(f, *got));
    }
}

TEST_CASE("variable guard") {
    std::ostringstream os;
    os << "p cnf 30 30\n";
    for (int v = 1; v <= 30; ++v) os << v << " " << v << " " << v << " 0\n";
    Cnf3 f = parse_dimacs(os.str());
    try {
        solve_sat(f);
        FAIL("expected TooLarge");
    } catch (const Error& e) {
        CHECK(e.code == Errc::TooLarge);
    }
    CHECK(solve_sat(f, 30).has_value());
}
