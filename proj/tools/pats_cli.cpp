#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "pats/assembly.hpp"
#include "pats/cnf.hpp"
#include "pats/errors.hpp"
#include "pats/render.hpp"
#include "pats/satreduce.hpp"
#include "pats/solver.hpp"
#include "pats/superreduce.hpp"
#include "pats/textio.hpp"

using namespace pats;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw Error(Errc::Io, "cannot open " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

Cnf3 load_cnf(const std::string& path) { return parse_dimacs(slurp(path)); }

VarAssignment load_assignment(const std::string& path) {
    VarAssignment a;
    std::ifstream f(path);
    if (!f) throw Error(Errc::Io, "cannot open " + path);
    std::string tok;
    int lineno = 0;
    std::string line;
    while (std::getline(f, line)) {
        ++lineno;
        std::istringstream ls(line);
        while (ls >> tok) {
            auto eq = tok.find('=');
            if (eq == std::string::npos || (tok.substr(eq + 1) != "0" && tok.substr(eq + 1) != "1"))
                throw Error(Errc::Parse, "expected '<var>=0|1', got '" + tok + "'", lineno);
            a[tok.substr(0, eq)] = tok[eq + 1] == '1';
        }
    }
    return a;
}

void print_assignment(const VarAssignment& a) {
    for (const auto& [v, val] : a) std::cout << v << "=" << val << "\n";
}

bool is_qdesc(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw Error(Errc::Io, "cannot open " + path);
    std::string word;
    f >> word;
    return word == "qdesc";
}

Pattern load_any_pattern(const std::string& path, bool* was_qdesc = nullptr) {
    bool qd = is_qdesc(path);
    if (was_qdesc) *was_qdesc = qd;
    if (qd) return superreduce::load_qdesc(path).q;
    return load_pattern(path);
}

// Toy source pattern for blowup smoke tests: all cells distinct colors, so
// every border color is unique.
Pattern toy_pattern(int w, int h) {
    std::vector<Color> cells;
    for (int i = 0; i < w * h; ++i) cells.push_back("t" + std::to_string(i + 1));
    return Pattern::dense(w, h, std::move(cells));
}

int run(int argc, char** argv) {
    CLI::App app{"rectilinear tile self-assembly toolkit: SAT-to-pattern reductions, witness"
                 " tile sets, streaming verification, and exact pattern solvers"};
    app.require_subcommand(1);

    // --- sat2pats ---
    auto* sat2pats = app.add_subcommand("sat2pats", "compile a 3-CNF formula into a pattern");
    std::string in_path, out_path, atlas_path;
    sat2pats->add_option("cnf", in_path)->required();
    sat2pats->add_option("-o,--output", out_path)->required();
    sat2pats->add_option("--atlas", atlas_path);
    sat2pats->callback([&] {
        auto inst = satreduce::build_pattern(load_cnf(in_path));
        save_pattern(out_path, inst.pattern);
        if (!atlas_path.empty()) {
            std::ofstream f(atlas_path);
            if (!f) throw Error(Errc::Io, "cannot write " + atlas_path);
            for (const auto& [role, color] : inst.color_atlas)
                f << escape_token(role) << " -> " << escape_token(color) << "\n";
        }
        std::cout << "pattern " << inst.pattern.width() << "x" << inst.pattern.height()
                  << " colors " << inst.pattern.palette().size() << " m " << inst.m << "\n";
    });

    // --- witness-pats ---
    auto* wpats = app.add_subcommand("witness-pats",
                                     "tile set assembling a formula's pattern, from a satisfying"
                                     " assignment (searched for by default)");
    std::string assign_path;
    bool do_solve = false;
    wpats->add_option("cnf", in_path)->required();
    wpats->add_option("--assignment", assign_path);
    wpats->add_flag("--solve", do_solve, "find an assignment with the SAT oracle (default)");
    wpats->add_option("-o,--output", out_path)->required();
    wpats->callback([&] {
        Cnf3 f = load_cnf(in_path);
        VarAssignment a;
        if (!assign_path.empty()) {
            a = load_assignment(assign_path);
        } else {
            auto r = solve_sat(f);
            if (!r) {
                std::cout << "unsat\n";
                exit(1);
            }
            a = *r;
        }
        save_tileset(out_path, satreduce::witness_tileset(f, a));
    });

    // --- extract-assignment ---
    auto* extract = app.add_subcommand("extract-assignment",
                                       "read the variable assignment off a tile set");
    std::string ts_path;
    extract->add_option("tileset", ts_path)->required();
    extract->add_option("cnf", in_path)->required();
    extract->callback([&] {
        Cnf3 f = load_cnf(in_path);
        print_assignment(satreduce::extract_assignment(load_tileset(ts_path),
                                                       satreduce::build_pattern(f)));
    });

    // --- assemble ---
    auto* asmb = app.add_subcommand("assemble", "run the deterministic assembly to completion");
    int width = 0, height = 0;
    asmb->add_option("tileset", ts_path)->required();
    asmb->add_option("--width", width)->required();
    asmb->add_option("--height", height)->required();
    asmb->add_option("-o,--output", out_path)->required();
    asmb->callback([&] {
        auto r = assemble(load_tileset(ts_path), width, height);
        if (auto* err = std::get_if<AssemblyError>(&r)) {
            std::cout << err->message() << "\n";
            exit(1);
        }
        save_pattern(out_path, pattern_of(std::get<Assignment>(r)));
    });

    // --- verify ---
    auto* ver = app.add_subcommand("verify", "check that a tile set assembles a pattern");
    std::string pat_path;
    bool stream = false;
    ver->add_option("tileset", ts_path)->required();
    ver->add_option("pattern", pat_path)->required();
    ver->add_flag("--stream", stream, "always use the O(width) streaming check (default)");
    ver->callback([&] {
        (void)stream;  // both paths stream; the flag documents intent
        Pattern p = load_any_pattern(pat_path);
        if (auto err = verify_stream(load_tileset(ts_path), p)) {
            std::cout << "FAIL: " << err->message() << "\n";
            exit(1);
        }
        std::cout << "OK " << p.width() << "x" << p.height() << "\n";
    });

    // --- pats2mbpats ---
    auto* blow = app.add_subcommand("pats2mbpats", "blow a pattern up into its 3-color form");
    std::string dense_path, strict_path;
    bool force = false;
    blow->add_option("pattern", pat_path)->required();
    blow->add_option("-o,--output", out_path)->required();
    blow->add_option("--dense", dense_path, "also write the blowup as a dense pattern file");
    blow->add_option("--strict-membership", strict_path,
                     "require the pattern to be the reduction of this formula");
    blow->add_flag("--force", force, "allow huge dense output");
    blow->callback([&] {
        Pattern p = load_pattern(pat_path);
        if (!strict_path.empty()) {
            Cnf3 f = load_cnf(strict_path);
            superreduce::validate_source(p, &f);
        }
        auto inst = superreduce::build_q(p);
        superreduce::save_qdesc(out_path, inst);
        std::cout << "m_b=" << inst.m_b << " m_w=" << inst.m_w << " m_g=" << inst.m_g
                  << " ell=" << inst.ell << " dims=" << inst.q.width() << "x" << inst.q.height()
                  << "\n";
        if (!dense_path.empty()) {
            if (inst.q.area() > 1'000'000 && !force)
                throw Error(Errc::TooLarge, "dense blowup has " + std::to_string(inst.q.area()) +
                                                " cells; pass --force to write it anyway");
            save_pattern(dense_path, inst.q);
        }
    });

    // --- witness-mbpats ---
    auto* wtheta = app.add_subcommand("witness-mbpats",
                                      "3-color tile set assembling the blowup of a pattern");
    wtheta->add_option("tileset", ts_path)->required();
    wtheta->add_option("pattern", pat_path)->required();
    wtheta->add_option("-o,--output", out_path)->required();
    wtheta->callback([&] {
        save_tileset(out_path,
                     superreduce::witness_theta(load_tileset(ts_path), load_pattern(pat_path)));
    });

    // --- decode-supertiles ---
    auto* dec = app.add_subcommand("decode-supertiles",
                                   "recover a source tile set from a blowup tile set");
    std::string qdesc_path;
    dec->add_option("tileset", ts_path)->required();
    dec->add_option("qdesc", qdesc_path)->required();
    dec->add_option("-o,--output", out_path)->required();
    dec->callback([&] {
        save_tileset(out_path, superreduce::decode_supertiles(load_tileset(ts_path),
                                                              superreduce::load_qdesc(qdesc_path)));
    });

    // --- solve-min ---
    auto* smin = app.add_subcommand("solve-min", "minimal tile count by exhaustive search");
    long long cap = 0, node_limit = 0;
    smin->add_option("pattern", pat_path)->required();
    smin->add_option("--cap", cap, "largest tile count to try (default: pattern area)");
    smin->add_option("--node-limit", node_limit);
    smin->add_option("-o,--output", out_path, "write the minimal tile set");
    smin->callback([&] {
        Pattern p = load_pattern(pat_path);
        auto r = solver::minimize(p, cap > 0 ? cap : p.area(),
                                  node_limit > 0 ? std::optional(node_limit) : std::nullopt);
        if (r.status == solver::Status::Found) {
            std::cout << "min_tiles=" << r.tileset->tiles.size() << " nodes=" << r.nodes_explored
                      << "\n";
            if (!out_path.empty()) save_tileset(out_path, *r.tileset);
        } else {
            std::cout << (r.status == solver::Status::Infeasible ? "infeasible" : "budget-exceeded")
                      << " nodes=" << r.nodes_explored << "\n";
            exit(1);
        }
    });

    // --- solve-bounded ---
    auto* sb = app.add_subcommand("solve-bounded", "decide assembly under per-color tile bounds");
    std::vector<std::string> bound_args;
    sb->add_option("pattern", pat_path)->required();
    sb->add_option("--bound", bound_args, "<color>=<max>, repeatable")->required();
    sb->add_option("--node-limit", node_limit);
    sb->add_option("-o,--output", out_path);
    sb->callback([&] {
        std::map<Color, long long> bounds;
        for (const auto& b : bound_args) {
            auto eq = b.rfind('=');
            if (eq == std::string::npos) throw Error(Errc::Parse, "expected <color>=<max>");
            bounds[unescape_token(b.substr(0, eq))] = std::stoll(b.substr(eq + 1));
        }
        auto r = solver::solve_mbpats(load_pattern(pat_path), bounds,
                                      node_limit > 0 ? std::optional(node_limit) : std::nullopt);
        if (r.status == solver::Status::Found) {
            std::cout << "found tiles=" << r.tileset->tiles.size() << " nodes=" << r.nodes_explored
                      << "\n";
            if (!out_path.empty()) save_tileset(out_path, *r.tileset);
        } else {
            std::cout << (r.status == solver::Status::Infeasible ? "infeasible" : "budget-exceeded")
                      << " nodes=" << r.nodes_explored << "\n";
            exit(1);
        }
    });

    // --- roundtrip ---
    auto* rt = app.add_subcommand("roundtrip",
                                  "full chain: SAT -> pattern -> witness -> verify -> extract,"
                                  " then the blowup chain");
    bool full = false;
    rt->add_option("cnf", in_path)->required();
    rt->add_flag("--full", full,
                 "run the blowup chain on the formula's own pattern (large; streaming)"
                 " instead of a toy source");
    rt->callback([&] {
        Cnf3 f = load_cnf(in_path);
        auto sat = solve_sat(f);
        if (!sat) {
            std::cout << "unsat\n";
            exit(1);
        }
        auto inst = satreduce::build_pattern(f);
        TileSet t = satreduce::witness_tileset(f, *sat);
        if (auto err = verify_stream(t, inst.pattern))
            throw Error(Errc::Structure, "witness failed verification: " + err->message());
        if (satreduce::extract_assignment(t, inst) != *sat)
            throw Error(Errc::Structure, "extracted assignment differs");
        std::cout << "sat chain ok: m=" << t.tiles.size() << " pattern "
                  << inst.pattern.width() << "x" << inst.pattern.height() << "\n";

        Pattern src = full ? inst.pattern : toy_pattern(4, 4);
        TileSet srcT = full ? t : coordinate_tileset(src);
        auto q = superreduce::build_q(src);
        TileSet theta = superreduce::witness_theta(srcT, src);
        if (auto err = verify_stream(theta, q.q))
            throw Error(Errc::Structure, "blowup witness failed verification: " + err->message());
        TileSet back = superreduce::decode_supertiles(theta, q);
        if (auto err = verify_stream(back, src))
            throw Error(Errc::Structure, "decoded tile set failed verification: " + err->message());
        if (!glue_isomorphic(back, superreduce::normalize_border(srcT, src), false))
            throw Error(Errc::Structure, "decoded tile set is not the source up to renaming");
        std::cout << "blowup chain ok: q " << q.q.width() << "x" << q.q.height() << " theta "
                  << theta.tiles.size() << " decoded " << back.tiles.size() << "\n";
    });

    // --- render ---
    auto* ren = app.add_subcommand("render", "raster or vector image of a pattern");
    std::string format = "ppm";
    int cell = 0;
    ren->add_option("pattern", pat_path)->required();
    ren->add_option("-o,--output", out_path)->required();
    ren->add_option("--format", format)->check(CLI::IsMember({"ppm", "svg"}));
    ren->add_option("--cell", cell, "cell size in pixels");
    ren->add_flag("--force", force, "allow huge rasters");
    ren->callback([&] {
        Pattern p = load_any_pattern(pat_path);
        if (p.area() > 100'000'000 && !force)
            throw Error(Errc::TooLarge, "pattern has " + std::to_string(p.area()) +
                                            " cells; pass --force to render anyway");
        auto palette = default_palette(p);
        std::ofstream fs(out_path, std::ios::binary);
        if (!fs) throw Error(Errc::Io, "cannot write " + out_path);
        if (format == "ppm")
            render_ppm(fs, p, palette, cell > 0 ? cell : 1);
        else
            render_svg(fs, p, palette, cell > 0 ? cell : 8);
    });

    // --- sat-solve ---
    auto* ss = app.add_subcommand("sat-solve", "exact SAT oracle");
    ss->add_option("cnf", in_path)->required();
    ss->callback([&] {
        auto r = solve_sat(load_cnf(in_path));
        if (!r) {
            std::cout << "unsat\n";
            exit(1);
        }
        print_assignment(*r);
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);  // prints help/usage
        return rc == 0 ? 0 : 2;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        switch (e.code) {
            case Errc::Parse:
            case Errc::Arity:
            case Errc::Io:
            case Errc::Range:
            case Errc::TooLarge:
                return 2;
            default:
                return 1;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
