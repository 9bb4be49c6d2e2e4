// Command line front end: constructs, verifies, minimizes and converts
// quower board covers and short covers of F_q^3.
//
// Exit codes: 0 success, 1 verification failed, 2 bad input, 3 solver timeout.

#include "quower/constructions.hpp"
#include "quower/cover_io.hpp"
#include "quower/lifting.hpp"
#include "quower/setcover.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>

namespace {

using namespace quower;

constexpr int kExitOk = 0;
constexpr int kExitInvalidCover = 1;
constexpr int kExitBadInput = 2;
constexpr int kExitTimeout = 3;

std::string producer_tag(const std::string& how) {
    return std::string("quower ") + kToolVersion + " " + how;
}

struct XiArgs {
    int n = 0;
    std::string variant;  // empty: both
    std::string method = "auto";
    double time_limit = 0;
    std::string json_path;
    bool ascii = false;
};

struct SolveOutcome {
    BoardCover cover;
    int optimum = -1;  // -1: not proved
    std::string source;
    SolveResult stats;
    bool timed_out = false;
};

SolveOutcome board_minimum(int n, BoardVariant variant, const std::string& method,
                           double time_limit) {
    SolveOutcome out;
    Bounds b = known_bounds(n, variant);
    if (method == "construct" || (method == "auto" && b.lower == b.upper)) {
        out.cover = best_construction(n, variant);
        out.optimum = b.lower == b.upper ? b.lower : -1;
        out.source = b.lower == b.upper ? "construction (matches the proven bound)"
                                        : "construction (upper bound only)";
        return out;
    }
    if (method != "solve" && method != "auto")
        throw CLI::ValidationError("--method must be auto, construct or solve");
    SolveOptions opts;
    opts.time_limit_sec = time_limit;
    SolveResult r = solve_exact(build_board_instance(n, variant), opts);
    out.stats = r;
    std::vector<BoardPoint> centers;
    for (const auto& label : r.chosen) {
        size_t us = label.find('_');
        centers.push_back({std::stoi(label.substr(0, us)), std::stoi(label.substr(us + 1))});
    }
    out.cover = make_board_cover(n, variant, std::move(centers));
    if (r.status == SolveStatus::Optimal) {
        out.optimum = r.best_size;
        out.source = "solver (proved optimal)";
    } else {
        out.timed_out = true;
        out.source = "solver (time limit hit, bound gap " + std::to_string(r.lower_bound) +
                     ".." + std::to_string(r.best_size) + ")";
    }
    return out;
}

int run_xi(const XiArgs& a) {
    std::vector<BoardVariant> variants;
    if (a.variant.empty()) {
        variants = {BoardVariant::Full, BoardVariant::Punctured};
    } else {
        variants = {variant_from_name(a.variant)};
    }
    int code = kExitOk;
    for (BoardVariant v : variants) {
        SolveOutcome r = board_minimum(a.n, v, a.method, a.time_limit);
        CoverReport rep = is_cover(r.cover);
        if (!rep.covered) throw std::runtime_error("produced cover failed verification");
        std::cout << "board n=" << a.n << " variant=" << variant_name(v)
                  << " size=" << r.cover.centers.size();
        if (r.optimum >= 0) std::cout << " minimum=" << r.optimum;
        std::cout << " [" << r.source << "]";
        if (r.stats.nodes) std::cout << " nodes=" << r.stats.nodes;
        std::cout << "\n";
        std::cout << "centers (1-based):";
        for (const auto& p : r.cover.centers) std::cout << " (" << p.a + 1 << "," << p.b + 1 << ")";
        std::cout << "\n";
        if (a.ascii) std::cout << render_board(r.cover);
        if (!a.json_path.empty()) {
            std::string path = a.json_path;
            if (variants.size() == 2) {
                size_t dot = path.rfind(".json");
                std::string stem = dot == std::string::npos ? path : path.substr(0, dot);
                path = stem + "." + variant_name(v) + ".json";
            }
            save_json_file(path, board_to_json(r.cover, true, producer_tag(r.source)));
            std::cout << "wrote " << path << "\n";
        }
        if (r.timed_out) code = kExitTimeout;
    }
    return code;
}

struct CArgs {
    uint32_t q = 0;
    std::string method = "auto";
    double time_limit = 0;
    std::string json_path;
};

int run_c(const CArgs& a) {
    Field f = field(a.q);  // rejects non prime powers
    const FieldSpec& F = *f;
    ShortCover cover{f, {}};
    std::string source;
    int optimum = -1;
    SolveResult stats;
    bool timed_out = false;

    bool closed_form = a.q == 2 || a.q % 2 == 1;
    if (a.method == "construct" || (a.method == "auto" && closed_form)) {
        if (a.q == 2) {
            cover = make_short_cover(f, {{1, 1, 1}});
            optimum = 1;
            source = "construction (single ball)";
        } else if (a.q == 3) {
            cover = make_short_cover(f, {{0, 0, 1}, {1, 1, 1}, {1, 2, 1}});
            optimum = 3;
            source = "construction (matches the proven value)";
        } else if (a.q % 2 == 1) {
            BoardCover base = best_construction(static_cast<int>(a.q) - 1,
                                                BoardVariant::Punctured);
            cover = lift(base, a.q);
            optimum = static_cast<int>(a.q + 3) / 2;
            source = "board lift (matches the proven value for odd q)";
        } else {
            throw CLI::ValidationError("no closed-form construction for even q > 2");
        }
    } else {
        SolveOptions opts;
        opts.time_limit_sec = a.time_limit;
        SolveResult r = solve_exact(build_windrose_instance(a.q), opts);
        stats = r;
        std::vector<Vec3> centers;
        for (const auto& label : r.chosen) {
            size_t u1 = label.find('_'), u2 = label.find('_', u1 + 1);
            centers.push_back({static_cast<uint32_t>(std::stoul(label.substr(0, u1))),
                               static_cast<uint32_t>(std::stoul(label.substr(u1 + 1, u2 - u1 - 1))),
                               static_cast<uint32_t>(std::stoul(label.substr(u2 + 1)))});
        }
        cover = make_short_cover(f, std::move(centers));
        if (r.status == SolveStatus::Optimal) {
            optimum = r.best_size;
            source = "solver (proved optimal)";
        } else {
            timed_out = true;
            source = "solver (time limit hit, bound gap " + std::to_string(r.lower_bound) + ".." +
                     std::to_string(r.best_size) + ")";
        }
    }

    ShortCoverReport rep = is_short_cover(cover);
    if (!rep.covered) throw std::runtime_error("produced cover failed verification");
    std::cout << "short cover q=" << a.q << " size=" << cover.centers.size();
    if (optimum >= 0) std::cout << " minimum=" << optimum;
    std::cout << " [" << source << "]";
    if (stats.nodes) std::cout << " nodes=" << stats.nodes;
    std::cout << "\n";
    std::cout << "centers (coefficient lists, constant first):\n";
    for (const auto& v : cover.centers) {
        std::cout << "  (";
        for (int t = 0; t < 3; ++t) {
            auto d = F.digits(v[t]);
            for (size_t i = 0; i < d.size(); ++i) std::cout << (i ? " " : "") << d[i];
            std::cout << (t < 2 ? " : " : ")");
        }
        std::cout << "\n";
    }
    if (!a.json_path.empty()) {
        save_json_file(a.json_path, short_to_json(cover, true, producer_tag(source)));
        std::cout << "wrote " << a.json_path << "\n";
    }
    return timed_out ? kExitTimeout : kExitOk;
}

int run_verify(const std::string& in_path) {
    AnyCover c = load_cover_file(in_path);
    if (std::holds_alternative<BoardCover>(c)) {
        const auto& bc = std::get<BoardCover>(c);
        CoverReport r = is_cover(bc);
        std::cout << "board n=" << bc.n << " variant=" << variant_name(bc.variant)
                  << " size=" << bc.centers.size() << (r.covered ? " VALID" : " INVALID") << "\n";
        if (!r.covered) {
            std::cout << "uncovered (1-based):";
            for (const auto& p : r.uncovered) std::cout << " (" << p.a + 1 << "," << p.b + 1 << ")";
            std::cout << "\n";
            return kExitInvalidCover;
        }
        return kExitOk;
    }
    const auto& sc = std::get<ShortCover>(c);
    ShortCoverReport r = is_short_cover(sc);
    std::cout << "short cover q=" << sc.field->q << " size=" << sc.centers.size()
              << (r.covered ? " VALID" : " INVALID") << "\n";
    if (!r.covered) {
        std::cout << "uncovered vectors: " << r.uncovered.size() << "\n";
        return kExitInvalidCover;
    }
    return kExitOk;
}

int run_lift(const std::string& in_path, uint32_t q, const std::string& out_path) {
    AnyCover c = load_cover_file(in_path);
    if (!std::holds_alternative<BoardCover>(c))
        throw std::invalid_argument("lift expects a board cover file");
    const auto& bc = std::get<BoardCover>(c);
    uint32_t use_q = q ? q : static_cast<uint32_t>(bc.n) + 1;
    ShortCover sc = lift(bc, use_q);
    save_json_file(out_path, short_to_json(sc, true, producer_tag("lift")));
    std::cout << "lifted board n=" << bc.n << " to short cover q=" << use_q
              << " size=" << sc.centers.size() << "\n";
    std::cout << "wrote " << out_path << "\n";
    return kExitOk;
}

int run_extract(const std::string& in_path, const std::string& out_path) {
    AnyCover c = load_cover_file(in_path);
    if (!std::holds_alternative<ShortCover>(c))
        throw std::invalid_argument("extract expects a short cover file");
    ShortCover sc = normalize_cover(std::get<ShortCover>(c));
    BoardCover bc = extract(sc);
    save_json_file(out_path, board_to_json(bc, true, producer_tag("extract")));
    std::cout << "extracted board cover n=" << bc.n << " size=" << bc.centers.size() << "\n";
    std::cout << "wrote " << out_path << "\n";
    return kExitOk;
}

int run_lp(int n, const std::string& variant, uint32_t q, const std::string& out_path) {
    SetCoverInstance inst;
    if (n > 0 && q > 0) throw CLI::ValidationError("choose either --n or --q");
    if (n > 0) {
        inst = build_board_instance(n, variant_from_name(variant));
    } else if (q > 0) {
        inst = build_windrose_instance(q);
    } else {
        throw CLI::ValidationError("need --n or --q");
    }
    std::ofstream out(out_path);
    if (!out) throw std::invalid_argument("cannot open " + out_path + " for writing");
    write_lp(inst, out);
    std::cout << "wrote " << out_path << " (" << inst.universe_size << " rows, "
              << inst.candidates.size() << " columns)\n";
    return kExitOk;
}

int run_table(int max_n, uint32_t max_q, double time_limit) {
    std::cout << "minimum quower covers (xi: full board, xi_D: punctured)\n";
    std::cout << "  n  xi  source            xi_D  source\n";
    bool timed_out = false;
    for (int n = 3; n <= max_n; n += 2) {
        std::cout.width(3);
        std::cout << n;
        for (BoardVariant v : {BoardVariant::Full, BoardVariant::Punctured}) {
            SolveOutcome r = board_minimum(n, v, "auto", time_limit);
            std::string src = r.optimum >= 0
                                  ? (r.stats.nodes ? "solver" : "bound")
                                  : "upper bound";
            if (r.timed_out) {
                src = "timeout";
                timed_out = true;
            }
            std::cout << "  " << (r.optimum >= 0 ? r.optimum : (int)r.cover.centers.size());
            std::cout << "  " << src << std::string(src.size() < 16 ? 16 - src.size() : 1, ' ');
        }
        std::cout << "\n";
    }
    std::cout << "\nminimum short covers of F_q^3\n";
    std::cout << "  q  c(q)  source\n";
    for (uint32_t q = 2; q <= max_q; ++q) {
        bool prime_power = true;
        try {
            field(q);
        } catch (const std::domain_error&) {
            prime_power = false;
        }
        if (!prime_power) continue;
        std::cout.width(3);
        std::cout << q;
        if (q == 2 || q % 2 == 1) {
            int c = q == 2 ? 1 : static_cast<int>(q + 3) / 2;
            std::cout << "  " << c << "     bound\n";
            continue;
        }
        SolveOptions opts;
        opts.time_limit_sec = time_limit;
        SolveResult r = solve_exact(build_windrose_instance(q), opts);
        if (r.status == SolveStatus::Optimal) {
            std::cout << "  " << r.best_size << "     solver\n";
        } else {
            std::cout << "  " << r.lower_bound << ".." << r.best_size << " timeout\n";
            timed_out = true;
        }
    }
    return timed_out ? kExitTimeout : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"quower covers of toroidal boards and short covers of F_q^3"};
    app.set_version_flag("--version", std::string("quower ") + quower::kToolVersion);
    app.require_subcommand(1);

    XiArgs xi;
    auto* cmd_xi = app.add_subcommand("xi", "minimum quower cover of the n x n torus");
    cmd_xi->add_option("--n", xi.n, "board size")->required()->check(CLI::PositiveNumber);
    cmd_xi->add_option("--variant", xi.variant, "full or punctured (default: both)");
    cmd_xi->add_option("--method", xi.method, "auto, construct or solve")
        ->check(CLI::IsMember({"auto", "construct", "solve"}));
    cmd_xi->add_option("--time-limit", xi.time_limit, "solver limit in seconds");
    cmd_xi->add_option("--json", xi.json_path, "write the cover as JSON");
    cmd_xi->add_flag("--ascii", xi.ascii, "render the board");

    CArgs c;
    auto* cmd_c = app.add_subcommand("c", "minimum short cover of F_q^3 by extended balls");
    cmd_c->add_option("--q", c.q, "field size (prime power)")->required();
    cmd_c->add_option("--method", c.method, "auto, construct or solve")
        ->check(CLI::IsMember({"auto", "construct", "solve"}));
    cmd_c->add_option("--time-limit", c.time_limit, "solver limit in seconds");
    cmd_c->add_option("--json", c.json_path, "write the cover as JSON");

    std::string in_path, out_path;
    uint32_t lift_q = 0;
    auto* cmd_lift = app.add_subcommand("lift", "board cover (punctured Z_(q-1)) to short cover");
    cmd_lift->add_option("--in", in_path, "board cover JSON")->required();
    cmd_lift->add_option("--q", lift_q, "target field size (default n+1)");
    cmd_lift->add_option("--out", out_path, "output JSON path")->required();

    auto* cmd_extract = app.add_subcommand("extract", "short cover to punctured board cover");
    cmd_extract->add_option("--in", in_path, "short cover JSON")->required();
    cmd_extract->add_option("--out", out_path, "output JSON path")->required();

    auto* cmd_verify = app.add_subcommand("verify", "check a cover file");
    cmd_verify->add_option("--in", in_path, "cover JSON")->required();

    int lp_n = 0;
    uint32_t lp_q = 0;
    std::string lp_variant = "full";
    auto* cmd_lp = app.add_subcommand("lp", "export the covering program as CPLEX LP text");
    cmd_lp->add_option("--n", lp_n, "board size");
    cmd_lp->add_option("--variant", lp_variant, "full or punctured");
    cmd_lp->add_option("--q", lp_q, "field size for the wind-rose instance");
    cmd_lp->add_option("--out", out_path, "output path")->required();

    int table_n = 13;
    uint32_t table_q = 8;
    double table_limit = 0;
    auto* cmd_table = app.add_subcommand("table", "minimum cover sizes for a range of n and q");
    cmd_table->add_option("--max-n", table_n, "largest odd board size (default 13)");
    cmd_table->add_option("--max-q", table_q, "largest field size (default 8)");
    cmd_table->add_option("--time-limit", table_limit, "per-solve limit in seconds");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);  // prints help/version or the parse error
        return rc == 0 ? kExitOk : kExitBadInput;
    }

    try {
        if (*cmd_xi) return run_xi(xi);
        if (*cmd_c) return run_c(c);
        if (*cmd_lift) return run_lift(in_path, lift_q, out_path);
        if (*cmd_extract) return run_extract(in_path, out_path);
        if (*cmd_verify) return run_verify(in_path);
        if (*cmd_lp) return run_lp(lp_n, lp_variant, lp_q, out_path);
        if (*cmd_table) return run_table(table_n, table_q, table_limit);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadInput;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadInput;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadInput;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitBadInput;
    }
    return kExitBadInput;
}
