#pragma once

#include "quower/board.hpp"

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace quower {

struct Candidate {
    std::string label;
    std::vector<int> elements;  // sorted, unique, in [0, universe_size)
};

// Where an instance came from; drives symmetry breaking and survives an LP
// round trip as a structured comment.
struct InstanceOrigin {
    enum class Kind { Board, WindRose, Custom };
    Kind kind = Kind::Custom;
    int n = 0;                                     // Board
    BoardVariant variant = BoardVariant::Full;     // Board
    uint32_t q = 0;                                // WindRose
    std::string text() const;
    static InstanceOrigin parse(const std::string& s);
};

struct SetCoverInstance {
    int universe_size = 0;
    std::vector<std::string> element_labels;
    std::vector<Candidate> candidates;
    InstanceOrigin origin;
};

// Validates shape and feasibility (the union of candidates must cover the
// universe); sorts element lists. Throws std::invalid_argument.
SetCoverInstance make_instance(int universe_size, std::vector<std::string> element_labels,
                               std::vector<Candidate> candidates, InstanceOrigin origin = {});

// Elements are the board cells of the variant, candidates the n^2 quowers,
// labeled "a_b" in row-major order.
SetCoverInstance build_board_instance(int n, BoardVariant variant);

// Elements are the q^2+q+1 projective points, candidates their wind roses,
// labeled "x_y_z" by normalized coordinate ranks.
SetCoverInstance build_windrose_instance(uint32_t q);

enum class SolveStatus { Optimal, FeasibleOnly };

struct SolveOptions {
    // Translation symmetry breaking for board instances: cover full boards
    // through (0,0), punctured boards through column 0. Ignored elsewhere.
    bool symmetry = true;
    double time_limit_sec = 0.0;  // 0 = no limit
};

struct SolveResult {
    SolveStatus status = SolveStatus::Optimal;
    int best_size = 0;
    std::vector<std::string> chosen;  // candidate labels, sorted
    int lower_bound = 0;              // proven; equals best_size when Optimal
    uint64_t nodes = 0;
    double seconds = 0.0;
};

// Largest-gain-first greedy; deterministic (ties by candidate index).
SolveResult solve_greedy(const SetCoverInstance& inst);

// Exact branch and bound: branches on a least-covered element, prunes with
// ceil(uncovered / best remaining candidate size), seeds with the greedy.
SolveResult solve_exact(const SetCoverInstance& inst, const SolveOptions& opts = {});

// CPLEX LP text of the covering program: minimize the number of chosen
// candidates subject to one >= 1 row per element, all variables binary.
void write_lp(const SetCoverInstance& inst, std::ostream& out);
std::string write_lp(const SetCoverInstance& inst);

// Parses LP text this library wrote (tolerant of extra whitespace and line
// wrapping). Throws std::invalid_argument on malformed input.
SetCoverInstance read_lp(std::istream& in);
SetCoverInstance read_lp(const std::string& text);

}  // namespace quower
