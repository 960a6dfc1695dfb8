#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>

#include "kcx/template.hpp"

namespace kcx {

enum class Outcome { sat, unsat, resource_limit };

struct SolverStats {
    std::uint64_t decisions = 0;
    std::uint64_t backtracks = 0;
    double elapsed_ms = 0.0;

    SolverStats& operator+=(const SolverStats& other);
};

struct SolveResult {
    Outcome outcome = Outcome::unsat;
    std::optional<Colouring> colouring;  // set iff outcome == sat
    SolverStats stats;

    bool sat() const { return outcome == Outcome::sat; }
    bool unsat() const { return outcome == Outcome::unsat; }
};

// Zero means unlimited.
struct SolverBudget {
    std::uint64_t max_decisions = 0;
    std::chrono::milliseconds wall_clock{0};
};

// Complete search for a colouring of g that respects t. Backtracking over
// V \ S with forward checking, smallest candidate set first (then larger
// degree, then smaller id), colours ascending, and interchangeable unused
// colours tried once. Nodes where some clique of free vertices cannot get
// distinct candidate colours are cut. Throws MalformedTemplate for
// malformed input.
SolveResult extend(const Graph& g, const Template& t, const Palette& palette, const SolverBudget& budget = {});

struct BruteForceCap {
    std::size_t max_vertices = 8;
    std::uint64_t max_assignments = 20'000'000;
};

// Enumerates every assignment of candidate colours to V \ S in id order and
// returns the first respecting one. Throws std::length_error past the cap.
SolveResult brute_force_extend(const Graph& g, const Template& t, const Palette& palette, const BruteForceCap& cap = {});

enum class WitnessStatus { valid, invalid, resource_limit };

struct WitnessCheck {
    WitnessStatus status = WitnessStatus::invalid;
    std::string reason;  // empty when valid
    SolveResult solve;   // default-constructed if the solver was not reached
};

// deg(T) <= 2k^2, |F(v)| <= 2k off S, and no respecting colouring exists.
WitnessCheck is_valid_witness(const Graph& g, const Template& t, int k, const Palette& palette,
                              const SolverBudget& budget = {});

std::string to_string(Outcome outcome);

}  // namespace kcx
