#pragma once

// Bracket-allocation heuristic: equal-spacing initial allocation, elimination
// of under-filled brackets, greedy adjustment to the target count, and even
// in-bracket placement.

#include "floatopt/layout.hpp"

namespace floatopt {

struct Allocation {
    std::vector<std::size_t> counts;  // floating locations per bracket

    std::size_t total() const;
};

// Real-valued allocation before integerization; values sum to the number of
// floating locations by construction.
struct RawAllocation {
    std::vector<double> values;
};

// Even spacing of `count` points in a bracket of the given area: the gap
// between neighbours and between the outermost points and the walls.
double spacing(double area, std::size_t count);

// Equal-spacing allocation: every bracket gets (n + M) * A_i / Ls - 1, which
// makes all implied spacings equal to Ls / (n + M).
RawAllocation initial_allocation_raw(const BracketSet& brackets, std::size_t num_floating);

// Brackets whose raw value is below 1 start at zero (they stay eligible for
// increments in adjust); the rest are rounded half-up.
Allocation eliminate_and_round(const RawAllocation& raw);

// Repairs the total to num_floating one point at a time: increments go to the
// bracket whose spacing after the increment is largest, decrements come from
// the bracket whose current spacing is smallest. Ties break to the lowest
// bracket index.
Allocation adjust(Allocation allocation, const BracketSet& brackets, std::size_t num_floating);

// Evenly spaces each bracket's count inside its walls; result is ascending
// whenever all used brackets have positive area.
std::vector<Track> place(const BracketSet& brackets, const Allocation& allocation);

struct HeuristicResult {
    Placement placement;
    Allocation allocation;
};

// Full pipeline: partition, initial allocation, eliminate/round, adjust,
// place, then evaluate both objective modes.
HeuristicResult optimize(const Instance& instance);

}  // namespace floatopt
