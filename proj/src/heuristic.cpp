#include "floatopt/heuristic.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace floatopt {

std::size_t Allocation::total() const {
    return std::accumulate(counts.begin(), counts.end(), std::size_t{0});
}

double spacing(double area, std::size_t count) {
    if (!(area >= 0.0)) throw std::invalid_argument("bracket area must be nonnegative");
    return area / static_cast<double>(count + 1);
}

RawAllocation initial_allocation_raw(const BracketSet& brackets, std::size_t num_floating) {
    const double total_length = brackets.total_length();
    if (!(total_length > 0.0)) throw std::invalid_argument("degenerate boundary");
    const double per_track =
        static_cast<double>(num_floating + brackets.size()) / total_length;
    RawAllocation raw;
    raw.values.reserve(brackets.size());
    for (const Bracket& b : brackets.brackets()) raw.values.push_back(per_track * b.area() - 1.0);
    return raw;
}

Allocation eliminate_and_round(const RawAllocation& raw) {
    Allocation out;
    out.counts.reserve(raw.values.size());
    for (double v : raw.values) {
        // Values below 1 are dropped from the initial assignment; the rest
        // round half-up.
        out.counts.push_back(v < 1.0 ? 0 : static_cast<std::size_t>(std::floor(v + 0.5)));
    }
    return out;
}

Allocation adjust(Allocation allocation, const BracketSet& brackets, std::size_t num_floating) {
    if (allocation.counts.size() != brackets.size())
        throw std::invalid_argument("allocation must have one count per bracket");
    std::size_t total = allocation.total();
    // Each pass moves the total by exactly one toward the target, so the
    // loop runs |total - num_floating| times.
    while (total < num_floating) {
        std::size_t best = 0;
        double best_spacing = -1.0;
        for (std::size_t m = 0; m < brackets.size(); ++m) {
            const double s = spacing(brackets[m].area(), allocation.counts[m] + 1);
            if (s > best_spacing) {
                best_spacing = s;
                best = m;
            }
        }
        ++allocation.counts[best];
        ++total;
    }
    while (total > num_floating) {
        bool found = false;
        std::size_t best = 0;
        double best_spacing = 0.0;
        for (std::size_t m = 0; m < brackets.size(); ++m) {
            if (allocation.counts[m] == 0) continue;
            const double s = spacing(brackets[m].area(), allocation.counts[m]);
            if (!found || s < best_spacing) {
                found = true;
                best_spacing = s;
                best = m;
            }
        }
        --allocation.counts[best];
        --total;
    }
    return allocation;
}

std::vector<Track> place(const BracketSet& brackets, const Allocation& allocation) {
    if (allocation.counts.size() != brackets.size())
        throw std::invalid_argument("allocation must have one count per bracket");
    std::vector<Track> positions;
    positions.reserve(allocation.total());
    for (std::size_t m = 0; m < brackets.size(); ++m) {
        const std::size_t n = allocation.counts[m];
        if (n == 0) continue;
        const double step = spacing(brackets[m].area(), n);
        for (std::size_t k = 1; k <= n; ++k)
            positions.push_back(brackets[m].lower_wall + step * static_cast<double>(k));
    }
    return positions;
}

HeuristicResult optimize(const Instance& instance) {
    if (instance.num_floating() == 0) throw std::invalid_argument("nothing to place");
    const BracketSet brackets = partition(instance);
    Allocation allocation =
        adjust(eliminate_and_round(initial_allocation_raw(brackets, instance.num_floating())),
               brackets, instance.num_floating());
    std::vector<Track> positions = place(brackets, allocation);
    Placement placement;
    placement.objective_controllable =
        evaluate_objective(instance, positions, ObjectiveMode::Controllable);
    placement.objective_strict =
        evaluate_objective(instance, positions, ObjectiveMode::StrictAllPairs);
    placement.positions = std::move(positions);
    return {std::move(placement), std::move(allocation)};
}

}  // namespace floatopt
