#include "floatopt/layout.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>

namespace floatopt {

Instance::Instance(Track boundary_lower, Track boundary_upper, std::vector<Track> bumps,
                   std::size_t num_floating)
    : boundary_lower_(boundary_lower),
      boundary_upper_(boundary_upper),
      bumps_(std::move(bumps)),
      num_floating_(num_floating) {
    if (!std::isfinite(boundary_lower_))
        throw std::invalid_argument("boundary_lower must be finite");
    if (!std::isfinite(boundary_upper_))
        throw std::invalid_argument("boundary_upper must be finite");
    if (!(boundary_lower_ < boundary_upper_))
        throw std::invalid_argument("boundary_lower must be strictly less than boundary_upper");
    for (Track b : bumps_) {
        if (!std::isfinite(b)) throw std::invalid_argument("bump positions must be finite");
        if (!(boundary_lower_ < b && b < boundary_upper_))
            throw std::invalid_argument("bump at " + std::to_string(b) +
                                        " must lie strictly between the boundaries");
    }
    std::sort(bumps_.begin(), bumps_.end());
    bumps_.erase(std::unique(bumps_.begin(), bumps_.end()), bumps_.end());
}

BracketSet::BracketSet(std::vector<Bracket> brackets) : brackets_(std::move(brackets)) {
    if (brackets_.empty()) throw std::invalid_argument("bracket set must not be empty");
    double area_sum = 0.0;
    for (std::size_t i = 0; i < brackets_.size(); ++i) {
        const Bracket& b = brackets_[i];
        if (!std::isfinite(b.lower_wall) || !std::isfinite(b.upper_wall))
            throw std::invalid_argument("bracket walls must be finite");
        if (b.area() < 0.0)
            throw std::invalid_argument("bracket area must be nonnegative");
        if (i > 0 && b.lower_wall != brackets_[i - 1].upper_wall)
            throw std::invalid_argument("brackets must be contiguous");
        area_sum += b.area();
    }
    total_length_ = brackets_.back().upper_wall - brackets_.front().lower_wall;
    if (std::abs(area_sum - total_length_) > 1e-9 * std::max(1.0, std::abs(total_length_)))
        throw std::invalid_argument("bracket areas must sum to the total span");
}

BracketSet BracketSet::from_walls(const std::vector<Track>& walls) {
    if (walls.size() < 2) throw std::invalid_argument("at least two walls required");
    std::vector<Bracket> brackets;
    brackets.reserve(walls.size() - 1);
    for (std::size_t i = 0; i + 1 < walls.size(); ++i) {
        brackets.push_back({walls[i], walls[i + 1],
                            i == 0 ? WallKind::Boundary : WallKind::Bump,
                            i + 2 == walls.size() ? WallKind::Boundary : WallKind::Bump});
    }
    return BracketSet(std::move(brackets));
}

BracketSet partition(const Instance& instance) {
    std::vector<Track> walls;
    walls.reserve(instance.bumps().size() + 2);
    walls.push_back(instance.boundary_lower());
    walls.insert(walls.end(), instance.bumps().begin(), instance.bumps().end());
    walls.push_back(instance.boundary_upper());
    return BracketSet::from_walls(walls);
}

double evaluate_objective(const Instance& instance, std::span<const Track> positions,
                          ObjectiveMode mode) {
    if (positions.size() != instance.num_floating())
        throw std::invalid_argument("positions count must equal num_floating");
    for (Track p : positions) {
        if (!std::isfinite(p) || p <= instance.boundary_lower() || p >= instance.boundary_upper())
            throw std::invalid_argument("position " + std::to_string(p) +
                                        " must lie strictly between the boundaries");
    }
    if (mode == ObjectiveMode::Controllable && positions.empty())
        throw std::invalid_argument("nothing to place");

    // The min over the selected pair set is attained by an adjacent pair in
    // sorted order, so one sweep suffices.
    std::vector<std::pair<Track, bool>> points;  // (position, is_floating)
    points.reserve(positions.size() + instance.bumps().size() + 2);
    points.emplace_back(instance.boundary_lower(), false);
    points.emplace_back(instance.boundary_upper(), false);
    for (Track b : instance.bumps()) points.emplace_back(b, false);
    for (Track p : positions) points.emplace_back(p, true);
    std::sort(points.begin(), points.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });

    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i + 1 < points.size(); ++i) {
        if (mode == ObjectiveMode::StrictAllPairs || points[i].second || points[i + 1].second)
            best = std::min(best, points[i + 1].first - points[i].first);
    }
    return best;
}

double min_fixed_distance(const Instance& instance) {
    // Boundaries plus sorted bumps are already in order.
    double best = std::numeric_limits<double>::infinity();
    Track prev = instance.boundary_lower();
    for (Track b : instance.bumps()) {
        best = std::min(best, b - prev);
        prev = b;
    }
    return std::min(best, instance.boundary_upper() - prev);
}

}  // namespace floatopt
