#pragma once

// Interval layout of a head-floating instance: boundaries, bumps, and the
// bracket partition they induce. All positions are measured in tracks.

#include <cstddef>
#include <span>
#include <vector>

namespace floatopt {

using Track = double;

enum class WallKind { Boundary, Bump };

// Controllable restricts the min to pairs involving at least one floating
// position; StrictAllPairs takes the min over every pair of points of
// interest (floating positions, bumps, both boundaries), so a fixed
// bump-bump gap can cap the value no matter where the head parks.
enum class ObjectiveMode { Controllable, StrictAllPairs };

// Immutable problem instance. Bumps are sorted and exact duplicates merged
// at construction; invalid inputs are rejected with std::invalid_argument
// naming the violated invariant.
class Instance {
  public:
    Instance(Track boundary_lower, Track boundary_upper, std::vector<Track> bumps,
             std::size_t num_floating);

    Track boundary_lower() const { return boundary_lower_; }
    Track boundary_upper() const { return boundary_upper_; }
    const std::vector<Track>& bumps() const { return bumps_; }
    std::size_t num_floating() const { return num_floating_; }
    Track length() const { return boundary_upper_ - boundary_lower_; }

  private:
    Track boundary_lower_;
    Track boundary_upper_;
    std::vector<Track> bumps_;
    std::size_t num_floating_;
};

struct Bracket {
    Track lower_wall = 0.0;
    Track upper_wall = 0.0;
    WallKind lower_kind = WallKind::Boundary;
    WallKind upper_kind = WallKind::Boundary;

    Track area() const { return upper_wall - lower_wall; }
};

// Contiguous ordered partition of the interval: bracket k's upper wall is
// bracket k+1's lower wall, and the areas sum to the total span.
class BracketSet {
  public:
    explicit BracketSet(std::vector<Bracket> brackets);

    // Convenience for hand-built sets: outermost walls are boundaries,
    // interior walls bumps.
    static BracketSet from_walls(const std::vector<Track>& walls);

    const std::vector<Bracket>& brackets() const { return brackets_; }
    std::size_t size() const { return brackets_.size(); }
    const Bracket& operator[](std::size_t i) const { return brackets_[i]; }
    Track total_length() const { return total_length_; }

  private:
    std::vector<Bracket> brackets_;
    Track total_length_;
};

struct Placement {
    std::vector<Track> positions;
    double objective_controllable = 0.0;
    double objective_strict = 0.0;
};

// Splits [boundary_lower, boundary_upper] at the bumps into bumps+1 brackets.
BracketSet partition(const Instance& instance);

// Min pairwise distance per the selected mode. Positions must lie strictly
// inside the boundaries and match num_floating in count; Controllable with
// no floating positions is an error ("nothing to place").
double evaluate_objective(const Instance& instance, std::span<const Track> positions,
                          ObjectiveMode mode = ObjectiveMode::Controllable);

// Smallest gap among the fixed points alone (boundaries and bumps).
double min_fixed_distance(const Instance& instance);

}  // namespace floatopt
