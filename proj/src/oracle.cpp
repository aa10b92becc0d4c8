#include "floatopt/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <thread>
#include <utility>

namespace floatopt {

namespace {

// Points a bracket can hold with spacing area/(n+1) >= v, clamped to limit.
// The 1e-9 relative slack keeps a candidate spacing A/(k+1) counting its own
// bracket at exactly k despite the division round-off.
std::size_t capacity_at(double area, double v, std::size_t limit) {
    const double q = (area / v) * (1.0 + 1e-9);
    if (q >= static_cast<double>(limit) + 2.0) return limit;
    if (q < 2.0) return 0;
    return std::min(static_cast<std::size_t>(q) - 1, limit);
}

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ull;

std::uint64_t splitmix64(std::uint64_t& state) {
    state += kGolden;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

// Counter-based per-trial stream: the initial state is a pure function of
// (seed, trial), so trials can run in any order or thread.
class TrialStream {
  public:
    TrialStream(std::uint64_t seed, std::uint64_t trial) : state_(seed) {
        std::uint64_t s = splitmix64(state_);
        state_ = s ^ (trial * kGolden + 0x8BB84B93962EACC9ull);
        splitmix64(state_);  // decorrelate neighbouring trial indices
    }

    double next_unit() {  // uniform in [0, 1)
        return static_cast<double>(splitmix64(state_) >> 11) * 0x1.0p-53;
    }

  private:
    std::uint64_t state_;
};

Track draw_position(TrialStream& stream, const Instance& instance) {
    // Open interval: boundary hits (possible after rounding) are redrawn.
    for (;;) {
        const Track p = instance.boundary_lower() + stream.next_unit() * instance.length();
        if (p > instance.boundary_lower() && p < instance.boundary_upper()) return p;
    }
}

}  // namespace

bool feasible(const BracketSet& brackets, std::size_t num_floating, double min_spacing) {
    if (!(min_spacing > 0.0) || !std::isfinite(min_spacing))
        throw std::invalid_argument("min spacing must be positive and finite");
    std::size_t capacity = 0;
    for (const Bracket& b : brackets.brackets()) {
        capacity += capacity_at(b.area(), min_spacing, num_floating);
        if (capacity >= num_floating) return true;
    }
    return false;
}

OracleResult exact_optimum(const Instance& instance) {
    const std::size_t n = instance.num_floating();
    if (n == 0) throw std::invalid_argument("nothing to place");
    const BracketSet brackets = partition(instance);

    std::vector<double> candidates;
    candidates.reserve(brackets.size() * n);
    for (const Bracket& b : brackets.brackets()) {
        if (!(b.area() > 0.0)) continue;
        for (std::size_t k = 1; k <= n; ++k)
            candidates.push_back(b.area() / static_cast<double>(k + 1));
    }
    if (candidates.empty()) throw std::invalid_argument("degenerate instance");
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

    std::size_t probes = 0;
    auto ok = [&](double v) {
        ++probes;
        return feasible(brackets, n, v);
    };

    // The smallest candidate packs everything into the smallest positive
    // bracket, so the feasible prefix is never empty.
    std::size_t lo = 0;
    std::size_t hi = candidates.size() - 1;
    if (!ok(candidates[lo]))
        throw std::logic_error("smallest candidate spacing infeasible");
    if (ok(candidates[hi])) {
        lo = hi;
    } else {
        while (hi - lo > 1) {
            const std::size_t mid = lo + (hi - lo) / 2;
            if (ok(candidates[mid]))
                lo = mid;
            else
                hi = mid;
        }
    }
    const double optimum = candidates[lo];

    // Fill to capacity, then give back surplus where it costs least: the
    // bracket whose spacing after the decrement is largest (ties: lowest
    // index). Every spacing stays >= optimum throughout.
    Allocation allocation;
    allocation.counts.reserve(brackets.size());
    std::size_t total = 0;
    for (const Bracket& b : brackets.brackets()) {
        const std::size_t c = capacity_at(b.area(), optimum, n);
        allocation.counts.push_back(c);
        total += c;
    }
    while (total > n) {
        std::size_t best = 0;
        double best_spacing = -1.0;
        for (std::size_t m = 0; m < allocation.counts.size(); ++m) {
            if (allocation.counts[m] == 0) continue;
            const double s = brackets[m].area() / static_cast<double>(allocation.counts[m]);
            if (s > best_spacing) {
                best_spacing = s;
                best = m;
            }
        }
        --allocation.counts[best];
        --total;
    }

    return {optimum, std::move(allocation), probes};
}

OracleResult brute_force_optimum(const Instance& instance) {
    const std::size_t n = instance.num_floating();
    if (n == 0) throw std::invalid_argument("nothing to place");
    const BracketSet brackets = partition(instance);
    const std::size_t m = brackets.size();
    if (n > 12 || m > 8) throw std::invalid_argument("instance too large for brute force");

    std::vector<std::size_t> counts(m, 0);
    OracleResult best;
    best.optimum_value = -1.0;

    auto evaluate = [&] {
        ++best.candidates_examined;
        double value = std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < m; ++i) {
            if (counts[i] == 0) continue;
            value = std::min(value, spacing(brackets[i].area(), counts[i]));
        }
        if (value > best.optimum_value) {
            best.optimum_value = value;
            best.optimal_allocation.counts = counts;
        }
    };

    auto recurse = [&](auto&& self, std::size_t index, std::size_t remaining) -> void {
        if (index + 1 == m) {
            counts[index] = remaining;
            evaluate();
            counts[index] = 0;
            return;
        }
        for (std::size_t c = 0; c <= remaining; ++c) {
            counts[index] = c;
            self(self, index + 1, remaining - c);
        }
        counts[index] = 0;
    };
    recurse(recurse, 0, n);
    return best;
}

BaselineSample random_baseline(const Instance& instance, std::size_t trials,
                               std::uint64_t seed, unsigned threads) {
    if (trials == 0) throw std::invalid_argument("trials must be at least 1");
    if (instance.num_floating() == 0) throw std::invalid_argument("nothing to place");
    BaselineSample sample;
    sample.seed = seed;
    sample.trials = trials;
    sample.objectives.resize(trials);

    auto run_range = [&](std::size_t begin, std::size_t end) {
        std::vector<Track> positions(instance.num_floating());
        for (std::size_t t = begin; t < end; ++t) {
            TrialStream stream(seed, t);
            for (Track& p : positions) p = draw_position(stream, instance);
            sample.objectives[t] =
                evaluate_objective(instance, positions, ObjectiveMode::Controllable);
        }
    };

    const std::size_t workers = std::max<std::size_t>(
        1, std::min<std::size_t>(threads, trials));
    if (workers == 1) {
        run_range(0, trials);
        return sample;
    }
    std::vector<std::thread> pool;
    pool.reserve(workers);
    const std::size_t chunk = (trials + workers - 1) / workers;
    for (std::size_t w = 0; w < workers; ++w) {
        const std::size_t begin = w * chunk;
        const std::size_t end = std::min(trials, begin + chunk);
        if (begin >= end) break;
        pool.emplace_back(run_range, begin, end);
    }
    for (std::thread& t : pool) t.join();
    return sample;
}

double quantile_of(double value, const BaselineSample& sample) {
    if (sample.objectives.empty()) throw std::invalid_argument("baseline sample is empty");
    std::size_t below = 0;
    for (double objective : sample.objectives)
        if (objective < value) ++below;
    return static_cast<double>(below) / static_cast<double>(sample.objectives.size());
}

}  // namespace floatopt
