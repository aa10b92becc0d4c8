#pragma once

// Ground truth for the placement problem: an exact optimum via parametric
// search over candidate spacings, a brute-force enumeration cross-check, and
// the Monte Carlo random-placement baseline.

#include <cstdint>

#include "floatopt/heuristic.hpp"

namespace floatopt {

struct OracleResult {
    double optimum_value = 0.0;
    Allocation optimal_allocation;
    std::size_t candidates_examined = 0;
};

struct BaselineSample {
    std::vector<double> objectives;  // one controllable objective per trial
    std::uint64_t seed = 0;
    std::size_t trials = 0;
};

// True iff num_floating points fit with every used bracket keeping spacing
// at least min_spacing: sum over brackets of max(0, floor(A_m / v) - 1).
bool feasible(const BracketSet& brackets, std::size_t num_floating, double min_spacing);

// Exact max-min optimum. The binding bracket of an optimal allocation holds
// an integer count, so the optimum is the largest feasible value among
// {A_m / (k+1) : k = 1..n}; found by binary search over the sorted
// candidates. The allocation fills every bracket to capacity, then trims the
// surplus from the bracket whose spacing after the decrement is largest.
OracleResult exact_optimum(const Instance& instance);

// Independent check: enumerates every composition of num_floating over the
// brackets. Guarded to num_floating <= 12 and at most 8 brackets.
OracleResult brute_force_optimum(const Instance& instance);

// Uniform random placements. Trial k draws from a counter-based substream of
// `seed` that depends only on (seed, k), so the result is a pure function of
// (instance, trials, seed) regardless of thread count or execution order.
BaselineSample random_baseline(const Instance& instance, std::size_t trials,
                               std::uint64_t seed, unsigned threads = 1);

// Fraction of sample objectives strictly below value.
double quantile_of(double value, const BaselineSample& sample);

}  // namespace floatopt
