#pragma once

// Worst-case spacing over all bump configurations: closed form, an
// adversarial instance achieving it, and a grid-search verification.

#include "floatopt/oracle.hpp"

namespace floatopt {

struct WorstCaseReport {
    double formula_value = 0.0;
    double verified_min = 0.0;           // smallest exact optimum on the grid
    std::vector<Track> argmin_bumps;
    double grid_resolution = 0.0;        // Ls / grid_points
};

// Ls / (n + 2M - 1) with M = num_bumps + 1: the smallest exact optimum any
// bump configuration can force.
double worst_case_value(double total_length, std::size_t num_floating, std::size_t num_bumps);

// A configuration attaining the bound: num_bumps brackets of width 2v
// followed by one of width (n+1)v, where v is the worst-case value.
Instance adversarial_instance(double total_length, std::size_t num_floating,
                              std::size_t num_bumps);

// Evaluates the exact optimum for every sorted bump tuple on a uniform grid
// of interior points and returns the minimum. Throws if the grid exceeds
// 1e7 evaluations, or if the observed minimum undercuts the formula by more
// than one grid step.
WorstCaseReport verify_worst_case(double total_length, std::size_t num_floating,
                                  std::size_t num_bumps, std::size_t grid_points);

}  // namespace floatopt
