#include "floatopt/worstcase.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <utility>

namespace floatopt {

double worst_case_value(double total_length, std::size_t num_floating, std::size_t num_bumps) {
    if (!(total_length > 0.0) || !std::isfinite(total_length))
        throw std::invalid_argument("total length must be positive and finite");
    if (num_floating == 0) throw std::invalid_argument("nothing to place");
    const std::size_t brackets = num_bumps + 1;
    return total_length / static_cast<double>(num_floating + 2 * brackets - 1);
}

Instance adversarial_instance(double total_length, std::size_t num_floating,
                              std::size_t num_bumps) {
    if (num_bumps == 0) throw std::invalid_argument("at least one bump required");
    const double v = worst_case_value(total_length, num_floating, num_bumps);
    // num_bumps brackets of width 2v, then one of width (n+1)v. Any narrow
    // bracket holds exactly one point at spacing v; the wide one holds the
    // rest; no spacing above v is feasible.
    std::vector<Track> bumps;
    bumps.reserve(num_bumps);
    for (std::size_t k = 1; k <= num_bumps; ++k)
        bumps.push_back(2.0 * v * static_cast<double>(k));
    return Instance(0.0, total_length, std::move(bumps), num_floating);
}

WorstCaseReport verify_worst_case(double total_length, std::size_t num_floating,
                                  std::size_t num_bumps, std::size_t grid_points) {
    const double formula = worst_case_value(total_length, num_floating, num_bumps);
    if (grid_points < 2) throw std::invalid_argument("grid must have at least 2 points");

    const std::size_t interior = grid_points - 1;
    if (interior < num_bumps)
        throw std::invalid_argument("grid too coarse for the requested bump count");

    // C(interior, num_bumps) evaluations; bail out above 1e7.
    double combinations = 1.0;
    for (std::size_t i = 0; i < num_bumps; ++i) {
        combinations *= static_cast<double>(interior - i) / static_cast<double>(i + 1);
        if (combinations > 1e7) throw std::invalid_argument("grid too large");
    }

    WorstCaseReport report;
    report.formula_value = formula;
    report.grid_resolution = total_length / static_cast<double>(grid_points);
    report.verified_min = std::numeric_limits<double>::infinity();

    std::vector<std::size_t> index(num_bumps);
    for (std::size_t i = 0; i < num_bumps; ++i) index[i] = i + 1;
    std::vector<Track> bumps(num_bumps);
    for (;;) {
        for (std::size_t i = 0; i < num_bumps; ++i)
            bumps[i] = total_length * static_cast<double>(index[i]) /
                       static_cast<double>(grid_points);
        const OracleResult result =
            exact_optimum(Instance(0.0, total_length, bumps, num_floating));
        if (result.optimum_value < report.verified_min) {
            report.verified_min = result.optimum_value;
            report.argmin_bumps = bumps;
        }
        if (num_bumps == 0) break;
        // advance the sorted index tuple
        std::size_t pos = num_bumps;
        while (pos > 0 && index[pos - 1] == interior - (num_bumps - pos)) --pos;
        if (pos == 0) break;
        ++index[pos - 1];
        for (std::size_t j = pos; j < num_bumps; ++j) index[j] = index[j - 1] + 1;
    }

    if (report.verified_min < formula - report.grid_resolution)
        throw std::runtime_error("worst-case bound violated by grid search");
    return report;
}

}  // namespace floatopt
