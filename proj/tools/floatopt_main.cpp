// floatopt: max-min placement of head floating locations between fixed
// bumps, with an exact oracle, worst-case bounds, a Monte Carlo baseline,
// and drift-based wake-up period analysis.

#include <chrono>
#include <cmath>
#include <fstream>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "floatopt/drift.hpp"
#include "floatopt/heuristic.hpp"
#include "floatopt/io.hpp"
#include "floatopt/layout.hpp"
#include "floatopt/oracle.hpp"
#include "floatopt/version.hpp"
#include "floatopt/worstcase.hpp"

namespace {

using nlohmann::json;
using namespace floatopt;

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

void emit_report(const std::string& subcommand, json input, json results,
                 Clock::time_point start, const std::string& output_path) {
    json report{{"subcommand", subcommand},
                {"version", kVersion},
                {"wall_time_ms", elapsed_ms(start)},
                {"input", std::move(input)},
                {"results", std::move(results)}};
    std::string text = report.dump(2);
    text.push_back('\n');
    if (output_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(output_path);
        if (!out) throw std::runtime_error("cannot write output file: " + output_path);
        out << text;
    }
}

void write_file(const std::string& path, const std::function<void(std::ostream&)>& body) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write file: " + path);
    body(out);
}

ObjectiveMode parse_mode(const std::string& mode) {
    if (mode == "controllable") return ObjectiveMode::Controllable;
    if (mode == "strict") return ObjectiveMode::StrictAllPairs;
    throw std::invalid_argument("mode must be 'controllable' or 'strict'");
}

json allocation_to_json(const Allocation& allocation) {
    json counts = json::array();
    for (std::size_t c : allocation.counts) counts.push_back(c);
    return counts;
}

int run_optimize(const std::string& input_path, const std::string& output_path,
                 const std::string& mode) {
    const auto start = Clock::now();
    const ObjectiveMode selected = parse_mode(mode);
    const Instance instance = load_instance(input_path);
    const HeuristicResult result = optimize(instance);
    json results{{"positions", result.placement.positions},
                 {"allocation", allocation_to_json(result.allocation)},
                 {"objective_controllable", result.placement.objective_controllable},
                 {"objective_strict", result.placement.objective_strict},
                 {"mode", mode},
                 {"objective", selected == ObjectiveMode::Controllable
                                   ? result.placement.objective_controllable
                                   : result.placement.objective_strict}};
    emit_report("optimize", instance_to_json(instance), std::move(results), start,
                output_path);
    return 0;
}

int run_oracle(const std::string& input_path, const std::string& output_path, bool brute) {
    const auto start = Clock::now();
    const Instance instance = load_instance(input_path);
    const OracleResult exact = exact_optimum(instance);
    json results{{"exact",
                  {{"optimum_value", exact.optimum_value},
                   {"allocation", allocation_to_json(exact.optimal_allocation)},
                   {"candidates_examined", exact.candidates_examined}}}};
    if (brute) {
        const OracleResult bf = brute_force_optimum(instance);
        results["brute_force"] = {{"optimum_value", bf.optimum_value},
                                  {"allocation", allocation_to_json(bf.optimal_allocation)},
                                  {"candidates_examined", bf.candidates_examined}};
        const double scale = std::max({std::abs(exact.optimum_value),
                                       std::abs(bf.optimum_value), 1e-30});
        results["agree"] =
            std::abs(exact.optimum_value - bf.optimum_value) <= 1e-9 * scale;
    }
    emit_report("oracle", instance_to_json(instance), std::move(results), start, output_path);
    return 0;
}

int run_montecarlo(const std::string& input_path, const std::string& output_path,
                   std::size_t trials, std::uint64_t seed, unsigned threads,
                   const std::string& cdf_csv, const std::string& samples_csv) {
    const auto start = Clock::now();
    const Instance instance = load_instance(input_path);
    const HeuristicResult heuristic = optimize(instance);
    const BaselineSample baseline = random_baseline(instance, trials, seed, threads);
    const double quantile =
        quantile_of(heuristic.placement.objective_controllable, baseline);
    if (!cdf_csv.empty())
        write_file(cdf_csv, [&](std::ostream& out) { write_cdf_csv(out, baseline); });
    if (!samples_csv.empty())
        write_file(samples_csv,
                   [&](std::ostream& out) { write_baseline_csv(out, baseline); });
    json results{{"heuristic",
                  {{"positions", heuristic.placement.positions},
                   {"objective_controllable", heuristic.placement.objective_controllable},
                   {"allocation", allocation_to_json(heuristic.allocation)}}},
                 {"trials", trials},
                 {"seed", seed},
                 {"quantile", quantile}};
    emit_report("montecarlo", instance_to_json(instance), std::move(results), start,
                output_path);
    return 0;
}

int run_worstcase(double total_length, std::size_t num_floating, std::size_t num_bumps,
                  std::size_t grid, const std::string& output_path) {
    const auto start = Clock::now();
    json results{{"formula_value", worst_case_value(total_length, num_floating, num_bumps)}};
    if (num_bumps >= 1) {
        const Instance adversarial =
            adversarial_instance(total_length, num_floating, num_bumps);
        results["adversarial_instance"] = instance_to_json(adversarial);
        results["adversarial_optimum"] = exact_optimum(adversarial).optimum_value;
    }
    if (grid > 0) {
        const WorstCaseReport report =
            verify_worst_case(total_length, num_floating, num_bumps, grid);
        results["grid_verification"] = worst_case_report_to_json(report);
    }
    json input{{"total_length", total_length},
               {"num_floating", num_floating},
               {"num_bumps", num_bumps},
               {"grid_points", grid}};
    emit_report("worstcase", std::move(input), std::move(results), start, output_path);
    return 0;
}

int run_wakeup(const std::string& params_path, const std::string& output_path,
               double clearance, const std::vector<double>& clearance_from_worstcase,
               const std::string& trace_csv, double t_end, double dt) {
    const auto start = Clock::now();
    const DriftParams params = load_drift_params(params_path);
    json input{{"params", drift_params_to_json(params)}};
    if (!clearance_from_worstcase.empty()) {
        const double ls = clearance_from_worstcase[0];
        const auto nfl = static_cast<std::size_t>(clearance_from_worstcase[1]);
        const auto ntas = static_cast<std::size_t>(clearance_from_worstcase[2]);
        clearance = worst_case_value(ls, nfl, ntas);
        input["clearance_from_worstcase"] = {{"total_length", ls},
                                             {"num_floating", nfl},
                                             {"num_bumps", ntas}};
    }
    input["clearance"] = clearance;

    const double period = wakeup_period(params, clearance);
    const bool finite = std::isfinite(period);
    json results{{"clearance", clearance},
                 {"finite", finite},
                 {"wakeup_period", finite ? json(period) : json(nullptr)}};
    if (finite) results["max_drift_at_period"] = max_drift(params, period);

    if (!trace_csv.empty()) {
        if (t_end <= 0.0) t_end = finite ? 1.5 * period : 60.0;
        if (dt <= 0.0) dt = t_end / 1000.0;
        const DriftTrace trace = simulate_drift(params, t_end, dt);
        write_file(trace_csv, [&](std::ostream& out) { write_trace_csv(out, trace); });
        results["trace"] = {{"t_end", t_end}, {"dt", dt}, {"samples", trace.times.size()}};
    }
    emit_report("wakeup", std::move(input), std::move(results), start, output_path);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"max-min floating-location placement and head-drift analysis"};
    app.set_version_flag("--version", std::string(kVersion));
    app.require_subcommand(1);

    std::string input_path;
    std::string output_path;
    std::string csv_path;
    std::string samples_csv_path;
    std::string mode = "controllable";
    std::size_t trials = 100000;
    std::uint64_t seed = 42;
    unsigned threads = 1;
    bool brute = false;
    double total_length = 0.0;
    std::size_t num_floating = 0;
    std::size_t num_bumps = 0;
    std::size_t grid = 0;
    std::string params_path;
    double clearance = 0.0;
    std::vector<double> clearance_from_worstcase;
    double t_end = 0.0;
    double dt = 0.0;

    CLI::App* cmd_optimize =
        app.add_subcommand("optimize", "place floating locations with the bracket heuristic");
    cmd_optimize->add_option("--input", input_path, "instance JSON file")->required();
    cmd_optimize->add_option("--output", output_path, "report JSON file (default stdout)");
    cmd_optimize->add_option("--mode", mode, "objective mode: controllable|strict")
        ->check(CLI::IsMember({"controllable", "strict"}));

    CLI::App* cmd_oracle =
        app.add_subcommand("oracle", "exact optimum via parametric search");
    cmd_oracle->add_option("--input", input_path, "instance JSON file")->required();
    cmd_oracle->add_option("--output", output_path, "report JSON file (default stdout)");
    cmd_oracle->add_flag("--brute", brute, "also run the brute-force enumeration");

    CLI::App* cmd_montecarlo = app.add_subcommand(
        "montecarlo", "random-placement baseline and heuristic quantile");
    cmd_montecarlo->add_option("--input", input_path, "instance JSON file")->required();
    cmd_montecarlo->add_option("--output", output_path, "report JSON file (default stdout)");
    cmd_montecarlo->add_option("--trials", trials, "number of random trials");
    cmd_montecarlo->add_option("--seed", seed, "base RNG seed");
    cmd_montecarlo->add_option("--threads", threads, "worker threads");
    cmd_montecarlo->add_option("--csv", csv_path, "write the empirical CDF here");
    cmd_montecarlo->add_option("--samples-csv", samples_csv_path,
                               "write per-trial objectives here");

    CLI::App* cmd_worstcase =
        app.add_subcommand("worstcase", "worst-case spacing over bump configurations");
    cmd_worstcase->add_option("--length", total_length, "total interval length (tracks)")
        ->required();
    cmd_worstcase->add_option("--floating", num_floating, "number of floating locations")
        ->required();
    cmd_worstcase->add_option("--bumps", num_bumps, "number of bumps")->required();
    cmd_worstcase->add_option("--grid", grid, "grid points per bump axis (0 = skip)");
    cmd_worstcase->add_option("--output", output_path, "report JSON file (default stdout)");

    CLI::App* cmd_wakeup =
        app.add_subcommand("wakeup", "safe wake-up period from the drift model");
    cmd_wakeup->add_option("--params", params_path, "drift parameter JSON file")->required();
    CLI::Option* clearance_opt =
        cmd_wakeup->add_option("--clearance", clearance, "clearance to the nearest bump");
    cmd_wakeup
        ->add_option("--clearance-from-worstcase", clearance_from_worstcase,
                     "derive the clearance from <Ls> <NFLs> <NTAs>")
        ->expected(3)
        ->excludes(clearance_opt);
    cmd_wakeup->add_option("--output", output_path, "report JSON file (default stdout)");
    cmd_wakeup->add_option("--csv", csv_path, "write a drift trace here");
    cmd_wakeup->add_option("--t-end", t_end, "trace horizon (default 1.5x period)");
    cmd_wakeup->add_option("--dt", dt, "trace step (default t_end/1000)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }

    try {
        if (app.got_subcommand(cmd_optimize))
            return run_optimize(input_path, output_path, mode);
        if (app.got_subcommand(cmd_oracle)) return run_oracle(input_path, output_path, brute);
        if (app.got_subcommand(cmd_montecarlo))
            return run_montecarlo(input_path, output_path, trials, seed, threads, csv_path,
                                  samples_csv_path);
        if (app.got_subcommand(cmd_worstcase))
            return run_worstcase(total_length, num_floating, num_bumps, grid, output_path);
        if (app.got_subcommand(cmd_wakeup)) {
            if (clearance_opt->count() == 0 && clearance_from_worstcase.empty()) {
                std::cerr << "error: wakeup requires --clearance or "
                             "--clearance-from-worstcase\n";
                return 2;
            }
            return run_wakeup(params_path, output_path, clearance, clearance_from_worstcase,
                              csv_path, t_end, dt);
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 1;
    }
    return 1;
}
