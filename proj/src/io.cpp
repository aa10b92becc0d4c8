#include "floatopt/io.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <limits>
#include <ostream>

namespace floatopt {

namespace {

using nlohmann::json;

const json& require_field(const json& doc, const char* name) {
    auto it = doc.find(name);
    if (it == doc.end())
        throw std::invalid_argument(std::string("missing field '") + name + "'");
    return *it;
}

double number_field(const json& doc, const char* name) {
    const json& value = require_field(doc, name);
    if (!value.is_number())
        throw std::invalid_argument(std::string("field '") + name + "' must be a number");
    return value.get<double>();
}

json parse_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open file: " + path);
    json doc;
    try {
        in >> doc;
    } catch (const json::parse_error& e) {
        throw std::invalid_argument("invalid JSON in " + path + ": " + e.what());
    }
    return doc;
}

}  // namespace

Instance instance_from_json(const json& doc) {
    if (!doc.is_object()) throw std::invalid_argument("instance JSON must be an object");
    const double lower = number_field(doc, "boundary_lower");
    const double upper = number_field(doc, "boundary_upper");
    const json& bumps_json = require_field(doc, "bumps");
    if (!bumps_json.is_array())
        throw std::invalid_argument("field 'bumps' must be an array of numbers");
    std::vector<Track> bumps;
    bumps.reserve(bumps_json.size());
    for (const json& b : bumps_json) {
        if (!b.is_number())
            throw std::invalid_argument("field 'bumps' must be an array of numbers");
        bumps.push_back(b.get<double>());
    }
    const json& nfl = require_field(doc, "num_floating");
    if (!nfl.is_number_integer() || nfl.get<long long>() < 0)
        throw std::invalid_argument("field 'num_floating' must be a nonnegative integer");
    return Instance(lower, upper, std::move(bumps),
                    static_cast<std::size_t>(nfl.get<long long>()));
}

json instance_to_json(const Instance& instance) {
    return json{{"boundary_lower", instance.boundary_lower()},
                {"boundary_upper", instance.boundary_upper()},
                {"bumps", instance.bumps()},
                {"num_floating", instance.num_floating()}};
}

Instance load_instance(const std::string& path) { return instance_from_json(parse_file(path)); }

DriftParams drift_params_from_json(const json& doc) {
    if (!doc.is_object()) throw std::invalid_argument("drift parameter JSON must be an object");
    DriftParams params;
    params.mass = number_field(doc, "mass");
    params.viscous = number_field(doc, "viscous");
    params.k_bias = number_field(doc, "k_bias");
    params.k_torque = number_field(doc, "k_torque");
    params.current = number_field(doc, "current");
    params.disturbance = number_field(doc, "disturbance");
    return params;
}

json drift_params_to_json(const DriftParams& params) {
    return json{{"mass", params.mass},         {"viscous", params.viscous},
                {"k_bias", params.k_bias},     {"k_torque", params.k_torque},
                {"current", params.current},   {"disturbance", params.disturbance}};
}

DriftParams load_drift_params(const std::string& path) {
    return drift_params_from_json(parse_file(path));
}

json worst_case_report_to_json(const WorstCaseReport& report) {
    return json{{"formula_value", report.formula_value},
                {"verified_min", report.verified_min},
                {"argmin_bumps", report.argmin_bumps},
                {"grid_resolution", report.grid_resolution}};
}

namespace {

std::ostream& full_precision(std::ostream& out) {
    out << std::setprecision(std::numeric_limits<double>::max_digits10);
    return out;
}

}  // namespace

void write_baseline_csv(std::ostream& out, const BaselineSample& sample) {
    full_precision(out) << "trial,objective\n";
    for (std::size_t i = 0; i < sample.objectives.size(); ++i)
        out << i << ',' << sample.objectives[i] << '\n';
}

void write_cdf_csv(std::ostream& out, const BaselineSample& sample) {
    std::vector<double> sorted = sample.objectives;
    std::sort(sorted.begin(), sorted.end());
    full_precision(out) << "value,cumulative_prob\n";
    const auto n = static_cast<double>(sorted.size());
    for (std::size_t i = 0; i < sorted.size(); ++i)
        out << sorted[i] << ',' << static_cast<double>(i + 1) / n << '\n';
}

void write_trace_csv(std::ostream& out, const DriftTrace& trace) {
    full_precision(out) << "t,x,xdot\n";
    for (std::size_t i = 0; i < trace.times.size(); ++i)
        out << trace.times[i] << ',' << trace.positions[i] << ',' << trace.velocities[i]
            << '\n';
}

}  // namespace floatopt
