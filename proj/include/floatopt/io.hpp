#pragma once

// JSON and CSV interchange. Kept out of the core modules so they stay free
// of serialization dependencies.

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "floatopt/drift.hpp"
#include "floatopt/layout.hpp"
#include "floatopt/oracle.hpp"
#include "floatopt/worstcase.hpp"

namespace floatopt {

// {"boundary_lower": x, "boundary_upper": y, "bumps": [...], "num_floating": n}
Instance instance_from_json(const nlohmann::json& doc);
nlohmann::json instance_to_json(const Instance& instance);
Instance load_instance(const std::string& path);

// {"mass": m, "viscous": c, "k_bias": kb, "k_torque": kt, "current": i,
//  "disturbance": d}
DriftParams drift_params_from_json(const nlohmann::json& doc);
nlohmann::json drift_params_to_json(const DriftParams& params);
DriftParams load_drift_params(const std::string& path);

nlohmann::json worst_case_report_to_json(const WorstCaseReport& report);

// CSV emitters; numbers carry full round-trip precision.
void write_baseline_csv(std::ostream& out, const BaselineSample& sample);  // trial,objective
void write_cdf_csv(std::ostream& out, const BaselineSample& sample);       // value,cumulative_prob
void write_trace_csv(std::ostream& out, const DriftTrace& trace);          // t,x,xdot

}  // namespace floatopt
