#pragma once

#include "sw/json_io.hpp"

#include <functional>
#include <string>
#include <vector>

namespace sw {

/// One exhaustive scan. Each check runs once per prime in `ps` at the context
/// (p, f, e, n); some checks fix parts of the context themselves.
struct ScanSpec {
    std::string check;
    std::vector<int> ps{5};
    int n = 3;
    int f = 1;
    int e = 1;
    std::int64_t delta = -1;  // genericity threshold; negative means n
    std::int64_t max_d = 6;   // yewang: largest alcove index
    int jobs = 0;             // 0: SW_JOBS, then hardware threads
};

struct ScanReport {
    std::string check;
    std::size_t checked = 0;
    std::size_t violations = 0;
    Json info = Json::object();      // per-check statistics, keyed by "p=.."
    Json counterexamples = Json::array();  // the first few, in canonical order
    bool ok() const { return violations == 0; }
    Json to_json() const;
};

// Called once per violation as soon as its chunk of work items is finished.
using CounterexampleSink = std::function<void(const Json&)>;

const std::vector<std::string>& scan_checks();

// Throws InputError for an unknown check or bad ranges and Unsupported for a
// context the check cannot handle.
ScanReport run_scan(const ScanSpec& spec, const CounterexampleSink& sink = {});

}  // namespace sw
