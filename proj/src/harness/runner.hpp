#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "harness/backend.hpp"
#include "harness/workload.hpp"

namespace ptrie::harness {

struct Mismatch {
    size_t op_index;
    std::string op;
    std::string ptrie_out;
    std::string oracle_out;
};

struct OpTiming {
    uint64_t count = 0;
    uint64_t total_ns = 0;
};

struct RunReport {
    std::string name;
    uint64_t ops = 0;
    std::vector<Mismatch> mismatches;
    uint64_t violations = 0;             // validate() findings
    uint64_t step_bound_violations = 0;  // layer_visits/bst_comparisons/link_reads
    uint64_t depth_bound_violations = 0; // node depth vs ceil(m/k)
    uint64_t bound_violations = 0;       // sum of the two above
    uint64_t max_layer_visits = 0;
    uint64_t max_bst_comparisons = 0;
    uint64_t max_link_reads = 0;
    uint64_t depth_max = 0;
    bool depth_hit_bound = false;    // some core reached exactly its depth bound
    std::vector<uint64_t> layers_per_level;  // summed across cores, final state
    std::map<std::string, OpTiming> timings;
    double elapsed_s = 0.0;

    bool passed() const { return mismatches.empty() && violations == 0 && bound_violations == 0; }
};

struct DiffOptions {
    bool paranoid = false;          // validate() after every mutating op
    bool collect_timings = true;
    size_t max_mismatches = 8;      // stop comparing after this many
    // Test hook: supplies the structure under test (fault injection).
    std::function<std::unique_ptr<Backend>()> backend_factory;
};

RunReport diff_run(const Workload& w, const DiffOptions& opt = {});

// Executes a workload against the reference oracle alone; returns one
// output string per op (the same encodings diff_run compares).
std::vector<std::string> oracle_run(const Workload& w);

// Greedy one-pass shrink of a mismatching workload: keeps the prefix up to
// the first mismatch and drops every op whose removal preserves a failure.
Workload minimize_failure(const Workload& w, const DiffOptions& opt = {});

std::string report_to_json(const RunReport& r);

}  // namespace ptrie::harness
