#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "harness/workload.hpp"

namespace ptrie::harness {

enum class BenchBackend { PTrie, BinHeap };
std::optional<BenchBackend> bench_backend_from_name(const std::string& s);

struct BenchRow {
    std::string backend;
    uint32_t repeat = 0;
    std::string op;       // insert / delete_min / min / drain
    uint64_t count = 0;
    uint64_t total_ns = 0;
    uint64_t max_layer_visits = 0;     // ptrie rows only
    uint64_t max_bst_comparisons = 0;  // ptrie rows only
};

struct BenchResult {
    std::vector<BenchRow> rows;
    uint64_t drain_digest = 0;  // FNV over the drained (key, payload) sequence
    uint64_t drain_count = 0;
};

// Runs a priority-queue workload (insert/delete-min/min only) and then
// drains whatever is left, timing each op class. Throws on other op kinds.
BenchResult run_bench(const Workload& w, BenchBackend backend, uint32_t repeats);

std::string bench_to_csv(const BenchResult& r);
std::string bench_to_json(const BenchResult& r);

}  // namespace ptrie::harness
