#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "harness/keyvalue.hpp"

namespace ptrie::harness {

enum class OpKind { Insert, Remove, Search, Min, Max, DeleteMin, IterateAll, Validate };

const char* op_letter(OpKind k);

struct WorkloadOp {
    OpKind kind;
    KeyValue key;         // Insert/Remove/Search only
    uint64_t payload = 0; // Insert only
};

struct Workload {
    Mode mode = Mode::U32;
    uint32_t k = 4;
    uint64_t seed = 0;
    std::string name;
    std::vector<WorkloadOp> ops;
};

void write_workload(const Workload& w, std::ostream& os);
void write_workload_file(const Workload& w, const std::string& path);
Workload read_workload(std::istream& is);
Workload read_workload_file(const std::string& path);

enum class Dist { Uniform, Clustered, Ascending, DuplicateHeavy };
std::optional<Dist> dist_from_name(const std::string& s);
const char* dist_name(Dist d);

// Deterministic workload generator. The op mix is 40% insert, 25% remove,
// 15% search, 10% delete-min and 10% min/max/iterate (split 4.5/4.5/1),
// plus a sparse sprinkling of validate ops. F64 workloads replace iterate
// with min/max since the float adapter exposes no full iteration.
// pq_only restricts the mix to insert/delete-min/min (60/30/10) so the
// result is valid for both bench backends.
Workload gen_workload(Mode mode, uint32_t k, uint64_t n_ops, Dist dist, uint64_t seed,
                      bool pq_only = false);

}  // namespace ptrie::harness
