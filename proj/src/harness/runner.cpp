#include "harness/runner.hpp"

#include <chrono>
#include <sstream>

#include <json.hpp>

#include "harness/oracle.hpp"

namespace ptrie::harness {

namespace {

constexpr uint64_t kFnvOffset = 1469598103934665603ull;
constexpr uint64_t kFnvPrime = 1099511628211ull;

void fnv_mix(uint64_t& h, uint64_t v) {
    for (int i = 0; i < 8; ++i) {
        h ^= (v >> (i * 8)) & 0xff;
        h *= kFnvPrime;
    }
}

uint64_t key_digest(const KeyValue& kv) {
    switch (kv.mode) {
        case Mode::U8:
        case Mode::U16:
        case Mode::U32:
            return kv.u;
        case Mode::I64:
            return static_cast<uint64_t>(kv.i);
        case Mode::F64: {
            double f = kv.f == 0.0 ? 0.0 : kv.f;
            uint64_t bits;
            __builtin_memcpy(&bits, &f, sizeof bits);
            return bits;
        }
        case Mode::Str: {
            uint64_t h = kFnvOffset;
            for (unsigned char c : kv.s) {
                h ^= c;
                h *= kFnvPrime;
            }
            return h;
        }
    }
    return 0;
}

std::string opt_pair_str(const std::optional<std::pair<KeyValue, uint64_t>>& v) {
    if (!v) return "absent";
    return format_key(v->first) + " p=" + std::to_string(v->second);
}

std::string describe_op(const WorkloadOp& op) {
    std::string s = op_letter(op.kind);
    if (op.kind == OpKind::Insert)
        s += " " + format_key(op.key) + " " + std::to_string(op.payload);
    else if (op.kind == OpKind::Remove || op.kind == OpKind::Search)
        s += " " + format_key(op.key);
    return s;
}

const char* op_class(OpKind k) {
    switch (k) {
        case OpKind::Insert: return "insert";
        case OpKind::Remove: return "remove";
        case OpKind::Search: return "search";
        case OpKind::Min: return "min";
        case OpKind::Max: return "max";
        case OpKind::DeleteMin: return "delete_min";
        case OpKind::IterateAll: return "iterate";
        case OpKind::Validate: return "validate";
    }
    return "?";
}

bool mutating(OpKind k) {
    return k == OpKind::Insert || k == OpKind::Remove || k == OpKind::DeleteMin;
}

}  // namespace

RunReport diff_run(const Workload& w, const DiffOptions& opt) {
    RunReport report;
    report.name = w.name;
    report.ops = w.ops.size();

    const auto t0 = std::chrono::steady_clock::now();
    auto backend = opt.backend_factory ? opt.backend_factory() : make_ptrie_backend(w.mode, w.k);
    Oracle oracle;

    for (size_t idx = 0; idx < w.ops.size(); ++idx) {
        const WorkloadOp& op = w.ops[idx];
        std::string got, want;
        const auto op_t0 = std::chrono::steady_clock::now();
        switch (op.kind) {
            case OpKind::Insert: {
                backend->insert(op.key, op.payload);
                oracle.insert(op.key, op.payload);
                got = "n=" + std::to_string(backend->size());
                want = "n=" + std::to_string(oracle.size());
                break;
            }
            case OpKind::Remove: {
                auto a = backend->remove(op.key);
                auto b = oracle.remove(op.key);
                got = (a ? "p=" + std::to_string(*a) : "absent") +
                      " n=" + std::to_string(backend->size());
                want = (b ? "p=" + std::to_string(*b) : "absent") +
                       " n=" + std::to_string(oracle.size());
                break;
            }
            case OpKind::Search: {
                got = backend->search(op.key) ? "true" : "false";
                want = oracle.search(op.key) ? "true" : "false";
                break;
            }
            case OpKind::Min: {
                got = opt_pair_str(backend->min());
                want = opt_pair_str(oracle.min());
                break;
            }
            case OpKind::Max: {
                got = opt_pair_str(backend->max());
                want = opt_pair_str(oracle.max());
                break;
            }
            case OpKind::DeleteMin: {
                got = opt_pair_str(backend->delete_min());
                want = opt_pair_str(oracle.delete_min());
                break;
            }
            case OpKind::IterateAll: {
                if (!backend->supports_iterate()) {
                    // Float adapter: compare the visible priority-queue view.
                    got = opt_pair_str(backend->min()) + " | " + opt_pair_str(backend->max()) +
                          " | n=" + std::to_string(backend->size());
                    want = opt_pair_str(oracle.min()) + " | " + opt_pair_str(oracle.max()) +
                           " | n=" + std::to_string(oracle.size());
                    break;
                }
                uint64_t ha = kFnvOffset, hb = kFnvOffset;
                uint64_t ca = 0, cb = 0;
                backend->iterate([&](const KeyValue& k, uint64_t p) {
                    fnv_mix(ha, key_digest(k));
                    fnv_mix(ha, p);
                    ++ca;
                });
                oracle.iterate([&](const KeyValue& k, uint64_t p) {
                    fnv_mix(hb, key_digest(k));
                    fnv_mix(hb, p);
                    ++cb;
                });
                got = "count=" + std::to_string(ca) + " digest=" + std::to_string(ha);
                want = "count=" + std::to_string(cb) + " digest=" + std::to_string(hb);
                break;
            }
            case OpKind::Validate: {
                const auto violations = backend->validate();
                report.violations += violations.size();
                got = want = "n=" + std::to_string(backend->size());
                break;
            }
        }
        if (opt.collect_timings) {
            const auto op_t1 = std::chrono::steady_clock::now();
            OpTiming& t = report.timings[op_class(op.kind)];
            ++t.count;
            t.total_ns += std::chrono::duration_cast<std::chrono::nanoseconds>(op_t1 - op_t0).count();
        }
        if (got != want && report.mismatches.size() < opt.max_mismatches)
            report.mismatches.push_back(Mismatch{idx, describe_op(op), got, want});
        if (opt.paranoid && mutating(op.kind)) {
            const auto violations = backend->validate();
            report.violations += violations.size();
        }
    }

    // Always close with a full structural check.
    report.violations += backend->validate().size();

    // Step and depth bounds per core.
    for (const CoreCounterReport& c : backend->counter_reports()) {
        report.max_layer_visits = std::max(report.max_layer_visits, c.max.layer_visits);
        report.max_bst_comparisons = std::max(report.max_bst_comparisons, c.max.bst_comparisons);
        report.max_link_reads = std::max(report.max_link_reads, c.max.link_reads);
        if (c.max.layer_visits > 2 * uint64_t{c.digit_count} + 1) ++report.step_bound_violations;
        if (c.max.bst_comparisons > c.radix) ++report.step_bound_violations;
        if (c.max.link_reads > 3) ++report.step_bound_violations;
    }
    for (const CoreStatsReport& s : backend->stats_reports()) {
        report.depth_max = std::max(report.depth_max, s.stats.depth_max);
        if (s.stats.depth_max > s.digit_count) ++report.depth_bound_violations;
        if (s.stats.depth_max == s.digit_count && s.digit_count > 0) report.depth_hit_bound = true;
        for (size_t l = 0; l < s.stats.layers_per_level.size(); ++l) {
            if (report.layers_per_level.size() <= l) report.layers_per_level.resize(l + 1, 0);
            report.layers_per_level[l] += s.stats.layers_per_level[l];
        }
    }

    report.bound_violations = report.step_bound_violations + report.depth_bound_violations;
    const auto t1 = std::chrono::steady_clock::now();
    report.elapsed_s = std::chrono::duration<double>(t1 - t0).count();
    return report;
}

std::vector<std::string> oracle_run(const Workload& w) {
    Oracle oracle;
    std::vector<std::string> out;
    out.reserve(w.ops.size());
    for (const WorkloadOp& op : w.ops) {
        switch (op.kind) {
            case OpKind::Insert:
                oracle.insert(op.key, op.payload);
                out.push_back("n=" + std::to_string(oracle.size()));
                break;
            case OpKind::Remove: {
                auto b = oracle.remove(op.key);
                out.push_back((b ? "p=" + std::to_string(*b) : "absent") +
                              " n=" + std::to_string(oracle.size()));
                break;
            }
            case OpKind::Search:
                out.push_back(oracle.search(op.key) ? "true" : "false");
                break;
            case OpKind::Min:
                out.push_back(opt_pair_str(oracle.min()));
                break;
            case OpKind::Max:
                out.push_back(opt_pair_str(oracle.max()));
                break;
            case OpKind::DeleteMin:
                out.push_back(opt_pair_str(oracle.delete_min()));
                break;
            case OpKind::IterateAll: {
                uint64_t h = kFnvOffset, c = 0;
                oracle.iterate([&](const KeyValue& k, uint64_t p) {
                    fnv_mix(h, key_digest(k));
                    fnv_mix(h, p);
                    ++c;
                });
                out.push_back("count=" + std::to_string(c) + " digest=" + std::to_string(h));
                break;
            }
            case OpKind::Validate:
                out.push_back("n=" + std::to_string(oracle.size()));
                break;
        }
    }
    return out;
}

Workload minimize_failure(const Workload& w, const DiffOptions& opt) {
    DiffOptions probe = opt;
    probe.collect_timings = false;
    probe.max_mismatches = 1;

    RunReport full = diff_run(w, probe);
    if (full.passed()) return w;

    Workload cur = w;
    if (!full.mismatches.empty()) {
        cur.ops.resize(full.mismatches.front().op_index + 1);
        cur.name = w.name + "-repro";
    }
    if (cur.ops.size() > 2000) return cur;  // prefix only; greedy pass too slow

    for (size_t i = cur.ops.size(); i-- > 0;) {
        Workload probe_w = cur;
        probe_w.ops.erase(probe_w.ops.begin() + static_cast<ptrdiff_t>(i));
        if (!diff_run(probe_w, probe).passed()) cur = std::move(probe_w);
    }
    return cur;
}

std::string report_to_json(const RunReport& r) {
    nlohmann::json j;
    j["name"] = r.name;
    j["ops"] = r.ops;
    j["mismatches"] = nlohmann::json::array();
    for (const Mismatch& m : r.mismatches) {
        j["mismatches"].push_back({{"index", m.op_index},
                                   {"op", m.op},
                                   {"ptrie", m.ptrie_out},
                                   {"oracle", m.oracle_out}});
    }
    j["violations"] = r.violations;
    j["bound_violations"] = r.bound_violations;
    j["max_layer_visits"] = r.max_layer_visits;
    j["max_bst_comparisons"] = r.max_bst_comparisons;
    j["max_link_reads"] = r.max_link_reads;
    j["depth_max"] = r.depth_max;
    j["depth_hit_bound"] = r.depth_hit_bound;
    j["layers_per_level"] = r.layers_per_level;
    nlohmann::json timings = nlohmann::json::object();
    for (const auto& [name, t] : r.timings)
        timings[name] = {{"count", t.count}, {"total_ns", t.total_ns}};
    j["timings"] = timings;
    j["elapsed_s"] = r.elapsed_s;
    return j.dump(2);
}

}  // namespace ptrie::harness
