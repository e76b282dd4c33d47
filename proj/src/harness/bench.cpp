#include "harness/bench.hpp"

#include <algorithm>
#include <chrono>
#include <queue>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "harness/backend.hpp"

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

uint64_t key_bits_for_digest(const KeyValue& kv) {
    switch (kv.mode) {
        case Mode::U8:
        case Mode::U16:
        case Mode::U32:
            return kv.u;
        case Mode::I64:
            return static_cast<uint64_t>(kv.i);
        case Mode::F64: {
            uint64_t bits;
            double f = kv.f == 0.0 ? 0.0 : kv.f;
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

// Stable binary heap baseline: min-heap over (key, seq) so equal keys pop
// in insertion order, matching the trie's FIFO queues.
class StableBinHeap {
public:
    void insert(const KeyValue& key, uint64_t payload) {
        items_.push_back(Item{key, seq_++, payload});
        std::push_heap(items_.begin(), items_.end(), cmp_);
    }

    std::optional<std::pair<KeyValue, uint64_t>> min() const {
        if (items_.empty()) return std::nullopt;
        return std::make_pair(items_.front().key, items_.front().payload);
    }

    std::optional<std::pair<KeyValue, uint64_t>> delete_min() {
        if (items_.empty()) return std::nullopt;
        std::pop_heap(items_.begin(), items_.end(), cmp_);
        Item out = std::move(items_.back());
        items_.pop_back();
        return std::make_pair(std::move(out.key), out.payload);
    }

    size_t size() const { return items_.size(); }

private:
    struct Item {
        KeyValue key;
        uint64_t seq;
        uint64_t payload;
    };
    struct Greater {
        bool operator()(const Item& a, const Item& b) const {
            const auto o = a.key.order(b.key);
            if (o != std::strong_ordering::equal) return o == std::strong_ordering::greater;
            return a.seq > b.seq;
        }
    };

    std::vector<Item> items_;
    Greater cmp_;
    uint64_t seq_ = 0;
};

}  // namespace

std::optional<BenchBackend> bench_backend_from_name(const std::string& s) {
    if (s == "ptrie") return BenchBackend::PTrie;
    if (s == "binheap") return BenchBackend::BinHeap;
    return std::nullopt;
}

BenchResult run_bench(const Workload& w, BenchBackend backend, uint32_t repeats) {
    for (const WorkloadOp& op : w.ops) {
        if (op.kind != OpKind::Insert && op.kind != OpKind::DeleteMin && op.kind != OpKind::Min)
            throw std::invalid_argument(
                "bench: workload must use only insert/delete-min/min ops for backend comparability");
    }
    if (repeats == 0) repeats = 1;

    BenchResult result;
    const char* bname = backend == BenchBackend::PTrie ? "ptrie" : "binheap";

    for (uint32_t rep = 0; rep < repeats; ++rep) {
        std::unique_ptr<Backend> trie;
        StableBinHeap heap;
        if (backend == BenchBackend::PTrie) trie = make_ptrie_backend(w.mode, w.k);

        auto do_insert = [&](const KeyValue& k, uint64_t p) {
            if (trie) trie->insert(k, p);
            else heap.insert(k, p);
        };
        auto do_delete_min = [&]() {
            return trie ? trie->delete_min() : heap.delete_min();
        };
        auto do_min = [&]() { return trie ? trie->min() : heap.min(); };
        auto remaining = [&]() { return trie ? trie->size() : heap.size(); };

        BenchRow ins{bname, rep, "insert"}, del{bname, rep, "delete_min"}, mn{bname, rep, "min"},
            drain{bname, rep, "drain"};
        uint64_t digest = kFnvOffset;
        uint64_t drained = 0;

        using clock = std::chrono::steady_clock;
        for (const WorkloadOp& op : w.ops) {
            const auto t0 = clock::now();
            switch (op.kind) {
                case OpKind::Insert:
                    do_insert(op.key, op.payload);
                    ++ins.count;
                    ins.total_ns += std::chrono::duration_cast<std::chrono::nanoseconds>(
                                        clock::now() - t0)
                                        .count();
                    break;
                case OpKind::DeleteMin: {
                    auto e = do_delete_min();
                    ++del.count;
                    del.total_ns += std::chrono::duration_cast<std::chrono::nanoseconds>(
                                        clock::now() - t0)
                                        .count();
                    if (e) {
                        fnv_mix(digest, key_bits_for_digest(e->first));
                        fnv_mix(digest, e->second);
                        ++drained;
                    }
                    break;
                }
                case OpKind::Min: {
                    auto e = do_min();
                    (void)e;
                    ++mn.count;
                    mn.total_ns += std::chrono::duration_cast<std::chrono::nanoseconds>(
                                       clock::now() - t0)
                                       .count();
                    break;
                }
                default:
                    break;
            }
        }

        const auto d0 = clock::now();
        while (remaining() > 0) {
            auto e = do_delete_min();
            fnv_mix(digest, key_bits_for_digest(e->first));
            fnv_mix(digest, e->second);
            ++drained;
            ++drain.count;
        }
        drain.total_ns =
            std::chrono::duration_cast<std::chrono::nanoseconds>(clock::now() - d0).count();

        if (trie) {
            for (const CoreCounterReport& c : trie->counter_reports()) {
                for (BenchRow* row : {&ins, &del, &mn, &drain}) {
                    row->max_layer_visits = std::max(row->max_layer_visits, c.max.layer_visits);
                    row->max_bst_comparisons =
                        std::max(row->max_bst_comparisons, c.max.bst_comparisons);
                }
            }
        }
        result.rows.push_back(ins);
        result.rows.push_back(del);
        result.rows.push_back(mn);
        result.rows.push_back(drain);
        result.drain_digest = digest;  // identical across repeats by construction
        result.drain_count = drained;
    }
    return result;
}

std::string bench_to_csv(const BenchResult& r) {
    std::ostringstream os;
    os << "backend,repeat,op,count,total_ns,ns_per_op,max_layer_visits,max_bst_comparisons\n";
    for (const BenchRow& row : r.rows) {
        const double per = row.count ? double(row.total_ns) / double(row.count) : 0.0;
        os << row.backend << "," << row.repeat << "," << row.op << "," << row.count << ","
           << row.total_ns << "," << per << "," << row.max_layer_visits << ","
           << row.max_bst_comparisons << "\n";
    }
    os << "# drain_count=" << r.drain_count << " drain_digest=" << r.drain_digest << "\n";
    return os.str();
}

std::string bench_to_json(const BenchResult& r) {
    nlohmann::json j;
    j["rows"] = nlohmann::json::array();
    for (const BenchRow& row : r.rows) {
        j["rows"].push_back({{"backend", row.backend},
                             {"repeat", row.repeat},
                             {"op", row.op},
                             {"count", row.count},
                             {"total_ns", row.total_ns},
                             {"max_layer_visits", row.max_layer_visits},
                             {"max_bst_comparisons", row.max_bst_comparisons}});
    }
    j["drain_count"] = r.drain_count;
    j["drain_digest"] = r.drain_digest;
    return j.dump(2);
}

}  // namespace ptrie::harness
