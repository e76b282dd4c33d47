#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <sstream>

#include <json.hpp>

#include "harness/bench.hpp"
#include "harness/exhaustive.hpp"
#include "harness/oracle.hpp"
#include "harness/runner.hpp"
#include "harness/workload.hpp"
#include "ptrie/testing.hpp"

using namespace ptrie::harness;

namespace {

WorkloadOp ins(KeyValue k, uint64_t p) { return WorkloadOp{OpKind::Insert, std::move(k), p}; }
WorkloadOp rem(KeyValue k) { return WorkloadOp{OpKind::Remove, std::move(k), 0}; }

}  // namespace

TEST_CASE("oracle: min after inserts") {
    Oracle o;
    o.insert(KeyValue::of_u(Mode::U16, 5), 1);
    o.insert(KeyValue::of_u(Mode::U16, 3), 2);
    auto m = o.min();
    REQUIRE(m);
    CHECK(m->first.u == 3);
}

TEST_CASE("oracle_run produces per-op outputs") {
    Workload w;
    w.mode = Mode::U16;
    w.k = 4;
    w.ops = {ins(KeyValue::of_u(Mode::U16, 5), 0), ins(KeyValue::of_u(Mode::U16, 3), 1),
             WorkloadOp{OpKind::Min, {}, 0}};
    const auto out = oracle_run(w);
    REQUIRE(out.size() == 3);
    CHECK(out[2] == "u16:0003 p=1");

    Workload dup;
    dup.mode = Mode::U16;
    dup.k = 4;
    dup.ops = {ins(KeyValue::of_u(Mode::U16, 5), 100), ins(KeyValue::of_u(Mode::U16, 5), 200),
               rem(KeyValue::of_u(Mode::U16, 5))};
    CHECK(oracle_run(dup)[2] == "p=100 n=1");
}

TEST_CASE("oracle: remove takes the oldest duplicate") {
    Oracle o;
    o.insert(KeyValue::of_u(Mode::U16, 5), 100);  // A
    o.insert(KeyValue::of_u(Mode::U16, 5), 200);  // B
    auto removed = o.remove(KeyValue::of_u(Mode::U16, 5));
    REQUIRE(removed);
    CHECK(*removed == 100);
    CHECK(o.size() == 1);
}

TEST_CASE("key tokens round trip") {
    for (const KeyValue& kv : {
             KeyValue::of_u(Mode::U16, 0x1a2b),
             KeyValue::of_u(Mode::U32, 0),
             KeyValue::of_i(-123456789),
             KeyValue::of_f(1.5),
             KeyValue::of_f(-0.0),
             KeyValue::of_f(2.2250738585072014e-308),
             KeyValue::of_s("hello"),
             KeyValue::of_s(std::string("\x01\x7f\"back\\slash", 13)),
         }) {
        const std::string tok = format_key(kv);
        const KeyValue back = parse_key(tok, kv.mode);
        CHECK(back == kv);
        CHECK(format_key(back) == tok);
    }
    CHECK_THROWS(parse_key("u16:12", Mode::U16));       // wrong width
    CHECK_THROWS(parse_key("u16:0012", Mode::U32));     // wrong mode
    CHECK_THROWS(parse_key("f64:nan", Mode::F64));
}

TEST_CASE("workload files round trip byte for byte") {
    for (Mode mode : {Mode::U16, Mode::I64, Mode::F64, Mode::Str}) {
        const Workload w = gen_workload(mode, 4, 500, Dist::Uniform, 99);
        std::ostringstream first;
        write_workload(w, first);
        std::istringstream in(first.str());
        const Workload back = read_workload(in);
        std::ostringstream second;
        Workload back_named = back;
        back_named.name = w.name;
        back_named.seed = w.seed;
        write_workload(back_named, second);
        CHECK(first.str() == second.str());
        CHECK(back.ops.size() == w.ops.size());
    }
}

TEST_CASE("gen is deterministic under seed") {
    const Workload a = gen_workload(Mode::U32, 4, 2000, Dist::Clustered, 1234);
    const Workload b = gen_workload(Mode::U32, 4, 2000, Dist::Clustered, 1234);
    std::ostringstream sa, sb;
    write_workload(a, sa);
    write_workload(b, sb);
    CHECK(sa.str() == sb.str());
    const Workload c = gen_workload(Mode::U32, 4, 2000, Dist::Clustered, 1235);
    std::ostringstream sc;
    write_workload(c, sc);
    CHECK(sa.str() != sc.str());
}

TEST_CASE("gen: empty workload") {
    const Workload w = gen_workload(Mode::U16, 4, 0, Dist::Uniform, 1);
    CHECK(w.ops.empty());
    const RunReport r = diff_run(w);
    CHECK(r.passed());
}

TEST_CASE("gen: unknown distribution name is rejected at the parse layer") {
    CHECK(!dist_from_name("zipf"));
    CHECK(dist_from_name("duplicate-heavy").has_value());
}

TEST_CASE("clustered keys sit deeper than uniform keys") {
    for (Mode mode : {Mode::U32, Mode::I64}) {
        auto mean_depth = [&](Dist dist) {
            const Workload w = gen_workload(mode, 4, 4000, dist, 555);
            auto backend = make_ptrie_backend(mode, 4);
            for (const WorkloadOp& op : w.ops)
                if (op.kind == OpKind::Insert) backend->insert(op.key, op.payload);
            uint64_t depth_sum = 0, nodes = 0;
            for (const ptrie::CoreStatsReport& s : backend->stats_reports()) {
                depth_sum += s.stats.node_depth_sum;
                nodes += s.stats.node_count;
            }
            REQUIRE(nodes > 0);
            return double(depth_sum) / double(nodes);
        };
        CHECK(mean_depth(Dist::Clustered) > mean_depth(Dist::Uniform));
    }
}

TEST_CASE("diff: small workloads pass on every mode and k") {
    for (Mode mode : {Mode::U8, Mode::U16, Mode::U32, Mode::I64, Mode::F64, Mode::Str}) {
        for (uint32_t k : {1u, 2u, 4u, 8u}) {
            if (mode == Mode::U8 && k > 8) continue;
            for (Dist dist : {Dist::Uniform, Dist::Clustered, Dist::DuplicateHeavy}) {
                const Workload w = gen_workload(mode, k, 1500, dist, 42 + k);
                DiffOptions opt;
                opt.paranoid = true;
                const RunReport r = diff_run(w, opt);
                INFO(w.name);
                CHECK(r.passed());
            }
        }
    }
}

TEST_CASE("diff: ascending distribution drives the worst-case BST shape") {
    const Workload w = gen_workload(Mode::U32, 8, 3000, Dist::Ascending, 7);
    const RunReport r = diff_run(w);
    CHECK(r.passed());
    CHECK(r.max_bst_comparisons <= 256);
}

// A core that silently breaks a span link must be caught by the runner.
TEST_CASE("diff: fault-injected core is detected") {
    struct FaultyBackend final : Backend {
        ptrie::PatternConfig cfg = ptrie::PatternConfig::fixed(4, 16);
        mutable ptrie::PTrie<uint64_t> trie{cfg};
        size_t inserts = 0;

        void insert(const KeyValue& key, uint64_t payload) override {
            trie.insert(ptrie::digits(key.u, cfg), payload);
            if (++inserts == 2) {
                // Simulate a missed span update once a child layer exists.
                ptrie::PTrieTestAccess<uint64_t>::corrupt_child_span(trie) ||
                    ptrie::PTrieTestAccess<uint64_t>::corrupt_root_span(trie);
            }
        }
        std::optional<uint64_t> remove(const KeyValue& key) override {
            auto e = trie.remove(ptrie::digits(key.u, cfg));
            if (!e) return std::nullopt;
            return e->payload;
        }
        bool search(const KeyValue& key) const override {
            return trie.search(ptrie::digits(key.u, cfg));
        }
        std::optional<std::pair<KeyValue, uint64_t>> min() const override {
            auto n = trie.minimum();
            if (!n) return std::nullopt;
            return std::make_pair(
                KeyValue::of_u(Mode::U16, ptrie::key_bits_from_digits(n->key(), cfg)),
                n->front_payload());
        }
        std::optional<std::pair<KeyValue, uint64_t>> max() const override {
            auto n = trie.maximum();
            if (!n) return std::nullopt;
            return std::make_pair(
                KeyValue::of_u(Mode::U16, ptrie::key_bits_from_digits(n->key(), cfg)),
                n->front_payload());
        }
        std::optional<std::pair<KeyValue, uint64_t>> delete_min() override {
            auto e = trie.delete_min();
            if (!e) return std::nullopt;
            return std::make_pair(
                KeyValue::of_u(Mode::U16, ptrie::key_bits_from_digits(e->key, cfg)), e->payload);
        }
        uint64_t size() const override { return trie.size(); }
        void iterate(const std::function<void(const KeyValue&, uint64_t)>& fn) const override {
            auto n = trie.minimum();
            while (n) {
                for (const auto& qe : n->entries())
                    fn(KeyValue::of_u(Mode::U16, ptrie::key_bits_from_digits(n->key(), cfg)),
                       qe.payload);
                n = trie.next(*n);
            }
        }
        std::vector<std::string> validate() const override { return trie.validate(); }
        std::vector<ptrie::CoreCounterReport> counter_reports() const override {
            return {{"core", trie.counters_max(), cfg.digit_count(), cfg.radix()}};
        }
        std::vector<ptrie::CoreStatsReport> stats_reports() const override {
            return {{"core", trie.stats(), cfg.digit_count()}};
        }
    };

    Workload w;
    w.mode = Mode::U16;
    w.k = 4;
    w.name = "fault-injection";
    // Two keys sharing a prefix build a child layer; the corrupted span then
    // misroutes the splice of the third key.
    w.ops = {ins(KeyValue::of_u(Mode::U16, 0x5100), 1), ins(KeyValue::of_u(Mode::U16, 0x5200), 2),
             ins(KeyValue::of_u(Mode::U16, 0x3000), 3), WorkloadOp{OpKind::IterateAll, {}, 0},
             WorkloadOp{OpKind::Min, {}, 0},            WorkloadOp{OpKind::Validate, {}, 0}};

    DiffOptions opt;
    opt.backend_factory = [] { return std::make_unique<FaultyBackend>(); };
    const RunReport r = diff_run(w, opt);
    CHECK(!r.passed());
    CHECK((!r.mismatches.empty() || r.violations > 0));

    // The healthy core passes the same script.
    const RunReport ok = diff_run(w);
    CHECK(ok.passed());
}

TEST_CASE("minimize_failure shrinks to the essentials") {
    // Build a failing workload using a backend that corrupts after the 2nd
    // insert; padding ops before it are droppable.
    struct Counter {
        int n = 0;
    };
    auto shared = std::make_shared<Counter>();

    struct FlakyBackend final : Backend {
        std::shared_ptr<Counter> c;
        ptrie::PatternConfig cfg = ptrie::PatternConfig::fixed(4, 16);
        ptrie::PTrie<uint64_t> trie{cfg};
        explicit FlakyBackend(std::shared_ptr<Counter> c) : c(std::move(c)) {}

        void insert(const KeyValue& key, uint64_t payload) override {
            trie.insert(ptrie::digits(key.u, cfg), payload);
            if (trie.distinct() >= 3)
                ptrie::PTrieTestAccess<uint64_t>::corrupt_child_span(trie);
        }
        std::optional<uint64_t> remove(const KeyValue& key) override {
            auto e = trie.remove(ptrie::digits(key.u, cfg));
            if (!e) return std::nullopt;
            return e->payload;
        }
        bool search(const KeyValue& key) const override {
            return trie.search(ptrie::digits(key.u, cfg));
        }
        std::optional<std::pair<KeyValue, uint64_t>> min() const override {
            auto n = trie.minimum();
            if (!n) return std::nullopt;
            return std::make_pair(
                KeyValue::of_u(Mode::U16, ptrie::key_bits_from_digits(n->key(), cfg)),
                n->front_payload());
        }
        std::optional<std::pair<KeyValue, uint64_t>> max() const override { return min(); }
        std::optional<std::pair<KeyValue, uint64_t>> delete_min() override {
            auto e = trie.delete_min();
            if (!e) return std::nullopt;
            return std::make_pair(
                KeyValue::of_u(Mode::U16, ptrie::key_bits_from_digits(e->key, cfg)), e->payload);
        }
        uint64_t size() const override { return trie.size(); }
        void iterate(const std::function<void(const KeyValue&, uint64_t)>& fn) const override {
            auto n = trie.minimum();
            while (n) {
                for (const auto& qe : n->entries())
                    fn(KeyValue::of_u(Mode::U16, ptrie::key_bits_from_digits(n->key(), cfg)),
                       qe.payload);
                n = trie.next(*n);
            }
        }
        std::vector<std::string> validate() const override { return trie.validate(); }
        std::vector<ptrie::CoreCounterReport> counter_reports() const override { return {}; }
        std::vector<ptrie::CoreStatsReport> stats_reports() const override { return {}; }
    };

    Workload w;
    w.mode = Mode::U16;
    w.k = 4;
    w.name = "shrink";
    w.ops = {ins(KeyValue::of_u(Mode::U16, 0x1000), 1),  // unrelated, droppable
             ins(KeyValue::of_u(Mode::U16, 0x5100), 2),
             rem(KeyValue::of_u(Mode::U16, 0x1000)),     // droppable
             ins(KeyValue::of_u(Mode::U16, 0x5200), 3),
             ins(KeyValue::of_u(Mode::U16, 0x5300), 4),
             WorkloadOp{OpKind::Validate, {}, 0}};

    DiffOptions opt;
    opt.backend_factory = [shared] { return std::make_unique<FlakyBackend>(shared); };
    REQUIRE(!diff_run(w, opt).passed());
    const Workload small = minimize_failure(w, opt);
    CHECK(small.ops.size() < w.ops.size());
    REQUIRE(!diff_run(small, opt).passed());
}

TEST_CASE("replays are deterministic apart from wall-clock fields") {
    const Workload w = gen_workload(Mode::I64, 2, 2500, Dist::DuplicateHeavy, 8);
    const RunReport a = diff_run(w);
    const RunReport b = diff_run(w);
    CHECK(a.mismatches.empty());
    CHECK(b.mismatches.empty());
    CHECK(a.violations == b.violations);
    CHECK(a.max_layer_visits == b.max_layer_visits);
    CHECK(a.max_bst_comparisons == b.max_bst_comparisons);
    CHECK(a.depth_max == b.depth_max);
    CHECK(a.layers_per_level == b.layers_per_level);
}

TEST_CASE("report json carries the stable field names") {
    const Workload w = gen_workload(Mode::U16, 4, 300, Dist::Uniform, 3);
    const RunReport r = diff_run(w);
    const auto j = nlohmann::json::parse(report_to_json(r));
    for (const char* field : {"mismatches", "max_layer_visits", "max_bst_comparisons",
                              "depth_max", "layers_per_level", "timings"})
        CHECK(j.contains(field));
    CHECK(j["mismatches"].is_array());
}

TEST_CASE("bench: both backends drain identically") {
    Workload w;
    w.mode = Mode::U32;
    w.k = 4;
    w.name = "pq";
    std::mt19937_64 rng(12);
    for (int i = 0; i < 4000; ++i) {
        if (i % 5 == 4) {
            w.ops.push_back(WorkloadOp{OpKind::DeleteMin, {}, 0});
        } else {
            w.ops.push_back(ins(KeyValue::of_u(Mode::U32, rng() & 0xffff), uint64_t(i)));
        }
    }
    const BenchResult a = run_bench(w, BenchBackend::PTrie, 1);
    const BenchResult b = run_bench(w, BenchBackend::BinHeap, 1);
    CHECK(a.drain_count == b.drain_count);
    CHECK(a.drain_digest == b.drain_digest);
    CHECK(!bench_to_csv(a).empty());

    Workload bad = w;
    bad.ops.push_back(WorkloadOp{OpKind::Search, KeyValue::of_u(Mode::U32, 1), 0});
    CHECK_THROWS_AS(run_bench(bad, BenchBackend::BinHeap, 1), std::invalid_argument);
}

TEST_CASE("bench: generated pq workloads are backend-compatible") {
    for (Mode mode : {Mode::U32, Mode::F64}) {
        const Workload w = gen_workload(mode, 4, 5000, Dist::Uniform, 21, /*pq_only=*/true);
        const BenchResult a = run_bench(w, BenchBackend::PTrie, 1);
        const BenchResult b = run_bench(w, BenchBackend::BinHeap, 1);
        CHECK(a.drain_digest == b.drain_digest);
        CHECK(a.drain_count == b.drain_count);
    }
}

TEST_CASE("bench: empty workload gives zero-valued rows") {
    Workload w;
    w.mode = Mode::U32;
    w.k = 4;
    const BenchResult r = run_bench(w, BenchBackend::PTrie, 1);
    for (const BenchRow& row : r.rows) CHECK(row.count == 0);
    CHECK(r.drain_count == 0);
}

TEST_CASE("exhaustive state exploration at depth 5") {
    const ExhaustiveResult r = exhaustive_check(5);
    INFO(r.first_mismatch);
    CHECK(r.mismatches == 0);
    CHECK(r.states > 100);
    CHECK(r.transitions > 1000);
}

// Wider digits and deeper keys exercise multi-level push-down chains,
// cascades and span repairs across several layers; still a complete
// enumeration of the reachable state space at this depth.
TEST_CASE("exhaustive state exploration over 4-bit keys") {
    for (uint32_t k : {1u, 2u}) {
        const ExhaustiveResult r = exhaustive_check(3, k, 4);
        INFO("k=", k, " ", r.first_mismatch);
        CHECK(r.mismatches == 0);
        CHECK(r.states > 500);
    }
}
