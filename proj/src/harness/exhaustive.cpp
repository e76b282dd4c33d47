#include "harness/exhaustive.hpp"

#include <chrono>
#include <deque>
#include <optional>
#include <sstream>
#include <unordered_map>
#include <vector>

#include "harness/keyvalue.hpp"
#include "harness/oracle.hpp"
#include "ptrie/core.hpp"
#include "ptrie/testing.hpp"

namespace ptrie::harness {

namespace {

// Mutating alphabet: [0, n_keys) insert, [n_keys, 2*n_keys) remove,
// 2*n_keys delete-min.
struct World {
    PatternConfig cfg;
    uint64_t n_keys;
    PTrie<uint64_t> trie;
    Oracle oracle;

    World(uint32_t k, uint32_t m)
        : cfg(PatternConfig::fixed(k, m)), n_keys(uint64_t{1} << m), trie(cfg) {}

    uint64_t bound_visits() const { return 2 * uint64_t{cfg.digit_count()} + 1; }

    // Payloads are a function of state, not history, so identical states
    // stay identical: payload = key * 64 + copy number.
    uint64_t next_payload(uint64_t key) const {
        uint64_t copies = 0;
        oracle.iterate([&](const KeyValue& k, uint64_t) {
            if (k.u == key) ++copies;
        });
        return key * 64 + copies + 1;
    }

    void apply(int op) {
        const uint64_t n = n_keys;
        if (op < int(n)) {
            const uint64_t key = uint64_t(op);
            const uint64_t payload = next_payload(key);
            trie.insert(digits(key, cfg), payload);
            oracle.insert(KeyValue::of_u(Mode::U8, key), payload);
        } else if (op < int(2 * n)) {
            const uint64_t key = uint64_t(op) - n;
            trie.remove(digits(key, cfg));
            oracle.remove(KeyValue::of_u(Mode::U8, key));
        } else {
            trie.delete_min();
            oracle.delete_min();
        }
    }

    // Applies op comparing outputs; returns a mismatch description or empty.
    std::string apply_checked(int op, uint64_t& checks) {
        std::string got, want;
        const uint64_t n = n_keys;
        if (op < int(n)) {
            const uint64_t key = uint64_t(op);
            const uint64_t payload = next_payload(key);
            auto ref = trie.insert(digits(key, cfg), payload);
            oracle.insert(KeyValue::of_u(Mode::U8, key), payload);
            got = "ins@" + std::to_string(key_bits_from_digits(ref.key(), cfg));
            want = "ins@" + std::to_string(key);
            if (trie.counters().layer_visits > bound_visits() ||
                trie.counters().bst_comparisons > cfg.radix())
                return "insert exceeded step bounds";
        } else if (op < int(2 * n)) {
            const uint64_t key = uint64_t(op) - n;
            auto a = trie.remove(digits(key, cfg));
            auto b = oracle.remove(KeyValue::of_u(Mode::U8, key));
            got = a ? "p=" + std::to_string(a->payload) : "absent";
            want = b ? "p=" + std::to_string(*b) : "absent";
            if (trie.counters().layer_visits > bound_visits() ||
                trie.counters().bst_comparisons > cfg.radix())
                return "remove exceeded step bounds";
        } else {
            auto a = trie.delete_min();
            auto b = oracle.delete_min();
            got = a ? "k=" + std::to_string(key_bits_from_digits(a->key, cfg)) +
                          " p=" + std::to_string(a->payload)
                    : "absent";
            want = b ? "k=" + std::to_string(b->first.u) + " p=" + std::to_string(b->second)
                     : "absent";
        }
        ++checks;
        if (got != want) return "op output: trie=" + got + " oracle=" + want;
        return "";
    }

    // Read-only battery: searches, extremes, full in-order content, sizes,
    // structure validation. Never changes state.
    std::string battery(uint64_t& checks) {
        for (uint64_t key = 0; key < n_keys; ++key) {
            ++checks;
            if (trie.search(digits(key, cfg)) != oracle.search(KeyValue::of_u(Mode::U8, key)))
                return "search(" + std::to_string(key) + ") diverged";
            if (trie.counters().layer_visits > cfg.digit_count())
                return "search exceeded step bounds";
        }
        ++checks;
        {
            auto a = trie.minimum();
            auto b = oracle.min();
            if (a.has_value() != b.has_value()) return "minimum presence diverged";
            if (a && (key_bits_from_digits(a->key(), cfg) != b->first.u ||
                      a->front_payload() != b->second))
                return "minimum diverged";
            if (trie.counters().link_reads > 3) return "minimum exceeded link reads";
        }
        ++checks;
        {
            auto a = trie.maximum();
            auto b = oracle.max();
            if (a.has_value() != b.has_value()) return "maximum presence diverged";
            if (a && (key_bits_from_digits(a->key(), cfg) != b->first.u ||
                      a->front_payload() != b->second))
                return "maximum diverged";
        }
        ++checks;
        {
            std::vector<std::pair<uint64_t, uint64_t>> got, want;
            auto n = trie.minimum();
            while (n) {
                for (const auto& qe : n->entries())
                    got.emplace_back(key_bits_from_digits(n->key(), cfg), qe.payload);
                n = trie.next(*n);
            }
            oracle.iterate([&](const KeyValue& k, uint64_t p) { want.emplace_back(k.u, p); });
            if (got != want) return "in-order content diverged";
        }
        ++checks;
        if (trie.size() != oracle.size()) return "size diverged";
        ++checks;
        {
            const auto violations = trie.validate();
            if (!violations.empty()) return "validate: " + violations.front();
        }
        return "";
    }
};

struct StateRec {
    int32_t parent;  // -1 for the empty state
    int16_t op;
    uint8_t depth;
};

}  // namespace

ExhaustiveResult exhaustive_check(uint32_t max_len, uint32_t k, uint32_t m) {
    const auto t0 = std::chrono::steady_clock::now();
    ExhaustiveResult result;
    const int n_ops = 2 * (1 << m) + 1;

    std::unordered_map<std::string, int32_t> seen;
    std::vector<StateRec> states;
    std::deque<int32_t> frontier;

    auto serial = [](World& w) { return PTrieTestAccess<uint64_t>::serialize(w.trie); };

    {
        World w(k, m);
        std::string err = w.battery(result.checks);
        if (!err.empty()) {
            result.mismatches = 1;
            result.first_mismatch = "empty state: " + err;
            return result;
        }
        seen.emplace(serial(w), 0);
        states.push_back(StateRec{-1, 0, 0});
        frontier.push_back(0);
        result.states = 1;
    }

    std::vector<int16_t> path;
    while (!frontier.empty()) {
        const int32_t sid = frontier.front();
        frontier.pop_front();
        if (states[sid].depth >= max_len) continue;

        // Reconstruct this state's build sequence.
        path.clear();
        for (int32_t cur = sid; cur > 0; cur = states[cur].parent) path.push_back(states[cur].op);

        for (int op = 0; op < n_ops; ++op) {
            World w(k, m);
            for (auto it = path.rbegin(); it != path.rend(); ++it) w.apply(*it);

            std::string err = w.apply_checked(op, result.checks);
            ++result.transitions;
            if (err.empty()) err = w.battery(result.checks);
            if (!err.empty()) {
                ++result.mismatches;
                if (result.first_mismatch.empty()) {
                    std::ostringstream os;
                    os << "k=" << k << " m=" << m << " after ops [";
                    for (auto it = path.rbegin(); it != path.rend(); ++it) os << *it << " ";
                    os << op << "]: " << err;
                    result.first_mismatch = os.str();
                }
                continue;
            }

            auto [it, fresh] = seen.emplace(serial(w), int32_t(states.size()));
            if (fresh) {
                states.push_back(StateRec{sid, int16_t(op), uint8_t(states[sid].depth + 1)});
                frontier.push_back(it->second);
                ++result.states;
            }
        }
    }

    result.elapsed_s =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return result;
}

}  // namespace ptrie::harness
