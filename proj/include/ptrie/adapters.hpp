#pragma once

#include <bit>
#include <cmath>
#include <cstdint>
#include <memory>
#include <optional>

#include "ptrie/core.hpp"

namespace ptrie {

// Reports used by the harness to check per-core step and depth bounds.
struct CoreCounterReport {
    std::string name;
    OpCounters max;
    uint32_t digit_count;  // descent bound in layers; layer_visits <= 2*digit_count + 1
    uint32_t radix;
};

struct CoreStatsReport {
    std::string name;
    LayerStats stats;
    uint32_t digit_count;  // depth bound in layers
};

// Signed integers as two tries: one for v >= 0 (zero included), one for
// v < 0 keyed by magnitude. The global minimum of a nonempty negative side
// is its maximum-magnitude node, so min/max stay O(1).
template <typename Payload>
class SignedPTrie {
public:
    using Core = PTrie<Payload>;

    struct Entry {
        int64_t value;
        Payload payload;
        uint64_t seq;
    };

    struct Ref {
        bool negative;
        typename Core::NodeRef node;

        int64_t value(const SignedPTrie& t) const {
            const uint64_t mag = key_bits_from_digits(node.key(), t.cfg_);
            return decode(negative, mag);
        }
    };

    explicit SignedPTrie(uint32_t k, uint32_t magnitude_bits = 64)
        : cfg_(PatternConfig::fixed(k, magnitude_bits)), pos_(cfg_), neg_(cfg_) {}

    uint64_t size() const { return pos_.size() + neg_.size(); }
    bool empty() const { return size() == 0; }
    const Core& positive() const { return pos_; }
    const Core& negative() const { return neg_; }
    const PatternConfig& config() const { return cfg_; }

    Ref insert(int64_t v, Payload payload) {
        const bool neg = v < 0;
        Core& core = neg ? neg_ : pos_;
        auto ref = core.insert(encode(v), std::move(payload));
        return Ref{neg, ref};
    }

    bool search(int64_t v) const { return core_for(v).search(encode(v)); }

    std::optional<Ref> find(int64_t v) const {
        auto ref = core_for(v).find(encode(v));
        if (!ref) return std::nullopt;
        return Ref{v < 0, *ref};
    }

    std::optional<Entry> remove(int64_t v) {
        Core& core = v < 0 ? neg_ : pos_;
        auto e = core.remove(encode(v));
        if (!e) return std::nullopt;
        return Entry{v, std::move(e->payload), e->seq};
    }

    std::optional<Ref> minimum() const {
        if (auto n = neg_.maximum()) return Ref{true, *n};
        if (auto p = pos_.minimum()) return Ref{false, *p};
        return std::nullopt;
    }

    std::optional<Ref> maximum() const {
        if (auto p = pos_.maximum()) return Ref{false, *p};
        if (auto n = neg_.minimum()) return Ref{true, *n};
        return std::nullopt;
    }

    std::optional<Entry> delete_min() {
        if (auto n = neg_.maximum()) {
            const DigitString key = n->key();
            auto e = neg_.remove(key);
            return Entry{decode(true, key_bits_from_digits(e->key, cfg_)), std::move(e->payload),
                         e->seq};
        }
        auto e = pos_.delete_min();
        if (!e) return std::nullopt;
        return Entry{decode(false, key_bits_from_digits(e->key, cfg_)), std::move(e->payload),
                     e->seq};
    }

    std::vector<std::string> validate() const {
        std::vector<std::string> out = pos_.validate();
        for (auto& v : neg_.validate()) out.push_back("neg: " + v);
        return out;
    }

    std::vector<CoreCounterReport> counter_reports() const {
        return {{"pos", pos_.counters_max(), cfg_.digit_count(), cfg_.radix()},
                {"neg", neg_.counters_max(), cfg_.digit_count(), cfg_.radix()}};
    }

    std::vector<CoreStatsReport> stats_reports() const {
        return {{"pos", pos_.stats(), cfg_.digit_count()},
                {"neg", neg_.stats(), cfg_.digit_count()}};
    }

    void reset_counters_max() {
        pos_.reset_counters_max();
        neg_.reset_counters_max();
    }

private:
    DigitString encode(int64_t v) const {
        const uint64_t mag = v < 0 ? ~static_cast<uint64_t>(v) + 1 : static_cast<uint64_t>(v);
        return digits(mag, cfg_);
    }

    static int64_t decode(bool negative, uint64_t magnitude) {
        return negative ? std::bit_cast<int64_t>(~magnitude + 1)
                        : static_cast<int64_t>(magnitude);
    }

    const Core& core_for(int64_t v) const { return v < 0 ? neg_ : pos_; }

    PatternConfig cfg_;
    Core pos_;
    Core neg_;
};

// IEEE-754 doubles as nested tries: the outer structure is a SignedPTrie
// keyed by exponent (sign decides the side, so negative values order by
// descending exponent), and each distinct (sign, exponent) holds exactly one
// entry whose payload is an inner trie over the 52 mantissa bits. Negative
// groups read their extreme through the inner maximum, mirroring the outer
// trick. NaN is rejected; -0 is normalized to +0. Exposes the priority-queue
// surface plus exact-key search/remove; no full iteration.
template <typename Payload>
class FloatPTrie {
public:
    struct Entry {
        double value;
        Payload payload;
    };

    struct View {
        double value;
        const Payload* payload;
    };

    explicit FloatPTrie(uint32_t k, bool allow_infinity = true)
        : k_(k), allow_infinity_(allow_infinity),
          mantissa_cfg_(PatternConfig::fixed(k, kMantissaBits)),
          outer_(k, kExponentKeyBits) {}

    uint64_t size() const { return count_; }
    bool empty() const { return count_ == 0; }

    View insert(double v, Payload payload) {
        const Decomposed d = decompose(v);
        Inner* inner;
        if (auto ref = outer_.find(d.outer_key)) {
            inner = ref->node.front_payload().get();
        } else {
            auto holder = std::make_unique<Inner>(mantissa_cfg_);
            inner = holder.get();
            outer_.insert(d.outer_key, std::move(holder));
        }
        auto ref = inner->trie.insert(digits(d.mantissa, mantissa_cfg_), std::move(payload));
        fold_inner_counters(inner->trie);
        ++count_;
        return View{d.value, &ref.front_payload()};
    }

    bool search(double v) const {
        const Decomposed d = decompose(v);
        auto ref = outer_.find(d.outer_key);
        if (!ref) return false;
        Inner* inner = ref->node.front_payload().get();
        const bool hit = inner->trie.search(digits(d.mantissa, mantissa_cfg_));
        fold_inner_counters(inner->trie);
        return hit;
    }

    std::optional<Entry> remove(double v) {
        const Decomposed d = decompose(v);
        auto ref = outer_.find(d.outer_key);
        if (!ref) return std::nullopt;
        Inner* inner = ref->node.front_payload().get();
        auto e = inner->trie.remove(digits(d.mantissa, mantissa_cfg_));
        fold_inner_counters(inner->trie);
        if (!e) return std::nullopt;
        if (inner->trie.empty()) outer_.remove(d.outer_key);
        --count_;
        return Entry{d.value, std::move(e->payload)};
    }

    std::optional<View> minimum() const { return extreme(/*want_min=*/true); }
    std::optional<View> maximum() const { return extreme(/*want_min=*/false); }

    std::optional<Entry> delete_min() {
        auto loc = locate_extreme(/*want_min=*/true);
        if (!loc) return std::nullopt;
        auto e = loc->inner->trie.remove(loc->mantissa_key);
        fold_inner_counters(loc->inner->trie);
        if (loc->inner->trie.empty()) outer_.remove(loc->outer_key);
        --count_;
        return Entry{loc->value, std::move(e->payload)};
    }

    std::vector<std::string> validate() const {
        std::vector<std::string> out;
        for (auto& v : outer_.validate()) out.push_back("outer " + v);
        uint64_t entries = 0;
        for_each_group([&](int64_t okey, const Inner& inner) {
            if (inner.trie.empty())
                out.push_back("inner trie empty for exponent key " + std::to_string(okey));
            entries += inner.trie.size();
        });
        for_each_outer_node([&](const auto& node) {
            if (node.entry_count() != 1)
                out.push_back("outer node holds more than one inner trie");
        });
        if (entries != count_) out.push_back("count: inner totals mismatch");
        return out;
    }

    std::vector<CoreCounterReport> counter_reports() const {
        auto out = outer_.counter_reports();
        for (auto& r : out) r.name = "exp_" + r.name;
        out.push_back({"mantissa", inner_counters_max_, mantissa_cfg_.digit_count(),
                       mantissa_cfg_.radix()});
        return out;
    }

    std::vector<CoreStatsReport> stats_reports() const {
        auto out = outer_.stats_reports();
        for (auto& r : out) r.name = "exp_" + r.name;
        for_each_group([&](int64_t okey, const Inner& inner) {
            out.push_back({"mantissa_" + std::to_string(okey), inner.trie.stats(),
                           mantissa_cfg_.digit_count()});
        });
        return out;
    }

    void reset_counters_max() {
        outer_.reset_counters_max();
        inner_counters_max_.reset();
    }

private:
    static constexpr uint32_t kMantissaBits = 52;
    // Outer keys are +/-(biased exponent + 1), so magnitudes span [1, 2048].
    static constexpr uint32_t kExponentKeyBits = 12;

    struct Inner {
        explicit Inner(const PatternConfig& cfg) : trie(cfg) {}
        PTrie<Payload> trie;
    };

    using Outer = SignedPTrie<std::unique_ptr<Inner>>;

    struct Decomposed {
        double value;
        bool sign;
        uint32_t exponent;
        uint64_t mantissa;
        int64_t outer_key;
    };

    struct Located {
        Inner* inner;
        int64_t outer_key;
        DigitString mantissa_key;
        double value;
        const Payload* front_payload;
    };

    Decomposed decompose(double v) const {
        if (std::isnan(v)) throw std::invalid_argument("FloatPTrie: NaN keys are not supported");
        if (!allow_infinity_ && std::isinf(v))
            throw std::invalid_argument("FloatPTrie: infinite keys disabled");
        if (v == 0.0) v = 0.0;  // normalize -0
        const uint64_t bits = std::bit_cast<uint64_t>(v);
        const bool sign = bits >> 63;
        const uint32_t exponent = static_cast<uint32_t>((bits >> 52) & 0x7ff);
        const uint64_t mantissa = bits & ((uint64_t{1} << 52) - 1);
        const int64_t outer_key =
            sign ? -static_cast<int64_t>(exponent + 1) : static_cast<int64_t>(exponent + 1);
        return Decomposed{v, sign, exponent, mantissa, outer_key};
    }

    static double compose(bool sign, uint32_t exponent, uint64_t mantissa) {
        const uint64_t bits =
            (static_cast<uint64_t>(sign) << 63) | (static_cast<uint64_t>(exponent) << 52) | mantissa;
        return std::bit_cast<double>(bits);
    }

    std::optional<Located> locate_extreme(bool want_min) const {
        auto oref = want_min ? outer_.minimum() : outer_.maximum();
        if (!oref) return std::nullopt;
        const int64_t okey = oref->value(outer_);
        const bool sign = okey < 0;
        const uint32_t exponent = static_cast<uint32_t>((sign ? -okey : okey) - 1);
        Inner* inner = oref->node.front_payload().get();
        // Negative side: larger mantissa means smaller value.
        const bool take_inner_max = sign == want_min;
        auto nref = take_inner_max ? inner->trie.maximum() : inner->trie.minimum();
        const uint64_t mantissa = key_bits_from_digits(nref->key(), mantissa_cfg_);
        return Located{inner, okey, nref->key(), compose(sign, exponent, mantissa),
                       &nref->front_payload()};
    }

    std::optional<View> extreme(bool want_min) const {
        auto loc = locate_extreme(want_min);
        if (!loc) return std::nullopt;
        return View{loc->value, loc->front_payload};
    }

    template <typename Fn>
    void for_each_outer_node(Fn&& fn) const {
        for (const auto* core : {&outer_.positive(), &outer_.negative()}) {
            auto n = core->minimum();
            while (n) {
                fn(*n);
                n = core->next(*n);
            }
        }
    }

    template <typename Fn>
    void for_each_group(Fn&& fn) const {
        auto walk = [&](const PTrie<std::unique_ptr<Inner>>& core, bool negative) {
            auto n = core.minimum();
            while (n) {
                const uint64_t mag = key_bits_from_digits(n->key(), outer_.config());
                const int64_t okey = negative ? -static_cast<int64_t>(mag)
                                              : static_cast<int64_t>(mag);
                fn(okey, *n->entries().front().payload);
                n = core.next(*n);
            }
        };
        walk(outer_.positive(), false);
        walk(outer_.negative(), true);
    }

    void fold_inner_counters(const PTrie<Payload>& trie) const {
        inner_counters_max_.fold_max(trie.counters());
    }

    uint32_t k_;
    bool allow_infinity_;
    PatternConfig mantissa_cfg_;
    Outer outer_;
    uint64_t count_ = 0;
    mutable OpCounters inner_counters_max_;
};

}  // namespace ptrie
