#include "harness/backend.hpp"

#include <stdexcept>

namespace ptrie::harness {

namespace {

class UnsignedBackend final : public Backend {
public:
    UnsignedBackend(Mode mode, uint32_t k)
        : mode_(mode), cfg_(PatternConfig::fixed(k, mode_bits(mode))), trie_(cfg_) {}

    void insert(const KeyValue& key, uint64_t payload) override {
        trie_.insert(digits(key.u, cfg_), payload);
    }

    std::optional<uint64_t> remove(const KeyValue& key) override {
        auto e = trie_.remove(digits(key.u, cfg_));
        if (!e) return std::nullopt;
        return e->payload;
    }

    bool search(const KeyValue& key) const override { return trie_.search(digits(key.u, cfg_)); }

    std::optional<std::pair<KeyValue, uint64_t>> min() const override { return view(trie_.minimum()); }
    std::optional<std::pair<KeyValue, uint64_t>> max() const override { return view(trie_.maximum()); }

    std::optional<std::pair<KeyValue, uint64_t>> delete_min() override {
        auto e = trie_.delete_min();
        if (!e) return std::nullopt;
        return std::make_pair(KeyValue::of_u(mode_, key_bits_from_digits(e->key, cfg_)),
                              e->payload);
    }

    uint64_t size() const override { return trie_.size(); }

    void iterate(const std::function<void(const KeyValue&, uint64_t)>& fn) const override {
        auto n = trie_.minimum();
        while (n) {
            const KeyValue kv = KeyValue::of_u(mode_, key_bits_from_digits(n->key(), cfg_));
            for (const auto& qe : n->entries()) fn(kv, qe.payload);
            n = trie_.next(*n);
        }
    }

    std::vector<std::string> validate() const override { return trie_.validate(); }

    std::vector<CoreCounterReport> counter_reports() const override {
        return {{"core", trie_.counters_max(), cfg_.digit_count(), cfg_.radix()}};
    }

    std::vector<CoreStatsReport> stats_reports() const override {
        return {{"core", trie_.stats(), cfg_.digit_count()}};
    }

private:
    std::optional<std::pair<KeyValue, uint64_t>> view(
        const std::optional<PTrie<uint64_t>::NodeRef>& n) const {
        if (!n) return std::nullopt;
        return std::make_pair(KeyValue::of_u(mode_, key_bits_from_digits(n->key(), cfg_)),
                              n->front_payload());
    }

    Mode mode_;
    PatternConfig cfg_;
    PTrie<uint64_t> trie_;
};

class SignedBackend final : public Backend {
public:
    explicit SignedBackend(uint32_t k) : trie_(k) {}

    void insert(const KeyValue& key, uint64_t payload) override { trie_.insert(key.i, payload); }

    std::optional<uint64_t> remove(const KeyValue& key) override {
        auto e = trie_.remove(key.i);
        if (!e) return std::nullopt;
        return e->payload;
    }

    bool search(const KeyValue& key) const override { return trie_.search(key.i); }

    std::optional<std::pair<KeyValue, uint64_t>> min() const override { return view(trie_.minimum()); }
    std::optional<std::pair<KeyValue, uint64_t>> max() const override { return view(trie_.maximum()); }

    std::optional<std::pair<KeyValue, uint64_t>> delete_min() override {
        auto e = trie_.delete_min();
        if (!e) return std::nullopt;
        return std::make_pair(KeyValue::of_i(e->value), e->payload);
    }

    uint64_t size() const override { return trie_.size(); }

    void iterate(const std::function<void(const KeyValue&, uint64_t)>& fn) const override {
        // Negative core descending by magnitude, then positive core ascending.
        const auto& neg = trie_.negative();
        auto n = neg.maximum();
        while (n) {
            emit(*n, true, fn);
            n = neg.prev(*n);
        }
        const auto& pos = trie_.positive();
        auto p = pos.minimum();
        while (p) {
            emit(*p, false, fn);
            p = pos.next(*p);
        }
    }

    std::vector<std::string> validate() const override { return trie_.validate(); }
    std::vector<CoreCounterReport> counter_reports() const override { return trie_.counter_reports(); }
    std::vector<CoreStatsReport> stats_reports() const override { return trie_.stats_reports(); }

private:
    void emit(const PTrie<uint64_t>::NodeRef& n, bool negative,
              const std::function<void(const KeyValue&, uint64_t)>& fn) const {
        const uint64_t mag = key_bits_from_digits(n.key(), trie_.config());
        const int64_t v = negative ? static_cast<int64_t>(0 - mag) : static_cast<int64_t>(mag);
        for (const auto& qe : n.entries()) fn(KeyValue::of_i(v), qe.payload);
    }

    std::optional<std::pair<KeyValue, uint64_t>> view(
        const std::optional<SignedPTrie<uint64_t>::Ref>& r) const {
        if (!r) return std::nullopt;
        return std::make_pair(KeyValue::of_i(r->value(trie_)), r->node.front_payload());
    }

    SignedPTrie<uint64_t> trie_;
};

class FloatBackend final : public Backend {
public:
    explicit FloatBackend(uint32_t k) : trie_(k) {}

    void insert(const KeyValue& key, uint64_t payload) override { trie_.insert(key.f, payload); }

    std::optional<uint64_t> remove(const KeyValue& key) override {
        auto e = trie_.remove(key.f);
        if (!e) return std::nullopt;
        return e->payload;
    }

    bool search(const KeyValue& key) const override { return trie_.search(key.f); }

    std::optional<std::pair<KeyValue, uint64_t>> min() const override { return view(trie_.minimum()); }
    std::optional<std::pair<KeyValue, uint64_t>> max() const override { return view(trie_.maximum()); }

    std::optional<std::pair<KeyValue, uint64_t>> delete_min() override {
        auto e = trie_.delete_min();
        if (!e) return std::nullopt;
        return std::make_pair(KeyValue::of_f(e->value), e->payload);
    }

    uint64_t size() const override { return trie_.size(); }

    bool supports_iterate() const override { return false; }

    void iterate(const std::function<void(const KeyValue&, uint64_t)>&) const override {
        throw std::logic_error("float backend exposes no full iteration");
    }

    std::vector<std::string> validate() const override { return trie_.validate(); }
    std::vector<CoreCounterReport> counter_reports() const override { return trie_.counter_reports(); }
    std::vector<CoreStatsReport> stats_reports() const override { return trie_.stats_reports(); }

private:
    std::optional<std::pair<KeyValue, uint64_t>> view(
        const std::optional<FloatPTrie<uint64_t>::View>& v) const {
        if (!v) return std::nullopt;
        return std::make_pair(KeyValue::of_f(v->value), *v->payload);
    }

    FloatPTrie<uint64_t> trie_;
};

class StringBackend final : public Backend {
public:
    explicit StringBackend(uint32_t k) : cfg_(PatternConfig::strings(k)), trie_(cfg_) {}

    void insert(const KeyValue& key, uint64_t payload) override {
        const DigitString d = digits_string(key.s, cfg_);
        max_digits_ = std::max<uint64_t>(max_digits_, d.size());
        trie_.insert(d, payload);
    }

    std::optional<uint64_t> remove(const KeyValue& key) override {
        auto e = trie_.remove(digits_string(key.s, cfg_));
        if (!e) return std::nullopt;
        return e->payload;
    }

    bool search(const KeyValue& key) const override {
        return trie_.search(digits_string(key.s, cfg_));
    }

    std::optional<std::pair<KeyValue, uint64_t>> min() const override { return view(trie_.minimum()); }
    std::optional<std::pair<KeyValue, uint64_t>> max() const override { return view(trie_.maximum()); }

    std::optional<std::pair<KeyValue, uint64_t>> delete_min() override {
        auto e = trie_.delete_min();
        if (!e) return std::nullopt;
        return std::make_pair(KeyValue::of_s(string_from_digits(e->key, cfg_)), e->payload);
    }

    uint64_t size() const override { return trie_.size(); }

    void iterate(const std::function<void(const KeyValue&, uint64_t)>& fn) const override {
        auto n = trie_.minimum();
        while (n) {
            const KeyValue kv = KeyValue::of_s(string_from_digits(n->key(), cfg_));
            for (const auto& qe : n->entries()) fn(kv, qe.payload);
            n = trie_.next(*n);
        }
    }

    std::vector<std::string> validate() const override { return trie_.validate(); }

    std::vector<CoreCounterReport> counter_reports() const override {
        return {{"core", trie_.counters_max(), static_cast<uint32_t>(max_digits_), cfg_.radix()}};
    }

    std::vector<CoreStatsReport> stats_reports() const override {
        return {{"core", trie_.stats(), static_cast<uint32_t>(max_digits_)}};
    }

private:
    std::optional<std::pair<KeyValue, uint64_t>> view(
        const std::optional<PTrie<uint64_t>::NodeRef>& n) const {
        if (!n) return std::nullopt;
        return std::make_pair(KeyValue::of_s(string_from_digits(n->key(), cfg_)),
                              n->front_payload());
    }

    PatternConfig cfg_;
    PTrie<uint64_t> trie_;
    uint64_t max_digits_ = 0;
};

}  // namespace

std::unique_ptr<Backend> make_ptrie_backend(Mode mode, uint32_t k) {
    switch (mode) {
        case Mode::U8:
        case Mode::U16:
        case Mode::U32:
            return std::make_unique<UnsignedBackend>(mode, k);
        case Mode::I64:
            return std::make_unique<SignedBackend>(k);
        case Mode::F64:
            return std::make_unique<FloatBackend>(k);
        case Mode::Str:
            return std::make_unique<StringBackend>(k);
    }
    throw std::invalid_argument("unknown mode");
}

}  // namespace ptrie::harness
