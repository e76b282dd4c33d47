#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "harness/keyvalue.hpp"

namespace ptrie::harness {

// Reference stable ordered multiset: a flat sequence sorted by (key, seq),
// deliberately naive so its behavior is evident by inspection. Insert is a
// stable insert, remove drops the oldest matching entry, delete-min drops
// the oldest entry of the smallest key.
class Oracle {
public:
    struct Item {
        KeyValue key;
        uint64_t seq;
        uint64_t payload;
    };

    void insert(const KeyValue& key, uint64_t payload) {
        auto it = std::upper_bound(items_.begin(), items_.end(), key,
                                   [](const KeyValue& k, const Item& b) { return k < b.key; });
        items_.insert(it, Item{key, seq_++, payload});
    }

    std::optional<uint64_t> remove(const KeyValue& key) {
        auto it = std::lower_bound(items_.begin(), items_.end(), key,
                                   [](const Item& a, const KeyValue& k) { return a.key < k; });
        if (it == items_.end() || !(it->key == key)) return std::nullopt;
        const uint64_t payload = it->payload;  // first of the run = oldest
        items_.erase(it);
        return payload;
    }

    bool search(const KeyValue& key) const {
        return std::binary_search(items_.begin(), items_.end(), key,
                                  detail_cmp());
    }

    std::optional<std::pair<KeyValue, uint64_t>> min() const {
        if (items_.empty()) return std::nullopt;
        return std::make_pair(items_.front().key, items_.front().payload);
    }

    // The node holding the maximum key; exposed entry is its oldest.
    std::optional<std::pair<KeyValue, uint64_t>> max() const {
        if (items_.empty()) return std::nullopt;
        const KeyValue& key = items_.back().key;
        auto it = std::lower_bound(items_.begin(), items_.end(), key,
                                   [](const Item& a, const KeyValue& k) { return a.key < k; });
        return std::make_pair(it->key, it->payload);
    }

    std::optional<std::pair<KeyValue, uint64_t>> delete_min() {
        if (items_.empty()) return std::nullopt;
        auto out = std::make_pair(items_.front().key, items_.front().payload);
        items_.erase(items_.begin());
        return out;
    }

    size_t size() const { return items_.size(); }

    void iterate(const std::function<void(const KeyValue&, uint64_t)>& fn) const {
        for (const Item& it : items_) fn(it.key, it.payload);
    }

private:
    struct detail_cmp {
        bool operator()(const Item& a, const KeyValue& k) const { return a.key < k; }
        bool operator()(const KeyValue& k, const Item& a) const { return k < a.key; }
    };

    std::vector<Item> items_;
    uint64_t seq_ = 0;
};

}  // namespace ptrie::harness
