#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "harness/keyvalue.hpp"
#include "ptrie/adapters.hpp"

namespace ptrie::harness {

// Mode-erased view of a trie (plain core or adapter) driven by workloads.
class Backend {
public:
    virtual ~Backend() = default;

    virtual void insert(const KeyValue& key, uint64_t payload) = 0;
    virtual std::optional<uint64_t> remove(const KeyValue& key) = 0;
    virtual bool search(const KeyValue& key) const = 0;
    virtual std::optional<std::pair<KeyValue, uint64_t>> min() const = 0;
    virtual std::optional<std::pair<KeyValue, uint64_t>> max() const = 0;
    virtual std::optional<std::pair<KeyValue, uint64_t>> delete_min() = 0;
    virtual uint64_t size() const = 0;

    virtual bool supports_iterate() const { return true; }
    virtual void iterate(const std::function<void(const KeyValue&, uint64_t)>& fn) const = 0;

    virtual std::vector<std::string> validate() const = 0;
    virtual std::vector<CoreCounterReport> counter_reports() const = 0;
    virtual std::vector<CoreStatsReport> stats_reports() const = 0;
};

std::unique_ptr<Backend> make_ptrie_backend(Mode mode, uint32_t k);

}  // namespace ptrie::harness
