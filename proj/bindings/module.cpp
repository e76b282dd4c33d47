#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ptrie/adapters.hpp"
#include "ptrie/analysis.hpp"
#include "ptrie/core.hpp"

namespace py = pybind11;

namespace {

using ptrie::DigitString;
using ptrie::PatternConfig;

// Python-facing wrappers keep keys as plain ints/floats/bytes and payloads
// as opaque 64-bit ints.

class UIntPTrie {
public:
    UIntPTrie(uint32_t k, uint32_t m) : cfg_(PatternConfig::fixed(k, m)), trie_(cfg_) {}

    void insert(uint64_t key, uint64_t payload) { trie_.insert(ptrie::digits(key, cfg_), payload); }
    bool search(uint64_t key) const { return trie_.search(ptrie::digits(key, cfg_)); }

    std::optional<uint64_t> remove(uint64_t key) {
        auto e = trie_.remove(ptrie::digits(key, cfg_));
        if (!e) return std::nullopt;
        return e->payload;
    }

    std::optional<std::pair<uint64_t, uint64_t>> delete_min() {
        auto e = trie_.delete_min();
        if (!e) return std::nullopt;
        return std::make_pair(ptrie::key_bits_from_digits(e->key, cfg_), e->payload);
    }

    std::optional<std::pair<uint64_t, uint64_t>> minimum() const { return view(trie_.minimum()); }
    std::optional<std::pair<uint64_t, uint64_t>> maximum() const { return view(trie_.maximum()); }

    std::vector<std::pair<uint64_t, uint64_t>> items() const {
        std::vector<std::pair<uint64_t, uint64_t>> out;
        auto n = trie_.minimum();
        while (n) {
            const uint64_t key = ptrie::key_bits_from_digits(n->key(), cfg_);
            for (const auto& qe : n->entries()) out.emplace_back(key, qe.payload);
            n = trie_.next(*n);
        }
        return out;
    }

    uint64_t size() const { return trie_.size(); }
    uint64_t distinct() const { return trie_.distinct(); }
    std::vector<std::string> validate() const { return trie_.validate(); }

    py::dict stats() const {
        const ptrie::LayerStats s = trie_.stats();
        py::dict d;
        d["layers_per_level"] = s.layers_per_level;
        d["layer_count"] = s.layer_count;
        d["node_count"] = s.node_count;
        d["entry_count"] = s.entry_count;
        d["depth_max"] = s.depth_max;
        d["slot_memory"] = s.slot_memory;
        d["bst_height_max"] = s.bst_height_max;
        return d;
    }

    py::dict counters() const {
        const ptrie::OpCounters& c = trie_.counters();
        py::dict d;
        d["layer_visits"] = c.layer_visits;
        d["bst_comparisons"] = c.bst_comparisons;
        d["list_splices"] = c.list_splices;
        d["pushdowns"] = c.pushdowns;
        d["cascade_deletes"] = c.cascade_deletes;
        d["link_reads"] = c.link_reads;
        return d;
    }

private:
    std::optional<std::pair<uint64_t, uint64_t>> view(
        const std::optional<ptrie::PTrie<uint64_t>::NodeRef>& n) const {
        if (!n) return std::nullopt;
        return std::make_pair(ptrie::key_bits_from_digits(n->key(), cfg_), n->front_payload());
    }

    PatternConfig cfg_;
    ptrie::PTrie<uint64_t> trie_;
};

class SignedPTriePy {
public:
    explicit SignedPTriePy(uint32_t k) : trie_(k) {}

    void insert(int64_t v, uint64_t payload) { trie_.insert(v, payload); }
    bool search(int64_t v) const { return trie_.search(v); }

    std::optional<uint64_t> remove(int64_t v) {
        auto e = trie_.remove(v);
        if (!e) return std::nullopt;
        return e->payload;
    }

    std::optional<std::pair<int64_t, uint64_t>> delete_min() {
        auto e = trie_.delete_min();
        if (!e) return std::nullopt;
        return std::make_pair(e->value, e->payload);
    }

    std::optional<std::pair<int64_t, uint64_t>> minimum() const { return view(trie_.minimum()); }
    std::optional<std::pair<int64_t, uint64_t>> maximum() const { return view(trie_.maximum()); }

    uint64_t size() const { return trie_.size(); }
    std::vector<std::string> validate() const { return trie_.validate(); }

private:
    std::optional<std::pair<int64_t, uint64_t>> view(
        const std::optional<ptrie::SignedPTrie<uint64_t>::Ref>& r) const {
        if (!r) return std::nullopt;
        return std::make_pair(r->value(trie_), r->node.front_payload());
    }

    ptrie::SignedPTrie<uint64_t> trie_;
};

class FloatPTriePy {
public:
    explicit FloatPTriePy(uint32_t k) : trie_(k) {}

    void insert(double v, uint64_t payload) { trie_.insert(v, payload); }
    bool search(double v) const { return trie_.search(v); }

    std::optional<uint64_t> remove(double v) {
        auto e = trie_.remove(v);
        if (!e) return std::nullopt;
        return e->payload;
    }

    std::optional<std::pair<double, uint64_t>> delete_min() {
        auto e = trie_.delete_min();
        if (!e) return std::nullopt;
        return std::make_pair(e->value, e->payload);
    }

    std::optional<std::pair<double, uint64_t>> minimum() const { return view(trie_.minimum()); }
    std::optional<std::pair<double, uint64_t>> maximum() const { return view(trie_.maximum()); }

    uint64_t size() const { return trie_.size(); }
    std::vector<std::string> validate() const { return trie_.validate(); }

private:
    std::optional<std::pair<double, uint64_t>> view(
        const std::optional<ptrie::FloatPTrie<uint64_t>::View>& v) const {
        if (!v) return std::nullopt;
        return std::make_pair(v->value, *v->payload);
    }

    ptrie::FloatPTrie<uint64_t> trie_;
};

class StringPTrie {
public:
    explicit StringPTrie(uint32_t k = 8) : cfg_(PatternConfig::strings(k)), trie_(cfg_) {}

    void insert(const py::bytes& key, uint64_t payload) {
        trie_.insert(ptrie::digits_string(std::string(key), cfg_), payload);
    }
    bool search(const py::bytes& key) const {
        return trie_.search(ptrie::digits_string(std::string(key), cfg_));
    }
    std::optional<uint64_t> remove(const py::bytes& key) {
        auto e = trie_.remove(ptrie::digits_string(std::string(key), cfg_));
        if (!e) return std::nullopt;
        return e->payload;
    }
    std::optional<std::pair<py::bytes, uint64_t>> delete_min() {
        auto e = trie_.delete_min();
        if (!e) return std::nullopt;
        return std::make_pair(py::bytes(ptrie::string_from_digits(e->key, cfg_)), e->payload);
    }
    std::optional<std::pair<py::bytes, uint64_t>> minimum() const {
        auto n = trie_.minimum();
        if (!n) return std::nullopt;
        return std::make_pair(py::bytes(ptrie::string_from_digits(n->key(), cfg_)),
                              n->front_payload());
    }
    uint64_t size() const { return trie_.size(); }
    std::vector<std::string> validate() const { return trie_.validate(); }

private:
    PatternConfig cfg_;
    ptrie::PTrie<uint64_t> trie_;
};

py::dict empirical_profile_py(uint64_t trials, uint64_t n, uint32_t k, uint32_t m, uint64_t seed) {
    const auto cfg = PatternConfig::fixed(k, m);
    const auto prof = ptrie::analysis::empirical_profile(trials, n, cfg, seed);
    py::dict d;
    d["trials"] = prof.trials;
    d["n"] = prof.n;
    d["mean"] = prof.mean;
    d["stderr"] = prof.stderr_;
    d["total_layers_mean"] = prof.total_layers_mean;
    return d;
}

}  // namespace

PYBIND11_MODULE(_ptrie, m) {
    m.doc() = "priority trie: ordered multiset with O(M/K + K) updates and O(1) min/max";

    py::class_<UIntPTrie>(m, "UIntPTrie")
        .def(py::init<uint32_t, uint32_t>(), py::arg("k"), py::arg("m"))
        .def("insert", &UIntPTrie::insert, py::arg("key"), py::arg("payload") = 0)
        .def("search", &UIntPTrie::search)
        .def("remove", &UIntPTrie::remove)
        .def("delete_min", &UIntPTrie::delete_min)
        .def("minimum", &UIntPTrie::minimum)
        .def("maximum", &UIntPTrie::maximum)
        .def("items", &UIntPTrie::items)
        .def("size", &UIntPTrie::size)
        .def("distinct", &UIntPTrie::distinct)
        .def("validate", &UIntPTrie::validate)
        .def("stats", &UIntPTrie::stats)
        .def("counters", &UIntPTrie::counters)
        .def("__len__", &UIntPTrie::size);

    py::class_<SignedPTriePy>(m, "SignedPTrie")
        .def(py::init<uint32_t>(), py::arg("k"))
        .def("insert", &SignedPTriePy::insert, py::arg("key"), py::arg("payload") = 0)
        .def("search", &SignedPTriePy::search)
        .def("remove", &SignedPTriePy::remove)
        .def("delete_min", &SignedPTriePy::delete_min)
        .def("minimum", &SignedPTriePy::minimum)
        .def("maximum", &SignedPTriePy::maximum)
        .def("size", &SignedPTriePy::size)
        .def("validate", &SignedPTriePy::validate)
        .def("__len__", &SignedPTriePy::size);

    py::class_<FloatPTriePy>(m, "FloatPTrie")
        .def(py::init<uint32_t>(), py::arg("k"))
        .def("insert", &FloatPTriePy::insert, py::arg("key"), py::arg("payload") = 0)
        .def("search", &FloatPTriePy::search)
        .def("remove", &FloatPTriePy::remove)
        .def("delete_min", &FloatPTriePy::delete_min)
        .def("minimum", &FloatPTriePy::minimum)
        .def("maximum", &FloatPTriePy::maximum)
        .def("size", &FloatPTriePy::size)
        .def("validate", &FloatPTriePy::validate)
        .def("__len__", &FloatPTriePy::size);

    py::class_<StringPTrie>(m, "StringPTrie")
        .def(py::init<uint32_t>(), py::arg("k") = 8)
        .def("insert", &StringPTrie::insert, py::arg("key"), py::arg("payload") = 0)
        .def("search", &StringPTrie::search)
        .def("remove", &StringPTrie::remove)
        .def("delete_min", &StringPTrie::delete_min)
        .def("minimum", &StringPTrie::minimum)
        .def("size", &StringPTrie::size)
        .def("validate", &StringPTrie::validate)
        .def("__len__", &StringPTrie::size);

    m.def("prob_group", &ptrie::analysis::prob_group, py::arg("n"), py::arg("g"), py::arg("p"),
          py::arg("l"));
    m.def("expected_layers", &ptrie::analysis::expected_layers, py::arg("n"), py::arg("p"),
          py::arg("l"));
    m.def("avg_layers", &ptrie::analysis::avg_layers, py::arg("n"), py::arg("p"),
          py::arg("cap") = 512);
    m.def("layer_series_total", &ptrie::analysis::layer_series_total, py::arg("n"), py::arg("p"));
    m.def("empirical_profile", &empirical_profile_py, py::arg("trials"), py::arg("n"),
          py::arg("k"), py::arg("m"), py::arg("seed") = 1);
}
