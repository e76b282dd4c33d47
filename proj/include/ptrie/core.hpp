#pragma once

#include <cassert>
#include <cstdint>
#include <deque>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#ifndef NDEBUG
#include <unordered_set>
#endif

#include "ptrie/codec.hpp"

namespace ptrie {

// Per-operation instrumentation. Reset at the start of each operation.
struct OpCounters {
    uint64_t layer_visits = 0;     // layers entered, descent and ascent
    uint64_t bst_comparisons = 0;  // branch decisions in occupancy-BST descents
    uint64_t list_splices = 0;     // linked-list insertions
    uint64_t pushdowns = 0;        // resident nodes moved one level deeper
    uint64_t cascade_deletes = 0;  // layers deleted on the ascent
    uint64_t link_reads = 0;       // pointer reads in minimum/maximum/next/prev

    void reset() { *this = OpCounters{}; }

    void fold_max(const OpCounters& o) {
        layer_visits = std::max(layer_visits, o.layer_visits);
        bst_comparisons = std::max(bst_comparisons, o.bst_comparisons);
        list_splices = std::max(list_splices, o.list_splices);
        pushdowns = std::max(pushdowns, o.pushdowns);
        cascade_deletes = std::max(cascade_deletes, o.cascade_deletes);
        link_reads = std::max(link_reads, o.link_reads);
    }
};

struct LayerStats {
    std::vector<uint64_t> layers_per_level;  // index 0 = root level
    uint64_t layer_count = 0;
    uint64_t node_count = 0;
    uint64_t entry_count = 0;
    uint64_t depth_max = 0;       // level of the deepest node; 0 when empty
    uint64_t node_depth_sum = 0;  // sum of node levels, for mean-depth checks
    uint64_t slot_memory = 0;     // total slot cells: layer_count * 2^k
    uint64_t bst_node_count = 0;
    uint64_t bst_height_max = 0;  // edges on the longest root-to-leaf BST path
};

// Ordered multiset over digit strings. A 2^k-ary trie of layers routes each
// key by its digits; every layer keeps a plain unbalanced BST over its
// occupied slot indices plus links to its smallest and largest descendant
// list node, and all distinct keys sit on one doubly linked list in key
// order. Duplicate keys share a node and queue up FIFO, which makes the
// structure stable.
//
// Instrumentation counters are written by const lookups as well, so even
// read-only operations are not safe to run concurrently with anything else.
template <typename Payload>
class PTrie {
    struct ListNode;
    struct Layer;
    struct BstNode;

public:
    struct QueueEntry {
        Payload payload;
        uint64_t seq;
    };

    struct Entry {
        DigitString key;
        Payload payload;
        uint64_t seq;
    };

    // Opaque handle to a live node. Invalidated when the node's last entry
    // is removed.
    class NodeRef {
    public:
        const DigitString& key() const { return n_->key; }
        const std::deque<QueueEntry>& entries() const { return n_->queue; }
        const Payload& front_payload() const { return n_->queue.front().payload; }
        size_t entry_count() const { return n_->queue.size(); }

        friend bool operator==(const NodeRef&, const NodeRef&) = default;

    private:
        friend class PTrie;
        explicit NodeRef(const ListNode* n) : n_(n) {}
        const ListNode* n_;
    };

    explicit PTrie(PatternConfig cfg) : cfg_(cfg) {
        root_ = new_layer(nullptr, 0, 1);
        head_ = new ListNode{};
        tail_ = new ListNode{};
        head_->next = tail_;
        tail_->prev = head_;
    }

    ~PTrie() { destroy(); }

    PTrie(const PTrie&) = delete;
    PTrie& operator=(const PTrie&) = delete;

    PTrie(PTrie&& o) noexcept
        : cfg_(o.cfg_), root_(o.root_), head_(o.head_), tail_(o.tail_),
          count_(o.count_), distinct_(o.distinct_), seq_(o.seq_),
          counters_(o.counters_), counters_max_(o.counters_max_) {
#ifndef NDEBUG
        live_ = std::move(o.live_);
#endif
        o.root_ = nullptr;
        o.head_ = nullptr;
        o.tail_ = nullptr;
    }

    PTrie& operator=(PTrie&& o) noexcept {
        if (this != &o) {
            destroy();
            cfg_ = o.cfg_;
            root_ = o.root_;
            head_ = o.head_;
            tail_ = o.tail_;
            count_ = o.count_;
            distinct_ = o.distinct_;
            seq_ = o.seq_;
            counters_ = o.counters_;
            counters_max_ = o.counters_max_;
#ifndef NDEBUG
            live_ = std::move(o.live_);
#endif
            o.root_ = nullptr;
            o.head_ = nullptr;
            o.tail_ = nullptr;
        }
        return *this;
    }

    const PatternConfig& config() const { return cfg_; }
    uint64_t size() const { return count_; }
    uint64_t distinct() const { return distinct_; }
    bool empty() const { return count_ == 0; }

    const OpCounters& counters() const { return counters_; }
    const OpCounters& counters_max() const { return counters_max_; }
    void reset_counters_max() { counters_max_.reset(); }

    NodeRef insert(DigitString key, Payload payload) {
        check_key(key);
        counters_.reset();
        path_.clear();

        Layer* layer = root_;
        size_t di = 0;
        ListNode* inserted = nullptr;
        for (;;) {
            ++counters_.layer_visits;
            path_.push_back(layer);
            if (di >= key.size())
                throw std::invalid_argument("PTrie: key is a digit prefix of an existing key");
            const uint32_t d = key.digits[di];
            Slot& slot = layer->slots[d];
            if (slot.kind == SlotKind::kNode) {
                ListNode* resident = slot.node;
                if (resident->key == key) {
                    // Same key: queue up behind the resident entries.
                    resident->queue.push_back(QueueEntry{std::move(payload), seq_++});
                    ++count_;
                    counters_max_.fold_max(counters_);
                    return NodeRef(resident);
                }
                // Different key in the way: push the resident one level down
                // into a fresh layer and retry there. The resident keeps its
                // list position; only the trie changes.
                ++counters_.pushdowns;
                Layer* child = new_layer(layer, d, layer->level + 1);
                assert(di + 1 < resident->key.size());
                const uint32_t rd = resident->key.digits[di + 1];
                child->slots[rd] = Slot::of_node(resident);
                bst_insert(*child, rd);
                child->min_node = resident;
                child->max_node = resident;
                slot = Slot::of_child(child);
                layer = child;
                ++di;
                continue;
            }
            if (slot.kind == SlotKind::kChild) {
                layer = slot.child;
                ++di;
                continue;
            }

            // Empty slot: this layer gets the new node. The BST insertion
            // parent is the in-order neighbor of d among occupied indices,
            // which pins the list position in O(1) through the slot's node
            // or the child layer's span links.
            ListNode* node = new ListNode{};
            node->key = std::move(key);
            node->queue.push_back(QueueEntry{std::move(payload), seq_++});
            const BstInsert ins = bst_insert(*layer, d);
            if (ins.was_empty) {
                splice_after(head_, node);
            } else if (ins.right_child) {
                splice_after(max_descendant(layer->slots[ins.parent_index]), node);
            } else {
                splice_before(min_descendant(layer->slots[ins.parent_index]), node);
            }
            ++counters_.list_splices;
            slot = Slot::of_node(node);
            ++count_;
            ++distinct_;
#ifndef NDEBUG
            live_.insert(node);
#endif
            inserted = node;
            break;
        }

        // One walk back over the descent path: the new node extends a span
        // exactly when it was spliced adjacent to the current extreme (a
        // layer's descendants are contiguous on the list).
        for (Layer* l : path_) {
            ++counters_.layer_visits;
            if (l->min_node == nullptr) {
                l->min_node = inserted;
                l->max_node = inserted;
            } else {
                if (inserted->next == l->min_node) l->min_node = inserted;
                if (inserted->prev == l->max_node) l->max_node = inserted;
            }
        }
        counters_max_.fold_max(counters_);
        return NodeRef(inserted);
    }

    bool search(const DigitString& key) const {
        check_key(key);
        counters_.reset();
        const ListNode* n = locate(key);
        counters_max_.fold_max(counters_);
        return n != nullptr;
    }

    std::optional<NodeRef> find(const DigitString& key) const {
        check_key(key);
        counters_.reset();
        const ListNode* n = locate(key);
        counters_max_.fold_max(counters_);
        if (!n) return std::nullopt;
        return NodeRef(n);
    }

    // Removes and returns the oldest entry stored under `key`. When the
    // node's queue empties, the node is unlinked, its digit leaves the
    // deepest layer's BST, and empty layers are deleted on the way up;
    // the remaining path has its span links repaired.
    std::optional<Entry> remove(const DigitString& key) {
        check_key(key);
        counters_.reset();

        Layer* layer = root_;
        size_t di = 0;
        ListNode* node = nullptr;
        for (;;) {
            ++counters_.layer_visits;
            if (di >= key.size()) {
                counters_max_.fold_max(counters_);
                return std::nullopt;
            }
            Slot& slot = layer->slots[key.digits[di]];
            if (slot.kind == SlotKind::kEmpty) {
                counters_max_.fold_max(counters_);
                return std::nullopt;
            }
            if (slot.kind == SlotKind::kNode) {
                if (slot.node->key != key) {
                    counters_max_.fold_max(counters_);
                    return std::nullopt;
                }
                node = slot.node;
                break;
            }
            layer = slot.child;
            ++di;
        }

        Entry out{node->key, std::move(node->queue.front().payload), node->queue.front().seq};
        node->queue.pop_front();
        --count_;
        if (!node->queue.empty()) {
            counters_max_.fold_max(counters_);
            return out;
        }

        // Last entry gone: drop the node.
        --distinct_;
#ifndef NDEBUG
        live_.erase(node);
#endif
        node->prev->next = node->next;
        node->next->prev = node->prev;
        bst_erase(*layer, key.digits[di]);
        layer->slots[key.digits[di]] = Slot{};

        // Cascade: delete layers whose BST emptied, unhooking each from its
        // parent. Stops at the first layer left occupied, or at the root.
        Layer* cur = layer;
        while (cur->parent != nullptr && cur->bst_root == nullptr) {
            Layer* parent = cur->parent;
            const uint32_t pi = cur->parent_index;
            delete cur;
            ++counters_.cascade_deletes;
            bst_erase(*parent, pi);
            parent->slots[pi] = Slot{};
            cur = parent;
            ++counters_.layer_visits;
        }

        // Span repair along the remaining path, bottom-up, from the layer's
        // own BST extremes and the child spans below them.
        for (Layer* l = cur; l != nullptr; l = l->parent) {
            ++counters_.layer_visits;
            if (l->bst_root == nullptr) {
                // Only the root of a now-empty trie.
                l->min_node = nullptr;
                l->max_node = nullptr;
                continue;
            }
            if (l->min_node == node)
                l->min_node = min_descendant(l->slots[bst_min_index(*l)]);
            if (l->max_node == node)
                l->max_node = max_descendant(l->slots[bst_max_index(*l)]);
        }
        delete node;
        counters_max_.fold_max(counters_);
        return out;
    }

    std::optional<NodeRef> minimum() const {
        counters_.reset();
        ++counters_.link_reads;
        counters_max_.fold_max(counters_);
        const ListNode* n = head_->next;
        if (n == tail_) return std::nullopt;
        return NodeRef(n);
    }

    std::optional<NodeRef> maximum() const {
        counters_.reset();
        ++counters_.link_reads;
        counters_max_.fold_max(counters_);
        const ListNode* n = tail_->prev;
        if (n == head_) return std::nullopt;
        return NodeRef(n);
    }

    std::optional<NodeRef> next(NodeRef r) const {
        assert_live(r.n_);
        counters_.reset();
        ++counters_.link_reads;
        counters_max_.fold_max(counters_);
        const ListNode* n = r.n_->next;
        if (n == tail_) return std::nullopt;
        return NodeRef(n);
    }

    std::optional<NodeRef> prev(NodeRef r) const {
        assert_live(r.n_);
        counters_.reset();
        ++counters_.link_reads;
        counters_max_.fold_max(counters_);
        const ListNode* n = r.n_->prev;
        if (n == head_) return std::nullopt;
        return NodeRef(n);
    }

    // remove(key-of-minimum()); counters reflect the inner remove.
    std::optional<Entry> delete_min() {
        counters_.reset();
        ++counters_.link_reads;
        counters_max_.fold_max(counters_);
        ListNode* n = head_->next;
        if (n == tail_) return std::nullopt;
        const DigitString key = n->key;  // remove() frees the node
        return remove(key);
    }

    // Full consistency check; returns one message per violation.
    std::vector<std::string> validate() const {
        std::vector<std::string> out;
        if (!root_) {
            out.push_back("moved-from structure");
            return out;
        }

        // List walk: order, queue discipline, link symmetry.
        uint64_t entries = 0, nodes = 0;
        std::vector<const ListNode*> list_order;
        const ListNode* prev = head_;
        for (const ListNode* n = head_->next; n != tail_; n = n->next) {
            if (n->prev != prev) out.push_back("list: prev link broken at node " + key_str(n));
            if (n->queue.empty()) out.push_back("list: empty queue at node " + key_str(n));
            uint64_t last_seq = 0;
            bool first = true;
            for (const QueueEntry& e : n->queue) {
                if (!first && e.seq <= last_seq)
                    out.push_back("queue: seq not increasing at node " + key_str(n));
                last_seq = e.seq;
                first = false;
            }
            if (prev != head_ && !(prev->key < n->key))
                out.push_back("list: keys not strictly increasing at node " + key_str(n));
            entries += n->queue.size();
            ++nodes;
            list_order.push_back(n);
            prev = n;
        }
        if (tail_->prev != prev) out.push_back("list: tail prev link broken");
        if (entries != count_) out.push_back("count: entry total mismatch");
        if (nodes != distinct_) out.push_back("count: node total mismatch");

        // Trie walk: occupancy, spans, routing, depth.
        std::vector<const ListNode*> trie_order;
        std::vector<uint32_t> prefix;
        validate_layer(*root_, prefix, trie_order, out);
        if (trie_order != list_order)
            out.push_back("order: trie in-order traversal differs from list order");
        return out;
    }

    LayerStats stats() const {
        LayerStats s;
        for (const ListNode* n = head_->next; n != tail_; n = n->next) {
            ++s.node_count;
            s.entry_count += n->queue.size();
        }
        collect_stats(*root_, s);
        s.slot_memory = s.layer_count * cfg_.radix();
        return s;
    }

private:
    enum class SlotKind : uint8_t { kEmpty, kChild, kNode };

    struct Slot {
        SlotKind kind = SlotKind::kEmpty;
        union {
            Layer* child;
            ListNode* node;
        };

        static Slot of_child(Layer* c) {
            Slot s;
            s.kind = SlotKind::kChild;
            s.child = c;
            return s;
        }
        static Slot of_node(ListNode* n) {
            Slot s;
            s.kind = SlotKind::kNode;
            s.node = n;
            return s;
        }
    };

    struct BstNode {
        uint32_t index;
        BstNode* left = nullptr;
        BstNode* right = nullptr;
    };

    struct ListNode {
        DigitString key;
        std::deque<QueueEntry> queue;
        ListNode* prev = nullptr;
        ListNode* next = nullptr;
    };

    struct Layer {
        std::vector<Slot> slots;
        BstNode* bst_root = nullptr;
        uint32_t bst_size = 0;
        ListNode* min_node = nullptr;
        ListNode* max_node = nullptr;
        Layer* parent = nullptr;
        uint32_t parent_index = 0;
        uint32_t level = 1;
    };

    struct BstInsert {
        bool was_empty = false;
        bool right_child = false;
        uint32_t parent_index = 0;
    };

    void check_key(const DigitString& key) const {
        if (!cfg_.variable() && key.size() != cfg_.digit_count())
            throw std::invalid_argument("PTrie: key digit count does not match config");
        if (cfg_.variable() && key.size() == 0)
            throw std::invalid_argument("PTrie: empty key");
        for (uint32_t d : key.digits)
            if (d >= cfg_.radix())
                throw std::invalid_argument("PTrie: digit out of range for config");
    }

    Layer* new_layer(Layer* parent, uint32_t parent_index, uint32_t level) {
        Layer* l = new Layer{};
        l->slots.resize(cfg_.radix());
        l->parent = parent;
        l->parent_index = parent_index;
        l->level = level;
        return l;
    }

    // Trie descent by digits; nullptr when the key is not present.
    const ListNode* locate(const DigitString& key) const {
        const Layer* layer = root_;
        size_t di = 0;
        for (;;) {
            ++counters_.layer_visits;
            if (di >= key.size()) return nullptr;
            const Slot& slot = layer->slots[key.digits[di]];
            switch (slot.kind) {
                case SlotKind::kEmpty:
                    return nullptr;
                case SlotKind::kNode:
                    return slot.node->key == key ? slot.node : nullptr;
                case SlotKind::kChild:
                    layer = slot.child;
                    ++di;
                    break;
            }
        }
    }

    BstInsert bst_insert(Layer& layer, uint32_t idx) {
        ++layer.bst_size;
        if (!layer.bst_root) {
            layer.bst_root = new BstNode{idx};
            return BstInsert{true, false, 0};
        }
        BstNode* cur = layer.bst_root;
        for (;;) {
            ++counters_.bst_comparisons;
            if (idx < cur->index) {
                if (!cur->left) {
                    cur->left = new BstNode{idx};
                    return BstInsert{false, false, cur->index};
                }
                cur = cur->left;
            } else {
                if (!cur->right) {
                    cur->right = new BstNode{idx};
                    return BstInsert{false, true, cur->index};
                }
                cur = cur->right;
            }
        }
    }

    void bst_erase(Layer& layer, uint32_t idx) {
        BstNode** link = &layer.bst_root;
        while ((*link)->index != idx) {
            ++counters_.bst_comparisons;
            link = idx < (*link)->index ? &(*link)->left : &(*link)->right;
        }
        BstNode* target = *link;
        if (!target->left) {
            *link = target->right;
        } else if (!target->right) {
            *link = target->left;
        } else {
            BstNode** slink = &target->right;
            while ((*slink)->left) slink = &(*slink)->left;
            BstNode* succ = *slink;
            *slink = succ->right;
            succ->left = target->left;
            succ->right = target->right;
            *link = succ;
        }
        delete target;
        --layer.bst_size;
    }

    static uint32_t bst_min_index(const Layer& layer) {
        const BstNode* n = layer.bst_root;
        while (n->left) n = n->left;
        return n->index;
    }

    static uint32_t bst_max_index(const Layer& layer) {
        const BstNode* n = layer.bst_root;
        while (n->right) n = n->right;
        return n->index;
    }

    static ListNode* min_descendant(const Slot& slot) {
        return slot.kind == SlotKind::kNode ? slot.node : slot.child->min_node;
    }

    static ListNode* max_descendant(const Slot& slot) {
        return slot.kind == SlotKind::kNode ? slot.node : slot.child->max_node;
    }

    void splice_after(ListNode* anchor, ListNode* n) {
        n->prev = anchor;
        n->next = anchor->next;
        anchor->next->prev = n;
        anchor->next = n;
    }

    void splice_before(ListNode* anchor, ListNode* n) { splice_after(anchor->prev, n); }

    void assert_live(const ListNode* n) const {
#ifndef NDEBUG
        assert(live_.count(n) && "stale node handle");
#else
        (void)n;
#endif
    }

    std::string key_str(const ListNode* n) const {
        std::ostringstream os;
        os << "[";
        for (size_t i = 0; i < n->key.size(); ++i) {
            if (i) os << ",";
            os << n->key.digits[i];
        }
        os << "]";
        return os.str();
    }

    void bst_inorder(const BstNode* n, std::vector<uint32_t>& out) const {
        if (!n) return;
        bst_inorder(n->left, out);
        out.push_back(n->index);
        bst_inorder(n->right, out);
    }

    void validate_layer(const Layer& layer, std::vector<uint32_t>& prefix,
                        std::vector<const ListNode*>& trie_order,
                        std::vector<std::string>& out) const {
        const std::string where = "layer at level " + std::to_string(layer.level);

        std::vector<uint32_t> occupied;
        for (uint32_t i = 0; i < layer.slots.size(); ++i)
            if (layer.slots[i].kind != SlotKind::kEmpty) occupied.push_back(i);

        std::vector<uint32_t> bst;
        bst_inorder(layer.bst_root, bst);
        if (bst != occupied) out.push_back("occupancy: BST does not match slots in " + where);
        if (bst.size() != layer.bst_size) out.push_back("occupancy: BST size field wrong in " + where);
        for (size_t i = 1; i < bst.size(); ++i)
            if (bst[i - 1] >= bst[i]) out.push_back("occupancy: BST order violated in " + where);
        if (layer.parent != nullptr && occupied.empty())
            out.push_back("occupancy: non-root layer is empty in " + where);
        if (!cfg_.variable() && layer.level > cfg_.digit_count())
            out.push_back("depth: layer deeper than digit count in " + where);

        const ListNode* first = nullptr;
        const ListNode* last = nullptr;
        for (uint32_t i : occupied) {
            const Slot& slot = layer.slots[i];
            prefix.push_back(i);
            if (slot.kind == SlotKind::kNode) {
                const ListNode* n = slot.node;
                if (n->key.size() < prefix.size()) {
                    out.push_back("routing: node key shorter than its path in " + where);
                } else {
                    for (size_t j = 0; j < prefix.size(); ++j)
                        if (n->key.digits[j] != prefix[j]) {
                            out.push_back("routing: node key does not match path in " + where);
                            break;
                        }
                }
                trie_order.push_back(n);
                if (!first) first = n;
                last = n;
            } else {
                const Layer& child = *slot.child;
                if (child.parent != &layer) out.push_back("link: child parent pointer wrong in " + where);
                if (child.parent_index != i) out.push_back("link: child parent index wrong in " + where);
                if (child.level != layer.level + 1) out.push_back("link: child level wrong in " + where);
                const size_t before = trie_order.size();
                validate_layer(child, prefix, trie_order, out);
                if (trie_order.size() > before) {
                    if (!first) first = trie_order[before];
                    last = trie_order.back();
                }
            }
            prefix.pop_back();
        }
        if (layer.min_node != first) out.push_back("span: min link wrong in " + where);
        if (layer.max_node != last) out.push_back("span: max link wrong in " + where);
    }

    void collect_stats(const Layer& layer, LayerStats& s) const {
        ++s.layer_count;
        if (s.layers_per_level.size() < layer.level) s.layers_per_level.resize(layer.level, 0);
        ++s.layers_per_level[layer.level - 1];
        s.bst_node_count += layer.bst_size;
        s.bst_height_max = std::max(s.bst_height_max, bst_height(layer.bst_root));
        for (const Slot& slot : layer.slots) {
            if (slot.kind == SlotKind::kNode) {
                s.depth_max = std::max<uint64_t>(s.depth_max, layer.level);
                s.node_depth_sum += layer.level;
            } else if (slot.kind == SlotKind::kChild) {
                collect_stats(*slot.child, s);
            }
        }
    }

    static uint64_t bst_height(const BstNode* root) {
        if (!root) return 0;
        uint64_t best = 0;
        std::vector<std::pair<const BstNode*, uint64_t>> stack{{root, 0}};
        while (!stack.empty()) {
            auto [n, d] = stack.back();
            stack.pop_back();
            best = std::max(best, d);
            if (n->left) stack.emplace_back(n->left, d + 1);
            if (n->right) stack.emplace_back(n->right, d + 1);
        }
        return best;
    }

    void destroy_bst(BstNode* root) {
        std::vector<BstNode*> stack;
        if (root) stack.push_back(root);
        while (!stack.empty()) {
            BstNode* n = stack.back();
            stack.pop_back();
            if (n->left) stack.push_back(n->left);
            if (n->right) stack.push_back(n->right);
            delete n;
        }
    }

    void destroy_layers(Layer* layer) {
        for (Slot& slot : layer->slots)
            if (slot.kind == SlotKind::kChild) destroy_layers(slot.child);
        destroy_bst(layer->bst_root);
        delete layer;
    }

    void destroy() {
        if (!root_) return;
        ListNode* n = head_->next;
        while (n != tail_) {
            ListNode* nx = n->next;
            delete n;
            n = nx;
        }
        delete head_;
        delete tail_;
        destroy_layers(root_);
        root_ = nullptr;
        head_ = nullptr;
        tail_ = nullptr;
    }

    template <typename P>
    friend struct PTrieTestAccess;

    PatternConfig cfg_;
    Layer* root_ = nullptr;
    ListNode* head_ = nullptr;
    ListNode* tail_ = nullptr;
    uint64_t count_ = 0;
    uint64_t distinct_ = 0;
    uint64_t seq_ = 0;
    mutable OpCounters counters_;
    mutable OpCounters counters_max_;
    mutable std::vector<Layer*> path_;
#ifndef NDEBUG
    std::unordered_set<const ListNode*> live_;
#endif
};

// Test-only backdoor for fault injection; defined by tests that need it.
template <typename P>
struct PTrieTestAccess;

}  // namespace ptrie
