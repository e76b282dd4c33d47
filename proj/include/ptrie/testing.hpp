#pragma once

#include <sstream>
#include <string>

#include "ptrie/core.hpp"

namespace ptrie {

// Test support: exact structural serialization (trie shape, BST shapes,
// span links, list order, queues) and span-link fault injection. Two
// structures with equal serializations behave identically under every
// future operation.
template <typename P>
struct PTrieTestAccess {
    using T = PTrie<P>;

    static std::string serialize(const T& t) {
        std::ostringstream os;
        serialize_layer(os, t, *t.root_);
        os << "|LIST:";
        for (const auto* n = t.head_->next; n != t.tail_; n = n->next) {
            dump_key(os, n->key);
            os << "(";
            bool first = true;
            for (const auto& qe : n->queue) {
                if (!first) os << ",";
                os << qe.payload;
                first = false;
            }
            os << ")";
        }
        os << "|n=" << t.count_ << "/" << t.distinct_;
        return os.str();
    }

    // Sets the first child layer's min link to its max link, simulating a
    // missed span update. Returns false if the trie has no child layer with
    // a real span to break.
    static bool corrupt_child_span(T& t) { return corrupt_below(*t.root_); }

    // Root span corruption for single-layer tries.
    static bool corrupt_root_span(T& t) {
        if (!t.root_->min_node || t.root_->min_node == t.root_->max_node) return false;
        t.root_->min_node = t.root_->max_node;
        return true;
    }

private:
    static bool corrupt_below(typename T::Layer& layer) {
        for (auto& slot : layer.slots) {
            if (slot.kind != T::SlotKind::kChild) continue;
            auto& child = *slot.child;
            if (child.min_node && child.min_node != child.max_node) {
                child.min_node = child.max_node;
                return true;
            }
            if (corrupt_below(child)) return true;
        }
        return false;
    }

    static void dump_key(std::ostream& os, const DigitString& k) {
        os << "[";
        for (size_t i = 0; i < k.size(); ++i) {
            if (i) os << ".";
            os << k.digits[i];
        }
        os << "]";
    }

    static void dump_bst(std::ostream& os, const typename T::BstNode* n) {
        if (!n) {
            os << "-";
            return;
        }
        os << n->index << "(";
        dump_bst(os, n->left);
        os << ",";
        dump_bst(os, n->right);
        os << ")";
    }

    static void serialize_layer(std::ostream& os, const T& t, const typename T::Layer& layer) {
        os << "L" << layer.level << "{";
        for (size_t i = 0; i < layer.slots.size(); ++i) {
            const auto& slot = layer.slots[i];
            if (slot.kind == T::SlotKind::kEmpty) continue;
            os << i << ":";
            if (slot.kind == T::SlotKind::kNode) {
                os << "N";
                dump_key(os, slot.node->key);
                os << "(";
                bool first = true;
                for (const auto& qe : slot.node->queue) {
                    if (!first) os << ",";
                    os << qe.payload;
                    first = false;
                }
                os << ")";
            } else {
                serialize_layer(os, t, *slot.child);
            }
        }
        os << "}B";
        dump_bst(os, layer.bst_root);
        os << "S(";
        if (layer.min_node) dump_key(os, layer.min_node->key);
        os << "/";
        if (layer.max_node) dump_key(os, layer.max_node->key);
        os << ")";
    }
};

}  // namespace ptrie
