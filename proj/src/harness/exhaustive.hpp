#pragma once

#include <cstdint>
#include <string>

namespace ptrie::harness {

// Complete small-space check: explores every structure state reachable by
// op sequences of up to max_len mutating ops (insert/remove of each key in
// [0, 2^m), delete-min), checking each transition's output, every read
// operation, and full validation against the oracle at every state.
// Distinct states are identified by exact structural serialization, so two
// equal states behave identically under all futures; read-only ops never
// change state. Together that covers every op sequence of length <= max_len
// over the full alphabet.
struct ExhaustiveResult {
    uint64_t states = 0;
    uint64_t transitions = 0;
    uint64_t checks = 0;
    uint64_t mismatches = 0;
    std::string first_mismatch;
    double elapsed_s = 0.0;
};

ExhaustiveResult exhaustive_check(uint32_t max_len, uint32_t k = 1, uint32_t m = 2);

}  // namespace ptrie::harness
