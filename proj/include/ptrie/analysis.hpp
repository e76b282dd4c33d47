#pragma once

#include <cstdint>
#include <vector>

#include "ptrie/codec.hpp"

namespace ptrie::analysis {

// Expected layer counts of a random trie of branching factor p holding n
// keys, per level and in total. Levels are indexed from 0 (the root); a
// level-l layer corresponds to an l-digit prefix shared by at least two
// keys, so a_0 = a_1 = 0.
struct FormulaResult {
    uint64_t n = 0;
    uint64_t p = 0;
    std::vector<double> per_level;
    double a_n = 0.0;
};

// C(n,g) * p^(-g*l) * (1 - p^(-l))^(n-g): probability that exactly g of n
// random keys match one particular l-digit pattern. Log-domain binomials
// keep n > 50 stable.
double prob_group(uint64_t n, uint64_t g, uint64_t p, uint64_t l);

// p^l * (1 - (1 - p^(-l))^n) - n * (1 - p^(-l))^(n-1): the expected number
// of layers on level l. Uses the 0^0 = 1 convention at l = 0.
double expected_layers(uint64_t n, uint64_t p, uint64_t l);

// Expected total layer count A_n with A_0 = A_1 = 0 and, for n >= 2,
//   A_n = 1 + p^(1-n) * sum_{g<=n} C(n,g) (p-1)^(n-g) A_g,
// solved algebraically for the self-referential g = n term and memoized
// ascending. Throws for n > cap (the binomial sum grows factorially).
double avg_layers(uint64_t n, uint64_t p, uint64_t cap = 512);

// Sum over levels of expected_layers, truncated once a term drops below
// 1e-12 of the running sum. Cross-checks avg_layers.
double layer_series_total(uint64_t n, uint64_t p);

// Formula table for levels 0..levels-1.
FormulaResult formula_profile(uint64_t n, uint64_t p, uint64_t levels);

// Monte Carlo counterpart: builds `trials` tries from n uniform random
// m-bit keys each and averages the per-level layer counts from stats().
// Deterministic under seed; per_level[l] pairs with formula level l
// (stats level l+1, since stats counts the root as level 1).
struct EmpiricalProfile {
    uint64_t trials = 0;
    uint64_t n = 0;
    std::vector<double> mean;    // indexed by formula level
    std::vector<double> stderr_; // standard error of the mean
    double total_layers_mean = 0.0;
};

EmpiricalProfile empirical_profile(uint64_t trials, uint64_t n, const PatternConfig& cfg,
                                   uint64_t seed);

}  // namespace ptrie::analysis
