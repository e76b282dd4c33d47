#include "ptrie/analysis.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

#include "ptrie/core.hpp"

namespace ptrie::analysis {

namespace {

double log_binomial(uint64_t n, uint64_t g) {
    return std::lgamma(double(n) + 1.0) - std::lgamma(double(g) + 1.0) -
           std::lgamma(double(n - g) + 1.0);
}

double binomial(uint64_t n, uint64_t g) {
    if (g > n) return 0.0;
    if (n <= 50) {
        double c = 1.0;
        for (uint64_t i = 0; i < g; ++i) c = c * double(n - i) / double(i + 1);
        return c;
    }
    return std::exp(log_binomial(n, g));
}

}  // namespace

double prob_group(uint64_t n, uint64_t g, uint64_t p, uint64_t l) {
    if (g > n) throw std::invalid_argument("prob_group: g > n");
    if (p < 2) throw std::invalid_argument("prob_group: p < 2");
    const double logp = std::log(double(p));
    // log C(n,g) - g*l*log p + (n-g)*log(1 - p^-l), with the l = 0 edge
    // handled by the 0^0 = 1 convention: (1-1)^0 = 1, (1-1)^(k>0) = 0.
    const double q = std::pow(double(p), -double(l));
    if (q >= 1.0) return g == n ? 1.0 : 0.0;  // l == 0
    const double lg = (n > 50) ? log_binomial(n, g)
                               : std::log(binomial(n, g));
    const double log_term = lg - double(g) * double(l) * logp +
                            double(n - g) * std::log1p(-q);
    return std::exp(log_term);
}

double expected_layers(uint64_t n, uint64_t p, uint64_t l) {
    if (p < 2) throw std::invalid_argument("expected_layers: p < 2");
    if (l == 0) return n >= 2 ? 1.0 : 0.0;  // 0^0 = 1: root exists once shared
    if (n <= 1) return 0.0;                 // p^l * p^-l - 1 vanishes exactly
    const double q = std::pow(double(p), -double(l));
    if (q <= 0.0) return 0.0;
    // log1p/expm1 keep 1 - (1-q)^n accurate when q is tiny.
    const double log_miss = std::log1p(-q);
    const double hit_any = -std::expm1(double(n) * log_miss);  // 1 - (1-q)^n
    const double miss_n1 = std::exp(double(n - 1) * log_miss);
    return std::pow(double(p), double(l)) * hit_any - double(n) * miss_n1;
}

double avg_layers(uint64_t n, uint64_t p, uint64_t cap) {
    if (p < 2) throw std::invalid_argument("avg_layers: p < 2");
    if (n > cap) throw std::invalid_argument("avg_layers: n exceeds cap");
    std::vector<double> a(n + 1, 0.0);
    const double logp = std::log(double(p));
    const double logp1 = p > 2 ? std::log(double(p - 1)) : 0.0;
    for (uint64_t nn = 2; nn <= n; ++nn) {
        double sum = 0.0;
        for (uint64_t g = 2; g < nn; ++g) {
            // coefficient p^(1-nn) C(nn,g) (p-1)^(nn-g), in log domain
            const double lc = (1.0 - double(nn)) * logp + log_binomial(nn, g) +
                              double(nn - g) * logp1;
            sum += std::exp(lc) * a[g];
        }
        const double self = std::exp((1.0 - double(nn)) * logp);  // g = nn term
        a[nn] = (1.0 + sum) / (1.0 - self);
    }
    return a[n];
}

double layer_series_total(uint64_t n, uint64_t p) {
    double total = 0.0;
    for (uint64_t l = 0;; ++l) {
        const double term = expected_layers(n, p, l);
        total += term;
        if (l > 0 && (term == 0.0 || term < 1e-12 * total)) break;
        if (l > 4096) break;  // defensive; terms decay geometrically
    }
    return total;
}

FormulaResult formula_profile(uint64_t n, uint64_t p, uint64_t levels) {
    FormulaResult r;
    r.n = n;
    r.p = p;
    r.per_level.resize(levels);
    for (uint64_t l = 0; l < levels; ++l) r.per_level[l] = expected_layers(n, p, l);
    r.a_n = layer_series_total(n, p);
    return r;
}

EmpiricalProfile empirical_profile(uint64_t trials, uint64_t n, const PatternConfig& cfg,
                                   uint64_t seed) {
    if (trials < 1) throw std::invalid_argument("empirical_profile: trials < 1");
    if (cfg.variable() || cfg.m() > 64)
        throw std::invalid_argument("empirical_profile: fixed-width m <= 64 only");
    const uint64_t levels = cfg.digit_count();
    std::vector<double> sum(levels, 0.0), sumsq(levels, 0.0);
    double total_sum = 0.0;
    const uint64_t mask = cfg.m() == 64 ? ~uint64_t{0} : (uint64_t{1} << cfg.m()) - 1;
    for (uint64_t t = 0; t < trials; ++t) {
        std::mt19937_64 rng(seed + t);  // per-trial stream; merge is by index
        PTrie<uint64_t> trie(cfg);
        for (uint64_t i = 0; i < n; ++i) trie.insert(digits(rng() & mask, cfg), i);
        const LayerStats st = trie.stats();
        double total = 0.0;
        for (uint64_t l = 0; l < levels; ++l) {
            const double c = l < st.layers_per_level.size() ? double(st.layers_per_level[l]) : 0.0;
            sum[l] += c;
            sumsq[l] += c * c;
            total += c;
        }
        total_sum += total;
    }
    EmpiricalProfile out;
    out.trials = trials;
    out.n = n;
    out.mean.resize(levels);
    out.stderr_.resize(levels);
    for (uint64_t l = 0; l < levels; ++l) {
        const double mean = sum[l] / double(trials);
        out.mean[l] = mean;
        if (trials > 1) {
            const double var =
                std::max(0.0, (sumsq[l] - double(trials) * mean * mean) / double(trials - 1));
            out.stderr_[l] = std::sqrt(var / double(trials));
        }
    }
    out.total_layers_mean = total_sum / double(trials);
    return out;
}

}  // namespace ptrie::analysis
