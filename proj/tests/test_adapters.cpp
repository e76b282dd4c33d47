#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "ptrie/adapters.hpp"

using namespace ptrie;

TEST_CASE("signed: basic routing and extremes") {
    SignedPTrie<uint64_t> t(4);
    t.insert(-1, 1);
    t.insert(0, 2);
    t.insert(1, 3);
    REQUIRE(t.minimum());
    CHECK(t.minimum()->value(t) == -1);
    CHECK(t.maximum()->value(t) == 1);
    CHECK(t.size() == 3);
    CHECK(t.search(-1));
    CHECK(!t.search(-2));
}

TEST_CASE("signed: zero lives in the positive core") {
    SignedPTrie<uint64_t> t(4);
    t.insert(0, 7);
    CHECK(t.positive().size() == 1);
    CHECK(t.negative().size() == 0);
    CHECK(t.minimum()->value(t) == 0);
    CHECK(t.maximum()->value(t) == 0);
}

TEST_CASE("signed: negative drain order") {
    SignedPTrie<uint64_t> t(4);
    for (int64_t v : {-3, -1, -2}) t.insert(v, uint64_t(-v));
    std::vector<int64_t> drained;
    while (auto e = t.delete_min()) drained.push_back(e->value);
    CHECK(drained == std::vector<int64_t>{-3, -2, -1});
}

TEST_CASE("signed: int64 extremes survive the magnitude encoding") {
    SignedPTrie<uint64_t> t(8);
    const int64_t lo = std::numeric_limits<int64_t>::min();
    const int64_t hi = std::numeric_limits<int64_t>::max();
    t.insert(lo, 1);
    t.insert(hi, 2);
    t.insert(0, 3);
    CHECK(t.minimum()->value(t) == lo);
    CHECK(t.maximum()->value(t) == hi);
    auto e = t.delete_min();
    REQUIRE(e);
    CHECK(e->value == lo);
    CHECK(t.search(hi));
    CHECK(!t.search(lo));
}

// Exhaustive at 4-bit signed width: every subset of {-8..7} drains in
// ascending order.
TEST_CASE("signed: exhaustive 4-bit drain order") {
    for (uint32_t mask = 0; mask < (1u << 16); ++mask) {
        SignedPTrie<uint64_t> t(2, 4);
        std::vector<int64_t> want;
        for (int b = 0; b < 16; ++b) {
            if (!(mask & (1u << b))) continue;
            const int64_t v = b - 8;
            t.insert(v, uint64_t(b));
            want.push_back(v);
        }
        std::sort(want.begin(), want.end());
        std::vector<int64_t> got;
        while (auto e = t.delete_min()) got.push_back(e->value);
        if (got != want) {  // CHECK once to keep the loop fast
            REQUIRE(got == want);
        }
    }
}

TEST_CASE("signed: randomized drain equals stable sort") {
    std::mt19937_64 rng(31);
    SignedPTrie<uint64_t> t(4);
    std::vector<std::pair<int64_t, uint64_t>> items;
    for (uint64_t i = 0; i < 5000; ++i) {
        const int64_t v = static_cast<int64_t>(rng()) % 1000;
        t.insert(v, i);
        items.emplace_back(v, i);
    }
    std::stable_sort(items.begin(), items.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<std::pair<int64_t, uint64_t>> got;
    while (auto e = t.delete_min()) got.emplace_back(e->value, e->payload);
    CHECK(got == items);
    CHECK(t.validate().empty());
}

TEST_CASE("float: basic extremes") {
    FloatPTrie<uint64_t> t(4);
    t.insert(1.5, 1);
    t.insert(-2.25, 2);
    t.insert(0.0, 3);
    REQUIRE(t.minimum());
    CHECK(t.minimum()->value == -2.25);
    CHECK(t.maximum()->value == 1.5);
    CHECK(t.size() == 3);
}

TEST_CASE("float: stability on identical keys") {
    FloatPTrie<uint64_t> t(4);
    t.insert(1.0, 111);  // payload A
    t.insert(1.0, 222);  // payload B
    auto a = t.delete_min();
    auto b = t.delete_min();
    REQUIRE(a);
    REQUIRE(b);
    CHECK(a->payload == 111);
    CHECK(b->payload == 222);
    CHECK(!t.delete_min());
}

TEST_CASE("float: NaN rejected, -0 normalized, infinities ordered") {
    FloatPTrie<uint64_t> t(4);
    CHECK_THROWS_AS(t.insert(std::nan(""), 0), std::invalid_argument);
    t.insert(-0.0, 1);
    t.insert(0.0, 2);
    CHECK(t.size() == 2);
    CHECK(t.minimum()->value == 0.0);
    auto e = t.delete_min();
    REQUIRE(e);
    CHECK(e->payload == 1);  // -0 and +0 share one queue, FIFO order

    const double inf = std::numeric_limits<double>::infinity();
    t.insert(inf, 3);
    t.insert(-inf, 4);
    t.insert(-1e300, 5);
    CHECK(t.minimum()->value == -inf);
    CHECK(t.maximum()->value == inf);

    FloatPTrie<uint64_t> no_inf(4, /*allow_infinity=*/false);
    CHECK_THROWS_AS(no_inf.insert(inf, 0), std::invalid_argument);
}

TEST_CASE("float: subnormals and sign boundaries order correctly") {
    FloatPTrie<uint64_t> t(4);
    const double denorm = std::numeric_limits<double>::denorm_min();
    for (auto [v, p] : std::initializer_list<std::pair<double, uint64_t>>{
             {denorm, 1}, {-denorm, 2}, {0.0, 3}, {1e-300, 4}, {-1e-300, 5}}) {
        t.insert(v, p);
    }
    std::vector<double> got;
    while (auto e = t.delete_min()) got.push_back(e->value);
    CHECK(got == std::vector<double>{-1e-300, -denorm, 0.0, denorm, 1e-300});
}

TEST_CASE("float: randomized drain equals stable sort") {
    std::mt19937_64 rng(37);
    for (uint32_t k : {1u, 4u}) {
        FloatPTrie<uint64_t> t(k);
        std::vector<std::pair<double, uint64_t>> items;
        for (uint64_t i = 0; i < 10000; ++i) {
            double v;
            if (rng() % 4 == 0) {
                v = static_cast<double>(int64_t(rng() % 64)) / 8.0;  // force duplicates
            } else {
                uint64_t bits = rng();
                bits &= ~(uint64_t{0x7ff} << 52);                         // clear exponent
                bits |= uint64_t{512 + rng() % 1024} << 52;               // finite exponent
                v = std::bit_cast<double>(bits);
            }
            t.insert(v, i);
            items.emplace_back(v == 0.0 ? 0.0 : v, i);
        }
        REQUIRE(t.size() == items.size());
        std::stable_sort(items.begin(), items.end(),
                         [](const auto& a, const auto& b) { return a.first < b.first; });
        std::vector<std::pair<double, uint64_t>> got;
        while (auto e = t.delete_min()) got.emplace_back(e->value, e->payload);
        CHECK(got == items);
        CHECK(t.validate().empty());
    }
}

TEST_CASE("float: remove and search by exact value") {
    FloatPTrie<uint64_t> t(4);
    t.insert(2.5, 1);
    t.insert(2.5, 2);
    t.insert(-7.0, 3);
    CHECK(t.search(2.5));
    CHECK(!t.search(2.4999));
    auto e = t.remove(2.5);
    REQUIRE(e);
    CHECK(e->payload == 1);
    CHECK(t.search(2.5));
    REQUIRE(t.remove(2.5));
    CHECK(!t.search(2.5));
    CHECK(!t.remove(2.5));
    CHECK(t.size() == 1);
    CHECK(t.validate().empty());
}

TEST_CASE("adapter counts equal sum of constituent core counts") {
    SignedPTrie<uint64_t> s(4);
    std::mt19937_64 rng(41);
    for (int i = 0; i < 500; ++i) s.insert(static_cast<int64_t>(rng() % 2001) - 1000, i);
    CHECK(s.size() == s.positive().size() + s.negative().size());

    FloatPTrie<uint64_t> f(2);
    uint64_t n = 0;
    for (int i = 0; i < 500; ++i) {
        f.insert(double(int(rng() % 100)) - 50.0, i);
        ++n;
    }
    CHECK(f.size() == n);
    CHECK(f.validate().empty());
}
