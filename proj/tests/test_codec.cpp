#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "ptrie/codec.hpp"

using namespace ptrie;

TEST_CASE("config validation") {
    CHECK_NOTHROW(PatternConfig::fixed(4, 32));
    CHECK_NOTHROW(PatternConfig::fixed(1, 1));
    CHECK_THROWS_AS(PatternConfig::fixed(0, 8), std::invalid_argument);
    CHECK_THROWS_AS(PatternConfig::fixed(9, 8), std::invalid_argument);   // k > m
    CHECK_THROWS_AS(PatternConfig::fixed(4, 129), std::invalid_argument); // m cap
    CHECK_THROWS_AS(PatternConfig::strings(3), std::invalid_argument);
    CHECK_NOTHROW(PatternConfig::strings(8));
    CHECK(PatternConfig::fixed(4, 30).digit_count() == 8);
    CHECK(PatternConfig::fixed(4, 32).digit_count() == 8);
}

TEST_CASE("digit split is msb-first") {
    const auto cfg = PatternConfig::fixed(4, 8);
    CHECK(digits(0b10110010, cfg).digits == std::vector<uint32_t>{11, 2});
    const auto cfg8 = PatternConfig::fixed(8, 8);
    CHECK(digits(0b10110010, cfg8).digits == std::vector<uint32_t>{178});
}

TEST_CASE("final digit padding when k does not divide m") {
    const auto cfg = PatternConfig::fixed(4, 6);
    CHECK(digits(0b101101, cfg).digits == std::vector<uint32_t>{11, 4});
}

TEST_CASE("width mismatch is rejected") {
    const auto cfg = PatternConfig::fixed(4, 8);
    CHECK_THROWS_AS(digits(0x100, cfg), std::invalid_argument);
    const auto bytes_cfg = PatternConfig::fixed(4, 12);
    const uint8_t too_many[] = {1, 2, 3};
    CHECK_THROWS_AS(digits(std::span<const uint8_t>(too_many, 3), bytes_cfg),
                    std::invalid_argument);
    const uint8_t high_bits[] = {0xff, 0xff};  // top 4 bits must be zero for m=12
    CHECK_THROWS_AS(digits(std::span<const uint8_t>(high_bits, 2), bytes_cfg),
                    std::invalid_argument);
}

TEST_CASE("byte and integer splits agree") {
    const auto cfg = PatternConfig::fixed(3, 16);
    std::mt19937_64 rng(7);
    for (int i = 0; i < 200; ++i) {
        const uint64_t v = rng() & 0xffff;
        const uint8_t bytes[] = {uint8_t(v >> 8), uint8_t(v)};
        CHECK(digits(v, cfg) == digits(std::span<const uint8_t>(bytes, 2), cfg));
    }
}

TEST_CASE("string keys: terminator and nibble split") {
    const auto cfg8 = PatternConfig::strings(8);
    CHECK(digits_string("ab", cfg8).digits == std::vector<uint32_t>{97, 98, 0});
    const auto cfg4 = PatternConfig::strings(4);
    CHECK(digits_string("A", cfg4).digits == std::vector<uint32_t>{4, 1, 0, 0});
    CHECK_THROWS_AS(digits_string(std::string_view("a\0b", 3), cfg8), std::invalid_argument);
}

TEST_CASE("prefix sorts before extension") {
    const auto cfg = PatternConfig::strings(8);
    const auto ab = digits_string("ab", cfg);
    const auto abc = digits_string("abc", cfg);
    CHECK(ab.digits[2] == 0);
    CHECK(abc.digits[2] == 99);
    CHECK(compare(ab, abc) == std::strong_ordering::less);
}

TEST_CASE("compare basics") {
    const auto cfg = PatternConfig::fixed(4, 8);
    CHECK(compare(digits(0xb2, cfg), digits(0xb2, cfg)) == std::strong_ordering::equal);
    CHECK(compare(digits(0x30, cfg), digits(0xb2, cfg)) == std::strong_ordering::less);
}

// Order embedding, exhaustive over all 8-bit pairs for several k.
TEST_CASE("order embedding matches integer order (exhaustive m=8)") {
    for (uint32_t k : {1u, 2u, 3u, 4u, 8u}) {
        const auto cfg = PatternConfig::fixed(k, 8);
        std::vector<DigitString> all;
        all.reserve(256);
        for (uint32_t v = 0; v < 256; ++v) all.push_back(digits(v, cfg));
        for (uint32_t x = 0; x < 256; ++x)
            for (uint32_t y = 0; y < 256; ++y) {
                const auto want = x <=> y;
                CHECK(compare(all[x], all[y]) == want);
            }
    }
}

// Exhaustive at m=16: strict order on all adjacent pairs extends to every
// pair by transitivity, so this covers the full 65536-key order embedding.
TEST_CASE("order embedding is exhaustive at m=16 with padding") {
    for (uint32_t k : {1u, 5u, 8u, 16u}) {  // 5 does not divide 16
        const auto cfg = PatternConfig::fixed(k, 16);
        DigitString prev = digits(uint64_t{0}, cfg);
        for (uint64_t v = 1; v <= 0xffff; ++v) {
            DigitString cur = digits(v, cfg);
            CHECK(compare(prev, cur) == std::strong_ordering::less);
            prev = std::move(cur);
        }
    }
    const auto cfg = PatternConfig::fixed(5, 16);
    std::mt19937_64 rng(11);
    for (int i = 0; i < 20000; ++i) {
        const uint64_t x = rng() & 0xffff, y = rng() & 0xffff;
        CHECK(compare(digits(x, cfg), digits(y, cfg)) == (x <=> y));
    }
}

TEST_CASE("round trip recovers original bits") {
    std::mt19937_64 rng(13);
    for (uint32_t k : {1u, 3u, 4u, 7u, 8u, 13u}) {
        for (uint32_t m : {8u, 16u, 37u, 64u}) {
            if (k > m) continue;
            const auto cfg = PatternConfig::fixed(k, m);
            for (int i = 0; i < 100; ++i) {
                const uint64_t v = rng() & (m == 64 ? ~uint64_t{0} : (uint64_t{1} << m) - 1);
                CHECK(key_bits_from_digits(digits(v, cfg), cfg) == v);
            }
        }
    }
}

TEST_CASE("byte round trip at m=128") {
    const auto cfg = PatternConfig::fixed(8, 128);
    std::mt19937_64 rng(17);
    for (int i = 0; i < 50; ++i) {
        std::vector<uint8_t> bytes(16);
        for (auto& b : bytes) b = uint8_t(rng());
        CHECK(key_bytes_from_digits(digits(std::span<const uint8_t>(bytes), cfg), cfg) == bytes);
    }
}

TEST_CASE("string round trip and prefix freedom") {
    std::mt19937_64 rng(19);
    for (uint32_t k : {1u, 2u, 4u, 8u}) {
        const auto cfg = PatternConfig::strings(k);
        for (int i = 0; i < 300; ++i) {
            std::string s(1 + rng() % 12, 'a');
            for (char& c : s) c = char('a' + rng() % 26);
            const auto d = digits_string(s, cfg);
            CHECK(string_from_digits(d, cfg) == s);

            // No digit string is a strict prefix of another distinct key's.
            std::string t = s + char('a' + rng() % 26);
            const auto dt = digits_string(t, cfg);
            REQUIRE(d.size() < dt.size());
            bool is_prefix = true;
            for (size_t j = 0; j < d.size(); ++j)
                if (d.digits[j] != dt.digits[j]) {
                    is_prefix = false;
                    break;
                }
            CHECK(!is_prefix);
        }
    }
}
