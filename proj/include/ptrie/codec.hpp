#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ptrie {

// Key layout shared by a trie and all keys stored in it: k bits per digit,
// m bits per key (fixed-width mode) or byte strings with a terminator
// (string mode).
class PatternConfig {
public:
    static constexpr uint32_t kMaxDigitBits = 16;
    static constexpr uint32_t kMaxKeyBits = 128;

    // Fixed-width keys of m bits, split MSB-first into ceil(m/k) digits.
    static PatternConfig fixed(uint32_t k, uint32_t m) {
        if (k < 1 || k > m)
            throw std::invalid_argument("PatternConfig: requires 1 <= k <= m");
        if (m > kMaxKeyBits)
            throw std::invalid_argument("PatternConfig: key width exceeds 128 bits");
        if (k > kMaxDigitBits)
            throw std::invalid_argument("PatternConfig: digit width exceeds 16 bits");
        return PatternConfig(k, m, false);
    }

    // Variable-length byte-string keys. Digits must stay byte-aligned so a
    // digit never straddles the appended terminator byte.
    static PatternConfig strings(uint32_t k) {
        if (k != 1 && k != 2 && k != 4 && k != 8)
            throw std::invalid_argument("PatternConfig: string mode requires k in {1,2,4,8}");
        return PatternConfig(k, 0, true);
    }

    uint32_t k() const { return k_; }
    uint32_t m() const { return m_; }
    bool variable() const { return variable_; }
    uint32_t radix() const { return 1u << k_; }

    // Digits per key in fixed-width mode.
    uint32_t digit_count() const { return (m_ + k_ - 1) / k_; }

    friend bool operator==(const PatternConfig&, const PatternConfig&) = default;

private:
    PatternConfig(uint32_t k, uint32_t m, bool variable) : k_(k), m_(m), variable_(variable) {}

    uint32_t k_;
    uint32_t m_;
    bool variable_;
};

// A key decomposed into digits, most significant first. Lexicographic order
// of digit strings equals unsigned numeric order of the underlying keys
// (fixed-width mode) and byte order with prefix-first (string mode).
struct DigitString {
    std::vector<uint32_t> digits;

    friend bool operator==(const DigitString&, const DigitString&) = default;
    friend std::strong_ordering operator<=>(const DigitString& a, const DigitString& b) {
        return std::lexicographical_compare_three_way(a.digits.begin(), a.digits.end(),
                                                      b.digits.begin(), b.digits.end());
    }

    size_t size() const { return digits.size(); }
};

inline std::strong_ordering compare(const DigitString& a, const DigitString& b) {
    return a <=> b;
}

namespace detail {

// Extracts digit j from an m-bit big-endian bit sequence addressed through
// `bit(i)` (i = 0 is the MSB). If k does not divide m the final digit holds
// the remaining r high bits shifted up, padded with k - r zero bits; the
// padding is identical for all keys, so order is preserved.
template <typename BitFn>
DigitString split_bits(uint32_t m, uint32_t k, BitFn bit) {
    const uint32_t count = (m + k - 1) / k;
    DigitString out;
    out.digits.resize(count);
    for (uint32_t j = 0; j < count; ++j) {
        uint32_t digit = 0;
        for (uint32_t b = 0; b < k; ++b) {
            const uint32_t pos = j * k + b;
            digit = (digit << 1) | (pos < m ? bit(pos) : 0u);
        }
        out.digits[j] = digit;
    }
    return out;
}

}  // namespace detail

// Fixed-width decomposition of an integer key (m <= 64).
inline DigitString digits(uint64_t key_bits, const PatternConfig& cfg) {
    if (cfg.variable())
        throw std::invalid_argument("digits: config is in string mode");
    if (cfg.m() > 64)
        throw std::invalid_argument("digits: integer overload supports m <= 64");
    if (cfg.m() < 64 && (key_bits >> cfg.m()) != 0)
        throw std::invalid_argument("digits: key does not fit in m bits");
    return detail::split_bits(cfg.m(), cfg.k(), [&](uint32_t pos) -> uint32_t {
        return static_cast<uint32_t>(key_bits >> (cfg.m() - 1 - pos)) & 1u;
    });
}

// Fixed-width decomposition from ceil(m/8) big-endian bytes. Unused high
// bits of the leading byte must be zero.
inline DigitString digits(std::span<const uint8_t> key_bytes, const PatternConfig& cfg) {
    if (cfg.variable())
        throw std::invalid_argument("digits: config is in string mode");
    const uint32_t m = cfg.m();
    const uint32_t nbytes = (m + 7) / 8;
    if (key_bytes.size() != nbytes)
        throw std::invalid_argument("digits: key byte count does not match m");
    const uint32_t spare = nbytes * 8 - m;
    if (spare > 0 && (key_bytes[0] >> (8 - spare)) != 0)
        throw std::invalid_argument("digits: key does not fit in m bits");
    return detail::split_bits(m, cfg.k(), [&](uint32_t pos) -> uint32_t {
        const uint32_t p = pos + spare;
        return static_cast<uint32_t>(key_bytes[p / 8] >> (7 - p % 8)) & 1u;
    });
}

// Variable-length keys: appends the terminator byte 0, then splits the byte
// stream MSB-first into k-bit digits. The terminator sorts before every
// content byte, which makes the digit strings prefix-free.
inline DigitString digits_string(std::string_view bytes, const PatternConfig& cfg) {
    if (!cfg.variable())
        throw std::invalid_argument("digits_string: config is in fixed-width mode");
    for (char c : bytes)
        if (c == '\0')
            throw std::invalid_argument("digits_string: interior zero byte");
    const uint32_t k = cfg.k();
    const uint32_t per_byte = 8 / k;
    DigitString out;
    out.digits.reserve((bytes.size() + 1) * per_byte);
    auto push_byte = [&](uint8_t b) {
        for (uint32_t j = 0; j < per_byte; ++j) {
            const uint32_t shift = 8 - (j + 1) * k;
            out.digits.push_back((b >> shift) & (cfg.radix() - 1));
        }
    };
    for (char c : bytes) push_byte(static_cast<uint8_t>(c));
    push_byte(0);
    return out;
}

// Round trip: original key bits of a fixed-width DigitString (m <= 64).
inline uint64_t key_bits_from_digits(const DigitString& ds, const PatternConfig& cfg) {
    if (cfg.variable() || cfg.m() > 64)
        throw std::invalid_argument("key_bits_from_digits: fixed-width m <= 64 only");
    if (ds.size() != cfg.digit_count())
        throw std::invalid_argument("key_bits_from_digits: digit count mismatch");
    uint64_t v = 0;
    const uint32_t k = cfg.k();
    const uint32_t m = cfg.m();
    for (uint32_t j = 0; j < ds.size(); ++j) {
        const uint32_t used = std::min(k, m - j * k);
        v = (v << used) | (ds.digits[j] >> (k - used));
    }
    return v;
}

// Round trip: original bytes of a fixed-width DigitString, MSB-first.
inline std::vector<uint8_t> key_bytes_from_digits(const DigitString& ds, const PatternConfig& cfg) {
    if (cfg.variable())
        throw std::invalid_argument("key_bytes_from_digits: fixed-width only");
    if (ds.size() != cfg.digit_count())
        throw std::invalid_argument("key_bytes_from_digits: digit count mismatch");
    const uint32_t m = cfg.m();
    const uint32_t k = cfg.k();
    const uint32_t nbytes = (m + 7) / 8;
    const uint32_t spare = nbytes * 8 - m;
    std::vector<uint8_t> out(nbytes, 0);
    for (uint32_t pos = 0; pos < m; ++pos) {
        const uint32_t j = pos / k;
        const uint32_t b = pos % k;
        const uint32_t bit = (ds.digits[j] >> (k - 1 - b)) & 1u;
        const uint32_t p = pos + spare;
        out[p / 8] = static_cast<uint8_t>(out[p / 8] | (bit << (7 - p % 8)));
    }
    return out;
}

// Round trip for string mode: strips the terminator.
inline std::string string_from_digits(const DigitString& ds, const PatternConfig& cfg) {
    if (!cfg.variable())
        throw std::invalid_argument("string_from_digits: string mode only");
    const uint32_t k = cfg.k();
    const uint32_t per_byte = 8 / k;
    if (ds.size() % per_byte != 0)
        throw std::invalid_argument("string_from_digits: digit count not byte aligned");
    std::string out;
    for (size_t i = 0; i < ds.size(); i += per_byte) {
        uint32_t b = 0;
        for (uint32_t j = 0; j < per_byte; ++j) b = (b << k) | ds.digits[i + j];
        out.push_back(static_cast<char>(b));
    }
    if (out.empty() || out.back() != '\0')
        throw std::invalid_argument("string_from_digits: missing terminator");
    out.pop_back();
    return out;
}

}  // namespace ptrie
