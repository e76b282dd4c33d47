#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>

namespace ptrie::harness {

enum class Mode { U8, U16, U32, I64, F64, Str };

const char* mode_name(Mode m);
std::optional<Mode> mode_from_name(const std::string& s);
uint32_t mode_bits(Mode m);  // key width; magnitude width for I64; 0 for Str/F64

// One workload key. Ordering follows the mode's natural order; -0.0 and
// +0.0 compare equal, NaN never appears.
struct KeyValue {
    Mode mode = Mode::U32;
    uint64_t u = 0;
    int64_t i = 0;
    double f = 0.0;
    std::string s;

    static KeyValue of_u(Mode m, uint64_t v);
    static KeyValue of_i(int64_t v);
    static KeyValue of_f(double v);
    static KeyValue of_s(std::string v);

    std::strong_ordering order(const KeyValue& o) const;
    bool operator==(const KeyValue& o) const { return order(o) == std::strong_ordering::equal; }
    bool operator<(const KeyValue& o) const { return order(o) == std::strong_ordering::less; }
};

// Token syntax: u8:ff | u16:00ff | u32:0000002a | i64:-42 | f64:0x1.8p+0 | str:"ab"
std::string format_key(const KeyValue& kv);
KeyValue parse_key(const std::string& token, Mode expected_mode);

}  // namespace ptrie::harness
