#include "harness/keyvalue.hpp"

#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <stdexcept>

namespace ptrie::harness {

const char* mode_name(Mode m) {
    switch (m) {
        case Mode::U8: return "u8";
        case Mode::U16: return "u16";
        case Mode::U32: return "u32";
        case Mode::I64: return "i64";
        case Mode::F64: return "f64";
        case Mode::Str: return "str";
    }
    return "?";
}

std::optional<Mode> mode_from_name(const std::string& s) {
    if (s == "u8") return Mode::U8;
    if (s == "u16") return Mode::U16;
    if (s == "u32") return Mode::U32;
    if (s == "i64") return Mode::I64;
    if (s == "f64") return Mode::F64;
    if (s == "str") return Mode::Str;
    return std::nullopt;
}

uint32_t mode_bits(Mode m) {
    switch (m) {
        case Mode::U8: return 8;
        case Mode::U16: return 16;
        case Mode::U32: return 32;
        case Mode::I64: return 64;
        default: return 0;
    }
}

KeyValue KeyValue::of_u(Mode m, uint64_t v) {
    KeyValue kv;
    kv.mode = m;
    kv.u = v;
    return kv;
}

KeyValue KeyValue::of_i(int64_t v) {
    KeyValue kv;
    kv.mode = Mode::I64;
    kv.i = v;
    return kv;
}

KeyValue KeyValue::of_f(double v) {
    KeyValue kv;
    kv.mode = Mode::F64;
    kv.f = v == 0.0 ? 0.0 : v;  // normalize -0
    return kv;
}

KeyValue KeyValue::of_s(std::string v) {
    KeyValue kv;
    kv.mode = Mode::Str;
    kv.s = std::move(v);
    return kv;
}

std::strong_ordering KeyValue::order(const KeyValue& o) const {
    if (mode != o.mode) throw std::invalid_argument("KeyValue: mode mismatch in comparison");
    switch (mode) {
        case Mode::U8:
        case Mode::U16:
        case Mode::U32:
            return u <=> o.u;
        case Mode::I64:
            return i <=> o.i;
        case Mode::F64: {
            if (f < o.f) return std::strong_ordering::less;
            if (f > o.f) return std::strong_ordering::greater;
            return std::strong_ordering::equal;
        }
        case Mode::Str:
            return s <=> o.s;
    }
    return std::strong_ordering::equal;
}

namespace {

std::string escape_bytes(const std::string& s) {
    std::string out;
    for (unsigned char c : s) {
        if (c == '"' || c == '\\') {
            out.push_back('\\');
            out.push_back(static_cast<char>(c));
        } else if (c >= 0x20 && c < 0x7f) {
            out.push_back(static_cast<char>(c));
        } else {
            char buf[8];
            std::snprintf(buf, sizeof buf, "\\x%02x", c);
            out += buf;
        }
    }
    return out;
}

std::string unescape_bytes(const std::string& s) {
    std::string out;
    for (size_t i = 0; i < s.size(); ++i) {
        if (s[i] != '\\') {
            out.push_back(s[i]);
            continue;
        }
        if (i + 1 >= s.size()) throw std::invalid_argument("key: dangling escape");
        const char c = s[++i];
        if (c == 'x') {
            if (i + 2 >= s.size()) throw std::invalid_argument("key: short \\x escape");
            const std::string hex = s.substr(i + 1, 2);
            out.push_back(static_cast<char>(std::strtoul(hex.c_str(), nullptr, 16)));
            i += 2;
        } else {
            out.push_back(c);
        }
    }
    return out;
}

uint64_t parse_hex(const std::string& s, uint32_t bits) {
    if (s.empty() || s.size() != bits / 4)
        throw std::invalid_argument("key: expected " + std::to_string(bits / 4) + " hex digits");
    uint64_t v = 0;
    for (char c : s) {
        v <<= 4;
        if (c >= '0' && c <= '9') v |= uint64_t(c - '0');
        else if (c >= 'a' && c <= 'f') v |= uint64_t(c - 'a' + 10);
        else if (c >= 'A' && c <= 'F') v |= uint64_t(c - 'A' + 10);
        else throw std::invalid_argument("key: bad hex digit");
    }
    return v;
}

}  // namespace

std::string format_key(const KeyValue& kv) {
    char buf[64];
    switch (kv.mode) {
        case Mode::U8:
            std::snprintf(buf, sizeof buf, "u8:%02" PRIx64, kv.u);
            return buf;
        case Mode::U16:
            std::snprintf(buf, sizeof buf, "u16:%04" PRIx64, kv.u);
            return buf;
        case Mode::U32:
            std::snprintf(buf, sizeof buf, "u32:%08" PRIx64, kv.u);
            return buf;
        case Mode::I64:
            std::snprintf(buf, sizeof buf, "i64:%" PRId64, kv.i);
            return buf;
        case Mode::F64:
            std::snprintf(buf, sizeof buf, "f64:%a", kv.f);
            return buf;
        case Mode::Str:
            return "str:\"" + escape_bytes(kv.s) + "\"";
    }
    return "?";
}

KeyValue parse_key(const std::string& token, Mode expected_mode) {
    const size_t colon = token.find(':');
    if (colon == std::string::npos) throw std::invalid_argument("key: missing mode prefix");
    const std::string prefix = token.substr(0, colon);
    const auto mode = mode_from_name(prefix);
    if (!mode) throw std::invalid_argument("key: unknown mode prefix '" + prefix + "'");
    if (*mode != expected_mode)
        throw std::invalid_argument("key: mode prefix does not match workload mode");
    const std::string body = token.substr(colon + 1);
    switch (*mode) {
        case Mode::U8:
        case Mode::U16:
        case Mode::U32:
            return KeyValue::of_u(*mode, parse_hex(body, mode_bits(*mode)));
        case Mode::I64: {
            errno = 0;
            char* end = nullptr;
            const long long v = std::strtoll(body.c_str(), &end, 10);
            if (errno != 0 || end == body.c_str() || *end != '\0')
                throw std::invalid_argument("key: bad i64 literal");
            return KeyValue::of_i(v);
        }
        case Mode::F64: {
            errno = 0;
            char* end = nullptr;
            const double v = std::strtod(body.c_str(), &end);
            if (end == body.c_str() || *end != '\0')
                throw std::invalid_argument("key: bad f64 literal");
            if (std::isnan(v)) throw std::invalid_argument("key: NaN not allowed");
            return KeyValue::of_f(v);
        }
        case Mode::Str: {
            if (body.size() < 2 || body.front() != '"' || body.back() != '"')
                throw std::invalid_argument("key: string literal must be quoted");
            return KeyValue::of_s(unescape_bytes(body.substr(1, body.size() - 2)));
        }
    }
    throw std::invalid_argument("key: unreachable");
}

}  // namespace ptrie::harness
