#include "harness/workload.hpp"

#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>

namespace ptrie::harness {

const char* op_letter(OpKind k) {
    switch (k) {
        case OpKind::Insert: return "i";
        case OpKind::Remove: return "r";
        case OpKind::Search: return "s";
        case OpKind::Min: return "m";
        case OpKind::Max: return "x";
        case OpKind::DeleteMin: return "d";
        case OpKind::IterateAll: return "a";
        case OpKind::Validate: return "v";
    }
    return "?";
}

void write_workload(const Workload& w, std::ostream& os) {
    os << "# workload " << w.name << " seed=" << w.seed << "\n";
    os << "mode=" << mode_name(w.mode) << " k=" << w.k << "\n";
    for (const WorkloadOp& op : w.ops) {
        os << op_letter(op.kind);
        switch (op.kind) {
            case OpKind::Insert:
                os << " " << format_key(op.key) << " " << op.payload;
                break;
            case OpKind::Remove:
            case OpKind::Search:
                os << " " << format_key(op.key);
                break;
            default:
                break;
        }
        os << "\n";
    }
}

void write_workload_file(const Workload& w, const std::string& path) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw std::runtime_error("cannot open workload file for writing: " + path);
    write_workload(w, os);
}

Workload read_workload(std::istream& is) {
    Workload w;
    std::string line;
    bool have_header = false;
    size_t lineno = 0;
    uint64_t next_payload = 0;
    while (std::getline(is, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') {
            // Recover name/seed from the generator's banner when present.
            std::istringstream cs(line);
            std::string hash, tag, name, seed_kv;
            if (cs >> hash >> tag >> name >> seed_kv && tag == "workload" &&
                seed_kv.rfind("seed=", 0) == 0) {
                w.name = name;
                w.seed = std::stoull(seed_kv.substr(5));
            }
            continue;
        }
        std::istringstream ls(line);
        if (!have_header) {
            std::string mode_kv, k_kv;
            ls >> mode_kv >> k_kv;
            if (mode_kv.rfind("mode=", 0) != 0 || k_kv.rfind("k=", 0) != 0)
                throw std::runtime_error("workload line " + std::to_string(lineno) +
                                         ": expected 'mode=<m> k=<k>' header");
            const auto mode = mode_from_name(mode_kv.substr(5));
            if (!mode)
                throw std::runtime_error("workload line " + std::to_string(lineno) +
                                         ": unknown mode");
            w.mode = *mode;
            w.k = static_cast<uint32_t>(std::stoul(k_kv.substr(2)));
            have_header = true;
            continue;
        }
        std::string opw;
        ls >> opw;
        WorkloadOp op;
        auto need_key = [&]() {
            std::string tok;
            if (!(ls >> tok))
                throw std::runtime_error("workload line " + std::to_string(lineno) +
                                         ": missing key");
            op.key = parse_key(tok, w.mode);
        };
        if (opw == "i") {
            op.kind = OpKind::Insert;
            need_key();
            uint64_t p;
            op.payload = (ls >> p) ? p : next_payload;
        } else if (opw == "r") {
            op.kind = OpKind::Remove;
            need_key();
        } else if (opw == "s") {
            op.kind = OpKind::Search;
            need_key();
        } else if (opw == "m") {
            op.kind = OpKind::Min;
        } else if (opw == "x") {
            op.kind = OpKind::Max;
        } else if (opw == "d") {
            op.kind = OpKind::DeleteMin;
        } else if (opw == "a") {
            op.kind = OpKind::IterateAll;
        } else if (opw == "v") {
            op.kind = OpKind::Validate;
        } else {
            throw std::runtime_error("workload line " + std::to_string(lineno) +
                                     ": unknown op '" + opw + "'");
        }
        w.ops.push_back(std::move(op));
        ++next_payload;
    }
    if (!have_header) throw std::runtime_error("workload: missing header line");
    return w;
}

Workload read_workload_file(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw std::runtime_error("cannot open workload file: " + path);
    return read_workload(is);
}

std::optional<Dist> dist_from_name(const std::string& s) {
    if (s == "uniform") return Dist::Uniform;
    if (s == "clustered") return Dist::Clustered;
    if (s == "ascending") return Dist::Ascending;
    if (s == "duplicate-heavy") return Dist::DuplicateHeavy;
    return std::nullopt;
}

const char* dist_name(Dist d) {
    switch (d) {
        case Dist::Uniform: return "uniform";
        case Dist::Clustered: return "clustered";
        case Dist::Ascending: return "ascending";
        case Dist::DuplicateHeavy: return "duplicate-heavy";
    }
    return "?";
}

namespace {

class KeyGen {
public:
    KeyGen(Mode mode, uint32_t k, Dist dist, std::mt19937_64& rng)
        : mode_(mode), k_(k), dist_(dist), rng_(rng) {
        if (dist_ == Dist::Clustered) {
            for (int i = 0; i < 8; ++i) bases_.push_back(random_uniform());
        }
        if (dist_ == Dist::DuplicateHeavy) {
            for (int i = 0; i < 16; ++i) pool_.push_back(random_uniform());
        }
    }

    KeyValue next() {
        switch (dist_) {
            case Dist::Uniform: return random_uniform();
            case Dist::Clustered: return clustered();
            case Dist::Ascending: return ascending();
            case Dist::DuplicateHeavy:
                if (chance(10)) return random_uniform();
                return pool_[rng_() % pool_.size()];
        }
        return random_uniform();
    }

private:
    bool chance(uint32_t percent) { return rng_() % 100 < percent; }

    uint64_t mask_bits(uint32_t bits) const {
        return bits >= 64 ? ~uint64_t{0} : (uint64_t{1} << bits) - 1;
    }

    KeyValue random_uniform() {
        switch (mode_) {
            case Mode::U8:
            case Mode::U16:
            case Mode::U32:
                return KeyValue::of_u(mode_, rng_() & mask_bits(mode_bits(mode_)));
            case Mode::I64:
                return KeyValue::of_i(static_cast<int64_t>(rng_()));
            case Mode::F64: {
                for (;;) {
                    const uint64_t bits = rng_();
                    const uint32_t e = (bits >> 52) & 0x7ff;
                    const uint64_t man = bits & ((uint64_t{1} << 52) - 1);
                    if (e == 0x7ff && man != 0) continue;  // NaN
                    double v;
                    static_assert(sizeof v == sizeof bits);
                    __builtin_memcpy(&v, &bits, sizeof v);
                    return KeyValue::of_f(v);
                }
            }
            case Mode::Str: {
                const size_t len = 1 + rng_() % 10;
                std::string s(len, 'a');
                for (char& c : s) c = static_cast<char>('a' + rng_() % 26);
                return KeyValue::of_s(std::move(s));
            }
        }
        return KeyValue{};
    }

    // Keys sharing long digit prefixes; half the draws differ from their
    // base only in the lowest key bit, which forces full-depth push-downs.
    KeyValue clustered() {
        const KeyValue& base = bases_[rng_() % bases_.size()];
        const bool last_bit_only = chance(50);
        switch (mode_) {
            case Mode::U8:
            case Mode::U16:
            case Mode::U32: {
                const uint64_t vary =
                    last_bit_only ? 1 : mask_bits(std::min(2 * k_, mode_bits(mode_) - 1));
                return KeyValue::of_u(mode_, (base.u & ~vary) | (rng_() & vary));
            }
            case Mode::I64: {
                uint64_t mag = base.i < 0 ? ~static_cast<uint64_t>(base.i) + 1
                                          : static_cast<uint64_t>(base.i);
                const uint64_t vary = last_bit_only ? 1 : mask_bits(std::min(2 * k_, 31u));
                mag = (mag & ~vary) | (rng_() & vary);
                const int64_t v = base.i < 0 ? static_cast<int64_t>(0 - mag)
                                             : static_cast<int64_t>(mag & 0x7fffffffffffffffull);
                return KeyValue::of_i(v);
            }
            case Mode::F64: {
                uint64_t bits;
                double b = base.f;
                __builtin_memcpy(&bits, &b, sizeof bits);
                const uint64_t vary = last_bit_only ? 1 : mask_bits(std::min(2 * k_, 20u));
                bits = (bits & ~vary) | (rng_() & vary);
                double v;
                __builtin_memcpy(&v, &bits, sizeof v);
                return KeyValue::of_f(v);
            }
            case Mode::Str: {
                std::string s = base.s;
                if (s.empty()) s = "cluster";
                s.back() = static_cast<char>('a' + rng_() % (last_bit_only ? 2 : 26));
                return KeyValue::of_s(std::move(s));
            }
        }
        return base;
    }

    KeyValue ascending() {
        ++step_;
        switch (mode_) {
            case Mode::U8:
            case Mode::U16:
            case Mode::U32: {
                const uint64_t v = (step_ * 2 + rng_() % 2) & mask_bits(mode_bits(mode_));
                return KeyValue::of_u(mode_, v);
            }
            case Mode::I64:
                return KeyValue::of_i(static_cast<int64_t>(step_ * 3 + rng_() % 3) - (1 << 20));
            case Mode::F64:
                return KeyValue::of_f(static_cast<double>(step_) * 1.25 - 1e6);
            case Mode::Str: {
                char buf[24];
                std::snprintf(buf, sizeof buf, "key%012llu",
                              static_cast<unsigned long long>(step_));
                return KeyValue::of_s(buf);
            }
        }
        return KeyValue{};
    }

    Mode mode_;
    uint32_t k_;
    Dist dist_;
    std::mt19937_64& rng_;
    std::vector<KeyValue> bases_;
    std::vector<KeyValue> pool_;
    uint64_t step_ = 0;
};

}  // namespace

Workload gen_workload(Mode mode, uint32_t k, uint64_t n_ops, Dist dist, uint64_t seed,
                      bool pq_only) {
    if (mode == Mode::F64) {
        // The float adapter stores exponents in tries of width 12; keep k legal.
        if (k > 12) throw std::invalid_argument("gen_workload: k too large for f64 mode");
    } else if (mode != Mode::Str && k > mode_bits(mode)) {
        throw std::invalid_argument("gen_workload: k exceeds key width");
    }
    std::mt19937_64 rng(seed);
    Workload w;
    w.mode = mode;
    w.k = k;
    w.seed = seed;
    w.name = std::string(mode_name(mode)) + "-" + dist_name(dist) + "-k" + std::to_string(k) +
             "-s" + std::to_string(seed) + (pq_only ? "-pq" : "");
    w.ops.reserve(n_ops);
    KeyGen keys(mode, k, dist, rng);

    std::vector<KeyValue> live;
    const uint64_t validate_every = n_ops > 100 ? n_ops / 20 : 0;
    for (uint64_t idx = 0; idx < n_ops; ++idx) {
        if (!pq_only && validate_every && idx > 0 && idx % validate_every == 0) {
            w.ops.push_back(WorkloadOp{OpKind::Validate, {}, 0});
            continue;
        }
        const uint64_t roll = rng() % 100;
        WorkloadOp op;
        if (pq_only) {
            if (roll < 60) {
                op.kind = OpKind::Insert;
                op.key = keys.next();
                op.payload = idx;
            } else if (roll < 90) {
                op.kind = OpKind::DeleteMin;
            } else {
                op.kind = OpKind::Min;
            }
            w.ops.push_back(std::move(op));
            continue;
        }
        if (roll < 40) {
            op.kind = OpKind::Insert;
            op.key = keys.next();
            op.payload = idx;
            if (live.size() < 4096) live.push_back(op.key);
        } else if (roll < 65) {
            op.kind = OpKind::Remove;
            if (!live.empty() && rng() % 100 < 80) {
                const size_t j = rng() % live.size();
                op.key = live[j];
                live[j] = live.back();
                live.pop_back();
            } else {
                op.key = keys.next();
            }
        } else if (roll < 80) {
            op.kind = OpKind::Search;
            op.key = (!live.empty() && rng() % 2 == 0) ? live[rng() % live.size()] : keys.next();
        } else if (roll < 90) {
            op.kind = OpKind::DeleteMin;
        } else {
            const uint64_t sub = rng() % 100;
            if (sub < 45) op.kind = OpKind::Min;
            else if (sub < 90) op.kind = OpKind::Max;
            else op.kind = mode == Mode::F64 ? OpKind::Min : OpKind::IterateAll;
        }
        w.ops.push_back(std::move(op));
    }
    return w;
}

}  // namespace ptrie::harness
