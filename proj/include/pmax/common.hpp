#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace pmax {

// Input or contract violation (bad file, literal out of range, size guard).
// Expected outcomes of a solver (no, Reject, Infeasible, ExcessError) are
// values, not exceptions.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Internal consistency failure; indicates a bug, not bad input.
struct InternalError : std::logic_error {
    explicit InternalError(const std::string& msg) : std::logic_error(msg) {}
};

inline std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
    if (a > std::numeric_limits<std::uint64_t>::max() - b)
        throw Error("weight sum overflows 64 bits");
    return a + b;
}

// Exact rational with a power-of-two denominator: num / 2^exp, kept normalized.
struct Dyadic {
    std::int64_t num = 0;
    int exp = 0;

    Dyadic() = default;
    Dyadic(std::int64_t n, int e) : num(n), exp(e) { normalize(); }

    void normalize() {
        if (num == 0) { exp = 0; return; }
        while (exp > 0 && (num & 1) == 0) { num >>= 1; --exp; }
    }

    static Dyadic from_int(std::int64_t n) { return Dyadic(n, 0); }

    Dyadic operator+(const Dyadic& o) const {
        int e = exp > o.exp ? exp : o.exp;
        if (e - exp > 62 || e - o.exp > 62) throw Error("dyadic exponent overflow");
        std::int64_t a = num, b = o.num;
        for (int i = exp; i < e; ++i) {
            if (a > (std::numeric_limits<std::int64_t>::max() >> 1) ||
                a < (std::numeric_limits<std::int64_t>::min() >> 1))
                throw Error("dyadic overflow");
            a <<= 1;
        }
        for (int i = o.exp; i < e; ++i) {
            if (b > (std::numeric_limits<std::int64_t>::max() >> 1) ||
                b < (std::numeric_limits<std::int64_t>::min() >> 1))
                throw Error("dyadic overflow");
            b <<= 1;
        }
        if ((b > 0 && a > std::numeric_limits<std::int64_t>::max() - b) ||
            (b < 0 && a < std::numeric_limits<std::int64_t>::min() - b))
            throw Error("dyadic overflow");
        return Dyadic(a + b, e);
    }

    bool operator==(const Dyadic& o) const { return num == o.num && exp == o.exp; }
    bool operator!=(const Dyadic& o) const { return !(*this == o); }

    std::string str() const {
        if (exp == 0) return std::to_string(num);
        return std::to_string(num) + "/" + std::to_string(std::int64_t(1) << exp);
    }

    double value() const { return double(num) / double(std::int64_t(1) << exp); }
};

inline std::uint64_t fnv1a(const void* data, std::size_t len) {
    const unsigned char* p = static_cast<const unsigned char*>(data);
    std::uint64_t h = 1469598103934665603ULL;
    for (std::size_t i = 0; i < len; ++i) {
        h ^= p[i];
        h *= 1099511628211ULL;
    }
    return h;
}

inline std::string fnv1a_hex(const std::string& s) {
    std::uint64_t h = fnv1a(s.data(), s.size());
    char buf[17];
    static const char* digits = "0123456789abcdef";
    for (int i = 15; i >= 0; --i) { buf[i] = digits[h & 0xf]; h >>= 4; }
    buf[16] = '\0';
    return std::string(buf);
}

}  // namespace pmax
