#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <optional>
#include <vector>

#include "cubicq/errors.hpp"

namespace cubicq {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int num(const Rat& x) { return boost::multiprecision::numerator(x); }
inline Int den(const Rat& x) { return boost::multiprecision::denominator(x); }

/// Floor of sqrt(n) for n >= 0.
inline Int isqrt_floor(const Int& n) {
    if (n < 0) throw Error("isqrt_floor: negative argument");
    return boost::multiprecision::sqrt(n);
}

/// Exact integer square root, if n is a perfect square.
inline std::optional<Int> exact_isqrt(const Int& n) {
    if (n < 0) return std::nullopt;
    Int r = boost::multiprecision::sqrt(n);
    if (r * r == n) return r;
    return std::nullopt;
}

/// Exact rational square root, if x is a square in Q. Returns the root >= 0.
inline std::optional<Rat> exact_sqrt(const Rat& x) {
    if (x < 0) return std::nullopt;
    auto n = exact_isqrt(num(x));
    if (!n) return std::nullopt;
    auto d = exact_isqrt(den(x));
    if (!d) return std::nullopt;
    return Rat(*n, *d);
}

/// Row rank over Q. Rows may have any (equal) width; the input is consumed.
inline std::size_t rank_over_q(std::vector<std::vector<Rat>> rows) {
    if (rows.empty()) return 0;
    const std::size_t cols = rows[0].size();
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows.size(); ++col) {
        std::size_t pivot = rank;
        while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[rank], rows[pivot]);
        const Rat lead = rows[rank][col];
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == rank || rows[r][col] == 0) continue;
            const Rat f = rows[r][col] / lead;
            for (std::size_t c = col; c < cols; ++c) rows[r][c] -= f * rows[rank][c];
        }
        ++rank;
    }
    return rank;
}

/// Deterministic 64-bit generator (splitmix64); identical streams on every platform.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform-ish value in [0, bound); bound > 0. Bias is irrelevant here,
    /// determinism is what matters.
    std::uint64_t below(std::uint64_t bound) { return next() % bound; }

    /// Signed value in [-m, m].
    long range(long m) { return static_cast<long>(below(2 * static_cast<std::uint64_t>(m) + 1)) - m; }

private:
    std::uint64_t state_;
};

} // namespace cubicq
