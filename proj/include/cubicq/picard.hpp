#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "cubicq/errors.hpp"
#include "cubicq/numeric.hpp"

namespace cubicq {

/**
 * DivisorClass: an element of the rank-7 lattice Z*L + Z*E1 + ... + Z*E6
 * attached to a smooth cubic surface presented as a six-point blow-up of
 * the plane. Coefficients are stored in the fixed basis (L, E1..E6) and
 * stay in that basis through every operation, including contractions.
 */
struct DivisorClass {
    std::array<Int, 7> c{};

    DivisorClass() = default;
    DivisorClass(Int d0, Int d1, Int d2, Int d3, Int d4, Int d5, Int d6)
        : c{std::move(d0), std::move(d1), std::move(d2), std::move(d3),
            std::move(d4), std::move(d5), std::move(d6)} {}

    bool operator==(const DivisorClass&) const = default;

    DivisorClass& operator+=(const DivisorClass& o) {
        for (int i = 0; i < 7; ++i) c[i] += o.c[i];
        return *this;
    }
    DivisorClass& operator-=(const DivisorClass& o) {
        for (int i = 0; i < 7; ++i) c[i] -= o.c[i];
        return *this;
    }
    friend DivisorClass operator+(DivisorClass a, const DivisorClass& b) { return a += b; }
    friend DivisorClass operator-(DivisorClass a, const DivisorClass& b) { return a -= b; }
    friend DivisorClass operator*(const Int& k, const DivisorClass& d) {
        DivisorClass r = d;
        for (auto& x : r.c) x *= k;
        return r;
    }
    friend DivisorClass operator-(const DivisorClass& d) { return Int(-1) * d; }
};

/// Intersection pairing of signature (1,6): d0*d0' - sum_i di*di'.
inline Int pairing(const DivisorClass& x, const DivisorClass& y) {
    Int s = x.c[0] * y.c[0];
    for (int i = 1; i < 7; ++i) s -= x.c[i] * y.c[i];
    return s;
}

/// K = -3L + E1 + ... + E6; self-pairing 3.
inline const DivisorClass& canonical_class() {
    static const DivisorClass k{-3, 1, 1, 1, 1, 1, 1};
    return k;
}

// ---------------------------------------------------------------------------
// The 27 lines.
// ---------------------------------------------------------------------------

enum class LineKind : std::uint8_t { E, L, Q };

/// Label of one of the 27 lines: E(i), L(i,j) with i < j, or Q(i); indices 1..6.
struct LineLabel {
    LineKind kind{LineKind::E};
    std::uint8_t i{1};
    std::uint8_t j{0}; // only for kind L

    bool operator==(const LineLabel&) const = default;
    auto operator<=>(const LineLabel&) const = default;

    static LineLabel E(int i) { return {LineKind::E, static_cast<std::uint8_t>(i), 0}; }
    static LineLabel L(int i, int j) {
        if (i > j) std::swap(i, j);
        return {LineKind::L, static_cast<std::uint8_t>(i), static_cast<std::uint8_t>(j)};
    }
    static LineLabel Q(int i) { return {LineKind::Q, static_cast<std::uint8_t>(i), 0}; }
};

inline std::string to_string(const LineLabel& l) {
    switch (l.kind) {
        case LineKind::E: return "E" + std::to_string(l.i);
        case LineKind::L: return "L" + std::to_string(l.i) + std::to_string(l.j);
        case LineKind::Q: return "Q" + std::to_string(l.i);
    }
    return "?";
}

inline std::ostream& operator<<(std::ostream& os, const LineLabel& l) { return os << to_string(l); }

inline std::optional<LineLabel> parse_line_label(const std::string& s) {
    if (s.size() < 2 || s.size() > 3) return std::nullopt;
    auto digit = [](char ch) { return ch >= '1' && ch <= '6'; };
    if (s[0] == 'E' && s.size() == 2 && digit(s[1])) return LineLabel::E(s[1] - '0');
    if (s[0] == 'Q' && s.size() == 2 && digit(s[1])) return LineLabel::Q(s[1] - '0');
    if (s[0] == 'L' && s.size() == 3 && digit(s[1]) && digit(s[2]) && s[1] != s[2])
        return LineLabel::L(s[1] - '0', s[2] - '0');
    return std::nullopt;
}

/// Divisor class of a labeled line: E_i; L_ij = L - E_i - E_j; Q_i = 2L + E_i - sum E_k.
inline DivisorClass line_class(const LineLabel& l) {
    DivisorClass d;
    switch (l.kind) {
        case LineKind::E:
            d.c[l.i] = 1;
            break;
        case LineKind::L:
            d.c[0] = 1;
            d.c[l.i] = -1;
            d.c[l.j] = -1;
            break;
        case LineKind::Q:
            d.c[0] = 2;
            for (int k = 1; k <= 6; ++k) d.c[k] = -1;
            d.c[l.i] += 1;
            break;
    }
    return d;
}

inline constexpr int kLineCount = 27;

/// Canonical ordering of the 27 labels: E1..E6, L12..L56 (lexicographic), Q1..Q6.
inline const std::array<LineLabel, kLineCount>& all_line_labels() {
    static const auto table = [] {
        std::array<LineLabel, kLineCount> t{};
        int n = 0;
        for (int i = 1; i <= 6; ++i) t[n++] = LineLabel::E(i);
        for (int i = 1; i <= 6; ++i)
            for (int j = i + 1; j <= 6; ++j) t[n++] = LineLabel::L(i, j);
        for (int i = 1; i <= 6; ++i) t[n++] = LineLabel::Q(i);
        return t;
    }();
    return table;
}

inline const std::array<DivisorClass, kLineCount>& all_line_classes() {
    static const auto table = [] {
        std::array<DivisorClass, kLineCount> t{};
        for (int k = 0; k < kLineCount; ++k) t[k] = line_class(all_line_labels()[k]);
        return t;
    }();
    return table;
}

/// Index of a label in the canonical ordering.
inline int line_index(const LineLabel& l) {
    switch (l.kind) {
        case LineKind::E: return l.i - 1;
        case LineKind::L: {
            int n = 6;
            for (int i = 1; i <= 6; ++i)
                for (int j = i + 1; j <= 6; ++j, ++n)
                    if (i == l.i && j == l.j) return n;
            break;
        }
        case LineKind::Q: return 20 + l.i;
    }
    throw Error("line_index: malformed label");
}

inline std::optional<LineLabel> label_of_class(const DivisorClass& d) {
    for (int k = 0; k < kLineCount; ++k)
        if (all_line_classes()[k] == d) return all_line_labels()[k];
    return std::nullopt;
}

/// True iff d is one of the 27 line classes.
inline bool is_line(const DivisorClass& d) { return label_of_class(d).has_value(); }

// ---------------------------------------------------------------------------
// Contractions.
// ---------------------------------------------------------------------------

/**
 * ContractionState: the surface obtained from the cubic by blowing down a
 * pairwise-disjoint set of line classes. Classes stay written in the original
 * basis; passing to the blow-down only restricts attention to classes
 * orthogonal to everything contracted. Survivors are the lines that remain
 * lines downstairs.
 */
struct ContractionState {
    std::vector<DivisorClass> contracted; // pairwise orthogonal line classes
    std::vector<LineLabel> survivors;     // canonical order

    int degree() const { return 3 + static_cast<int>(contracted.size()); }
};

inline ContractionState initial_state() {
    ContractionState s;
    s.survivors.assign(all_line_labels().begin(), all_line_labels().end());
    return s;
}

/// Blow down a set of surviving, pairwise-disjoint lines.
inline ContractionState contract(const ContractionState& state, const std::vector<DivisorClass>& lines) {
    for (const auto& d : lines) {
        auto lbl = label_of_class(d);
        if (!lbl) throw NotALine("contract: class is not a line class");
        bool surviving = false;
        for (const auto& s : state.survivors)
            if (s == *lbl) { surviving = true; break; }
        if (!surviving) throw NotALine("contract: " + to_string(*lbl) + " is not a line of this surface");
    }
    for (std::size_t i = 0; i < lines.size(); ++i)
        for (std::size_t j = i + 1; j < lines.size(); ++j)
            if (pairing(lines[i], lines[j]) != 0)
                throw NotDisjoint("contract: classes " + std::to_string(i) + " and " + std::to_string(j) +
                                  " are not disjoint");

    ContractionState next;
    next.contracted = state.contracted;
    next.contracted.insert(next.contracted.end(), lines.begin(), lines.end());
    for (const auto& s : state.survivors) {
        const DivisorClass& d = line_class(s);
        bool ok = true;
        for (const auto& e : lines)
            if (pairing(d, e) != 0) { ok = false; break; } // removes the contracted lines too (self-pairing -1)
        if (ok) next.survivors.push_back(s);
    }
    return next;
}

/// Canonical class of the blow-down: K plus the sum of everything contracted.
inline DivisorClass canonical_after(const ContractionState& state) {
    DivisorClass k = canonical_class();
    for (const auto& d : state.contracted) k -= d;
    return k;
}

} // namespace cubicq
