#pragma once

#include <string>
#include <utility>
#include <vector>

#include "cubicq/errors.hpp"
#include "cubicq/numeric.hpp"

namespace cubicq {

/// Cyclic quotient singularity of type (1/m)(1, q).
struct SingularityType {
    int m = 2;
    int q = 1;
    bool operator==(const SingularityType&) const = default;
};

inline std::string to_string(const SingularityType& t) {
    return "(1/" + std::to_string(t.m) + ")(1," + std::to_string(t.q) + ")";
}

/// Numerical effect of the minimal resolution of one singular point:
/// change of K^2, change of the two tracked branch self-intersections, and the
/// self-intersections of the exceptional chain.
struct ResolutionDelta {
    Rat dK2;
    Rat dC2;
    Rat dD2;
    std::vector<int> chain;
};

/// The four supported singularity rows. The C branch meets the first chain
/// curve and the D branch the last one.
inline ResolutionDelta table1_delta(const SingularityType& t) {
    if (t.m == 2 && t.q == 1) return {Rat(0), Rat(-1, 2), Rat(-1, 2), {-2}};
    if (t.m == 3 && t.q == 1) return {Rat(-1, 3), Rat(-1, 3), Rat(-1, 3), {-3}};
    if (t.m == 3 && t.q == 2) return {Rat(0), Rat(-2, 3), Rat(-2, 3), {-2, -2}};
    if (t.m == 5 && t.q == 2) return {Rat(-2, 5), Rat(-2, 5), Rat(-3, 5), {-3, -2}};
    throw UnsupportedSingularity("no resolution data for " + to_string(t));
}

/// K^2 of a degree-n quotient with pullback relation f*K = c * K_upstairs.
inline Rat hurwitz_k2(int n, int c, const Rat& base_k2) {
    if (n < 1) throw Error("hurwitz_k2: group order must be positive");
    return Rat(c) * Rat(c) * base_k2 / Rat(n);
}

/// K^2 after contracting the given number of disjoint (-1)-curves.
inline Rat post_contraction_degree(const Rat& resolved_k2, int contracted_count) {
    return resolved_k2 + Rat(contracted_count);
}

enum class CurveRole { C, D };

inline std::string to_string(CurveRole r) { return r == CurveRole::C ? "C" : "D"; }

/// A curve on the quotient followed through the resolution: its
/// self-intersection downstairs and the singular points it passes through,
/// with the branch role at each.
struct TrackedCurve {
    std::string name;
    Rat quotient_self_intersection;
    std::vector<std::pair<SingularityType, CurveRole>> incidences;
};

/**
 * One quotient computation: a degree-n quotient of a surface with known K^2,
 * its singular points (with multiplicities), and the curves to follow.
 */
struct QuotientScenario {
    std::string name;
    int group_order = 2;        // n
    int pullback_factor = 1;    // c in f*K = c * K_upstairs
    Rat base_k2 = Rat(3);
    std::vector<std::pair<SingularityType, int>> singularities; // type, count
    std::vector<TrackedCurve> curves;
};

struct ScenarioResult {
    Rat quotient_k2;                          // before resolving
    Rat resolved_k2;                          // after the minimal resolution
    std::vector<Rat> curve_self_intersections; // strict transforms, in input order
};

inline ScenarioResult evaluate_scenario(const QuotientScenario& s) {
    if (s.group_order < 2) throw Error("scenario: group order must be at least 2");
    if (s.pullback_factor < 1) throw Error("scenario: pullback factor must be at least 1");
    ScenarioResult r;
    r.quotient_k2 = hurwitz_k2(s.group_order, s.pullback_factor, s.base_k2);
    r.resolved_k2 = r.quotient_k2;
    for (const auto& [type, count] : s.singularities)
        r.resolved_k2 += Rat(count) * table1_delta(type).dK2;
    for (const auto& curve : s.curves) {
        Rat self = curve.quotient_self_intersection;
        for (const auto& [type, role] : curve.incidences) {
            auto delta = table1_delta(type);
            self += (role == CurveRole::C) ? delta.dC2 : delta.dD2;
        }
        r.curve_self_intersections.push_back(self);
    }
    return r;
}

/// Negative definiteness of a resolution chain's intersection matrix
/// (diagonal from the chain, adjacent entries 1), by leading principal minors.
inline bool chain_is_negative_definite(const std::vector<int>& chain) {
    std::size_t n = chain.size();
    std::vector<std::vector<Rat>> m(n, std::vector<Rat>(n, Rat(0)));
    for (std::size_t i = 0; i < n; ++i) {
        m[i][i] = Rat(chain[i]);
        if (i + 1 < n) m[i][i + 1] = m[i + 1][i] = Rat(1);
    }
    // minors of -M must all be positive
    for (std::size_t k = 1; k <= n; ++k) {
        std::vector<std::vector<Rat>> sub(k, std::vector<Rat>(k));
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) sub[i][j] = -m[i][j];
        // Bareiss-free direct elimination with exact rationals
        Rat det(1);
        for (std::size_t col = 0; col < k; ++col) {
            std::size_t piv = col;
            while (piv < k && sub[piv][col] == 0) ++piv;
            if (piv == k) { det = Rat(0); break; }
            if (piv != col) {
                std::swap(sub[piv], sub[col]);
                det = -det;
            }
            det *= sub[col][col];
            for (std::size_t row = col + 1; row < k; ++row) {
                Rat f = sub[row][col] / sub[col][col];
                for (std::size_t j = col; j < k; ++j) sub[row][j] -= f * sub[col][j];
            }
        }
        if (!(det > 0)) return false;
    }
    return true;
}

} // namespace cubicq
