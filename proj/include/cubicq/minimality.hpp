#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cubicq/errors.hpp"
#include "cubicq/numeric.hpp"
#include "cubicq/picard.hpp"
#include "cubicq/weyl.hpp"

namespace cubicq {

// ---------------------------------------------------------------------------
// Invariant rank and line orbits.
// ---------------------------------------------------------------------------

/// Rank over Q of the common fixed subspace of all group elements.
inline int invariant_rank(const IsometryGroup& g) {
    std::vector<std::vector<Rat>> rows;
    for (const auto& p : g.generators()) {
        Mat7 m = matrix_of_perm(p);
        for (int i = 0; i < 7; ++i) {
            std::vector<Rat> row(7);
            for (int j = 0; j < 7; ++j) row[j] = Rat(m[i][j] - (i == j ? 1 : 0));
            rows.push_back(std::move(row));
        }
    }
    return 7 - static_cast<int>(rank_over_q(std::move(rows)));
}

/// Closure of the union of two groups.
inline IsometryGroup join(const IsometryGroup& a, const IsometryGroup& b) {
    std::vector<LinePerm> gens = a.generators();
    for (const auto& g : b.generators()) gens.push_back(g);
    return IsometryGroup::from_perm_generators(gens);
}

namespace detail {

/// pairing(line i, line j) for the canonical line order; 0 or 1 off the diagonal.
inline const std::array<std::array<std::int8_t, kLineCount>, kLineCount>& line_pairing_table() {
    static const auto table = [] {
        std::array<std::array<std::int8_t, kLineCount>, kLineCount> t{};
        const auto& cls = all_line_classes();
        for (int i = 0; i < kLineCount; ++i)
            for (int j = 0; j < kLineCount; ++j)
                t[i][j] = static_cast<std::int8_t>(pairing(cls[i], cls[j]));
        return t;
    }();
    return table;
}

/// Bitmask of lines meeting line i (pairing 1).
inline const std::array<std::uint32_t, kLineCount>& meet_masks() {
    static const auto masks = [] {
        std::array<std::uint32_t, kLineCount> m{};
        const auto& t = line_pairing_table();
        for (int i = 0; i < kLineCount; ++i)
            for (int j = 0; j < kLineCount; ++j)
                if (i != j && t[i][j] != 0) m[i] |= (1u << j);
        return m;
    }();
    return masks;
}

struct OrbitData {
    std::vector<std::vector<int>> orbits; // ascending indices, sorted by first index
    std::vector<std::uint32_t> masks;
    std::vector<std::uint32_t> meets;    // union of meet_masks over the orbit
    std::vector<bool> internally_disjoint;
};

inline OrbitData orbit_data(const IsometryGroup& g) {
    OrbitData d;
    std::array<bool, kLineCount> seen{};
    for (int start = 0; start < kLineCount; ++start) {
        if (seen[start]) continue;
        std::vector<int> orbit{start};
        seen[start] = true;
        for (std::size_t k = 0; k < orbit.size(); ++k)
            for (const auto& p : g.generators()) {
                int y = p.img[orbit[k]];
                if (!seen[y]) {
                    seen[y] = true;
                    orbit.push_back(y);
                }
            }
        std::sort(orbit.begin(), orbit.end());
        std::uint32_t mask = 0, meets = 0;
        for (int i : orbit) {
            mask |= (1u << i);
            meets |= meet_masks()[i];
        }
        bool disjoint = (mask & meets) == 0;
        d.orbits.push_back(std::move(orbit));
        d.masks.push_back(mask);
        d.meets.push_back(meets);
        d.internally_disjoint.push_back(disjoint);
    }
    return d;
}

} // namespace detail

struct LineOrbit {
    std::vector<LineLabel> labels;
    bool disjoint; // all pairwise pairings zero
};

/// Orbit partition of the 27 labels, each orbit flagged for pairwise disjointness.
inline std::vector<LineOrbit> line_orbits(const IsometryGroup& g) {
    auto d = detail::orbit_data(g);
    std::vector<LineOrbit> out;
    for (std::size_t k = 0; k < d.orbits.size(); ++k) {
        LineOrbit o;
        for (int i : d.orbits[k]) o.labels.push_back(all_line_labels()[i]);
        o.disjoint = d.internally_disjoint[k];
        out.push_back(std::move(o));
    }
    return out;
}

/// Group-invariant pairwise-disjoint sets of surviving lines, one per
/// qualifying orbit (the minimal invariant contractible sets).
inline std::vector<std::vector<LineLabel>> contractible_sets(const IsometryGroup& g,
                                                             const ContractionState& state) {
    std::uint32_t survivors = 0;
    for (const auto& l : state.survivors) survivors |= (1u << line_index(l));
    auto d = detail::orbit_data(g);
    std::vector<std::vector<LineLabel>> out;
    for (std::size_t k = 0; k < d.orbits.size(); ++k) {
        if (!d.internally_disjoint[k]) continue;
        if ((d.masks[k] & survivors) != d.masks[k]) continue;
        std::vector<LineLabel> set;
        for (int i : d.orbits[k]) set.push_back(all_line_labels()[i]);
        out.push_back(std::move(set));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Exhaustive equivariant contraction search.
// ---------------------------------------------------------------------------

struct DegreeSearchResult {
    int max_degree = 3;
    std::vector<std::vector<LineLabel>> witness; // contracted orbits, in order
    int terminal_invariant_rank = 0;             // rank at the witness terminal state
    bool conic_bundle_caveat = false;            // degree <= 4 with terminal rank 2
};

namespace detail {

struct SearchMemoEntry {
    int delta = 0;
    std::vector<int> seq; // orbit indices, lexicographically least among maxima
};

inline const SearchMemoEntry& search(std::uint32_t mask, const OrbitData& d,
                                     std::map<std::uint32_t, SearchMemoEntry>& memo) {
    auto it = memo.find(mask);
    if (it != memo.end()) return it->second;
    SearchMemoEntry best;
    for (std::size_t k = 0; k < d.orbits.size(); ++k) {
        if (!d.internally_disjoint[k]) continue;
        if ((d.masks[k] & mask) != d.masks[k]) continue;
        std::uint32_t child_mask = mask & ~d.masks[k] & ~d.meets[k];
        const auto& child = search(child_mask, d, memo);
        int delta = static_cast<int>(d.orbits[k].size()) + child.delta;
        if (delta > best.delta) {
            best.delta = delta;
            best.seq.clear();
            best.seq.push_back(static_cast<int>(k));
            best.seq.insert(best.seq.end(), child.seq.begin(), child.seq.end());
        }
        // ties: earlier k wins, and orbit indices follow the label order of
        // their least elements, so the first maximum found is lexicographically
        // least; no replacement needed on equality.
    }
    return memo.emplace(mask, std::move(best)).first->second;
}

/// Rank of { v : gv = v for all g, pairing(v, c) = 0 for all contracted c }.
inline int invariant_rank_orthogonal_to(const IsometryGroup& g,
                                        const std::vector<DivisorClass>& contracted) {
    std::vector<std::vector<Rat>> rows;
    for (const auto& p : g.generators()) {
        Mat7 m = matrix_of_perm(p);
        for (int i = 0; i < 7; ++i) {
            std::vector<Rat> row(7);
            for (int j = 0; j < 7; ++j) row[j] = Rat(m[i][j] - (i == j ? 1 : 0));
            rows.push_back(std::move(row));
        }
    }
    for (const auto& c : contracted) {
        std::vector<Rat> row(7);
        row[0] = Rat(c.c[0]);
        for (int j = 1; j < 7; ++j) row[j] = Rat(-c.c[j]);
        rows.push_back(std::move(row));
    }
    return 7 - static_cast<int>(rank_over_q(std::move(rows)));
}

} // namespace detail

/**
 * Depth-first search over all equivariant contraction sequences from the
 * degree-3 state. Exhaustive with memoization on survivor sets; the witness is
 * the lexicographically least (by orbit label lists) among maximal sequences.
 */
inline DegreeSearchResult max_reachable_degree(const IsometryGroup& g) {
    auto d = detail::orbit_data(g);
    std::map<std::uint32_t, detail::SearchMemoEntry> memo;
    std::uint32_t full = (kLineCount == 32) ? ~0u : ((1u << kLineCount) - 1);
    const auto& top = detail::search(full, d, memo);

    DegreeSearchResult res;
    res.max_degree = 3 + top.delta;
    std::vector<DivisorClass> contracted;
    for (int k : top.seq) {
        std::vector<LineLabel> orbit;
        for (int i : d.orbits[k]) {
            orbit.push_back(all_line_labels()[i]);
            contracted.push_back(all_line_classes()[i]);
        }
        res.witness.push_back(std::move(orbit));
    }
    res.terminal_invariant_rank = detail::invariant_rank_orthogonal_to(g, contracted);
    res.conic_bundle_caveat = res.max_degree <= 4 && res.terminal_invariant_rank == 2;
    return res;
}

// ---------------------------------------------------------------------------
// Scenario analysis.
// ---------------------------------------------------------------------------

enum class Tri { rational, not_rational, unknown };

inline std::string to_string(Tri t) {
    switch (t) {
        case Tri::rational: return "rational";
        case Tri::not_rational: return "not_rational";
        default: return "unknown";
    }
}

/**
 * A surface-over-a-field scenario in lattice terms: the geometric order-3
 * action (default: the standard fixed-line-free one) and the image of the
 * field's absolute symmetry on the lattice, which must commute with it.
 */
struct GaloisScenario {
    IsometryGroup geometric_group = standard_geometric_group();
    IsometryGroup galois_image = IsometryGroup::trivial();
    bool point_assumption = true;
};

struct Verdict {
    bool g_minimal = false;
    Tri x_rational = Tri::unknown;
    Tri quotient_rational = Tri::unknown;
    std::vector<std::string> justification;
};

/// Centralizer of the standard order-3 group in the full isometry group; order 108.
inline const IsometryGroup& standard_centralizer() {
    static const IsometryGroup c =
        IsometryGroup::weyl_e6().centralizer_of(standard_geometric_group());
    return c;
}

/// Normalizer of the standard order-3 group in the full isometry group; order 216.
inline const IsometryGroup& standard_normalizer() {
    static const IsometryGroup n =
        IsometryGroup::weyl_e6().normalizer_of(standard_geometric_group());
    return n;
}

/**
 * All commuting images that force a minimal joint action while leaving room
 * to move on the lattice: subgroups S of the order-108 centralizer with
 * invariant_rank(S) >= 2 and invariant_rank(<S, standard>) = 1, up to
 * conjugation by the order-216 normalizer. Exactly ten classes.
 */
inline const std::vector<IsometryGroup>& galois_image_classes() {
    static const std::vector<IsometryGroup> classes = [] {
        std::vector<IsometryGroup> out;
        for (const auto& s : standard_centralizer().subgroup_classes(standard_normalizer())) {
            if (invariant_rank(s) < 2) continue;
            if (invariant_rank(join(s, standard_geometric_group())) != 1) continue;
            out.push_back(s);
        }
        return out;
    }();
    return classes;
}

/// The classes among galois_image_classes() that keep the surface itself
/// rational: maximal reachable degree at least 5. Exactly five classes.
inline std::vector<IsometryGroup> rational_x_filter(const std::vector<IsometryGroup>& classes) {
    std::vector<IsometryGroup> out;
    for (const auto& s : classes)
        if (max_reachable_degree(s).max_degree >= 5) out.push_back(s);
    return out;
}

namespace rules {
inline constexpr const char* kMinimal = "rule: joint invariant rank 1, so the action is minimal";
inline constexpr const char* kNonMinimal = "rule: joint invariant rank above 1, so the action is not minimal";
inline constexpr const char* kNoPoint = "rule: no rational point assumed, rationality left undecided";
inline constexpr const char* kDegree5 = "rule: an equivariant contraction reaches degree 5 or more with a point, hence rational";
inline constexpr const char* kDegree4Stuck =
    "rule: every equivariant contraction terminates at degree 4 or less, hence not rational";
inline constexpr const char* kConicCaveat =
    "note: terminal model has invariant rank 2 and may fiber in conics; the degree bound still decides";
inline constexpr const char* kTerminalRankHigh =
    "note: terminal model keeps invariant rank above 2; degree bound alone left undecided";
inline constexpr const char* kQuotientDescends =
    "rule: non-minimal order-3 action descends to a quotient of a del Pezzo of degree at least 4, hence the quotient is rational";
inline constexpr const char* kCandidateList =
    "rule: image lies in the non-rational-quotient candidate list (lattice-level verdict, refinable by surface data)";
inline constexpr const char* kOutsideCandidateList =
    "rule: surface rational and image outside the candidate list, hence the quotient is rational";
inline constexpr const char* kGeometricUnsupported =
    "note: geometric group is not conjugate to the standard fixed-line-free order-3 action; quotient rules do not apply";
inline constexpr const char* kQuotientUndecided = "note: no quotient rule applies";
} // namespace rules

/// Minimality and surface-rationality part of the verdict (no quotient rules);
/// throws CommutationViolation if the image fails to commute with the
/// geometric action.
inline Verdict analyze_x(const GaloisScenario& sc) {
    for (const auto& t : sc.galois_image.generators())
        for (const auto& g : sc.geometric_group.generators())
            if (compose(t, g) != compose(g, t))
                throw CommutationViolation("image element does not commute with the geometric action");

    Verdict v;
    v.g_minimal = invariant_rank(join(sc.geometric_group, sc.galois_image)) == 1;
    v.justification.push_back(v.g_minimal ? rules::kMinimal : rules::kNonMinimal);

    auto search = max_reachable_degree(sc.galois_image);
    if (!sc.point_assumption) {
        v.x_rational = Tri::unknown;
        v.justification.push_back(rules::kNoPoint);
    } else if (search.max_degree >= 5) {
        v.x_rational = Tri::rational;
        v.justification.push_back(rules::kDegree5);
    } else if (search.terminal_invariant_rank <= 2) {
        v.x_rational = Tri::not_rational;
        v.justification.push_back(rules::kDegree4Stuck);
        if (search.conic_bundle_caveat) v.justification.push_back(rules::kConicCaveat);
    } else {
        v.x_rational = Tri::unknown;
        v.justification.push_back(rules::kTerminalRankHigh);
    }
    return v;
}

/// Full lattice-level verdict: analyze_x plus the quotient rules.
inline Verdict analyze(const GaloisScenario& sc) {
    Verdict v = analyze_x(sc);

    if (!sc.point_assumption) {
        v.quotient_rational = Tri::unknown;
    } else if (!v.g_minimal) {
        v.quotient_rational = Tri::rational;
        v.justification.push_back(rules::kQuotientDescends);
    } else {
        auto w = IsometryGroup::weyl_e6().conjugator_onto(sc.geometric_group,
                                                          standard_geometric_group());
        if (!w) {
            v.quotient_rational = Tri::unknown;
            v.justification.push_back(rules::kGeometricUnsupported);
        } else if (v.x_rational == Tri::rational) {
            LinePerm wi = inverse(*w);
            std::vector<LinePerm> conj;
            for (const auto& e : sc.galois_image.elements())
                conj.push_back(compose(*w, compose(e, wi)));
            IsometryGroup moved(std::move(conj), {});
            bool listed = false;
            for (const auto& cls : rational_x_filter(galois_image_classes()))
                if (standard_normalizer().conjugates_onto(moved, cls)) { listed = true; break; }
            v.quotient_rational = listed ? Tri::not_rational : Tri::rational;
            v.justification.push_back(listed ? rules::kCandidateList : rules::kOutsideCandidateList);
        } else {
            v.quotient_rational = Tri::unknown;
            v.justification.push_back(rules::kQuotientUndecided);
        }
    }
    return v;
}

} // namespace cubicq
