#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include "cubicq/errors.hpp"
#include "cubicq/picard.hpp"

namespace cubicq {

// ---------------------------------------------------------------------------
// Permutations of the 27 lines.
// ---------------------------------------------------------------------------

/// A permutation of the canonical line indices. img[i] is the image of line i.
struct LinePerm {
    std::array<std::uint8_t, kLineCount> img{};

    bool operator==(const LinePerm&) const = default;
    auto operator<=>(const LinePerm&) const = default;

    static LinePerm identity() {
        LinePerm p;
        for (int i = 0; i < kLineCount; ++i) p.img[i] = static_cast<std::uint8_t>(i);
        return p;
    }

    bool is_identity() const { return *this == identity(); }

    LineLabel apply(const LineLabel& l) const { return all_line_labels()[img[line_index(l)]]; }
};

/// compose(f, g) applies g first: (f*g)(x) = f(g(x)).
inline LinePerm compose(const LinePerm& f, const LinePerm& g) {
    LinePerm r;
    for (int i = 0; i < kLineCount; ++i) r.img[i] = f.img[g.img[i]];
    return r;
}

inline LinePerm inverse(const LinePerm& p) {
    LinePerm r;
    for (int i = 0; i < kLineCount; ++i) r.img[p.img[i]] = static_cast<std::uint8_t>(i);
    return r;
}

inline int perm_order(const LinePerm& p) {
    LinePerm x = p;
    int n = 1;
    while (!x.is_identity()) {
        x = compose(x, p);
        ++n;
        if (n > 5000) throw Error("perm_order: runaway");
    }
    return n;
}

inline std::vector<LineLabel> fixed_labels(const LinePerm& p) {
    std::vector<LineLabel> out;
    for (int i = 0; i < kLineCount; ++i)
        if (p.img[i] == i) out.push_back(all_line_labels()[i]);
    return out;
}

struct LinePermHash {
    std::size_t operator()(const LinePerm& p) const {
        std::size_t h = 1469598103934665603ULL;
        for (auto b : p.img) {
            h ^= b;
            h *= 1099511628211ULL;
        }
        return h;
    }
};

// ---------------------------------------------------------------------------
// Lattice isometries fixing the canonical class.
// ---------------------------------------------------------------------------

using Mat7 = std::array<std::array<Int, 7>, 7>; // column j = image of basis vector j

inline DivisorClass apply_matrix(const Mat7& m, const DivisorClass& v) {
    DivisorClass r;
    for (int i = 0; i < 7; ++i) {
        Int s = 0;
        for (int j = 0; j < 7; ++j) s += m[i][j] * v.c[j];
        r.c[i] = s;
    }
    return r;
}

inline Mat7 mat_mul(const Mat7& a, const Mat7& b) {
    Mat7 r{};
    for (int i = 0; i < 7; ++i)
        for (int k = 0; k < 7; ++k) {
            if (a[i][k] == 0) continue;
            for (int j = 0; j < 7; ++j) r[i][j] += a[i][k] * b[k][j];
        }
    return r;
}

/// Matrix realizing a line permutation, reconstructed from the images of
/// E1..E6 and of L = L12 + E1 + E2. Assumes (does not check) that the
/// permutation comes from an isometry.
inline Mat7 matrix_of_perm(const LinePerm& p) {
    Mat7 m{};
    auto set_col = [&m](int j, const DivisorClass& d) {
        for (int i = 0; i < 7; ++i) m[i][j] = d.c[i];
    };
    const auto& cls = all_line_classes();
    DivisorClass imgL = cls[p.img[line_index(LineLabel::L(1, 2))]];
    imgL += cls[p.img[line_index(LineLabel::E(1))]];
    imgL += cls[p.img[line_index(LineLabel::E(2))]];
    set_col(0, imgL);
    for (int i = 1; i <= 6; ++i) set_col(i, cls[p.img[line_index(LineLabel::E(i))]]);
    return m;
}

/**
 * LatticeIsometry: a pairing-preserving automorphism of the lattice that
 * fixes K, together with the permutation it induces on the 27 lines.
 * Two isometries are equal iff their line permutations are equal.
 */
struct LatticeIsometry {
    LinePerm perm;
    Mat7 mat;

    bool operator==(const LatticeIsometry& o) const { return perm == o.perm; }
};

namespace detail {

inline void validate_isometry(const Mat7& m, const LinePerm& p) {
    auto col = [&m](int j) {
        DivisorClass d;
        for (int i = 0; i < 7; ++i) d.c[i] = m[i][j];
        return d;
    };
    for (int i = 0; i < 7; ++i)
        for (int j = i; j < 7; ++j) {
            Int want = (i != j) ? Int(0) : (i == 0 ? Int(1) : Int(-1));
            if (pairing(col(i), col(j)) != want)
                throw NotIsometry("pairing not preserved on basis pair (" + std::to_string(i) + "," +
                                  std::to_string(j) + ")");
        }
    if (apply_matrix(m, canonical_class()) != canonical_class())
        throw NotIsometry("canonical class not fixed");
    std::array<bool, kLineCount> seen{};
    for (int k = 0; k < kLineCount; ++k) {
        if (apply_matrix(m, all_line_classes()[k]) != all_line_classes()[p.img[k]])
            throw NotIsometry("matrix and line permutation disagree at " +
                              to_string(all_line_labels()[k]));
        if (seen[p.img[k]]) throw NotIsometry("line permutation is not a bijection");
        seen[p.img[k]] = true;
    }
}

} // namespace detail

/// Build an isometry from the images of the basis (L, E1..E6); throws NotIsometry.
inline LatticeIsometry isometry_from_images(const DivisorClass& imgL,
                                            const std::array<DivisorClass, 6>& imgE) {
    Mat7 m{};
    for (int i = 0; i < 7; ++i) {
        m[i][0] = imgL.c[i];
        for (int j = 1; j <= 6; ++j) m[i][j] = imgE[j - 1].c[i];
    }
    LinePerm p;
    for (int k = 0; k < kLineCount; ++k) {
        auto lbl = label_of_class(apply_matrix(m, all_line_classes()[k]));
        if (!lbl)
            throw NotIsometry("image of " + to_string(all_line_labels()[k]) + " is not a line class");
        p.img[k] = static_cast<std::uint8_t>(line_index(*lbl));
    }
    detail::validate_isometry(m, p);
    return {p, m};
}

/// Build (and fully validate) the isometry inducing a given line permutation.
inline LatticeIsometry isometry_from_perm(const LinePerm& p) {
    Mat7 m = matrix_of_perm(p);
    detail::validate_isometry(m, p);
    return {p, m};
}

inline LatticeIsometry compose(const LatticeIsometry& f, const LatticeIsometry& g) {
    return {compose(f.perm, g.perm), mat_mul(f.mat, g.mat)};
}

inline LatticeIsometry inverse(const LatticeIsometry& f) {
    LinePerm q = inverse(f.perm);
    return {q, matrix_of_perm(q)};
}

/// Reflection v -> v + <v, root> root for a root of self-pairing -2.
inline LatticeIsometry reflection(const DivisorClass& root) {
    if (pairing(root, root) != -2) throw NotIsometry("reflection: root must have self-pairing -2");
    auto reflect = [&root](const DivisorClass& v) { return v + pairing(v, root) * root; };
    DivisorClass imgL = reflect(DivisorClass{1, 0, 0, 0, 0, 0, 0});
    std::array<DivisorClass, 6> imgE;
    for (int i = 1; i <= 6; ++i) {
        DivisorClass e;
        e.c[i] = 1;
        imgE[i - 1] = reflect(e);
    }
    return isometry_from_images(imgL, imgE);
}

/// The six simple reflections: roots E_i - E_{i+1} (i = 1..5) and L - E1 - E2 - E3.
inline const std::vector<LatticeIsometry>& simple_reflections() {
    static const auto refs = [] {
        std::vector<LatticeIsometry> v;
        for (int i = 1; i <= 5; ++i) {
            DivisorClass root;
            root.c[i] = 1;
            root.c[i + 1] = -1;
            v.push_back(reflection(root));
        }
        v.push_back(reflection(DivisorClass{1, -1, -1, -1, 0, 0, 0}));
        return v;
    }();
    return refs;
}

// ---------------------------------------------------------------------------
// The S6 embedding and the named elements a, b, c, r, s.
// ---------------------------------------------------------------------------

/// sigma[i-1] = image of i. Acts by E_i -> E_sigma(i), L -> L.
inline LatticeIsometry s6_embed(const std::array<int, 6>& sigma) {
    std::array<bool, 7> seen{};
    for (int i : sigma) {
        if (i < 1 || i > 6 || seen[i]) throw NotIsometry("s6_embed: not a permutation of 1..6");
        seen[i] = true;
    }
    std::array<DivisorClass, 6> imgE;
    for (int i = 1; i <= 6; ++i) {
        DivisorClass e;
        e.c[sigma[i - 1]] = 1;
        imgE[i - 1] = e;
    }
    return isometry_from_images(DivisorClass{1, 0, 0, 0, 0, 0, 0}, imgE);
}

/// Parse disjoint cycles over 1..6, e.g. "(14)(25)(36)"; unlisted points are fixed.
inline std::array<int, 6> s6_from_cycles(const std::string& text) {
    std::array<int, 6> sigma{1, 2, 3, 4, 5, 6};
    std::array<bool, 6> listed{};
    std::size_t pos = 0;
    while (pos < text.size()) {
        if (text[pos] == ' ') { ++pos; continue; }
        if (text[pos] != '(') throw ParseError("cycle text: expected '(' at position " + std::to_string(pos));
        std::vector<int> cyc;
        ++pos;
        while (pos < text.size() && text[pos] != ')') {
            char ch = text[pos];
            if (ch == ' ' || ch == ',') { ++pos; continue; }
            if (ch < '1' || ch > '6') throw ParseError("cycle text: expected digit 1..6 at position " + std::to_string(pos));
            if (listed[ch - '1']) throw ParseError(std::string("cycle text: point ") + ch + " listed twice");
            listed[ch - '1'] = true;
            cyc.push_back(ch - '0');
            ++pos;
        }
        if (pos == text.size()) throw ParseError("cycle text: unterminated cycle");
        ++pos;
        for (std::size_t k = 0; k < cyc.size(); ++k) sigma[cyc[k] - 1] = cyc[(k + 1) % cyc.size()];
    }
    return sigma;
}

/**
 * The five standing generators:
 *   a = (123) and b = (456) on the blown-up points, c = (14)(25)(36);
 *   s swaps E_i with Q_i and fixes every L_ij;
 *   r cycles E_i -> Q_i -> L_jk -> E_i on {1,2,3} and E_i -> L_jk -> Q_i on {4,5,6}.
 */
inline const LatticeIsometry& named_element(char name) {
    static const std::map<char, LatticeIsometry> table = [] {
        std::map<char, LatticeIsometry> t;
        t.emplace('a', s6_embed(s6_from_cycles("(123)")));
        t.emplace('b', s6_embed(s6_from_cycles("(456)")));
        t.emplace('c', s6_embed(s6_from_cycles("(14)(25)(36)")));
        t.emplace('s', isometry_from_images(
                           DivisorClass{5, -2, -2, -2, -2, -2, -2},
                           {line_class(LineLabel::Q(1)), line_class(LineLabel::Q(2)),
                            line_class(LineLabel::Q(3)), line_class(LineLabel::Q(4)),
                            line_class(LineLabel::Q(5)), line_class(LineLabel::Q(6))}));
        t.emplace('r', isometry_from_images(
                           DivisorClass{4, -1, -1, -1, -2, -2, -2},
                           {line_class(LineLabel::Q(1)), line_class(LineLabel::Q(2)),
                            line_class(LineLabel::Q(3)), line_class(LineLabel::L(5, 6)),
                            line_class(LineLabel::L(4, 6)), line_class(LineLabel::L(4, 5))}));
        return t;
    }();
    auto it = table.find(name);
    if (it == table.end()) throw ParseError(std::string("unknown named element '") + name + "'");
    return it->second;
}

// ---------------------------------------------------------------------------
// Finite groups of isometries.
// ---------------------------------------------------------------------------

inline constexpr std::size_t kWeylOrder = 51840;

/**
 * IsometryGroup: an immutable, shareable handle to a finite group of line
 * permutations (each realizable by a unique lattice isometry). Elements are
 * kept sorted so every derived report is reproducible.
 */
class IsometryGroup {
public:
    IsometryGroup() : IsometryGroup(std::vector<LinePerm>{LinePerm::identity()}, {}) {}

    static IsometryGroup trivial() { return IsometryGroup(); }

    /// Closure of a generating set under composition; throws BudgetExceeded
    /// if the closure grows past `budget` elements.
    static IsometryGroup generate(const std::vector<LatticeIsometry>& gens,
                                  std::size_t budget = kWeylOrder) {
        std::vector<LinePerm> gp;
        gp.reserve(gens.size());
        for (const auto& g : gens) gp.push_back(g.perm);
        return IsometryGroup(close(gp, budget), gp);
    }

    static IsometryGroup from_perm_generators(const std::vector<LinePerm>& gens,
                                              std::size_t budget = kWeylOrder) {
        return IsometryGroup(close(gens, budget), gens);
    }

    /// The full isometry group of the lattice fixing K, order 51840.
    static const IsometryGroup& weyl_e6() {
        static const IsometryGroup w = [] {
            std::vector<LinePerm> gens;
            for (const auto& g : simple_reflections()) gens.push_back(g.perm);
            return IsometryGroup(close(gens, kWeylOrder), gens);
        }();
        return w;
    }

    std::size_t order() const { return elems_->size(); }
    bool is_trivial() const { return order() == 1; }
    const std::vector<LinePerm>& elements() const { return *elems_; }

    /// A generating set; falls back to the full element list for derived handles.
    const std::vector<LinePerm>& generators() const { return gens_.empty() ? *elems_ : gens_; }

    bool contains(const LinePerm& p) const {
        return std::binary_search(elems_->begin(), elems_->end(), p);
    }

    bool operator==(const IsometryGroup& o) const { return *elems_ == *o.elems_; }

    bool is_subgroup_of(const IsometryGroup& o) const {
        for (const auto& e : *elems_)
            if (!o.contains(e)) return false;
        return true;
    }

    /// Elements of the ambient (this) commuting with everything in target.
    IsometryGroup centralizer_of(const IsometryGroup& target) const {
        std::vector<LinePerm> out;
        for (const auto& e : *elems_) {
            bool ok = true;
            for (const auto& t : target.generators())
                if (compose(e, t) != compose(t, e)) { ok = false; break; }
            if (ok) out.push_back(e);
        }
        return IsometryGroup(std::move(out), {});
    }

    /// Elements of the ambient (this) normalizing target as a set.
    IsometryGroup normalizer_of(const IsometryGroup& target) const {
        std::vector<LinePerm> out;
        for (const auto& e : *elems_) {
            LinePerm ei = inverse(e);
            bool ok = true;
            for (const auto& t : target.elements())
                if (!target.contains(compose(e, compose(t, ei)))) { ok = false; break; }
            if (ok) out.push_back(e);
        }
        return IsometryGroup(std::move(out), {});
    }

    /// Elements of this fixing every listed label pointwise.
    IsometryGroup line_fixator(const std::vector<LineLabel>& labels) const {
        std::vector<int> idx;
        for (const auto& l : labels) idx.push_back(line_index(l));
        std::vector<LinePerm> out;
        for (const auto& e : *elems_) {
            bool ok = true;
            for (int i : idx)
                if (e.img[i] != i) { ok = false; break; }
            if (ok) out.push_back(e);
        }
        return IsometryGroup(std::move(out), {});
    }

    /// A witness w in this with w g w^-1 = h, if one exists.
    std::optional<LatticeIsometry> conjugating_element(const LatticeIsometry& g,
                                                       const LatticeIsometry& h) const {
        if (perm_order(g.perm) != perm_order(h.perm)) return std::nullopt;
        for (const auto& w : *elems_) {
            if (compose(w, g.perm) == compose(h.perm, w)) return isometry_from_perm(w);
        }
        return std::nullopt;
    }

    /// A witness w in this with w A w^-1 = B setwise, if one exists.
    std::optional<LinePerm> conjugator_onto(const IsometryGroup& A, const IsometryGroup& B) const {
        if (A.order() != B.order()) return std::nullopt;
        for (const auto& w : *elems_) {
            LinePerm wi = inverse(w);
            bool ok = true;
            for (const auto& a : A.elements())
                if (!B.contains(compose(w, compose(a, wi)))) { ok = false; break; }
            if (ok) return w;
        }
        return std::nullopt;
    }

    bool conjugates_onto(const IsometryGroup& A, const IsometryGroup& B) const {
        return conjugator_onto(A, B).has_value();
    }

    /// Conjugacy classes (under this group) of its own elements of the given order.
    std::vector<std::vector<LinePerm>> element_classes_of_order(int n) const {
        std::vector<LinePerm> pool;
        for (const auto& e : *elems_)
            if (perm_order(e) == n) pool.push_back(e);
        std::vector<std::vector<LinePerm>> classes;
        std::unordered_set<LinePerm, LinePermHash> done;
        for (const auto& x : pool) {
            if (done.count(x)) continue;
            // orbit of x under conjugation by generators
            std::vector<LinePerm> orbit{x};
            std::unordered_set<LinePerm, LinePermHash> seen{x};
            for (std::size_t k = 0; k < orbit.size(); ++k) {
                for (const auto& g : generators()) {
                    LinePerm y = compose(g, compose(orbit[k], inverse(g)));
                    if (seen.insert(y).second) orbit.push_back(y);
                }
            }
            std::sort(orbit.begin(), orbit.end());
            for (const auto& y : orbit) done.insert(y);
            classes.push_back(std::move(orbit));
        }
        std::sort(classes.begin(), classes.end(),
                  [](const auto& a, const auto& b) {
                      if (a.size() != b.size()) return a.size() < b.size();
                      return a.front() < b.front();
                  });
        return classes;
    }

    /**
     * Every subgroup of this group, found by closing generating sets grown one
     * prime-power-order element at a time. Guarded: ambient order must be <= 1000.
     * Result is sorted by (order, element list).
     */
    std::vector<IsometryGroup> all_subgroups() const {
        if (order() > 1000) throw BudgetExceeded("all_subgroups: ambient order exceeds 1000");
        // Prime-power-order extenders suffice: every element of a subgroup is a
        // product of powers of itself having prime-power order.
        auto is_prime_power = [](int n) {
            for (int p : {2, 3, 5, 7}) {
                if (n % p != 0) continue;
                while (n % p == 0) n /= p;
                return n == 1;
            }
            return false;
        };
        std::vector<LinePerm> extenders;
        for (const auto& e : *elems_)
            if (!e.is_identity() && is_prime_power(perm_order(e))) extenders.push_back(e);
        struct Rec {
            std::vector<LinePerm> elems;
            std::vector<LinePerm> gens;
        };
        std::map<std::vector<LinePerm>, std::vector<LinePerm>> found; // elems -> gens
        std::vector<Rec> queue{{{LinePerm::identity()}, {}}};
        found.emplace(queue[0].elems, queue[0].gens);
        for (std::size_t qi = 0; qi < queue.size(); ++qi) {
            Rec cur = queue[qi];
            for (const auto& g : extenders) {
                if (std::binary_search(cur.elems.begin(), cur.elems.end(), g)) continue;
                std::vector<LinePerm> gens = cur.gens;
                gens.push_back(g);
                std::vector<LinePerm> closed = close(gens, order());
                std::sort(closed.begin(), closed.end());
                if (found.emplace(closed, gens).second) queue.push_back({std::move(closed), std::move(gens)});
            }
        }
        std::vector<IsometryGroup> out;
        out.reserve(found.size());
        for (const auto& [elems, gens] : found) out.push_back(IsometryGroup(elems, gens));
        std::sort(out.begin(), out.end(), [](const IsometryGroup& x, const IsometryGroup& y) {
            if (x.order() != y.order()) return x.order() < y.order();
            return x.elements() < y.elements();
        });
        return out;
    }

    /// Subgroups of this group deduplicated under conjugation by `conjugating`.
    /// Representatives are minimal element lists within each conjugacy bucket.
    std::vector<IsometryGroup> subgroup_classes(const IsometryGroup& conjugating) const {
        auto subs = all_subgroups();
        std::map<std::vector<LinePerm>, std::vector<std::size_t>> buckets; // orbit key -> indices
        for (std::size_t k = 0; k < subs.size(); ++k)
            buckets[conjugation_orbit_key(subs[k], conjugating)].push_back(k);
        std::vector<IsometryGroup> reps;
        for (const auto& [key, idxs] : buckets) {
            std::size_t best = idxs[0];
            for (std::size_t i : idxs)
                if (subs[i].elements() < subs[best].elements()) best = i;
            reps.push_back(subs[best]);
        }
        std::sort(reps.begin(), reps.end(), [](const IsometryGroup& x, const IsometryGroup& y) {
            if (x.order() != y.order()) return x.order() < y.order();
            return x.elements() < y.elements();
        });
        return reps;
    }

    /// Canonical key of the conjugation orbit of subgroup S under this->elements.
    static std::vector<LinePerm> conjugation_orbit_key(const IsometryGroup& S,
                                                       const IsometryGroup& conjugating) {
        std::vector<LinePerm> best = S.elements();
        std::vector<LinePerm> cand;
        for (const auto& w : conjugating.elements()) {
            LinePerm wi = inverse(w);
            cand.clear();
            cand.reserve(S.order());
            for (const auto& s : S.elements()) cand.push_back(compose(w, compose(s, wi)));
            std::sort(cand.begin(), cand.end());
            if (cand < best) best = cand;
        }
        return best;
    }

    /// Internal constructor: element list (deduplicated here) plus optional generators.
    IsometryGroup(std::vector<LinePerm> elems, std::vector<LinePerm> gens)
        : gens_(std::move(gens)) {
        std::sort(elems.begin(), elems.end());
        elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
        if (elems.empty() || !std::binary_search(elems.begin(), elems.end(), LinePerm::identity()))
            throw Error("IsometryGroup: element list must contain the identity");
        elems_ = std::make_shared<const std::vector<LinePerm>>(std::move(elems));
    }

private:
    static std::vector<LinePerm> close(const std::vector<LinePerm>& gens, std::size_t budget) {
        std::unordered_set<LinePerm, LinePermHash> seen{LinePerm::identity()};
        std::vector<LinePerm> queue{LinePerm::identity()};
        for (std::size_t qi = 0; qi < queue.size(); ++qi) {
            LinePerm x = queue[qi];
            for (const auto& g : gens) {
                LinePerm y = compose(g, x);
                if (seen.insert(y).second) {
                    if (seen.size() > budget)
                        throw BudgetExceeded("generate: closure exceeds budget " + std::to_string(budget));
                    queue.push_back(y);
                }
            }
        }
        return queue;
    }

    std::shared_ptr<const std::vector<LinePerm>> elems_;
    std::vector<LinePerm> gens_;
};

/// The standing order-3 group <ab> (no fixed lines).
inline const IsometryGroup& standard_geometric_group() {
    static const IsometryGroup g = IsometryGroup::generate(
        {compose(named_element('a'), named_element('b'))}, 3);
    return g;
}

/// Witness that `group` has a normal subgroup conjugate (inside `ambient`)
/// to one of the candidates. Scans normal subgroups small-to-large.
struct NormalWitness {
    IsometryGroup subgroup;
    std::size_t candidate_index;
};

inline std::optional<NormalWitness> normal_subgroup_witness(const IsometryGroup& group,
                                                            const IsometryGroup& ambient,
                                                            const std::vector<IsometryGroup>& candidates) {
    for (const auto& n : group.all_subgroups()) {
        if (n.is_trivial()) continue;
        bool normal = true;
        for (const auto& g : group.generators()) {
            LinePerm gi = inverse(g);
            for (const auto& x : n.elements())
                if (!n.contains(compose(g, compose(x, gi)))) { normal = false; break; }
            if (!normal) break;
        }
        if (!normal) continue;
        for (std::size_t ci = 0; ci < candidates.size(); ++ci)
            if (ambient.conjugates_onto(n, candidates[ci])) return NormalWitness{n, ci};
    }
    return std::nullopt;
}

} // namespace cubicq
