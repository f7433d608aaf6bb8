#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "cubicq/errors.hpp"
#include "cubicq/numeric.hpp"

namespace cubicq {

// ---------------------------------------------------------------------------
// The field Q(w) with w^2 + w + 1 = 0.
// ---------------------------------------------------------------------------

/**
 * FieldElement: a + b*w with rational a, b and w a primitive cube root of
 * unity. Multiplication reduces by w^2 = -1 - w. The norm a^2 - ab + b^2 is
 * nonnegative and vanishes only at zero.
 */
struct FieldElement {
    Rat a{};
    Rat b{};

    FieldElement() = default;
    FieldElement(Rat a_, Rat b_) : a(std::move(a_)), b(std::move(b_)) {}
    explicit FieldElement(int n) : a(n) {}
    explicit FieldElement(const Rat& r) : a(r) {}

    static FieldElement omega() { return {Rat(0), Rat(1)}; }

    bool is_zero() const { return a == 0 && b == 0; }
    bool operator==(const FieldElement&) const = default;

    FieldElement operator+(const FieldElement& o) const { return {a + o.a, b + o.b}; }
    FieldElement operator-(const FieldElement& o) const { return {a - o.a, b - o.b}; }
    FieldElement operator-() const { return {-a, -b}; }

    FieldElement operator*(const FieldElement& o) const {
        // (a + bw)(c + dw) = ac + (ad + bc)w + bd(-1 - w)
        return {a * o.a - b * o.b, a * o.b + b * o.a - b * o.b};
    }

    /// Complex (= Galois) conjugate: w -> w^2.
    FieldElement conj() const { return {a - b, -b}; }

    Rat norm() const { return a * a - a * b + b * b; }

    FieldElement inv() const {
        if (is_zero()) throw DivisionByZero("inverse of zero in Q(w)");
        Rat n = norm();
        FieldElement c = conj();
        return {c.a / n, c.b / n};
    }

    FieldElement operator/(const FieldElement& o) const { return *this * o.inv(); }
};

inline std::string to_string(const Rat& r) {
    std::string s = numerator(r).str();
    if (denominator(r) != 1) s += "/" + denominator(r).str();
    return s;
}

inline std::string to_string(const FieldElement& x) {
    if (x.b == 0) return to_string(x.a);
    std::string s;
    if (x.a != 0) s += to_string(x.a);
    if (x.b > 0 && !s.empty()) s += "+";
    if (x.b == -1) s += "-";
    else if (x.b != 1) s += to_string(x.b) + "*";
    s += "w";
    return s;
}

/// The six units of Z[w]: +-1, +-w, +-w^2.
inline const std::array<FieldElement, 6>& field_units() {
    static const std::array<FieldElement, 6> u = {
        FieldElement(1),           FieldElement(-1),
        FieldElement{Rat(0), Rat(1)},  FieldElement{Rat(0), Rat(-1)},
        FieldElement{Rat(-1), Rat(-1)}, FieldElement{Rat(1), Rat(1)},
    };
    return u;
}

// ---------------------------------------------------------------------------
// Square roots in Q(w).
// ---------------------------------------------------------------------------

/**
 * A square root of x in Q(w), if one exists. Writing s = p + qw reduces
 * s^2 = x to the rational quadratic 3t^2 + (4A - 2B)t - B^2 = 0 in t = q^2
 * (for x = A + Bw with B != 0; the branches q = 0 and q = 2p cover B = 0).
 */
inline std::optional<FieldElement> field_sqrt(const FieldElement& x) {
    if (x.is_zero()) return FieldElement(0);
    const Rat &A = x.a, &B = x.b;
    if (B == 0) {
        // q = 0: s rational with s^2 = A
        if (auto p = exact_sqrt(A)) return FieldElement(*p);
        // q = 2p: s = p(1 + 2w), s^2 = -3p^2 = A
        if (A < 0) {
            if (auto p = exact_sqrt(-A / 3)) return FieldElement{*p, Rat(2) * *p};
        }
        return std::nullopt;
    }
    // 3t^2 + (4A - 2B)t - B^2 = 0 has exactly one positive root (product < 0)
    Rat lin = Rat(4) * A - Rat(2) * B;
    Rat disc = lin * lin + Rat(12) * B * B;
    auto sd = exact_sqrt(disc);
    if (!sd) return std::nullopt;
    Rat t = (-lin + *sd) / Rat(6);
    if (!(t > 0)) return std::nullopt;
    auto q = exact_sqrt(t);
    if (!q) return std::nullopt;
    Rat p = (B + t) / (Rat(2) * *q);
    FieldElement s{p, *q};
    if (s * s == x) return s;
    return std::nullopt;
}

inline bool is_square(const FieldElement& x) { return field_sqrt(x).has_value(); }

// ---------------------------------------------------------------------------
// Eisenstein integers and divisor enumeration.
// ---------------------------------------------------------------------------

/// a + bw with integer a, b.
struct EisensteinInt {
    Int a{};
    Int b{};

    bool is_zero() const { return a == 0 && b == 0; }
    bool operator==(const EisensteinInt&) const = default;
    // cpp_int has no operator<=>, so the ordering is spelled out
    std::strong_ordering operator<=>(const EisensteinInt& o) const {
        if (a != o.a) return a < o.a ? std::strong_ordering::less : std::strong_ordering::greater;
        if (b != o.b) return b < o.b ? std::strong_ordering::less : std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    EisensteinInt operator*(const EisensteinInt& o) const {
        return {a * o.a - b * o.b, a * o.b + b * o.a - b * o.b};
    }
    EisensteinInt conj() const { return {a - b, -b}; }
    Int norm() const { return a * a - a * b + b * b; }

    FieldElement to_field() const { return {Rat(a), Rat(b)}; }
};

/// Exact quotient n / d in Z[w], or absent if d does not divide n.
inline std::optional<EisensteinInt> exact_divide(const EisensteinInt& n, const EisensteinInt& d) {
    if (d.is_zero()) throw DivisionByZero("division by zero in Z[w]");
    EisensteinInt num = n * d.conj();
    Int dn = d.norm();
    if (num.a % dn != 0 || num.b % dn != 0) return std::nullopt;
    return EisensteinInt{num.a / dn, num.b / dn};
}

namespace detail {

/// Positive divisors of |n|, by trial division.
inline std::vector<Int> int_divisors(Int n) {
    if (n < 0) n = -n;
    std::vector<Int> out;
    for (Int d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        out.push_back(d);
        if (d * d != n) out.push_back(n / d);
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// All z in Z[w] with norm exactly m (m > 0).
inline std::vector<EisensteinInt> elements_of_norm(const Int& m) {
    std::vector<EisensteinInt> out;
    // a^2 - ab + b^2 = m implies 3b^2 <= 4m
    Int bmax = isqrt_floor(4 * m / 3);
    for (Int b = -bmax; b <= bmax; ++b) {
        // a = (b +- sqrt(4m - 3b^2)) / 2
        Int disc = 4 * m - 3 * b * b;
        if (disc < 0) continue;
        auto sq = exact_isqrt(disc);
        if (!sq) continue;
        for (int sign : {1, -1}) {
            Int twoa = b + sign * *sq;
            if (twoa % 2 != 0) continue;
            EisensteinInt z{twoa / 2, b};
            if (z.norm() == m) out.push_back(z);
            if (*sq == 0) break;
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

} // namespace detail

/// All divisors of n in Z[w], one representative per associate class
/// (n nonzero). Complete because Z[w] is a unique-factorization ring.
inline std::vector<EisensteinInt> eisenstein_divisors(const EisensteinInt& n) {
    if (n.is_zero()) throw Error("eisenstein_divisors: zero input");
    std::set<EisensteinInt> reps;
    for (const Int& m : detail::int_divisors(n.norm()))
        for (const auto& d : detail::elements_of_norm(m)) {
            if (!exact_divide(n, d)) continue;
            // canonical associate: largest (a, b) among the six unit multiples
            EisensteinInt best = d;
            static const std::array<EisensteinInt, 6> units = {
                EisensteinInt{1, 0},  EisensteinInt{-1, 0}, EisensteinInt{0, 1},
                EisensteinInt{0, -1}, EisensteinInt{-1, -1}, EisensteinInt{1, 1}};
            for (const auto& u : units) {
                EisensteinInt cand = d * u;
                if (cand > best) best = cand;
            }
            reps.insert(best);
        }
    return {reps.begin(), reps.end()};
}

// ---------------------------------------------------------------------------
// Cubic polynomials over Q(w).
// ---------------------------------------------------------------------------

/// c3 z^3 + c2 z^2 + c1 z + c0 with c3 != 0.
struct CubicPoly {
    FieldElement c3, c2, c1, c0;

    static CubicPoly make(FieldElement c3, FieldElement c2, FieldElement c1, FieldElement c0) {
        if (c3.is_zero()) throw Error("CubicPoly: leading coefficient must be nonzero");
        return {std::move(c3), std::move(c2), std::move(c1), std::move(c0)};
    }

    FieldElement eval(const FieldElement& z) const {
        return ((c3 * z + c2) * z + c1) * z + c0;
    }

    bool operator==(const CubicPoly&) const = default;
};

inline std::string to_string(const CubicPoly& p) {
    auto term = [](const FieldElement& c, const std::string& mono) {
        if (c.is_zero()) return std::string{};
        std::string cs = to_string(c);
        if (mono.empty()) return cs;
        if (cs == "1") return mono;
        if (cs == "-1") return "-" + mono;
        if (cs.find_first_of("+-", 1) != std::string::npos || c.b != 0) cs = "(" + cs + ")";
        return cs + "*" + mono;
    };
    std::string out;
    for (auto& [c, m] : std::initializer_list<std::pair<FieldElement, std::string>>{
             {p.c3, "z^3"}, {p.c2, "z^2"}, {p.c1, "z"}, {p.c0, ""}}) {
        std::string t = term(c, m);
        if (t.empty()) continue;
        if (!out.empty() && t[0] != '-') out += "+";
        out += t;
    }
    return out.empty() ? "0" : out;
}

inline FieldElement cubic_discriminant(const CubicPoly& p) {
    const FieldElement &a = p.c3, &b = p.c2, &c = p.c1, &d = p.c0;
    FieldElement k18(18), k4(4), k27(27);
    return k18 * a * b * c * d - k4 * b * b * b * d + b * b * c * c - k4 * a * c * c * c -
           k27 * a * a * d * d;
}

namespace detail {

/// Coefficients ascending (coeffs[i] is the z^i coefficient), degree <= 3.
using PolyVec = std::vector<FieldElement>;

inline PolyVec trim(PolyVec p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
    return p;
}

/// Synthetic division by (z - r); remainder returned separately.
inline std::pair<PolyVec, FieldElement> divide_linear(const PolyVec& p, const FieldElement& r) {
    PolyVec q(p.size() > 1 ? p.size() - 1 : 0);
    FieldElement carry(0);
    for (std::size_t i = p.size(); i-- > 0;) {
        FieldElement cur = p[i] + carry * r;
        if (i == 0) return {q, cur};
        q[i - 1] = cur;
        carry = cur;
    }
    return {q, FieldElement(0)};
}

/// Roots (with multiplicity) in Q(w) of a polynomial of degree 1..3 with
/// coefficients in Q(w), by unit-adjusted divisor ratios of the cleared
/// leading and constant Eisenstein-integer coefficients.
inline std::vector<FieldElement> poly_roots_in_field(PolyVec p) {
    p = trim(std::move(p));
    std::vector<FieldElement> roots;
    if (p.size() <= 1) return roots; // constants: no roots reported

    // deflate roots at zero
    std::size_t shift = 0;
    while (shift < p.size() && p[shift].is_zero()) ++shift;
    for (std::size_t k = 0; k < shift; ++k) roots.push_back(FieldElement(0));
    p.erase(p.begin(), p.begin() + static_cast<long>(shift));
    if (p.size() <= 1) return roots;

    // clear denominators to Eisenstein integers
    Int lcm = 1;
    for (const auto& c : p) {
        lcm = boost::multiprecision::lcm(lcm, denominator(c.a));
        lcm = boost::multiprecision::lcm(lcm, denominator(c.b));
    }
    std::vector<EisensteinInt> ip;
    for (const auto& c : p) {
        Rat ra = c.a * lcm, rb = c.b * lcm;
        ip.push_back({numerator(ra), numerator(rb)});
    }

    std::set<std::pair<std::pair<Rat, Rat>, int>> seen; // dedupe candidates
    std::vector<FieldElement> candidates;
    for (const auto& d0 : eisenstein_divisors(ip.front()))
        for (const auto& d1 : eisenstein_divisors(ip.back()))
            for (const auto& u : field_units()) {
                FieldElement cand = u * d0.to_field() / d1.to_field();
                if (seen.insert({{cand.a, cand.b}, 0}).second) candidates.push_back(cand);
            }
    std::sort(candidates.begin(), candidates.end(), [](const FieldElement& x, const FieldElement& y) {
        return x.a != y.a ? x.a < y.a : x.b < y.b;
    });

    PolyVec cur = [&] {
        PolyVec v;
        for (const auto& c : p) v.push_back(c);
        return v;
    }();
    for (const auto& cand : candidates) {
        while (cur.size() > 1) {
            auto [q, rem] = divide_linear(cur, cand);
            if (!rem.is_zero()) break;
            roots.push_back(cand);
            cur = q;
        }
    }
    std::sort(roots.begin(), roots.end(), [](const FieldElement& x, const FieldElement& y) {
        return x.a != y.a ? x.a < y.a : x.b < y.b;
    });
    return roots;
}

} // namespace detail

/// All roots of p lying in Q(w), with multiplicity, deterministically ordered.
inline std::vector<FieldElement> roots_in_field(const CubicPoly& p) {
    return detail::poly_roots_in_field({p.c0, p.c1, p.c2, p.c3});
}

// ---------------------------------------------------------------------------
// Galois classification of separable cubics over Q(w).
// ---------------------------------------------------------------------------

enum class GaloisClass { Trivial, C2, C3, S3 };

inline std::string to_string(GaloisClass g) {
    switch (g) {
        case GaloisClass::Trivial: return "trivial";
        case GaloisClass::C2: return "C2";
        case GaloisClass::C3: return "C3";
        default: return "S3";
    }
}

inline bool has_order3(GaloisClass g) { return g == GaloisClass::C3 || g == GaloisClass::S3; }

inline GaloisClass cubic_galois_group(const CubicPoly& p) {
    if (cubic_discriminant(p).is_zero())
        throw InseparableInput("cubic has a repeated root: " + to_string(p));
    std::size_t n = roots_in_field(p).size();
    if (n == 3) return GaloisClass::Trivial;
    if (n == 1) return GaloisClass::C2;
    if (n != 0) throw Error("separable cubic with two roots in the field cannot exist");
    return is_square(cubic_discriminant(p)) ? GaloisClass::C3 : GaloisClass::S3;
}

/// Whether x is a cube in Q(w).
inline bool is_cube(const FieldElement& x) {
    if (x.is_zero()) return true;
    return !detail::poly_roots_in_field({-x, FieldElement(0), FieldElement(0), FieldElement(1)})
                .empty();
}

/**
 * Whether two cubics, each with Galois class C3, have the same splitting
 * field. Since the base field contains w, each splitting field is generated
 * by a cube root of the cubed Lagrange resolvent
 *   rho = (-27 q + sqrt(-27) sqrt(disc)) / 2
 * of the depressed form y^3 + py + q (rho and its conjugate both work; a zero
 * one is swapped for the other). Two cyclic cubic extensions agree exactly
 * when the ratio or the product of their Kummer elements is a cube.
 */
inline bool same_splitting_field(const CubicPoly& f, const CubicPoly& g) {
    auto kummer = [](const CubicPoly& p) {
        // normalize monic, depress: y^3 + py + q
        FieldElement A = p.c2 / p.c3, B = p.c1 / p.c3, C = p.c0 / p.c3;
        FieldElement third(Rat(1, 3));
        FieldElement pp = B - A * A * third;
        FieldElement qq = A * A * A * FieldElement(Rat(2, 27)) - A * B * third + C;
        FieldElement disc = -(FieldElement(4) * pp * pp * pp) - FieldElement(27) * qq * qq;
        auto s = field_sqrt(disc);
        if (!s) throw Error("same_splitting_field: discriminant of a C3 cubic must be square");
        FieldElement sqrt_m27{Rat(3), Rat(6)}; // (3 + 6w)^2 = -27
        FieldElement half(Rat(1, 2));
        FieldElement rho = (FieldElement(-27) * qq + sqrt_m27 * *s) * half;
        if (rho.is_zero()) rho = (FieldElement(-27) * qq - sqrt_m27 * *s) * half;
        if (rho.is_zero()) throw Error("same_splitting_field: vanishing resolvent on separable input");
        return rho;
    };
    FieldElement rf = kummer(f), rg = kummer(g);
    return is_cube(rg / rf) || is_cube(rg * rf);
}

} // namespace cubicq
