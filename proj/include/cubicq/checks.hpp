#pragma once

#include <complex>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "cubicq/eisenstein.hpp"
#include "cubicq/errors.hpp"
#include "cubicq/json_io.hpp"
#include "cubicq/minimality.hpp"
#include "cubicq/numeric.hpp"
#include "cubicq/picard.hpp"
#include "cubicq/quotients.hpp"
#include "cubicq/subgroup_spec.hpp"
#include "cubicq/surfaces.hpp"
#include "cubicq/weyl.hpp"

namespace cubicq::checks {

// ---------------------------------------------------------------------------
// Framework.
// ---------------------------------------------------------------------------

struct CheckContext {
    std::string data_dir = "data";
};

struct CheckResult {
    std::string expected;
    std::string computed;
    bool pass = false;
};

/// One entry of the static manifest. criterion numbers group checks for the
/// acceptance summary; 0 marks supporting checks. The rule string names the
/// mathematical fact being verified, or "plumbing" for pure infrastructure.
struct Check {
    std::string name;
    std::string module;
    int criterion = 0;
    std::string rule;
    std::function<CheckResult(const CheckContext&)> run;
};

namespace detail {

inline CheckResult eq(const std::string& expected, const std::string& computed) {
    return {expected, computed, expected == computed};
}

inline CheckResult eq(long long expected, long long computed) {
    return eq(std::to_string(expected), std::to_string(computed));
}

/// Accumulator for multi-part checks; failures are named, success is terse.
struct Parts {
    bool ok = true;
    std::string detail;
    void require(bool cond, const std::string& what) {
        if (cond) return;
        ok = false;
        if (!detail.empty()) detail += "; ";
        detail += what;
    }
    CheckResult result() const {
        return {"all conditions hold", ok ? "all conditions hold" : "failed: " + detail, ok};
    }
};

inline std::string witness_string(const std::vector<std::vector<LineLabel>>& w) {
    std::string s;
    for (const auto& orbit : w) {
        s += "[";
        for (std::size_t i = 0; i < orbit.size(); ++i) {
            if (i) s += " ";
            s += to_string(orbit[i]);
        }
        s += "]";
    }
    return s.empty() ? "[]" : s;
}

inline IsometryGroup group_of_words(const std::vector<std::string>& words) {
    std::vector<LatticeIsometry> gens;
    for (const auto& w : words) gens.push_back(parse_word(w));
    return IsometryGroup::generate(gens);
}

// ---------------------------------------------------------------------------
// Shared heavyweight objects (each computed once per process).
// ---------------------------------------------------------------------------

inline const IsometryGroup& s5_handle() {
    static const IsometryGroup g = IsometryGroup::generate(
        {s6_embed(s6_from_cycles("(12)")), s6_embed(s6_from_cycles("(12345)"))});
    return g;
}

/// The six reference classes: one transposition, one double transposition, one
/// 3-cycle, the double-transposition four-group, a 5-cycle, and the even part.
inline const std::vector<std::pair<std::string, IsometryGroup>>& s5_reference_classes() {
    static const std::vector<std::pair<std::string, IsometryGroup>> v = [] {
        auto g = [](std::initializer_list<const char*> cycles) {
            std::vector<LatticeIsometry> gens;
            for (const char* c : cycles) gens.push_back(s6_embed(s6_from_cycles(c)));
            return IsometryGroup::generate(gens);
        };
        std::vector<std::pair<std::string, IsometryGroup>> out;
        out.emplace_back("<(12)>", g({"(12)"}));
        out.emplace_back("<(12)(34)>", g({"(12)(34)"}));
        out.emplace_back("<(123)>", g({"(123)"}));
        out.emplace_back("<(12)(34),(13)(24)>", g({"(12)(34)", "(13)(24)"}));
        out.emplace_back("<(12345)>", g({"(12345)"}));
        out.emplace_back("A5", g({"(123)", "(12345)"}));
        return out;
    }();
    return v;
}

inline const std::vector<std::vector<std::string>>& expected_image_class_words() {
    static const std::vector<std::vector<std::string>> v = {
        {"cs"}, {"c", "s"}, {"r"}, {"ar"}, {"a", "r"},
        {"cs", "r"}, {"r", "s"}, {"a", "r", "s"}, {"r", "c"}, {"r", "c", "s"}};
    return v;
}

inline const std::vector<std::vector<std::string>>& expected_rational_filter_words() {
    static const std::vector<std::vector<std::string>> v = {
        {"r"}, {"ar"}, {"a", "r"}, {"r", "s"}, {"a", "r", "s"}};
    return v;
}

// ---------------------------------------------------------------------------
// Independent numeric oracle for cubic Galois classes: roots located with
// floating-point iteration, then every acceptance is re-verified exactly.
// Sound by construction; complete for small coefficients because a rational
// root of an integral cubic times the leading coefficient is integral.
// ---------------------------------------------------------------------------

using Cplx = std::complex<double>;

inline Cplx to_complex(const FieldElement& x) {
    double a = static_cast<double>(num(x.a)) / static_cast<double>(den(x.a));
    double b = static_cast<double>(num(x.b)) / static_cast<double>(den(x.b));
    return {a - b / 2.0, b * 0.86602540378443864676};
}

/// All three roots of a monic-normalized cubic, by fixed-point iteration.
inline std::array<Cplx, 3> numeric_cubic_roots(const CubicPoly& p) {
    Cplx c3 = to_complex(p.c3);
    std::array<Cplx, 4> m = {to_complex(p.c0) / c3, to_complex(p.c1) / c3,
                             to_complex(p.c2) / c3, Cplx(1.0)};
    auto eval = [&m](Cplx z) { return ((m[3] * z + m[2]) * z + m[1]) * z + m[0]; };
    std::array<Cplx, 3> r = {Cplx(0.4, 0.9), Cplx(0.4, 0.9) * Cplx(0.4, 0.9),
                             Cplx(0.4, 0.9) * Cplx(0.4, 0.9) * Cplx(0.4, 0.9)};
    for (int it = 0; it < 200; ++it) {
        for (int i = 0; i < 3; ++i) {
            Cplx denom(1.0);
            for (int j = 0; j < 3; ++j)
                if (j != i) denom *= (r[i] - r[j]);
            r[i] -= eval(r[i]) / denom;
        }
    }
    return r;
}

/// Nearest Eisenstein integer to z; the caller must verify exactness.
inline EisensteinInt nearest_eisenstein(Cplx z) {
    double b = z.imag() / 0.86602540378443864676;
    double a = z.real() + b / 2.0;
    return {Int(std::llround(a)), Int(std::llround(b))};
}

/// Number of distinct roots of a separable integral cubic lying in the field,
/// found numerically and confirmed by exact evaluation.
inline int oracle_root_count(const CubicPoly& p) {
    std::set<std::pair<Rat, Rat>> verified;
    Cplx c3 = to_complex(p.c3);
    for (const Cplx& z : numeric_cubic_roots(p)) {
        EisensteinInt w = nearest_eisenstein(Cplx(z.real() * c3.real() - z.imag() * c3.imag(),
                                                  z.real() * c3.imag() + z.imag() * c3.real()));
        FieldElement cand = w.to_field() / p.c3;
        if (p.eval(cand).is_zero()) verified.insert({cand.a, cand.b});
    }
    return static_cast<int>(verified.size());
}

/// Squareness of an integral discriminant, via a numeric square root rounded
/// to the nearest Eisenstein integer and confirmed by exact squaring.
inline bool oracle_is_square(const FieldElement& x) {
    Cplx s = std::sqrt(to_complex(x));
    for (const Cplx& cand : {s, -s}) {
        EisensteinInt w = nearest_eisenstein(cand);
        FieldElement f = w.to_field();
        if (f * f == x) return true;
    }
    return false;
}

inline GaloisClass oracle_galois_class(const CubicPoly& p) {
    int n = oracle_root_count(p);
    if (n == 3) return GaloisClass::Trivial;
    if (n == 1) return GaloisClass::C2;
    return oracle_is_square(cubic_discriminant(p)) ? GaloisClass::C3 : GaloisClass::S3;
}

/// Rule-based intersection number of two distinct labeled lines, written out
/// case by case, independent of the lattice arithmetic.
inline int rule_pairing(const LineLabel& x, const LineLabel& y) {
    auto has = [](const LineLabel& l, int i) { return l.i == i || l.j == i; };
    if (x.kind == LineKind::E && y.kind == LineKind::E) return 0;
    if (x.kind == LineKind::Q && y.kind == LineKind::Q) return 0;
    if (x.kind == LineKind::E && y.kind == LineKind::Q) return x.i != y.i ? 1 : 0;
    if (x.kind == LineKind::Q && y.kind == LineKind::E) return x.i != y.i ? 1 : 0;
    if (x.kind == LineKind::E && y.kind == LineKind::L) return has(y, x.i) ? 1 : 0;
    if (x.kind == LineKind::L && y.kind == LineKind::E) return has(x, y.i) ? 1 : 0;
    if (x.kind == LineKind::Q && y.kind == LineKind::L) return has(y, x.i) ? 1 : 0;
    if (x.kind == LineKind::L && y.kind == LineKind::Q) return has(x, y.i) ? 1 : 0;
    // both L: meet exactly when the index pairs are disjoint
    return (x.i != y.i && x.i != y.j && x.j != y.i && x.j != y.j) ? 1 : 0;
}

} // namespace detail

// ---------------------------------------------------------------------------
// The manifest.
// ---------------------------------------------------------------------------

inline const std::vector<Check>& check_manifest();

struct CheckOutcome {
    std::string name;
    std::string module;
    int criterion = 0;
    std::string rule;
    CheckResult result;
};

struct Report {
    std::vector<CheckOutcome> outcomes;
    int passed = 0;
    int failed = 0;
};

/// Run the manifest (optionally restricted to one module) in manifest order.
/// Exceptions escaping a check are recorded as failures, never propagated.
inline Report run_checks(const CheckContext& ctx, const std::string& only_module = "") {
    Report rep;
    for (const auto& c : check_manifest()) {
        if (!only_module.empty() && c.module != only_module) continue;
        CheckOutcome o{c.name, c.module, c.criterion, c.rule, {}};
        try {
            o.result = c.run(ctx);
        } catch (const std::exception& e) {
            o.result = {"no exception", std::string("exception: ") + e.what(), false};
        }
        (o.result.pass ? rep.passed : rep.failed)++;
        rep.outcomes.push_back(std::move(o));
    }
    return rep;
}

} // namespace cubicq::checks

#include "cubicq/checks_manifest.hpp"
