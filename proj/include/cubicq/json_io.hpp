#pragma once

#include <fstream>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "cubicq/eisenstein.hpp"
#include "cubicq/errors.hpp"
#include "cubicq/minimality.hpp"
#include "cubicq/quotients.hpp"
#include "cubicq/subgroup_spec.hpp"
#include "cubicq/surfaces.hpp"

namespace cubicq {

using Json = nlohmann::json;

// ---------------------------------------------------------------------------
// Scalars.
// ---------------------------------------------------------------------------

inline Rat rat_from_string(const std::string& s) {
    std::size_t slash = s.find('/');
    auto digits = [](const std::string& t) {
        if (t.empty()) return false;
        std::size_t start = (t[0] == '-' || t[0] == '+') ? 1 : 0;
        if (start == t.size()) return false;
        for (std::size_t i = start; i < t.size(); ++i)
            if (t[i] < '0' || t[i] > '9') return false;
        return true;
    };
    std::string numer = s.substr(0, slash);
    std::string denom = (slash == std::string::npos) ? "1" : s.substr(slash + 1);
    if (!digits(numer) || !digits(denom))
        throw ParseError("rational: expected \"p\" or \"p/q\", got \"" + s + "\"");
    if (numer[0] == '+') numer.erase(0, 1);
    if (denom[0] == '+') denom.erase(0, 1);
    Int d(denom);
    if (d == 0) throw ParseError("rational: zero denominator in \"" + s + "\"");
    return Rat(Int(numer), d);
}

inline Rat rat_from_json(const Json& j) {
    if (j.is_number_integer()) return Rat(j.get<long long>());
    if (j.is_string()) return rat_from_string(j.get<std::string>());
    throw ParseError("rational: expected integer or string, got " + j.dump());
}

inline Json rat_to_json(const Rat& r) {
    if (den(r) == 1) {
        Int n = num(r);
        if (n >= std::numeric_limits<long long>::min() && n <= std::numeric_limits<long long>::max())
            return n.convert_to<long long>();
    }
    return to_string(r);
}

/// A field element is a rational (bare) or a pair [rational, omega coefficient].
inline FieldElement field_from_json(const Json& j) {
    if (j.is_array()) {
        if (j.size() != 2) throw ParseError("field element: expected [a, b], got " + j.dump());
        return {rat_from_json(j[0]), rat_from_json(j[1])};
    }
    return FieldElement(rat_from_json(j));
}

inline Json field_to_json(const FieldElement& x) {
    if (x.b == 0) return rat_to_json(x.a);
    return Json::array({rat_to_json(x.a), rat_to_json(x.b)});
}

// ---------------------------------------------------------------------------
// Polynomials and surfaces. Coefficient arrays are degree-descending.
// ---------------------------------------------------------------------------

inline std::array<FieldElement, 4> coeffs4_from_json(const Json& j, const char* what) {
    if (!j.is_array() || j.size() != 4)
        throw ParseError(std::string(what) + ": expected 4 coefficients, degree-descending");
    return {field_from_json(j[0]), field_from_json(j[1]), field_from_json(j[2]),
            field_from_json(j[3])};
}

inline CubicPoly cubic_from_json(const Json& j) {
    auto c = coeffs4_from_json(j, "cubic");
    return CubicPoly::make(c[0], c[1], c[2], c[3]);
}

inline Json cubic_to_json(const CubicPoly& p) {
    return Json::array(
        {field_to_json(p.c3), field_to_json(p.c2), field_to_json(p.c1), field_to_json(p.c0)});
}

inline BinaryCubic binary_from_json(const Json& j) {
    auto c = coeffs4_from_json(j, "binary cubic");
    return {c[0], c[1], c[2], c[3]};
}

inline Json binary_to_json(const BinaryCubic& b) {
    return Json::array(
        {field_to_json(b.p3), field_to_json(b.p2), field_to_json(b.p1), field_to_json(b.p0)});
}

inline SurfaceSpec surface_from_json(const Json& j) {
    SurfaceSpec s;
    s.P = binary_from_json(j.at("P"));
    s.u = field_from_json(j.at("u"));
    s.v = field_from_json(j.at("v"));
    s.alpha = field_from_json(j.at("alpha"));
    if (j.contains("w") || j.contains("lambda")) {
        if (!j.contains("w") || !j.contains("lambda"))
            throw ParseError("surface: w and lambda must appear together");
        s.normal_form = NormalForm{field_from_json(j.at("w")), field_from_json(j.at("lambda"))};
    }
    validate_surface(s);
    return s;
}

inline Json surface_to_json(const SurfaceSpec& s) {
    Json j;
    j["P"] = binary_to_json(s.P);
    j["u"] = field_to_json(s.u);
    j["v"] = field_to_json(s.v);
    j["alpha"] = field_to_json(s.alpha);
    if (s.normal_form) {
        j["w"] = field_to_json(s.normal_form->w);
        j["lambda"] = field_to_json(s.normal_form->lambda);
    }
    return j;
}

// ---------------------------------------------------------------------------
// Galois classes, verdicts, profiles.
// ---------------------------------------------------------------------------

inline GaloisClass galois_class_from_string(const std::string& s) {
    if (s == "trivial") return GaloisClass::Trivial;
    if (s == "C2") return GaloisClass::C2;
    if (s == "C3") return GaloisClass::C3;
    if (s == "S3") return GaloisClass::S3;
    throw ParseError("galois class: expected trivial|C2|C3|S3, got \"" + s + "\"");
}

inline Tri tri_from_string(const std::string& s) {
    if (s == "rational") return Tri::rational;
    if (s == "not_rational") return Tri::not_rational;
    if (s == "unknown") return Tri::unknown;
    throw ParseError("verdict: expected rational|not_rational|unknown, got \"" + s + "\"");
}

inline Json verdict_to_json(const Verdict& v) {
    Json j;
    j["g_minimal"] = v.g_minimal;
    j["x_rational"] = to_string(v.x_rational);
    j["quotient_rational"] = to_string(v.quotient_rational);
    j["justification"] = v.justification;
    return j;
}

inline Json profile_to_json(const GaloisProfile& p) {
    Json j;
    j["g1"] = to_string(p.g1);
    j["g2"] = to_string(p.g2);
    j["g3"] = to_string(p.g3);
    j["g4_has_order3"] = p.g4_has_order3 ? Json(*p.g4_has_order3) : Json(nullptr);
    j["same_splitting_field_g1_g2"] =
        p.same_splitting_field_g1_g2 ? Json(*p.same_splitting_field_g1_g2) : Json(nullptr);
    return j;
}

inline Json witness_to_json(const std::vector<std::vector<LineLabel>>& witness) {
    Json arr = Json::array();
    for (const auto& orbit : witness) {
        Json o = Json::array();
        for (const auto& l : orbit) o.push_back(to_string(l));
        arr.push_back(o);
    }
    return arr;
}

inline Json degree_search_to_json(const DegreeSearchResult& r) {
    Json j;
    j["max_degree"] = r.max_degree;
    j["witness"] = witness_to_json(r.witness);
    j["terminal_invariant_rank"] = r.terminal_invariant_rank;
    j["conic_bundle_caveat"] = r.conic_bundle_caveat;
    return j;
}

// ---------------------------------------------------------------------------
// Subgroup specifications.
// ---------------------------------------------------------------------------

inline Mat7 mat7_from_json(const Json& j) {
    if (!j.is_array() || j.size() != 7) throw ParseError("matrix: expected 7 rows");
    Mat7 m{};
    for (int i = 0; i < 7; ++i) {
        if (!j[i].is_array() || j[i].size() != 7) throw ParseError("matrix: expected 7 columns");
        for (int k = 0; k < 7; ++k) {
            if (!j[i][k].is_number_integer()) throw ParseError("matrix: entries must be integers");
            m[i][k] = Int(j[i][k].get<long long>());
        }
    }
    return m;
}

/// One generator: a word string, or an object with "word", "line_cycles", or "matrix".
inline LatticeIsometry generator_from_json(const Json& j) {
    if (j.is_string()) return parse_word(j.get<std::string>());
    if (j.is_object()) {
        if (j.contains("word")) return parse_word(j.at("word").get<std::string>());
        if (j.contains("line_cycles")) return parse_line_cycles(j.at("line_cycles").get<std::string>());
        if (j.contains("matrix")) return isometry_from_matrix(mat7_from_json(j.at("matrix")));
    }
    throw ParseError("generator: expected a word string or {word|line_cycles|matrix}, got " + j.dump());
}

inline IsometryGroup subgroup_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("generators"))
        throw ParseError("subgroup: expected {\"generators\": [...]}");
    std::vector<LatticeIsometry> gens;
    for (const auto& g : j.at("generators")) gens.push_back(generator_from_json(g));
    return IsometryGroup::generate(gens);
}

// ---------------------------------------------------------------------------
// Quotient scenarios.
// ---------------------------------------------------------------------------

inline SingularityType singularity_from_json(const Json& j) {
    return {j.at("m").get<int>(), j.at("q").get<int>()};
}

inline QuotientScenario scenario_from_json(const Json& j) {
    QuotientScenario s;
    s.name = j.at("name").get<std::string>();
    s.group_order = j.at("group_order").get<int>();
    s.pullback_factor = j.at("pullback_factor").get<int>();
    s.base_k2 = rat_from_json(j.at("base_k2"));
    for (const auto& sj : j.value("singularities", Json::array()))
        s.singularities.emplace_back(singularity_from_json(sj), sj.at("count").get<int>());
    for (const auto& cj : j.value("curves", Json::array())) {
        TrackedCurve c;
        c.name = cj.at("name").get<std::string>();
        c.quotient_self_intersection = rat_from_json(cj.at("self_intersection"));
        for (const auto& ij : cj.value("incidences", Json::array())) {
            CurveRole role;
            std::string rs = ij.at("role").get<std::string>();
            if (rs == "C") role = CurveRole::C;
            else if (rs == "D") role = CurveRole::D;
            else throw ParseError("curve incidence: role must be C or D");
            c.incidences.emplace_back(singularity_from_json(ij), role);
        }
        s.curves.push_back(std::move(c));
    }
    return s;
}

inline Json scenario_result_to_json(const ScenarioResult& r) {
    Json j;
    j["quotient_k2"] = rat_to_json(r.quotient_k2);
    j["resolved_k2"] = rat_to_json(r.resolved_k2);
    Json curves = Json::array();
    for (const auto& c : r.curve_self_intersections) curves.push_back(rat_to_json(c));
    j["curve_self_intersections"] = curves;
    return j;
}

// ---------------------------------------------------------------------------
// Files.
// ---------------------------------------------------------------------------

inline Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    Json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw ParseError(path + ": " + e.what());
    }
    return j;
}

} // namespace cubicq
