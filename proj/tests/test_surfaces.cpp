#include <catch2/catch_amalgamated.hpp>

#include "cubicq/json_io.hpp"
#include "cubicq/surfaces.hpp"

using namespace cubicq;

namespace {

const std::string kDataDir = CUBICQ_DATA_DIR;

FieldElement fe(int n) { return FieldElement(n); }

BinaryCubic bc(int p3, int p2, int p1, int p0) {
    return {fe(p3), fe(p2), fe(p1), fe(p0)};
}

SurfaceSpec spec(BinaryCubic P, int u, int v, int alpha,
                 std::optional<std::pair<int, int>> nf = std::nullopt) {
    SurfaceSpec s;
    s.P = std::move(P);
    s.u = fe(u);
    s.v = fe(v);
    s.alpha = fe(alpha);
    if (nf) s.normal_form = NormalForm{fe(nf->first), fe(nf->second)};
    return s;
}

} // namespace

TEST_CASE("surface validation") {
    CHECK_NOTHROW(validate_surface(spec(bc(1, 0, -2, 0), 3, 0, 1, {{1, 2}})));
    CHECK_THROWS_AS(validate_surface(spec(bc(1, 0, -2, 0), 3, 0, 0)), Error);
    CHECK_THROWS_AS(validate_surface(spec(bc(0, 1, 1, 1), 0, 0, 1)), Error);
    // normal form must reproduce the binary cubic
    CHECK_THROWS_AS(validate_surface(spec(bc(1, 0, -2, 0), 3, 0, 1, {{1, 1}})), Error);
    CHECK_THROWS_AS(validate_surface(spec(bc(0, 0, 0, 0), 0, 0, 1, {{0, 1}})), Error);
}

TEST_CASE("the four auxiliary cubics of a reference surface") {
    SurfaceSpec s = spec(bc(1, 0, -2, 0), 3, 0, 1, {{1, 2}});

    CubicPoly e = eckardt_cubic(s);
    CHECK(e == CubicPoly::make(fe(1), fe(0), fe(0), fe(1)));
    CHECK(cubic_galois_group(e) == GaloisClass::Trivial);

    CHECK(tangent_cubic(s) == bc(2, 0, -2, 0));
    CHECK(fixed_points_cubic(s) == s.P);
    CHECK(family_cubic(s) == CubicPoly::make(fe(4), fe(-9), fe(-6), fe(-1)));
    CHECK(cubic_galois_group(family_cubic(s)) == GaloisClass::S3);

    SurfaceSpec no_nf = spec(bc(1, 0, -2, 0), 3, 0, 1);
    CHECK_THROWS_AS(family_cubic(no_nf), MissingNormalForm);

    // without the off-diagonal terms the tangent plane cuts the fixed cubic itself
    SurfaceSpec plain = spec(bc(1, 1, 1, 1), 0, 0, 2);
    CHECK(tangent_cubic(plain) == plain.P);
}

TEST_CASE("tangent and fixed cubics agree whenever u = v = 0") {
    SplitMix64 rng(0x7A46E47Bu);
    for (int t = 0; t < 20; ++t) {
        BinaryCubic P{FieldElement(Rat(1 + rng.below(5))), FieldElement(Rat(rng.range(4))),
                      FieldElement(Rat(rng.range(4))), FieldElement(Rat(rng.range(4)))};
        SurfaceSpec s;
        s.P = P;
        s.u = fe(0);
        s.v = fe(0);
        s.alpha = FieldElement(Rat(rng.range(3) * 2 + 1));
        CHECK(tangent_cubic(s) == P);
    }
}

TEST_CASE("the triple-point expansion identity holds exactly for coefficient 3 only") {
    SurfaceSpec s = spec(bc(1, 0, -2, 0), 3, 0, 1, {{1, 2}});
    CHECK(verify_eckardt_identity(s));
    CHECK(verify_eckardt_identity(s, 3));
    CHECK_FALSE(verify_eckardt_identity(s, 2));
    CHECK_FALSE(verify_eckardt_identity(s, 4));

    SplitMix64 rng(0xECA4D701u);
    for (int t = 0; t < 10; ++t) {
        SurfaceSpec z;
        z.P = bc(1, 0, 0, 0);
        z.P.p0 = FieldElement(Rat(rng.range(5)));
        z.u = FieldElement(Rat(rng.range(5)));
        z.v = FieldElement(Rat(rng.range(5)));
        z.alpha = FieldElement(Rat(rng.range(4)), Rat(rng.range(4)));
        if (z.alpha.is_zero()) z.alpha = fe(1);
        CHECK(verify_eckardt_identity(z));
        CHECK_FALSE(verify_eckardt_identity(z, 5));
    }
}

TEST_CASE("binary cubics with a root at infinity classify through the quadratic factor") {
    CHECK(binary_galois_class(bc(1, 0, -1, 0)) == GaloisClass::Trivial);
    CHECK(binary_galois_class(bc(0, 1, 0, -1)) == GaloisClass::Trivial);
    CHECK(binary_galois_class(bc(0, 1, 0, 1)) == GaloisClass::C2);
    CHECK(binary_galois_class(bc(2, 0, -1, 0)) == GaloisClass::C2);
    CHECK(binary_galois_class(bc(1, 0, 0, -2)) == GaloisClass::C3);
    CHECK_THROWS_AS(binary_galois_class(bc(0, 1, 2, 1)), InseparableInput);
    CHECK_THROWS_AS(binary_galois_class(bc(0, 0, 1, 1)), InseparableInput);
}

TEST_CASE("profiles report the splitting-field comparison only for two cyclic cubics") {
    SurfaceSpec s1 = spec(bc(1, 0, -2, 0), 3, 0, 1, {{1, 2}});
    GaloisProfile p1 = galois_profile(s1);
    CHECK(p1.g1 == GaloisClass::Trivial);
    CHECK(p1.g2 == GaloisClass::Trivial);
    CHECK(p1.g3 == GaloisClass::C2);
    REQUIRE(p1.g4_has_order3.has_value());
    CHECK(*p1.g4_has_order3);
    CHECK_FALSE(p1.same_splitting_field_g1_g2.has_value());

    // alpha = 2 with P = x^3 - 2 y^3: both cubics generate the same cubic extension
    SurfaceSpec s2 = spec(bc(1, 0, 0, -2), 0, 0, 2);
    GaloisProfile p2 = galois_profile(s2);
    CHECK(p2.g1 == GaloisClass::C3);
    CHECK(p2.g2 == GaloisClass::C3);
    CHECK(p2.g3 == GaloisClass::C3);
    CHECK_FALSE(p2.g4_has_order3.has_value());
    REQUIRE(p2.same_splitting_field_g1_g2.has_value());
    CHECK(*p2.same_splitting_field_g1_g2);

    // alpha = 2 against x^3 - 3 y^3: different cubic extensions
    SurfaceSpec s3 = spec(bc(1, 0, 0, -3), 0, 0, 2);
    GaloisProfile p3 = galois_profile(s3);
    REQUIRE(p3.same_splitting_field_g1_g2.has_value());
    CHECK_FALSE(*p3.same_splitting_field_g1_g2);
}

TEST_CASE("image dictionary over the auxiliary-cubic profiles") {
    auto img = [](GaloisClass g1, GaloisClass g2, GaloisClass g3,
                  std::optional<bool> g4) -> std::string {
        GaloisProfile p{g1, g2, g3, g4, std::nullopt};
        std::string name;
        auto group = infer_galois_image(p, &name);
        if (!group) return "";
        return name;
    };
    using G = GaloisClass;

    CHECK(img(G::Trivial, G::Trivial, G::Trivial, true) == "<r>");
    CHECK(img(G::Trivial, G::Trivial, G::C2, true) == "<r,s>");
    CHECK(img(G::Trivial, G::C2, G::Trivial, true) == "<c,r>");
    CHECK(img(G::Trivial, G::C2, G::C2, true) == "<cs>");
    CHECK(img(G::Trivial, G::C2, G::C2, false) == "<cs>");
    CHECK(img(G::Trivial, G::C2, G::C2, std::nullopt) == "<cs>");

    CHECK(img(G::C3, G::Trivial, G::Trivial, true).empty());
    CHECK(img(G::Trivial, G::Trivial, G::Trivial, false).empty());
    CHECK(img(G::Trivial, G::Trivial, G::C2, false).empty());
    CHECK(img(G::Trivial, G::C3, G::Trivial, true).empty());

    // inferred groups commute with the order-3 action and appear in the class list
    GaloisProfile rs{G::Trivial, G::Trivial, G::C2, true, std::nullopt};
    auto group = infer_galois_image(rs);
    REQUIRE(group.has_value());
    CHECK(group->is_subgroup_of(standard_centralizer()));
    bool listed = false;
    for (const auto& cls : galois_image_classes())
        if (standard_normalizer().conjugates_onto(*group, cls)) listed = true;
    CHECK(listed);
}

TEST_CASE("stored surfaces classify as recorded") {
    const char* files[] = {"both_rational", "rational_nonrational_quotient",
                           "nonrational_rational_quotient", "neither_rational"};
    for (const char* f : files) {
        INFO("surface: " << f);
        Json j = load_json_file(kDataDir + "/surfaces/" + std::string(f) + ".json");
        SurfaceSpec s = surface_from_json(j);
        SurfaceClassification c = classify(s);
        const Json& e = j.at("expected");

        const Json& prof = e.at("profile");
        CHECK(c.profile.g1 == galois_class_from_string(prof.at("g1").get<std::string>()));
        CHECK(c.profile.g2 == galois_class_from_string(prof.at("g2").get<std::string>()));
        CHECK(c.profile.g3 == galois_class_from_string(prof.at("g3").get<std::string>()));
        if (prof.contains("g4_has_order3")) {
            REQUIRE(c.profile.g4_has_order3.has_value());
            CHECK(*c.profile.g4_has_order3 == prof.at("g4_has_order3").get<bool>());
        }

        CHECK(c.image_name == e.at("image").get<std::string>());
        REQUIRE(c.galois_image.has_value());
        CHECK(c.verdict.g_minimal == e.at("g_minimal").get<bool>());
        CHECK(to_string(c.verdict.x_rational) == e.at("x_rational").get<std::string>());
        CHECK(to_string(c.verdict.quotient_rational) ==
              e.at("quotient_rational").get<std::string>());

        if (e.contains("tangent_cubic")) {
            auto t = coeffs4_from_json(e.at("tangent_cubic"), "tangent_cubic");
            CHECK(tangent_cubic(s) == BinaryCubic{t[0], t[1], t[2], t[3]});
        }
        if (e.contains("family_cubic")) {
            auto fc = coeffs4_from_json(e.at("family_cubic"), "family_cubic");
            CHECK(family_cubic(s) == CubicPoly::make(fc[0], fc[1], fc[2], fc[3]));
        }
    }
}

TEST_CASE("surface JSON rejects half a normal form") {
    Json j;
    j["P"] = Json::array({1, 0, -2, 0});
    j["u"] = 3;
    j["v"] = 0;
    j["alpha"] = 1;
    j["w"] = 1;
    CHECK_THROWS_AS(surface_from_json(j), ParseError);
    j["lambda"] = 2;
    CHECK_NOTHROW(surface_from_json(j));
    // round trip
    SurfaceSpec s = surface_from_json(j);
    SurfaceSpec back = surface_from_json(surface_to_json(s));
    CHECK(back.P == s.P);
    CHECK(back.u == s.u);
    CHECK(back.normal_form.has_value());
}
