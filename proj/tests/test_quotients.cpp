#include <catch2/catch_amalgamated.hpp>

#include "cubicq/json_io.hpp"
#include "cubicq/quotients.hpp"

using namespace cubicq;

namespace {
const std::string kDataDir = CUBICQ_DATA_DIR;
}

TEST_CASE("resolution data for the four supported singularity types") {
    auto half = table1_delta({2, 1});
    CHECK(half.dK2 == 0);
    CHECK(half.dC2 == Rat(-1, 2));
    CHECK(half.dD2 == Rat(-1, 2));
    CHECK(half.chain == std::vector<int>{-2});

    auto third = table1_delta({3, 1});
    CHECK(third.dK2 == Rat(-1, 3));
    CHECK(third.dC2 == Rat(-1, 3));
    CHECK(third.dD2 == Rat(-1, 3));
    CHECK(third.chain == std::vector<int>{-3});

    auto third2 = table1_delta({3, 2});
    CHECK(third2.dK2 == 0);
    CHECK(third2.dC2 == Rat(-2, 3));
    CHECK(third2.dD2 == Rat(-2, 3));
    CHECK(third2.chain == std::vector<int>{-2, -2});

    auto fifth = table1_delta({5, 2});
    CHECK(fifth.dK2 == Rat(-2, 5));
    CHECK(fifth.dC2 == Rat(-2, 5));
    CHECK(fifth.dD2 == Rat(-3, 5));
    CHECK(fifth.chain == std::vector<int>{-3, -2});

    CHECK_THROWS_AS(table1_delta({7, 3}), UnsupportedSingularity);
    CHECK_THROWS_AS(table1_delta({5, 1}), UnsupportedSingularity);
    CHECK_THROWS_AS(table1_delta({4, 1}), UnsupportedSingularity);
}

TEST_CASE("resolution chains are negative definite") {
    for (const auto& t : {SingularityType{2, 1}, SingularityType{3, 1},
                          SingularityType{3, 2}, SingularityType{5, 2}})
        CHECK(chain_is_negative_definite(table1_delta(t).chain));

    CHECK(chain_is_negative_definite({-1}));
    CHECK(chain_is_negative_definite({-2, -2, -2}));
    CHECK(chain_is_negative_definite({}));
    CHECK_FALSE(chain_is_negative_definite({0}));
    CHECK_FALSE(chain_is_negative_definite({2}));
    CHECK_FALSE(chain_is_negative_definite({-2, 0}));
    CHECK_FALSE(chain_is_negative_definite({-1, -1})); // determinant vanishes
}

TEST_CASE("degree of a quotient from the pullback relation") {
    CHECK(hurwitz_k2(3, 1, Rat(3)) == 1);
    CHECK(hurwitz_k2(9, 5, Rat(3)) == Rat(25, 3));
    CHECK(hurwitz_k2(2, 2, Rat(3)) == 6);
    CHECK(hurwitz_k2(60, 6, Rat(3)) == Rat(9, 5));
    CHECK(hurwitz_k2(1, 1, Rat(8)) == 8);
    CHECK_THROWS_AS(hurwitz_k2(0, 1, Rat(3)), Error);
    CHECK_THROWS_AS(hurwitz_k2(-2, 1, Rat(3)), Error);
}

TEST_CASE("contracting disjoint (-1)-curves raises the degree by one each") {
    CHECK(post_contraction_degree(Rat(1), 2) == 3);
    CHECK(post_contraction_degree(Rat(-1), 9) == 8);
    CHECK(post_contraction_degree(Rat(25, 3), 0) == Rat(25, 3));
}

TEST_CASE("scenario evaluation composes the pieces") {
    QuotientScenario s;
    s.name = "inline";
    s.group_order = 3;
    s.pullback_factor = 1;
    s.base_k2 = Rat(3);
    s.singularities = {{{3, 1}, 2}};
    s.curves.push_back({"F", Rat(-1, 3), {{{3, 1}, CurveRole::C}, {{3, 1}, CurveRole::D}}});

    auto r = evaluate_scenario(s);
    CHECK(r.quotient_k2 == 1);
    CHECK(r.resolved_k2 == Rat(1, 3));
    REQUIRE(r.curve_self_intersections.size() == 1);
    CHECK(r.curve_self_intersections[0] == -1);

    s.group_order = 1;
    CHECK_THROWS_AS(evaluate_scenario(s), Error);
    s.group_order = 3;
    s.pullback_factor = 0;
    CHECK_THROWS_AS(evaluate_scenario(s), Error);
    s.pullback_factor = 1;
    s.singularities.push_back({{7, 3}, 1});
    CHECK_THROWS_AS(evaluate_scenario(s), UnsupportedSingularity);
}

TEST_CASE("stored scenarios reproduce their recorded numbers") {
    const char* files[] = {"order3_three_a2",    "klein_four",
                           "icosahedral",        "involution_one_a1",
                           "order3_fixed_curve", "order3_six_fixed_points",
                           "bicyclic_order9"};
    for (const char* f : files) {
        INFO("scenario: " << f);
        Json j = load_json_file(kDataDir + "/scenarios/" + std::string(f) + ".json");
        auto sc = scenario_from_json(j);
        auto res = evaluate_scenario(sc);

        const Json& e = j.at("expected");
        CHECK(res.quotient_k2 == rat_from_json(e.at("quotient_k2")));
        CHECK(res.resolved_k2 == rat_from_json(e.at("resolved_k2")));
        const Json& curves = e.at("curve_self_intersections");
        REQUIRE(res.curve_self_intersections.size() == curves.size());
        for (std::size_t i = 0; i < curves.size(); ++i)
            CHECK(res.curve_self_intersections[i] == rat_from_json(curves[i]));
        CHECK(post_contraction_degree(res.resolved_k2, e.at("contract_count").get<int>()) ==
              rat_from_json(e.at("post_contraction_degree")));

        // every chain the resolution introduces is negative definite
        for (const auto& [type, count] : sc.singularities)
            CHECK(chain_is_negative_definite(table1_delta(type).chain));
    }
}

TEST_CASE("scenario results serialize to JSON") {
    QuotientScenario s;
    s.group_order = 2;
    s.pullback_factor = 1;
    s.base_k2 = Rat(8);
    auto r = evaluate_scenario(s);
    Json j = scenario_result_to_json(r);
    CHECK(rat_from_json(j.at("quotient_k2")) == 4);
    CHECK(rat_from_json(j.at("resolved_k2")) == 4);
    CHECK(j.at("curve_self_intersections").size() == 0);
}
