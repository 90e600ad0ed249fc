#include <doctest.h>

#include "helpers.hpp"

using namespace trop;
using json = nlohmann::ordered_json;

namespace {

const FieldSpec Q = FieldSpec::rationals();

json two_lines_problem() {
    json j;
    j["field"] = "Q";
    j["hypersurfaces"] = json::array();
    for (auto& f : testutil::fixture_two_lines(Q))
        j["hypersurfaces"].push_back(f.to_json());
    return j;
}

}  // namespace

TEST_CASE("problem file parsing") {
    auto j = two_lines_problem();
    auto p = ProblemFile::parse(j);
    CHECK(p.field == Q);
    CHECK(p.hypersurfaces.size() == 2);
    CHECK(!p.verify_oracle);
    j["options"] = {{"verify_oracle", true}, {"svg", "out.svg"}, {"seed", 5}};
    auto p2 = ProblemFile::parse(j);
    CHECK(p2.verify_oracle);
    CHECK(p2.svg_path == "out.svg");
    CHECK(p2.seed == 5);

    CHECK_THROWS_AS(ProblemFile::parse(json{{"field", "Q"}}), InputError);
    auto bad = two_lines_problem();
    bad["field"] = "F2";
    CHECK_THROWS_AS(ProblemFile::parse(bad), InputError);
    auto bad2 = two_lines_problem();
    bad2["hypersurfaces"] = json::array();
    CHECK_THROWS_AS(ProblemFile::parse(bad2), InputError);
    auto bad3 = two_lines_problem();
    bad3["hypersurfaces"][0]["monomials"][0]["exp"] = {1, 2, 3};
    CHECK_THROWS_AS(ProblemFile::parse(bad3), InputError);
}

TEST_CASE("intersect report for the two lines") {
    auto rep = intersect_report(testutil::fixture_two_lines(Q), Q, true);
    CHECK(rep["field"] == "Q");
    REQUIRE(rep["points"].size() == 1);
    auto& pt = rep["points"][0];
    CHECK(pt["point"] == json::array({"1", "3"}));
    CHECK(pt["m"] == "1");
    CHECK(pt["match"] == true);
    CHECK(pt["odd_corners"].size() == 1);
    CHECK(rep["totals"]["mvol"] == "1");
    CHECK(rep["totals"]["combinatorially_oriented"] == false);
    CHECK(rep["totals"]["N"] == 1);  // (1,1) on the boundary of Delta_2
    CHECK(rep["totals"]["r"].get<long>() <= 1);
    // the reported total parses back to the same class
    GWElement total = GWElement::from_json(rep["totals"]["total_gw"]);
    CHECK(total.rank() == 1);
}

TEST_CASE("reports are deterministic") {
    auto surfs = std::vector<EnrichedHypersurface>{
        testutil::fixture_cubic(Q, {}), testutil::fixture_conic(Q, {})};
    auto a = intersect_report(surfs, Q, true).dump();
    auto b = intersect_report(surfs, Q, true).dump();
    CHECK(a == b);
    CHECK(verify_report(2, 6, 5, Q, 42).dump() ==
          verify_report(2, 6, 5, Q, 42).dump());
}

TEST_CASE("intersect report round trips the gw values") {
    auto rep = intersect_report(
        {testutil::fixture_cubic(Q, {}), testutil::fixture_conic(Q, {})}, Q,
        true);
    REQUIRE(rep["points"].size() == 3);
    GWElement total = GWElement::zero(Q);
    for (auto& pt : rep["points"]) {
        CHECK(pt["match"] == true);
        GWElement gw = GWElement::from_json(pt["gw"]);
        GWElement og = GWElement::from_json(pt["oracle_gw"]);
        CHECK(gw_equal(gw, og));
        total = gw_add(total, gw);
    }
    CHECK(gw_equal(total, GWElement::h(Q, 3)));
    CHECK(gw_equal(GWElement::from_json(rep["totals"]["total_gw"]), total));
    CHECK(rep["totals"]["mvol"] == "6");
    CHECK(rep["totals"]["combinatorially_oriented"] == true);
}

TEST_CASE("bezout report") {
    auto rep = bezout_report({1, 2}, Q, 3, 11);
    CHECK(rep["orientable"] == true);
    CHECK(rep["all_match"] == true);
    CHECK(rep["runs"].size() == 3);
    for (auto& run : rep["runs"]) CHECK(run["match"] == true);
    CHECK(gw_equal(GWElement::from_json(rep["expected_gw"]), GWElement::h(Q)));
    auto rep2 = bezout_report({2, 2}, Q, 2, 11);
    CHECK(rep2["orientable"] == false);
    for (auto& run : rep2["runs"]) CHECK(run["ok"] == true);
}

TEST_CASE("verify report") {
    auto rep = verify_report(2, 8, 20, FieldSpec::prime_field(5), 3);
    CHECK(rep["verified"] == 20);
    CHECK(rep["all_ok"] == true);
    // parallel and serial sweeps agree
    CHECK(verify_report(2, 8, 10, Q, 4, true).dump() ==
          verify_report(2, 8, 10, Q, 4, false).dump());
}

TEST_CASE("svg rendering") {
    auto svg = render_svg(
        {testutil::fixture_cubic(Q, {}), testutil::fixture_conic(Q, {})}, Q);
    CHECK(svg.find("<svg") != std::string::npos);
    CHECK(svg.rfind("</svg>") != std::string::npos);
    CHECK(svg.find("m=1") != std::string::npos);
    CHECK(svg.find("m=3") != std::string::npos);
    CHECK(svg.find("<line") != std::string::npos);
    CHECK_THROWS_AS(
        render_svg({EnrichedHypersurface{}}, Q), std::exception);
}
