#include <doctest.h>

#include <algorithm>
#include <set>

#include "helpers.hpp"
#include "trop/generator.hpp"

using namespace trop;
using testutil::make_surface;

namespace {

const FieldSpec Q = FieldSpec::rationals();

Rat term_value(const EnrichedHypersurface& f, const Vec& exp,
               const std::vector<Rat>& x) {
    Rat v = f.trop_coeff(exp);
    for (size_t i = 0; i < x.size(); ++i) v += Rat(exp[i]) * x[i];
    return v;
}

std::multiset<Int> mults(const std::vector<IntersectionDatum>& pts) {
    std::multiset<Int> out;
    for (auto& d : pts) out.insert(d.m);
    return out;
}

}  // namespace

TEST_CASE("two tropical lines meet in one point") {
    auto lines = testutil::fixture_two_lines(Q);
    auto pts = find_transverse_intersections(lines, Q);
    REQUIRE(pts.size() == 1);
    const auto& d = pts[0];
    CHECK(d.point == std::vector<Rat>{1, 3});
    CHECK(d.m == 1);
    CHECK(classical_multiplicity(d) == 1);
    // surface 1 ties its constant and y terms, surface 2 constant and x
    std::set<Vec> p0{d.pairs[0].first, d.pairs[0].second};
    std::set<Vec> p1{d.pairs[1].first, d.pairs[1].second};
    CHECK(p0 == std::set<Vec>{{0, 0}, {0, 1}});
    CHECK(p1 == std::set<Vec>{{0, 0}, {1, 0}});
}

TEST_CASE("cubic and conic fixtures give multiplicities 1 2 3") {
    auto pts = find_transverse_intersections(
        {testutil::fixture_cubic(Q, {}), testutil::fixture_conic(Q, {})}, Q);
    REQUIRE(pts.size() == 3);
    CHECK(mults(pts) == std::multiset<Int>{1, 2, 3});
    Int total = 0;
    for (auto& d : pts) total += d.m;
    CHECK(total == mixed_volume({standard_simplex(2, 3), standard_simplex(2, 2)}));
}

TEST_CASE("intersection points lie on both curves as ties of the max") {
    auto surfs = std::vector<EnrichedHypersurface>{
        testutil::fixture_cubic(Q, {}), testutil::fixture_conic(Q, {})};
    for (auto& d : find_transverse_intersections(surfs, Q)) {
        for (size_t i = 0; i < surfs.size(); ++i) {
            Rat vi = term_value(surfs[i], d.pairs[i].first, d.point);
            Rat vj = term_value(surfs[i], d.pairs[i].second, d.point);
            CHECK(vi == vj);
            for (auto& mo : surfs[i].monomials)
                CHECK(term_value(surfs[i], mo.exp, d.point) <= vi);
        }
    }
}

TEST_CASE("identical curves are rejected") {
    auto l = testutil::fixture_two_lines(Q)[0];
    CHECK_THROWS_AS(find_transverse_intersections({l, l}, Q), NonTransverse);
    // distinct inputs, same tropicalization: still overlapping loci
    auto l2 = l;
    for (auto& mo : l2.monomials) mo.coeff = square_class_parse("2", Q);
    CHECK_THROWS_AS(find_transverse_intersections({l, l2}, Q), NonTransverse);
}

TEST_CASE("multiplicity divisible by the characteristic is rejected") {
    auto f1 = make_surface(Q, {{{0, 0}, 0, 1, "1"}, {{3, 0}, 0, 1, "1"}});
    auto f2 = make_surface(Q, {{{0, 0}, 0, 1, "1"}, {{0, 1}, 0, 1, "1"}});
    auto pts = find_transverse_intersections({f1, f2}, Q);
    REQUIRE(pts.size() == 1);
    CHECK(pts[0].m == 3);
    FieldSpec f3 = FieldSpec::prime_field(3);
    auto g1 = make_surface(f3, {{{0, 0}, 0, 1, "1"}, {{3, 0}, 0, 1, "1"}});
    auto g2 = make_surface(f3, {{{0, 0}, 0, 1, "1"}, {{0, 1}, 0, 1, "1"}});
    CHECK_THROWS_AS(find_transverse_intersections({g1, g2}, f3), NonTransverse);
}

TEST_CASE("local data of a point") {
    auto pts = find_transverse_intersections(
        {make_surface(Q, {{{0, 0}, 0, 1, "2"}, {{0, 1}, 1, 1, "3"}}),
         make_surface(Q, {{{0, 0}, 0, 1, "5"}, {{1, 0}, 2, 1, "7"}})},
        Q);
    REQUIRE(pts.size() == 1);
    const auto& d = pts[0];
    CHECK(d.point == std::vector<Rat>{2, 1});  // ties 0 = x - 2 and 0 = y - 1
    auto sys = local_binomial_system(d);
    CHECK(sys.n == 2);
    CHECK(sys.deltas == d.deltas);
    CHECK(sys.anchor == vec_add(d.pairs[0].first, d.pairs[1].first));
    for (size_t i = 0; i < 2; ++i) {
        CHECK(sys.alphas[i] == d.coeffs[i].first);
        CHECK(sys.betas[i] == d.coeffs[i].second);
    }
    // the four union coefficients are exactly the pairwise products
    std::multiset<Int> got, want;
    for (int a : {0, 1})
        for (int b : {0, 1})
            got.insert(union_coefficient(d, {a, b}).rep);
    for (auto x : {d.coeffs[0].first, d.coeffs[0].second})
        for (auto y : {d.coeffs[1].first, d.coeffs[1].second})
            want.insert((x * y).rep);
    CHECK(got == want);
    // cell is the zonotope of the two tied segments: area = m
    CHECK(volume(d.cell) == Rat(d.m));
}

TEST_CASE("cell volume equals multiplicity on random configs") {
    Generator g(Q, 101);
    int done = 0;
    while (done < 20) {
        std::vector<EnrichedHypersurface> surfs;
        try {
            surfs = g.random_config({2, 2});
        } catch (const NonTransverse&) {
            continue;
        }
        for (auto& d : find_transverse_intersections(surfs, Q))
            CHECK(volume(d.cell) == Rat(d.m));
        ++done;
    }
}

TEST_CASE("total multiplicity is the mixed volume") {
    for (auto seed : {7u, 8u}) {
        Generator g(Q, seed);
        int done = 0;
        while (done < 25) {
            std::vector<long> degs{1 + g.random_int(0, 2), 1 + g.random_int(0, 2)};
            std::vector<EnrichedHypersurface> surfs;
            try {
                surfs = g.random_config(degs);
            } catch (const NonTransverse&) {
                continue;
            }
            auto pts = find_transverse_intersections(surfs, Q);
            Int total = 0;
            for (auto& d : pts) total += d.m;
            CHECK(total == degs[0] * degs[1]);
            ++done;
        }
    }
    Generator g3(Q, 9);
    int done = 0;
    while (done < 5) {
        std::vector<EnrichedHypersurface> surfs;
        try {
            surfs = g3.random_config({1, 1, 2});
        } catch (const NonTransverse&) {
            continue;
        }
        auto pts = find_transverse_intersections(surfs, Q);
        Int total = 0;
        for (auto& d : pts) total += d.m;
        CHECK(total == 2);
        ++done;
    }
}

TEST_CASE("parallel and serial searches agree") {
    Generator g(Q, 55);
    int done = 0;
    while (done < 10) {
        std::vector<EnrichedHypersurface> surfs;
        try {
            surfs = g.random_config({3, 3});
        } catch (const NonTransverse&) {
            continue;
        }
        auto a = find_transverse_intersections(surfs, Q);
        auto b = find_transverse_intersections_serial(surfs, Q);
        REQUIRE(a.size() == b.size());
        for (size_t i = 0; i < a.size(); ++i) {
            CHECK(a[i].point == b[i].point);
            CHECK(a[i].m == b[i].m);
            CHECK(a[i].pairs == b[i].pairs);
        }
        ++done;
    }
}

TEST_CASE("surface order only permutes the local data") {
    auto c1 = testutil::fixture_cubic(Q, {});
    auto c2 = testutil::fixture_conic(Q, {});
    auto a = find_transverse_intersections({c1, c2}, Q);
    auto b = find_transverse_intersections({c2, c1}, Q);
    REQUIRE(a.size() == b.size());
    for (size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].point == b[i].point);
        CHECK(a[i].m == b[i].m);
        CHECK(a[i].pairs[0] == b[i].pairs[1]);
        CHECK(a[i].pairs[1] == b[i].pairs[0]);
    }
}

TEST_CASE("affine lift changes translate the intersection points") {
    auto c1 = testutil::fixture_cubic(Q, {});
    auto c2 = testutil::fixture_conic(Q, {});
    auto base = find_transverse_intersections({c1, c2}, Q);
    Rat u(5, 3), v(-7, 2);
    for (auto* f : {&c1, &c2})
        for (auto& mo : f->monomials)
            mo.lift += u * Rat(mo.exp[0]) + v * Rat(mo.exp[1]);
    auto moved = find_transverse_intersections({c1, c2}, Q);
    REQUIRE(moved.size() == base.size());
    std::set<std::vector<Rat>> want, got;
    for (auto& d : base) want.insert({d.point[0] + u, d.point[1] + v});
    for (auto& d : moved) got.insert(d.point);
    CHECK(want == got);
    CHECK(mults(base) == mults(moved));
}
