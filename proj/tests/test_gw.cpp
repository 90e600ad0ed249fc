#include <doctest.h>

#include <random>

#include "trop/gw.hpp"

using namespace trop;

namespace {

GWElement gen(FieldSpec f, long v) {
    return GWElement::gen(square_class_reduce(Rat(v), f));
}

GWElement diag_of(FieldSpec f, std::initializer_list<long> vs) {
    GWElement x = GWElement::zero(f);
    for (long v : vs) x.diag.push_back(square_class_reduce(Rat(v), f));
    x.normalize();
    return x;
}

const FieldSpec Q = FieldSpec::rationals();
const FieldSpec R = FieldSpec::reals();

}  // namespace

TEST_CASE("addition and normal form") {
    GWElement s = gw_add(gen(Q, 1), gen(Q, -1));
    CHECK(s.diag.empty());
    CHECK(s.hyperbolics == 1);
    CHECK(gw_equal(s, GWElement::h(Q)));
    CHECK(gw_add(GWElement::h(Q), GWElement::h(Q)).rank() == 4);
    GWElement t = gw_add(gen(Q, 2), gen(Q, -8));  // -8 = -2 mod squares
    CHECK(gw_equal(t, GWElement::h(Q)));
    CHECK(t.hyperbolics == 1);
}

TEST_CASE("multiplication") {
    CHECK(gw_equal(gw_mul(gen(Q, 2), gen(Q, 3)), gen(Q, 6)));
    GWElement h = GWElement::h(Q);
    for (long a : {2, -3, 5})
        CHECK(gw_equal(gw_mul(h, gen(Q, a)), h));
    GWElement x = diag_of(Q, {2, 3, -5});
    CHECK(gw_equal(gw_mul(gen(Q, 1), x), x));
    CHECK(gw_mul(h, h).rank() == 4);
    CHECK(gw_equal(gw_mul(h, h), GWElement::h(Q, 2)));
}

TEST_CASE("rank") {
    CHECK(GWElement::h(Q).rank() == 2);
    CHECK(diag_of(Q, {2, 3, 7}).rank() == 3);
    CHECK(GWElement::h(Q, 3).rank() == 6);  // (d1 d2 / 2) h with d1=2, d2=3
}

TEST_CASE("invariants") {
    auto ih = gw_invariants(GWElement::h(Q));
    CHECK(ih.rank == 2);
    CHECK(ih.disc.rep == -1);  // det [[0,1],[1,0]]
    CHECK(*ih.signature == 0);
    for (auto& [p, v] : ih.hasse) CHECK(v == 1);
    auto i2 = gw_invariants(diag_of(R, {1, 1}));
    CHECK(i2.rank == 2);
    CHECK(i2.disc.rep == 1);
    CHECK(*i2.signature == 2);
    // relation 2 with a=1, b=2: <1>+<2> = <3>+<6>
    auto a = gw_invariants(diag_of(Q, {1, 2}));
    auto b = gw_invariants(diag_of(Q, {3, 6}));
    CHECK(a.rank == b.rank);
    CHECK(a.disc == b.disc);
    CHECK(a.signature == b.signature);
    for (auto places : {a.hasse, b.hasse})
        for (auto& [p, v] : places) {
            int va = a.hasse.count(p) ? a.hasse.at(p) : 1;
            int vb = b.hasse.count(p) ? b.hasse.at(p) : 1;
            CHECK(va == vb);
        }
}

TEST_CASE("equality") {
    CHECK(gw_equal(diag_of(Q, {1, -1}), GWElement::h(Q)));
    CHECK(!gw_equal(gen(Q, 1), gen(Q, 2)));
    CHECK(gw_equal(gen(R, 1), gen(R, 2)));
    CHECK(!gw_equal(gen(R, 1), gen(R, -2)));
    FieldSpec f5 = FieldSpec::prime_field(5);
    CHECK(!gw_equal(gen(f5, 1), gen(f5, 2)));
    CHECK(gw_equal(gen(f5, 1), gen(f5, 4)));
    CHECK_THROWS_AS(gw_equal(gen(Q, 1), gen(R, 1)), FieldError);
}

TEST_CASE("witt equality") {
    CHECK(witt_equal(GWElement::zero(Q), GWElement::h(Q, 3)));
    GWElement a = gen(Q, 7);
    CHECK(witt_equal(a, gw_add(a, GWElement::h(Q))));
    FieldSpec f5 = FieldSpec::prime_field(5);
    CHECK(!witt_equal(gen(f5, 1), gen(f5, 2)));
    CHECK(!witt_equal(gen(Q, 1), GWElement::h(Q)));
}

TEST_CASE("relation 2 invariance per field") {
    std::mt19937_64 rng(7);
    for (std::string fs : {"Q", "R", "F3", "F5", "F7"}) {
        FieldSpec f = FieldSpec::parse(fs);
        int done = 0;
        while (done < 300) {
            long av = static_cast<long>(rng() % 200) - 100;
            long bv = static_cast<long>(rng() % 200) - 100;
            if (av == 0 || bv == 0 || av + bv == 0) continue;
            if (f.kind == FieldKind::PrimeField &&
                (av % f.characteristic == 0 || bv % f.characteristic == 0 ||
                 (av + bv) % f.characteristic == 0))
                continue;
            GWElement lhs = gw_add(gen(f, av), gen(f, bv));
            GWElement rhs = gw_add(gen(f, av + bv),
                                   gen(f, av * bv * (av + bv)));
            CHECK(gw_equal(lhs, rhs));
            ++done;
        }
    }
}

TEST_CASE("equality is congruent with the operations") {
    std::mt19937_64 rng(13);
    auto rnd_elem = [&]() {
        GWElement x = GWElement::zero(Q);
        int k = static_cast<int>(rng() % 3);
        for (int i = 0; i < k; ++i) {
            long v = static_cast<long>(rng() % 40) - 20;
            if (v == 0) v = 3;
            x.diag.push_back(square_class_reduce(Rat(v), Q));
        }
        x.hyperbolics = static_cast<long>(rng() % 3);
        x.normalize();
        return x;
    };
    for (int t = 0; t < 100; ++t) {
        GWElement x = rnd_elem(), y = rnd_elem(), z = rnd_elem();
        CHECK(gw_equal(x, x));
        if (gw_equal(x, y)) CHECK(gw_equal(y, x));
        if (gw_equal(x, y) && gw_equal(y, z)) CHECK(gw_equal(x, z));
        // congruence: replace x by an equal presentation
        GWElement x2 = gw_add(gw_add(x, gen(Q, 5)), gen(Q, -5));
        x2.hyperbolics -= 1;  // strip the h added by <5> + <-5>
        CHECK(gw_equal(x, x2));
        CHECK(gw_equal(gw_add(x, z), gw_add(x2, z)));
        CHECK(gw_equal(gw_mul(x, z), gw_mul(x2, z)));
        // rank laws
        CHECK(gw_add(x, y).rank() == x.rank() + y.rank());
        CHECK(gw_mul(x, y).rank() == x.rank() * y.rank());
    }
}

TEST_CASE("over R equality is rank plus signature") {
    std::mt19937_64 rng(17);
    for (int t = 0; t < 50; ++t) {
        GWElement x = GWElement::zero(R), y = GWElement::zero(R);
        for (GWElement* e : {&x, &y}) {
            int k = static_cast<int>(rng() % 4);
            for (int i = 0; i < k; ++i)
                e->diag.push_back(
                    square_class_reduce(Rat(rng() % 2 ? 3 : -7), R));
            e->hyperbolics = static_cast<long>(rng() % 3);
            e->normalize();
        }
        auto ix = gw_invariants(x), iy = gw_invariants(y);
        bool same = ix.rank == iy.rank && ix.signature == iy.signature;
        CHECK(gw_equal(x, y) == same);
    }
    CHECK(*gw_invariants(GWElement::h(R)).signature == 0);
}

TEST_CASE("in map takes the leading coefficient") {
    PuiseuxLeadingTerm t1{FieldElem(Q, Rat(3)), Rat(2)};
    CHECK(in_map(t1).rep == 3);
    PuiseuxLeadingTerm t2{FieldElem(Q, Rat(4)), Rat(0)};
    CHECK(in_map(t2).is_one());
    PuiseuxLeadingTerm t3{FieldElem(Q, Rat(-1)), Rat(1, 2)};
    CHECK(in_map(t3).rep == -1);
    CHECK_THROWS_AS(in_map(PuiseuxLeadingTerm{FieldElem(Q, Rat(0)), Rat(1)}),
                    FieldError);
}

TEST_CASE("serialization round trips") {
    GWElement x = diag_of(Q, {2, -3, 30});
    x.hyperbolics = 2;
    auto j = x.to_json();
    CHECK(j["field"] == "Q");
    GWElement y = GWElement::from_json(j);
    CHECK(gw_equal(x, y));
    CHECK(x.str() == "<-3,2,30> + 2*h");
    CHECK(GWElement::zero(Q).str() == "0");
    CHECK(GWElement::h(Q, 3).str() == "3*h");
}
