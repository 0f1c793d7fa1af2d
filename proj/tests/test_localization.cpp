#include "doctest.h"
#include "oracles.hpp"

#include "halg/localization.hpp"

using namespace halg;
using namespace halg::loc;

namespace {

Localization qx_at_x() {
    RingPtr R = Ring::poly_over(Ring::QQ(), {"x"});
    return Localization(R, {R->parse("x")});
}

Localization z_at_2() {
    RingPtr Z = Ring::ZZ();
    return Localization(Z, {Z->from_int(2)});
}

}  // namespace

TEST_CASE("zero generators are rejected") {
    RingPtr Z = Ring::ZZ();
    CHECK_THROWS_AS(Localization(Z, {Z->from_int(0)}), Error);
}

TEST_CASE("fraction equality: frozen examples") {
    Localization L = qx_at_x();
    const RingPtr& R = L.ring();
    SUBCASE("reflexive") {
        Fraction f = L.make(R->parse("x + 1"), {2});
        CHECK(L.equal(f, f));
    }
    SUBCASE("(x^2+x)/x = (x+1)/1 by cross multiplication") {
        Fraction a = L.make(R->parse("x^2 + x"), {1});
        Fraction b = L.from_ring(R->parse("x + 1"));
        CHECK(L.equal(a, b));
        // canonical reduction cancelled the generator
        CHECK(a.exp[0] == 0);
    }
    SUBCASE("1/x and 1/x^2 differ") {
        CHECK(!L.equal(L.make(R->one(), {1}), L.make(R->one(), {2})));
    }
}

TEST_CASE("fraction arithmetic: frozen examples") {
    Localization L = qx_at_x();
    const RingPtr& R = L.ring();
    SUBCASE("adding zero changes nothing") {
        Fraction f = L.make(R->parse("x + 3"), {2});
        CHECK(L.equal(L.add(f, L.from_ring(R->zero())), f));
    }
    SUBCASE("1/x * x/1 = 1") {
        Fraction inv = L.inv_generator(0);
        Fraction x = L.from_ring(R->parse("x"));
        CHECK(L.is_one(L.mul(inv, x)));
    }
    SUBCASE("1/x + 1/x = 2/x") {
        Fraction inv = L.inv_generator(0);
        Fraction sum = L.add(inv, inv);
        CHECK(L.equal(sum, L.make(R->parse("2"), {1})));
    }
}

TEST_CASE("fraction arithmetic satisfies the ring axioms up to equality") {
    auto g = testutil::rng(131);
    for (auto make_loc : {&qx_at_x, &z_at_2}) {
        Localization L = make_loc();
        const RingPtr& R = L.ring();
        auto random_frac = [&]() {
            Elem n = testutil::random_elem(g, R, 5, 3, 2);
            std::vector<unsigned> e = {static_cast<unsigned>(testutil::rand_int(g, 0, 3))};
            return L.make(n, e);
        };
        for (int t = 0; t < 60; ++t) {
            Fraction a = random_frac(), b = random_frac(), c = random_frac();
            CHECK(L.equal(L.add(a, b), L.add(b, a)));
            CHECK(L.equal(L.mul(a, b), L.mul(b, a)));
            CHECK(L.equal(L.add(L.add(a, b), c), L.add(a, L.add(b, c))));
            CHECK(L.equal(L.mul(L.mul(a, b), c), L.mul(a, L.mul(b, c))));
            CHECK(L.equal(L.mul(L.add(a, b), c), L.add(L.mul(a, c), L.mul(b, c))));
            CHECK(L.is_zero(L.add(a, L.neg(a))));
            // congruence: replacing an operand by an equal fraction is invisible
            Fraction a2{R->mul(a.num, L.denominator_of({1})), {a.exp[0] + 1}};
            REQUIRE(L.equal(a, a2));
            CHECK(L.equal(L.add(a2, b), L.add(a, b)));
            CHECK(L.equal(L.mul(a2, b), L.mul(a, b)));
        }
    }
}

TEST_CASE("fraction equality is an equivalence relation on random triples") {
    auto g = testutil::rng(137);
    Localization L = z_at_2();
    const RingPtr& R = L.ring();
    for (int t = 0; t < 200; ++t) {
        Fraction a{R->from_int(testutil::rand_int(g, -6, 6)),
                   {static_cast<unsigned>(testutil::rand_int(g, 0, 3))}};
        // build b, c equal to a by scaling with powers of the generator
        Fraction b{R->mul(a.num, R->from_int(2)), {a.exp[0] + 1}};
        Fraction c{R->mul(a.num, R->from_int(4)), {a.exp[0] + 2}};
        CHECK(L.equal(a, a));
        CHECK(L.equal(a, b));
        CHECK(L.equal(b, a));
        CHECK((L.equal(a, b) && L.equal(b, c)) ? L.equal(a, c) : true);
    }
}

TEST_CASE("localization map is a ring homomorphism with trivial kernel") {
    Localization L = qx_at_x();
    const RingPtr& R = L.ring();
    CHECK(L.is_zero(L.from_ring(R->zero())));
    CHECK(L.is_one(L.from_ring(R->one())));
    auto g = testutil::rng(139);
    for (int t = 0; t < 50; ++t) {
        Elem a = testutil::random_elem(g, R, 4, 3, 2);
        Elem b = testutil::random_elem(g, R, 4, 3, 2);
        CHECK(L.equal(L.from_ring(R->mul(a, b)), L.mul(L.from_ring(a), L.from_ring(b))));
        CHECK(L.equal(L.from_ring(R->add(a, b)), L.add(L.from_ring(a), L.from_ring(b))));
        if (!R->is_zero(a)) CHECK(!L.is_zero(L.from_ring(a)));
    }
}

TEST_CASE("strickland verification") {
    SUBCASE("empty samples pass trivially") {
        Localization L = z_at_2();
        auto rep = strickland_verify(L, {}, {});
        CHECK(rep.ok());
    }
    SUBCASE("QQ[x] at {x} passes on the spec samples") {
        Localization L = qx_at_x();
        const RingPtr& R = L.ring();
        std::vector<Fraction> fracs = {L.make(R->one(), {1}), L.make(R->parse("x + 1"), {2})};
        std::vector<Elem> elems = {R->parse("x"), R->parse("x^2"), R->zero()};
        auto rep = strickland_verify(L, elems, fracs);
        CHECK(rep.ok());
    }
    SUBCASE("corrupted map claiming q(x) = 0 is flagged") {
        Localization L = qx_at_x();
        const RingPtr& R = L.ring();
        std::function<Fraction(const Elem&)> zero_map = [&](const Elem&) {
            return L.from_ring(R->zero());
        };
        auto rep = strickland_verify(L, {R->parse("x")}, {L.make(R->one(), {1})}, &zero_map);
        CHECK(!rep.ok());
        CHECK(!rep.units_ok);   // q(x) = 0 is not a unit
        CHECK(!rep.kernel_ok);  // nonzero x lands in the kernel
        CHECK(!rep.violations.empty());
    }
    SUBCASE("squaring map fails the fraction decomposition clause") {
        Localization L = z_at_2();
        const RingPtr& Z = L.ring();
        std::function<Fraction(const Elem&)> square = [&](const Elem& r) {
            return L.from_ring(Z->mul(r, r));
        };
        auto rep = strickland_verify(L, {Z->from_int(3)}, {L.make(Z->from_int(3), {1})}, &square);
        CHECK(!rep.fractions_ok);
    }
}

TEST_CASE("universal factorization through a map inverting S") {
    SUBCASE("factor through the localization itself gives back the samples") {
        Localization L = z_at_2();
        const RingPtr& Z = L.ring();
        // f = inclusion Z -> QQ; inverse witness for 2 is 1/2
        RingPtr Q = Ring::QQ();
        auto f = [&](const Elem& r) { return Q->parse(Z->show(r)); };
        std::vector<Fraction> samples = {L.make(Z->from_int(3), {2}),
                                         L.from_ring(Z->from_int(5))};
        auto res = universal_factor(L, Q, f, {Q->parse("1/2")}, samples);
        CHECK(Q->eq(res.images[0], Q->parse("3/4")));
        CHECK(Q->eq(res.images[1], Q->parse("5")));
    }
    SUBCASE("evaluation x -> 2 on QQ[x] localized at {x}") {
        Localization L = qx_at_x();
        const RingPtr& R = L.ring();
        RingPtr Q = Ring::QQ();
        auto f = [&](const Elem& r) {
            // evaluate the univariate polynomial at 2
            Elem acc = Q->zero();
            for (const auto& t : r.poly().t) {
                Elem term = Q->from_scalar(t.c);
                for (std::uint32_t k = 0; k < t.m.e[0]; ++k) term = Q->mul(term, Q->from_int(2));
                acc = Q->add(acc, term);
            }
            return acc;
        };
        std::vector<Fraction> samples = {L.make(R->parse("x + 1"), {1})};
        auto res = universal_factor(L, Q, f, {Q->parse("1/2")}, samples);
        CHECK(Q->eq(res.images[0], Q->parse("3/2")));
    }
    SUBCASE("bad witnesses are rejected") {
        Localization L = z_at_2();
        RingPtr Q = Ring::QQ();
        auto f = [&](const Elem& r) { return Q->parse(L.ring()->show(r)); };
        CHECK_THROWS_AS(universal_factor(L, Q, f, {Q->parse("1/3")}, {}), Error);
    }
}

TEST_CASE("fraction literals parse and render") {
    Localization L = qx_at_x();
    Fraction f = L.parse("(x+1)/x^2");
    CHECK(L.show(f) == "(x + 1)/x^2");
    CHECK(L.equal(L.parse("(x^2+x)/x"), L.parse("x + 1")));
    CHECK_THROWS_AS(L.parse("1/(x+1)"), Error);  // x+1 is not in S
    Localization Z2 = z_at_2();
    CHECK(L.ring()->is_poly());
    CHECK(Z2.equal(Z2.parse("3/4"), Z2.make(Z2.ring()->from_int(3), {2})));
}
