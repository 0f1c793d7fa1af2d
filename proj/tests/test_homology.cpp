#include "doctest.h"
#include "oracles.hpp"

#include "halg/complex.hpp"

using namespace halg;

namespace {

RingPtr ZZ() { return Ring::ZZ(); }

PresentedModule zfree(std::size_t n) { return PresentedModule::free_module(ZZ(), n); }

Matrix m1x1(const RingPtr& R, long v) {
    Matrix m(R, 1, 1);
    m.at(0, 0) = R->from_int(v);
    return m;
}

// 0 -> Z -(x n)-> Z -> 0 over degrees [0, 1]
Complex times_n(long n) {
    return Complex(0, {zfree(1), zfree(1)},
                   {ModuleHom(zfree(1), zfree(1), m1x1(ZZ(), n))});
}

// the degree-shift SES: A = Z at 0, B = (Z -id-> Z) over [0,1], C = Z at 1
SesOfComplexes degree_shift_ses() {
    PresentedModule Z = zfree(1), O = PresentedModule::zero_module(ZZ());
    Complex A(0, {Z, O}, {ModuleHom::zero(O, Z)});
    Complex B(0, {Z, Z}, {ModuleHom(Z, Z, m1x1(ZZ(), 1))});
    Complex C(0, {O, Z}, {ModuleHom::zero(Z, O)});
    std::map<long, ModuleHom> inj, prj;
    inj.emplace(0, ModuleHom::identity(Z));
    inj.emplace(1, ModuleHom::zero(O, Z));
    prj.emplace(0, ModuleHom::zero(Z, O));
    prj.emplace(1, ModuleHom::identity(Z));
    return SesOfComplexes(ComplexHom(A, B, std::move(inj)), ComplexHom(B, C, std::move(prj)));
}

}  // namespace

TEST_CASE("complex construction enforces d o d = 0") {
    PresentedModule Z = zfree(1);
    ModuleHom two(Z, Z, m1x1(ZZ(), 2));
    CHECK_THROWS_AS(Complex(0, {Z, Z, Z}, {two, two}), Error);
    ModuleHom down(Z, Z, m1x1(ZZ(), 2));
    ModuleHom zero(Z, Z, m1x1(ZZ(), 0));
    Complex ok(0, {Z, Z, Z}, {down, zero});
    CHECK(ok.hi() == 2);
}

TEST_CASE("cohomology: frozen examples") {
    SUBCASE("exact complex vanishes at interior degrees") {
        // Z -id-> Z at degrees [0,1]: h_1 = ker(id) = 0, h_0 = coker(id) = 0
        Complex C = times_n(1);
        CHECK(cohomology_at(C, 0).H.is_zero_module());
        CHECK(cohomology_at(C, 1).H.is_zero_module());
    }
    SUBCASE("multiplication by two leaves Z/2 at the target degree") {
        Complex C = times_n(2);
        CohomologyAt h0 = cohomology_at(C, 0);
        CHECK(!h0.H.is_zero_module());
        CHECK(testutil::element_order(element(h0.H, {ZZ()->one()})) == 2);
        CHECK(cohomology_at(C, 1).H.is_zero_module());  // injective map, no cycles
    }
    SUBCASE("zero differentials reproduce the modules") {
        PresentedModule M = PresentedModule::cyclic(ZZ(), {ZZ()->from_int(6)});
        Complex C(0, {M, M}, {ModuleHom::zero(M, M)});
        for (long i = 0; i <= 1; ++i) {
            CohomologyAt h = cohomology_at(C, i);
            CHECK(h.H.gens() == M.gens());
            CHECK(testutil::element_order(element(h.H, {ZZ()->one()})) == 6);
        }
    }
    SUBCASE("classify sends boundaries to zero") {
        Complex C = times_n(2);
        CohomologyAt h0 = cohomology_at(C, 0);
        // 2 is a boundary of the generator at degree 1
        CHECK(element_is_zero(h0.classify(element(C.module_at(0), {ZZ()->from_int(2)}))));
        CHECK(!element_is_zero(h0.classify(element(C.module_at(0), {ZZ()->one()}))));
    }
}

TEST_CASE("induced maps on cohomology") {
    Complex C = times_n(2);
    SUBCASE("identity induces the identity") {
        ModuleHom h = induced_map(ComplexHom::identity(C), 0);
        CHECK(hom_equal(h, ModuleHom::identity(h.source())));
    }
    SUBCASE("zero induces zero") {
        ModuleHom h = induced_map(ComplexHom::zero(C, C), 0);
        CHECK(h.is_zero_hom());
    }
    SUBCASE("homotopic homs induce the same map at every degree") {
        // phi = identity, psi = identity + boundary of k
        Homotopy k;
        k.maps.emplace(0, ModuleHom(C.module_at(0), C.module_at(1), m1x1(ZZ(), 3)));
        ComplexHom phi = ComplexHom::identity(C);
        ComplexHom psi = perturb_by_homotopy(phi, k);
        CHECK(homotopy_certifies(psi, phi, k));
        for (long i = 0; i <= 1; ++i)
            CHECK(hom_equal(induced_map(phi, i), induced_map(psi, i)));
    }
}

TEST_CASE("homotopy invariance on random perturbations") {
    auto g = testutil::rng(149);
    for (int trial = 0; trial < 20; ++trial) {
        long n = testutil::rand_int(g, 1, 6);
        Complex C = times_n(2 * n);
        Homotopy k;
        k.maps.emplace(0, ModuleHom(C.module_at(0), C.module_at(1),
                                    m1x1(ZZ(), testutil::rand_int(g, -5, 5))));
        ComplexHom phi = ComplexHom::identity(C);
        ComplexHom psi = perturb_by_homotopy(phi, k);
        REQUIRE(homotopy_certifies(psi, phi, k));
        for (long i = 0; i <= 1; ++i)
            CHECK(hom_equal(induced_map(phi, i), induced_map(psi, i)));
    }
}

TEST_CASE("connecting map of the degree-shift example is sign times identity") {
    SesOfComplexes S = degree_shift_ses();
    CohomologyAt HC = cohomology_at(S.C(), 1);
    CohomologyAt HA = cohomology_at(S.A(), 0);
    REQUIRE(HC.H.gens() == 1);
    REQUIRE(HA.H.gens() == 1);

    ModuleHom plus = connecting_map(S, 1, +1);
    ModuleHom minus = connecting_map(S, 1, -1);
    CHECK(ZZ()->eq(plus.matrix().at(0, 0), ZZ()->one()));
    CHECK(ZZ()->eq(minus.matrix().at(0, 0), ZZ()->from_int(-1)));
    CHECK(hom_equal(plus, hom_neg(minus)));
}

TEST_CASE("connecting maps over GF(2) ignore the sign") {
    RingPtr F2 = Ring::GF(2);
    PresentedModule V = PresentedModule::free_module(F2, 1);
    PresentedModule O = PresentedModule::zero_module(F2);
    Matrix one(F2, 1, 1);
    one.at(0, 0) = F2->one();
    Complex A(0, {V, O}, {ModuleHom::zero(O, V)});
    Complex B(0, {V, V}, {ModuleHom(V, V, one)});
    Complex C(0, {O, V}, {ModuleHom::zero(V, O)});
    std::map<long, ModuleHom> inj, prj;
    inj.emplace(0, ModuleHom::identity(V));
    inj.emplace(1, ModuleHom::zero(O, V));
    prj.emplace(0, ModuleHom::zero(V, O));
    prj.emplace(1, ModuleHom::identity(V));
    SesOfComplexes S(ComplexHom(A, B, std::move(inj)), ComplexHom(B, C, std::move(prj)));
    ModuleHom plus = connecting_map(S, 1, +1);
    ModuleHom minus = connecting_map(S, 1, -1);
    CHECK(hom_equal(plus, minus));
}

TEST_CASE("long exact sequence of the degree-shift example") {
    SesOfComplexes S = degree_shift_ses();
    LongExactSequence les = long_exact_sequence(S, +1);
    CHECK(les.exact);
    // delta is an isomorphism: h_1(C) = Z maps onto h_0(A) = Z
    LongExactSequence neg = long_exact_sequence(S, -1);
    CHECK(neg.exact);
    CHECK(les.exact_at == neg.exact_at);
}

TEST_CASE("long exact sequence of exact complexes is zero") {
    // B = A (+) C with both A and C exact identity complexes
    PresentedModule Z = zfree(1);
    Matrix id2 = Matrix::identity(ZZ(), 2);
    PresentedModule Z2 = zfree(2);
    Complex A = times_n(1);
    Complex B(0, {Z2, Z2}, {ModuleHom(Z2, Z2, id2)});
    Complex C = times_n(1);
    std::map<long, ModuleHom> inj, prj;
    for (long i = 0; i <= 1; ++i) {
        Matrix in(ZZ(), 1, 2);
        in.at(0, 0) = ZZ()->one();
        Matrix pr(ZZ(), 2, 1);
        pr.at(1, 0) = ZZ()->one();
        inj.emplace(i, ModuleHom(Z, Z2, in));
        prj.emplace(i, ModuleHom(Z2, Z, pr));
    }
    SesOfComplexes S(ComplexHom(A, B, std::move(inj)), ComplexHom(B, C, std::move(prj)));
    LongExactSequence les = long_exact_sequence(S, +1);
    CHECK(les.exact);
    for (long i = les.sequence.lo(); i <= les.sequence.hi(); ++i)
        CHECK(les.sequence.module_at(i).is_zero_module());
}

TEST_CASE("ses validation rejects non-exact data") {
    PresentedModule Z = zfree(1);
    Complex A = times_n(1);
    Complex B = times_n(1);
    std::map<long, ModuleHom> inj, prj;
    for (long i = 0; i <= 1; ++i) {
        inj.emplace(i, ModuleHom(Z, Z, m1x1(ZZ(), 2)));  // not surjective complement
        prj.emplace(i, ModuleHom(Z, Z, m1x1(ZZ(), 0)));
    }
    CHECK_THROWS_AS(
        SesOfComplexes(ComplexHom(A, B, std::move(inj)), ComplexHom(B, B, std::move(prj))),
        Error);
}

TEST_CASE("connecting map naturality squares commute") {
    // morphism of SESs: multiplication by m on every entry of the degree-shift SES
    SesOfComplexes S = degree_shift_ses();
    for (long m : {2L, 3L}) {
        // gamma: C -> C, alpha: A -> A multiplication by m; naturality:
        // delta o h(gamma) = h(alpha) o delta
        CohomologyAt HC = cohomology_at(S.C(), 1);
        CohomologyAt HA = cohomology_at(S.A(), 0);
        ModuleHom delta = connecting_map(S, 1, +1);
        Matrix mm(ZZ(), 1, 1);
        mm.at(0, 0) = ZZ()->from_int(m);
        ModuleHom mult_C(HC.H, HC.H, mm);
        ModuleHom mult_A(HA.H, HA.H, mm);
        CHECK(hom_equal(compose(mult_C, delta), compose(delta, mult_A)));
    }
}
