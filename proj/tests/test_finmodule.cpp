#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "rilab/finmodule.hpp"

using namespace rilab;

namespace {

Ring<Fp> Rxy() { return make_ring(Fp(32003), {"x", "y"}); }

Ideal<Fp> ideal(const Ring<Fp>& r, std::initializer_list<const char*> ss) {
    std::vector<Poly<Fp>> v;
    for (auto s : ss) v.push_back(parse_poly(r, s));
    return Ideal<Fp>(r, v);
}

FiniteModule<Fp> random_artinian(const Ring<Fp>& r, Rng& rng) {
    // quotient by a random artinian ideal containing powers of the variables
    std::vector<Poly<Fp>> gens;
    for (int i = 0; i < r->nvars(); ++i) gens.push_back(poly_pow(Poly<Fp>::variable(r, i), 2 + (int)rng.below(2)));
    std::vector<Monomial> monos;
    enumerate_monomials(r->nvars(), 2, monos);
    std::vector<Term<Fp>> raw;
    for (auto& m : monos) {
        auto c = r->field.random(rng);
        if (c && rng.below(2)) raw.push_back({m, c});
    }
    auto extra = Poly<Fp>::collect(r, std::move(raw));
    if (!extra.is_zero()) gens.push_back(extra);
    return quotient_ring_module(Ideal<Fp>(r, gens));
}

}  // namespace

TEST_CASE("simple quotient modules") {
    auto R1 = make_ring(Fp(32003), {"x"});
    auto M = quotient_module(ideal(R1, {"x"}), ideal(R1, {"x^2"}));
    CHECK(M.hilbert().values() == std::vector<size_t>{1});
    CHECK(M.lo == 1);
    CHECK(M.length() == 1);
}

TEST_CASE("containment is verified") {
    auto R = Rxy();
    CHECK_THROWS_AS(quotient_module(ideal(R, {"x^2"}), ideal(R, {"y"})), DomainError);
}

TEST_CASE("socle of artinian quotients") {
    auto R = Rxy();
    auto gor = quotient_ring_module(ideal(R, {"x^2", "y^2"}));
    CHECK(gor.hilbert().values() == std::vector<size_t>{1, 2, 1});
    auto soc = socle_dims(gor);
    CHECK(soc.length() == 1);
    CHECK(soc.at(2) == 1);
    CHECK(is_gorenstein_artinian(gor));
    // the socle sits on the class of xy
    auto v = gor.class_of(parse_poly(R, "x*y"), 2);
    CHECK(in_socle(gor, v, 2));
    auto w = gor.class_of(parse_poly(R, "x"), 1);
    CHECK(!in_socle(gor, w, 1));

    auto notgor = quotient_ring_module(ideal(R, {"x^2", "x*y", "y^2"}));
    CHECK(socle_dims(notgor).length() == 2);
    CHECK(!is_gorenstein_artinian(notgor));
}

TEST_CASE("action matrices commute") {
    auto R = make_ring(Fp(32003), {"x", "y", "z"});
    Rng rng(808);
    for (int it = 0; it < 6; ++it) {
        auto M = random_artinian(R, rng);
        CHECK(M.actions_commute());
    }
}

TEST_CASE("length two ways") {
    auto R = Rxy();
    auto A = ideal_power(ideal(R, {"x", "y"}), 2);
    auto B = ideal_product(ideal(R, {"x^2", "y^2"}), ideal(R, {"x", "y"}));
    auto M = quotient_module(A, B);
    size_t by_hf = M.length();
    size_t by_joint = length_by_joint_system(A, B, M.lo, M.hi());
    CHECK(by_hf == by_joint);
    CHECK(by_hf > 0);
}

TEST_CASE("matlis duality reverses Hilbert functions") {
    auto R = make_ring(Fp(32003), {"x", "y", "z"});
    Rng rng(31415);
    for (int it = 0; it < 10; ++it) {
        auto M = random_artinian(R, rng);
        auto D = matlis_dual(M);
        auto hf = M.hilbert().values();
        auto rev = D.hilbert().values();
        std::reverse(rev.begin(), rev.end());
        CHECK(hf == rev);
        CHECK(D.actions_commute());
        // double dual is the module again, up to isomorphism
        auto DD = matlis_dual(D);
        CHECK(find_isomorphism_shift(M, DD, 99).has_value());
    }
}

TEST_CASE("hom spaces") {
    auto R = Rxy();
    auto kk = quotient_ring_module(Ideal<Fp>::irrelevant(R));
    CHECK(kk.length() == 1);
    auto homkk = hom_space(kk, kk, 0);
    CHECK(homkk.size() == 1);

    auto gor = quotient_ring_module(ideal(R, {"x^2", "y^2"}));
    // self-duality of the complete intersection: R/J isomorphic to its dual
    auto dual = matlis_dual(gor);
    auto shift = find_isomorphism_shift(gor, dual, 5);
    REQUIRE(shift.has_value());
    CHECK(*shift == -2);
}

TEST_CASE("hom module has the right multiplication") {
    auto R = Rxy();
    auto gor = quotient_ring_module(ideal(R, {"x^2", "y^2"}));
    auto H = hom_module(gor, gor);
    // Hom(R/J, R/J) = R/J for Gorenstein artinian R/J
    CHECK(H.module.length() == gor.length());
    CHECK(H.module.actions_commute());
    CHECK(find_isomorphism_shift(H.module, gor, 17).has_value());
}

TEST_CASE("surjection search") {
    auto R = Rxy();
    auto big = quotient_ring_module(ideal(R, {"x^2", "x*y", "y^2"}));  // 1,2
    auto kk = quotient_ring_module(Ideal<Fp>::irrelevant(R));          // 1
    CHECK(surjection_search(big, kk, 1) == SurjectionVerdict::Found);
    CHECK(surjection_search(kk, big, 1) == SurjectionVerdict::CertifiedNone);
}
