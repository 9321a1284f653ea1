#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "rilab/jacobian.hpp"

using namespace rilab;

namespace {

Poly<Fp> random_form(const Ring<Fp>& r, Rng& rng, int d) {
    std::vector<Monomial> monos;
    enumerate_monomials(r->nvars(), d, monos);
    std::vector<Term<Fp>> raw;
    for (auto& m : monos) {
        auto c = r->field.random(rng);
        if (c) raw.push_back({m, c});
    }
    return Poly<Fp>::collect(r, std::move(raw));
}

}  // namespace

TEST_CASE("jacobian determinants") {
    auto R = make_ring(Fp(32003), {"x", "y"});
    auto det = jacobian_determinant(std::vector<Poly<Fp>>{parse_poly(R, "x^2"), parse_poly(R, "y^2")});
    CHECK(det == parse_poly(R, "4*x*y"));
    auto rep = jacobian_determinant(std::vector<Poly<Fp>>{parse_poly(R, "x^2+y^2"), parse_poly(R, "x^2+y^2")});
    CHECK(rep.is_zero());
    CHECK_THROWS_AS(jacobian_determinant(std::vector<Poly<Fp>>{parse_poly(R, "x")}), InputError);
}

TEST_CASE("jacobian determinant degree and scaling") {
    auto R = make_ring(Fp(32003), {"x", "y", "z"});
    Rng rng(5);
    for (int it = 0; it < 10; ++it) {
        int delta = 2 + static_cast<int>(rng.below(2));
        std::vector<Poly<Fp>> F = {random_form(R, rng, delta), random_form(R, rng, delta),
                                   random_form(R, rng, delta)};
        auto det = jacobian_determinant(F);
        if (!det.is_zero()) {
            CHECK(det.is_homogeneous());
            CHECK(det.degree() == 3 * (delta - 1));
        }
        // scaling one row scales the determinant
        auto c = R->field.random_nonzero(rng);
        auto F2 = F;
        F2[0] = F2[0].scale(c);
        CHECK(jacobian_determinant(F2) == det.scale(c));
    }
}

TEST_CASE("product formula for jacobians, univariate") {
    auto R = make_ring(Fp(32003), {"x"});
    for (int delta = 1; delta <= 3; ++delta)
        for (int gamma = 0; gamma <= 3; ++gamma) {
            auto G = gamma ? parse_poly(R, ("x^" + std::to_string(gamma)).c_str())
                           : Poly<Fp>::constant(R, 1);
            std::vector<Poly<Fp>> F = {parse_poly(R, ("x^" + std::to_string(delta)).c_str())};
            CHECK(check_jacformula(G, F));
        }
}

TEST_CASE("product formula, small fixed instance") {
    auto R = make_ring(Fp(32003), {"x", "y"});
    CHECK(check_jacformula(parse_poly(R, "x+y"), std::vector<Poly<Fp>>{parse_poly(R, "x^2"), parse_poly(R, "y^2")}));
}

TEST_CASE("product formula on random instances, including small characteristic") {
    for (int64_t p : {32003LL, 101LL, 7LL}) {
        for (int d = 1; d <= 3; ++d) {
            std::vector<std::string> names;
            for (int i = 0; i < d; ++i) names.push_back("x" + std::to_string(i + 1));
            auto R = make_ring(Fp(p), names);
            Rng rng(900 + d + p);
            for (int it = 0; it < 12; ++it) {
                int gamma = 1 + static_cast<int>(rng.below(3));
                int delta = 1 + static_cast<int>(rng.below(3));
                auto G = random_form(R, rng, gamma);
                std::vector<Poly<Fp>> F;
                for (int i = 0; i < d; ++i) F.push_back(random_form(R, rng, delta));
                CHECK(check_jacformula(G, F));
            }
        }
    }
}

TEST_CASE("mixed-degree generators break the socle statement") {
    // F = (x^2+y^2, x+y), G = x: the colon of (G^2 F) by det Jac(GF) is
    // exactly (x), so the Jacobian determinant misses the socle; a different
    // generating sequence of (F) repairs it.
    auto R = make_ring(Fp(32003), {"x", "y"});
    auto G = parse_poly(R, "x");
    std::vector<Poly<Fp>> F = {parse_poly(R, "x^2+y^2"), parse_poly(R, "x+y")};
    std::vector<Poly<Fp>> gf = {G * F[0], G * F[1]};
    auto det = jacobian_determinant(gf);
    std::vector<Poly<Fp>> g2f = {G * gf[0], G * gf[1]};
    Ideal<Fp> A(R, g2f);
    auto q = colon(A, Ideal<Fp>(R, {det}));
    CHECK(q.equals(Ideal<Fp>(R, {parse_poly(R, "x")})));
    CHECK(!A.contains(det));  // det Jac does not vanish modulo (G^2 F)

    // the repaired sequence: F' = (x^2-xy, x+y) generates (F) and its
    // Jacobian determinant does land in the socle
    std::vector<Poly<Fp>> Fp_ = {parse_poly(R, "x^2-x*y"), parse_poly(R, "x+y")};
    CHECK(Ideal<Fp>(R, F).equals(Ideal<Fp>(R, Fp_)));
    std::vector<Poly<Fp>> gfp = {G * Fp_[0], G * Fp_[1]};
    auto detp = jacobian_determinant(gfp);
    auto qp = colon(A, Ideal<Fp>(R, {detp}));
    CHECK(qp.equals(Ideal<Fp>::irrelevant(R)));
}

TEST_CASE("principal-case socle generation") {
    auto R = make_ring(Fp(32003), {"x", "y"});

    SUBCASE("fixed instance") {
        auto res = g1_socle_check(parse_poly(R, "x"),
                                  std::vector<Poly<Fp>>{parse_poly(R, "x^2"), parse_poly(R, "y^2")});
        CHECK(res.regular_sequence);
        CHECK(res.det_nonzero_mod);
        CHECK(res.det_in_socle);
        CHECK(res.socle_dim == 1);
        CHECK(res.generates_socle);
        CHECK(res.scalar_identity);
    }
    SUBCASE("trivial multiplier reduces to the classical complete intersection") {
        auto res = g1_socle_check(Poly<Fp>::constant(R, 1),
                                  std::vector<Poly<Fp>>{parse_poly(R, "x^2"), parse_poly(R, "y^2")});
        CHECK(res.generates_socle);
    }
    SUBCASE("random instances") {
        Rng rng(77);
        int done = 0;
        for (int it = 0; it < 12 && done < 6; ++it) {
            auto G = random_form(R, rng, 1);
            std::vector<Poly<Fp>> F = {random_form(R, rng, 2), random_form(R, rng, 2)};
            if (G.is_zero()) continue;
            auto res = g1_socle_check(G, F);
            if (!res.regular_sequence) continue;
            CHECK(res.generates_socle);
            CHECK(res.scalar_identity);
            ++done;
        }
        CHECK(done >= 4);
    }
}

TEST_CASE("linear symbolic power membership") {
    auto R = make_ring(Fp(32003), {"x", "y", "z"});
    auto L1 = Ideal<Fp>(R, {parse_poly(R, "x"), parse_poly(R, "y")});
    auto L2 = Ideal<Fp>(R, {parse_poly(R, "x"), parse_poly(R, "z")});
    CHECK(symbolic_power_membership_linear(parse_poly(R, "x*y"), std::vector<Ideal<Fp>>{L1}, 1));
    CHECK(symbolic_power_membership_linear(parse_poly(R, "x*y"), std::vector<Ideal<Fp>>{L1, L2}, 1));
    CHECK(!symbolic_power_membership_linear(parse_poly(R, "x"), std::vector<Ideal<Fp>>{L1}, 2));
    CHECK(symbolic_power_membership_linear(parse_poly(R, "x^2 + x*y"), std::vector<Ideal<Fp>>{L1}, 2));
    CHECK_THROWS_AS(
        symbolic_power_membership_linear(parse_poly(R, "x"), std::vector<Ideal<Fp>>{Ideal<Fp>(R, {parse_poly(R, "x^2")})}, 1),
        InputError);
}

TEST_CASE("intersection-of-planes example: socle generation plus deeper membership") {
    auto R = make_ring(Fp(32003), {"x", "y", "z"});
    // I = (x, yz) is the intersection of (x,y) and (x,z)
    auto I = Ideal<Fp>(R, {parse_poly(R, "x"), parse_poly(R, "y*z")});
    auto J = Ideal<Fp>(R, general_elements(I, 3, 4, 818));
    auto su = make_setup(I, J, HypothesisMode::None);
    REQUIRE(su.s == 3);
    REQUIRE(su.g == 2);
    REQUIRE(su.t == 1);
    REQUIRE(su.is_residual);
    auto jc = jacobian_containment_check(su);
    CHECK(jc.degree_match);
    CHECK(jc.verdict == JacobianVerdict::GeneratesSocle);
    CHECK(jc.h0_socle_dim == 1);
    CHECK(!jc.conjecture_counterexample);

    // det Jac lies in (x,y)J and (x,z)J, and in the symbolic square of I
    auto det = jacobian_determinant(J.generators());
    auto L1 = Ideal<Fp>(R, {parse_poly(R, "x"), parse_poly(R, "y")});
    auto L2 = Ideal<Fp>(R, {parse_poly(R, "x"), parse_poly(R, "z")});
    CHECK(ideal_product(L1, J).contains(det));
    CHECK(ideal_product(L2, J).contains(det));
    CHECK(symbolic_power_membership_linear(det, std::vector<Ideal<Fp>>{L1, L2}, 2));
}
