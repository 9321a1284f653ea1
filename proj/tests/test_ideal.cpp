#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "oracle.hpp"
#include "rilab/ideal.hpp"
#include "rilab/slice.hpp"

using namespace rilab;

namespace {

Ring<Fp> Rxy() { return make_ring(Fp(32003), {"x", "y"}); }
Ring<Fp> Rxyz() { return make_ring(Fp(32003), {"x", "y", "z"}); }

Ideal<Fp> ideal(const Ring<Fp>& r, std::initializer_list<const char*> ss) {
    std::vector<Poly<Fp>> v;
    for (auto s : ss) v.push_back(parse_poly(r, s));
    return Ideal<Fp>(r, v);
}

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

TEST_CASE("ideal powers") {
    auto R = Rxy();
    auto I = ideal(R, {"x", "y"});
    auto I2 = ideal_power(I, 2);
    CHECK(I2.equals(ideal(R, {"x^2", "x*y", "y^2"})));
    CHECK(ideal_power(I, 0).is_unit());
    auto I4a = ideal_power(ideal_power(I, 2), 2);
    auto I4b = ideal_power(I, 4);
    CHECK(I4a.equals(I4b));
    CHECK(I4b.generators().size() == 5);
}

TEST_CASE("intersections") {
    auto R = Rxy();
    CHECK(intersect(ideal(R, {"x"}), ideal(R, {"y"})).equals(ideal(R, {"x*y"})));
    CHECK(intersect(ideal(R, {"x^2", "y"}), ideal(R, {"x"})).equals(ideal(R, {"x^2", "x*y"})));
    auto A = ideal(R, {"x^2", "x*y + y^2"});
    CHECK(intersect(A, A).equals(A));
}

TEST_CASE("colons") {
    auto R = Rxy();
    CHECK(colon(ideal(R, {"x^2"}), ideal(R, {"x"})).equals(ideal(R, {"x"})));
    CHECK(colon(ideal(R, {"x*y", "y^2"}), ideal(R, {"y"})).equals(ideal(R, {"x", "y"})));
    // containment properties
    auto A = ideal(R, {"x^2*y"});
    auto B = ideal(R, {"x", "y"});
    auto Q = colon(A, B);
    CHECK(Q.contains(A));
    CHECK(A.contains(ideal_product(Q, B)));
}

TEST_CASE("saturations") {
    auto R = Rxy();
    auto m = Ideal<Fp>::irrelevant(R);
    // (x^2 y) : (x,y) = (x^2 y) already: no irrelevant component
    CHECK(saturate(ideal(R, {"x^2*y"}), m).equals(ideal(R, {"x^2*y"})));
    CHECK(saturate(ideal(R, {"x^2", "x*y"}), m).equals(ideal(R, {"x"})));
    auto A = ideal(R, {"x^2", "x*y + y^2"});
    CHECK(saturate(A, Ideal<Fp>::unit(R)).equals(A));
}

TEST_CASE("codimension") {
    auto R3 = Rxyz();
    CHECK(ideal_power(ideal(R3, {"x", "y"}), 2).codimension() == 2);
    CHECK(Ideal<Fp>::unit(R3).codimension() == 4);   // empty variety sentinel d+1
    CHECK(Ideal<Fp>::zero(R3).codimension() == 0);
    CHECK(ideal(R3, {"x"}).codimension() == 1);
    CHECK(Ideal<Fp>::irrelevant(R3).codimension() == 3);
}

TEST_CASE("codimension of intersections is the min, randomized") {
    auto R = Rxyz();
    Rng rng(314);
    for (int it = 0; it < 6; ++it) {
        auto A = Ideal<Fp>(R, {random_form(R, rng, 1), random_form(R, rng, 2)});
        auto B = Ideal<Fp>(R, {random_form(R, rng, 2)});
        int ca = A.codimension(), cb = B.codimension();
        CHECK(intersect(A, B).codimension() == std::min(ca, cb));
    }
}

TEST_CASE("fitting ideals") {
    auto R = Rxy();
    // presentation of (x, y): single Koszul column (y, -x)
    ModulePresentation<Fp> pres;
    pres.ring = R;
    pres.rank = 2;
    pres.row_shifts = {1, 1};
    pres.columns = {MVec<Fp>::collect(
        R, {{0, Monomial::var(1), R->field.one()}, {1, Monomial::var(0), R->field.neg(R->field.one())}})};
    CHECK(fitting_ideal(pres, 1).equals(ideal(R, {"x", "y"})));
    CHECK(fitting_ideal(pres, 0).is_zero());
    CHECK(fitting_ideal(pres, 2).is_unit());

    // zero presentation matrix: unit ideal at index >= rank
    ModulePresentation<Fp> zero;
    zero.ring = R;
    zero.rank = 2;
    zero.row_shifts = {0, 0};
    CHECK(fitting_ideal(zero, 2).is_unit());
    CHECK(fitting_ideal(zero, 1).is_zero());
}

TEST_CASE("fitting ideals are invariant under a trivial relation column") {
    auto R = Rxyz();
    Rng rng(2718);
    for (int it = 0; it < 4; ++it) {
        auto gens = std::vector<Poly<Fp>>{random_form(R, rng, 2), random_form(R, rng, 2),
                                          random_form(R, rng, 2)};
        auto pres = syzygy_module(gens);
        // append the zero column: Fitting ideals must not change
        ModulePresentation<Fp> padded = pres;
        padded.columns.push_back(MVec<Fp>(R));
        for (int i = 0; i <= 3; ++i) {
            auto a = fitting_ideal(pres, i);
            auto b = fitting_ideal(padded, i);
            CHECK(a.equals(b));
        }
    }
}

TEST_CASE("syzygy presentation of the squared height-two linear ideal") {
    auto R3 = Rxyz();
    auto I = ideal_power(ideal(R3, {"x", "y"}), 2);
    auto g = interreduce_polys(I.generators());
    REQUIRE(g.size() == 3);
    auto pres = syzygy_module(g);
    CHECK(pres.is_graded());
    // 3 quadric generators, 2 linear syzygies
    CHECK(pres.columns.size() == 2);
    CHECK(fitting_ideal(pres, 1).codimension() == 2);
    CHECK(fitting_ideal(pres, 2).codimension() == 2);
}

TEST_CASE("local generator bound levels") {
    auto R3 = Rxyz();
    auto I = ideal_power(ideal(R3, {"x", "y"}), 2);
    auto res = check_Gs(I, 3);
    CHECK(!res.holds);
    CHECK(res.first_failing_level == 3);
    auto res2 = check_Gs(I, 2);
    CHECK(res2.holds);

    // principal ideals satisfy the bound at every level
    auto P = ideal(R3, {"x^2 + y*z"});
    CHECK(check_Gs(P, 3).holds);
}

TEST_CASE("colon and intersection agree with the brute-force oracle") {
    auto R = Rxy();
    auto R3 = Rxyz();
    Rng rng(161803);
    int checked = 0;
    for (int it = 0; it < 24; ++it) {
        const Ring<Fp>& r = (it % 2) ? R : R3;
        int da = 1 + static_cast<int>(rng.below(2));
        int db = 1 + static_cast<int>(rng.below(2));
        std::vector<Poly<Fp>> ag = {random_form(r, rng, da), random_form(r, rng, da + 1)};
        std::vector<Poly<Fp>> bg = {random_form(r, rng, db)};
        if (ag[0].is_zero() || bg[0].is_zero()) continue;
        Ideal<Fp> A(r, ag), B(r, bg);
        int cap = 5;

        auto inter = intersect(A, B);
        for (int e = 0; e <= cap; ++e)
            CHECK(ideal_slice_dim(inter.generators(), r, e) == oracle::intersection_dim(ag, bg, r, e));
        for (auto& f : inter.generators()) {
            CHECK(oracle::member(f, ag, r));
            CHECK(oracle::member(f, bg, r));
        }

        auto q = colon(A, B);
        auto oq = oracle::colon_truncated(ag, bg, r, cap);
        for (int e = 0; e <= cap; ++e)
            CHECK(ideal_slice_dim(q.generators(), r, e) == oracle::slice_dim(oq, r, e));
        ++checked;
    }
    CHECK(checked >= 8);
}

TEST_CASE("saturation agrees with the oracle") {
    auto R = Rxy();
    Rng rng(271828);
    for (int it = 0; it < 6; ++it) {
        std::vector<Poly<Fp>> ag = {random_form(R, rng, 2), random_form(R, rng, 3)};
        if (ag[0].is_zero() || ag[1].is_zero()) continue;
        auto m = Ideal<Fp>::irrelevant(R);
        auto sat = saturate(Ideal<Fp>(R, ag), m);
        auto osat = oracle::saturate_truncated(ag, m.generators(), R, 6);
        for (int e = 0; e <= 5; ++e)
            CHECK(ideal_slice_dim(sat.generators(), R, e) == oracle::slice_dim(osat, R, e));
    }
}
