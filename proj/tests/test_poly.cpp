#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "rilab/parse.hpp"

using namespace rilab;

namespace {

Ring<Fp> ring3(int64_t p = 32003) {
    return make_ring(Fp(p), {"x1", "x2", "x3"});
}

Ring<Fp> ring_xy(int64_t p = 32003) {
    return make_ring(Fp(p), {"x", "y"});
}

}  // namespace

TEST_CASE("parse basic forms") {
    auto R = ring3();
    auto p = parse_poly(R, "x1^2*x2 - 3*x3");
    CHECK(p.size() == 2);
    CHECK(p.degree() == 3);
    CHECK(!p.is_homogeneous());
    CHECK(p.terms()[0].m.deg == 3);

    CHECK(parse_poly(R, "0").is_zero());
    CHECK(parse_poly(R, "x1+x1") == parse_poly(R, "2*x1"));
}

TEST_CASE("parse errors carry position and cause") {
    auto R = ring3();
    CHECK_THROWS_AS(parse_poly(R, "x1 + q"), InputError);
    CHECK_THROWS_AS(parse_poly(R, "x1 +"), InputError);
    CHECK_THROWS_AS(parse_poly(R, "x1 ^"), InputError);
    try {
        parse_poly(R, "x1*zz");
    } catch (const InputError& e) {
        CHECK(std::string(e.what()).find("zz") != std::string::npos);
    }
}

TEST_CASE("print then parse is the identity") {
    auto R = ring3();
    for (const char* s : {"x1^2*x2 - 3*x3", "x1 + x2 + x3", "2", "0", "x1*x2*x3 + 31999*x1^3"}) {
        auto p = parse_poly(R, s);
        auto q = parse_poly(R, to_string(p));
        CHECK(p == q);
        CHECK(to_string(p) == to_string(q));
    }
}

TEST_CASE("arithmetic identities") {
    auto R = ring_xy();
    auto x = parse_poly(R, "x"), y = parse_poly(R, "y");
    CHECK((x + y) * (x - y) == parse_poly(R, "x^2 - y^2"));
    auto p = parse_poly(R, "x^3 + 2*x*y");
    CHECK(p + Poly<Fp>::zero(R) == p);

    auto R5 = ring_xy(5);
    auto a = parse_poly(R5, "3*x"), b = parse_poly(R5, "2*x");
    CHECK(a * b == parse_poly(R5, "x^2"));
}

TEST_CASE("ring mismatch is an error") {
    auto R = ring_xy();
    auto S = ring3();
    CHECK_THROWS_AS(parse_poly(R, "x") + parse_poly(S, "x1"), DomainError);
}

TEST_CASE("partial derivatives") {
    auto R = ring_xy();
    auto p = parse_poly(R, "x^3*y");
    CHECK(p.derivative(0) == parse_poly(R, "3*x^2*y"));
    CHECK(parse_poly(R, "7").derivative(0).is_zero());
    CHECK_THROWS_AS(p.derivative(5), InputError);

    auto R3 = ring_xy(3);
    CHECK(parse_poly(R3, "x^3").derivative(0).is_zero());
}

TEST_CASE("randomized ring axioms") {
    auto R = ring3();
    Rng rng(20260810);
    auto random_poly = [&](int maxdeg) {
        std::vector<Term<Fp>> raw;
        for (int t = 0; t < 6; ++t) {
            Monomial m;
            int deg = 0;
            for (int i = 0; i < 3; ++i) {
                int e = static_cast<int>(rng.below(static_cast<uint64_t>(maxdeg)));
                m.e[i] = static_cast<uint8_t>(e);
                deg += e;
            }
            m.deg = static_cast<uint16_t>(deg);
            raw.push_back({m, R->field.random(rng)});
        }
        return Poly<Fp>::collect(R, std::move(raw));
    };
    for (int it = 0; it < 40; ++it) {
        auto a = random_poly(4), b = random_poly(4), c = random_poly(4);
        CHECK(a + b == b + a);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a * b) * c == a * (b * c));
    }
}

TEST_CASE("homogeneous degree bookkeeping under products") {
    auto R = ring_xy();
    Rng rng(7);
    for (int it = 0; it < 20; ++it) {
        std::vector<Term<Fp>> ra, rb;
        for (int t = 0; t < 3; ++t) {
            int e = static_cast<int>(rng.below(4));
            Monomial m;
            m.e[0] = static_cast<uint8_t>(e);
            m.e[1] = static_cast<uint8_t>(3 - e);
            m.deg = 3;
            ra.push_back({m, R->field.random(rng)});
            int f = static_cast<int>(rng.below(3));
            Monomial n;
            n.e[0] = static_cast<uint8_t>(f);
            n.e[1] = static_cast<uint8_t>(2 - f);
            n.deg = 2;
            rb.push_back({n, R->field.random(rng)});
        }
        auto a = Poly<Fp>::collect(R, std::move(ra));
        auto b = Poly<Fp>::collect(R, std::move(rb));
        auto p = a * b;
        CHECK(p.is_homogeneous());
        if (!p.is_zero()) CHECK(p.degree() == 5);
    }
}

TEST_CASE("rational coefficients") {
    auto R = make_ring(QQ{}, {"x", "y"});
    auto p = parse_poly(R, "1/2*x + 1/3*y");
    auto q = p + p;
    CHECK(q == parse_poly(R, "x + 2/3*y"));
    auto r = parse_poly(R, to_string(q));
    CHECK(r == q);
}

TEST_CASE("exponent overflow is caught") {
    auto R = ring_xy();
    auto x = parse_poly(R, "x^255");
    CHECK_THROWS_AS(x * parse_poly(R, "x"), BudgetError);
}
