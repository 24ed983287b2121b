#include <doctest.h>

#include <random>

#include "epir/moduli.hpp"
#include "epir/poly_text.hpp"

using namespace epir;

TEST_CASE("element parsing and printing") {
    FieldCtx f = builtin_field(2, 3);
    CHECK(parse_elem(f, "g^2+g") == f.from_coeffs({0, 1, 1}));
    CHECK(parse_elem(f, "g") == f.gen());
    CHECK(parse_elem(f, " g ^ 2 + 1 ") == f.from_coeffs({1, 0, 1}));
    CHECK(parse_elem(f, "g^6") == f.from_coeffs({1, 0, 1}));
    CHECK(parse_elem(f, "0") == f.zero());

    CHECK(elem_to_string(f, f.from_coeffs({0, 1, 1})) == "g^2+g");
    CHECK(elem_to_annotated_string(f, f.from_coeffs({0, 1, 1})) == "g^4 = g^2+g");
    CHECK(elem_to_string(f, f.one()) == "1");
    CHECK(elem_to_string(f, f.zero()) == "0");
}

TEST_CASE("polynomial parsing") {
    FieldCtx f = builtin_field(2, 3);
    LPoly F = parse_lpoly(f, "g^4*t^2 + t + 1");
    CHECK(F.degree() == 2);
    CHECK(F.c[2] == f.from_coeffs({0, 1, 1}));
    CHECK(F.c[1] == f.one());
    CHECK(F.c[0] == f.one());

    CHECK(parse_kpoly(2, "t^3+t+1") == KPoly{{1, 1, 0, 1}});
    CHECK(parse_kpoly(3, "t^2+2*t+2") == KPoly{{2, 2, 1}});
    CHECK(parse_kpoly(2, "t^2 + t^2") == KPoly{});  // coefficients reduce mod p

    CHECK_THROWS_AS(parse_lpoly(f, "g^2 +"), ParseError);
    CHECK_THROWS_AS(parse_lpoly(f, "q"), ParseError);
    CHECK_THROWS_AS(parse_kpoly(2, "g*t"), ParseError);
    CHECK_THROWS_AS(parse_elem(f, "t+1"), ParseError);
}

TEST_CASE("print/parse roundtrip") {
    std::mt19937 rng(3);
    for (auto [p, n] : {std::pair<long, int>{2, 3}, {2, 5}, {3, 2}}) {
        FieldCtx f = builtin_field(p, n);
        for (int trial = 0; trial < 100; ++trial) {
            std::vector<Elem> coeffs(1 + rng() % 5);
            for (Elem& c : coeffs) c.v = rng() % f.field_size();
            LPoly F{coeffs};
            LPoly back = parse_lpoly(f, lpoly_to_string(f, F));
            CHECK(back == F);
        }
        for (std::uint32_t v = 0; v < f.field_size(); ++v)
            CHECK(parse_elem(f, elem_to_string(f, Elem{v})) == Elem{v});
    }
}
