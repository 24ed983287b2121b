#include <doctest.h>

#include <algorithm>

#include "epir/analysis.hpp"
#include "epir/moduli.hpp"
#include "epir/poly_text.hpp"

using namespace epir;

TEST_CASE("cyclotomic cosets mod 7") {
    CosetTable t = cyclotomic_cosets(7, 2);
    REQUIRE(t.cosets.size() == 3);
    CHECK(t.cosets[0] == std::vector<std::uint32_t>{0});
    CHECK(t.cosets[1] == std::vector<std::uint32_t>{1, 2, 4});
    CHECK(t.cosets[2] == std::vector<std::uint32_t>{3, 5, 6});
}

TEST_CASE("coset sizes divide n") {
    for (int n = 2; n <= 9; ++n) {
        std::uint32_t q = (1u << n) - 1;
        CosetTable t = cyclotomic_cosets(q, 2);
        std::uint32_t covered = 0;
        for (const auto& c : t.cosets) {
            CHECK(n % c.size() == 0);
            covered += static_cast<std::uint32_t>(c.size());
        }
        CHECK(covered == q);
        CHECK(t.cosets.front() == std::vector<std::uint32_t>{0});
    }
}

TEST_CASE("coset decomposition of the valid-block set") {
    FieldCtx f = builtin_field(2, 3);
    CosetDecomposition dec = decompose(f, 6);
    CHECK(dec.reps == std::vector<std::uint32_t>{1});
    CHECK(dec.total == 3);

    for (long long x = 0; x < 7; ++x) {
        CosetDecomposition d = decompose(f, x);
        CHECK(std::find(d.reps.begin(), d.reps.end(), 1u) != d.reps.end());
        int sum = 0;
        for (auto [size, count] : d.lambda) sum += size * count;
        CHECK(sum == static_cast<int>(d.total));
    }

    FieldCtx f4 = builtin_field(2, 2);
    CosetDecomposition d0 = decompose(f4, 0);
    CHECK(d0.total == 3);  // Y(beta) = 1 = beta^0 for every nonzero beta
}

TEST_CASE("indicator H") {
    FieldCtx f = builtin_field(2, 3);
    LPoly F = parse_lpoly(f, "g");
    CHECK(indicator_H(f, 6, F, 6, 1, parse_elem(f, "g^2+g")) == 0);
    CHECK(indicator_H(f, 6, F, 6, 1, f.gen()) == 1);
    for (long long x = 0; x < 7; ++x)
        for (long long s = 0; s < 7; ++s) CHECK(indicator_H(f, x, F, s, 0, f.alpha()) == 1);
}

TEST_CASE("epsilon at n=2") {
    FieldCtx f = builtin_field(2, 2);
    LPoly F = parse_lpoly(f, "g");
    for (long long x = 0; x < 3; ++x) {
        Rational e = epsilon(f, x, F);
        CHECK(e > Rational(0));
        CHECK(e <= Rational(1));
        CosetDecomposition dec = decompose(f, x);
        CHECK(e >= Rational(1) - Rational(BigInt(dec.reps.size()), BigInt(dec.total)));
    }
}

TEST_CASE("eta reproduces the published failure probabilities for small n") {
    FieldCtx f2 = builtin_field(2, 2);
    FailureStats s2 = eta(f2, parse_lpoly(f2, "g"), 1);
    CHECK(to_5dp(s2.eta) == "0.61111");

    FieldCtx f3 = builtin_field(2, 3);
    FailureStats s3 = eta(f3, parse_lpoly(f3, "g"), 1);
    CHECK(to_5dp(s3.eta) == "0.74271");

    // eta is the exact average of the per-x epsilons
    Rational sum(0);
    for (const auto& e : s3.eps) sum += e;
    CHECK(s3.eta == sum / BigInt(7));
    // and the worker count never changes the result
    CHECK(eta(f3, parse_lpoly(f3, "g"), 3).eta == s3.eta);
}

TEST_CASE("irreducible polynomial counts") {
    CHECK(count_irreducible(2, 2) == 1);
    CHECK(count_irreducible(2, 3) == 2);
    CHECK(count_irreducible(2, 4) == 3);
    CHECK(count_irreducible(3, 2) == 3);

    for (int d = 2; d <= 12; ++d) {
        std::uint64_t n2 = count_irreducible(2, d);
        CHECK(n2 <= ((1ull << d) - 2) / d);
        CHECK(BigInt(n2) == count_irreducible_moebius(2, d));  // closed-form cross-check
    }
    for (int d = 1; d <= 5; ++d)
        CHECK(BigInt(count_irreducible(3, d)) == count_irreducible_moebius(3, d));

    // coset-count identity: cosets of size d mod 2^n-1 match N_2(d) for d | n
    for (int n = 2; n <= 12; ++n) {
        CosetTable t = cyclotomic_cosets((1u << n) - 1, 2);
        std::map<int, std::uint64_t> per_size;
        for (const auto& c : t.cosets) per_size[static_cast<int>(c.size())]++;
        for (int d = 2; d <= n; ++d)
            if (n % d == 0) CHECK(per_size[d] == count_irreducible(2, d));
    }
}

TEST_CASE("omega and h") {
    BoundRecord r2 = omega_h(2, 2);
    CHECK(r2.h == 1);
    CHECK(r2.omega == Rational(BigInt(2), BigInt(3)));

    BoundRecord r3 = omega_h(2, 3);
    CHECK(r3.h == 1);
    CHECK(to_5dp(r3.omega) == "0.50000");

    BoundRecord r7 = omega_h(2, 7);
    CHECK(r7.h == 3);
    CHECK(to_5dp(r7.omega) == "0.31250");

    BoundRecord r12 = omega_h(2, 12);
    CHECK(r12.h == 4);
    CHECK(to_5dp(r12.omega) == "0.24242");

    BoundRecord big = omega_h(2, 5596);
    CHECK(big.h == 15);
    CHECK(to_5dp(big.omega) == "0.06667");
}

TEST_CASE("brute-force bound oracle (small n)") {
    for (int n = 2; n <= 5; ++n) CHECK(omega_bruteforce(2, n) == omega_h(2, n).omega);
    CHECK(to_5dp(omega_bruteforce(2, 4)) == "0.42857");
}

TEST_CASE("class P membership") {
    FieldCtx f = builtin_field(2, 3);
    CHECK(in_class_P(f, parse_lpoly(f, "g")));
    CHECK(in_class_P(f, parse_lpoly(f, "g*t")));
    CHECK(in_class_P(f, parse_lpoly(f, "t^2 + g*t + 1")));
    CHECK_FALSE(in_class_P(f, parse_lpoly(f, "t + 1")));
    CHECK_FALSE(in_class_P(f, parse_lpoly(f, "g*t^2 + g")));
    // g^7 = 1 is in K, so this has no primitive coefficient
    CHECK_FALSE(in_class_P(f, parse_lpoly(f, "g^7")));
}

TEST_CASE("root lemma on the counterexample parameters") {
    FieldCtx f = builtin_field(2, 3);
    CosetRootReport rep = lemma_root_check(f, 6, parse_lpoly(f, "g"), 6, 1);
    REQUIRE(rep.entries.size() == 1);
    CHECK(rep.entries[0].rep == 1);
    CHECK_FALSE(rep.entries[0].v_vanishes);
    CHECK(rep.entries[0].e_roots <= 1);
    CHECK_FALSE(rep.violated);
}

TEST_CASE("check suites pass on small fields") {
    for (const auto& c : check_coset_lemma(2, 2, 8)) CHECK(c.holds);

    FieldCtx f = builtin_field(2, 3);
    for (const auto& c : check_one_in_ux(f)) CHECK(c.holds);

    FailureStats stats = eta(f, parse_lpoly(f, "g"), 1);
    for (const auto& c : check_epsilon_bounds(f, stats)) CHECK(c.holds);

    for (const auto& c : check_bound_monotonicity(2, 3, 40)) CHECK(c.holds);

    CHECK(check_eta_theorem(3, stats.eta).holds);
}

TEST_CASE("rounding is half-up at five places") {
    CHECK(to_5dp(Rational(BigInt(1), BigInt(3))) == "0.33333");
    CHECK(to_5dp(Rational(BigInt(2), BigInt(3))) == "0.66667");
    CHECK(to_5dp(Rational(BigInt(1), BigInt(200000))) == "0.00001");  // exactly .000005 rounds up
    CHECK(to_5dp(Rational(BigInt(1), BigInt(1))) == "1.00000");
    CHECK(to_5dp(Rational(BigInt(0), BigInt(1))) == "0.00000");
}
