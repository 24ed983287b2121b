// Acceptance suite: one pass/fail line per criterion, nonzero exit when any
// criterion fails. Every expected value is checked exactly (field elements,
// rationals) or at five rounded decimal places where the reference values are
// published that way.

#include <cstdio>
#include <exception>
#include <map>
#include <string>
#include <vector>

#include "epir/analysis.hpp"
#include "epir/moduli.hpp"
#include "epir/poly_text.hpp"
#include "epir/protocol.hpp"

using namespace epir;

namespace {

int g_failures = 0;

void report(int idx, const std::string& desc, bool ok) {
    std::printf("[%s] criterion %d: %s\n", ok ? "PASS" : "FAIL", idx, desc.c_str());
    std::fflush(stdout);
    if (!ok) ++g_failures;
}

template <typename Fn>
bool guarded(Fn&& fn) {
    try {
        return fn();
    } catch (const std::exception& e) {
        std::printf("  exception: %s\n", e.what());
        return false;
    }
}

// Failure fraction of exhaustively executed restricted transcripts for one x.
Rational simulated_epsilon(const FieldCtx& ctx, long long x, const LPoly& F) {
    auto blocks = valid_blocks(ctx, x);
    BigInt fail = 0, total = 0;
    for (long long s = 0; s < ctx.q(); ++s)
        for (long r = 0; r < ctx.p(); ++r)
            for (Elem R : blocks) {
                Transcript t = run_restricted(ctx, x, F, s, r, R);
                if (!t.success) ++fail;
                ++total;
            }
    return Rational(fail, total);
}

bool criterion1() {
    FieldCtx f = builtin_field(2, 3);
    KeyPair kp = keygen(f, 6);
    Transcript t = run_restricted(f, 6, parse_lpoly(f, "g"), 6, 1, parse_elem(f, "g^2+g"));
    bool ok = kp.pk.y == f.from_coeffs({1, 0, 1});          // y = g^2+1
    ok = ok && t.query.size() == 1;
    ok = ok && t.query[0].c1 == f.from_coeffs({1, 0, 1});    // g^2+1
    ok = ok && t.query[0].c2 == f.from_coeffs({0, 1, 1});    // g^2+g
    ok = ok && t.response.c1 == f.from_coeffs({1, 1});       // g+1
    ok = ok && t.response.c2 == f.from_coeffs({0, 0, 1});    // g^2
    ok = ok && t.decoded.has_value() && *t.decoded == f.from_coeffs({0, 1, 1});
    ok = ok && t.expected == f.gen() && !t.success;
    return ok;
}

// Shared by criteria 2, 4 and 6: eta(n, g, g) for the built-in moduli.
std::map<int, FailureStats> g_table1;

bool criterion2() {
    const char* expected[] = {"0.61111", "0.74271", "0.81537", "0.83630",
                              "0.87719", "0.87895", "0.89809", "0.90358"};
    bool ok = true;
    for (int n = 2; n <= 9; ++n) {
        FieldCtx f = builtin_field(2, n);
        g_table1.emplace(n, eta(f, parse_lpoly(f, "g")));
        std::string got = to_5dp(g_table1.at(n).eta);
        if (got != expected[n - 2]) {
            std::printf("  n=%d: eta=%s, reference %s\n", n, got.c_str(), expected[n - 2]);
            ok = false;
        }
    }
    return ok;
}

bool criterion3() {
    struct Row {
        int n;
        int h;
        const char* omega;
    };
    const Row rows[] = {{2, 1, "0.66667"},     {3, 1, "0.50000"},    {4, 2, "0.42857"},
                        {5, 2, "0.37500"},     {6, 2, "0.33333"},    {7, 3, "0.31250"},
                        {12, 4, "0.24242"},    {20, 5, "0.19718"},   {34, 6, "0.16547"},
                        {57, 7, "0.14236"},    {98, 8, "0.12478"},   {169, 9, "0.11101"},
                        {296, 10, "0.09996"},  {522, 11, "0.09089"}, {934, 12, "0.08332"},
                        {1681, 13, "0.07692"}, {3058, 14, "0.07143"}, {5596, 15, "0.06667"}};
    bool ok = true;
    for (const Row& row : rows) {
        BoundRecord rec = omega_h(2, row.n);
        std::string got = to_5dp(rec.omega);
        if (rec.h != row.h || got != row.omega) {
            std::printf("  n=%d: got h=%d omega=%s, reference h=%d omega=%s\n", row.n, rec.h,
                        got.c_str(), row.h, row.omega);
            ok = false;
        }
    }
    return ok;
}

bool criterion4() {
    bool ok = true;
    for (int n : {2, 3}) {
        FieldCtx f = builtin_field(2, n);
        LPoly F = parse_lpoly(f, "g");
        const FailureStats& stats = g_table1.at(n);
        for (long long x = 0; x < f.q(); ++x) {
            Rational analytic = stats.eps[static_cast<std::size_t>(x)];
            Rational simulated = simulated_epsilon(f, x, F);
            if (analytic != simulated) {
                std::printf("  n=%d x=%lld: indicator and transcript fractions differ\n", n, x);
                ok = false;
            }
        }
    }
    return ok;
}

bool criterion5() {
    bool ok = true;
    for (int n = 2; n <= 8; ++n) {
        if (omega_bruteforce(2, n) != omega_h(2, n).omega) {
            std::printf("  n=%d: brute-force and structured bounds differ\n", n);
            ok = false;
        }
    }
    return ok;
}

bool criterion6() {
    bool ok = true;
    auto sweep = [&ok](const std::vector<LemmaCheck>& checks) {
        for (const LemmaCheck& c : checks)
            if (!c.holds) {
                std::printf("  violated: %s [%s] lhs=%s rhs=%s\n", c.name.c_str(),
                            c.scope.c_str(), c.lhs.c_str(), c.rhs.c_str());
                ok = false;
            }
    };

    sweep(check_coset_lemma(2, 2, 12));
    for (int n = 2; n <= 9; ++n) sweep(check_one_in_ux(builtin_field(2, n)));
    for (int n = 2; n <= 4; ++n) {
        FieldCtx f = builtin_field(2, n);
        for (const char* text : {"g", "g*t", "g*t+1"})
            sweep(check_root_lemma(f, parse_lpoly(f, text), text));
    }
    for (int n = 2; n <= 9; ++n)
        sweep(check_epsilon_bounds(builtin_field(2, n), g_table1.at(n)));
    sweep(check_bound_monotonicity(2, 2, 600));
    for (int n = 2; n <= 9; ++n) {
        LemmaCheck c = check_eta_theorem(n, g_table1.at(n).eta);
        if (!c.holds) {
            std::printf("  violated: %s [%s]\n", c.name.c_str(), c.scope.c_str());
            ok = false;
        }
    }
    return ok;
}

bool criterion7() {
    FieldCtx f = builtin_field(2, 3);
    bool ok = true;
    for (long long x = 0; x < 7 && ok; ++x) {
        KeyPair kp = keygen(f, x);
        for (std::uint32_t mv = 1; mv < 8 && ok; ++mv)
            for (long long s = 0; s < 7 && ok; ++s) {
                Elem m{mv};
                Ciphertext c = encrypt(f, kp.pk, m, s);
                if (decrypt(f, x, c) != m) ok = false;
                for (std::uint32_t m2 = 1; m2 < 8 && ok; ++m2)
                    for (long long s2 = 0; s2 < 7 && ok; ++s2) {
                        Ciphertext c2 = encrypt(f, kp.pk, Elem{m2}, s2);
                        if (decrypt(f, x, ct_mul(f, c, c2)) != f.mul(m, Elem{m2})) ok = false;
                    }
            }
    }
    return ok;
}

bool criterion8() {
    bool ok = true;
    for (int n = 2; n <= 8; ++n) {
        Rational structured = omega_h(3, n).omega;
        // full-box oracle where it fits; vertex oracle everywhere (the
        // objective is coordinate-monotone, so the two agree when both run)
        if (n <= 6 && omega_bruteforce(3, n) != structured) {
            std::printf("  omega_3(%d): full-box oracle disagrees\n", n);
            ok = false;
        }
        if (omega_vertices(3, n) != structured) {
            std::printf("  omega_3(%d): vertex oracle disagrees\n", n);
            ok = false;
        }
    }

    FieldCtx f = builtin_field(3, 2);
    LPoly F = parse_lpoly(f, "g");
    FailureStats stats = eta(f, F);
    Rational simulated(0);
    for (long long x = 0; x < f.q(); ++x) {
        Rational sim_x = simulated_epsilon(f, x, F);
        if (sim_x != stats.eps[static_cast<std::size_t>(x)]) {
            std::printf("  GF(3^2) x=%lld: enumeration and simulation differ\n", x);
            ok = false;
        }
        simulated += sim_x;
    }
    if (simulated / BigInt(f.q()) != stats.eta) {
        std::printf("  GF(3^2): eta mismatch between enumeration and simulation\n");
        ok = false;
    }
    return ok;
}

}  // namespace

int main() {
    report(1, "counterexample execution matches the reference transcript exactly",
           guarded(criterion1));
    report(2, "eta(n, g, g) for n = 2..9 matches the published table at 5 dp",
           guarded(criterion2));
    report(3, "all 18 published (n, h(n), omega(n)) triples reproduced", guarded(criterion3));
    report(4, "indicator-based epsilon equals exhaustive transcript fraction (n = 2, 3, all x)",
           guarded(criterion4));
    report(5, "structured omega search equals full brute force for n = 2..8",
           guarded(criterion5));
    report(6, "lemma suite (cosets, U_x, roots, epsilon/eta bounds, monotonicity) all hold",
           guarded(criterion6));
    report(7, "ElGamal roundtrip and homomorphism exhaustive over q = 7", guarded(criterion7));
    report(8, "characteristic-3 generalization: bounds and eta oracles agree",
           guarded(criterion8));

    if (g_failures == 0) {
        std::printf("all 8 acceptance criteria passed\n");
        return 0;
    }
    std::printf("%d acceptance criteria failed\n", g_failures);
    return 1;
}
