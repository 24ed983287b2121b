#include "epir/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <thread>

#include "epir/poly_text.hpp"
#include "epir/protocol.hpp"

namespace epir {

// ---------------------------------------------------------------------------
// Rendering
// ---------------------------------------------------------------------------

std::string to_5dp(const Rational& r) {
    // round half-up at the 5th decimal
    BigInt num = r.numerator() * 100000;
    BigInt den = r.denominator();
    BigInt digits = (2 * num + den) / (2 * den);
    BigInt ip = digits / 100000;
    BigInt fp = digits % 100000;
    std::string frac = fp.str();
    frac.insert(frac.begin(), 5 - frac.size(), '0');
    return ip.str() + "." + frac;
}

// ---------------------------------------------------------------------------
// Cyclotomic cosets
// ---------------------------------------------------------------------------

CosetTable cyclotomic_cosets(std::uint32_t q, long p) {
    CosetTable table;
    table.q = q;
    table.p = p;
    std::vector<bool> seen(q, false);
    for (std::uint32_t j = 0; j < q; ++j) {
        if (seen[j]) continue;
        std::vector<std::uint32_t> coset;
        std::uint64_t v = j;
        do {
            coset.push_back(static_cast<std::uint32_t>(v));
            seen[v] = true;
            v = v * static_cast<std::uint64_t>(p) % q;
        } while (v != j);
        std::sort(coset.begin(), coset.end());
        table.cosets.push_back(std::move(coset));
    }
    std::sort(table.cosets.begin(), table.cosets.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return table;
}

CosetDecomposition decompose(const FieldCtx& ctx, long long x) {
    CosetDecomposition dec;
    dec.x = x;
    const auto blocks = valid_blocks(ctx, x);
    const CosetTable table = cyclotomic_cosets(ctx.q(), ctx.p());
    std::uint32_t covered = 0;
    for (const auto& coset : table.cosets) {
        std::vector<Elem> d_u;
        d_u.reserve(coset.size());
        for (std::uint32_t j : coset) d_u.push_back(ctx.alpha_pow(j));
        size_t inside = 0;
        for (Elem e : d_u) inside += blocks.count(e);
        if (inside == 0) continue;
        if (inside != d_u.size())
            throw ViolatedPartition("valid-block set splits a Frobenius conjugacy class");
        dec.reps.push_back(coset.front());
        dec.lambda[static_cast<int>(coset.size())]++;
        covered += static_cast<std::uint32_t>(coset.size());
        dec.d_sets.emplace(coset.front(), std::move(d_u));
    }
    dec.total = static_cast<std::uint32_t>(blocks.size());
    if (covered != dec.total)
        throw ViolatedPartition("coset union does not reproduce the valid-block set");
    return dec;
}

// ---------------------------------------------------------------------------
// Enumeration engine. All hot-path state is flat arrays over packed element
// values; multiplication goes through the log tables, so the field must have
// a primitive alpha.
// ---------------------------------------------------------------------------

namespace {

struct Engine {
    const FieldCtx& ctx;
    std::uint32_t q;
    std::uint32_t size;
    long p;
    const std::uint32_t* log;
    const std::uint32_t* antilog;
    std::vector<std::uint16_t> subst;  // [beta*size + m] = repr(m) evaluated at beta
    std::vector<std::uint16_t> addc;   // [r*size + v] = v + r (r embedded as constant)
    std::vector<std::uint32_t> f_val;  // F(beta) for every beta
    std::uint32_t f_alpha;

    Engine(const FieldCtx& c, const LPoly& F) : ctx(c), q(c.q()), size(c.field_size()), p(c.p()) {
        if (!ctx.alpha_primitive()) throw GfError("enumeration needs a primitive alpha");
        if (size > 4096) throw IntractableSize("field too large for exhaustive enumeration");
        log = ctx.log_table().data();
        antilog = ctx.antilog_table().data();

        subst.assign(static_cast<size_t>(size) * size, 0);
        const int n = ctx.n();
        for (std::uint32_t b = 0; b < size; ++b) {
            Elem beta{b};
            std::vector<std::uint32_t> pw(n);
            Elem acc = ctx.one();
            for (int j = 0; j < n; ++j) {
                pw[j] = acc.v;
                acc = ctx.mul(acc, beta);
            }
            std::uint16_t* row = subst.data() + static_cast<size_t>(b) * size;
            for (std::uint32_t m = 0; m < size; ++m) {
                Elem v{};
                std::uint32_t t = m;
                for (int j = 0; j < n && t; ++j) {
                    std::uint32_t d = t % static_cast<std::uint32_t>(p);
                    t /= static_cast<std::uint32_t>(p);
                    for (std::uint32_t k = 0; k < d; ++k) v = ctx.add(v, Elem{pw[j]});
                }
                row[m] = static_cast<std::uint16_t>(v.v);
            }
        }

        addc.assign(static_cast<size_t>(p) * size, 0);
        for (long r = 0; r < p; ++r)
            for (std::uint32_t v = 0; v < size; ++v)
                addc[static_cast<size_t>(r) * size + v] =
                    static_cast<std::uint16_t>(ctx.add(Elem{v}, ctx.from_residue(r)).v);

        f_val.assign(size, 0);
        for (std::uint32_t b = 0; b < size; ++b) f_val[b] = ctx.eval_lpoly(F, Elem{b}).v;
        f_alpha = f_val[ctx.alpha().v];
    }

    std::uint32_t pow_idx(std::uint32_t v, std::uint64_t e) const {
        return v ? antilog[static_cast<std::uint64_t>(log[v]) * (e % q) % q] : 0;
    }
    std::uint32_t mul_v(std::uint32_t a, std::uint32_t b) const {
        if (!a || !b) return 0;
        std::uint32_t k = log[a] + log[b];
        return antilog[k >= q ? k - q : k];
    }

    std::vector<std::uint32_t> blocks_for(std::uint32_t x) const {
        const std::uint32_t g = ctx.gen().v;
        const std::uint32_t y = antilog[x % q];
        std::vector<std::uint32_t> out;
        for (std::uint32_t b = 1; b < size; ++b) {
            const std::uint16_t* row = subst.data() + static_cast<size_t>(b) * size;
            std::uint32_t gb = row[g];
            if (gb && row[y] == pow_idx(gb, x)) out.push_back(b);
        }
        return out;
    }

    // sum over (s, r, R) of (1 - H); denominator is p * q * |D|
    std::uint64_t failures_for(std::uint32_t x, const std::vector<std::uint32_t>& blocks) const {
        std::uint64_t fail = 0;
        for (std::uint32_t s = 0; s < q; ++s) {
            const std::uint32_t gs = antilog[s];
            const std::uint32_t ys = antilog[static_cast<std::uint64_t>(x) * s % q];
            for (long r = 0; r < p; ++r) {
                const std::uint16_t* addr = addc.data() + static_cast<size_t>(r) * size;
                const std::uint32_t w = mul_v(ys, addr[f_alpha]);
                for (std::uint32_t b : blocks) {
                    const std::uint16_t* row = subst.data() + static_cast<size_t>(b) * size;
                    const std::uint32_t v = row[gs];
                    bool ok = false;
                    if (v) {
                        const std::uint32_t vx = pow_idx(v, x);
                        const std::uint32_t rhs = mul_v(vx, addr[f_val[b]]);
                        ok = (row[w] == rhs);
                    }
                    fail += !ok;
                }
            }
        }
        return fail;
    }
};

}  // namespace

int indicator_H(const FieldCtx& ctx, long long x, const LPoly& F, long long s, long r, Elem R) {
    Elem g = ctx.gen();
    Elem y = ctx.pow(g, x);
    KPoly V = ctx.repr_as_kpoly(ctx.pow(g, s));
    Elem m = ctx.add(ctx.eval_lpoly(F, ctx.alpha()), ctx.from_residue(r));
    KPoly W = ctx.repr_as_kpoly(ctx.mul(ctx.pow(y, s), m));
    Elem vr = ctx.eval_kpoly(V, R);
    if (vr.v == 0) return 0;
    // E(R) = 0 iff W(R) = V(R)^x (F(R) + r)
    Elem rhs = ctx.mul(ctx.pow(vr, x), ctx.add(ctx.eval_lpoly(F, R), ctx.from_residue(r)));
    return ctx.eval_kpoly(W, R) == rhs ? 1 : 0;
}

Rational epsilon(const FieldCtx& ctx, long long x, const LPoly& F) {
    Engine eng(ctx, F);
    auto blocks = eng.blocks_for(static_cast<std::uint32_t>(x));
    std::uint64_t fail = eng.failures_for(static_cast<std::uint32_t>(x), blocks);
    std::uint64_t den =
        static_cast<std::uint64_t>(ctx.p()) * ctx.q() * static_cast<std::uint64_t>(blocks.size());
    return Rational(BigInt(fail), BigInt(den));
}

FailureStats eta(const FieldCtx& ctx, const LPoly& F, unsigned workers) {
    Engine eng(ctx, F);
    const std::uint32_t q = ctx.q();
    std::vector<std::uint64_t> fails(q);
    std::vector<std::uint32_t> sizes(q);

    if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
    workers = std::min<unsigned>(workers, q);
    auto work = [&](unsigned w) {
        for (std::uint32_t x = w; x < q; x += workers) {
            auto blocks = eng.blocks_for(x);
            sizes[x] = static_cast<std::uint32_t>(blocks.size());
            fails[x] = eng.failures_for(x, blocks);
        }
    };
    if (workers == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w);
        for (auto& t : pool) t.join();
    }

    FailureStats stats;
    stats.p = ctx.p();
    stats.n = ctx.n();
    stats.modulus = kpoly_to_string(ctx.modulus());
    stats.F_text = lpoly_to_string(ctx, F);
    stats.eps.reserve(q);
    stats.d_sizes.assign(sizes.begin(), sizes.end());
    Rational sum(0);
    const BigInt per_x_den = BigInt(ctx.p()) * q;
    for (std::uint32_t x = 0; x < q; ++x) {
        Rational e(BigInt(fails[x]), per_x_den * sizes[x]);
        stats.eps.push_back(e);
        sum += e;
    }
    stats.eta = sum / BigInt(q);
    return stats;
}

// ---------------------------------------------------------------------------
// Irreducible counts
// ---------------------------------------------------------------------------

namespace {

// GF(2) polynomials as bitmasks; returns irreducibles of degree d (no t).
const std::vector<std::uint32_t>& irr2_masks(int d) {
    static std::vector<std::vector<std::uint32_t>> cache;  // cache[d]
    if (d < static_cast<int>(cache.size()) && !cache[d].empty()) return cache[d];
    if (static_cast<int>(cache.size()) <= d) cache.resize(d + 1);

    auto deg = [](std::uint32_t v) { return 31 - __builtin_clz(v); };
    auto mod2 = [&](std::uint32_t a, std::uint32_t b) {
        int db = deg(b);
        while (a && deg(a) >= db) a ^= b << (deg(a) - db);
        return a;
    };

    std::vector<std::uint32_t> out;
    if (d == 1) {
        out = {0b11};  // t + 1 (t itself divides only polynomials with zero constant term)
    } else {
        for (std::uint32_t low = 1; low < (1u << d); low += 2) {
            std::uint32_t cand = (1u << d) | low;
            bool irr = true;
            for (int e = 1; irr && 2 * e <= d; ++e)
                for (std::uint32_t f : irr2_masks(e))
                    if (mod2(cand, f) == 0) {
                        irr = false;
                        break;
                    }
            if (irr) out.push_back(cand);
        }
    }
    cache[d] = std::move(out);
    return cache[d];
}

}  // namespace

std::uint64_t count_irreducible(long p, int d) {
    if (d < 1) throw GfError("degree must be >= 1");
    if (p == 2) {
        if (d == 1) return 2;  // t and t + 1
        if (d > 18) throw IntractableSize("exhaustive irreducible count capped at degree 18");
        return irr2_masks(d).size();
    }
    if (static_cast<double>(d) * std::log2(static_cast<double>(p)) > 18)
        throw IntractableSize("exhaustive irreducible count out of desk range");
    return monic_irreducibles(static_cast<int>(p), d).size();
}

BigInt count_irreducible_moebius(long p, int d) {
    // (1/d) sum_{e | d} mu(e) p^(d/e)
    auto mu = [](int m) {
        int result = 1;
        for (int f = 2; f * f <= m; ++f) {
            if (m % f == 0) {
                m /= f;
                if (m % f == 0) return 0;
                result = -result;
            }
        }
        if (m > 1) result = -result;
        return result;
    };
    BigInt sum = 0;
    for (int e = 1; e <= d; ++e) {
        if (d % e != 0) continue;
        BigInt pw = 1;
        for (int i = 0; i < d / e; ++i) pw *= p;
        sum += mu(e) * pw;
    }
    return sum / d;
}

// ---------------------------------------------------------------------------
// omega(n) and h(n)
// ---------------------------------------------------------------------------

namespace {

// phi_n at the structured point (1, N(2), ..., N(h), 0, ..., 0, 1); h = 1
// means no intermediate degrees.
Rational phi_structured(long p, int n, int h) {
    BigInt num = 2, den = BigInt(n) + 1;
    for (int d = 2; d <= h; ++d) {
        BigInt c(count_irreducible(p, d));
        num += c;
        den += d * c;
    }
    return Rational(num, den);
}

}  // namespace

BoundRecord omega_h(long p, int n) {
    if (n < 2) throw GfError("n must be >= 2");
    BoundRecord rec;
    rec.n = n;
    rec.h = 1;
    rec.omega = phi_structured(p, n, 1);
    for (int h = 2; h <= n - 1; ++h) {
        Rational v = phi_structured(p, n, h);
        if (v <= rec.omega) break;  // decreasing from here on
        rec.omega = v;
        rec.h = h;
    }
    return rec;
}

Rational omega_bruteforce(long p, int n) {
    if (n < 2) throw GfError("n must be >= 2");
    std::vector<std::uint64_t> cap(n + 1, 0);
    cap[1] = 1;
    cap[n] = count_irreducible(p, n);
    double box = 2.0 * cap[n];
    for (int d = 2; d < n; ++d) {
        cap[d] = count_irreducible(p, d);
        box *= static_cast<double>(cap[d] + 1);
    }
    if (box > 2e7) throw IntractableSize("brute-force box too large");

    std::uint64_t best_num = 0, best_den = 1;
    // z_n >= 1, z_1 in {0,1}, z_d in [0, N_p(d)]
    std::vector<std::uint64_t> z(n + 1, 0);
    auto eval = [&]() {
        std::uint64_t s = 0, ds = 0;
        for (int d = 1; d <= n; ++d) {
            s += z[d];
            ds += static_cast<std::uint64_t>(d) * z[d];
        }
        if (s * best_den > best_num * ds) {
            best_num = s;
            best_den = ds;
        }
    };
    auto rec = [&](auto&& self, int d) -> void {
        if (d == n) {
            for (z[n] = 1; z[n] <= cap[n]; ++z[n]) eval();
            return;
        }
        for (z[d] = 0; z[d] <= cap[d]; ++z[d]) self(self, d + 1);
    };
    rec(rec, 1);
    return Rational(BigInt(best_num), BigInt(best_den));
}

Rational omega_vertices(long p, int n) {
    if (n < 2) throw GfError("n must be >= 2");
    std::vector<std::uint64_t> cap(n + 1, 0);
    cap[1] = 1;
    for (int d = 2; d <= n; ++d) cap[d] = count_irreducible(p, d);

    BigInt best_num = 0, best_den = 1;
    // z_1 in {0,1}, z_d in {0, N_p(d)}, z_n in {1, N_p(n)}
    const std::uint64_t combos = 1ull << (n - 1);
    for (std::uint64_t mask = 0; mask < combos; ++mask) {
        BigInt s = 0, ds = 0;
        for (int d = 1; d < n; ++d) {
            std::uint64_t z = (mask >> (d - 1)) & 1 ? cap[d] : 0;
            s += z;
            ds += BigInt(d) * z;
        }
        for (std::uint64_t zn : {std::uint64_t{1}, cap[n]}) {
            BigInt snum = s + zn;
            BigInt sden = ds + BigInt(n) * zn;
            if (snum * best_den > best_num * sden) {
                best_num = snum;
                best_den = sden;
            }
        }
    }
    return Rational(best_num, best_den);
}

// ---------------------------------------------------------------------------
// Class P and the root lemma
// ---------------------------------------------------------------------------

bool in_class_P(const FieldCtx& ctx, const LPoly& F) {
    int outside_k = 0;
    bool primitive_found = false;
    for (Elem c : F.c) {
        if (c.v < static_cast<std::uint32_t>(ctx.p())) continue;  // in K
        ++outside_k;
        primitive_found = ctx.is_primitive(c);
    }
    return outside_k == 1 && primitive_found;
}

CosetRootReport lemma_root_check(const FieldCtx& ctx, long long x, const LPoly& F, long long s,
                                 long r) {
    CosetRootReport report;
    const CosetDecomposition dec = decompose(ctx, x);
    Elem g = ctx.gen();
    Elem y = ctx.pow(g, x);
    KPoly V = ctx.repr_as_kpoly(ctx.pow(g, s));
    Elem m = ctx.add(ctx.eval_lpoly(F, ctx.alpha()), ctx.from_residue(r));
    KPoly W = ctx.repr_as_kpoly(ctx.mul(ctx.pow(y, s), m));

    for (std::uint32_t u : dec.reps) {
        const auto& d_u = dec.d_sets.at(u);
        CosetRootEntry entry;
        entry.rep = u;
        entry.size = static_cast<int>(d_u.size());
        Elem v_at_rep = ctx.eval_kpoly(V, ctx.alpha_pow(u));
        if (v_at_rep.v == 0) {
            entry.v_vanishes = true;
            for (Elem beta : d_u)
                if (ctx.eval_kpoly(V, beta).v != 0)
                    throw ViolatedPartition("V vanishes at a conjugate but not on the class");
        } else {
            for (Elem beta : d_u) {
                Elem rhs = ctx.mul(ctx.pow(ctx.eval_kpoly(V, beta), x),
                                   ctx.add(ctx.eval_lpoly(F, beta), ctx.from_residue(r)));
                if (ctx.eval_kpoly(W, beta) == rhs) ++entry.e_roots;
            }
            if (entry.e_roots >= 2) {
                report.violated = true;
                if (in_class_P(ctx, F))
                    throw LemmaViolation("E has two roots in one conjugacy class for F in P");
            }
        }
        report.entries.push_back(entry);
    }
    return report;
}

// ---------------------------------------------------------------------------
// Check suites
// ---------------------------------------------------------------------------

std::vector<LemmaCheck> check_coset_lemma(long p, int n_min, int n_max) {
    std::vector<LemmaCheck> out;
    for (int n = n_min; n <= n_max; ++n) {
        std::uint64_t q64 = 1;
        for (int i = 0; i < n; ++i) q64 *= static_cast<std::uint64_t>(p);
        std::uint32_t q = static_cast<std::uint32_t>(q64 - 1);
        CosetTable table = cyclotomic_cosets(q, p);

        bool sizes_ok = true;
        std::uint64_t covered = 0;
        std::map<int, std::uint64_t> per_size;
        for (const auto& coset : table.cosets) {
            if (n % coset.size() != 0) sizes_ok = false;
            covered += coset.size();
            per_size[static_cast<int>(coset.size())]++;
        }
        out.push_back({"lemma1i_sizes_divide_n", "n=" + std::to_string(n),
                       "coset sizes", "divisors of n", sizes_ok && covered == q});

        for (int d = 2; d <= n; ++d) {
            if (n % d != 0) continue;
            std::uint64_t expected = count_irreducible(p, d);
            out.push_back({"lemma1ii_coset_count", "n=" + std::to_string(n) + ",d=" + std::to_string(d),
                           std::to_string(per_size[d]), std::to_string(expected),
                           per_size[d] == expected});
        }
        // d = 1: the zero field element has no coset mod q, so one class is missing
        std::uint64_t n1 = count_irreducible(p, 1);
        out.push_back({"lemma1ii_coset_count", "n=" + std::to_string(n) + ",d=1",
                       std::to_string(per_size[1]), std::to_string(n1 - 1), per_size[1] == n1 - 1});
    }
    if (p == 2) {
        for (int d = 2; d <= 12; ++d) {
            std::uint64_t n2 = count_irreducible(2, d);
            std::uint64_t bound = ((1ull << d) - 2) / d;
            out.push_back({"lemma1iii_count_bound", "d=" + std::to_string(d), std::to_string(n2),
                           std::to_string(bound), n2 <= bound});
        }
    }
    return out;
}

std::vector<LemmaCheck> check_one_in_ux(const FieldCtx& ctx) {
    std::vector<LemmaCheck> out;
    bool all = true;
    for (std::uint32_t x = 0; x < ctx.q(); ++x) {
        CosetDecomposition dec = decompose(ctx, x);
        if (std::find(dec.reps.begin(), dec.reps.end(), 1u) == dec.reps.end()) {
            all = false;
            out.push_back({"lemma2_one_in_ux", "n=" + std::to_string(ctx.n()) + ",x=" + std::to_string(x),
                           "U_x", "contains 1", false});
        }
    }
    if (all)
        out.push_back({"lemma2_one_in_ux", "n=" + std::to_string(ctx.n()) + ",all x", "U_x",
                       "contains 1", true});
    return out;
}

std::vector<LemmaCheck> check_epsilon_bounds(const FieldCtx& ctx, const FailureStats& stats) {
    std::vector<LemmaCheck> out;
    const int n = ctx.n();
    const bool n_prime = is_prime(n);
    for (std::uint32_t x = 0; x < ctx.q(); ++x) {
        CosetDecomposition dec = decompose(ctx, x);
        Rational bound = Rational(1) - Rational(BigInt(dec.reps.size()), BigInt(dec.total));
        bool holds = stats.eps[x] >= bound;
        out.push_back({"lemma4_eps_lower_bound", "n=" + std::to_string(n) + ",x=" + std::to_string(x),
                       to_5dp(stats.eps[x]), ">= " + to_5dp(bound), holds});
        if (n_prime) {
            Rational prime_bound = Rational(1) - Rational(BigInt(2), BigInt(n));
            out.push_back({"lemma5_prime_bound", "n=" + std::to_string(n) + ",x=" + std::to_string(x),
                           to_5dp(stats.eps[x]), "> " + to_5dp(prime_bound),
                           stats.eps[x] > prime_bound});
        }
    }
    return out;
}

std::vector<LemmaCheck> check_root_lemma(const FieldCtx& ctx, const LPoly& F,
                                         const std::string& f_label) {
    std::vector<LemmaCheck> out;
    bool all = true;
    for (std::uint32_t x = 0; x < ctx.q() && all; ++x)
        for (std::uint32_t s = 0; s < ctx.q() && all; ++s)
            for (long r = 0; r < ctx.p() && all; ++r) {
                CosetRootReport rep = lemma_root_check(ctx, x, F, s, r);
                if (rep.violated) all = false;
            }
    out.push_back({"lemma3_10_root_property", "n=" + std::to_string(ctx.n()) + ",F=" + f_label,
                   "roots of E per coset", "<= 1 unless V vanishes", all});
    return out;
}

std::vector<LemmaCheck> check_bound_monotonicity(long p, int n_min, int n_max) {
    std::vector<LemmaCheck> out;
    std::vector<BoundRecord> recs;
    for (int n = n_min; n <= n_max; ++n) recs.push_back(omega_h(p, n));
    bool h_mono = true, omega_mono = true, omega_floor = true;
    for (size_t i = 1; i < recs.size(); ++i) {
        if (recs[i].h < recs[i - 1].h) h_mono = false;
        if (recs[i].omega >= recs[i - 1].omega) omega_mono = false;
    }
    for (const auto& r : recs) {
        if (r.n >= 7 && r.omega < Rational(BigInt(5), BigInt(r.n + 9))) omega_floor = false;
    }
    std::string scope = "n=" + std::to_string(n_min) + ".." + std::to_string(n_max);
    out.push_back({"lemma7_h_nondecreasing", scope, "h(n+1)", ">= h(n)", h_mono});
    out.push_back({"lemma8_omega_decreasing", scope, "omega(n+1)", "< omega(n)", omega_mono});
    out.push_back({"lemma9_omega_floor", scope, "omega(n)", ">= 5/(n+9) for n >= 7", omega_floor});
    return out;
}

LemmaCheck check_eta_theorem(int n, const Rational& eta_value) {
    if (n >= 7 && is_prime(n)) {
        Rational bound = Rational(1) - Rational(BigInt(2), BigInt(n));
        return {"theorem_eta_bound", "n=" + std::to_string(n), to_5dp(eta_value),
                ">= 1-2/n = " + to_5dp(bound), eta_value >= bound};
    }
    Rational bound = Rational(1) - omega_h(2, n).omega;
    return {"theorem_eta_bound", "n=" + std::to_string(n), to_5dp(eta_value),
            ">= 1-omega(n) = " + to_5dp(bound), eta_value >= bound};
}

}  // namespace epir
