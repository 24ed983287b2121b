#ifndef EPIR_ANALYSIS_HPP
#define EPIR_ANALYSIS_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>
#include <map>
#include <string>
#include <vector>

#include "epir/gf.hpp"

namespace epir {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::rational<BigInt>;

struct ViolatedPartition : GfError {
    explicit ViolatedPartition(const std::string& what) : GfError(what) {}
};
struct LemmaViolation : GfError {
    explicit LemmaViolation(const std::string& what) : GfError(what) {}
};
struct IntractableSize : GfError {
    explicit IntractableSize(const std::string& what) : GfError(what) {}
};

// Decimal rendering to 5 places, round half-up.
std::string to_5dp(const Rational& r);

// ---------------------------------------------------------------------------
// Cyclotomic cosets mod q = p^n - 1
// ---------------------------------------------------------------------------

struct CosetTable {
    std::uint32_t q = 0;
    long p = 2;
    // each coset sorted ascending; representative = front(); table sorted by rep
    std::vector<std::vector<std::uint32_t>> cosets;
};

CosetTable cyclotomic_cosets(std::uint32_t q, long p);

// Coset decomposition of the valid-block set for one key x.
struct CosetDecomposition {
    long long x = 0;
    std::vector<std::uint32_t> reps;                     // U_x
    std::map<std::uint32_t, std::vector<Elem>> d_sets;   // rep -> D_u
    std::map<int, int> lambda;                           // coset size d -> count
    std::uint32_t total = 0;                             // |D_{n,g,x}|
};

CosetDecomposition decompose(const FieldCtx& ctx, long long x);

// ---------------------------------------------------------------------------
// Failure probability (exact rationals)
// ---------------------------------------------------------------------------

// Success predicate of one restricted execution: V(R) != 0 and E(R) = 0.
int indicator_H(const FieldCtx& ctx, long long x, const LPoly& F, long long s, long r, Elem R);

struct FailureStats {
    long p = 2;
    int n = 0;
    std::string modulus;
    std::string F_text;
    std::vector<Rational> eps;            // indexed by x in Z_q
    std::vector<std::uint32_t> d_sizes;   // |D_{n,g,x}| per x
    Rational eta;
};

Rational epsilon(const FieldCtx& ctx, long long x, const LPoly& F);

// Averages epsilon over all keys; fans the per-x sums out over `workers`
// threads (0 = hardware concurrency). The merge is exact and order-fixed, so
// the worker count never changes the result.
FailureStats eta(const FieldCtx& ctx, const LPoly& F, unsigned workers = 0);

// ---------------------------------------------------------------------------
// Irreducible-polynomial counts and the omega/h bound machinery
// ---------------------------------------------------------------------------

// Monic irreducible degree-d count over GF(p) by exhaustive testing.
std::uint64_t count_irreducible(long p, int d);
// Moebius-inversion closed form, used only as a cross-check oracle.
BigInt count_irreducible_moebius(long p, int d);

struct BoundRecord {
    int n = 0;
    int h = 0;
    Rational omega;
};

// Structured search over the cutoff degree h (exact rationals). The profile
// phi(h) rises while 1/(h+1) exceeds it and then decreases for good, since
// each step mixes in a block of ratio 1/(h+1); the search stops at the first
// non-increase, so only small-degree counts are ever needed.
BoundRecord omega_h(long p, int n);

// Exhaustive maximization over the full box; the independent oracle for
// omega_h. Refuses when the box has more than ~2e7 points.
Rational omega_bruteforce(long p, int n);

// Exhaustive maximization over the box vertices. The objective is a ratio of
// positive linear forms, so it is monotone in each coordinate and the box
// maximum sits at a vertex; this stays tractable where the full box is not.
Rational omega_vertices(long p, int n);

// ---------------------------------------------------------------------------
// Polynomial class P and the root lemma
// ---------------------------------------------------------------------------

// Exactly one coefficient of multiplicative order q, all others in K.
bool in_class_P(const FieldCtx& ctx, const LPoly& F);

struct CosetRootEntry {
    std::uint32_t rep = 0;
    int size = 0;
    bool v_vanishes = false;  // V = 0 on all of D_u
    int e_roots = 0;          // roots of E in D_u (when V does not vanish)
};

struct CosetRootReport {
    std::vector<CosetRootEntry> entries;
    bool violated = false;  // some coset with V != 0 has >= 2 roots of E
};

// Per-coset root audit for one (x, s, r). Throws LemmaViolation when F is in
// P and a coset carries two roots of E, which would falsify the root lemma.
CosetRootReport lemma_root_check(const FieldCtx& ctx, long long x, const LPoly& F, long long s,
                                 long r);

// ---------------------------------------------------------------------------
// Lemma / bound verification reports
// ---------------------------------------------------------------------------

struct LemmaCheck {
    std::string name;
    std::string scope;  // "n=7" or "n=3,x=5"
    std::string lhs;
    std::string rhs;
    bool holds = false;
};

// Coset-structure checks: sizes divide n, per-size counts match N_p(d),
// N_2(d) <= (2^d - 2)/d.
std::vector<LemmaCheck> check_coset_lemma(long p, int n_min, int n_max);
// 1 in U_x for every x.
std::vector<LemmaCheck> check_one_in_ux(const FieldCtx& ctx);
// eps_x >= 1 - |U_x|/|D_x| per x, and eps_x > 1 - 2/n when n is prime.
std::vector<LemmaCheck> check_epsilon_bounds(const FieldCtx& ctx, const FailureStats& stats);
// Exhaustive root-lemma sweep over all (x, s, r) for one F.
std::vector<LemmaCheck> check_root_lemma(const FieldCtx& ctx, const LPoly& F,
                                         const std::string& f_label);
// h(n) non-decreasing, omega(n) strictly decreasing, omega(n) >= 5/(n+9).
std::vector<LemmaCheck> check_bound_monotonicity(long p, int n_min, int n_max);
// eta >= 1 - omega(n), or 1 - 2/n for prime n >= 7.
LemmaCheck check_eta_theorem(int n, const Rational& eta_value);

}  // namespace epir

#endif
