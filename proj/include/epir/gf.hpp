#ifndef EPIR_GF_HPP
#define EPIR_GF_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace epir {

// ---------------------------------------------------------------------------
// Errors
// ---------------------------------------------------------------------------

struct GfError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NonPrimeP : GfError {
    explicit NonPrimeP(long p) : GfError("p = " + std::to_string(p) + " is not prime") {}
};
struct ReducibleModulus : GfError {
    explicit ReducibleModulus(const std::string& what) : GfError(what) {}
};
struct TableCapExceeded : GfError {
    explicit TableCapExceeded(const std::string& what) : GfError(what) {}
};
struct ZeroInverse : GfError {
    ZeroInverse() : GfError("inverse of zero field element") {}
};
struct ZeroElement : GfError {
    ZeroElement() : GfError("multiplicative order of zero is undefined") {}
};

// ---------------------------------------------------------------------------
// KPoly: polynomial over K = GF(p), coefficients lowest degree first.
// Canonical form has no trailing zero coefficient; zero is the empty vector.
// ---------------------------------------------------------------------------

struct KPoly {
    std::vector<int> c;

    KPoly() = default;
    explicit KPoly(std::vector<int> coeffs) : c(std::move(coeffs)) {}

    static KPoly from_coeffs(std::vector<int> coeffs, int p);

    bool is_zero() const { return c.empty(); }
    int degree() const { return static_cast<int>(c.size()) - 1; }  // -1 for zero
    int coeff(int k) const { return k >= 0 && k < static_cast<int>(c.size()) ? c[k] : 0; }
    bool is_monic() const { return !c.empty() && c.back() == 1; }

    friend bool operator==(const KPoly& a, const KPoly& b) { return a.c == b.c; }
};

KPoly kpoly_add(const KPoly& a, const KPoly& b, int p);
KPoly kpoly_sub(const KPoly& a, const KPoly& b, int p);
KPoly kpoly_mul(const KPoly& a, const KPoly& b, int p);
// Remainder of a mod b (b nonzero, leading coefficient invertible mod p).
KPoly kpoly_mod(const KPoly& a, const KPoly& b, int p);

// Irreducibility over GF(p) by trial division against monic irreducibles of
// degree <= deg/2. Desk scale; fine up to degree ~20 for p = 2.
bool kpoly_irreducible(const KPoly& poly, int p);

// All monic irreducible polynomials of a given degree over GF(p) (cached).
const std::vector<KPoly>& monic_irreducibles(int p, int d);

bool is_prime(long v);

// ---------------------------------------------------------------------------
// Elem: element of L = GF(p^n), packed as sum coeff_j * p^j where coeff_j is
// the coefficient of alpha^j. For p = 2 this is the usual bitmask encoding.
// ---------------------------------------------------------------------------

struct Elem {
    std::uint32_t v = 0;

    friend bool operator==(Elem a, Elem b) { return a.v == b.v; }
    friend bool operator!=(Elem a, Elem b) { return a.v != b.v; }
    friend bool operator<(Elem a, Elem b) { return a.v < b.v; }
};

// ---------------------------------------------------------------------------
// LPoly: polynomial over L, coefficients lowest degree first, canonical.
// ---------------------------------------------------------------------------

struct LPoly {
    std::vector<Elem> c;

    LPoly() = default;
    explicit LPoly(std::vector<Elem> coeffs) : c(std::move(coeffs)) { trim(); }

    void trim() {
        while (!c.empty() && c.back().v == 0) c.pop_back();
    }
    bool is_zero() const { return c.empty(); }
    int degree() const { return static_cast<int>(c.size()) - 1; }

    friend bool operator==(const LPoly& a, const LPoly& b) { return a.c == b.c; }
};

// ---------------------------------------------------------------------------
// FieldCtx: L = GF(p^n) fixed by (p, n, modulus). Immutable after
// construction; all operations are pure and safe to share across threads.
// ---------------------------------------------------------------------------

class FieldCtx {
public:
    static constexpr std::uint64_t kDefaultTableCap = 1u << 20;

    // Throws NonPrimeP / ReducibleModulus / TableCapExceeded.
    FieldCtx(long p, int n, KPoly modulus, std::uint64_t table_cap = kDefaultTableCap);

    long p() const { return p_; }
    int n() const { return n_; }
    std::uint32_t q() const { return q_; }
    const KPoly& modulus() const { return modulus_; }
    bool alpha_primitive() const { return alpha_primitive_; }
    std::uint32_t field_size() const { return size_; }

    Elem zero() const { return {}; }
    Elem one() const { return Elem{1}; }
    Elem alpha() const { return Elem{static_cast<std::uint32_t>(p_)}; }
    // Protocol generator g; requires a primitive modulus so g = alpha.
    Elem gen() const { return alpha(); }

    Elem from_coeffs(const std::vector<int>& coeffs) const;
    std::vector<int> coeffs(Elem a) const;
    // Embed a residue of K as a constant of L.
    Elem from_residue(long r) const { return Elem{static_cast<std::uint32_t>(((r % p_) + p_) % p_)}; }

    Elem add(Elem a, Elem b) const;
    Elem sub(Elem a, Elem b) const;
    Elem neg(Elem a) const;
    Elem mul(Elem a, Elem b) const;
    Elem inv(Elem a) const;           // throws ZeroInverse
    Elem pow(Elem a, long long e) const;

    std::uint32_t order(Elem a) const;  // throws ZeroElement
    bool is_primitive(Elem a) const { return a.v != 0 && order(a) == q_; }

    // alpha^k for 0 <= k < q (log-table backed when alpha is primitive).
    Elem alpha_pow(std::uint64_t k) const;
    // Discrete log base alpha; only valid when alpha is primitive and a != 0.
    std::uint32_t dlog(Elem a) const;

    // The unique P in K[t] with deg P < n and P(alpha) = a.
    KPoly repr_as_kpoly(Elem a) const;

    Elem eval_kpoly(const KPoly& poly, Elem beta) const;
    Elem eval_lpoly(const LPoly& poly, Elem beta) const;

    // Raw-table access for the enumeration hot paths.
    const std::vector<std::uint32_t>& antilog_table() const { return antilog_; }
    const std::vector<std::uint32_t>& log_table() const { return log_; }

private:
    Elem mul_direct(Elem a, Elem b) const;
    Elem mul_by_alpha(Elem a) const;

    long p_;
    int n_;
    std::uint32_t q_;
    std::uint32_t size_;  // p^n
    KPoly modulus_;
    bool alpha_primitive_ = false;
    std::uint32_t alpha_order_ = 0;
    std::vector<std::uint32_t> antilog_;  // antilog_[k] = alpha^k, size q when primitive
    std::vector<std::uint32_t> log_;      // log_[antilog_[k]] = k
    std::vector<std::uint32_t> place_;    // place_[j] = p^j
};

// free-function constructor alias used by the protocol code.
inline FieldCtx field_new(long p, int n, KPoly modulus,
                          std::uint64_t table_cap = FieldCtx::kDefaultTableCap) {
    return FieldCtx(p, n, std::move(modulus), table_cap);
}

}  // namespace epir

#endif
