#include "epir/gf.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace epir {

bool is_prime(long v) {
    if (v < 2) return false;
    for (long d = 2; d * d <= v; ++d)
        if (v % d == 0) return false;
    return true;
}

// ---------------------------------------------------------------------------
// KPoly arithmetic
// ---------------------------------------------------------------------------

static void trim(std::vector<int>& c) {
    while (!c.empty() && c.back() == 0) c.pop_back();
}

KPoly KPoly::from_coeffs(std::vector<int> coeffs, int p) {
    for (int& x : coeffs) x = ((x % p) + p) % p;
    trim(coeffs);
    return KPoly{std::move(coeffs)};
}

KPoly kpoly_add(const KPoly& a, const KPoly& b, int p) {
    std::vector<int> c(std::max(a.c.size(), b.c.size()), 0);
    for (size_t i = 0; i < c.size(); ++i) c[i] = (a.coeff(static_cast<int>(i)) + b.coeff(static_cast<int>(i))) % p;
    trim(c);
    return KPoly{std::move(c)};
}

KPoly kpoly_sub(const KPoly& a, const KPoly& b, int p) {
    std::vector<int> c(std::max(a.c.size(), b.c.size()), 0);
    for (size_t i = 0; i < c.size(); ++i)
        c[i] = ((a.coeff(static_cast<int>(i)) - b.coeff(static_cast<int>(i))) % p + p) % p;
    trim(c);
    return KPoly{std::move(c)};
}

KPoly kpoly_mul(const KPoly& a, const KPoly& b, int p) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<int> c(a.c.size() + b.c.size() - 1, 0);
    for (size_t i = 0; i < a.c.size(); ++i)
        for (size_t j = 0; j < b.c.size(); ++j)
            c[i + j] = (c[i + j] + a.c[i] * b.c[j]) % p;
    trim(c);
    return KPoly{std::move(c)};
}

static int inv_mod(int a, int p) {
    a = ((a % p) + p) % p;
    for (int x = 1; x < p; ++x)
        if (a * x % p == 1) return x;
    throw GfError("no inverse mod p");
}

KPoly kpoly_mod(const KPoly& a, const KPoly& b, int p) {
    if (b.is_zero()) throw GfError("division by zero polynomial");
    std::vector<int> r = a.c;
    const int db = b.degree();
    const int lead_inv = inv_mod(b.c.back(), p);
    while (static_cast<int>(r.size()) - 1 >= db && !r.empty()) {
        int dr = static_cast<int>(r.size()) - 1;
        int f = r.back() * lead_inv % p;
        for (int i = 0; i <= db; ++i)
            r[dr - db + i] = ((r[dr - db + i] - f * b.c[i]) % p + p) % p;
        trim(r);
    }
    return KPoly{std::move(r)};
}

const std::vector<KPoly>& monic_irreducibles(int p, int d) {
    static std::map<std::pair<int, int>, std::vector<KPoly>> cache;
    auto key = std::make_pair(p, d);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;

    std::vector<KPoly> out;
    // enumerate monic degree-d polynomials by base-p counter over the low coeffs
    std::uint64_t count = 1;
    for (int i = 0; i < d; ++i) count *= static_cast<std::uint64_t>(p);
    for (std::uint64_t idx = 0; idx < count; ++idx) {
        std::vector<int> c(d + 1, 0);
        std::uint64_t t = idx;
        for (int i = 0; i < d; ++i) {
            c[i] = static_cast<int>(t % p);
            t /= p;
        }
        c[d] = 1;
        KPoly poly{std::move(c)};
        if (kpoly_irreducible(poly, p)) out.push_back(std::move(poly));
    }
    return cache.emplace(key, std::move(out)).first->second;
}

bool kpoly_irreducible(const KPoly& poly, int p) {
    const int d = poly.degree();
    if (d < 1) throw GfError("irreducibility needs degree >= 1");
    if (d == 1) return true;
    if (poly.coeff(0) == 0) return false;  // divisible by t
    for (int e = 1; 2 * e <= d; ++e)
        for (const KPoly& f : monic_irreducibles(p, e))
            if (kpoly_mod(poly, f, p).is_zero()) return false;
    return true;
}

// ---------------------------------------------------------------------------
// FieldCtx
// ---------------------------------------------------------------------------

FieldCtx::FieldCtx(long p, int n, KPoly modulus, std::uint64_t table_cap)
    : p_(p), n_(n), modulus_(std::move(modulus)) {
    if (!is_prime(p)) throw NonPrimeP(p);
    if (n < 2) throw GfError("extension degree must be >= 2");
    if (!modulus_.is_monic() || modulus_.degree() != n)
        throw GfError("modulus must be monic of degree n");
    std::uint64_t size = 1;
    for (int i = 0; i < n; ++i) {
        size *= static_cast<std::uint64_t>(p);
        if (size > table_cap) throw TableCapExceeded("p^n exceeds the table cap");
    }
    if (!kpoly_irreducible(modulus_, static_cast<int>(p)))
        throw ReducibleModulus("modulus factors over GF(p)");

    size_ = static_cast<std::uint32_t>(size);
    q_ = size_ - 1;
    place_.resize(n_);
    place_[0] = 1;
    for (int j = 1; j < n_; ++j) place_[j] = place_[j - 1] * static_cast<std::uint32_t>(p_);

    // powers of alpha until we return to 1; alpha primitive iff that takes q steps
    std::vector<std::uint32_t> pows;
    pows.reserve(q_);
    Elem a = one();
    do {
        pows.push_back(a.v);
        a = mul_by_alpha(a);
    } while (a.v != 1 && pows.size() <= q_);
    alpha_order_ = static_cast<std::uint32_t>(pows.size());
    alpha_primitive_ = (alpha_order_ == q_);
    if (alpha_primitive_) {
        antilog_ = std::move(pows);
        log_.assign(size_, 0);
        for (std::uint32_t k = 0; k < q_; ++k) log_[antilog_[k]] = k;
    }
}

Elem FieldCtx::from_coeffs(const std::vector<int>& coeffs) const {
    if (static_cast<int>(coeffs.size()) > n_) throw GfError("too many coefficients");
    std::uint32_t v = 0;
    for (size_t j = 0; j < coeffs.size(); ++j) {
        int c = ((coeffs[j] % static_cast<int>(p_)) + static_cast<int>(p_)) % static_cast<int>(p_);
        v += static_cast<std::uint32_t>(c) * place_[j];
    }
    return Elem{v};
}

std::vector<int> FieldCtx::coeffs(Elem a) const {
    std::vector<int> out(n_);
    std::uint32_t v = a.v;
    for (int j = 0; j < n_; ++j) {
        out[j] = static_cast<int>(v % static_cast<std::uint32_t>(p_));
        v /= static_cast<std::uint32_t>(p_);
    }
    return out;
}

Elem FieldCtx::add(Elem a, Elem b) const {
    if (p_ == 2) return Elem{a.v ^ b.v};
    std::uint32_t v = 0, x = a.v, y = b.v;
    for (int j = 0; j < n_; ++j) {
        std::uint32_t s = (x % p_ + y % p_) % static_cast<std::uint32_t>(p_);
        v += s * place_[j];
        x /= static_cast<std::uint32_t>(p_);
        y /= static_cast<std::uint32_t>(p_);
    }
    return Elem{v};
}

Elem FieldCtx::neg(Elem a) const {
    if (p_ == 2) return a;
    std::uint32_t v = 0, x = a.v;
    for (int j = 0; j < n_; ++j) {
        std::uint32_t d = x % static_cast<std::uint32_t>(p_);
        v += (d == 0 ? 0 : static_cast<std::uint32_t>(p_) - d) * place_[j];
        x /= static_cast<std::uint32_t>(p_);
    }
    return Elem{v};
}

Elem FieldCtx::sub(Elem a, Elem b) const { return add(a, neg(b)); }

Elem FieldCtx::mul_by_alpha(Elem a) const {
    // shift coefficients up one place, then reduce the alpha^n overflow
    auto c = coeffs(a);
    int top = c[n_ - 1];
    std::uint32_t v = 0;
    for (int j = n_ - 1; j >= 1; --j) v += static_cast<std::uint32_t>(c[j - 1]) * place_[j];
    if (top != 0) {
        // alpha^n = -(m_0 + m_1 alpha + ... + m_{n-1} alpha^{n-1})
        Elem shifted{v};
        std::vector<int> red(n_);
        for (int j = 0; j < n_; ++j)
            red[j] = static_cast<int>((static_cast<long>(p_) - modulus_.coeff(j)) % p_ * top % p_);
        return add(shifted, from_coeffs(red));
    }
    return Elem{v};
}

Elem FieldCtx::mul_direct(Elem a, Elem b) const {
    auto ca = coeffs(a);
    auto cb = coeffs(b);
    std::vector<int> prod(2 * n_ - 1, 0);
    for (int i = 0; i < n_; ++i) {
        if (ca[i] == 0) continue;
        for (int j = 0; j < n_; ++j)
            prod[i + j] = static_cast<int>((prod[i + j] + static_cast<long>(ca[i]) * cb[j]) % p_);
    }
    KPoly r = kpoly_mod(KPoly::from_coeffs(std::move(prod), static_cast<int>(p_)), modulus_,
                        static_cast<int>(p_));
    std::vector<int> rc = r.c;
    rc.resize(n_, 0);
    return from_coeffs(rc);
}

Elem FieldCtx::mul(Elem a, Elem b) const {
    if (a.v == 0 || b.v == 0) return {};
    if (alpha_primitive_) {
        std::uint64_t k = static_cast<std::uint64_t>(log_[a.v]) + log_[b.v];
        if (k >= q_) k -= q_;
        return Elem{antilog_[k]};
    }
    return mul_direct(a, b);
}

Elem FieldCtx::pow(Elem a, long long e) const {
    if (a.v == 0) {
        if (e == 0) return one();  // empty product, matches Horner semantics
        if (e < 0) throw ZeroInverse{};
        return {};
    }
    long long m = e % static_cast<long long>(q_);
    if (m < 0) m += q_;
    if (alpha_primitive_) {
        std::uint64_t k = static_cast<std::uint64_t>(log_[a.v]) * static_cast<std::uint64_t>(m) % q_;
        return Elem{antilog_[k]};
    }
    Elem r = one(), base = a;
    while (m > 0) {
        if (m & 1) r = mul(r, base);
        base = mul(base, base);
        m >>= 1;
    }
    return r;
}

Elem FieldCtx::inv(Elem a) const {
    if (a.v == 0) throw ZeroInverse{};
    return pow(a, static_cast<long long>(q_) - 1);
}

std::uint32_t FieldCtx::order(Elem a) const {
    if (a.v == 0) throw ZeroElement{};
    if (alpha_primitive_) return q_ / std::gcd(q_, log_[a.v]);
    Elem x = a;
    std::uint32_t m = 1;
    while (x.v != 1) {
        x = mul(x, a);
        ++m;
    }
    return m;
}

Elem FieldCtx::alpha_pow(std::uint64_t k) const {
    if (alpha_primitive_) return Elem{antilog_[k % q_]};
    return pow(alpha(), static_cast<long long>(k % alpha_order_));
}

std::uint32_t FieldCtx::dlog(Elem a) const {
    if (a.v == 0) throw ZeroElement{};
    if (!alpha_primitive_) throw GfError("dlog requires a primitive alpha");
    return log_[a.v];
}

KPoly FieldCtx::repr_as_kpoly(Elem a) const {
    return KPoly::from_coeffs(coeffs(a), static_cast<int>(p_));
}

Elem FieldCtx::eval_kpoly(const KPoly& poly, Elem beta) const {
    Elem acc{};
    for (int k = poly.degree(); k >= 0; --k)
        acc = add(mul(acc, beta), from_residue(poly.coeff(k)));
    return acc;
}

Elem FieldCtx::eval_lpoly(const LPoly& poly, Elem beta) const {
    Elem acc{};
    for (int k = poly.degree(); k >= 0; --k) acc = add(mul(acc, beta), poly.c[k]);
    return acc;
}

}  // namespace epir
