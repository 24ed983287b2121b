#include "epir/poly_text.hpp"

#include <cctype>

namespace epir {

namespace {

struct Scanner {
    const std::string& s;
    size_t i = 0;

    explicit Scanner(const std::string& text) : s(text) { skip_ws(); }

    void skip_ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool done() const { return i >= s.size(); }
    char peek() const { return s[i]; }
    bool accept(char c) {
        if (!done() && s[i] == c) {
            ++i;
            skip_ws();
            return true;
        }
        return false;
    }
    long number() {
        if (done() || !std::isdigit(static_cast<unsigned char>(s[i])))
            throw ParseError("expected a number", i);
        long v = 0;
        while (!done() && std::isdigit(static_cast<unsigned char>(s[i]))) {
            v = v * 10 + (s[i] - '0');
            ++i;
        }
        skip_ws();
        return v;
    }
};

struct Term {
    Elem coeff;
    long deg = 0;
};

// term := factor ('*' factor)* ; factor := number | 'g' ['^' number]
//                                        | 't' ['^' number]
// This covers the canonical forms `c*t^k`, `t^k`, `t`, `c` (with c a residue
// or a power of g) and the residue-times-power products `2*g^3` that show up
// in the K-polynomial rendering for odd p.
Term parse_term(Scanner& sc, const FieldCtx& ctx) {
    Term t;
    t.coeff = ctx.one();
    bool any = false;
    for (;;) {
        if (!sc.done() && std::isdigit(static_cast<unsigned char>(sc.peek()))) {
            t.coeff = ctx.mul(t.coeff, ctx.from_residue(sc.number()));
        } else if (!sc.done() && sc.peek() == 'g') {
            sc.accept('g');
            long e = sc.accept('^') ? sc.number() : 1;
            t.coeff = ctx.mul(t.coeff, ctx.alpha_pow(static_cast<std::uint64_t>(e)));
        } else if (!sc.done() && sc.peek() == 't') {
            sc.accept('t');
            t.deg += sc.accept('^') ? sc.number() : 1;
        } else {
            throw ParseError(any ? "expected a factor after '*'" : "expected a term", sc.i);
        }
        any = true;
        if (!sc.accept('*')) break;
    }
    return t;
}

}  // namespace

LPoly parse_lpoly(const FieldCtx& ctx, const std::string& text) {
    Scanner sc(text);
    std::vector<Elem> coeffs;
    for (;;) {
        Term t = parse_term(sc, ctx);
        if (t.deg >= static_cast<long>(coeffs.size())) coeffs.resize(t.deg + 1, Elem{});
        coeffs[t.deg] = ctx.add(coeffs[t.deg], t.coeff);
        if (sc.done()) break;
        if (!sc.accept('+')) throw ParseError("expected '+'", sc.i);
    }
    return LPoly{std::move(coeffs)};
}

KPoly parse_kpoly(int p, const std::string& text) {
    Scanner sc(text);
    std::vector<int> coeffs;
    for (;;) {
        if (!sc.done() && sc.peek() == 'g') throw ParseError("g not allowed in a K-polynomial", sc.i);
        long c = 1;
        bool have_coeff = false;
        if (!sc.done() && std::isdigit(static_cast<unsigned char>(sc.peek()))) {
            c = sc.number();
            have_coeff = true;
        }
        bool star = sc.accept('*');
        long deg = 0;
        if (!sc.done() && sc.peek() == 't') {
            sc.accept('t');
            deg = sc.accept('^') ? sc.number() : 1;
        } else if (star || !have_coeff) {
            throw ParseError("expected a term", sc.i);
        }
        if (deg >= static_cast<long>(coeffs.size())) coeffs.resize(deg + 1, 0);
        coeffs[deg] = static_cast<int>((coeffs[deg] + c) % p);
        if (sc.done()) break;
        if (!sc.accept('+')) throw ParseError("expected '+'", sc.i);
    }
    return KPoly::from_coeffs(std::move(coeffs), p);
}

Elem parse_elem(const FieldCtx& ctx, const std::string& text) {
    LPoly poly = parse_lpoly(ctx, text);
    if (poly.degree() > 0) throw ParseError("expected a field element, got a polynomial in t", 0);
    return poly.is_zero() ? ctx.zero() : poly.c[0];
}

namespace {

std::string poly_string(const std::vector<int>& coeffs, char var) {
    std::string out;
    for (int k = static_cast<int>(coeffs.size()) - 1; k >= 0; --k) {
        int c = coeffs[k];
        if (c == 0) continue;
        if (!out.empty()) out += '+';
        if (k == 0) {
            out += std::to_string(c);
        } else {
            if (c != 1) out += std::to_string(c) + "*";
            out += var;
            if (k > 1) out += "^" + std::to_string(k);
        }
    }
    return out.empty() ? "0" : out;
}

}  // namespace

std::string elem_to_string(const FieldCtx& ctx, Elem a) {
    return poly_string(ctx.coeffs(a), 'g');
}

std::string elem_to_annotated_string(const FieldCtx& ctx, Elem a) {
    std::string base = elem_to_string(ctx, a);
    if (a.v == 0 || !ctx.alpha_primitive()) return base;
    std::uint32_t k = ctx.dlog(a);
    if (k <= 1) return base;  // 1 and g already read as powers
    return "g^" + std::to_string(k) + " = " + base;
}

std::string kpoly_to_string(const KPoly& poly, char var) {
    return poly_string(poly.c, var);
}

std::string lpoly_to_string(const FieldCtx& ctx, const LPoly& poly, char var) {
    if (poly.is_zero()) return "0";
    std::string out;
    for (int k = poly.degree(); k >= 0; --k) {
        Elem c = poly.c[k];
        if (c.v == 0) continue;
        if (!out.empty()) out += " + ";
        // coefficients in K print as residues, others in g^j power form so the
        // output stays inside the term grammar and re-parses
        std::string cs;
        if (c.v < static_cast<std::uint32_t>(ctx.p())) {
            cs = std::to_string(c.v);
        } else {
            std::uint32_t e = ctx.dlog(c);
            cs = e == 1 ? "g" : "g^" + std::to_string(e);
        }
        if (k == 0) {
            out += cs;
        } else {
            if (c != ctx.one()) out += cs + "*";
            out += var;
            if (k > 1) out += "^" + std::to_string(k);
        }
    }
    return out;
}

}  // namespace epir
