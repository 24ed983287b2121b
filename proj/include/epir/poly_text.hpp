#ifndef EPIR_POLY_TEXT_HPP
#define EPIR_POLY_TEXT_HPP

#include <string>

#include "epir/gf.hpp"

namespace epir {

struct ParseError : std::runtime_error {
    size_t pos;
    ParseError(const std::string& what, size_t at)
        : std::runtime_error(what + " (at position " + std::to_string(at) + ")"), pos(at) {}
};

// Grammar shared by the CLI: terms `c*t^k`, `t^k`, `t`, `c` joined by `+`,
// where `c` is a decimal residue mod p or `g^j`; whitespace ignored.
// Example: `g^4*t^2 + t + 1`.
LPoly parse_lpoly(const FieldCtx& ctx, const std::string& text);

// Same grammar restricted to residue coefficients (no `g^j`).
KPoly parse_kpoly(int p, const std::string& text);

// A single field element, e.g. `g^2+g` or `g^4` or `1`.
Elem parse_elem(const FieldCtx& ctx, const std::string& text);

// Element as a K-polynomial in g, e.g. `g^2+g`, `1`, `0`.
std::string elem_to_string(const FieldCtx& ctx, Elem a);
// Both notations when a power annotation exists: `g^4 = g^2+g`.
std::string elem_to_annotated_string(const FieldCtx& ctx, Elem a);

std::string kpoly_to_string(const KPoly& poly, char var = 't');
std::string lpoly_to_string(const FieldCtx& ctx, const LPoly& poly, char var = 't');

}  // namespace epir

#endif
