#ifndef EPIR_MODULI_HPP
#define EPIR_MODULI_HPP

#include <optional>

#include "epir/gf.hpp"

namespace epir {

struct UnknownModulus : GfError {
    explicit UnknownModulus(const std::string& what) : GfError(what) {}
};

// Built-in primitive moduli: the published Min_g(t) table for p = 2,
// n = 2..9, plus small primitive polynomials for p = 3.
std::optional<KPoly> builtin_modulus(long p, int n);

// Field with the built-in modulus; throws UnknownModulus when absent.
FieldCtx builtin_field(long p, int n);

}  // namespace epir

#endif
