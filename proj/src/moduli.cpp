#include "epir/moduli.hpp"

namespace epir {

std::optional<KPoly> builtin_modulus(long p, int n) {
    // coefficients lowest degree first
    if (p == 2) {
        switch (n) {
            case 2: return KPoly{{1, 1, 1}};                       // t^2+t+1
            case 3: return KPoly{{1, 1, 0, 1}};                    // t^3+t+1
            case 4: return KPoly{{1, 1, 0, 0, 1}};                 // t^4+t+1
            case 5: return KPoly{{1, 0, 1, 0, 0, 1}};              // t^5+t^2+1
            case 6: return KPoly{{1, 1, 0, 1, 1, 0, 1}};           // t^6+t^4+t^3+t+1
            case 7: return KPoly{{1, 1, 0, 0, 0, 0, 0, 1}};        // t^7+t+1
            case 8: return KPoly{{1, 0, 1, 1, 1, 0, 0, 0, 1}};     // t^8+t^4+t^3+t^2+1
            case 9: return KPoly{{1, 0, 0, 0, 1, 0, 0, 0, 0, 1}};  // t^9+t^4+1
            default: return std::nullopt;
        }
    }
    if (p == 3) {
        switch (n) {
            case 2: return KPoly{{2, 1, 1}};     // t^2+t+2
            case 3: return KPoly{{1, 2, 0, 1}};  // t^3+2t+1
            default: return std::nullopt;
        }
    }
    return std::nullopt;
}

FieldCtx builtin_field(long p, int n) {
    auto mod = builtin_modulus(p, n);
    if (!mod)
        throw UnknownModulus("no built-in modulus for p=" + std::to_string(p) +
                             ", n=" + std::to_string(n));
    return FieldCtx(p, n, *mod);
}

}  // namespace epir
