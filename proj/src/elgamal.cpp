#include "epir/elgamal.hpp"

namespace epir {

KeyPair keygen(const FieldCtx& ctx, long long x) {
    if (!ctx.alpha_primitive()) throw NonPrimitiveGenerator{};
    if (x < 0 || x >= static_cast<long long>(ctx.q())) throw GfError("x must lie in Z_q");
    Elem g = ctx.gen();
    return KeyPair{PublicKey{ctx.q(), g, ctx.pow(g, x)}, x};
}

Ciphertext encrypt(const FieldCtx& ctx, const PublicKey& pk, Elem m, long long s) {
    if (m.v == 0) throw ZeroPlaintext{};
    if (s < 0 || s >= static_cast<long long>(pk.q)) throw GfError("s must lie in Z_q");
    return {ctx.pow(pk.g, s), ctx.mul(ctx.pow(pk.y, s), m)};
}

Elem decrypt(const FieldCtx& ctx, long long sk, const Ciphertext& c) {
    if (c.c1.v == 0) throw DegenerateCiphertext{};
    return ctx.mul(c.c2, ctx.pow(ctx.inv(c.c1), sk));
}

}  // namespace epir
