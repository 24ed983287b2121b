#ifndef EPIR_ELGAMAL_HPP
#define EPIR_ELGAMAL_HPP

#include "epir/gf.hpp"

namespace epir {

struct NonPrimitiveGenerator : GfError {
    NonPrimitiveGenerator() : GfError("alpha is not a generator of the multiplicative group") {}
};
struct ZeroPlaintext : GfError {
    ZeroPlaintext() : GfError("plaintext must lie in the multiplicative group") {}
};
struct DegenerateCiphertext : GfError {
    DegenerateCiphertext() : GfError("ciphertext component c1 is zero") {}
};

struct PublicKey {
    std::uint32_t q;
    Elem g;
    Elem y;  // y = g^x
};

struct KeyPair {
    PublicKey pk;
    long long sk;  // x in Z_q
};

struct Ciphertext {
    Elem c1;
    Elem c2;

    bool nontrivial() const { return c1.v != 0 && c2.v != 0; }
    friend bool operator==(const Ciphertext& a, const Ciphertext& b) {
        return a.c1 == b.c1 && a.c2 == b.c2;
    }
};

// Key generation over G = L^x with explicit secret exponent. Randomized
// callers draw x from a seeded generator; there is no ambient entropy here.
KeyPair keygen(const FieldCtx& ctx, long long x);

// c = (g^s, y^s m); the restricted protocol names the exponent s.
Ciphertext encrypt(const FieldCtx& ctx, const PublicKey& pk, Elem m, long long s);

Elem decrypt(const FieldCtx& ctx, long long sk, const Ciphertext& c);

inline Ciphertext encrypt_one(const FieldCtx& ctx, const PublicKey& pk, long long s) {
    return encrypt(ctx, pk, Elem{1}, s);
}

// Componentwise product, the homomorphic combination used by the DB.
inline Ciphertext ct_mul(const FieldCtx& ctx, const Ciphertext& a, const Ciphertext& b) {
    return {ctx.mul(a.c1, b.c1), ctx.mul(a.c2, b.c2)};
}

}  // namespace epir

#endif
