#include <doctest.h>

#include "epir/elgamal.hpp"
#include "epir/moduli.hpp"

using namespace epir;

TEST_CASE("keygen") {
    FieldCtx f = builtin_field(2, 3);
    KeyPair kp = keygen(f, 6);
    CHECK(kp.pk.q == 7);
    CHECK(kp.pk.y == f.from_coeffs({1, 0, 1}));  // y = g^2+1

    CHECK(keygen(f, 0).pk.y == f.one());
    CHECK(keygen(f, 3).pk.y == f.from_coeffs({1, 1}));  // g^3 = g+1
}

TEST_CASE("the counterexample ciphertext") {
    FieldCtx f = builtin_field(2, 3);
    KeyPair kp = keygen(f, 6);
    Elem m = f.from_coeffs({1, 1});  // F(alpha)+r = g+1
    Ciphertext c = encrypt(f, kp.pk, m, 6);
    CHECK(c.c1 == f.from_coeffs({1, 0, 1}));  // g^2+1
    CHECK(c.c2 == f.from_coeffs({0, 1, 1}));  // g^2+g

    CHECK(encrypt(f, kp.pk, m, 0) == Ciphertext{f.one(), m});
    CHECK_THROWS_AS(encrypt(f, kp.pk, f.zero(), 1), ZeroPlaintext);
}

TEST_CASE("decrypt") {
    FieldCtx f = builtin_field(2, 3);
    // Dec with x=6 of (g+1, g^2): inverse-chain oracle for (g+1)^-6
    Elem c1 = f.from_coeffs({1, 1});
    Elem inv_chain = f.one();
    for (int i = 0; i < 6; ++i) inv_chain = f.mul(inv_chain, f.inv(c1));
    Elem expected = f.mul(f.from_coeffs({0, 0, 1}), inv_chain);
    CHECK(expected == f.from_coeffs({1, 1, 1}));  // g^2+g+1
    CHECK(decrypt(f, 6, {c1, f.from_coeffs({0, 0, 1})}) == expected);

    CHECK(decrypt(f, 4, {f.one(), f.from_coeffs({0, 1, 1})}) == f.from_coeffs({0, 1, 1}));
    CHECK_THROWS_AS(decrypt(f, 1, {f.zero(), f.one()}), DegenerateCiphertext);
}

TEST_CASE("exhaustive roundtrip and homomorphism at q=7") {
    FieldCtx f = builtin_field(2, 3);
    for (long long x = 0; x < 7; ++x) {
        KeyPair kp = keygen(f, x);
        for (std::uint32_t mv = 1; mv < 8; ++mv) {
            Elem m{mv};
            for (long long s = 0; s < 7; ++s) {
                CHECK(decrypt(f, x, encrypt(f, kp.pk, m, s)) == m);
                CHECK(decrypt(f, x, encrypt_one(f, kp.pk, s)) == f.one());
                // multiplying by Enc(1) never changes the decryption
                Ciphertext c = encrypt(f, kp.pk, m, s);
                for (long long s2 = 0; s2 < 7; ++s2)
                    CHECK(decrypt(f, x, ct_mul(f, c, encrypt_one(f, kp.pk, s2))) == m);
            }
        }
        // componentwise product decrypts to the product of plaintexts
        for (std::uint32_t m1 = 1; m1 < 8; ++m1)
            for (std::uint32_t m2 = 1; m2 < 8; ++m2)
                for (long long s1 = 0; s1 < 7; ++s1)
                    for (long long s2 = 0; s2 < 7; ++s2) {
                        Ciphertext a = encrypt(f, kp.pk, Elem{m1}, s1);
                        Ciphertext b = encrypt(f, kp.pk, Elem{m2}, s2);
                        CHECK(decrypt(f, x, ct_mul(f, a, b)) == f.mul(Elem{m1}, Elem{m2}));
                    }
    }
}

TEST_CASE("keygen refuses a non-primitive generator") {
    // t^4+t^3+t^2+t+1 is irreducible over GF(2) but alpha has order 5
    FieldCtx f(2, 4, KPoly{{1, 1, 1, 1, 1}});
    CHECK_FALSE(f.alpha_primitive());
    CHECK_THROWS_AS(keygen(f, 3), NonPrimitiveGenerator);
}
