#ifndef EPIR_PROTOCOL_HPP
#define EPIR_PROTOCOL_HPP

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "epir/elgamal.hpp"
#include "epir/gf.hpp"

namespace epir {

struct TrivialCiphertext : GfError {
    TrivialCiphertext() : GfError("ciphertext failed the nontrivial check") {}
};
struct InvalidBlock : GfError {
    explicit InvalidBlock(const std::string& what) : GfError(what) {}
};

struct QuerySpec {
    LPoly F;
    int i = 1;  // target index, 1-based
    int N = 1;
};

struct Database {
    std::vector<Elem> blocks;  // R_1..R_N
};

// One protocol execution end-to-end.
struct Transcript {
    bool restricted = true;
    long long x = 0;                  // secret key
    Elem y;                           // g^x
    LPoly F;
    int i = 1;
    std::vector<long long> s;         // exponents (one per block)
    long r = 0;                       // GF(p) blinding
    long long r_prime = 0;            // DB's Enc(1) exponent (full protocol)
    std::vector<Elem> blocks;
    std::vector<Ciphertext> query;    // C_1..C_N
    Ciphertext response{};
    bool zero_plaintext = false;      // F(alpha)+r was 0; algebra carried through
    std::optional<Elem> decoded;      // empty on degenerate response
    Elem expected{};                  // F(R_i)
    bool success = false;             // decoded defined and equal to expected
};

// D = {beta in G : Y(beta) = G(beta)^x and G(beta) != 0}, full scan of G.
std::set<Elem> valid_blocks(const FieldCtx& ctx, long long x);

// Query step: C_i encrypts F(alpha)+r, the other C_j encrypt 1.
std::vector<Ciphertext> user_query(const FieldCtx& ctx, const KeyPair& keys,
                                   const QuerySpec& spec, long r,
                                   const std::vector<long long>& exponents);

// Restricted DB step: substitute alpha -> R in both components.
Ciphertext db_respond_restricted(const FieldCtx& ctx, Elem R, const Ciphertext& c,
                                 bool check_nontrivial = true);

// Full-protocol DB step: componentwise product of the C_j(R_j) and Enc(1).
Ciphertext db_respond_full(const FieldCtx& ctx, const PublicKey& pk, const Database& db,
                           const std::vector<Ciphertext>& cts, long long r_prime,
                           bool check_nontrivial = true);

// Dec(sk, response) - r; empty on a degenerate response (V(R) = 0 path).
std::optional<Elem> user_decode(const FieldCtx& ctx, long long sk, const Ciphertext& response,
                                long r);

// Whole restricted (N=1, deterministic DB) execution. Never throws on protocol-level
// degeneracies: zero plaintexts and degenerate responses are carried through
// the algebra so the success flag agrees with the analytic indicator.
Transcript run_restricted(const FieldCtx& ctx, long long x, const LPoly& F, long long s, long r,
                          Elem R);

struct FullRandomness {
    std::vector<long long> s;  // one exponent per block
    long r = 0;
    long long r_prime = 0;
};

// Whole N-block execution. strict_blocks rejects blocks outside D.
Transcript run_full(const FieldCtx& ctx, long long x, const QuerySpec& spec, const Database& db,
                    const FullRandomness& rnd, bool strict_blocks = false);

std::string transcript_to_text(const FieldCtx& ctx, const Transcript& t);
std::string transcript_to_json(const FieldCtx& ctx, const Transcript& t);

}  // namespace epir

#endif
