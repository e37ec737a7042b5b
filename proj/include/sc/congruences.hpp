#pragma once

// Power-series congruence checkers: truncations F_p, the functional
// supercongruences mod p^2/p^3, the extended and squared variants, and the
// Dwork congruences.

#include "sc/mirror.hpp"
#include "sc/rings.hpp"

#include <optional>
#include <string>

namespace sc {

struct TruncationPoly {
    std::string entry_id;
    long p = 0;
    std::vector<ZZ> coeffs;  // g_0 .. g_{p-1}, exact
};

struct CongruenceVerdict {
    std::string entry_id;
    std::string check;
    long p = 0;
    ZZ modulus;
    long t_order = 0;
    bool pass = false;
    long fail_exponent = -1;  // witness
    ZZ fail_residue;
    std::string note;
};

// Exact first p coefficients.  Throws BadPrime when p is in the family's
// denominator support (rational families are rejected here; only integer
// catalog families pass through).
TruncationPoly truncate_series(const CatalogEntry& entry, long p);

// F(t) ?= F_p(t) F(t^sigma) mod p^s up to t_order.
CongruenceVerdict check_functional(MirrorPackage& pkg, long p, long s, long t_order);

// r = 1/3 variant: F ?= F(t^sigma)(F_p + (g_p - g_1) t^p) mod p^3; also
// reports whether g_p = g_1 mod p^3 (collapse to the plain form).
CongruenceVerdict check_functional_extended(MirrorPackage& pkg, long p, long t_order);

struct SquaredVerdicts {
    CongruenceVerdict trunc_square;   // Ftilde_p = F_p^2 mod p^3
    CongruenceVerdict gp_doubling;    // gtilde_p = 2 g_p mod p^3
    CongruenceVerdict ladder;         // divisibility ladder of g_k
    CongruenceVerdict functional_sq;  // F^2 = F(ts)^2 F_p^2 mod p^3
    CongruenceVerdict functional;     // deduced F = F(ts) F_p mod p^3
    bool all_pass() const {
        return trunc_square.pass && gp_doubling.pass && ladder.pass && functional_sq.pass &&
               functional.pass;
    }
};
SquaredVerdicts check_squared(MirrorPackage& pkg, long p, long t_order);

// Dwork: F(t) F_{p^{r-1}}(t^sigma) ?= F_{p^r}(t) F(t^sigma) mod p^r
// (strengthened: mod p^{2r}).
CongruenceVerdict check_dwork(MirrorPackage& pkg, long p, long r, long t_order,
                              bool strengthened = false);

std::string verdict_json(const CongruenceVerdict& v);

}  // namespace sc
