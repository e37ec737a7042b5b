#pragma once

// Exact generators for every coefficient family used by the catalog entries,
// the scans, and the two conjectures.

#include "sc/int.hpp"

#include <functional>
#include <string>
#include <vector>

namespace sc {

struct SequenceFamily {
    std::string id;
    std::function<ZZ(long)> term;
    // primes that may divide coefficient denominators (empty: integer family);
    // only the half-binomial families are rational, handled separately.
};

// g_0..g_{n_max} for a named integer family.  Throws UnknownFamily.
std::vector<ZZ> seq_coeffs(const std::string& family, long n_max);
ZZ seq_term(const std::string& family, long n);
bool seq_known(const std::string& family);
std::vector<std::string> seq_families();

// Termwise (Hadamard) product of two families.
std::vector<ZZ> hadamard(const std::string& fa, const std::string& fb, long n_max);

// Half-binomial rational families:
//   hasse2   = binom(-1/2,k)^2        (Hasse polynomial; = legendre/16^k)
//   rv4      = binom(-1/2,k)^4        (Kilbourn; = binom(2k,k)^4/256^k)
//   thirds4  = binom(-1/3,k)^2 binom(-2/3,k)^2   (Conjecture 1.21)
std::vector<QQ> half_binomial_coeffs(const std::string& family, long n_max);

// Hulek-Verrill constant terms: sum over compositions of k into 5 parts of
// squared multinomial coefficients.
ZZ hv_term(long k);

}  // namespace sc
