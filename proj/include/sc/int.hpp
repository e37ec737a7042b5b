#pragma once

// Arbitrary-precision integer/rational layer (GMP) plus the handful of
// combinatorial helpers the whole library leans on.

#include <gmpxx.h>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace sc {

using ZZ = mpz_class;
using QQ = mpq_class;

inline ZZ pow_zz(const ZZ& base, unsigned long e) {
    ZZ r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline ZZ factorial(unsigned long n) {
    ZZ r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

// Binomial coefficient, ordinary convention: 0 when n < 0 or k < 0 or k > n >= 0.
inline ZZ binom(long n, long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    ZZ r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

// Generalized binomial: n may be negative, binom(n,k) = n(n-1)...(n-k+1)/k!.
inline ZZ binom_gen(long n, long k) {
    if (k < 0) return 0;
    ZZ num = 1;
    for (long i = 0; i < k; ++i) num *= ZZ(n - i);
    ZZ den = factorial(static_cast<unsigned long>(k));
    ZZ q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    if (r != 0) throw std::logic_error("binom_gen: non-integral");
    return q;
}

inline bool is_prime(const ZZ& n) {
    return mpz_probab_prime_p(n.get_mpz_t(), 32) != 0;
}

inline ZZ isqrt_zz(const ZZ& n) {
    ZZ r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

inline QQ qq(const ZZ& num, const ZZ& den) {
    QQ r(num, den);
    r.canonicalize();
    return r;
}

// Parse "a/b" or "a" into an exact rational.
QQ parse_rational(const std::string& s);
std::string rational_str(const QQ& v);

// Kronecker symbol (a|n), full domain including n <= 0.
int kronecker(const ZZ& a, const ZZ& n);

// Odd primes in [lo, hi).
std::vector<long> primes_in(long lo, long hi);

}  // namespace sc
