#include "sc/rings.hpp"

#include <sstream>

namespace sc {

QQ parse_rational(const std::string& s) {
    auto pos = s.find('/');
    if (pos == std::string::npos) return QQ(ZZ(s));
    QQ r(ZZ(s.substr(0, pos)), ZZ(s.substr(pos + 1)));
    r.canonicalize();
    return r;
}

std::string rational_str(const QQ& v) {
    std::ostringstream os;
    os << v.get_num();
    if (v.get_den() != 1) os << "/" << v.get_den();
    return os.str();
}

int kronecker(const ZZ& a, const ZZ& n) {
    return mpz_kronecker(a.get_mpz_t(), n.get_mpz_t());
}

std::vector<long> primes_in(long lo, long hi) {
    std::vector<long> out;
    ZZ p = lo - 1;
    for (;;) {
        mpz_nextprime(p.get_mpz_t(), p.get_mpz_t());
        if (p >= hi) break;
        out.push_back(p.get_si());
    }
    return out;
}

ZZ inv_mod(const ZZ& a, const ZZ& m) {
    ZZ r;
    if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0)
        throw std::domain_error("inv_mod: not a unit");
    return r;
}

Residue embed(const QQ& x, const ZZ& m) {
    return Residue(x.get_num() * inv_mod(x.get_den(), m), m);
}

// ---------------------------------------------------------------------------

CyclotomicInt CyclotomicInt::zeta_pow(long prime, long k) {
    k %= prime;
    if (k < 0) k += prime;
    std::vector<ZZ> c(static_cast<size_t>(prime - 1), ZZ(0));
    if (k < prime - 1) {
        c[static_cast<size_t>(k)] = 1;
    } else {
        for (auto& x : c) x = -1;
    }
    return CyclotomicInt(prime, std::move(c));
}

static long common_p(const CyclotomicInt& a, const CyclotomicInt& b) {
    if (a.p != 0 && b.p != 0 && a.p != b.p)
        throw std::domain_error("cyclotomic: mixed conductors");
    return a.p != 0 ? a.p : b.p;
}

static std::vector<ZZ> coeff_vec(const CyclotomicInt& a, long p) {
    if (a.p != 0) return a.coeffs;
    std::vector<ZZ> c(static_cast<size_t>(p - 1), ZZ(0));
    c[0] = a.coeffs[0];
    return c;
}

CyclotomicInt operator+(const CyclotomicInt& a, const CyclotomicInt& b) {
    long p = common_p(a, b);
    if (p == 0) return CyclotomicInt(a.coeffs[0] + b.coeffs[0]);
    auto ca = coeff_vec(a, p), cb = coeff_vec(b, p);
    for (size_t i = 0; i < ca.size(); ++i) ca[i] += cb[i];
    return CyclotomicInt(p, std::move(ca));
}

CyclotomicInt operator-(const CyclotomicInt& a, const CyclotomicInt& b) {
    long p = common_p(a, b);
    if (p == 0) return CyclotomicInt(a.coeffs[0] - b.coeffs[0]);
    auto ca = coeff_vec(a, p), cb = coeff_vec(b, p);
    for (size_t i = 0; i < ca.size(); ++i) ca[i] -= cb[i];
    return CyclotomicInt(p, std::move(ca));
}

CyclotomicInt CyclotomicInt::operator-() const {
    CyclotomicInt r = *this;
    for (auto& c : r.coeffs) c = -c;
    return r;
}

CyclotomicInt operator*(const CyclotomicInt& a, const CyclotomicInt& b) {
    long p = common_p(a, b);
    if (p == 0) return CyclotomicInt(a.coeffs[0] * b.coeffs[0]);
    // Fast paths for integer scalars keep series multiplication cheap.
    if (a.p == 0 || b.p == 0) {
        const ZZ& s = (a.p == 0 ? a.coeffs[0] : b.coeffs[0]);
        auto c = coeff_vec(a.p == 0 ? b : a, p);
        for (auto& x : c) x *= s;
        return CyclotomicInt(p, std::move(c));
    }
    size_t n = static_cast<size_t>(p - 1);
    std::vector<ZZ> prod(2 * n - 1, ZZ(0));
    for (size_t i = 0; i < n; ++i) {
        if (a.coeffs[i] == 0) continue;
        for (size_t j = 0; j < n; ++j) {
            if (b.coeffs[j] == 0) continue;
            mpz_addmul(prod[i + j].get_mpz_t(), a.coeffs[i].get_mpz_t(), b.coeffs[j].get_mpz_t());
        }
    }
    // reduce zeta^k for k >= p-1 via zeta^{p-1} = -(1 + zeta + ... + zeta^{p-2})
    for (size_t k = 2 * n - 2; k >= n && k < prod.size(); --k) {
        if (prod[k] == 0) continue;
        ZZ v = prod[k];
        prod[k] = 0;
        size_t base = k - n;
        for (size_t j = 0; j < n; ++j) prod[base + j] -= v;
    }
    prod.resize(n);
    return CyclotomicInt(p, std::move(prod));
}

bool CyclotomicInt::rational_part(ZZ* out) const {
    if (p == 0) {
        if (out) *out = coeffs[0];
        return true;
    }
    for (size_t i = 1; i < coeffs.size(); ++i)
        if (coeffs[i] != 0) return false;
    if (out) *out = coeffs[0];
    return true;
}

// ---------------------------------------------------------------------------

Residue hensel_sqrt(const Residue& a, const ZZ& hint) {
    const ZZ& m = a.modulus;
    if (m == 0) throw std::domain_error("hensel_sqrt: exact integer input");
    // recover p, s from m: m must be p^s with p the smallest prime factor
    ZZ p = hint != 0 ? ZZ(0) : ZZ(0);
    // caller guarantees m = p^s for an odd prime p; find p by trial on hint's modulus
    // (m is small in practice; factor out the unique prime)
    ZZ q = m;
    ZZ d = 2;
    while (q % d != 0) d = d == 2 ? ZZ(3) : d + 2;
    p = d;
    if ((hint * hint - a.value) % p != 0)
        throw std::domain_error("NoSquareRoot: hint^2 != a mod p");
    ZZ x = hint % p;
    ZZ mod = p;
    while (mod < m) {
        mod = mod * mod;
        if (mod > m) mod = m;
        ZZ t = (x * x - a.value) % mod;
        x = (x - t * inv_mod(2 * x, mod)) % mod;
        if (x < 0) x += mod;
    }
    return Residue(x, m);
}

std::optional<Residue> sqrt_mod(const ZZ& a, const ZZ& p, long s) {
    ZZ m = pow_zz(p, static_cast<unsigned long>(s));
    ZZ ar = a % p;
    if (ar < 0) ar += p;
    for (ZZ h = 0; h < p; ++h) {
        if ((h * h - ar) % p == 0)
            return hensel_sqrt(Residue(a, m), h);
    }
    return std::nullopt;
}

std::optional<QuadraticRep> cornacchia(const ZZ& p, long D, long e) {
    ZZ n = e * p;
    ZZ vmax = isqrt_zz(n / D);
    for (ZZ v = 0; v <= vmax; ++v) {
        ZZ r = n - D * v * v;
        ZZ u = isqrt_zz(r);
        if (u * u == r) {
            QuadraticRep rep;
            rep.u = u;
            rep.v = v;
            rep.D = D;
            rep.e = e;
            rep.p = p;
            return rep;
        }
    }
    return std::nullopt;
}

QuadraticPadic select_unit_embedding(const QuadraticRep& rep, const ZZ& p, long s) {
    auto root = sqrt_mod(ZZ(-rep.D), p, s);
    if (!root) throw std::domain_error("select_unit_embedding: p inert in Q(sqrt(-D))");
    QuadraticPadic emb;
    emb.D = rep.D;
    emb.p = p;
    emb.s = s;
    emb.root = *root;
    Residue plus = Residue(rep.u, root->modulus) + Residue(rep.v, root->modulus) * *root;
    Residue minus = Residue(rep.u, root->modulus) - Residue(rep.v, root->modulus) * *root;
    bool plus_unit = plus.value % p != 0;
    bool minus_unit = minus.value % p != 0;
    if (!plus_unit && !minus_unit)
        throw std::domain_error("BothNonUnit: inconsistent representation");
    emb.v_sign = plus_unit ? 1 : -1;
    return emb;
}

}  // namespace sc
