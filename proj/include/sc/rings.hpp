#pragma once

// Exact coefficient domains: Z/p^s residues, cyclotomic integers mod Phi_p,
// quadratic extensions of Z/p^s, and the p-adic utilities built on them
// (Hensel lifting, Cornacchia representations, unit-root embedding choice).

#include "sc/int.hpp"

#include <optional>
#include <vector>

namespace sc {

// ---------------------------------------------------------------------------
// Residue: an element of Z/m (m = p^s in practice).  modulus == 0 means an
// exact integer that has not been reduced yet; mixed-modulus arithmetic
// adopts the nonzero modulus.  Immutable value semantics throughout.
struct Residue {
    ZZ modulus;  // 0 = exact integer
    ZZ value;

    Residue() : modulus(0), value(0) {}
    Residue(ZZ v) : modulus(0), value(std::move(v)) {}
    Residue(ZZ v, ZZ m) : modulus(std::move(m)), value(std::move(v)) { reduce(); }

    void reduce() {
        if (modulus != 0) {
            mpz_mod(value.get_mpz_t(), value.get_mpz_t(), modulus.get_mpz_t());
        }
    }
    bool is_zero() const { return value == 0; }

    friend Residue operator+(const Residue& a, const Residue& b) {
        return Residue(a.value + b.value, a.modulus != 0 ? a.modulus : b.modulus);
    }
    friend Residue operator-(const Residue& a, const Residue& b) {
        return Residue(a.value - b.value, a.modulus != 0 ? a.modulus : b.modulus);
    }
    friend Residue operator*(const Residue& a, const Residue& b) {
        return Residue(a.value * b.value, a.modulus != 0 ? a.modulus : b.modulus);
    }
    Residue operator-() const { return Residue(-value, modulus); }
    Residue& operator+=(const Residue& o) { return *this = *this + o; }
    Residue& operator-=(const Residue& o) { return *this = *this - o; }
    Residue& operator*=(const Residue& o) { return *this = *this * o; }
    friend bool operator==(const Residue& a, const Residue& b) {
        return (a - b).is_zero();
    }
};

// Modular inverse; throws if not a unit.
ZZ inv_mod(const ZZ& a, const ZZ& m);

inline Residue inv(const Residue& r) {
    if (r.modulus == 0) {
        if (r.value == 1 || r.value == -1) return r;
        throw std::domain_error("inv: non-unit exact integer");
    }
    return Residue(inv_mod(r.value, r.modulus), r.modulus);
}

// Embed an exact rational into Z/m (denominator must be a unit).
Residue embed(const QQ& x, const ZZ& m);

// ---------------------------------------------------------------------------
// CyclotomicInt: element of Z[zeta_p]/(Phi_p), coefficient vector on the
// basis 1, zeta, ..., zeta^{p-2}.  p == 0 encodes a plain integer constant.
struct CyclotomicInt {
    long p = 0;
    std::vector<ZZ> coeffs;  // size p-1 when p != 0, size 1 otherwise

    CyclotomicInt() : p(0), coeffs(1, ZZ(0)) {}
    explicit CyclotomicInt(ZZ v) : p(0), coeffs(1, std::move(v)) {}
    CyclotomicInt(long prime, std::vector<ZZ> c) : p(prime), coeffs(std::move(c)) {}

    static CyclotomicInt integer(long prime, const ZZ& v) {
        std::vector<ZZ> c(static_cast<size_t>(prime - 1), ZZ(0));
        c[0] = v;
        return CyclotomicInt(prime, std::move(c));
    }
    // zeta^k as an element (k reduced mod p; zeta^{p-1} = -(1+...+zeta^{p-2})).
    static CyclotomicInt zeta_pow(long prime, long k);

    bool is_zero() const {
        for (auto& c : coeffs)
            if (c != 0) return false;
        return true;
    }
    // True when the element lies in Z; if so *out receives the value.
    bool rational_part(ZZ* out) const;

    friend CyclotomicInt operator+(const CyclotomicInt& a, const CyclotomicInt& b);
    friend CyclotomicInt operator-(const CyclotomicInt& a, const CyclotomicInt& b);
    friend CyclotomicInt operator*(const CyclotomicInt& a, const CyclotomicInt& b);
    CyclotomicInt operator-() const;
    CyclotomicInt& operator+=(const CyclotomicInt& o) { return *this = *this + o; }
    CyclotomicInt& operator-=(const CyclotomicInt& o) { return *this = *this - o; }
    CyclotomicInt& operator*=(const CyclotomicInt& o) { return *this = *this * o; }
    friend bool operator==(const CyclotomicInt& a, const CyclotomicInt& b) {
        return (a - b).is_zero();
    }
};

// ---------------------------------------------------------------------------
// QuadExt: a + b*sqrt(rad) over Z/m, for radicands that are non-residues
// (inert case); the split case embeds through hensel_sqrt instead.
struct QuadExt {
    ZZ modulus;
    ZZ rad;
    Residue a, b;

    QuadExt(ZZ m, ZZ radicand)
        : modulus(m), rad(std::move(radicand)), a(ZZ(0), m), b(ZZ(0), m) {}
    QuadExt(Residue a_, Residue b_, ZZ radicand)
        : modulus(a_.modulus), rad(std::move(radicand)), a(std::move(a_)), b(std::move(b_)) {}

    friend QuadExt operator+(const QuadExt& x, const QuadExt& y) {
        return QuadExt(x.a + y.a, x.b + y.b, x.rad);
    }
    friend QuadExt operator-(const QuadExt& x, const QuadExt& y) {
        return QuadExt(x.a - y.a, x.b - y.b, x.rad);
    }
    friend QuadExt operator*(const QuadExt& x, const QuadExt& y) {
        Residue r(x.rad, x.modulus);
        return QuadExt(x.a * y.a + r * (x.b * y.b), x.a * y.b + x.b * y.a, x.rad);
    }
    QuadExt operator-() const { return QuadExt(-a, -b, rad); }
    friend bool operator==(const QuadExt& x, const QuadExt& y) {
        return x.a == y.a && x.b == y.b;
    }
};

// ---------------------------------------------------------------------------
// Quadratic representations and p-adic embeddings.

// e*p = u^2 + D v^2 exactly.
struct QuadraticRep {
    ZZ u, v;
    long D = 0;
    long e = 1;
    ZZ p;
};

// An embedding Q(sqrt(-D)) -> Z/p^s: `root` is the chosen lift of sqrt(-D).
struct QuadraticPadic {
    long D = 0;
    ZZ p;
    long s = 1;
    Residue root;     // root^2 = -D mod p^s
    int v_sign = 1;   // sign applied to v so u + v*sqrt(-D) is a unit
};

// Square root of `a` mod p^s given a square root hint mod p.  p odd.
// Throws NoSquareRoot (domain_error) when hint^2 != a mod p.
Residue hensel_sqrt(const Residue& a, const ZZ& hint);

// Canonical square root of `a` mod p^s (least nonnegative hint), or nullopt
// when a is a non-residue mod p.
std::optional<Residue> sqrt_mod(const ZZ& a, const ZZ& p, long s);

// Bounded exhaustive search for e*p = u^2 + D v^2, smallest v >= 0 then u >= 0.
std::optional<QuadraticRep> cornacchia(const ZZ& p, long D, long e = 1);

// Choose the sign of v (equivalently one of the two embeddings) so that
// u + v*sqrt(-D) has valuation 0 mod p.  Throws when both sides vanish.
QuadraticPadic select_unit_embedding(const QuadraticRep& rep, const ZZ& p, long s);

}  // namespace sc
