#pragma once

// Truncated formal power series over an exact coefficient ring.
//
// A Series<R> carries `grade`: coeff[i] is the coefficient of q^{i/grade}.
// The vector length is the validity horizon: every arithmetic result is
// truncated to the minimum horizon implied by its operands (adjusted by
// valuations), and comparisons never read past it.

#include "sc/int.hpp"
#include "sc/rings.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

namespace sc {

// --- ring glue -------------------------------------------------------------

inline bool ring_is_zero(const ZZ& x) { return x == 0; }
inline bool ring_is_zero(const QQ& x) { return x == 0; }
inline bool ring_is_zero(const Residue& x) { return x.is_zero(); }
inline bool ring_is_zero(const CyclotomicInt& x) { return x.is_zero(); }

template <class R>
R ring_one() { return R(ZZ(1)); }
template <>
inline ZZ ring_one<ZZ>() { return ZZ(1); }
template <>
inline QQ ring_one<QQ>() { return QQ(1); }

inline ZZ ring_inv(const ZZ& x) {
    if (x == 1 || x == -1) return x;
    throw std::domain_error("NonUnitConstantTerm");
}
inline QQ ring_inv(const QQ& x) {
    if (x == 0) throw std::domain_error("NonUnitConstantTerm");
    return QQ(1) / x;
}
inline Residue ring_inv(const Residue& x) { return inv(x); }
inline CyclotomicInt ring_inv(const CyclotomicInt& x) {
    ZZ v;
    if (x.rational_part(&v) && (v == 1 || v == -1)) return CyclotomicInt(v);
    throw std::domain_error("NonUnitConstantTerm");
}

inline void ring_addmul(ZZ& acc, const ZZ& a, const ZZ& b) {
    mpz_addmul(acc.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
}
template <class R>
void ring_addmul(R& acc, const R& a, const R& b) { acc += a * b; }

// --- series ----------------------------------------------------------------

template <class R>
class Series {
public:
    std::vector<R> c;
    long grade = 1;

    Series() = default;
    explicit Series(long order, long grade_den = 1)
        : c(static_cast<size_t>(order)), grade(grade_den) {}
    Series(std::vector<R> coeffs, long grade_den = 1)
        : c(std::move(coeffs)), grade(grade_den) {}

    long order() const { return static_cast<long>(c.size()); }

    const R& at(long i) const {
        static const R zero{};
        if (i < 0) return zero;
        if (i >= order()) throw std::out_of_range("Series: read past horizon");
        return c[static_cast<size_t>(i)];
    }

    long valuation() const {  // capped at order()
        for (long i = 0; i < order(); ++i)
            if (!ring_is_zero(c[static_cast<size_t>(i)])) return i;
        return order();
    }

    bool is_zero() const { return valuation() == order(); }

    Series truncated(long new_order) const {
        Series r = *this;
        if (new_order < r.order()) r.c.resize(static_cast<size_t>(new_order));
        return r;
    }

    Series regrade(long g) const {
        if (g == grade) return *this;
        if (g % grade != 0) throw std::domain_error("GradeMismatch");
        long f = g / grade;
        Series r(order() == 0 ? 0 : (order() - 1) * f + 1, g);
        for (long i = 0; i < order(); ++i) r.c[static_cast<size_t>(i * f)] = c[static_cast<size_t>(i)];
        return r;
    }

    std::string dump() const {
        std::ostringstream os;
        for (long i = 0; i < order(); ++i) os << i << "/" << grade << "\t" << str_of(c[static_cast<size_t>(i)]) << "\n";
        return os.str();
    }

private:
    static std::string str_of(const ZZ& v) { return v.get_str(); }
    static std::string str_of(const QQ& v) { return rational_str(v); }
    static std::string str_of(const Residue& v) { return v.value.get_str(); }
    static std::string str_of(const CyclotomicInt& v) {
        std::ostringstream os;
        os << "[";
        for (size_t i = 0; i < v.coeffs.size(); ++i) os << (i ? " " : "") << v.coeffs[i];
        os << "]";
        return os.str();
    }
};

namespace detail {
template <class R>
void harmonize(Series<R>& a, Series<R>& b) {
    if (a.grade != b.grade) {
        long g = std::lcm(a.grade, b.grade);
        a = a.regrade(g);
        b = b.regrade(g);
    }
}
}  // namespace detail

template <class R>
Series<R> operator+(Series<R> a, Series<R> b) {
    detail::harmonize(a, b);
    long n = std::min(a.order(), b.order());
    Series<R> r(n, a.grade);
    for (long i = 0; i < n; ++i) r.c[i] = a.c[i] + b.c[i];
    return r;
}

template <class R>
Series<R> operator-(Series<R> a, Series<R> b) {
    detail::harmonize(a, b);
    long n = std::min(a.order(), b.order());
    Series<R> r(n, a.grade);
    for (long i = 0; i < n; ++i) r.c[i] = a.c[i] - b.c[i];
    return r;
}

template <class R>
Series<R> operator-(const Series<R>& a) {
    Series<R> r(a.order(), a.grade);
    for (long i = 0; i < a.order(); ++i) r.c[i] = -a.c[i];
    return r;
}

template <class R>
Series<R> scale(const Series<R>& a, const R& s) {
    Series<R> r(a.order(), a.grade);
    for (long i = 0; i < a.order(); ++i) r.c[i] = a.c[i] * s;
    return r;
}

namespace detail {

// schoolbook product of coefficient ranges, truncated to n outputs
template <class R>
void school_mul(const R* a, long na, const R* b, long nb, R* out, long n) {
    for (long i = 0; i < std::min(na, n); ++i) {
        if (ring_is_zero(a[i])) continue;
        long jmax = std::min(nb, n - i);
        for (long j = 0; j < jmax; ++j) {
            if (!ring_is_zero(b[j])) ring_addmul(out[i + j], a[i], b[j]);
        }
    }
}

constexpr long kKaratsubaThreshold = 192;

// full products (na+nb-1 outputs); the caller truncates
template <class R>
void kara_full(const R* a, long na, const R* b, long nb, R* out) {
    if (na == 0 || nb == 0) return;
    if (std::min(na, nb) < kKaratsubaThreshold) {
        school_mul(a, na, b, nb, out, na + nb - 1);
        return;
    }
    long h = std::max(na, nb) / 2;
    long na0 = std::min(na, h), nb0 = std::min(nb, h);
    long na1 = na - na0, nb1 = nb - nb0;
    std::vector<R> z0(static_cast<size_t>(na0 + nb0 - 1));
    kara_full(a, na0, b, nb0, z0.data());
    std::vector<R> z2;
    if (na1 > 0 && nb1 > 0) {
        z2.assign(static_cast<size_t>(na1 + nb1 - 1), R{});
        kara_full(a + h, na1, b + h, nb1, z2.data());
    }
    long nsa = std::max(na0, na1), nsb = std::max(nb0, nb1);
    std::vector<R> sa(static_cast<size_t>(nsa)), sb(static_cast<size_t>(nsb));
    for (long i = 0; i < nsa; ++i) {
        if (i < na0) sa[i] = a[i];
        if (i < na1) sa[i] = sa[i] + a[h + i];
    }
    for (long i = 0; i < nsb; ++i) {
        if (i < nb0) sb[i] = b[i];
        if (i < nb1) sb[i] = sb[i] + b[h + i];
    }
    std::vector<R> z1(static_cast<size_t>(nsa + nsb - 1));
    kara_full(sa.data(), nsa, sb.data(), nsb, z1.data());
    for (size_t i = 0; i < z0.size(); ++i) out[i] = out[i] + z0[i];
    for (size_t i = 0; i < z1.size(); ++i) {
        R mid = z1[i];
        if (i < z0.size()) mid = mid - z0[i];
        if (i < z2.size()) mid = mid - z2[i];
        out[h + i] = out[h + i] + mid;
    }
    for (size_t i = 0; i < z2.size(); ++i) out[2 * h + i] = out[2 * h + i] + z2[i];
}

template <class R>
void kara_mul(const R* a, long na, const R* b, long nb, R* out, long n) {
    if (std::min(na, nb) < kKaratsubaThreshold || n < kKaratsubaThreshold) {
        school_mul(a, na, b, nb, out, n);
        return;
    }
    std::vector<R> full(static_cast<size_t>(na + nb - 1));
    kara_full(a, na, b, nb, full.data());
    for (long i = 0; i < std::min<long>(n, static_cast<long>(full.size())); ++i)
        out[i] = out[i] + full[static_cast<size_t>(i)];
}

}  // namespace detail

template <class R>
Series<R> operator*(Series<R> a, Series<R> b) {
    detail::harmonize(a, b);
    long va = a.valuation(), vb = b.valuation();
    long n = std::min(a.order() + vb, b.order() + va);
    n = std::min(n, a.order() + b.order());
    Series<R> r(n, a.grade);
    detail::kara_mul(a.c.data(), a.order(), b.c.data(), b.order(), r.c.data(), n);
    return r;
}

// a * inverse(b); b must have unit constant term.
template <class R>
Series<R> operator/(Series<R> a, Series<R> b) {
    detail::harmonize(a, b);
    long n = std::min(a.order(), b.order());
    if (n == 0) return Series<R>(0, a.grade);
    R ib0 = ring_inv(b.c[0]);
    Series<R> d(n, a.grade);
    for (long i = 0; i < n; ++i) {
        R acc = a.c[i];
        for (long k = 1; k <= i; ++k) {
            if (!ring_is_zero(b.c[k])) acc -= b.c[k] * d.c[i - k];
        }
        d.c[i] = acc * ib0;
    }
    return d;
}

template <class R>
Series<R> inverse(const Series<R>& a) {
    Series<R> one(a.order(), a.grade);
    if (a.order() > 0) one.c[0] = ring_one<R>();
    return one / a;
}

template <class R>
bool operator==(const Series<R>& a, const Series<R>& b) {
    Series<R> d = a - b;  // truncates to common horizon
    return d.is_zero();
}

// f(g) with g of positive valuation; horizon = min(g.order, val(g)*f.order).
template <class R>
Series<R> compose(const Series<R>& f, const Series<R>& g) {
    if (g.order() > 0 && !ring_is_zero(g.c[0]))
        throw std::domain_error("PositiveValuationRequired");
    long v = std::max(1L, g.valuation());
    long n = std::min(g.order(), v * f.order());
    if (f.order() == 0) n = 0;
    Series<R> res(n, g.grade);
    if (n == 0) return res;
    Series<R> gt = g.truncated(n);
    long top = std::min(f.order() - 1, n / v);
    res.c[0] = f.c[top];
    for (long j = top - 1; j >= 0; --j) {
        res = res * gt;
        res.c.resize(static_cast<size_t>(n));
        res.c[0] = res.c[0] + f.c[j];
    }
    return res;
}

// substitute q -> q^m
template <class R>
Series<R> substitute_power(const Series<R>& f, long m) {
    Series<R> r(f.order() * m, f.grade);
    for (long i = 0; i < f.order(); ++i) r.c[static_cast<size_t>(i * m)] = f.c[static_cast<size_t>(i)];
    return r;
}

// q d/dq in grade units: coefficient of q^{i/grade} multiplied by i.
template <class R>
Series<R> theta_derivative(const Series<R>& f) {
    Series<R> r(f.order(), f.grade);
    for (long i = 0; i < f.order(); ++i) r.c[i] = f.c[i] * R(ZZ(i));
    return r;
}

template <>
inline Series<ZZ> theta_derivative(const Series<ZZ>& f) {
    Series<ZZ> r(f.order(), f.grade);
    for (long i = 0; i < f.order(); ++i) r.c[i] = f.c[i] * i;
    return r;
}
template <>
inline Series<QQ> theta_derivative(const Series<QQ>& f) {
    Series<QQ> r(f.order(), f.grade);
    for (long i = 0; i < f.order(); ++i) r.c[i] = f.c[i] * i;
    return r;
}

// Compositional inverse of f = q + O(q^2) (leading coefficient exactly 1).
template <class R>
Series<R> reverse(const Series<R>& f) {
    R lead_delta{};
    if (f.order() >= 2) lead_delta = f.c[1] - ring_one<R>();
    if (f.order() < 2 || !ring_is_zero(f.c[0]) || !ring_is_zero(lead_delta))
        throw std::domain_error("BadLeadingTerm");
    long n = f.order();
    // Newton: g <- g - (f(g) - q) / f'(g), doubling the working precision.
    Series<R> g(std::vector<R>{R{}, ring_one<R>()}, f.grade);
    long prec = 2;
    while (prec < n) {
        prec = std::min(2 * prec, n);
        Series<R> gw = g;
        gw.c.resize(static_cast<size_t>(prec));
        Series<R> fw = f.truncated(prec);
        Series<R> fp(prec, f.grade);  // derivative d/dq
        for (long i = 1; i < prec; ++i) fp.c[i - 1] = fw.c[i] * R(ZZ(i));
        Series<R> e = compose(fw, gw);
        e.c.resize(static_cast<size_t>(prec));
        e.c[1] = e.c[1] - ring_one<R>();
        Series<R> corr = e / compose(fp, gw).truncated(prec);
        corr.c.resize(static_cast<size_t>(prec));
        for (long i = 0; i < prec; ++i) gw.c[i] = gw.c[i] - corr.c[i];
        g = gw;
    }
    return g;
}

// log(f), f = 1 + O(q): integral of f'/f.  Rational coefficients.
Series<QQ> log_series(const Series<QQ>& f);
// exp(f), f = O(q).
Series<QQ> exp_series(const Series<QQ>& f);

// twist: multiply the coefficient of q^{n/p} by zeta_p^{k n}; grade must be a
// multiple of p and the coefficients cyclotomic with the same p.
Series<CyclotomicInt> twist(const Series<CyclotomicInt>& f, long p, long k);

Series<QQ> to_rational(const Series<ZZ>& a);
Series<Residue> reduce_mod(const Series<ZZ>& a, const ZZ& m);
Series<Residue> reduce_mod(const Series<QQ>& a, const ZZ& m);

}  // namespace sc
