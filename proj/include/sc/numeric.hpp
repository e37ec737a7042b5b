#pragma once

// High-precision complex evaluation of q-series at CM points.  Values carry a
// pessimistically propagated absolute error bound; the drivers double the
// working precision until the bound clears the target (hard cap 640 digits).

#include "sc/catalog.hpp"
#include "sc/int.hpp"
#include "sc/series.hpp"

#include <mpfr.h>

#include <optional>
#include <string>

namespace sc {

class BigFloat {
public:
    explicit BigFloat(long prec_bits = 128);
    BigFloat(const BigFloat& o);
    BigFloat(BigFloat&& o) noexcept;
    BigFloat& operator=(BigFloat o);
    ~BigFloat();

    static BigFloat of(const ZZ& z, long prec);
    static BigFloat of(const QQ& q, long prec);
    static BigFloat pi(long prec);

    long prec() const { return prec_; }
    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    // decimal string with the stored precision
    std::string str(long digits) const;
    double err_bound() const { return mpfr_get_d(err_, MPFR_RNDU); }
    bool err_below(double log10_target) const;

    friend BigFloat operator+(const BigFloat& a, const BigFloat& b);
    friend BigFloat operator-(const BigFloat& a, const BigFloat& b);
    friend BigFloat operator*(const BigFloat& a, const BigFloat& b);
    friend BigFloat operator/(const BigFloat& a, const BigFloat& b);
    BigFloat operator-() const;

    static BigFloat sqrt(const BigFloat& x);
    static BigFloat exp(const BigFloat& x);
    static BigFloat sin(const BigFloat& x);
    static BigFloat cos(const BigFloat& x);
    BigFloat abs() const;
    int sign() const { return mpfr_sgn(v_); }
    bool less_than(const BigFloat& o) const { return mpfr_cmp(v_, o.v_) < 0; }

    mpfr_ptr raw() { return v_; }
    mpfr_srcptr raw() const { return v_; }
    void bump_err(double e);
    void bump_err_2exp(long e);  // err += 2^e (handles far-subnormal bounds)

private:
    void add_ulp();
    long prec_;
    mpfr_t v_;
    mpfr_t err_;  // absolute error bound, rounded up
};

struct BigComplex {
    BigFloat re, im;
    explicit BigComplex(long prec = 128) : re(prec), im(prec) {}
    BigComplex(BigFloat r, BigFloat i) : re(std::move(r)), im(std::move(i)) {}
    friend BigComplex operator+(const BigComplex& a, const BigComplex& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend BigComplex operator-(const BigComplex& a, const BigComplex& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend BigComplex operator*(const BigComplex& a, const BigComplex& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend BigComplex operator/(const BigComplex& a, const BigComplex& b);
    BigFloat abs() const { return BigFloat::sqrt(re * re + im * im); }
    double err_bound() const { return re.err_bound() + im.err_bound(); }
};

// tau = x + i * y_coef * sqrt(Dy); exact data, Im > 0.
struct QuadraticPoint {
    QQ x;
    QQ y_coef;
    long Dy = 1;
};

struct EvalOptions {
    long digits = 25;
    long max_digits = 640;
};

// Evaluate an exact integer q-series at q = e^{2 pi i tau}; throws
// PrecisionUnreachable when the tail cannot be bounded below the target.
BigComplex eval_q(const Series<ZZ>& series, const QuadraticPoint& tau, long digits);
BigComplex eval_q(const ModularSpec& spec, const QuadraticPoint& tau, long digits);

struct DeltaResult {
    BigComplex value;
    std::optional<QQ> reconstructed;  // continued-fraction match, den <= 1e12
};
// delta(alpha) = t/t' (2/(alpha - conj alpha) + Theta'/Theta); handles the
// squared-theta entries via (Theta^2)'/(2 Theta^2).  Rejects elliptic points
// (|t'| below the error floor).
DeltaResult delta_at(const CatalogEntry& entry, const QuadraticPoint& alpha, long digits);

struct RamanujanResult {
    bool pass = false;
    double residual_log10 = 0;  // log10 |LHS - RHS|
    std::string lhs, rhs;
};
// Verifies the weighted 1/pi identity at alpha numerically.
RamanujanResult verify_ramanujan(const CatalogEntry& entry, const QuadraticPoint& alpha,
                                 const QQ& delta, long digits);

// Chudnovsky closed form: sum (1 - k/delta) g_k t^k == 426880 sqrt(10005) /
// (13591409 pi), evaluated to `digits`.
RamanujanResult verify_chudnovsky(long digits);

std::optional<QQ> reconstruct_rational(const BigFloat& x, const ZZ& den_bound);

}  // namespace sc
