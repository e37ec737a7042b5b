#include "sc/numeric.hpp"

#include "sc/sequences.hpp"

#include <cmath>
#include <sstream>

namespace sc {

BigFloat::BigFloat(long prec_bits) : prec_(prec_bits) {
    mpfr_init2(v_, prec_);
    mpfr_set_zero(v_, 1);
    mpfr_init2(err_, 64);
    mpfr_set_zero(err_, 1);
}
BigFloat::BigFloat(const BigFloat& o) : prec_(o.prec_) {
    mpfr_init2(v_, prec_);
    mpfr_set(v_, o.v_, MPFR_RNDN);
    mpfr_init2(err_, 64);
    mpfr_set(err_, o.err_, MPFR_RNDU);
}
BigFloat::BigFloat(BigFloat&& o) noexcept : prec_(o.prec_) {
    mpfr_init2(v_, 2);
    mpfr_init2(err_, 2);
    mpfr_swap(v_, o.v_);
    mpfr_swap(err_, o.err_);
}
BigFloat& BigFloat::operator=(BigFloat o) {
    std::swap(prec_, o.prec_);
    mpfr_swap(v_, o.v_);
    mpfr_swap(err_, o.err_);
    return *this;
}
BigFloat::~BigFloat() {
    mpfr_clear(v_);
    mpfr_clear(err_);
}

void BigFloat::add_ulp() {
    // |rounding error| <= 2^{exp - prec}; accumulate into err
    if (mpfr_zero_p(v_)) return;
    mpfr_t u;
    mpfr_init2(u, 64);
    mpfr_set_ui_2exp(u, 1, mpfr_get_exp(v_) - prec_, MPFR_RNDU);
    mpfr_add(err_, err_, u, MPFR_RNDU);
    mpfr_clear(u);
}

void BigFloat::bump_err(double e) {
    mpfr_t u;
    mpfr_init2(u, 64);
    mpfr_set_d(u, e, MPFR_RNDU);
    mpfr_add(err_, err_, u, MPFR_RNDU);
    mpfr_clear(u);
}

void BigFloat::bump_err_2exp(long e) {
    mpfr_t u;
    mpfr_init2(u, 64);
    mpfr_set_ui_2exp(u, 1, e, MPFR_RNDU);
    mpfr_add(err_, err_, u, MPFR_RNDU);
    mpfr_clear(u);
}

BigFloat BigFloat::of(const ZZ& z, long prec) {
    BigFloat r(prec);
    mpfr_set_z(r.v_, z.get_mpz_t(), MPFR_RNDN);
    r.add_ulp();
    return r;
}
BigFloat BigFloat::of(const QQ& q, long prec) {
    BigFloat r(prec);
    mpfr_set_q(r.v_, q.get_mpq_t(), MPFR_RNDN);
    r.add_ulp();
    return r;
}
BigFloat BigFloat::pi(long prec) {
    BigFloat r(prec);
    mpfr_const_pi(r.v_, MPFR_RNDN);
    r.add_ulp();
    return r;
}

std::string BigFloat::str(long digits) const {
    char* s = nullptr;
    mpfr_asprintf(&s, "%.*Rg", static_cast<int>(digits), v_);
    std::string out(s);
    mpfr_free_str(s);
    return out;
}

bool BigFloat::err_below(double log10_target) const {
    if (mpfr_zero_p(err_)) return true;
    double l = mpfr_get_d(err_, MPFR_RNDU);
    return l > 0 ? std::log10(l) < log10_target : true;
}

namespace {
long pmax(const BigFloat& a, const BigFloat& b) { return std::max(a.prec(), b.prec()); }
}  // namespace

BigFloat operator+(const BigFloat& a, const BigFloat& b) {
    BigFloat r(pmax(a, b));
    mpfr_add(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
    r.bump_err(a.err_bound() + b.err_bound());
    if (!mpfr_zero_p(r.raw())) r.bump_err(std::ldexp(1.0, static_cast<int>(mpfr_get_exp(r.raw()) - r.prec())));
    return r;
}
BigFloat operator-(const BigFloat& a, const BigFloat& b) {
    BigFloat r(pmax(a, b));
    mpfr_sub(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
    r.bump_err(a.err_bound() + b.err_bound());
    if (!mpfr_zero_p(r.raw())) r.bump_err(std::ldexp(1.0, static_cast<int>(mpfr_get_exp(r.raw()) - r.prec())));
    return r;
}
BigFloat operator*(const BigFloat& a, const BigFloat& b) {
    BigFloat r(pmax(a, b));
    mpfr_mul(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
    double av = std::fabs(mpfr_get_d(a.raw(), MPFR_RNDN)), bv = std::fabs(mpfr_get_d(b.raw(), MPFR_RNDN));
    r.bump_err(av * b.err_bound() + bv * a.err_bound() + a.err_bound() * b.err_bound());
    if (!mpfr_zero_p(r.raw())) r.bump_err(std::ldexp(1.0, static_cast<int>(mpfr_get_exp(r.raw()) - r.prec())));
    return r;
}
BigFloat operator/(const BigFloat& a, const BigFloat& b) {
    BigFloat r(pmax(a, b));
    mpfr_div(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
    double av = std::fabs(mpfr_get_d(a.raw(), MPFR_RNDN));
    double bv = std::fabs(mpfr_get_d(b.raw(), MPFR_RNDN));
    if (bv <= 2 * b.err_bound()) throw std::domain_error("PrecisionUnreachable: division by ~0");
    r.bump_err((a.err_bound() + av / bv * b.err_bound()) / (bv - b.err_bound()));
    if (!mpfr_zero_p(r.raw())) r.bump_err(std::ldexp(1.0, static_cast<int>(mpfr_get_exp(r.raw()) - r.prec())));
    return r;
}
BigFloat BigFloat::operator-() const {
    BigFloat r(*this);
    mpfr_neg(r.v_, r.v_, MPFR_RNDN);
    return r;
}
BigFloat BigFloat::sqrt(const BigFloat& x) {
    BigFloat r(x.prec());
    mpfr_sqrt(r.v_, x.v_, MPFR_RNDN);
    double rv = std::fabs(mpfr_get_d(r.v_, MPFR_RNDN));
    if (rv > 0) r.bump_err(x.err_bound() / (2 * rv));
    r.add_ulp();
    return r;
}
BigFloat BigFloat::exp(const BigFloat& x) {
    BigFloat r(x.prec());
    mpfr_exp(r.v_, x.v_, MPFR_RNDN);
    double rv = std::fabs(mpfr_get_d(r.v_, MPFR_RNDN));
    r.bump_err(rv * x.err_bound() * (1 + x.err_bound()));
    r.add_ulp();
    return r;
}
BigFloat BigFloat::sin(const BigFloat& x) {
    BigFloat r(x.prec());
    mpfr_sin(r.v_, x.v_, MPFR_RNDN);
    r.bump_err(x.err_bound());
    r.add_ulp();
    return r;
}
BigFloat BigFloat::cos(const BigFloat& x) {
    BigFloat r(x.prec());
    mpfr_cos(r.v_, x.v_, MPFR_RNDN);
    r.bump_err(x.err_bound());
    r.add_ulp();
    return r;
}
BigFloat BigFloat::abs() const {
    BigFloat r(*this);
    mpfr_abs(r.v_, r.v_, MPFR_RNDN);
    return r;
}

BigComplex operator/(const BigComplex& a, const BigComplex& b) {
    BigFloat n = b.re * b.re + b.im * b.im;
    return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
}

namespace {

BigComplex q_at(const QuadraticPoint& tau, long prec) {
    BigFloat two_pi = BigFloat::pi(prec) + BigFloat::pi(prec);
    BigFloat y = BigFloat::of(tau.y_coef, prec) * BigFloat::sqrt(BigFloat::of(ZZ(tau.Dy), prec));
    BigFloat x = BigFloat::of(tau.x, prec);
    BigFloat mod = BigFloat::exp(-(two_pi * y));
    BigFloat phase = two_pi * x;
    return {mod * BigFloat::cos(phase), mod * BigFloat::sin(phase)};
}

// sum a_n q^n; factor `deriv` weights term n by n.  The truncation tail is
// bounded from the observed log-magnitude slope of the last computed terms
// (with margin) -- the terms decay geometrically once |q|^n dominates the
// subexponential coefficient growth.
BigComplex eval_series(const Series<ZZ>& s, const BigComplex& q, long prec, bool deriv) {
    BigComplex acc(prec), qn(prec);
    mpfr_set_ui(qn.re.raw(), 1, MPFR_RNDN);
    double qabs = q.abs().to_double();
    if (qabs >= 0.995) throw std::domain_error("PrecisionUnreachable: |q| too close to 1");
    double lq = std::log2(qabs);
    std::vector<std::pair<long, double>> logs;  // (n, log2 |term_n|)
    for (long n = 0; n < s.order(); ++n) {
        const ZZ& a = s.c[static_cast<size_t>(n)];
        if (a != 0) {
            BigFloat an = BigFloat::of(deriv ? ZZ(a * n) : a, prec);
            acc = acc + BigComplex{an * qn.re, an * qn.im};
            double la = static_cast<double>(mpz_sizeinbase(a.get_mpz_t(), 2));
            if (deriv) la += std::log2(static_cast<double>(n));
            logs.emplace_back(n, la + n * lq);
        }
        qn = qn * q;
    }
    if (!logs.empty()) {
        size_t w = std::min<size_t>(logs.size(), 12);
        double slope = -1e9;
        for (size_t i = logs.size() - w; i + 1 < logs.size(); ++i) {
            double ds = (logs[i + 1].second - logs[i].second) /
                        static_cast<double>(logs[i + 1].first - logs[i].first);
            slope = std::max(slope, ds);
        }
        if (w < 3) slope = lq * 0.5;  // nearly exhausted series: fall back to |q|-decay
        // log-coefficient growth of all series here is concave, so the max
        // window slope bounds every later slope; small noise margin on top
        double rhat = slope + 0.05;
        if (rhat > -0.01)
            throw std::domain_error("PrecisionUnreachable: tail not decaying");
        double tail_log2 = logs.back().second + rhat - std::log2(1.0 - std::exp2(rhat)) + 2;
        long e = static_cast<long>(std::ceil(tail_log2));
        acc.re.bump_err_2exp(e);
        acc.im.bump_err_2exp(e);
    }
    return acc;
}

long series_order_for(double qabs, long digits) {
    // |q|^M < 10^{-digits-10}
    double l = -std::log10(qabs);
    return static_cast<long>((digits + 12) / l) + 24;
}

}  // namespace

BigComplex eval_q(const Series<ZZ>& series, const QuadraticPoint& tau, long digits) {
    long prec = static_cast<long>(digits * 3.4) + 64;
    BigComplex q = q_at(tau, prec);
    return eval_series(series, q, prec, false);
}

BigComplex eval_q(const ModularSpec& spec, const QuadraticPoint& tau, long digits) {
    long prec = static_cast<long>(digits * 3.4) + 64;
    BigComplex q = q_at(tau, prec);
    double qabs = q.abs().to_double();
    long M = series_order_for(qabs, digits);
    return eval_series(expand(spec, M), q, prec, false);
}

std::optional<QQ> reconstruct_rational(const BigFloat& x, const ZZ& den_bound) {
    // continued fractions; a convergent is accepted when it sits inside the
    // tracked error bound (all comparisons at full precision).
    long prec = mpfr_get_prec(x.raw());
    mpfr_t thresh;
    mpfr_init2(thresh, 64);
    mpfr_set(thresh, x.raw(), MPFR_RNDN);  // placeholder; replaced below
    mpfr_set_d(thresh, std::max(x.err_bound() * 4, 0.0), MPFR_RNDU);
    mpfr_t floor_err;
    mpfr_init2(floor_err, 64);
    mpfr_set_ui_2exp(floor_err, 1, -(prec - 16), MPFR_RNDU);
    mpfr_add(thresh, thresh, floor_err, MPFR_RNDU);
    ZZ p0 = 0, p1 = 1, q0 = 1, q1 = 0;
    mpfr_t cur, fl, diff;
    mpfr_init2(cur, prec);
    mpfr_init2(fl, prec);
    mpfr_init2(diff, prec);
    mpfr_set(cur, x.raw(), MPFR_RNDN);
    std::optional<QQ> best;
    for (int it = 0; it < 80; ++it) {
        mpfr_floor(fl, cur);
        mpz_class a;
        mpfr_get_z(a.get_mpz_t(), fl, MPFR_RNDN);
        ZZ p2 = a * p1 + p0, q2 = a * q1 + q0;
        if (q2 > den_bound) break;
        p0 = p1;
        p1 = p2;
        q0 = q1;
        q1 = q2;
        QQ cand = qq(p1, q1);
        mpfr_sub_q(diff, x.raw(), cand.get_mpq_t(), MPFR_RNDN);
        mpfr_abs(diff, diff, MPFR_RNDU);
        if (mpfr_cmp(diff, thresh) <= 0) {
            best = cand;
            break;
        }
        mpfr_sub(cur, cur, fl, MPFR_RNDN);
        if (mpfr_zero_p(cur)) break;
        mpfr_ui_div(cur, 1, cur, MPFR_RNDN);
    }
    mpfr_clear(cur);
    mpfr_clear(fl);
    mpfr_clear(diff);
    mpfr_clear(thresh);
    mpfr_clear(floor_err);
    return best;
}

DeltaResult delta_at(const CatalogEntry& entry, const QuadraticPoint& alpha, long digits) {
    const long target = digits;
    for (long d = digits; d <= 640; d *= 2) {
        long prec = static_cast<long>(d * 3.4) + 96;
        BigComplex q = q_at(alpha, prec);
        double qabs = q.abs().to_double();
        long M = series_order_for(qabs, d) + 8;
        Series<ZZ> t_ser = expand(entry.t_spec, M);
        Series<ZZ> th_ser = expand(entry.theta_spec, M);
        BigComplex t = eval_series(t_ser, q, prec, false);
        BigComplex tq = eval_series(t_ser, q, prec, true);   // q dt/dq
        BigComplex th = eval_series(th_ser, q, prec, false);
        BigComplex thq = eval_series(th_ser, q, prec, true);
        // tau-derivative = 2 pi i * (q d/dq); the 2 pi i factors cancel in
        // t/t' * Theta'/Theta and combine with 2/(alpha - bar alpha) as
        // (1/(2 pi i)) * (-i/y) = -1/(2 pi y).
        BigFloat y = BigFloat::of(alpha.y_coef, prec) * BigFloat::sqrt(BigFloat::of(ZZ(alpha.Dy), prec));
        if (tq.abs().to_double() < 1e-30)
            throw std::domain_error("EllipticPoint: t'(alpha) = 0");
        BigComplex log_theta = thq / th;
        if (entry.theta_form == "squared") {
            BigFloat half = BigFloat::of(qq(ZZ(1), ZZ(2)), prec);
            log_theta = BigComplex{log_theta.re * half, log_theta.im * half};
        }
        BigFloat pi = BigFloat::pi(prec);
        BigFloat c = -(BigFloat::of(ZZ(1), prec) / (pi * y + pi * y));
        BigComplex inner = BigComplex{log_theta.re + c, log_theta.im};
        BigComplex delta = (t / tq) * inner;
        if (delta.re.err_below(-target - 2) || d * 2 > 640) {
            DeltaResult res{delta, std::nullopt};
            if (std::fabs(delta.im.to_double()) < 1e-15)
                res.reconstructed = reconstruct_rational(delta.re, ZZ("1000000000000"));
            return res;
        }
    }
    throw std::domain_error("PrecisionUnreachable");
}

RamanujanResult verify_ramanujan(const CatalogEntry& entry, const QuadraticPoint& alpha,
                                 const QQ& delta, long digits) {
    // The t-power series need not converge at CM arguments (t(alpha) = 1 for
    // the Apery point), so the left side is evaluated through the modular
    // route: sum (1 - k/delta) g_k t^k = Theta - (1/delta) t Theta' / t'.
    long prec = static_cast<long>(digits * 3.4) + 96;
    BigComplex q = q_at(alpha, prec);
    double qabs = q.abs().to_double();
    long M = series_order_for(qabs, digits) + 8;
    Series<ZZ> t_ser = expand(entry.t_spec, M);
    Series<ZZ> th_ser = expand(entry.theta_spec, M);
    BigComplex t = eval_series(t_ser, q, prec, false);
    BigComplex tq = eval_series(t_ser, q, prec, true);
    BigComplex th = eval_series(th_ser, q, prec, false);
    BigComplex thq = eval_series(th_ser, q, prec, true);
    if (entry.theta_form == "squared") {
        // Theta = sqrt(stored series), principal branch; Theta'/Theta halves
        BigFloat half = BigFloat::of(qq(ZZ(1), ZZ(2)), prec);
        thq = BigComplex{thq.re * half, thq.im * half};  // now Theta' * Theta / |...|: see below
        // recompute as: th = sqrt(E4) (real positive in our use), thq scaled so
        // that thq / th stays the log-derivative of Theta
        BigFloat r = th.abs();
        BigFloat sq = BigFloat::sqrt(r);
        // thq currently = (1/2)(Theta^2)' ; divide by Theta to get Theta' sq ratio
        thq = thq / th;                       // = Theta'/Theta
        thq = BigComplex{thq.re * sq, thq.im * sq};  // = Theta'
        th = BigComplex{sq, BigFloat(prec)};
    }
    BigFloat iv = BigFloat::of(QQ(1) / delta, prec);
    // LHS = Theta - (1/delta) t Theta'/t'   (q d/dq ratios: 2 pi i cancels)
    BigComplex lhs = th - BigComplex{(t * thq / tq).re * iv, (t * thq / tq).im * iv};
    // RHS = t Theta / (q dt/dq) * (1/delta) * (-1/(2 pi y))
    BigFloat y = BigFloat::of(alpha.y_coef, prec) * BigFloat::sqrt(BigFloat::of(ZZ(alpha.Dy), prec));
    BigFloat pi = BigFloat::pi(prec);
    BigComplex rhs = (t * th) / tq;
    BigFloat scale = -(iv / (pi * y + pi * y));
    rhs = BigComplex{rhs.re * scale, rhs.im * scale};
    BigFloat diff = (lhs - rhs).abs();
    RamanujanResult res;
    double dv = diff.to_double();
    res.residual_log10 = dv > 0 ? std::log10(dv) : -400;
    res.pass = res.residual_log10 < -static_cast<double>(digits);
    res.lhs = lhs.re.str(digits + 5);
    res.rhs = rhs.re.str(digits + 5);
    return res;
}

RamanujanResult verify_chudnovsky(long digits) {
    long prec = static_cast<long>(digits * 3.4) + 96;
    // LHS with exact weights: sum (1 + 545140134 k / 13591409) g_k (-1/640320^3)^k
    QQ t0 = qq(ZZ(-1), pow_zz(ZZ(640320), 3));
    QQ winc = qq(ZZ(545140134), ZZ(13591409));
    BigFloat lhs(prec);
    QQ tk = 1;
    for (long k = 0;; ++k) {
        ZZ g = seq_term("hyper_sixth3", k);
        QQ term = (QQ(1) + QQ(k) * winc) * QQ(g) * tk;
        lhs = lhs + BigFloat::of(term, prec);
        tk *= t0;
        double mag = std::fabs(mpq_get_d(term.get_mpq_t()));
        if (k > 3 && mag < std::pow(10.0, -static_cast<double>(digits) - 14)) break;
    }
    BigFloat rhs = BigFloat::of(ZZ(426880), prec) * BigFloat::sqrt(BigFloat::of(ZZ(10005), prec)) /
                   (BigFloat::of(ZZ(13591409), prec) * BigFloat::pi(prec));
    BigFloat diff = (lhs - rhs).abs();
    RamanujanResult res;
    double dv = diff.to_double();
    res.residual_log10 = dv > 0 ? std::log10(dv) : -400;
    res.pass = res.residual_log10 < -static_cast<double>(digits);
    res.lhs = lhs.str(digits + 5);
    res.rhs = rhs.str(digits + 5);
    return res;
}

}  // namespace sc
