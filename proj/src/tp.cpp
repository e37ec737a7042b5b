#include "sc/tp.hpp"

#include <sstream>

namespace sc {

namespace {

// mod == 0: exact arithmetic with exact zero tests; otherwise everything is
// read through symmetric lifts mod `mod` and "vanish" means divisible by it.
std::vector<ZZ> series_to_poly_impl(const Series<ZZ>& c, const Series<ZZ>& t, long max_deg,
                                    long guard, const ZZ& mod) {
    if (t.order() < 2 || t.c[0] != 0 || t.c[1] != 1)
        throw std::domain_error("series_to_poly: t must be q + O(q^2)");
    long horizon = std::min(c.order(), t.order());
    Series<ZZ> residual = c.truncated(horizon);
    ZZ half = mod / 2;
    auto lift = [&](ZZ v) {
        if (mod == 0) return v;
        mpz_mod(v.get_mpz_t(), v.get_mpz_t(), mod.get_mpz_t());
        if (v > half) v -= mod;
        return v;
    };
    std::vector<ZZ> poly;
    Series<ZZ> tpow(horizon);
    tpow.c[0] = 1;
    for (long j = 0; j <= max_deg; ++j) {
        ZZ coef = lift(residual.c[static_cast<size_t>(j)]);
        poly.push_back(coef);
        if (coef != 0) {
            for (long i = j; i < horizon; ++i)
                residual.c[static_cast<size_t>(i)] -= coef * tpow.c[static_cast<size_t>(i)];
        }
        if (j < max_deg) {
            tpow = (tpow * t).truncated(horizon);
            tpow.c.resize(static_cast<size_t>(horizon));
        }
    }
    long check_to = std::min(horizon, max_deg + 1 + guard);
    for (long i = max_deg + 1; i < check_to; ++i) {
        if (lift(residual.c[static_cast<size_t>(i)]) != 0)
            throw std::domain_error("NotPolynomialInT: residual at q^" + std::to_string(i));
    }
    while (!poly.empty() && poly.back() == 0) poly.pop_back();
    if (poly.empty()) poly.push_back(ZZ(0));
    return poly;
}

}  // namespace

std::vector<ZZ> series_to_poly(const Series<ZZ>& c, const Series<ZZ>& t, long max_deg, long guard) {
    return series_to_poly_impl(c, t, max_deg, guard, ZZ(0));
}

namespace {

using CycSeries = Series<CyclotomicInt>;

void reduce_inplace(CycSeries& s, const ZZ& m) {
    if (m == 0) return;
    for (auto& cv : s.c)
        for (auto& z : cv.coeffs) {
            mpz_mod(z.get_mpz_t(), z.get_mpz_t(), m.get_mpz_t());
        }
}

CycSeries lift_to_grade_p(const Series<ZZ>& f, long p, long scale, long len) {
    // place coefficient of q^n at index n*scale in a grade-p series
    CycSeries out(len, p);
    for (long n = 0; n < f.order() && n * scale < len; ++n)
        out.c[static_cast<size_t>(n * scale)] = CyclotomicInt::integer(p, f.c[static_cast<size_t>(n)]);
    return out;
}

TpPolynomial build_impl(const CatalogEntry& entry, long p, long q_order, const ZZ& mod) {
    if (entry.level % p == 0) throw std::domain_error("BadPrime: p divides the level");
    long w = entry.weight;
    long maxdeg_bound = [&]() {
        // y-degree of T_{p,m} is <= m*r
        QQ mr = QQ(p + 1) * entry.zero_order;
        ZZ fl = mr.get_num() / mr.get_den();
        return fl.get_si();
    }();
    if (q_order == 0) q_order = maxdeg_bound + 2 * maxdeg_bound + 4;
    if (q_order < p + 2) q_order = p + 2;  // at least p(p+2) grade-1/p coefficients

    long len = q_order * p;  // grade-p coefficient count
    // Theta(zeta^k q^{1/p}) lives on every grade index, so Theta is needed to
    // q-order len; Theta(q) and Theta(q^p) only read the first q_order terms.
    Series<ZZ> theta_int = expand(entry.theta_spec, len);
    Series<ZZ> t_int = expand(entry.t_spec, q_order);

    CycSeries Th = lift_to_grade_p(theta_int, p, p, len);
    CycSeries ThInv = inverse(Th);
    reduce_inplace(ThInv, mod);
    CycSeries A = Th;  // Theta(q^p) / Theta(q)
    {
        CycSeries Thp(len, p);
        for (long n = 0; n < theta_int.order() && n * p * p < len; ++n)
            Thp.c[static_cast<size_t>(n * p * p)] =
                CyclotomicInt::integer(p, theta_int.c[static_cast<size_t>(n)]);
        A = (Thp * ThInv).truncated(len);
        A.c.resize(static_cast<size_t>(len));
        reduce_inplace(A, mod);
    }

    // weight 2 with a nontrivial character needs the same chi(p)^{-1} factors
    // as weight 1 for the x^m coefficients to be functions of t (the twisted
    // Almkvist eta entry carries the quadratic character mod 5)
    int chi_p = entry.character.eval(ZZ(p));
    if (chi_p == 0) throw std::domain_error("BadPrime: chi(p) = 0");

    // polynomial in x with grade-p series coefficients; poly[i] = coeff of x^i
    std::vector<CycSeries> poly;
    poly.emplace_back(len, p);
    poly[0].c[0] = CyclotomicInt::integer(p, ZZ(1));
    auto mul_linear = [&](const ZZ& c0, const CycSeries& c1) {
        // multiply by (c0 + c1 x)
        std::vector<CycSeries> next(poly.size() + 1, CycSeries(len, p));
        for (size_t i = 0; i < poly.size(); ++i) {
            if (c0 != 0) {
                CyclotomicInt s = CyclotomicInt::integer(p, c0);
                for (long idx = 0; idx < len; ++idx)
                    next[i].c[idx] += poly[i].c[idx] * s;
            }
            CycSeries prod = (poly[i] * c1).truncated(len);
            prod.c.resize(static_cast<size_t>(len));
            for (long idx = 0; idx < len; ++idx) next[i + 1].c[idx] += prod.c[idx];
            reduce_inplace(next[i], mod);
            reduce_inplace(next[i + 1], mod);
        }
        poly = std::move(next);
    };

    // (1 - A x)
    {
        CycSeries negA = A;
        for (auto& cv : negA.c) cv = -cv;
        mul_linear(ZZ(1), negA);
    }
    // prod_k (p^w - chi(p)^{-1} B_k x),  B_k = Theta(zeta^k q^{1/p}) / Theta(q)
    CycSeries base(len, p);
    for (long n = 0; n < theta_int.order() && n < len; ++n)
        base.c[static_cast<size_t>(n)] = CyclotomicInt::integer(p, theta_int.c[static_cast<size_t>(n)]);
    ZZ pw = pow_zz(ZZ(p), static_cast<unsigned long>(w));
    for (long k = 0; k < p; ++k) {
        CycSeries Bk = (twist(base, p, k) * ThInv).truncated(len);
        Bk.c.resize(static_cast<size_t>(len));
        reduce_inplace(Bk, mod);
        for (auto& cv : Bk.c) {
            cv = -cv;
            if (chi_p == -1) cv = -cv;  // times chi(p)^{-1} = chi(p)
        }
        mul_linear(pw, Bk);
    }

    // extract integer q-series per x-power and convert to polynomials in t
    TpPolynomial tp;
    tp.entry_id = entry.id;
    tp.p = p;
    tp.weight = w;
    tp.eta_flag = entry.eta_theta;
    tp.exact = (mod == 0);
    tp.reduced_mod = mod;
    ZZ half = mod / 2;
    for (long m = 0; m <= p + 1; ++m) {
        const CycSeries& ser = poly[static_cast<size_t>(m)];
        Series<ZZ> qser(q_order);
        for (long idx = 0; idx < len; ++idx) {
            ZZ val;
            if (!ser.c[static_cast<size_t>(idx)].rational_part(&val))
                throw std::domain_error("CyclotomicResidue at x^" + std::to_string(m) +
                                        " q-index " + std::to_string(idx));
            if (mod != 0 && val > half) val -= mod;  // symmetric lift for the reduced build
            if (idx % p != 0) {
                if (val != 0)
                    throw std::domain_error("CyclotomicResidue: fractional exponent at x^" +
                                            std::to_string(m));
                continue;
            }
            qser.c[static_cast<size_t>(idx / p)] = val;
        }
        QQ mr = QQ(m) * entry.zero_order;
        ZZ fl = mr.get_num() / mr.get_den();
        long deg = fl.get_si();
        tp.coeff.push_back(series_to_poly_impl(qser, t_int, deg, 2 * std::max(deg, 1L), mod));
    }
    return tp;
}

}  // namespace

TpPolynomial build_tp(const CatalogEntry& entry, long p, long q_order) {
    return build_impl(entry, p, q_order, ZZ(0));
}

TpPolynomial build_tp_mod(const CatalogEntry& entry, long p, long extra, long q_order) {
    ZZ mod = pow_zz(ZZ(p), static_cast<unsigned long>(entry.weight + 1 + extra));
    return build_impl(entry, p, q_order, mod);
}

TpStructureReport verify_structure(const TpPolynomial& tp, const CatalogEntry& entry) {
    TpStructureReport rep;
    rep.integral = tp.exact;
    long p = tp.p, w = tp.weight;
    ZZ ps1 = pow_zz(ZZ(p), static_cast<unsigned long>(w + 1));
    rep.low_coeffs_vanish = true;
    for (long m = 0; m < p; ++m)
        for (const ZZ& c : tp.coeff[static_cast<size_t>(m)])
            if (c % ps1 != 0) rep.low_coeffs_vanish = false;
    int chi_p = entry.character.eval(ZZ(p));
    const auto& lead = tp.coeff[static_cast<size_t>(p + 1)];
    rep.leading_unit = (lead[0] - chi_p) % p == 0;
    for (size_t i = 1; i < lead.size(); ++i)
        if (lead[i] % p != 0) rep.leading_unit = false;
    rep.eta_applicable = tp.eta_flag;
    if (tp.eta_flag) {
        rep.eta_exact = lead.size() == 1 && lead[0] == chi_p &&
                        static_cast<long>(tp.coeff[static_cast<size_t>(p)].size()) <= p;
        // x^0 coefficient is exactly p^{w p}
        const auto& c0 = tp.coeff[0];
        ZZ pwp = pow_zz(ZZ(p), static_cast<unsigned long>(w * p));
        if (tp.exact && (c0.size() != 1 || c0[0] != pwp)) rep.eta_exact = false;
    }
    return rep;
}

Residue unit_root_from_tp(const TpPolynomial& tp, const Residue& t0) {
    ZZ m = pow_zz(ZZ(tp.p), static_cast<unsigned long>(tp.weight + 1));
    auto eval = [&](const std::vector<ZZ>& poly) {
        Residue acc(ZZ(0), m);
        Residue tp0(t0.value, m);
        Residue cur(ZZ(1), m);
        for (const ZZ& c : poly) {
            acc += Residue(c, m) * cur;
            cur *= tp0;
        }
        return acc;
    };
    Residue num = eval(tp.coeff[static_cast<size_t>(tp.p)]);
    Residue den = eval(tp.coeff[static_cast<size_t>(tp.p + 1)]);
    if (den.value % tp.p == 0) throw std::domain_error("NonUnitLeading");
    return Residue(ZZ(0), m) - num * inv(den);
}

namespace {

// factor c = s * a * p^k with p | a false; prints like "-2*5^5", "11*5^2", "7"
std::string factored_const(const ZZ& c, long p) {
    if (c == 0) return "0";
    ZZ a = c < 0 ? ZZ(-c) : c;
    long k = 0;
    while (a % p == 0) {
        a /= p;
        ++k;
    }
    std::ostringstream os;
    if (c < 0) os << "-";
    if (a != 1 || k == 0) os << a.get_str();
    if (k > 0) {
        if (a != 1) os << "*";
        os << p << "^" << k;
    }
    return os.str();
}

std::string poly_str(const std::vector<ZZ>& poly) {
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < poly.size(); ++i) {
        if (poly[i] == 0) continue;
        ZZ a = poly[i];
        if (first) {
            if (a < 0) os << "-";
        } else {
            os << (a < 0 ? " - " : " + ");
        }
        ZZ mag = a < 0 ? ZZ(-a) : a;
        if (mag != 1 || i == 0) os << mag.get_str();
        if (i >= 1) {
            if (mag != 1) os << "*";
            os << "y";
            if (i > 1) os << "^" << i;
        }
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

}  // namespace

std::string tp_pretty(const TpPolynomial& tp) {
    std::ostringstream os;
    os << "T_" << tp.p << "(x,y) [" << tp.entry_id << ", weight " << tp.weight << "]";
    if (!tp.exact) os << " (mod " << tp.reduced_mod.get_str() << ")";
    os << "\n  ";
    bool first = true;
    for (size_t m = 0; m < tp.coeff.size(); ++m) {
        const auto& poly = tp.coeff[m];
        bool zero = true;
        for (auto& c : poly)
            if (c != 0) zero = false;
        if (zero) continue;
        std::string body;
        bool negated = false;
        if (poly.size() == 1) {
            ZZ c = poly[0];
            if (!first && c < 0) {
                negated = true;
                c = -c;
            }
            body = factored_const(first && poly[0] < 0 ? poly[0] : c, tp.p);
        } else {
            std::vector<ZZ> q = poly;
            if (q[0] < 0) {
                negated = true;
                for (auto& c : q) c = -c;
            }
            body = "(" + poly_str(q) + ")";
        }
        if (first) {
            if (negated) os << "-";
        } else {
            os << (negated ? " - " : " + ");
        }
        bool unit_body = (body == "1" && m >= 1);
        if (!unit_body) os << body;
        if (m >= 1) {
            os << (unit_body ? "x" : "*x");
            if (m > 1) os << "^" << m;
        }
        first = false;
    }
    os << "\n";
    return os.str();
}

std::string tp_json(const TpPolynomial& tp) {
    std::ostringstream os;
    os << "{\"entry\":\"" << tp.entry_id << "\",\"p\":" << tp.p << ",\"weight\":" << tp.weight
       << ",\"exact\":" << (tp.exact ? "true" : "false") << ",\"coefficients\":[";
    for (size_t m = 0; m < tp.coeff.size(); ++m) {
        if (m) os << ",";
        os << "[";
        for (size_t i = 0; i < tp.coeff[m].size(); ++i) {
            if (i) os << ",";
            os << "\"" << tp.coeff[m][i].get_str() << "\"";
        }
        os << "]";
    }
    os << "]}";
    return os.str();
}

}  // namespace sc
