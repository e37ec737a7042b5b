#include "sc/congruences.hpp"

#include <sstream>

namespace sc {

namespace {

Series<Residue> compose_mod(const std::vector<ZZ>& coeffs, const Series<Residue>& g, long order,
                            const ZZ& m) {
    // sum coeffs[k] g^k truncated; g has positive valuation
    Series<Residue> acc(order);
    Series<Residue> cur(order);
    if (order > 0) cur.c[0] = Residue(ZZ(1), m);
    long v = std::max<long>(1, g.valuation());
    for (size_t k = 0; k < coeffs.size(); ++k) {
        if (static_cast<long>(k) * v >= order && k > 0) break;
        if (coeffs[k] != 0) {
            Residue ck(coeffs[k], m);
            for (long i = 0; i < order; ++i) acc.c[i] += ck * cur.c[i];
        }
        if (k + 1 < coeffs.size()) {
            cur = (cur * g).truncated(order);
            cur.c.resize(static_cast<size_t>(order));
        }
    }
    return acc;
}

CongruenceVerdict compare(const std::string& id, const std::string& check, long p, const ZZ& m,
                          const Series<Residue>& lhs, const Series<Residue>& rhs, long t_order) {
    CongruenceVerdict v;
    v.entry_id = id;
    v.check = check;
    v.p = p;
    v.modulus = m;
    v.t_order = t_order;
    v.pass = true;
    long n = std::min<long>({lhs.order(), rhs.order(), t_order});
    for (long i = 0; i < n; ++i) {
        Residue d = lhs.c[i] - rhs.c[i];
        if (!d.is_zero()) {
            v.pass = false;
            v.fail_exponent = i;
            v.fail_residue = d.value;
            break;
        }
    }
    return v;
}

}  // namespace

TruncationPoly truncate_series(const CatalogEntry& entry, long p) {
    if (!is_prime(ZZ(p))) throw std::domain_error("BadPrime: " + std::to_string(p));
    TruncationPoly tp;
    tp.entry_id = entry.id;
    tp.p = p;
    tp.coeffs = seq_coeffs(entry.sequence, p - 1);
    return tp;
}

CongruenceVerdict check_functional(MirrorPackage& pkg, long p, long s, long t_order) {
    const CatalogEntry& e = *pkg.entry;
    if (e.level % p == 0) throw std::domain_error("BadPrime: p divides the level");
    if (t_order > pkg.order) throw std::domain_error("InsufficientOrder");
    ZZ m = pow_zz(ZZ(p), static_cast<unsigned long>(s));
    Series<Residue> ts = reduce_mod(pkg.frobenius(p).truncated(t_order), m);
    std::vector<ZZ> g(pkg.f_of_t.c.begin(),
                      pkg.f_of_t.c.begin() + std::min<long>(t_order, pkg.f_of_t.order()));
    Series<Residue> F = reduce_mod(Series<ZZ>(g), m);
    Series<Residue> Fts = compose_mod(g, ts, t_order, m);
    std::vector<ZZ> gp(g.begin(), g.begin() + std::min<size_t>(g.size(), static_cast<size_t>(p)));
    gp.resize(static_cast<size_t>(t_order), ZZ(0));  // exact polynomial: known zeros
    Series<Residue> Fp = reduce_mod(Series<ZZ>(gp), m);
    Series<Residue> rhs = (Fp * Fts).truncated(t_order);
    auto v = compare(e.id, "functional", p, m, F, rhs, t_order);
    return v;
}

CongruenceVerdict check_functional_extended(MirrorPackage& pkg, long p, long t_order) {
    const CatalogEntry& e = *pkg.entry;
    ZZ m = pow_zz(ZZ(p), 3);
    Series<Residue> ts = reduce_mod(pkg.frobenius(p).truncated(t_order), m);
    std::vector<ZZ> g(pkg.f_of_t.c.begin(),
                      pkg.f_of_t.c.begin() + std::min<long>(t_order, pkg.f_of_t.order()));
    if (static_cast<long>(g.size()) <= p) throw std::domain_error("InsufficientOrder");
    Series<Residue> F = reduce_mod(Series<ZZ>(g), m);
    Series<Residue> Fts = compose_mod(g, ts, t_order, m);
    std::vector<ZZ> fp(g.begin(), g.begin() + p);
    fp.resize(static_cast<size_t>(std::max<long>(p + 1, t_order)), ZZ(0));
    fp[static_cast<size_t>(p)] = g[static_cast<size_t>(p)] - g[1];  // F_p + (g_p - g_1) t^p
    Series<Residue> rhs = (reduce_mod(Series<ZZ>(fp), m) * Fts).truncated(t_order);
    auto v = compare(e.id, "functional_extended", p, m, F, rhs, t_order);
    bool collapse = (g[static_cast<size_t>(p)] - g[1]) % m == 0;
    v.note = collapse ? "g_p = g_1 mod p^3 (collapses to the plain congruence)"
                      : "g_p != g_1 mod p^3";
    return v;
}

SquaredVerdicts check_squared(MirrorPackage& pkg, long p, long t_order) {
    const CatalogEntry& e = *pkg.entry;
    ZZ m = pow_zz(ZZ(p), 3);
    SquaredVerdicts out;
    long n2 = std::max<long>(2 * p + 1, t_order);
    std::vector<ZZ> g = seq_coeffs(e.sequence, std::max(n2, pkg.order));

    // (a) Ftilde_p = F_p^2 mod p^3 as polynomials (degrees >= p must vanish)
    {
        CongruenceVerdict v;
        v.entry_id = e.id;
        v.check = "squared_truncation";
        v.p = p;
        v.modulus = m;
        v.t_order = 2 * p - 1;
        v.pass = true;
        std::vector<ZZ> fp2(static_cast<size_t>(2 * p - 1), ZZ(0));
        for (long i = 0; i < p; ++i)
            for (long j = 0; j < p; ++j) fp2[static_cast<size_t>(i + j)] += g[i] * g[j];
        for (long k = 0; k < 2 * p - 1; ++k) {
            ZZ expect = 0;
            if (k < p) {
                for (long i = 0; i <= k; ++i) expect += g[i] * g[k - i];  // gtilde_k
            }
            if ((fp2[static_cast<size_t>(k)] - expect) % m != 0) {
                v.pass = false;
                v.fail_exponent = k;
                v.fail_residue = (fp2[static_cast<size_t>(k)] - expect) % m;
                break;
            }
        }
        out.trunc_square = v;
    }
    // (b) gtilde_p = 2 g_p mod p^3
    {
        CongruenceVerdict v;
        v.entry_id = e.id;
        v.check = "squared_gp";
        v.p = p;
        v.modulus = m;
        ZZ gt = 0;
        for (long i = 0; i <= p; ++i) gt += g[i] * g[p - i];
        v.pass = (gt - 2 * g[static_cast<size_t>(p)]) % m == 0;
        if (!v.pass) v.fail_residue = (gt - 2 * g[static_cast<size_t>(p)]) % m;
        out.gp_doubling = v;
    }
    // (c) divisibility ladder
    {
        CongruenceVerdict v;
        v.entry_id = e.id;
        v.check = "divisibility_ladder";
        v.p = p;
        v.modulus = ZZ(p);
        v.pass = true;
        for (long k = 1; k < p; ++k) {
            long want = 0;
            if (6 * k > p && 2 * k < p) want = 1;
            else if (2 * k > p && 6 * k < 5 * p) want = 2;
            else if (6 * k > 5 * p && k < p) want = 3;
            if (want > 0 && g[static_cast<size_t>(k)] % pow_zz(ZZ(p), want) != 0) {
                v.pass = false;
                v.fail_exponent = k;
                v.fail_residue = g[static_cast<size_t>(k)] % pow_zz(ZZ(p), want);
                break;
            }
        }
        out.ladder = v;
    }
    // (d) F^2 = F(ts)^2 F_p^2 mod p^3 and (e) the deduced plain congruence
    {
        Series<Residue> ts = reduce_mod(pkg.frobenius(p).truncated(t_order), m);
        std::vector<ZZ> gt(g.begin(), g.begin() + t_order);
        Series<Residue> F = reduce_mod(Series<ZZ>(gt), m);
        Series<Residue> Fts = compose_mod(gt, ts, t_order, m);
        std::vector<ZZ> fp(g.begin(), g.begin() + p);
        fp.resize(static_cast<size_t>(t_order), ZZ(0));
        Series<Residue> Fp = reduce_mod(Series<ZZ>(fp), m);
        Series<Residue> lhs = (F * F).truncated(t_order);
        Series<Residue> rhs =
            ((((Fts * Fts).truncated(t_order) * Fp).truncated(t_order)) * Fp).truncated(t_order);
        out.functional_sq = compare(e.id, "functional_squared", p, m, lhs, rhs, t_order);
        Series<Residue> rhs2 = (Fts * Fp).truncated(t_order);
        out.functional = compare(e.id, "functional", p, m, F, rhs2, t_order);
    }
    return out;
}

CongruenceVerdict check_dwork(MirrorPackage& pkg, long p, long r, long t_order, bool strengthened) {
    const CatalogEntry& e = *pkg.entry;
    if (!e.ct_family) throw std::domain_error("check_dwork: not a constant-term family");
    ZZ m = pow_zz(ZZ(p), static_cast<unsigned long>(strengthened ? 2 * r : r));
    long need = 1;
    for (long i = 0; i < r; ++i) need *= p;  // p^r coefficients for F_{p^r}
    std::vector<ZZ> g = seq_coeffs(e.sequence, std::max<long>(need, t_order));
    Series<Residue> ts = reduce_mod(pkg.frobenius(p).truncated(t_order), m);
    std::vector<ZZ> gt(g.begin(), g.begin() + t_order);
    Series<Residue> F = reduce_mod(Series<ZZ>(gt), m);
    Series<Residue> Fts = compose_mod(gt, ts, t_order, m);
    std::vector<ZZ> gpr(g.begin(), g.begin() + std::min<long>(need, t_order));
    gpr.resize(static_cast<size_t>(t_order), ZZ(0));  // exact polynomial
    Series<Residue> Fpr = reduce_mod(Series<ZZ>(gpr), m);
    std::vector<ZZ> gpr1(g.begin(), g.begin() + need / p);
    Series<Residue> Fpr1_ts = compose_mod(gpr1, ts, t_order, m);
    Series<Residue> lhs = (F * Fpr1_ts).truncated(t_order);
    Series<Residue> rhs = (Fpr * Fts).truncated(t_order);
    auto v = compare(e.id, strengthened ? "dwork_strengthened" : "dwork", p, m, lhs, rhs, t_order);
    std::ostringstream os;
    os << "r=" << r;
    v.note = os.str();
    return v;
}

std::string verdict_json(const CongruenceVerdict& v) {
    std::ostringstream os;
    os << "{\"entry\":\"" << v.entry_id << "\",\"check\":\"" << v.check << "\",\"p\":" << v.p
       << ",\"modulus\":\"" << v.modulus.get_str() << "\",\"order\":" << v.t_order
       << ",\"status\":\"" << (v.pass ? "pass" : "fail") << "\"";
    if (!v.pass)
        os << ",\"witness\":{\"exponent\":" << v.fail_exponent << ",\"residue\":\""
           << v.fail_residue.get_str() << "\"}";
    if (!v.note.empty()) os << ",\"note\":\"" << v.note << "\"";
    os << "}";
    return os.str();
}

}  // namespace sc
