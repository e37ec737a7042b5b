#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sc/cm.hpp"
#include "sc/congruences.hpp"
#include "sc/tp.hpp"

using namespace sc;

namespace {
std::vector<ZZ> zv(std::initializer_list<long> v) {
    std::vector<ZZ> out;
    for (long x : v) out.emplace_back(x);
    return out;
}
}  // namespace

TEST_CASE("golden T_5 for the Legendre entry") {
    auto& e = Catalog::instance().get("legendre");
    auto tp = build_tp(e, 5);
    REQUIRE(tp.coeff.size() == 7);
    CHECK(tp.coeff[0] == zv({3125}));
    CHECK(tp.coeff[1] == zv({-6250}));
    CHECK(tp.coeff[2] == zv({4375}));
    CHECK(tp.coeff[3] == zv({-1500}));
    CHECK(tp.coeff[4] == zv({275}));
    CHECK(tp.coeff[5] == zv({-26, 4096, -65536}));
    CHECK(tp.coeff[6] == zv({1}));
}

TEST_CASE("golden T_7 for the Legendre entry") {
    auto& e = Catalog::instance().get("legendre");
    auto tp = build_tp(e, 7);
    REQUIRE(tp.coeff.size() == 9);
    CHECK(tp.coeff[0] == zv({823543}));
    CHECK(tp.coeff[1] == zv({0}));
    CHECK(tp.coeff[2] == zv({-470596}));
    CHECK(tp.coeff[3] == zv({-268912, 8605184}));  // -16*7^5 (1 - 2^5 y)
    CHECK(tp.coeff[4] == zv({-72030}));
    CHECK(tp.coeff[5] == zv({-10976, 351232}));
    CHECK(tp.coeff[6] == zv({-980, -602112, 9633792}));
    CHECK(tp.coeff[7] == zv({-48, 34304, -1572864, 16777216}));
    CHECK(tp.coeff[8] == zv({-1}));
}

TEST_CASE("series_to_poly") {
    auto& e = Catalog::instance().get("legendre");
    Series<ZZ> t = expand(e.t_spec, 30);
    Series<ZZ> t2 = (t * t).truncated(30);
    CHECK(series_to_poly(t2, t, 4, 10) == zv({0, 0, 1}));
    Series<ZZ> one(30);
    one.c[0] = 1;
    CHECK(series_to_poly(one, t, 3, 10) == zv({1}));
    // E4 is not a polynomial in the Legendre t
    Series<ZZ> e4 = eisenstein(EisensteinKind::E4, 30);
    CHECK_THROWS(series_to_poly(e4, t, 4, 10));
}

TEST_CASE("structure clauses") {
    auto& leg = Catalog::instance().get("legendre");
    for (long p : {5L, 7L}) {
        auto tp = build_tp(leg, p);
        auto rep = verify_structure(tp, leg);
        INFO("legendre p=", p);
        CHECK(rep.integral);
        CHECK(rep.low_coeffs_vanish);
        CHECK(rep.leading_unit);
        CHECK(rep.eta_applicable);
        CHECK(rep.eta_exact);
        // T_{5,6} = 1 = chi_{-4}(5); T_{7,8} = -1 = chi_{-4}(7)
        CHECK(tp.coeff.back()[0] == leg.character.eval(ZZ(p)));
    }
    // weight-2 entries: T_{p,m} = 0 mod p^3 for m < p and T_{p,p+1} = 1
    for (auto id : {"apery3", "domb", "almkvist_zudilin"}) {
        auto& e = Catalog::instance().get(id);
        auto tp = build_tp(e, 5);
        auto rep = verify_structure(tp, e);
        INFO(id);
        CHECK(rep.all());
        CHECK(tp.coeff[0] == zv({9765625}));  // 5^{2*5}
    }
    // non-eta theta with r = 1/3: clauses (i)-(iii) only
    auto& h3 = Catalog::instance().get("hyper_third");
    auto tph3 = build_tp(h3, 5);
    auto rep3 = verify_structure(tph3, h3);
    CHECK(rep3.integral);
    CHECK(rep3.low_coeffs_vanish);
    CHECK(rep3.leading_unit);
    CHECK(!rep3.eta_applicable);
}

TEST_CASE("root property: T_p(F/F(t^sigma), t) = 0 mod p^{w+1}") {
    for (auto id : {"legendre", "apery3"}) {
        auto& e = Catalog::instance().get(id);
        long p = 5;
        auto tp = build_tp(e, p);
        ZZ m = pow_zz(ZZ(p), e.weight + 1);
        long order = 24;
        auto pkg = mirror_build(e, order + 2);
        Series<Residue> ts = reduce_mod(pkg.frobenius(p).truncated(order), m);
        std::vector<ZZ> g(pkg.f_of_t.c.begin(), pkg.f_of_t.c.begin() + order);
        Series<Residue> F = reduce_mod(Series<ZZ>(g), m);
        // F(t^sigma) via composition, then X = F / F(ts)
        Series<Residue> Fts(order);
        {
            Series<Residue> cur(order);
            cur.c[0] = Residue(ZZ(1), m);
            for (long k = 0; k < order; ++k) {
                if (g[static_cast<size_t>(k)] != 0) {
                    Residue ck(g[static_cast<size_t>(k)], m);
                    for (long i = 0; i < order; ++i) Fts.c[i] += ck * cur.c[i];
                }
                cur = (cur * ts).truncated(order);
                cur.c.resize(static_cast<size_t>(order));
            }
        }
        Series<Residue> X = F / Fts;
        // evaluate T_p(X(t), t) in the t-variable: y is the identity series
        Series<Residue> tser(order);
        tser.c[1] = Residue(ZZ(1), m);
        // evaluate T_p(X, t) as a t-series
        Series<Residue> acc(order);
        Series<Residue> xpow(order);
        xpow.c[0] = Residue(ZZ(1), m);
        for (size_t deg = 0; deg < tp.coeff.size(); ++deg) {
            // coefficient polynomial in y evaluated at the t series
            Series<Residue> co(order);
            Series<Residue> tpow(order);
            tpow.c[0] = Residue(ZZ(1), m);
            for (size_t j = 0; j < tp.coeff[deg].size(); ++j) {
                if (tp.coeff[deg][j] != 0) {
                    Residue cj(tp.coeff[deg][j], m);
                    for (long i = 0; i < order; ++i) co.c[i] += cj * tpow.c[i];
                }
                tpow = (tpow * tser).truncated(order);
                tpow.c.resize(static_cast<size_t>(order));
            }
            acc = acc + (co * xpow).truncated(order);
            acc.c.resize(static_cast<size_t>(order));
            xpow = (xpow * X).truncated(order);
            xpow.c.resize(static_cast<size_t>(order));
        }
        INFO(id);
        CHECK(acc.is_zero());
    }
}

TEST_CASE("elementary symmetric functions of the twisted ratios divisible by p") {
    // e_s of Theta(zeta^k q^{1/p})/Theta(q), 1 <= s < p, coefficients in p Z
    auto& e = Catalog::instance().get("legendre");
    long p = 5, Mq = 10, len = Mq * p;
    Series<ZZ> th = expand(e.theta_spec, len);
    Series<CyclotomicInt> Th(len, p);
    for (long n = 0; n < Mq; ++n) Th.c[static_cast<size_t>(n * p)] = CyclotomicInt::integer(p, th.c[static_cast<size_t>(n)]);
    Series<CyclotomicInt> ThInv = inverse(Th);
    Series<CyclotomicInt> base(len, p);
    for (long n = 0; n < len; ++n) base.c[static_cast<size_t>(n)] = CyclotomicInt::integer(p, th.c[static_cast<size_t>(n)]);
    // accumulate prod_k (X + B_k); coefficients of X^{p-s} are the e_s
    std::vector<Series<CyclotomicInt>> poly(1, Series<CyclotomicInt>(len, p));
    poly[0].c[0] = CyclotomicInt::integer(p, ZZ(1));
    for (long k = 0; k < p; ++k) {
        Series<CyclotomicInt> Bk = (twist(base, p, k) * ThInv).truncated(len);
        Bk.c.resize(static_cast<size_t>(len));
        std::vector<Series<CyclotomicInt>> next(poly.size() + 1, Series<CyclotomicInt>(len, p));
        for (size_t i = 0; i < poly.size(); ++i) {
            for (long idx = 0; idx < len; ++idx) next[i + 1].c[idx] += poly[i].c[idx];
            auto prod = (poly[i] * Bk).truncated(len);
            prod.c.resize(static_cast<size_t>(len));
            for (long idx = 0; idx < len; ++idx) next[i].c[idx] += prod.c[idx];
        }
        poly = std::move(next);
    }
    for (long s = 1; s < p; ++s) {
        const auto& es = poly[static_cast<size_t>(p - s)];
        for (long idx = 0; idx < len; ++idx) {
            ZZ val;
            REQUIRE(es.c[static_cast<size_t>(idx)].rational_part(&val));
            if (idx % p != 0) CHECK(val == 0);
            else CHECK(val % p == 0);
        }
    }
}

TEST_CASE("unit_root_from_tp") {
    auto& leg = Catalog::instance().get("legendre");
    auto tp5 = build_tp(leg, 5);
    ZZ m = ZZ(25);
    // t0 = 1/32 mod 25; theta must match the predicted weight-1 root
    Residue t0 = embed(qq(ZZ(1), ZZ(32)), m);
    Residue theta = unit_root_from_tp(tp5, t0);
    auto& pt = [&]() -> const CmPointData& {
        for (auto& c : leg.cm_points)
            if (c.label == "half_i") return c;
        throw std::logic_error("point missing");
    }();
    auto wit = find_cd(leg, pt, 5);
    REQUIRE(wit.has_value());
    CHECK(theta == predicted_root(leg, *wit));
    // boundary: evaluating at the pole-side value with vanishing leading term
    // cannot happen for these entries; NonUnitLeading is exercised via a fake
    TpPolynomial fake = tp5;
    fake.coeff[6] = {ZZ(5)};
    CHECK_THROWS(unit_root_from_tp(fake, t0));
}

TEST_CASE("reduced build matches the exact build mod p^B") {
    auto& e = Catalog::instance().get("legendre");
    auto exact = build_tp(e, 5);
    auto red = build_tp_mod(e, 5);
    REQUIRE(exact.coeff.size() == red.coeff.size());
    ZZ B = red.reduced_mod;
    for (size_t mdeg = 0; mdeg < exact.coeff.size(); ++mdeg) {
        REQUIRE(exact.coeff[mdeg].size() == red.coeff[mdeg].size());
        for (size_t j = 0; j < exact.coeff[mdeg].size(); ++j)
            CHECK((exact.coeff[mdeg][j] - red.coeff[mdeg][j]) % B == 0);
    }
}

TEST_CASE("apery3 p=11 unit root matches the t=1 witness prediction (reduced build)") {
    auto& e = Catalog::instance().get("apery3");
    auto tp = build_tp_mod(e, 11);
    ZZ m = pow_zz(ZZ(11), 3);
    Residue theta = unit_root_from_tp(tp, Residue(ZZ(1), m));
    // 11 = 3^2 + 2 * 1^2; theta = (u + v sqrt(-2))^2 mod 11^3
    auto& pt = [&]() -> const CmPointData& {
        for (auto& c : e.cm_points)
            if (c.label == "t1") return c;
        throw std::logic_error("point missing");
    }();
    auto wit = find_cd(e, pt, 11);
    REQUIRE(wit.has_value());
    CHECK(wit->rep.u * wit->rep.u + 2 * wit->rep.v * wit->rep.v == 11);
    CHECK(theta == predicted_root(e, *wit));
    // and both agree with the direct truncated sum
    auto g = seq_coeffs("apery3", 10);
    CHECK(theta == truncated_sum(g, QQ(1), 11, m));
}

TEST_CASE("pretty printer emits the factored layout") {
    auto& e = Catalog::instance().get("legendre");
    auto tp = build_tp(e, 5);
    auto s = tp_pretty(tp);
    CHECK(s.find("5^5") != std::string::npos);
    CHECK(s.find("2*5^5") != std::string::npos);
    CHECK(s.find("(26 - 4096*y + 65536*y^2)") != std::string::npos);
    auto j = tp_json(tp);
    CHECK(j.find("\"p\":5") != std::string::npos);
}

TEST_CASE("bad prime rejected") {
    CHECK_THROWS(build_tp(Catalog::instance().get("legendre"), 2));
}

TEST_CASE("Zagier D is excluded from the T_p construction") {
    // the complex character mod 5 falls outside the quadratic-character
    // machinery; the builder refuses rather than guessing a generalization
    CHECK_THROWS(build_tp(Catalog::instance().get("zagier_d"), 7));
}

TEST_CASE("cusp specialization of T_p: factorization shape recorded, not asserted") {
    // At a cusp value the proof sketch factors T_p(x, t0) as
    // (x - eps_p)(x - p eps'_p)^p; record the observed shape for p = 5.
    auto& e = Catalog::instance().get("legendre");
    auto tp = build_tp(e, 5);
    ZZ m = ZZ(5) * 5;
    Residue t0 = embed(qq(ZZ(1), ZZ(16)), m);
    std::vector<Residue> spec;
    for (auto& poly : tp.coeff) {
        Residue acc(ZZ(0), m), cur(ZZ(1), m);
        for (auto& c : poly) {
            acc += Residue(c, m) * cur;
            cur *= t0;
        }
        spec.push_back(acc);
    }
    // observational: the mod-p^2 specialization has the root eps_p = chi_{-4}(5) = 1
    Residue at_eps(ZZ(0), m), x(ZZ(1), m);
    for (auto& c : spec) {
        at_eps += c * x;
        x *= Residue(ZZ(1), m);
    }
    MESSAGE("T_5(x, 1/16) mod 25 at x = eps_5 = 1: ", at_eps.value.get_str(),
            " (0 = consistent with the sketched factorization)");
    CHECK(at_eps.is_zero());  // the root itself is the cusp congruence
}
