#include "sc/mirror.hpp"

namespace sc {

const Series<ZZ>& MirrorPackage::frobenius(long p) {
    auto it = sigma_cache.find(p);
    if (it != sigma_cache.end()) return it->second;
    auto [pos, _] = sigma_cache.emplace(p, frobenius_lift(*this, p, order));
    return pos->second;
}

MirrorPackage mirror_build(const CatalogEntry& entry, long order) {
    if (!entry.has_modular_t())
        throw std::domain_error("mirror_build: entry has no modular mirror map: " + entry.id);
    MirrorPackage pkg;
    pkg.entry = &entry;
    pkg.order = order;
    pkg.t_of_q = expand(entry.t_spec, order);
    pkg.theta_of_q = expand(entry.theta_spec, order);
    pkg.theta_squared = entry.theta_form == "squared";

    std::vector<ZZ> g = seq_coeffs(entry.sequence, order > 0 ? order - 1 : 0);
    pkg.f_of_t = Series<ZZ>(std::move(g));

    if (order > 0) {
        if (pkg.t_of_q.c[0] != 0 || (order > 1 && pkg.t_of_q.c[1] != 1))
            throw std::domain_error("IdentityMismatch: t(q) not normalized q + O(q^2) for " + entry.id);
        Series<ZZ> lhs = compose(pkg.f_of_t, pkg.t_of_q);
        if (pkg.theta_squared) lhs = (lhs * lhs).truncated(lhs.order());
        Series<ZZ> diff = lhs - pkg.theta_of_q;
        for (long i = 0; i < diff.order(); ++i) {
            if (diff.c[i] != 0)
                throw std::domain_error("IdentityMismatch at order " + std::to_string(i) +
                                        " for " + entry.id);
        }
        if (order > 1) pkg.q_of_t = reverse(pkg.t_of_q);
    }
    return pkg;
}

Series<ZZ> frobenius_lift(const MirrorPackage& pkg, long p, long order) {
    if (order > pkg.order) throw std::domain_error("InsufficientOrder");
    Series<ZZ> q = pkg.q_of_t.truncated(order);
    Series<ZZ> qp(order);
    if (order > 0) qp.c[0] = 1;
    Series<ZZ> qpow = qp;
    for (long i = 0; i < p; ++i) qpow = (qpow * q).truncated(order);
    // compose t(q) with q(t)^p; inner valuation p gives horizon min(order, p*t_order)
    Series<ZZ> ts = compose(pkg.t_of_q.truncated(order), qpow);
    ts.c.resize(static_cast<size_t>(std::min<long>(order, ts.order())));
    return ts;
}

namespace {

// B_j(x) = sum_i A_{i,j} x^i where A_i are the theta-power coefficients.
QQ ode_bj(const DiffOperator& op, long j, const QQ& x) {
    QQ acc = 0;
    long n = op.order();
    for (long i = 0; i <= n; ++i) {
        const auto& row = op.rows[static_cast<size_t>(n - i)];  // rows[0] = theta^n
        if (j < static_cast<long>(row.size()) && row[static_cast<size_t>(j)] != 0) {
            QQ xp = 1;
            for (long k = 0; k < i; ++k) xp *= x;
            acc += QQ(row[static_cast<size_t>(j)]) * xp;
        }
    }
    return acc;
}

}  // namespace

long verify_ode(const CatalogEntry& entry, long order) {
    std::vector<ZZ> g = seq_coeffs(entry.sequence, order - 1);
    Series<ZZ> F(g);
    long n = entry.ode.order();
    // theta powers of F
    std::vector<Series<ZZ>> pows;
    pows.push_back(F);
    for (long i = 0; i < n; ++i) pows.push_back(theta_derivative(pows.back()));
    Series<ZZ> res(order);
    for (long i = 0; i <= n; ++i) {
        const auto& row = entry.ode.rows[static_cast<size_t>(i)];  // theta^{n-i}
        const Series<ZZ>& term = pows[static_cast<size_t>(n - i)];
        for (size_t j = 0; j < row.size(); ++j) {
            if (row[j] == 0) continue;
            for (long k = 0; k + static_cast<long>(j) < order; ++k)
                ring_addmul(res.c[k + j], row[j], term.c[static_cast<size_t>(k)]);
        }
    }
    for (long i = 0; i < order; ++i)
        if (res.c[i] != 0) return i;
    return -1;
}

Series<QQ> second_solution(const CatalogEntry& entry, long order) {
    long n = entry.ode.order();
    if (n < 2) throw std::domain_error("NotMUM: operator order < 2");
    // MUM: B_0(x) = leading * x^n
    const auto& lead_row = entry.ode.rows[0];
    if (lead_row.empty() || lead_row[0] == 0) throw std::domain_error("NotMUM: A_n(0) == 0");
    for (size_t i = 1; i < entry.ode.rows.size(); ++i)
        if (!entry.ode.rows[i].empty() && entry.ode.rows[i][0] != 0)
            throw std::domain_error("NotMUM: lower coefficient nonzero at t=0");
    QQ lead(lead_row[0]);

    std::vector<ZZ> gz = seq_coeffs(entry.sequence, order - 1);
    Series<QQ> F(order);
    for (long i = 0; i < order; ++i) F.c[i] = QQ(gz[static_cast<size_t>(i)]);

    // R = -sum_i i A_i theta^{i-1} F
    std::vector<Series<QQ>> pows;
    pows.push_back(F);
    for (long i = 0; i + 1 < n; ++i) pows.push_back(theta_derivative(pows.back()));
    Series<QQ> R(order);
    for (long i = 0; i <= n; ++i) {
        long tp = n - i;  // theta power of this row
        if (tp == 0) continue;
        const auto& row = entry.ode.rows[static_cast<size_t>(i)];
        const Series<QQ>& term = pows[static_cast<size_t>(tp - 1)];
        for (size_t j = 0; j < row.size(); ++j) {
            if (row[j] == 0) continue;
            for (long k = 0; k + static_cast<long>(j) < order; ++k)
                R.c[k + j] -= QQ(tp) * QQ(row[j]) * term.c[static_cast<size_t>(k)];
        }
    }
    // solve L(G) = R order by order: lead * m^n * g_m = R_m - sum_{j>=1} B_j(m-j) g_{m-j}
    Series<QQ> G(order);
    long max_j = 0;
    for (auto& row : entry.ode.rows) max_j = std::max<long>(max_j, static_cast<long>(row.size()) - 1);
    for (long m = 1; m < order; ++m) {
        QQ rhs = R.c[m];
        for (long j = 1; j <= std::min(max_j, m); ++j)
            rhs -= ode_bj(entry.ode, j, QQ(m - j)) * G.c[m - j];
        QQ mn = 1;
        for (long k = 0; k < n; ++k) mn *= QQ(m);
        G.c[m] = rhs / (lead * mn);
    }
    return G;
}

Series<QQ> canonical_coordinate_ode(const CatalogEntry& entry, long order) {
    Series<QQ> G = second_solution(entry, order);
    std::vector<ZZ> gz = seq_coeffs(entry.sequence, order - 1);
    Series<QQ> F(order);
    for (long i = 0; i < order; ++i) F.c[i] = QQ(gz[static_cast<size_t>(i)]);
    Series<QQ> u = exp_series(G / F);
    // q(t) = t * exp(G/F)
    Series<QQ> q(order);
    for (long i = 1; i < order; ++i) q.c[i] = u.c[i - 1];
    return q;
}

}  // namespace sc
