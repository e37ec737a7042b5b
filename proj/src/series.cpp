#include "sc/series.hpp"

namespace sc {

Series<QQ> log_series(const Series<QQ>& f) {
    if (f.order() == 0 || f.c[0] != 1) throw std::domain_error("BadConstantTerm");
    long n = f.order();
    Series<QQ> fp(n, f.grade);
    for (long i = 1; i < n; ++i) fp.c[i - 1] = f.c[i] * i;
    Series<QQ> g = fp / f;  // f'/f, order n
    Series<QQ> r(n, f.grade);
    for (long i = 1; i < n; ++i) r.c[i] = g.c[i - 1] / QQ(i);
    return r;
}

Series<QQ> exp_series(const Series<QQ>& f) {
    if (f.order() == 0) return Series<QQ>(0, f.grade);
    if (f.c[0] != 0) throw std::domain_error("BadConstantTerm");
    long n = f.order();
    Series<QQ> e(n, f.grade);
    e.c[0] = 1;
    // e' = f' e  =>  n e_n = sum_{k=1}^{n} k f_k e_{n-k}
    for (long m = 1; m < n; ++m) {
        QQ acc = 0;
        for (long k = 1; k <= m; ++k) {
            if (f.c[k] != 0) acc += QQ(k) * f.c[k] * e.c[m - k];
        }
        e.c[m] = acc / QQ(m);
    }
    return e;
}

Series<CyclotomicInt> twist(const Series<CyclotomicInt>& f, long p, long k) {
    if (f.grade % p != 0) throw std::domain_error("GradeMismatch");
    Series<CyclotomicInt> r(f.order(), f.grade);
    long step = f.grade / p;  // index i corresponds to q^{i/grade}; zeta exponent = k*i/step over p
    for (long i = 0; i < f.order(); ++i) {
        if (f.c[i].is_zero()) continue;
        if (i % step != 0) throw std::domain_error("GradeMismatch: exponent not in (1/p)Z");
        r.c[i] = f.c[i] * CyclotomicInt::zeta_pow(p, k * (i / step));
    }
    return r;
}

Series<QQ> to_rational(const Series<ZZ>& a) {
    Series<QQ> r(a.order(), a.grade);
    for (long i = 0; i < a.order(); ++i) r.c[i] = QQ(a.c[i]);
    return r;
}

Series<Residue> reduce_mod(const Series<ZZ>& a, const ZZ& m) {
    Series<Residue> r(a.order(), a.grade);
    for (long i = 0; i < a.order(); ++i) r.c[i] = Residue(a.c[i], m);
    return r;
}

Series<Residue> reduce_mod(const Series<QQ>& a, const ZZ& m) {
    Series<Residue> r(a.order(), a.grade);
    for (long i = 0; i < a.order(); ++i) r.c[i] = embed(a.c[i], m);
    return r;
}

}  // namespace sc
