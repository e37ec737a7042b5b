#include "sc/sequences.hpp"

#include <map>
#include <stdexcept>

namespace sc {

namespace {

ZZ franel(long n) {
    ZZ s = 0;
    for (long k = 0; k <= n; ++k) s += pow_zz(binom(n, k), 3);
    return s;
}

ZZ apery2(long n) {
    ZZ s = 0;
    for (long k = 0; k <= n; ++k) s += binom(n, k) * binom(n, k) * binom(n + k, k);
    return s;
}

ZZ apery3(long n) {
    ZZ s = 0;
    for (long k = 0; k <= n; ++k) {
        ZZ t = binom(n, k) * binom(n + k, k);
        s += t * t;
    }
    return s;
}

// All sums are computed by direct summation over the printed formulas;
// the conventions for boundary binomials are the ODE-validated ones.
const std::map<std::string, std::function<ZZ(long)>> kFamilies = {
    {"central", [](long n) -> ZZ { return binom(2 * n, n); }},
    {"legendre", [](long n) -> ZZ { ZZ b = binom(2 * n, n); return b * b; }},
    {"hyper_third", [](long n) -> ZZ { return factorial(3 * n) / pow_zz(factorial(n), 3); }},
    {"hyper_quarter_w1", [](long n) -> ZZ { return binom(4 * n, 2 * n) * binom(2 * n, n); }},
    {"hyper_sixth_w1",
     [](long n) -> ZZ {
         // 864^n (1/6)_n (5/6)_n / n!^2, integral by construction
         ZZ num = pow_zz(ZZ(24), n);
         for (long j = 0; j < n; ++j) num *= ZZ(6 * j + 1) * ZZ(6 * j + 5);
         ZZ den = pow_zz(factorial(n), 2);
         ZZ q, r;
         mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
         if (r != 0) throw std::logic_error("hyper_sixth_w1: non-integral");
         return q;
     }},
    {"zagier_a", franel},
    {"zagier_b",
     [](long n) -> ZZ {
         ZZ s = 0;
         for (long k = 0; 3 * k <= n; ++k)
             s += pow_zz(ZZ(-3), n - 3 * k) * factorial(n) /
                  (factorial(n - 3 * k) * pow_zz(factorial(k), 3));
         return s;
     }},
    {"zagier_c",
     [](long n) -> ZZ {
         ZZ s = 0;
         for (long k = 0; k <= n; ++k) s += binom(n, k) * binom(n, k) * binom(2 * k, k);
         return s;
     }},
    {"zagier_d", apery2},
    {"zagier_e",
     [](long n) -> ZZ {
         ZZ s = 0;
         for (long k = 0; 2 * k <= n; ++k) {
             ZZ b = binom(2 * k, k);
             s += pow_zz(ZZ(4), n - 2 * k) * binom(n, 2 * k) * b * b;
         }
         return s;
     }},
    {"zagier_f",
     [](long n) -> ZZ {
         ZZ s = 0;
         for (long k = 0; k <= n; ++k) s += pow_zz(ZZ(-8), n - k) * binom(n, k) * franel(k);
         return s;
     }},
    {"hyper_half_cubed", [](long n) -> ZZ { return pow_zz(binom(2 * n, n), 3); }},
    {"hyper_quarter3", [](long n) -> ZZ { return factorial(4 * n) / pow_zz(factorial(n), 4); }},
    {"hyper_third3",
     [](long n) -> ZZ { return factorial(3 * n) * factorial(2 * n) / pow_zz(factorial(n), 5); }},
    {"hyper_sixth3",
     [](long n) -> ZZ { return factorial(6 * n) / (factorial(3 * n) * pow_zz(factorial(n), 3)); }},
    {"apery3", apery3},
    {"almkvist_eta",
     [](long n) -> ZZ {
         // needs the generalized binomial: 4n-5k goes negative for k near n
         ZZ s = 0;
         for (long k = 0; k <= n; ++k) {
             ZZ t = pow_zz(binom(n, k), 3) * binom_gen(4 * n - 5 * k, 3 * n);
             s += ((n - k) % 2 == 0) ? t : -t;
         }
         return s;
     }},
    {"domb",
     [](long n) -> ZZ {
         ZZ s = 0;
         for (long k = 0; k <= n; ++k)
             s += binom(n, k) * binom(n, k) * binom(2 * k, k) * binom(2 * (n - k), n - k);
         return (n % 2 == 0) ? s : -s;
     }},
    {"almkvist_zudilin",
     [](long n) -> ZZ {
         ZZ s = 0;
         for (long k = 0; 3 * k <= n; ++k)
             s += pow_zz(ZZ(-3), n - 3 * k) * factorial(n + k) /
                  (pow_zz(factorial(k), 4) * factorial(n - 3 * k));
         return s;
     }},
    {"almkvist_epsilon",
     [](long n) -> ZZ {
         ZZ s = 0;
         for (long k = (n + 1) / 2; k <= n; ++k) {
             ZZ t = binom(n, k) * binom(2 * k, n);
             s += t * t;
         }
         return s;
     }},
    {"almkvist_zeta",
     [](long n) -> ZZ {
         ZZ s = 0;
         for (long k = 0; k <= n; ++k)
             for (long l = 0; l <= k; ++l)
                 s += binom(n, k) * binom(n, k) * binom(n, l) * binom(k, l) * binom(k + l, n);
         return s;
     }},
    {"cooper_s7",
     [](long n) -> ZZ {
         ZZ s = 0;
         for (long k = (n + 1) / 2; k <= n; ++k)
             s += binom(n, k) * binom(n, k) * binom(n + k, k) * binom(2 * k, n);
         return s;
     }},
    {"cooper_s10",
     [](long n) -> ZZ {
         ZZ s = 0;
         for (long k = 0; k <= n; ++k) s += pow_zz(binom(n, k), 4);
         return s;
     }},
    {"cooper_s18",
     [](long n) -> ZZ {
         // (-1)^k restored from the differential operator (see verify_ode);
         // boundary uses binom(m,k)=0 for m<0.
         ZZ s = 0;
         for (long k = 0; 2 * k <= n; ++k) {
             ZZ t = binom(n, k) * binom(2 * k, k) * binom(2 * (n - k), n - k) *
                    (binom(2 * n - 3 * k - 1, n) + binom(2 * n - 3 * k, n));
             s += (k % 2 == 0) ? t : -t;
         }
         return s;
     }},
    {"apery2_central", [](long n) -> ZZ { return binom(2 * n, n) * apery2(n); }},
    {"franel_central", [](long n) -> ZZ { return binom(2 * n, n) * franel(n); }},
    {"kilbourn", [](long n) -> ZZ { return pow_zz(binom(2 * n, n), 4); }},
    {"hv", [](long n) -> ZZ { return hv_term(n); }},
};

}  // namespace

bool seq_known(const std::string& family) { return kFamilies.count(family) != 0; }

std::vector<std::string> seq_families() {
    std::vector<std::string> out;
    for (auto& [k, v] : kFamilies) out.push_back(k);
    return out;
}

ZZ seq_term(const std::string& family, long n) {
    auto it = kFamilies.find(family);
    if (it == kFamilies.end()) throw std::domain_error("UnknownFamily: " + family);
    return it->second(n);
}

std::vector<ZZ> seq_coeffs(const std::string& family, long n_max) {
    auto it = kFamilies.find(family);
    if (it == kFamilies.end()) throw std::domain_error("UnknownFamily: " + family);
    std::vector<ZZ> out;
    out.reserve(static_cast<size_t>(n_max + 1));
    for (long n = 0; n <= n_max; ++n) out.push_back(it->second(n));
    return out;
}

std::vector<ZZ> hadamard(const std::string& fa, const std::string& fb, long n_max) {
    auto a = seq_coeffs(fa, n_max);
    auto b = seq_coeffs(fb, n_max);
    for (size_t i = 0; i < a.size(); ++i) a[i] *= b[i];
    return a;
}

std::vector<QQ> half_binomial_coeffs(const std::string& family, long n_max) {
    std::vector<QQ> out;
    out.reserve(static_cast<size_t>(n_max + 1));
    auto rising_sq = [&](long num, long den) {
        // returns k -> binom(-num/den, k) as a running rational
        return [num, den](long k) {
            QQ v = 1;
            for (long i = 0; i < k; ++i) v *= qq(ZZ(-num - den * i), ZZ(den * (i + 1)));
            return v;
        };
    };
    if (family == "hasse2") {
        auto b = rising_sq(1, 2);
        for (long k = 0; k <= n_max; ++k) { QQ v = b(k); out.push_back(v * v); }
    } else if (family == "rv4") {
        auto b = rising_sq(1, 2);
        for (long k = 0; k <= n_max; ++k) { QQ v = b(k); out.push_back(v * v * v * v); }
    } else if (family == "thirds4") {
        auto b1 = rising_sq(1, 3);
        auto b2 = rising_sq(2, 3);
        for (long k = 0; k <= n_max; ++k) {
            QQ v1 = b1(k), v2 = b2(k);
            out.push_back(v1 * v1 * v2 * v2);
        }
    } else {
        throw std::domain_error("UnknownFamily: " + family);
    }
    return out;
}

ZZ hv_term(long k) {
    // sum over m1+..+m5 = k of multinomial(k; m)^2, iterated over 4 free parts
    ZZ total = 0;
    ZZ fk = factorial(k);
    std::function<void(long, long, ZZ)> rec = [&](long idx, long left, ZZ prod) {
        if (idx == 4) {
            ZZ m = fk / (prod * factorial(left));
            total += m * m;
            return;
        }
        for (long x = 0; x <= left; ++x) rec(idx + 1, left - x, prod * factorial(x));
    };
    rec(0, k, ZZ(1));
    return total;
}

}  // namespace sc
