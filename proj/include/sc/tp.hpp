#pragma once

// Construction of the bivariate polynomials T_p(x,y) from q-expansions:
// weight 1 uses the character-twisted product over Gamma_0(N)\M(N,p) coset
// representatives, weight 2 the p^2-normalized analogue.  Coefficients of
// x^m are converted from q-series to polynomials in t by greedy elimination.

#include "sc/catalog.hpp"
#include "sc/rings.hpp"
#include "sc/series.hpp"

#include <string>
#include <vector>

namespace sc {

struct TpPolynomial {
    std::string entry_id;
    long p = 0;
    long weight = 1;
    bool eta_flag = false;
    bool exact = true;                  // false for the reduced-arithmetic build
    ZZ reduced_mod;                     // 0 when exact
    std::vector<std::vector<ZZ>> coeff;  // coeff[m] = T_{p,m}(y), ascending in y
};

// Greedy elimination of a q-series against powers of t (t = q + O(q^2));
// the residual must vanish for `guard` additional q-orders past max_deg.
// Throws NotPolynomialInT with the first surviving exponent.
std::vector<ZZ> series_to_poly(const Series<ZZ>& c, const Series<ZZ>& t, long max_deg, long guard);

// Exact build; q_order 0 selects the guarded default 3p+8 integral orders.
TpPolynomial build_tp(const CatalogEntry& entry, long p, long q_order = 0);

// Reduced build over Z/p^B with B = weight+1+extra; zero-detection in the
// conversion is a consistency check mod p^B rather than an exact proof.
TpPolynomial build_tp_mod(const CatalogEntry& entry, long p, long extra = 6, long q_order = 0);

struct TpStructureReport {
    bool integral = false;        // clause (i): established by the exact build
    bool low_coeffs_vanish = false;  // (ii): T_{p,m} = 0 mod p^{w+1} for m < p
    bool leading_unit = false;       // (iii): T_{p,p+1} = chi(p) (resp. 1) mod p
    bool eta_exact = false;          // (iv): exact constant + deg T_{p,p} <= p-1
    bool eta_applicable = false;
    bool all() const {
        return integral && low_coeffs_vanish && leading_unit && (!eta_applicable || eta_exact);
    }
};
TpStructureReport verify_structure(const TpPolynomial& tp, const CatalogEntry& entry);

// theta = -T_{p,p}(t0) / T_{p,p+1}(t0) mod p^{weight+1}.
Residue unit_root_from_tp(const TpPolynomial& tp, const Residue& t0);

// Paper-layout pretty printer (powers of p factored out of constants).
std::string tp_pretty(const TpPolynomial& tp);
std::string tp_json(const TpPolynomial& tp);

}  // namespace sc
