#pragma once

// Per-entry analytic package: t(q), Theta(q), F(t), q(t), the excellent
// Frobenius lift t^sigma(t), and the consistency checks tying sequences to
// modular data and to the differential operators.

#include "sc/catalog.hpp"
#include "sc/sequences.hpp"
#include "sc/series.hpp"

#include <map>

namespace sc {

struct MirrorPackage {
    const CatalogEntry* entry = nullptr;
    long order = 0;
    Series<ZZ> t_of_q;
    Series<ZZ> theta_of_q;   // or Theta^2 when the entry is a squared-theta case
    bool theta_squared = false;
    Series<ZZ> q_of_t;
    Series<ZZ> f_of_t;
    std::map<long, Series<ZZ>> sigma_cache;  // p -> t^sigma(t), write-once

    const Series<ZZ>& frobenius(long p);
};

// Builds the package to q/t-order `order` and verifies F(t(q)) = Theta(q)
// (or its squared variant) exactly; mismatch throws IdentityMismatch with the
// first failing order.
MirrorPackage mirror_build(const CatalogEntry& entry, long order);

// t^sigma(t) = t(q(t)^p) as an integer t-series to `order` coefficients.
Series<ZZ> frobenius_lift(const MirrorPackage& pkg, long p, long order);

// Applies the entry's differential operator to sum of seq * t^k; returns the
// first order with a nonzero coefficient, or -1 when it vanishes through
// `order` coefficients.
long verify_ode(const CatalogEntry& entry, long order);

// Second MUM solution F log t + G: returns G (rational, G(0)=0) from the
// Frobenius-method recurrence.
Series<QQ> second_solution(const CatalogEntry& entry, long order);

// Canonical coordinate q(t) = t exp(G/F) computed over the rationals from
// the ODE route; the modular route is reverse(t_of_q).
Series<QQ> canonical_coordinate_ode(const CatalogEntry& entry, long order);

}  // namespace sc
