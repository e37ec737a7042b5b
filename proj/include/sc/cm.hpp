#pragma once

// Specialization of the congruences at cusp values and CM points: witness
// search (c,d), predicted unit roots, and the per-theorem scan drivers.

#include "sc/catalog.hpp"
#include "sc/rings.hpp"
#include "sc/series.hpp"

#include <optional>
#include <string>
#include <vector>

namespace sc {

struct SpecializationReport {
    std::string entry_id;
    std::string check;
    std::string point;
    long p = 0;
    ZZ modulus;
    std::string status;   // pass | fail | skip
    std::string p_class;  // split | inert | bad | out-of-class | no-rep
    std::string predicted, computed;
    std::string sign;  // resolved sign for the +- theorems
    ZZ u, v;
    ZZ c, d;
    long e = 1;
    std::string note;
};

struct CDWitness {
    ZZ c, d;
    long e = 1;
    int chi_we = 1;
    QuadraticRep rep;
    QuadraticPadic emb;
    Residue alpha;   // embedded alpha mod p^{w+1}
    Residue w_unit;  // c*alpha + d mod p^{w+1}
    const CmBranch* branch = nullptr;
};

// Witness search for a catalog CM row: classify p, pick the branch by residue
// class, run cornacchia, then the deterministic sign sweep filtered by the
// divisibility sieves and the unit condition.
std::optional<CDWitness> find_cd(const CatalogEntry& entry, const CmPointData& pt, long p,
                                 std::string* why = nullptr);

// chi(d)(c alpha + d) mod p^2 (weight 1) or chi(w_e)/e (c alpha + d)^2 mod p^3.
Residue predicted_root(const CatalogEntry& entry, const CDWitness& wit);

SpecializationReport verify_cm(const CatalogEntry& entry, const CmPointData& pt, long p);
SpecializationReport verify_cusp(const CatalogEntry& entry, const CuspRow& row, long p);
SpecializationReport verify_van_hamme(const CatalogEntry& entry, const CmPointData& pt, long p);

// Named scan drivers.
SpecializationReport verify_mortenson(long p);                  // H_p(1) sign scan
SpecializationReport verify_gauss_point(long p);                // H_p(-1) Gaussian-prime scan
SpecializationReport verify_kilbourn(long p, const Series<ZZ>& level8_form);
SpecializationReport verify_sun_wang(long p);                   // elliptic-point scan
std::vector<SpecializationReport> verify_quadratic_cm(long p);  // quadratic Legendre values incl. the 2-mod-4 branch
std::vector<SpecializationReport> verify_central_points(long p);  // central-binomial specializations
std::vector<SpecializationReport> verify_rvh(const CatalogEntry& entry, long D, long p);

std::string report_json(const SpecializationReport& r);
std::string report_csv_header();
std::string report_csv(const SpecializationReport& r);

// Shared helper: sum_{k<p} weight_k g_k t0^k mod m with t0 embedded exactly.
Residue truncated_sum(const std::vector<ZZ>& g, const QQ& t0, long p, const ZZ& m);
Residue truncated_sum_weighted(const std::vector<ZZ>& g, const QQ& t0, long p, const ZZ& m,
                               const QQ& inv_delta_neg);  // weights 1 + k*(-1/delta)

}  // namespace sc
