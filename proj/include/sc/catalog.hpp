#pragma once

// Data-driven registry of the modular objects: eta products, Eisenstein
// combinations, theta series, Hauptmoduln, and the per-entry data
// (sequences, operators, groups, characters, cusp and CM values).
//
// The catalog source is a compiled-in line-oriented text table
// (catalog_data.cpp); format documented in README.

#include "sc/int.hpp"
#include "sc/series.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace sc {

struct EtaProduct {
    std::vector<std::pair<long, long>> exponents;  // (m, e_m)
    // leading q-exponent sum e_m * m / 24
    QQ leading() const;
};

struct ModularSpec {
    enum class Kind {
        None,
        Eta,            // eta product
        EtaLegendre,    // q prod (1-q^n)^{c*chi_d(n)}  (Zagier D mirror)
        HauptRational,  // P(h_N)/Q(h_N)
        QRational,      // P(q)/Q(q)  (central binomial)
        E2Combo,        // sum c_N E_{2,N}, plus constant-free E2 pieces
        ChiEisenstein,  // 1 + c * sum chi_{-m}(n) q^n/(1-q^n)
        ZagierDTheta,   // the mod-5 complex-character weight-1 series
        Theta7Sq,       // (1 + 2 sum (k|7) q^k/(1-q^k))^2
        InvJ,           // 1/J = Delta / E4^3
        E4,             // Eisenstein E4
        EtaCombo        // integer combination of eta products
    };
    Kind kind = Kind::None;
    EtaProduct eta;
    long etaleg_mod = 0, etaleg_coeff = 0;
    long level = 0;
    std::vector<ZZ> num, den;                       // polynomials, ascending
    std::vector<std::pair<long, QQ>> e2n;           // (N, coeff of E_{2,N})
    long chi_m = 0;
    long chi_c = 0;
    std::vector<std::pair<ZZ, EtaProduct>> combo;
};

struct CharacterSpec {
    enum class Kind { Trivial, ChiM3, ChiM4, Chi5, ZagierD } kind = Kind::Trivial;
    // chi(d) for the quadratic kinds; throws for ZagierD (display-only).
    int eval(const ZZ& d) const;
    // chi(p)^{-1} = chi(p) for quadratic characters.
};

struct CuspRow {
    QQ t0;
    std::string eps_rule;  // "chi-4" | "chi-3" | "one"
    std::string tau;       // printed cusp, informational
};

struct CmBranch {
    long pmod = 0;                // admissibility: p % pmod in pres
    std::vector<long> pres;
    long rep_D = 0, rep_e = 1;    // cornacchia form: u^2 + rep_D v^2 = rep_e * p
    long wit_e = 1;               // Atkin-Lehner determinant in the theorem
    int chi_we = 1;               // chi(w_e)
    long cu = 0, cv = 0;          // c = cu*u + cv*v
    long du = 0, dv = 0;          // d = du*u + dv*v
};

struct CmPointData {
    std::string label;
    long a0 = 0, b0 = 0, den = 1;  // alpha = (a0 + b0 sqrt(-D)) / den
    long D = 0;
    QQ t0;
    std::optional<QQ> delta;       // for Van Hamme rows
    std::vector<CmBranch> branches;
};

struct RvhRow {
    long D = 0;
    ZZ J;
    QQ delta;  // 0 when the Van Hamme variant is excluded (elliptic point)
};

struct DiffOperator {
    // rows[i] = coefficients (ascending in t) of A_{n-i}(t), i.e. rows[0] is
    // the leading theta-power.
    std::vector<std::vector<ZZ>> rows;
    long order() const { return static_cast<long>(rows.size()) - 1; }
};

struct CatalogEntry {
    std::string id;
    std::string name;
    long ode_order = 2;
    long weight = 1;
    long level = 1;
    std::string group;
    CharacterSpec character;
    std::string sequence;
    QQ zero_order;            // r
    bool eta_theta = false;   // Theta is an eta product
    std::string status;       // proven | experimental
    std::string theta_form;   // modular | squared | none
    std::string functional;   // plain | extended | squared | experimental | none
    long functional_s = 0;
    bool ct_family = false;   // Dwork-eligible constant-term family
    ModularSpec t_spec, t_alt, theta_spec, tt_identity;
    long tt_theta_power = 0;  // tt_identity checks t^a * Theta^b; stored b (a from row)
    long tt_t_power = 0;
    DiffOperator ode;
    std::string pole;
    std::vector<CuspRow> cusps;
    std::vector<CmPointData> cm_points;
    std::vector<RvhRow> rvh;
    std::vector<std::string> notes;

    bool has_modular_t() const { return t_spec.kind != ModularSpec::Kind::None; }
};

class Catalog {
public:
    static const Catalog& instance();

    const CatalogEntry& get(const std::string& id) const;  // throws UnknownEntry
    std::vector<std::string> list() const;
    const std::map<long, std::pair<long, EtaProduct>>& hauptmoduln() const {
        return haupt_;  // N -> (w_N, eta exponents)
    }

private:
    Catalog();
    std::map<std::string, CatalogEntry> entries_;
    std::vector<std::string> order_;
    std::map<long, std::pair<long, EtaProduct>> haupt_;
};

// ---- expansion operations ---------------------------------------------------

// Exact q-expansion of a spec to `order` coefficients.  Eta products with a
// fractional total leading exponent throw NonIntegralExponent.
Series<ZZ> expand(const ModularSpec& spec, long order);
// Rational-valued expansion (for E2 combos with non-integral pieces this is
// the primary route; expand() uses it and checks integrality).
Series<QQ> expand_rational(const ModularSpec& spec, long order);

enum class EisensteinKind { E2, E4, E6 };
Series<ZZ> eisenstein(EisensteinKind kind, long order);
Series<ZZ> eisenstein_e2n(long N, long order);  // E2(q) - N E2(q^N)

enum class ThetaKind { ThetaS, ThetaH };
Series<ZZ> theta_series(ThetaKind kind, long order);

Series<ZZ> hauptmodul(long N, long order);

// Dedekind eta tail prod (1-q^{mn})^{e} machinery; q^{1/24} prefactors are
// tracked by the caller through EtaProduct::leading().
Series<ZZ> eta_tail(const EtaProduct& ep, long order);
Series<ZZ> eta_q_expansion(const EtaProduct& ep, long order);

enum class CuspClass { Zero, Pole, FiniteNonzero };
// Cusp behaviour of an eta product: sign of sum e_m gcd(s,m)^2 / m at r/s.
CuspClass eta_cusp_sign(const EtaProduct& ep, long r, long s);

}  // namespace sc
