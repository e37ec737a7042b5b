#include "sc/catalog.hpp"

#include <cmath>
#include <numeric>
#include <sstream>

namespace sc {

extern const char* const kCatalogText;

QQ EtaProduct::leading() const {
    QQ s = 0;
    for (auto& [m, e] : exponents) s += qq(ZZ(m) * e, ZZ(24));
    return s;
}

int CharacterSpec::eval(const ZZ& d) const {
    ZZ r;
    switch (kind) {
        case Kind::Trivial:
            return 1;
        case Kind::ChiM3:
            r = d % 3;
            if (r < 0) r += 3;
            return r == 0 ? 0 : (r == 1 ? 1 : -1);
        case Kind::ChiM4:
            r = d % 4;
            if (r < 0) r += 4;
            if (r % 2 == 0) return 0;
            return r == 1 ? 1 : -1;
        case Kind::Chi5:
            r = d % 5;
            if (r < 0) r += 5;
            if (r == 0) return 0;
            return (r == 1 || r == 4) ? 1 : -1;
        case Kind::ZagierD:
            throw std::domain_error("ZagierD character is display-only");
    }
    return 0;
}

// ---------------------------------------------------------------------------
// parsing helpers

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

std::vector<std::string> tokens(const std::string& s) {
    std::istringstream is(s);
    std::vector<std::string> out;
    std::string t;
    while (is >> t) out.push_back(t);
    return out;
}

EtaProduct parse_eta(const std::string& body) {
    EtaProduct ep;
    for (auto& tok : tokens(body)) {
        auto parts = split(tok, '^');
        if (parts.size() != 2) throw std::runtime_error("catalog: bad eta token " + tok);
        ep.exponents.emplace_back(std::stol(parts[0]), std::stol(parts[1]));
    }
    return ep;
}

std::vector<ZZ> parse_poly(const std::string& body) {
    std::vector<ZZ> out;
    for (auto& tok : tokens(body)) out.emplace_back(tok);
    return out;
}

std::vector<ZZ> poly_mul(const std::vector<ZZ>& a, const std::vector<ZZ>& b) {
    std::vector<ZZ> c(a.size() + b.size() - 1, ZZ(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    return c;
}

std::vector<ZZ> parse_poly_factors(const std::string& body) {
    std::vector<ZZ> prod{ZZ(1)};
    for (auto& f : split(body, ';')) prod = poly_mul(prod, parse_poly(trim(f)));
    return prod;
}

ModularSpec parse_spec(const std::string& value) {
    ModularSpec sp;
    auto t = trim(value);
    auto sep = t.find(' ');
    std::string kind = sep == std::string::npos ? t : t.substr(0, sep);
    std::string rest = sep == std::string::npos ? "" : trim(t.substr(sep + 1));
    if (kind == "eta") {
        sp.kind = ModularSpec::Kind::Eta;
        sp.eta = parse_eta(rest);
    } else if (kind == "etaleg") {
        sp.kind = ModularSpec::Kind::EtaLegendre;
        auto tk = tokens(rest);
        sp.etaleg_mod = std::stol(tk.at(0));
        sp.etaleg_coeff = std::stol(tk.at(1));
    } else if (kind == "hrat" || kind == "qrat") {
        sp.kind = kind == "hrat" ? ModularSpec::Kind::HauptRational : ModularSpec::Kind::QRational;
        auto parts = split(rest, '|');
        size_t base = 0;
        if (sp.kind == ModularSpec::Kind::HauptRational) {
            sp.level = std::stol(trim(parts.at(0)));
            base = 1;
        } else if (trim(parts.at(0)).empty()) {
            base = 1;
        }
        sp.num = parse_poly_factors(parts.at(base));
        sp.den = parse_poly_factors(parts.at(base + 1));
    } else if (kind == "e2n") {
        sp.kind = ModularSpec::Kind::E2Combo;
        for (auto& tok : tokens(rest)) {
            auto kv = split(tok, ':');
            sp.e2n.emplace_back(std::stol(kv.at(0)), parse_rational(kv.at(1)));
        }
    } else if (kind == "chieis") {
        sp.kind = ModularSpec::Kind::ChiEisenstein;
        auto tk = tokens(rest);
        sp.chi_m = std::stol(tk.at(0));
        sp.chi_c = std::stol(tk.at(1));
    } else if (kind == "zdtheta") {
        sp.kind = ModularSpec::Kind::ZagierDTheta;
    } else if (kind == "theta7sq") {
        sp.kind = ModularSpec::Kind::Theta7Sq;
    } else if (kind == "invj") {
        sp.kind = ModularSpec::Kind::InvJ;
    } else if (kind == "e4") {
        sp.kind = ModularSpec::Kind::E4;
    } else if (kind == "etacombo") {
        sp.kind = ModularSpec::Kind::EtaCombo;
        for (auto& piece : split(rest, ';')) {
            auto pp = split(piece, '|');
            sp.combo.emplace_back(ZZ(trim(pp.at(0))), parse_eta(trim(pp.at(1))));
        }
    } else {
        throw std::runtime_error("catalog: unknown spec kind " + kind);
    }
    return sp;
}

CharacterSpec parse_character(const std::string& v) {
    CharacterSpec c;
    if (v == "trivial") c.kind = CharacterSpec::Kind::Trivial;
    else if (v == "chi-3") c.kind = CharacterSpec::Kind::ChiM3;
    else if (v == "chi-4") c.kind = CharacterSpec::Kind::ChiM4;
    else if (v == "chi5") c.kind = CharacterSpec::Kind::Chi5;
    else if (v == "zagier-d") c.kind = CharacterSpec::Kind::ZagierD;
    else throw std::runtime_error("catalog: unknown character " + v);
    return c;
}

std::pair<QQ, QQ> parse_pair_qq(const std::string& v) {
    auto parts = split(v, ',');
    return {parse_rational(trim(parts.at(0))), parse_rational(trim(parts.at(1)))};
}

CmPointData parse_cm(const std::string& value) {
    CmPointData pt;
    CmBranch cur;
    bool in_branch = false;
    auto flush = [&]() {
        if (in_branch) pt.branches.push_back(cur);
        cur = CmBranch();
    };
    for (auto& tok : tokens(value)) {
        if (tok == "branch") {
            flush();
            in_branch = true;
            continue;
        }
        auto kv = split(tok, '=');
        const std::string& k = kv.at(0);
        const std::string& v = kv.at(1);
        if (k == "label") pt.label = v;
        else if (k == "alpha") {
            auto p = split(v, ',');
            pt.a0 = std::stol(p.at(0));
            pt.b0 = std::stol(p.at(1));
            pt.den = std::stol(p.at(2));
        } else if (k == "D") pt.D = std::stol(v);
        else if (k == "t0") pt.t0 = parse_rational(v);
        else if (k == "delta") pt.delta = parse_rational(v);
        else if (k == "pmod") cur.pmod = std::stol(v);
        else if (k == "pres") {
            for (auto& r : split(v, '|')) cur.pres.push_back(std::stol(r));
        } else if (k == "repD") cur.rep_D = std::stol(v);
        else if (k == "repe") cur.rep_e = std::stol(v);
        else if (k == "e") cur.wit_e = std::stol(v);
        else if (k == "chiw") cur.chi_we = std::stoi(v);
        else if (k == "c") {
            auto [a, b] = parse_pair_qq(v);
            cur.cu = static_cast<long>(a.get_num().get_si());
            cur.cv = static_cast<long>(b.get_num().get_si());
            if (a.get_den() != 1 || b.get_den() != 1)
                throw std::runtime_error("catalog: fractional c coefficients unsupported");
        } else if (k == "d") {
            // halves allowed (lr512 branch uses d = u - v/2); stored doubled
            auto [a, b] = parse_pair_qq(v);
            QQ a2 = QQ(a * 2), b2 = QQ(b * 2);
            a2.canonicalize();
            b2.canonicalize();
            if (a2.get_den() != 1 || b2.get_den() != 1)
                throw std::runtime_error("catalog: d coefficients must be half-integral");
            cur.du = static_cast<long>(a2.get_num().get_si());
            cur.dv = static_cast<long>(b2.get_num().get_si());
        } else {
            throw std::runtime_error("catalog: unknown cm key " + k);
        }
    }
    flush();
    return pt;
}

}  // namespace

// CmBranch stores d-coefficients doubled; witness evaluation divides by two
// and rejects non-integral d.  (c is always integral.)

Catalog::Catalog() {
    std::istringstream is(kCatalogText);
    std::string line;
    CatalogEntry* cur = nullptr;
    bool in_haupt = false;
    while (std::getline(is, line)) {
        line = trim(line);
        if (line.empty() || line[0] == '#') continue;
        if (line.front() == '[' && line.back() == ']') {
            std::string id = line.substr(1, line.size() - 2);
            if (id == "hauptmodul") {
                in_haupt = true;
                cur = nullptr;
                continue;
            }
            in_haupt = false;
            order_.push_back(id);
            cur = &entries_[id];
            cur->id = id;
            continue;
        }
        auto eq = line.find('=');
        if (eq == std::string::npos) throw std::runtime_error("catalog: bad line " + line);
        std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));
        if (in_haupt) {
            if (key != "h") throw std::runtime_error("catalog: bad hauptmodul line");
            auto parts = split(value, '|');
            auto tk = tokens(parts.at(0));
            long N = std::stol(tk.at(0));
            long wN = std::stol(tk.at(1));
            haupt_[N] = {wN, parse_eta(trim(parts.at(1)))};
            continue;
        }
        if (!cur) throw std::runtime_error("catalog: data before first record");
        if (key == "name") cur->name = value;
        else if (key == "order") cur->ode_order = std::stol(value);
        else if (key == "weight") cur->weight = std::stol(value);
        else if (key == "level") cur->level = std::stol(value);
        else if (key == "group") cur->group = value;
        else if (key == "character") cur->character = parse_character(value);
        else if (key == "sequence") cur->sequence = value;
        else if (key == "r") cur->zero_order = parse_rational(value);
        else if (key == "status") cur->status = value;
        else if (key == "theta_form") cur->theta_form = value;
        else if (key == "functional") {
            auto tk = tokens(value);
            cur->functional = tk.at(0);
            cur->functional_s = tk.size() > 1 ? std::stol(tk.at(1)) : 0;
        } else if (key == "ct") cur->ct_family = (value == "yes");
        else if (key == "t") cur->t_spec = parse_spec(value);
        else if (key == "t_alt") cur->t_alt = parse_spec(value);
        else if (key == "theta") {
            cur->theta_spec = parse_spec(value);
            cur->eta_theta = cur->theta_spec.kind == ModularSpec::Kind::Eta;
        } else if (key == "tt") {
            auto parts = split(value, '|');
            auto tk = tokens(parts.at(0));
            cur->tt_t_power = std::stol(tk.at(0));
            cur->tt_theta_power = std::stol(tk.at(1));
            cur->tt_identity = ModularSpec();
            cur->tt_identity.kind = ModularSpec::Kind::Eta;
            cur->tt_identity.eta = parse_eta(trim(parts.at(1)));
            cur->tt_identity.num = {ZZ(tk.at(2))};  // scalar multiplier on the eta side
        } else if (key == "ode") {
            cur->ode.rows.clear();
            for (auto& row : split(value, '|')) cur->ode.rows.push_back(parse_poly(trim(row)));
        } else if (key == "pole") cur->pole = value;
        else if (key == "cusp") {
            CuspRow row;
            for (auto& tok : tokens(value)) {
                auto kv = split(tok, '=');
                if (kv.at(0) == "t0") row.t0 = parse_rational(kv.at(1));
                else if (kv.at(0) == "eps") row.eps_rule = kv.at(1);
                else if (kv.at(0) == "tau") row.tau = kv.at(1);
            }
            cur->cusps.push_back(row);
        } else if (key == "cm") cur->cm_points.push_back(parse_cm(value));
        else if (key == "rvh") {
            RvhRow row;
            for (auto& tok : tokens(value)) {
                auto kv = split(tok, '=');
                if (kv.at(0) == "D") row.D = std::stol(kv.at(1));
                else if (kv.at(0) == "J") row.J = ZZ(kv.at(1));
                else if (kv.at(0) == "delta") row.delta = parse_rational(kv.at(1));
            }
            cur->rvh.push_back(row);
        } else if (key == "note") cur->notes.push_back(value);
        else throw std::runtime_error("catalog: unknown key " + key);
    }
}

const Catalog& Catalog::instance() {
    static Catalog cat;
    return cat;
}

const CatalogEntry& Catalog::get(const std::string& id) const {
    auto it = entries_.find(id);
    if (it == entries_.end()) throw std::domain_error("UnknownEntry: " + id);
    return it->second;
}

std::vector<std::string> Catalog::list() const { return order_; }

// ---------------------------------------------------------------------------
// expansion

Series<ZZ> eta_tail(const EtaProduct& ep, long order) {
    Series<ZZ> c(order);
    if (order == 0) return c;
    c.c[0] = 1;
    for (auto& [m, e] : ep.exponents) {
        for (long n = m; n < order; n += m) {
            if (e > 0) {
                for (long rep = 0; rep < e; ++rep)
                    for (long i = order - 1; i >= n; --i) c.c[i] -= c.c[i - n];
            } else {
                for (long rep = 0; rep < -e; ++rep)
                    for (long i = n; i < order; ++i) c.c[i] += c.c[i - n];
            }
        }
    }
    return c;
}

Series<ZZ> eta_q_expansion(const EtaProduct& ep, long order) {
    QQ lead = ep.leading();
    if (lead.get_den() != 1 || lead < 0)
        throw std::domain_error("NonIntegralExponent: leading q-power " + rational_str(lead));
    long shift = static_cast<long>(lead.get_num().get_si());
    Series<ZZ> tail = eta_tail(ep, order);
    Series<ZZ> out(order);
    for (long i = 0; i + shift < order; ++i) out.c[i + shift] = tail.c[i];
    return out;
}

Series<ZZ> eisenstein(EisensteinKind kind, long order) {
    Series<ZZ> s(order);
    if (order == 0) return s;
    s.c[0] = 1;
    long k = kind == EisensteinKind::E2 ? 1 : (kind == EisensteinKind::E4 ? 3 : 5);
    ZZ mult = kind == EisensteinKind::E2 ? ZZ(-24) : (kind == EisensteinKind::E4 ? ZZ(240) : ZZ(-504));
    // sigma_k via divisor loop
    for (long d = 1; d < order; ++d) {
        ZZ dk = pow_zz(ZZ(d), static_cast<unsigned long>(k));
        for (long n = d; n < order; n += d) s.c[n] += mult * dk;
    }
    return s;
}

Series<ZZ> eisenstein_e2n(long N, long order) {
    Series<ZZ> e2 = eisenstein(EisensteinKind::E2, order);
    Series<ZZ> e2N = substitute_power(e2, N).truncated(order);
    Series<ZZ> out(order);
    for (long i = 0; i < order; ++i) out.c[i] = e2.c[i] - N * e2N.c[i];
    return out;
}

Series<ZZ> theta_series(ThetaKind kind, long order) {
    Series<ZZ> s(order);
    if (order == 0) return s;
    if (kind == ThetaKind::ThetaS) {
        long r = static_cast<long>(std::sqrt(static_cast<double>(order))) + 2;
        for (long x = -r; x <= r; ++x)
            for (long y = -r; y <= r; ++y) {
                long n = x * x + y * y;
                if (n < order) s.c[n] += 1;
            }
    } else {
        s.c[0] = 1;
        for (long d = 1; d < order; ++d) {
            long chi = d % 3 == 0 ? 0 : (d % 3 == 1 ? 1 : -1);
            if (chi == 0) continue;
            for (long n = d; n < order; n += d) s.c[n] += 6 * chi;
        }
    }
    return s;
}

Series<ZZ> hauptmodul(long N, long order) {
    auto& table = Catalog::instance().hauptmoduln();
    auto it = table.find(N);
    if (it == table.end()) throw std::domain_error("UnknownEntry: hauptmodul level " + std::to_string(N));
    return eta_q_expansion(it->second.second, order);
}

namespace {

Series<QQ> eval_poly_series(const std::vector<ZZ>& poly, const Series<QQ>& h, long order) {
    Series<QQ> acc(order);
    Series<QQ> cur(order);
    cur.c[0] = 1;
    for (size_t j = 0; j < poly.size(); ++j) {
        if (poly[j] != 0)
            for (long i = 0; i < order; ++i) acc.c[i] += QQ(poly[j]) * cur.c[i];
        if (j + 1 < poly.size()) cur = (cur * h).truncated(order);
    }
    return acc;
}

}  // namespace

Series<QQ> expand_rational(const ModularSpec& spec, long order) {
    using K = ModularSpec::Kind;
    switch (spec.kind) {
        case K::None:
            throw std::domain_error("expand: empty spec");
        case K::Eta:
            return to_rational(eta_q_expansion(spec.eta, order));
        case K::EtaLegendre: {
            // q prod (1-q^n)^{c*chi(n)} with chi the quadratic character mod m
            long m = spec.etaleg_mod;
            Series<ZZ> tail(order);
            tail.c[0] = 1;
            for (long n = 1; n < order; ++n) {
                int chi = kronecker(ZZ(n), ZZ(m));
                long e = spec.etaleg_coeff * chi;
                if (e > 0) {
                    for (long rep = 0; rep < e; ++rep)
                        for (long i = order - 1; i >= n; --i) tail.c[i] -= tail.c[i - n];
                } else if (e < 0) {
                    for (long rep = 0; rep < -e; ++rep)
                        for (long i = n; i < order; ++i) tail.c[i] += tail.c[i - n];
                }
            }
            Series<ZZ> out(order);
            for (long i = 0; i + 1 < order; ++i) out.c[i + 1] = tail.c[i];
            return to_rational(out);
        }
        case K::HauptRational: {
            Series<QQ> h = to_rational(hauptmodul(spec.level, order));
            return eval_poly_series(spec.num, h, order) / eval_poly_series(spec.den, h, order);
        }
        case K::QRational: {
            Series<QQ> q(order);
            if (order > 1) q.c[1] = 1;
            return eval_poly_series(spec.num, q, order) / eval_poly_series(spec.den, q, order);
        }
        case K::E2Combo: {
            Series<QQ> acc(order);
            for (auto& [N, coef] : spec.e2n) {
                Series<QQ> e = to_rational(eisenstein_e2n(N, order));
                for (long i = 0; i < order; ++i) acc.c[i] += coef * e.c[i];
            }
            return acc;
        }
        case K::ChiEisenstein: {
            Series<ZZ> s(order);
            s.c[0] = 1;
            for (long d = 1; d < order; ++d) {
                int chi = kronecker(ZZ(-spec.chi_m), ZZ(d));
                if (chi == 0) continue;
                for (long n = d; n < order; n += d) s.c[n] += spec.chi_c * chi;
            }
            return to_rational(s);
        }
        case K::ZagierDTheta: {
            // 1 + sum_k c(k mod 5) q^k/(1-q^k), c = [0,3,1,-1,-3]
            static const long cmod[5] = {0, 3, 1, -1, -3};
            Series<ZZ> s(order);
            s.c[0] = 1;
            for (long d = 1; d < order; ++d) {
                long cd = cmod[d % 5];
                if (cd == 0) continue;
                for (long n = d; n < order; n += d) s.c[n] += cd;
            }
            return to_rational(s);
        }
        case K::Theta7Sq: {
            Series<ZZ> s(order);
            s.c[0] = 1;
            for (long d = 1; d < order; ++d) {
                int chi = kronecker(ZZ(d), ZZ(7));
                if (chi == 0) continue;
                for (long n = d; n < order; n += d) s.c[n] += 2 * chi;
            }
            return to_rational((s * s).truncated(order));
        }
        case K::InvJ: {
            EtaProduct delta;
            delta.exponents = {{1, 24}};
            Series<ZZ> num = eta_q_expansion(delta, order);
            Series<ZZ> e4 = eisenstein(EisensteinKind::E4, order);
            Series<ZZ> den = ((e4 * e4).truncated(order) * e4).truncated(order);
            return to_rational(num) / to_rational(den);
        }
        case K::E4:
            return to_rational(eisenstein(EisensteinKind::E4, order));
        case K::EtaCombo: {
            Series<QQ> acc(order);
            for (auto& [coef, ep] : spec.combo) {
                Series<ZZ> e = eta_q_expansion(ep, order);
                for (long i = 0; i < order; ++i) acc.c[i] += QQ(coef) * e.c[i];
            }
            return acc;
        }
    }
    throw std::logic_error("expand: unreachable");
}

Series<ZZ> expand(const ModularSpec& spec, long order) {
    Series<QQ> r = expand_rational(spec, order);
    Series<ZZ> out(order);
    for (long i = 0; i < order; ++i) {
        if (r.c[i].get_den() != 1)
            throw std::domain_error("expand: non-integral coefficient at q^" + std::to_string(i));
        out.c[i] = r.c[i].get_num();
    }
    return out;
}

CuspClass eta_cusp_sign(const EtaProduct& ep, long r, long s) {
    if (std::gcd(r, s) != 1) throw std::domain_error("eta_cusp_sign: gcd(r,s) != 1");
    QQ sum = 0;
    for (auto& [m, e] : ep.exponents) {
        long g = std::gcd(s, m);
        sum += qq(ZZ(e) * g * g, ZZ(m));
    }
    if (sum > 0) return CuspClass::Zero;
    if (sum < 0) return CuspClass::Pole;
    return CuspClass::FiniteNonzero;
}

}  // namespace sc
