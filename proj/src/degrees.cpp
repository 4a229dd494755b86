#include "liecheck/degrees.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <memory>
#include <mutex>
#include <sstream>

#include "liecheck/orders.hpp"

#ifndef LIECHECK_DATA_DIR
#define LIECHECK_DATA_DIR "."
#endif

namespace liecheck {

namespace {

mpz_class pow_q(long p, long e) {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(e));
    return r;
}

}  // namespace

std::string render_degree(const DegreeExpr& e) {
    std::ostringstream num, den;
    bool num_any = false;
    if (e.scalar_num != 1) {
        num << e.scalar_num;
        num_any = true;
    }
    if (e.q_power > 0) {
        if (num_any) num << '*';
        num << 'q';
        if (e.q_power > 1) num << '^' << e.q_power;
        num_any = true;
    }
    for (const auto& [d, s] : e.numer) {
        num << "(q";
        if (d != 1) num << '^' << d;
        num << (s > 0 ? "+1)" : "-1)");
        num_any = true;
    }
    if (!num_any) num << '1';
    bool den_any = false;
    if (e.scalar_den != 1) {
        den << e.scalar_den;
        den_any = true;
    }
    for (const auto& [d, s] : e.denom) {
        den << "(q";
        if (d != 1) den << '^' << d;
        den << (s > 0 ? "+1)" : "-1)");
        den_any = true;
    }
    if (!den_any) return num.str();
    return num.str() + "/(" + den.str() + ")";
}

bool degree_applies(const DegreeExpr& e, long p, int a) {
    const mpz_class q = pow_q(p, a);
    for (const auto& c : e.conds) {
        switch (c.kind) {
            case CondKind::QOdd:
                if (p == 2) return false;
                break;
            case CondKind::QEven:
                if (p != 2) return false;
                break;
            case CondKind::QNe:
                if (q == c.a) return false;
                break;
            case CondKind::QModNe:
                if (q % c.a == c.b) return false;
                break;
            case CondKind::NEven:
            case CondKind::NOdd:
                // n-parity is resolved at materialization time
                break;
            case CondKind::Integral:
                break;
        }
    }
    for (const auto& c : e.conds) {
        if (c.kind == CondKind::Integral) {
            mpz_class num = e.scalar_num * pow_q(p, static_cast<long>(e.q_power) * a);
            for (const auto& [d, s] : e.numer) num *= pow_q(p, static_cast<long>(d) * a) + s;
            mpz_class den = e.scalar_den;
            for (const auto& [d, s] : e.denom) den *= pow_q(p, static_cast<long>(d) * a) + s;
            if (!mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t())) return false;
        }
    }
    return true;
}

mpz_class eval_degree(const DegreeExpr& e, long p, int a) {
    mpz_class num = e.scalar_num * pow_q(p, static_cast<long>(e.q_power) * a);
    for (const auto& [d, s] : e.numer) num *= pow_q(p, static_cast<long>(d) * a) + s;
    mpz_class den = e.scalar_den;
    for (const auto& [d, s] : e.denom) den *= pow_q(p, static_cast<long>(d) * a) + s;
    mpz_class quot, rem;
    mpz_fdiv_qr(quot.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    if (rem != 0)
        throw SpecError("degree " + (e.label.empty() ? render_degree(e) : e.label) +
                        " is not integral at q = " + pow_q(p, a).get_str() +
                        "; the attached condition set is wrong");
    if (quot <= 0) throw SpecError("degree evaluated non-positive");
    return quot;
}

mpz_class degree_p_part(const DegreeExpr& e, long p, int a) {
    long v = static_cast<long>(e.q_power) * a;
    mpz_class pm(p);
    v += p_valuation(mpz_class(e.scalar_num), pm);
    v -= p_valuation(mpz_class(e.scalar_den), pm);
    if (v < 0)
        throw SpecError("degree has negative p-valuation; condition set is wrong");
    return pow_q(p, v);
}

mpz_class ppart_shape_value(const PPartShape& s, long p, int a) {
    mpz_class v = pow_q(p, static_cast<long>(s.k) * a);
    if (s.half) {
        if (p != 2 || v % 2 != 0) throw SpecError("q/2 p-part shape needs even q");
        v /= 2;
    }
    return v;
}

mpz_class DegreeTable::bound_value(long p, int a) const {
    return pow_q(p, bound_exp.at(n) * a);
}

// ---------------------------------------------------------------------
// table data file

namespace {

LinForm parse_linform(const std::string& tok) {
    // forms: "3", "n", "2n", "n-1", "2n-2", "n+1"
    LinForm lf;
    size_t i = 0;
    int coef = 0;
    bool saw_digit = false;
    while (i < tok.size() && std::isdigit(static_cast<unsigned char>(tok[i]))) {
        coef = coef * 10 + (tok[i] - '0');
        saw_digit = true;
        ++i;
    }
    if (i < tok.size() && tok[i] == 'n') {
        lf.cn = saw_digit ? coef : 1;
        ++i;
        if (i < tok.size()) {
            int sign = tok[i] == '-' ? -1 : (tok[i] == '+' ? 1 : 0);
            if (sign == 0) throw SpecError("bad exponent form '" + tok + "'");
            ++i;
            int c = 0;
            while (i < tok.size() && std::isdigit(static_cast<unsigned char>(tok[i]))) {
                c = c * 10 + (tok[i] - '0');
                ++i;
            }
            lf.cc = sign * c;
        }
    } else {
        if (!saw_digit || i != tok.size()) throw SpecError("bad exponent form '" + tok + "'");
        lf.cc = coef;
    }
    if (i != tok.size()) throw SpecError("bad exponent form '" + tok + "'");
    return lf;
}

std::vector<std::pair<LinForm, int>> parse_factors(const std::string& field) {
    std::vector<std::pair<LinForm, int>> out;
    if (field == "-") return out;
    std::istringstream in(field);
    std::string tok;
    while (in >> tok) {
        auto colon = tok.rfind(':');
        if (colon == std::string::npos || colon + 2 != tok.size())
            throw SpecError("bad factor token '" + tok + "'");
        int sign = tok[colon + 1] == '+' ? +1 : (tok[colon + 1] == '-' ? -1 : 0);
        if (sign == 0) throw SpecError("bad factor sign in '" + tok + "'");
        out.push_back({parse_linform(tok.substr(0, colon)), sign});
    }
    return out;
}

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t");
    auto e = s.find_last_not_of(" \t");
    if (b == std::string::npos) return "";
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            parts.push_back(trim(cur));
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    parts.push_back(trim(cur));
    return parts;
}

std::vector<PPartShape> parse_pparts(const std::string& s) {
    std::vector<PPartShape> out;
    for (const auto& tok : split(s, ',')) {
        if (tok == "1")
            out.push_back({0, false});
        else if (tok == "q")
            out.push_back({1, false});
        else if (tok == "q/2")
            out.push_back({1, true});
        else if (tok == "q^2")
            out.push_back({2, false});
        else if (tok == "q^3")
            out.push_back({3, false});
        else
            throw SpecError("bad p-part shape '" + tok + "'");
    }
    return out;
}

std::string family_token_of(Family f) {
    switch (f) {
        case Family::Linear: return "SL";
        case Family::Unitary: return "SU";
        case Family::Symplectic: return "Sp";
        case Family::OddOrthogonal: return "SpinOdd";
        case Family::EvenOrthogonalPlus: return "SpinPlus";
        case Family::EvenOrthogonalMinus: return "SpinMinus";
        default: throw SpecError("no degree table for this family");
    }
}

std::string g_default_path = std::string(LIECHECK_DATA_DIR) + "/degree_tables.txt";
std::mutex g_instance_mutex;
std::unique_ptr<DegreeTables> g_instance;

}  // namespace

DegreeTables::DegreeTables(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw SpecError("cannot open degree table data file: " + path);
    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        std::string line = trim(raw);
        if (line.empty() || line[0] == '#') continue;
        try {
            if (line.rfind("@table", 0) == 0) {
                std::istringstream ss(line);
                std::string kw, fam, par, boundkv, ppartkv;
                ss >> kw >> fam >> par >> boundkv >> ppartkv;
                if (boundkv.rfind("bound=", 0) != 0 || ppartkv.rfind("ppart=", 0) != 0)
                    throw SpecError("bad @table directive");
                TableHeader h;
                h.family_token = fam;
                h.parity = par == "any" ? 0 : (par == "odd" ? 1 : 2);
                h.bound = parse_linform(boundkv.substr(6));
                h.pparts = parse_pparts(ppartkv.substr(6));
                headers_.push_back(h);
                continue;
            }
            auto fields = split(line, '|');
            if (fields.size() != 8) throw SpecError("expected 8 |-separated fields");
            Line ln;
            ln.family_token = fields[0];
            // n-range
            const std::string& range = fields[1];
            if (range.rfind("n=", 0) == 0) {
                ln.n_min = ln.n_max = std::stoi(range.substr(2));
            } else if (range.rfind("n>=", 0) == 0) {
                ln.n_min = std::stoi(range.substr(3));
                ln.n_max = -1;
            } else {
                throw SpecError("bad n-range '" + range + "'");
            }
            const std::string& par = fields[2];
            ln.parity = par == "any" ? 0 : (par == "odd" ? 1 : (par == "even" ? 2 : -1));
            if (ln.parity < 0) throw SpecError("bad parity '" + par + "'");
            // scalar u or u/v
            auto slash = fields[3].find('/');
            if (slash == std::string::npos) {
                ln.scalar_num = std::stol(fields[3]);
            } else {
                ln.scalar_num = std::stol(fields[3].substr(0, slash));
                ln.scalar_den = std::stol(fields[3].substr(slash + 1));
            }
            ln.q_power = std::stoi(fields[4]);
            ln.numer = parse_factors(fields[5]);
            ln.denom = parse_factors(fields[6]);
            if (fields[7] != "-") {
                for (const auto& tok : split(fields[7], ',')) {
                    if (tok == "q_odd")
                        ln.conds.push_back({CondKind::QOdd});
                    else if (tok == "q_even")
                        ln.conds.push_back({CondKind::QEven});
                    else if (tok == "n_even")
                        ln.conds.push_back({CondKind::NEven});
                    else if (tok == "n_odd")
                        ln.conds.push_back({CondKind::NOdd});
                    else if (tok == "integral")
                        ln.conds.push_back({CondKind::Integral});
                    else if (tok.rfind("q!=", 0) == 0)
                        ln.conds.push_back({CondKind::QNe, std::stol(tok.substr(3)), 0});
                    else if (tok.rfind("q%", 0) == 0) {
                        auto ne = tok.find("!=");
                        if (ne == std::string::npos) throw SpecError("bad condition " + tok);
                        ln.conds.push_back({CondKind::QModNe, std::stol(tok.substr(2, ne - 2)),
                                            std::stol(tok.substr(ne + 2))});
                    } else if (tok.rfind("exclude(", 0) == 0) {
                        auto comma = tok.find(',');
                        int n = std::stoi(tok.substr(8, comma - 8));
                        long q = std::stol(tok.substr(comma + 1, tok.size() - comma - 2));
                        ln.exclusions.push_back({n, q});
                    } else {
                        throw SpecError("unknown condition '" + tok + "'");
                    }
                }
            }
            lines_.push_back(ln);
        } catch (const std::exception& ex) {
            throw SpecError(path + ":" + std::to_string(lineno) + ": " + ex.what());
        }
    }
    if (headers_.empty() || lines_.empty())
        throw SpecError("degree table data file is empty: " + path);
}

DegreeTable DegreeTables::low_degree_table(Family family, int n, bool q_odd, long p,
                                           int a) const {
    DegreeTable table;
    table.family = family;
    table.n = n;
    table.q_odd = q_odd;
    const std::string token = family_token_of(family);
    const TableHeader* header = nullptr;
    for (const auto& h : headers_) {
        if (h.family_token != token) continue;
        if (h.parity == 1 && !q_odd) continue;
        if (h.parity == 2 && q_odd) continue;
        if (!header || h.parity != 0) header = &h;
    }
    if (!header) return table;
    table.bound_exp = header->bound;
    table.claimed_pparts = header->pparts;

    const mpz_class q = pow_q(p, a);
    bool any_row = false;
    for (const auto& ln : lines_) {
        if (ln.family_token != token) continue;
        if (n < ln.n_min || (ln.n_max >= 0 && n > ln.n_max)) continue;
        if (ln.parity == 1 && !q_odd) continue;
        if (ln.parity == 2 && q_odd) continue;
        bool excluded = false;
        for (const auto& [xn, xq] : ln.exclusions)
            if (xn == n && q == xq) excluded = true;
        if (excluded) continue;
        // n-parity conditions select entries at materialization time
        bool n_ok = true;
        for (const auto& c : ln.conds) {
            if (c.kind == CondKind::NEven && n % 2 != 0) n_ok = false;
            if (c.kind == CondKind::NOdd && n % 2 != 1) n_ok = false;
        }
        any_row = true;
        if (!n_ok) continue;
        DegreeExpr e;
        e.scalar_num = ln.scalar_num;
        e.scalar_den = ln.scalar_den;
        e.q_power = ln.q_power;
        for (const auto& [lf, s] : ln.numer) {
            long d = lf.at(n);
            if (d <= 0) throw SpecError("factor exponent <= 0 after substitution");
            e.numer.push_back({static_cast<int>(d), s});
        }
        for (const auto& [lf, s] : ln.denom) {
            long d = lf.at(n);
            if (d <= 0) throw SpecError("factor exponent <= 0 after substitution");
            e.denom.push_back({static_cast<int>(d), s});
        }
        e.conds = ln.conds;
        e.label = render_degree(e);
        table.entries.push_back(e);
    }
    if (any_row) table.status = TableStatus::Ok;
    return table;
}

const DegreeTables& DegreeTables::instance() {
    std::lock_guard<std::mutex> lock(g_instance_mutex);
    if (!g_instance) g_instance = std::make_unique<DegreeTables>(g_default_path);
    return *g_instance;
}

void DegreeTables::set_default_path(const std::string& path) {
    std::lock_guard<std::mutex> lock(g_instance_mutex);
    g_default_path = path;
    g_instance.reset();
}

// ---------------------------------------------------------------------

DegreeExpr unipotent_witness_degree(UnipKind kind, int m, int epsilon) {
    DegreeExpr e;
    switch (kind) {
        case UnipKind::Linear:
            // (q^m - q)/(q - 1)
            if (m < 2) throw SpecError("linear witness needs m >= 2");
            e.q_power = 1;
            e.numer = {{m - 1, -1}};
            e.denom = {{1, -1}};
            break;
        case UnipKind::Unitary:
            // (q^m + (-1)^m q)/(q + 1)
            if (m < 3) throw SpecError("unitary witness needs m >= 3");
            e.q_power = 1;
            e.numer = {{m - 1, m % 2 == 0 ? +1 : -1}};
            e.denom = {{1, +1}};
            break;
        case UnipKind::SymplecticOdd:
            // (q^m - 1)(q^m - q)/(2(q + 1))
            if (m < 2) throw SpecError("symplectic witness needs m >= 2");
            e.scalar_den = 2;
            e.q_power = 1;
            e.numer = {{m, -1}, {m - 1, -1}};
            e.denom = {{1, +1}};
            break;
        case UnipKind::EvenOrth:
            // (q^m - eps)(q^{m-1} + eps q)/(q^2 - 1)
            if (m < 4) throw SpecError("orthogonal witness needs m >= 4");
            e.q_power = 1;
            e.numer = {{m, -epsilon}, {m - 2, +epsilon}};
            e.denom = {{2, -1}};
            break;
    }
    e.label = render_degree(e);
    return e;
}

MinimalDegrees minimal_degrees(Family family, int n, long p, int a) {
    MinimalDegrees md;
    const mpz_class q = pow_q(p, a);
    if (family == Family::Linear && n >= 2) {
        md.tabulated = true;
        mpz_class qn = pow_q(p, static_cast<long>(n) * a);
        md.d1 = (qn - q) / (q - 1);
        md.d2 = (qn - 1) / (q - 1);
        md.has_d2 = true;
        if (n >= 5) {
            md.has_d3_bound = true;
            mpz_class qn1 = pow_q(p, static_cast<long>(n - 1) * a);
            mpz_class num = (qn - 1) * (qn1 - q * q);
            mpz_class den = (q - 1) * (q * q - 1);
            mpz_class quot, rem;
            mpz_fdiv_qr(quot.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
            if (rem != 0) throw SpecError("d3 bound must be integral");
            md.d3_lower = quot;
        }
        return md;
    }
    if (family == Family::Unitary && n >= 3) {
        md.tabulated = true;
        mpz_class qn = pow_q(p, static_cast<long>(n) * a);
        md.d1 = n % 2 == 0 ? (qn + q) / (q + 1) : (qn - q) / (q + 1);
        return md;
    }
    return md;
}

std::set<mpz_class> sl2_cover_degree_superset(long p, int a) {
    const mpz_class q = pow_q(p, a);
    std::set<mpz_class> s = {q, q - 1, q + 1};
    if (p != 2) {
        s.insert((q - 1) / 2);
        s.insert((q + 1) / 2);
    }
    return s;
}

// ---------------------------------------------------------------------
// partitions and hook lengths

std::vector<std::vector<int>> partitions_of(int m) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    // descending parts, generated largest-first
    std::function<void(int, int)> rec = [&](int rest, int maxpart) {
        if (rest == 0) {
            out.push_back(cur);
            return;
        }
        for (int part = std::min(rest, maxpart); part >= 1; --part) {
            cur.push_back(part);
            rec(rest - part, part);
            cur.pop_back();
        }
    };
    rec(m, m);
    return out;
}

std::vector<int> conjugate_partition(const std::vector<int>& lambda) {
    std::vector<int> conj;
    for (int col = 1; !lambda.empty() && col <= lambda[0]; ++col) {
        int count = 0;
        for (int part : lambda)
            if (part >= col) ++count;
        conj.push_back(count);
    }
    return conj;
}

bool is_self_conjugate(const std::vector<int>& lambda) {
    return conjugate_partition(lambda) == lambda;
}

mpz_class hook_length_degree(const std::vector<int>& lambda) {
    int m = 0;
    for (int part : lambda) m += part;
    std::vector<int> conj = conjugate_partition(lambda);
    mpz_class hooks = 1;
    for (size_t i = 0; i < lambda.size(); ++i)
        for (int j = 0; j < lambda[i]; ++j)
            hooks *= (lambda[i] - j - 1) + (conj[j] - static_cast<int>(i) - 1) + 1;
    mpz_class fact;
    mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(m));
    mpz_class deg, rem;
    mpz_fdiv_qr(deg.get_mpz_t(), rem.get_mpz_t(), fact.get_mpz_t(), hooks.get_mpz_t());
    if (rem != 0) throw SpecError("hook product does not divide m!");
    return deg;
}

mpz_class alternating_max_degree(int m) {
    if (m < 3 || m > 16) throw SpecError("alternating_max_degree supports 3 <= m <= 16");
    mpz_class best = 0;
    for (const auto& lambda : partitions_of(m)) {
        mpz_class f = hook_length_degree(lambda);
        if (is_self_conjugate(lambda)) f /= 2;
        best = std::max(best, f);
    }
    return best;
}

}  // namespace liecheck
