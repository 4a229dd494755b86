#include "liecheck/multipliers.hpp"

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

mpz_class pow_l(long p, long e) {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(e));
    return r;
}

}  // namespace

mpz_class AbelianGroupType::order() const {
    mpz_class o = 1;
    for (const auto& [p, exps] : parts)
        for (int e : exps) o *= pow_l(p, e);
    return o;
}

std::string AbelianGroupType::label() const {
    if (parts.empty()) return "1";
    std::ostringstream out;
    bool first = true;
    for (const auto& [p, exps] : parts) {
        size_t i = 0;
        while (i < exps.size()) {
            size_t j = i;
            while (j < exps.size() && exps[j] == exps[i]) ++j;
            if (!first) out << "x";
            out << "Z" << pow_l(p, exps[i]).get_str();
            if (j - i > 1) out << "^" << (j - i);
            first = false;
            i = j;
        }
    }
    return out.str();
}

namespace {

AbelianGroupType cyclic_of(const mpz_class& n) {
    AbelianGroupType t;
    if (n == 1) return t;
    mpz_class rest = n;
    for (long p = 2; rest > 1; p = (p == 2 ? 3 : p + 2)) {
        mpz_class pp(p);
        if (pp * pp > rest) {
            // rest is prime (fits small ranges used here)
            t.parts[mpz_get_si(rest.get_mpz_t())].push_back(1);
            break;
        }
        int e = 0;
        while (mpz_divisible_ui_p(rest.get_mpz_t(), static_cast<unsigned long>(p))) {
            rest /= p;
            ++e;
        }
        if (e > 0) t.parts[p].push_back(e);
    }
    return t;
}

AbelianGroupType parse_structure(const std::string& text) {
    // "Z4xZ4xZ3", "Z2^5", "1"
    AbelianGroupType t;
    if (text == "1") return t;
    std::istringstream in(text);
    std::string tok;
    while (std::getline(in, tok, 'x')) {
        if (tok.empty() || tok[0] != 'Z') throw SpecError("bad structure token '" + tok + "'");
        long count = 1;
        std::string body = tok.substr(1);
        auto caret = body.find('^');
        if (caret != std::string::npos) {
            count = std::stol(body.substr(caret + 1));
            body = body.substr(0, caret);
        }
        long order = std::stol(body);
        // order must be a prime power
        long p = 0;
        int e = 0;
        for (long d = 2; d <= order; ++d) {
            if (order % d == 0) {
                p = d;
                while (order % d == 0) {
                    order /= d;
                    ++e;
                }
                break;
            }
        }
        if (order != 1) throw SpecError("cyclic factor must have prime power order");
        for (long i = 0; i < count; ++i) t.parts[p].push_back(e);
    }
    for (auto& [p, exps] : t.parts) std::sort(exps.rbegin(), exps.rend());
    return t;
}

std::string g_default_path = std::string(LIECHECK_DATA_DIR) + "/multipliers.txt";
std::mutex g_instance_mutex;
std::unique_ptr<MultiplierCatalog> g_instance;

}  // namespace

MultiplierCatalog::MultiplierCatalog(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw SpecError("cannot open multiplier data file: " + path);
    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        auto hash = raw.find('#');
        std::string line = hash == std::string::npos ? raw : raw.substr(0, hash);
        // trim
        auto b = line.find_first_not_of(" \t");
        if (b == std::string::npos) continue;
        auto e = line.find_last_not_of(" \t");
        line = line.substr(b, e - b + 1);
        std::vector<std::string> fields;
        std::string cur;
        for (char c : line) {
            if (c == '|') {
                fields.push_back(cur);
                cur.clear();
            } else if (!std::isspace(static_cast<unsigned char>(c))) {
                cur.push_back(c);
            }
        }
        fields.push_back(cur);
        if (fields.size() != 4)
            throw SpecError(path + ":" + std::to_string(lineno) + ": expected 4 fields");
        try {
            MultiplierRecord rec;
            rec.group = canonicalize(parse_spec(fields[0])).to_simple();
            rec.order = mpz_class(fields[1]);
            rec.structure = parse_structure(fields[2]);
            if (fields[3] == "stated")
                rec.source = MultSource::Stated;
            else if (fields[3] == "imported")
                rec.source = MultSource::Imported;
            else
                throw SpecError("source must be 'stated' or 'imported'");
            if (rec.structure.order() != rec.order)
                throw SpecError("structure order mismatch for " + fields[0]);
            overrides_.push_back(rec);
        } catch (const std::exception& ex) {
            throw SpecError(path + ":" + std::to_string(lineno) + ": " + ex.what());
        }
    }
    if (overrides_.size() != 16)
        throw SpecError("expected the 16 exceptional multiplier records, got " +
                        std::to_string(overrides_.size()));
}

MultiplierRecord MultiplierCatalog::mult_order(const GroupSpec& spec) const {
    GroupSpec s = canonicalize(spec).to_simple();
    validate(s);
    for (const auto& rec : overrides_)
        if (rec.group == s) return rec;

    MultiplierRecord rec;
    rec.group = s;
    rec.source = MultSource::Formula;
    const mpz_class q = pow_l(s.p, s.exponent);
    auto gcd_l = [](const mpz_class& a, const mpz_class& b) {
        mpz_class r;
        mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
        return r;
    };
    switch (s.family) {
        case Family::Linear: rec.order = gcd_l(s.rank, q - 1); break;
        case Family::Unitary: rec.order = gcd_l(s.rank, q + 1); break;
        case Family::Symplectic:
        case Family::OddOrthogonal: rec.order = gcd_l(2, q - 1); break;
        case Family::EvenOrthogonalPlus:
            if (s.rank % 2 == 0 && s.p != 2) {
                // Z2 x Z2, reported from the structure of the spin center
                rec.order = 4;
                rec.structure.parts[2] = {1, 1};
                rec.source = MultSource::Imported;
                return rec;
            }
            rec.order = gcd_l(4, pow_l(s.p, static_cast<long>(s.rank) * s.exponent) - 1);
            rec.source = MultSource::Imported;
            break;
        case Family::EvenOrthogonalMinus:
            rec.order = gcd_l(4, pow_l(s.p, static_cast<long>(s.rank) * s.exponent) + 1);
            rec.source = MultSource::Imported;
            break;
        case Family::Exceptional:
            switch (s.tag) {
                case ExcTag::E6: rec.order = gcd_l(3, q - 1); break;
                case ExcTag::E7: rec.order = gcd_l(2, q - 1); break;
                case ExcTag::TwoE6: rec.order = gcd_l(3, q + 1); break;
                default: rec.order = 1; break;
            }
            break;
    }
    rec.structure = cyclic_of(rec.order);
    return rec;
}

const MultiplierCatalog& MultiplierCatalog::instance() {
    std::lock_guard<std::mutex> lock(g_instance_mutex);
    if (!g_instance) g_instance = std::make_unique<MultiplierCatalog>(g_default_path);
    return *g_instance;
}

void MultiplierCatalog::set_default_path(const std::string& path) {
    std::lock_guard<std::mutex> lock(g_instance_mutex);
    g_default_path = path;
    g_instance.reset();
}

MultiplierRecord mult_order(const GroupSpec& simple) {
    return MultiplierCatalog::instance().mult_order(simple);
}

// ---------------------------------------------------------------------

namespace {

std::vector<std::vector<int>> partitions_desc(int m) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
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

}  // namespace

std::vector<AbelianGroupType> enumerate_abelian(long N) {
    if (N < 1 || N > 10000) throw SpecError("enumerate_abelian supports 1 <= N <= 10^4");
    std::vector<std::pair<long, int>> primes;
    long rest = N;
    for (long d = 2; d * d <= rest; ++d) {
        if (rest % d == 0) {
            int e = 0;
            while (rest % d == 0) {
                rest /= d;
                ++e;
            }
            primes.push_back({d, e});
        }
    }
    if (rest > 1) primes.push_back({rest, 1});

    std::vector<AbelianGroupType> out = {AbelianGroupType{}};
    for (const auto& [p, e] : primes) {
        std::vector<AbelianGroupType> next;
        for (const auto& part : partitions_desc(e)) {
            for (const auto& base : out) {
                AbelianGroupType t = base;
                t.parts[p] = part;
                next.push_back(t);
            }
        }
        out = std::move(next);
    }
    std::sort(out.begin(), out.end());
    return out;
}

mpz_class aut_order_abelian(const AbelianGroupType& A) {
    // Hillar-Rhea formula per prime component, exponents ascending
    // e1 <= e2 <= ... <= en:
    //   |Aut| = prod_k (p^{d_k} - p^{k-1})
    //         * prod_j p^{e_j (n - d_j)}
    //         * prod_i p^{(e_i - 1)(n - c_i + 1)}
    // with d_k = max{ l : e_l = e_k }, c_k = min{ l : e_l = e_k }.
    mpz_class total = 1;
    for (const auto& [p, exps_desc] : A.parts) {
        std::vector<int> e(exps_desc);
        std::sort(e.begin(), e.end());
        const int n = static_cast<int>(e.size());
        std::vector<int> c(n), d(n);
        for (int k = 0; k < n; ++k) {
            int lo = k, hi = k;
            while (lo > 0 && e[lo - 1] == e[k]) --lo;
            while (hi + 1 < n && e[hi + 1] == e[k]) ++hi;
            c[k] = lo + 1;
            d[k] = hi + 1;
        }
        mpz_class comp = 1;
        for (int k = 0; k < n; ++k) comp *= pow_l(p, d[k]) - pow_l(p, k);
        for (int j = 0; j < n; ++j) comp *= pow_l(p, static_cast<long>(e[j]) * (n - d[j]));
        for (int i = 0; i < n; ++i)
            comp *= pow_l(p, static_cast<long>(e[i] - 1) * (n - c[i] + 1));
        total *= comp;
    }
    return total;
}

Lemma73Report lemma73_check(const GroupSpec& spec) {
    GroupSpec s = canonicalize(spec).to_simple();
    Lemma73Report rep;
    rep.group_order = evaluate_order(s);
    rep.multiplier_order = mult_order(s).order;
    rep.max_aut = 0;
    long bound = mpz_get_si(rep.multiplier_order.get_mpz_t());
    for (long N = 1; N <= bound; ++N) {
        for (const auto& A : enumerate_abelian(N)) {
            mpz_class aut = aut_order_abelian(A);
            if (aut > rep.max_aut) {
                rep.max_aut = aut;
                rep.witness = A;
            }
        }
    }
    rep.pass = rep.group_order > rep.max_aut;
    return rep;
}

}  // namespace liecheck
