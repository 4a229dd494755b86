#include "liecheck/eliminator.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "liecheck/orders.hpp"

namespace liecheck {

SteinbergMatch steinberg_match(long L_coeff, long S_coeff) {
    if (L_coeff <= 0 || S_coeff <= 0) throw SpecError("Steinberg coefficients must be positive");
    SteinbergMatch m;
    m.L_coeff = L_coeff;
    m.S_coeff = S_coeff;
    long g = std::gcd(L_coeff, S_coeff);
    m.b_unit = S_coeff / g;
    m.a_unit = L_coeff / g;
    return m;
}

long exceptional_bound(Family target_family, int m, int m_prime) {
    if (m_prime <= 0) throw SpecError("m' must be positive");
    switch (target_family) {
        case Family::Linear: return std::max<long>(5, 2L * m / m_prime + 1);
        case Family::Unitary: return 4L * m / m_prime + 1;
        case Family::Symplectic:
        case Family::OddOrthogonal:
        case Family::EvenOrthogonalPlus:
        case Family::EvenOrthogonalMinus: return 2L * m / m_prime;
        default: throw SpecError("exceptional_bound needs a classical target family");
    }
}

const char* outcome_name(CaseOutcome o) {
    switch (o) {
        case CaseOutcome::OrderWitness: return "eliminated_by_order_witness";
        case CaseOutcome::PpartFilter: return "eliminated_by_ppart_filter";
        case CaseOutcome::DegreeSweep: return "eliminated_by_degree_sweep";
        case CaseOutcome::Unresolved: return "unresolved_external_data";
    }
    return "?";
}

// ---------------------------------------------------------------------
// diophantine solver

namespace {

struct DioEquation {
    // lhs_coeff * (m^2 if lhs_square else m(m-1)) = rhs as function of n
    long lhs_coeff;
    bool lhs_square;
    long rhs_coeff;   // rhs = rhs_coeff * (n^2 if rhs_square else n(n-1))
    bool rhs_square;
};

const std::vector<std::pair<std::string, DioEquation>>& dio_registry() {
    static const std::vector<std::pair<std::string, DioEquation>> reg = {
        {"2m^2=n(n-1)", {2, true, 1, false}},
        {"2m(m-1)=n(n-1)", {2, false, 1, false}},
        {"3m(m-1)=n(n-1)", {3, false, 1, false}},
        {"4m(m-1)=n(n-1)", {4, false, 1, false}},
        {"m(m-1)=2n(n-1)", {1, false, 2, false}},
        {"m(m-1)=2n^2", {1, false, 2, true}},
    };
    return reg;
}

bool exact_sqrt(long v, long& root) {
    if (v < 0) return false;
    long r = static_cast<long>(std::sqrt(static_cast<double>(v)));
    while (r * r > v) --r;
    while ((r + 1) * (r + 1) <= v) ++r;
    root = r;
    return r * r == v;
}

}  // namespace

const std::vector<std::string>& diophantine_ids() {
    static const std::vector<std::string> ids = [] {
        std::vector<std::string> v;
        for (const auto& [id, eq] : dio_registry()) v.push_back(id);
        return v;
    }();
    return ids;
}

std::vector<std::pair<long, long>> solve_diophantine(const std::string& id, long n_max,
                                                     long m_max) {
    const DioEquation* eq = nullptr;
    for (const auto& [name, e] : dio_registry())
        if (name == id) eq = &e;
    if (!eq) throw SpecError("unknown diophantine equation id '" + id + "'");
    if (n_max > 1000000 || m_max > 1000000) throw SpecError("diophantine bounds exceed 10^6");

    std::vector<std::pair<long, long>> solutions;
    for (long n = 2; n <= n_max; ++n) {
        long rhs = eq->rhs_coeff * (eq->rhs_square ? n * n : n * (n - 1));
        if (rhs % eq->lhs_coeff != 0) continue;
        long t = rhs / eq->lhs_coeff;  // m^2 = t or m(m-1) = t
        long m = 0;
        if (eq->lhs_square) {
            if (!exact_sqrt(t, m)) continue;
        } else {
            long root;
            if (!exact_sqrt(4 * t + 1, root)) continue;
            if ((1 + root) % 2 != 0) continue;
            m = (1 + root) / 2;
            if (m * (m - 1) != t) continue;
        }
        if (m >= 2 && m <= m_max) solutions.push_back({n, m});
    }
    return solutions;
}

// ---------------------------------------------------------------------
// exact inequality sweeps

namespace {

// 2^A < X for big A and X, decided via the bit length of X
bool power_of_two_less(const mpz_class& A, const mpz_class& X) {
    if (X < 1) return false;
    const mpz_class bits = mpz_sizeinbase(X.get_mpz_t(), 2);  // floor(log2 X) + 1
    if (A <= bits - 2) return true;
    if (A >= bits) return false;
    // A == bits - 1: 2^A < X unless X == 2^A
    mpz_class pw;
    mpz_ui_pow_ui(pw.get_mpz_t(), 2, mpz_get_ui(A.get_mpz_t()));
    return X != pw;
}

std::vector<long> prime_powers_upto(long q_max) {
    std::vector<bool> sieve(q_max + 1, true);
    std::vector<long> out;
    for (long p = 2; p <= q_max; ++p) {
        if (!sieve[p]) continue;
        for (long k = 2 * p; k <= q_max; k += p) sieve[k] = false;
        for (long q = p; q <= q_max; q *= p) {
            out.push_back(q);
            if (q > q_max / p) break;
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

mpz_class pow_q(long q, long e) {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(q), static_cast<unsigned long>(e));
    return r;
}

}  // namespace

SweepReport inequality_sweep(const std::string& id, int n_min, int n_max, long q_max) {
    SweepReport rep;
    rep.id = id;
    for (long q : prime_powers_upto(q_max)) {
        for (int n = n_min; n <= n_max; ++n) {
            bool holds;
            if (id == "2^d1<q^(n^2/2)") {
                // 2^{(q^n - q)/(q-1)} < q^{n^2/2}, squared to avoid the
                // half exponent: 2^{2E} < q^{n^2}
                mpz_class E = (pow_q(q, n) - q) / (q - 1);
                holds = power_of_two_less(2 * E, pow_q(q, static_cast<long>(n) * n));
            } else if (id == "2q^(n-1)<n^2*log2q") {
                // restated exactly as 2^{2 q^{n-1}} < q^{n^2}
                mpz_class A = 2 * pow_q(q, n - 1);
                holds = power_of_two_less(A, pow_q(q, static_cast<long>(n) * n));
            } else {
                throw SpecError("unknown inequality sweep id '" + id + "'");
            }
            ++rep.points;
            if (holds) {
                ++rep.holds;
                if (rep.hold_points.size() < 32)
                    rep.hold_points.push_back("n=" + std::to_string(n) +
                                              ",q=" + std::to_string(q));
            }
        }
    }
    return rep;
}

// ---------------------------------------------------------------------

std::vector<long> ppart_filter(const std::vector<PPartShape>& allowed, long p, int a, long b_max,
                               const std::vector<BConstraint>& constraints) {
    std::vector<long> feasible;
    for (long b = 1; b <= b_max; ++b) {
        bool ok = true;
        for (const auto& c : constraints) {
            if (c.kind == BConstraint::LessThanMultiple && !(b < c.multiple * a)) ok = false;
            if (c.kind == BConstraint::NotEqualMultiple && b == c.multiple * a) ok = false;
        }
        if (!ok) continue;
        mpz_class pb = pow_q(p, b);
        bool matches = false;
        for (const auto& s : allowed) {
            if (s.half && p != 2) continue;
            if (s.k == 0 && !s.half) continue;  // p-part 1 never matches p^b with b >= 1
            if (pb == ppart_shape_value(s, p, a)) matches = true;
        }
        if (matches) feasible.push_back(b);
    }
    return feasible;
}

const std::vector<std::string>& lemma_ids() {
    static const std::vector<std::string> ids = {"lemma-3.2", "lemma-4.1", "lemma-5.1",
                                                 "lemma-6.1", "lemma-6.2"};
    return ids;
}

}  // namespace liecheck
