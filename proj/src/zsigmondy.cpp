#include "liecheck/zsigmondy.hpp"

#include <algorithm>

#include "liecheck/orders.hpp"

namespace liecheck {

namespace {

bool is_power_of_two(const mpz_class& v) {
    if (v < 1) return false;
    return mpz_popcount(v.get_mpz_t()) == 1;
}

mpz_class pow_mpz(const mpz_class& x, long e) {
    mpz_class r;
    mpz_pow_ui(r.get_mpz_t(), x.get_mpz_t(), static_cast<unsigned long>(e));
    return r;
}

std::vector<long> prime_divisors_of(long n) {
    std::vector<long> ps;
    for (long d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            ps.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) ps.push_back(n);
    return ps;
}

}  // namespace

PpdResult ppd(const mpz_class& x, const mpz_class& y, long n, PpdMode mode,
              const FactorBudget& budget) {
    if (y < 1 || x <= y) throw SpecError("ppd requires x > y >= 1");
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
    if (g != 1) throw SpecError("ppd requires gcd(x,y) = 1");
    if (n < 2) throw SpecError("ppd requires n >= 2");

    if (x == 2 && y == 1 && n == 6) return {PpdStatus::Exception, 0};
    if (n == 2 && is_power_of_two(x + y)) return {PpdStatus::Exception, 0};
    if (mode == PpdMode::Exists) return {PpdStatus::Exists, 0};

    // Strip from x^n - y^n everything shared with the maximal proper
    // subexpressions x^{n/s} - y^{n/s}; the survivors are exactly the
    // primitive primes.
    mpz_class primitive_part = pow_mpz(x, n) - pow_mpz(y, n);
    for (long s : prime_divisors_of(n)) {
        mpz_class sub = pow_mpz(x, n / s) - pow_mpz(y, n / s);
        while (true) {
            mpz_class shared;
            mpz_gcd(shared.get_mpz_t(), primitive_part.get_mpz_t(), sub.get_mpz_t());
            if (shared == 1) break;
            primitive_part /= shared;
        }
    }
    if (primitive_part == 1)
        throw SpecError("no primitive prime outside the exception list");  // unreachable

    Factorization f = factorize(primitive_part, budget);
    if (!f.primes.empty()) return {PpdStatus::Prime, f.primes.begin()->first};
    return {PpdStatus::Unknown, 0};
}

namespace {

void divisors_into(long n, std::vector<long>& out) {
    out.clear();
    for (long i = 1; i * i <= n; ++i) {
        if (n % i == 0) {
            out.push_back(i);
            if (i != n / i) out.push_back(n / i);
        }
    }
}

void add_coverage(std::set<long>& into, int d, int sign, long exponent) {
    const long full = static_cast<long>(d) * exponent;
    std::vector<long> divs;
    if (sign < 0) {
        divisors_into(full, divs);
        into.insert(divs.begin(), divs.end());
    } else {
        divisors_into(2 * full, divs);
        for (long e : divs)
            if (full % e != 0) into.insert(e);
    }
}

}  // namespace

CoverageSet exponent_coverage(const GroupSpec& spec) {
    OrderPoly poly = order_poly(spec.to_cover());
    CoverageSet cov;
    cov.p = spec.p;
    for (const auto& [d, sign] : poly.factors) add_coverage(cov.covered, d, sign, poly.exponent);
    cov.certain = cov.covered;
    if (!poly.denom_factors.empty()) {
        std::set<long> touched;
        for (const auto& [d, sign] : poly.denom_factors)
            add_coverage(touched, d, sign, poly.exponent);
        for (long e : touched) cov.certain.erase(e);
    }
    return cov;
}

std::optional<long> nondivisibility_witness(const GroupSpec& L, const GroupSpec& H) {
    if (L.p != H.p) throw SpecError("nondivisibility_witness requires a shared base prime");
    CoverageSet covL = exponent_coverage(L);
    CoverageSet covH = exponent_coverage(H);
    // Largest-first: matches the witness exponents quoted for the
    // Steinberg-matched instances (216, 98, ...).
    for (auto it = covL.certain.rbegin(); it != covL.certain.rend(); ++it) {
        long e = *it;
        if (e < 2) continue;
        if (covH.covered.count(e)) continue;
        if (ppd(L.p, 1, e).status == PpdStatus::Exception) continue;
        return e;
    }
    return std::nullopt;
}

SymbolicDivides divides_symbolic(const GroupSpec& L, const GroupSpec& H) {
    auto w = nondivisibility_witness(L, H);
    if (w) return {false, *w};
    return {true, 0};
}

}  // namespace liecheck
