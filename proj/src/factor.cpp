#include "liecheck/factor.hpp"

#include <algorithm>

namespace liecheck {

bool is_probable_prime(const mpz_class& n) {
    // 40 Miller-Rabin rounds after BPSW; deterministic at desk scale.
    return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

mpz_class pollard_rho_brent(const mpz_class& n, unsigned long max_steps, unsigned long seed) {
    if (n % 2 == 0) return 2;
    mpz_class y = seed % n, c = 1 + (seed / 7) % 31, m = 128;
    mpz_class g = 1, r = 1, q = 1, x, ys;
    unsigned long steps = 0;
    while (g == 1 && steps < max_steps) {
        x = y;
        for (mpz_class i = 0; i < r; ++i) {
            y = (y * y + c) % n;
        }
        mpz_class k = 0;
        while (k < r && g == 1 && steps < max_steps) {
            ys = y;
            mpz_class limit = std::min(m, mpz_class(r - k));
            for (mpz_class i = 0; i < limit; ++i) {
                y = (y * y + c) % n;
                mpz_class d = x - y;
                if (d < 0) d = -d;
                q = q * d % n;
                ++steps;
            }
            mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
            k += m;
        }
        r *= 2;
    }
    if (g == n) {
        // backtrack
        do {
            ys = (ys * ys + c) % n;
            mpz_class d = x - ys;
            if (d < 0) d = -d;
            mpz_gcd(g.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
        } while (g == 1);
    }
    if (g == n || g == 1) return 1;
    return g;
}

namespace {

void factor_into(const mpz_class& n, const FactorBudget& budget, Factorization& out,
                 unsigned long depth) {
    if (n == 1) return;
    if (is_probable_prime(n)) {
        out.primes[n] += 1;
        return;
    }
    if (depth > 64) {
        out.cofactor *= n;
        out.complete = false;
        return;
    }
    for (unsigned long seed = 2; seed < 2 + 24; ++seed) {
        mpz_class d = pollard_rho_brent(n, budget.rho_steps, seed);
        if (d != 1 && d != n) {
            factor_into(d, budget, out, depth + 1);
            factor_into(n / d, budget, out, depth + 1);
            return;
        }
    }
    out.cofactor *= n;
    out.complete = false;
}

}  // namespace

Factorization factorize(const mpz_class& n, const FactorBudget& budget) {
    Factorization out;
    if (n <= 1) return out;
    mpz_class rest = n;
    for (unsigned long d = 2; d <= budget.trial_bound; d = (d == 2 ? 3 : d + 2)) {
        mpz_class dd(d);
        if (dd * dd > rest) break;
        while (mpz_divisible_ui_p(rest.get_mpz_t(), d)) {
            out.primes[dd] += 1;
            rest /= d;
        }
    }
    if (rest > 1) factor_into(rest, budget, out, 0);
    return out;
}

}  // namespace liecheck
