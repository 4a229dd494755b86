#pragma once

#include <map>
#include <vector>

#include <gmpxx.h>

namespace liecheck {

bool is_probable_prime(const mpz_class& n);

// Trial division up to `bound`, then Brent-cycle Pollard rho with a step
// cap per composite. complete == false means the budget ran out and
// `cofactor` holds the unfactored (composite) remainder.
struct Factorization {
    std::map<mpz_class, int> primes;
    mpz_class cofactor = 1;
    bool complete = true;
};

struct FactorBudget {
    unsigned long trial_bound = 1'000'000;
    unsigned long rho_steps = 2'000'000;
};

Factorization factorize(const mpz_class& n, const FactorBudget& budget = {});

// Deterministic rho step count; returns 1 on failure within the cap.
mpz_class pollard_rho_brent(const mpz_class& n, unsigned long max_steps, unsigned long seed);

}  // namespace liecheck
