#pragma once

#include <vector>

#include <gmpxx.h>

#include "liecheck/spec.hpp"

namespace liecheck {

// Order of a simply connected Lie-type group as its p-part exponent plus a
// multiset of signed factors: |G| = q^{p_coeff} * prod (q^d - 1) [sign -1]
// * prod (q^d + 1) [sign +1] / prod denominators, with q = p^exponent.
// denom_factors is empty for every family except 3D4.
struct OrderPoly {
    long p = 2;
    int exponent = 1;
    long p_coeff = 0;
    std::vector<std::pair<int, int>> factors;
    std::vector<std::pair<int, int>> denom_factors;

    mpz_class evaluate() const;
    int max_factor_degree() const;
};

// Signed factor list of the cover order. Rejects simple flavor: simple
// orders are numeric only (the center order gcd is not polynomial in q).
OrderPoly order_poly(const GroupSpec& cover);

// |Z(cover)|: gcd(n, q-1), gcd(n, q+1), gcd(2, q-1), gcd(4, q^n -+ 1),
// gcd(3, q-1)/gcd(2, q-1)/gcd(3, q+1) for E6/E7/2E6, 1 otherwise.
mpz_class center_order(const GroupSpec& spec);

// Exact order; for simple flavor the cover order is divided by the center
// order (exact division asserted).
mpz_class evaluate_order(const GroupSpec& spec);

// Largest power of p dividing x.
mpz_class p_part(const mpz_class& x, const mpz_class& p);
long p_valuation(const mpz_class& x, const mpz_class& p);

// Exact big-integer divisibility of evaluated orders.
bool divides_exact(const GroupSpec& L, const GroupSpec& H);

}  // namespace liecheck
