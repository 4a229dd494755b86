#pragma once

#include <optional>
#include <set>

#include <gmpxx.h>

#include "liecheck/factor.hpp"
#include "liecheck/spec.hpp"

namespace liecheck {

// Primitive prime divisors of x^n - y^n: a prime dividing x^n - y^n but
// no x^i - y^i with 0 < i < n. One exists except when (x,y,n) = (2,1,6)
// or n = 2 with x + y a power of two.
enum class PpdStatus { Exception, Exists, Prime, Unknown };

struct PpdResult {
    PpdStatus status = PpdStatus::Unknown;
    mpz_class prime = 0;  // set when status == Prime
};

enum class PpdMode { Exists, Find };

// Preconditions: x > y >= 1, gcd(x,y) = 1, n >= 2. Exists mode never
// returns Unknown; Find mode factors the primitive part within a budget
// and reports the smallest primitive prime found.
PpdResult ppd(const mpz_class& x, const mpz_class& y, long n, PpdMode mode = PpdMode::Exists,
              const FactorBudget& budget = {});

// Exponents e such that a primitive prime divisor of p^e - 1, when one
// exists, divides the group order. `covered` follows the per-factor rule
// (q^d - 1 covers e | d*a, q^d + 1 covers e | 2da with e not dividing da)
// and over-approximates; `certain` under-approximates and drops exponents
// that touch a denominator factor (3D4 only). For denominator-free
// factor lists the two sets coincide and are exact.
struct CoverageSet {
    long p = 2;
    std::set<long> covered;
    std::set<long> certain;
};

CoverageSet exponent_coverage(const GroupSpec& cover);

// Largest exponent e with e in certain(L), e not in covered(H) and
// ppd(p,1,e) not an exception. Such an e certifies that the order of L
// does not divide the order of H. Requires matching base primes.
std::optional<long> nondivisibility_witness(const GroupSpec& L, const GroupSpec& H);

struct SymbolicDivides {
    bool possibly = true;
    long witness = 0;  // set when possibly == false
};

// No(e) is a sound non-divisibility certificate; Possibly is not a
// divisibility claim.
SymbolicDivides divides_symbolic(const GroupSpec& L, const GroupSpec& H);

}  // namespace liecheck
