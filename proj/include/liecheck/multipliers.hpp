#pragma once

#include <map>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "liecheck/spec.hpp"

namespace liecheck {

// Finite abelian group as, per prime, the partition of cyclic exponents:
// {2: [2,2], 3: [1]} is Z4 x Z4 x Z3.
struct AbelianGroupType {
    std::map<long, std::vector<int>> parts;

    mpz_class order() const;
    std::string label() const;
    bool operator==(const AbelianGroupType& o) const { return parts == o.parts; }
    bool operator<(const AbelianGroupType& o) const { return parts < o.parts; }
};

enum class MultSource { Formula, Stated, Imported };

struct MultiplierRecord {
    GroupSpec group;
    mpz_class order;
    AbelianGroupType structure;
    MultSource source = MultSource::Formula;
};

// Schur multiplier of a simple group: the sixteen exceptional cases come
// from the data file, everything else from the generic formulas
// (gcd(n, q-+1) cyclic for A/2A, gcd(2, q-1) for B/C, the gcd(4, ...)
// centers for D, the E6/E7/2E6 centers, trivial otherwise).
class MultiplierCatalog {
  public:
    explicit MultiplierCatalog(const std::string& path);
    MultiplierRecord mult_order(const GroupSpec& simple) const;

    static const MultiplierCatalog& instance();
    static void set_default_path(const std::string& path);

  private:
    std::vector<MultiplierRecord> overrides_;
};

MultiplierRecord mult_order(const GroupSpec& simple);

// All abelian groups of order exactly N (N <= 10^4).
std::vector<AbelianGroupType> enumerate_abelian(long N);

// Exact |Aut(A)| by the abelian p-group formula, multiplicative over
// prime components.
mpz_class aut_order_abelian(const AbelianGroupType& A);

struct Lemma73Report {
    bool pass = false;
    mpz_class group_order;
    mpz_class multiplier_order;
    mpz_class max_aut;
    AbelianGroupType witness;
};

// Checks |S| > |Aut(A)| for every abelian A with |A| <= |Mult(S)|,
// reporting the maximizing A.
Lemma73Report lemma73_check(const GroupSpec& simple);

}  // namespace liecheck
