#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include <gmpxx.h>
#include <json.hpp>

#include "liecheck/degrees.hpp"
#include "liecheck/spec.hpp"

namespace liecheck {

using ordered_json = nlohmann::ordered_json;

// Steinberg-degree matching: M_L * b = M_S * a, parameterized by
// b = b_unit * c, a = a_unit * c over positive integers c.
struct SteinbergMatch {
    long L_coeff = 0;
    long S_coeff = 0;
    long b_unit = 0;
    long a_unit = 0;
};

SteinbergMatch steinberg_match(long L_coeff, long S_coeff);

// Rank cap for exceptional candidates against a classical target family:
// max{5, 2m/m'+1} (linear), 4m/m'+1 (unitary), 2m/m' (symplectic and
// orthogonal), floor-evaluated.
long exceptional_bound(Family target_family, int m, int m_prime);

enum class CaseOutcome { OrderWitness, PpartFilter, DegreeSweep, Unresolved };
const char* outcome_name(CaseOutcome o);

// One machine-checked case of a verification campaign. `rules` lists the
// constraint-chain steps the outcome rests on; `witness` is re-checkable
// through the orders/zsigmondy/degrees operations alone.
struct CaseResult {
    std::string id;
    std::string rules;
    CaseOutcome outcome = CaseOutcome::Unresolved;
    std::string witness;
    bool revalidated = false;
    bool failed = false;
    long millis = 0;
    ordered_json details = ordered_json::object();
};

struct LemmaConfig {
    std::vector<long> p_set = {2, 3, 5};
    int c_max = 2;             // samples of the Steinberg generator c
    int a_max = 3;             // field exponents of grid targets
    int grid_n_max = 10;       // target rank cap in the classical grids
    int grid_m_max = 24;       // candidate rank cap
    int dioph_n_max = 60;      // range of the named diophantine sweeps
    int sweep_q_max = 81;      // q cap in named degree-equation sweeps
};

// Exhaustive solution set of a registered two-variable equation within
// n <= n_max, m <= m_max. Known ids:
//   "2m^2=n(n-1)"  "2m(m-1)=n(n-1)"  "3m(m-1)=n(n-1)"
//   "m(m-1)=2n(n-1)"  "4m(m-1)=n(n-1)"  "m(m-1)=2n^2"
std::vector<std::pair<long, long>> solve_diophantine(const std::string& id, long n_max,
                                                     long m_max);
const std::vector<std::string>& diophantine_ids();

// Exact-integer inequality sweeps; no floating point. Known ids:
//   "2^d1<q^(n^2/2)"  — 2^{(q^n-q)/(q-1)} < q^{n^2/2}
//   "2q^(n-1)<n^2*log2q" — restated exactly for q = 2^k, else via the
//                          squared comparison
struct SweepReport {
    std::string id;
    long points = 0;
    long holds = 0;   // points where the inequality is satisfied
    std::vector<std::string> hold_points;
};
SweepReport inequality_sweep(const std::string& id, int n_min, int n_max, long q_max);

// Feasible b values in [1, b_max]: p^b must equal one of the allowed
// p-part shapes at field exponent a, subject to b < (bound)*a style
// constraints. An empty result is an eliminating outcome.
struct BConstraint {
    enum Kind { LessThanMultiple, NotEqualMultiple } kind;
    long multiple;  // compares b against multiple * a
};
std::vector<long> ppart_filter(const std::vector<PPartShape>& allowed, long p, int a, long b_max,
                               const std::vector<BConstraint>& constraints);

// Campaign driver: lemma_id is one of "lemma-3.2", "lemma-4.1",
// "lemma-5.1", "lemma-6.1", "lemma-6.2", or "all".
std::vector<CaseResult> run_lemma(const std::string& lemma_id, const LemmaConfig& cfg);
const std::vector<std::string>& lemma_ids();

}  // namespace liecheck
