#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "liecheck/spec.hpp"

namespace liecheck {

// Linear form c_n * n + c_c used for symbolic exponents in table rows.
struct LinForm {
    int cn = 0;
    int cc = 0;
    long at(int n) const { return static_cast<long>(cn) * n + cc; }
};

enum class CondKind { QOdd, QEven, QNe, QModNe, NEven, NOdd, Integral };

struct DegreeCond {
    CondKind kind;
    long a = 0;  // modulus for QModNe, value for QNe
    long b = 0;  // residue for QModNe
};

// scalar * q^q_power * prod numer / prod denom, factors (d, sign) meaning
// q^d + sign. Conditions gate applicability at a concrete (p, a).
struct DegreeExpr {
    long scalar_num = 1;
    long scalar_den = 1;
    int q_power = 0;
    std::vector<std::pair<int, int>> numer;
    std::vector<std::pair<int, int>> denom;
    std::vector<DegreeCond> conds;
    std::string label;
};

std::string render_degree(const DegreeExpr& e);

// True when every non-Integral condition holds; Integral conditions are
// checked by exact evaluation.
bool degree_applies(const DegreeExpr& e, long p, int a);

// Exact value; throws SpecError when the conditions hold but the value is
// not a positive integer (a wrong condition set, surfaced loudly).
mpz_class eval_degree(const DegreeExpr& e, long p, int a);

// p-part from the structure: p^{a*q_power} adjusted by the scalar.
mpz_class degree_p_part(const DegreeExpr& e, long p, int a);

// Allowed p-part shape of table entries: q^k, or q/2 when half is set.
struct PPartShape {
    int k = 0;
    bool half = false;
};

mpz_class ppart_shape_value(const PPartShape& s, long p, int a);

enum class TableStatus { Ok, NoRow };

struct DegreeTable {
    TableStatus status = TableStatus::NoRow;
    Family family = Family::Linear;
    int n = 0;
    bool q_odd = true;
    LinForm bound_exp;  // entries lie below q^{bound_exp(n)}
    std::vector<PPartShape> claimed_pparts;
    std::vector<DegreeExpr> entries;

    mpz_class bound_value(long p, int a) const;
};

// Loads and materializes the low-degree table rows shipped in
// data/degree_tables.txt. Row coverage mirrors the published lists:
// requests outside it (SU with n < 10, excluded (n,q) pairs) come back
// with status NoRow rather than an empty entry list.
class DegreeTables {
  public:
    explicit DegreeTables(const std::string& path);

    DegreeTable low_degree_table(Family family, int n, bool q_odd, long p, int a) const;

    static const DegreeTables& instance();
    static void set_default_path(const std::string& path);

    struct Line {
        std::string family_token;
        int n_min = 0, n_max = -1;
        int parity = 0;  // 0 any, 1 odd, 2 even
        std::vector<std::pair<int, long>> exclusions;
        long scalar_num = 1, scalar_den = 1;
        int q_power = 0;
        std::vector<std::pair<LinForm, int>> numer, denom;
        std::vector<DegreeCond> conds;
    };

  private:
    struct TableHeader {
        std::string family_token;
        int parity = 0;  // 0 any, 1 odd, 2 even
        LinForm bound;
        std::vector<PPartShape> pparts;
    };
    std::vector<TableHeader> headers_;
    std::vector<Line> lines_;
};

// Low-degree unipotent character used as a fingerprint, per candidate
// family; epsilon is the orthogonal type (+1/-1) and is ignored elsewhere.
enum class UnipKind { Linear, Unitary, SymplecticOdd, EvenOrth };
DegreeExpr unipotent_witness_degree(UnipKind kind, int m, int epsilon = +1);

struct MinimalDegrees {
    bool tabulated = false;
    mpz_class d1, d2;
    bool has_d2 = false;
    bool has_d3_bound = false;
    mpz_class d3_lower;
};
MinimalDegrees minimal_degrees(Family family, int n, long p, int a);

// Superset of the nontrivial degrees of SL_2(q); the halves are dropped
// when q is even.
std::set<mpz_class> sl2_cover_degree_superset(long p, int a);

// Partitions of m in reverse-lexicographic order, parts descending.
std::vector<std::vector<int>> partitions_of(int m);
mpz_class hook_length_degree(const std::vector<int>& lambda);
bool is_self_conjugate(const std::vector<int>& lambda);

// Max over partitions λ of m of f_λ (f_λ/2 when λ is self-conjugate);
// a lower bound for the largest character degree of A_m. m <= 16.
mpz_class alternating_max_degree(int m);

}  // namespace liecheck
