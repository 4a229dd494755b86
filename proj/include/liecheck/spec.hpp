#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace liecheck {

// Families of finite simple groups of Lie type handled by this toolkit.
// Rank parameters follow the subscript-halving convention: Symplectic n
// means Sp_{2n}, OddOrthogonal n means Omega_{2n+1}, EvenOrthogonal n
// means (P)Omega^{+/-}_{2n}.
enum class Family {
    Linear,
    Unitary,
    Symplectic,
    OddOrthogonal,
    EvenOrthogonalPlus,
    EvenOrthogonalMinus,
    Exceptional,
};

enum class ExcTag { G2, F4, E6, E7, E8, TwoE6, ThreeD4, TwoB2, TwoG2, TwoF4 };

// Cover = simply connected form (SL, SU, Sp, Spin, universal exceptional
// group); Simple = quotient by the center.
enum class Flavor { Simple, Cover };

struct SpecError : std::runtime_error {
    explicit SpecError(const std::string& what) : std::runtime_error(what) {}
};

struct GroupSpec {
    Family family = Family::Linear;
    ExcTag tag = ExcTag::G2;  // meaningful only when family == Exceptional
    int rank = 0;             // n; 0 for exceptional families
    long p = 2;               // defining characteristic
    int exponent = 1;         // field is GF(p^exponent)
    Flavor flavor = Flavor::Cover;

    bool operator==(const GroupSpec& o) const {
        return family == o.family && (family != Family::Exceptional || tag == o.tag) &&
               rank == o.rank && p == o.p && exponent == o.exponent && flavor == o.flavor;
    }
    bool operator!=(const GroupSpec& o) const { return !(*this == o); }

    GroupSpec with_flavor(Flavor f) const {
        GroupSpec s = *this;
        s.flavor = f;
        return s;
    }
    GroupSpec to_cover() const { return with_flavor(Flavor::Cover); }
    GroupSpec to_simple() const { return with_flavor(Flavor::Simple); }
};

// Signed order factor data for an exceptional family: the non-p part of
// the order of the universal group over GF(q) is
//   prod (q^d - 1) [sign -1] * prod (q^d + 1) [sign +1] / prod denominators.
// The denominator list is empty except for 3D4, whose order contains the
// factor q^8+q^4+1 = (q^12-1)/(q^4-1).
struct ExceptionalTypeData {
    ExcTag tag;
    int m;        // |G|_p = q^m
    int m_prime;  // largest d with (q^d - 1) dividing the order
    std::vector<std::pair<int, int>> factors;
    std::vector<std::pair<int, int>> denom_factors;
    long required_p;         // 0 = any prime
    bool odd_exponent_only;  // Suzuki/Ree parameterization
};

const ExceptionalTypeData& exceptional_type_data(ExcTag tag);
const char* exc_tag_name(ExcTag tag);

// Throws SpecError when a parameter combination is invalid.
void validate(const GroupSpec& spec);
bool is_valid(const GroupSpec& spec);

// Parses strings like "SL(3,2)", "PSp(4,3)", "Omega(7,3)", "Spin-(8,2)",
// "E8(2^9)", "Suz(8)". Family names are case-insensitive; q may be given
// as a plain prime power or as p^a.
GroupSpec parse_spec(const std::string& text);
std::string render_spec(const GroupSpec& spec);

// Canonical representative under the closed list of exceptional
// isomorphisms: Omega_5(q) ~ PSp_4(q), Omega_{2n+1}(2^a) ~ PSp_{2n}(2^a),
// PSL_2(5) ~ PSL_2(4). Idempotent.
GroupSpec canonicalize(const GroupSpec& spec);

// Coincidence notes that do not change the canonical form (PSL_2(9) ~ A6,
// PSL_2(4) ~ A5, ...).
std::optional<std::string> isomorphism_note(const GroupSpec& spec);

// p-exponent of the Steinberg degree per unit of field exponent:
// n(n-1)/2 for A/2A, n^2 for B/C, n(n-1) for D, m for exceptional tags.
long steinberg_coeff(Family family, int rank);
long steinberg_coeff(const GroupSpec& spec);

// St(1) = |S|_p as an exact integer.
mpz_class steinberg_degree(const GroupSpec& spec);

// The sixteen simple groups with exceptional Schur multiplier, in
// canonical form (Omega_7(2) appears as PSp(6,2)).
const std::vector<GroupSpec>& exceptional_schur_list();
bool has_exceptional_multiplier(const GroupSpec& spec);

}  // namespace liecheck
