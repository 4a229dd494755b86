#include "liecheck/spec.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <map>
#include <sstream>

namespace liecheck {

namespace {

bool is_prime_small(long p) {
    if (p < 2) return false;
    for (long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

// factor q into p^a; returns false when q is not a prime power
bool split_prime_power(long q, long& p, int& a) {
    if (q < 2) return false;
    for (long d = 2; d * d <= q; ++d) {
        if (q % d == 0) {
            p = d;
            a = 0;
            while (q % d == 0) {
                q /= d;
                ++a;
            }
            return q == 1;
        }
    }
    p = q;
    a = 1;
    return true;
}

const std::array<ExceptionalTypeData, 10>& exc_table() {
    // m' is the largest d with (q^d - 1) dividing the order; for the pure
    // minus lists this is the largest minus degree, for 3D4 it is 6 (the
    // (12,-)/(4,-) pair encodes q^8+q^4+1, which contributes no q^12-1).
    static const std::array<ExceptionalTypeData, 10> table = {{
        {ExcTag::G2, 6, 6, {{6, -1}, {2, -1}}, {}, 0, false},
        {ExcTag::F4, 24, 12, {{12, -1}, {8, -1}, {6, -1}, {2, -1}}, {}, 0, false},
        {ExcTag::E6, 36, 12, {{12, -1}, {9, -1}, {8, -1}, {6, -1}, {5, -1}, {2, -1}}, {}, 0, false},
        {ExcTag::E7, 63, 18,
         {{18, -1}, {14, -1}, {12, -1}, {10, -1}, {8, -1}, {6, -1}, {2, -1}}, {}, 0, false},
        {ExcTag::E8, 120, 30,
         {{30, -1}, {24, -1}, {20, -1}, {18, -1}, {14, -1}, {12, -1}, {8, -1}, {2, -1}}, {}, 0,
         false},
        {ExcTag::TwoE6, 36, 12, {{12, -1}, {9, 1}, {8, -1}, {6, -1}, {5, 1}, {2, -1}}, {}, 0,
         false},
        {ExcTag::ThreeD4, 12, 6, {{12, -1}, {6, -1}, {2, -1}}, {{4, -1}}, 0, false},
        {ExcTag::TwoB2, 2, 1, {{2, 1}, {1, -1}}, {}, 2, true},
        {ExcTag::TwoG2, 3, 1, {{3, 1}, {1, -1}}, {}, 3, true},
        {ExcTag::TwoF4, 12, 4, {{6, 1}, {4, -1}, {3, 1}, {1, -1}}, {}, 2, true},
    }};
    return table;
}

}  // namespace

const ExceptionalTypeData& exceptional_type_data(ExcTag tag) {
    for (const auto& d : exc_table())
        if (d.tag == tag) return d;
    throw SpecError("unknown exceptional tag");
}

const char* exc_tag_name(ExcTag tag) {
    switch (tag) {
        case ExcTag::G2: return "G2";
        case ExcTag::F4: return "F4";
        case ExcTag::E6: return "E6";
        case ExcTag::E7: return "E7";
        case ExcTag::E8: return "E8";
        case ExcTag::TwoE6: return "2E6";
        case ExcTag::ThreeD4: return "3D4";
        case ExcTag::TwoB2: return "Suz";
        case ExcTag::TwoG2: return "Ree";
        case ExcTag::TwoF4: return "2F4";
    }
    return "?";
}

void validate(const GroupSpec& spec) {
    if (!is_prime_small(spec.p)) throw SpecError("p must be prime");
    if (spec.exponent < 1) throw SpecError("field exponent must be >= 1");
    switch (spec.family) {
        case Family::Linear:
            if (spec.rank < 2) throw SpecError("linear rank must be >= 2");
            break;
        case Family::Unitary:
            if (spec.rank < 3) throw SpecError("unitary rank must be >= 3");
            break;
        case Family::Symplectic:
            if (spec.rank < 2) throw SpecError("symplectic rank must be >= 2");
            break;
        case Family::OddOrthogonal:
            if (spec.rank < 3) throw SpecError("odd orthogonal rank must be >= 3");
            if (spec.p == 2)
                throw SpecError("Omega(2n+1) in characteristic 2 coincides with PSp(2n); "
                                "use the symplectic spec");
            break;
        case Family::EvenOrthogonalPlus:
        case Family::EvenOrthogonalMinus:
            if (spec.rank < 4) throw SpecError("even orthogonal rank must be >= 4");
            break;
        case Family::Exceptional: {
            const auto& data = exceptional_type_data(spec.tag);
            if (data.required_p != 0 && spec.p != data.required_p)
                throw SpecError(std::string(exc_tag_name(spec.tag)) + " requires p = " +
                                std::to_string(data.required_p));
            if (data.odd_exponent_only && (spec.exponent % 2 == 0 || spec.exponent < 3))
                throw SpecError(std::string(exc_tag_name(spec.tag)) +
                                " requires an odd field exponent >= 3");
            break;
        }
    }
}

bool is_valid(const GroupSpec& spec) {
    try {
        validate(spec);
        return true;
    } catch (const SpecError&) {
        return false;
    }
}

namespace {

struct FamilyName {
    const char* name;
    Family family;
    Flavor flavor;
    ExcTag tag;
};

const std::vector<FamilyName>& family_names() {
    static const std::vector<FamilyName> names = {
        {"psl", Family::Linear, Flavor::Simple, ExcTag::G2},
        {"sl", Family::Linear, Flavor::Cover, ExcTag::G2},
        {"psu", Family::Unitary, Flavor::Simple, ExcTag::G2},
        {"su", Family::Unitary, Flavor::Cover, ExcTag::G2},
        {"psp", Family::Symplectic, Flavor::Simple, ExcTag::G2},
        {"sp", Family::Symplectic, Flavor::Cover, ExcTag::G2},
        {"omega", Family::OddOrthogonal, Flavor::Simple, ExcTag::G2},
        {"spin+", Family::EvenOrthogonalPlus, Flavor::Cover, ExcTag::G2},
        {"spin-", Family::EvenOrthogonalMinus, Flavor::Cover, ExcTag::G2},
        {"spin", Family::OddOrthogonal, Flavor::Cover, ExcTag::G2},
        {"pomega+", Family::EvenOrthogonalPlus, Flavor::Simple, ExcTag::G2},
        {"pomega-", Family::EvenOrthogonalMinus, Flavor::Simple, ExcTag::G2},
        {"g2", Family::Exceptional, Flavor::Simple, ExcTag::G2},
        {"f4", Family::Exceptional, Flavor::Simple, ExcTag::F4},
        {"e6", Family::Exceptional, Flavor::Simple, ExcTag::E6},
        {"e7", Family::Exceptional, Flavor::Simple, ExcTag::E7},
        {"e8", Family::Exceptional, Flavor::Simple, ExcTag::E8},
        {"2e6", Family::Exceptional, Flavor::Simple, ExcTag::TwoE6},
        {"3d4", Family::Exceptional, Flavor::Simple, ExcTag::ThreeD4},
        {"suz", Family::Exceptional, Flavor::Simple, ExcTag::TwoB2},
        {"2b2", Family::Exceptional, Flavor::Simple, ExcTag::TwoB2},
        {"ree", Family::Exceptional, Flavor::Simple, ExcTag::TwoG2},
        {"2g2", Family::Exceptional, Flavor::Simple, ExcTag::TwoG2},
        {"2f4", Family::Exceptional, Flavor::Simple, ExcTag::TwoF4},
    };
    return names;
}

long parse_long(const std::string& s, const std::string& what) {
    if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(c); }))
        throw SpecError("bad " + what + " '" + s + "'");
    try {
        return std::stol(s);
    } catch (const std::exception&) {
        throw SpecError("bad " + what + " '" + s + "'");
    }
}

void parse_field(const std::string& s, long& p, int& a) {
    auto caret = s.find('^');
    if (caret != std::string::npos) {
        p = parse_long(s.substr(0, caret), "prime");
        a = static_cast<int>(parse_long(s.substr(caret + 1), "field exponent"));
        if (!is_prime_small(p)) throw SpecError("base " + std::to_string(p) + " is not prime");
        if (a < 1) throw SpecError("field exponent must be >= 1");
        return;
    }
    long q = parse_long(s, "field size");
    if (!split_prime_power(q, p, a))
        throw SpecError("field size " + std::to_string(q) + " is not a prime power");
}

}  // namespace

GroupSpec parse_spec(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    auto open = s.find('(');
    if (open == std::string::npos || s.back() != ')')
        throw SpecError("expected FAMILY(...) in '" + text + "'");
    std::string head = s.substr(0, open);
    std::string args = s.substr(open + 1, s.size() - open - 2);
    std::string lower;
    for (char c : head) lower.push_back(static_cast<char>(std::tolower(c)));

    const FamilyName* match = nullptr;
    for (const auto& f : family_names()) {
        if (lower == f.name) {
            match = &f;
            break;
        }
    }
    if (!match) throw SpecError("unknown family '" + head + "'");

    std::vector<std::string> parts;
    std::string cur;
    for (char c : args) {
        if (c == ',') {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    parts.push_back(cur);

    GroupSpec spec;
    spec.family = match->family;
    spec.flavor = match->flavor;
    spec.tag = match->tag;

    if (spec.family == Family::Exceptional) {
        if (parts.size() != 1) throw SpecError("expected " + head + "(q)");
        parse_field(parts[0], spec.p, spec.exponent);
        spec.rank = 0;
    } else {
        if (parts.size() != 2) throw SpecError("expected " + head + "(n,q)");
        long sub = parse_long(parts[0], "rank");
        parse_field(parts[1], spec.p, spec.exponent);
        // normalize printed subscripts: Sp(2n,q), Omega(2n+1,q), Spin(2n,q)
        switch (spec.family) {
            case Family::Linear:
            case Family::Unitary:
                spec.rank = static_cast<int>(sub);
                break;
            case Family::Symplectic:
            case Family::EvenOrthogonalPlus:
            case Family::EvenOrthogonalMinus:
                if (sub % 2 != 0) throw SpecError(head + " subscript must be even");
                spec.rank = static_cast<int>(sub / 2);
                break;
            case Family::OddOrthogonal:
                if (sub % 2 == 0) throw SpecError(head + " subscript must be odd");
                spec.rank = static_cast<int>(sub / 2);
                break;
            default:
                break;
        }
    }
    // Omega_5 and Omega over GF(2^a) are redirected to the isomorphic
    // symplectic groups before validation.
    if (spec.family == Family::OddOrthogonal && (spec.p == 2 || spec.rank == 2))
        spec.family = Family::Symplectic;
    validate(spec);
    return spec;
}

std::string render_spec(const GroupSpec& spec) {
    std::ostringstream out;
    auto field = [&]() {
        std::ostringstream f;
        if (spec.exponent == 1)
            f << spec.p;
        else
            f << spec.p << '^' << spec.exponent;
        return f.str();
    };
    switch (spec.family) {
        case Family::Linear:
            out << (spec.flavor == Flavor::Cover ? "SL" : "PSL") << '(' << spec.rank << ','
                << field() << ')';
            break;
        case Family::Unitary:
            out << (spec.flavor == Flavor::Cover ? "SU" : "PSU") << '(' << spec.rank << ','
                << field() << ')';
            break;
        case Family::Symplectic:
            out << (spec.flavor == Flavor::Cover ? "Sp" : "PSp") << '(' << 2 * spec.rank << ','
                << field() << ')';
            break;
        case Family::OddOrthogonal:
            out << (spec.flavor == Flavor::Cover ? "Spin" : "Omega") << '(' << 2 * spec.rank + 1
                << ',' << field() << ')';
            break;
        case Family::EvenOrthogonalPlus:
            out << (spec.flavor == Flavor::Cover ? "Spin+" : "POmega+") << '(' << 2 * spec.rank
                << ',' << field() << ')';
            break;
        case Family::EvenOrthogonalMinus:
            out << (spec.flavor == Flavor::Cover ? "Spin-" : "POmega-") << '(' << 2 * spec.rank
                << ',' << field() << ')';
            break;
        case Family::Exceptional:
            out << exc_tag_name(spec.tag) << '(' << field() << ')';
            break;
    }
    return out.str();
}

GroupSpec canonicalize(const GroupSpec& spec) {
    GroupSpec s = spec;
    // B_n = C_n coincidences
    if (s.family == Family::OddOrthogonal && (s.p == 2 || s.rank == 2))
        s.family = Family::Symplectic;
    // PSL_2(5) = PSL_2(4) (both are A5); the cover orders differ, so the
    // identification applies to the simple form only.
    if (s.family == Family::Linear && s.rank == 2 && s.p == 5 && s.exponent == 1 &&
        s.flavor == Flavor::Simple) {
        s.p = 2;
        s.exponent = 2;
    }
    return s;
}

std::optional<std::string> isomorphism_note(const GroupSpec& spec) {
    GroupSpec s = canonicalize(spec);
    if (s.family == Family::Linear && s.rank == 2 && s.flavor == Flavor::Simple) {
        if (s.p == 2 && s.exponent == 2) return "isomorphic to A5 (and to PSL(2,5))";
        if (s.p == 3 && s.exponent == 2) return "isomorphic to A6";
    }
    if (s.family == Family::Linear && s.rank == 4 && s.p == 2 && s.exponent == 1 &&
        s.flavor == Flavor::Simple)
        return "isomorphic to A8";
    return std::nullopt;
}

long steinberg_coeff(Family family, int rank) {
    switch (family) {
        case Family::Linear:
        case Family::Unitary:
            return static_cast<long>(rank) * (rank - 1) / 2;
        case Family::Symplectic:
        case Family::OddOrthogonal:
            return static_cast<long>(rank) * rank;
        case Family::EvenOrthogonalPlus:
        case Family::EvenOrthogonalMinus:
            return static_cast<long>(rank) * (rank - 1);
        case Family::Exceptional:
            throw SpecError("exceptional families carry their coefficient in the type data");
    }
    return 0;
}

long steinberg_coeff(const GroupSpec& spec) {
    if (spec.family == Family::Exceptional) return exceptional_type_data(spec.tag).m;
    return steinberg_coeff(spec.family, spec.rank);
}

mpz_class steinberg_degree(const GroupSpec& spec) {
    validate(spec);
    mpz_class result;
    mpz_ui_pow_ui(result.get_mpz_t(), static_cast<unsigned long>(spec.p),
                  static_cast<unsigned long>(steinberg_coeff(spec) * spec.exponent));
    return result;
}

const std::vector<GroupSpec>& exceptional_schur_list() {
    static const std::vector<GroupSpec> list = [] {
        auto mk = [](const char* s) { return canonicalize(parse_spec(s)); };
        // Omega(7,2) is recorded via its canonical form PSp(6,2).
        std::vector<GroupSpec> v = {
            mk("PSL(2,4)"),   mk("PSL(2,9)"),  mk("PSL(3,2)"),    mk("PSL(3,4)"),
            mk("PSL(4,2)"),   mk("PSp(6,2)"),  mk("Omega(7,3)"),  mk("POmega+(8,2)"),
            mk("PSU(4,2)"),   mk("PSU(4,3)"),  mk("PSU(6,2)"),    mk("F4(2)"),
            mk("G2(3)"),      mk("G2(4)"),     mk("2E6(2)"),      mk("Suz(8)"),
        };
        return v;
    }();
    return list;
}

bool has_exceptional_multiplier(const GroupSpec& spec) {
    GroupSpec s = canonicalize(spec).to_simple();
    for (const auto& g : exceptional_schur_list())
        if (g == s) return true;
    return false;
}

}  // namespace liecheck
