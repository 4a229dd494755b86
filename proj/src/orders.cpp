#include "liecheck/orders.hpp"

#include <algorithm>

namespace liecheck {

namespace {

mpz_class pow_q(long p, long e) {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(e));
    return r;
}

}  // namespace

mpz_class OrderPoly::evaluate() const {
    mpz_class result = pow_q(p, p_coeff * exponent);
    for (const auto& [d, sign] : factors) {
        mpz_class f = pow_q(p, static_cast<long>(d) * exponent) + sign;
        result *= f;
    }
    for (const auto& [d, sign] : denom_factors) {
        mpz_class f = pow_q(p, static_cast<long>(d) * exponent) + sign;
        mpz_class q, r;
        mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), result.get_mpz_t(), f.get_mpz_t());
        if (r != 0) throw SpecError("order denominator factor does not divide the product");
        result = q;
    }
    return result;
}

int OrderPoly::max_factor_degree() const {
    int m = 0;
    for (const auto& [d, s] : factors) m = std::max(m, d);
    return m;
}

OrderPoly order_poly(const GroupSpec& spec) {
    validate(spec);
    if (spec.flavor != Flavor::Cover)
        throw SpecError("order polynomials are defined for covers; "
                        "use evaluate_order for simple groups");
    OrderPoly poly;
    poly.p = spec.p;
    poly.exponent = spec.exponent;
    poly.p_coeff = steinberg_coeff(spec);
    const int n = spec.rank;
    switch (spec.family) {
        case Family::Linear:
            for (int i = 2; i <= n; ++i) poly.factors.push_back({i, -1});
            break;
        case Family::Unitary:
            for (int i = 2; i <= n; ++i) poly.factors.push_back({i, i % 2 == 0 ? -1 : +1});
            break;
        case Family::Symplectic:
        case Family::OddOrthogonal:
            for (int i = 1; i <= n; ++i) poly.factors.push_back({2 * i, -1});
            break;
        case Family::EvenOrthogonalPlus:
            poly.factors.push_back({n, -1});
            for (int i = 1; i <= n - 1; ++i) poly.factors.push_back({2 * i, -1});
            break;
        case Family::EvenOrthogonalMinus:
            poly.factors.push_back({n, +1});
            for (int i = 1; i <= n - 1; ++i) poly.factors.push_back({2 * i, -1});
            break;
        case Family::Exceptional: {
            const auto& data = exceptional_type_data(spec.tag);
            poly.factors = data.factors;
            poly.denom_factors = data.denom_factors;
            break;
        }
    }
    return poly;
}

mpz_class center_order(const GroupSpec& spec) {
    const mpz_class q = pow_q(spec.p, spec.exponent);
    auto g = [](const mpz_class& a, const mpz_class& b) {
        mpz_class r;
        mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
        return r;
    };
    switch (spec.family) {
        case Family::Linear: return g(spec.rank, q - 1);
        case Family::Unitary: return g(spec.rank, q + 1);
        case Family::Symplectic:
        case Family::OddOrthogonal: return g(2, q - 1);
        case Family::EvenOrthogonalPlus: {
            mpz_class qn = pow_q(spec.p, static_cast<long>(spec.rank) * spec.exponent);
            return g(4, qn - 1);
        }
        case Family::EvenOrthogonalMinus: {
            mpz_class qn = pow_q(spec.p, static_cast<long>(spec.rank) * spec.exponent);
            return g(4, qn + 1);
        }
        case Family::Exceptional:
            switch (spec.tag) {
                case ExcTag::E6: return g(3, q - 1);
                case ExcTag::E7: return g(2, q - 1);
                case ExcTag::TwoE6: return g(3, q + 1);
                default: return 1;
            }
    }
    return 1;
}

mpz_class evaluate_order(const GroupSpec& spec) {
    mpz_class cover = order_poly(spec.to_cover()).evaluate();
    if (spec.flavor == Flavor::Cover) return cover;
    mpz_class z = center_order(spec);
    mpz_class quotient, rem;
    mpz_fdiv_qr(quotient.get_mpz_t(), rem.get_mpz_t(), cover.get_mpz_t(), z.get_mpz_t());
    if (rem != 0) throw SpecError("center order does not divide cover order for " +
                                  render_spec(spec));
    return quotient;
}

mpz_class p_part(const mpz_class& x, const mpz_class& p) {
    if (x < 1) throw SpecError("p_part requires x >= 1");
    if (p < 2) throw SpecError("p_part requires p >= 2");
    mpz_class part = 1;
    mpz_class rest = x;
    mpz_class q, r;
    while (true) {
        mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), rest.get_mpz_t(), p.get_mpz_t());
        if (r != 0) break;
        part *= p;
        rest = q;
    }
    return part;
}

long p_valuation(const mpz_class& x, const mpz_class& p) {
    if (x == 0) throw SpecError("p_valuation of zero");
    long v = 0;
    mpz_class rest = abs(x), q, r;
    while (true) {
        mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), rest.get_mpz_t(), p.get_mpz_t());
        if (r != 0) break;
        ++v;
        rest = q;
    }
    return v;
}

bool divides_exact(const GroupSpec& L, const GroupSpec& H) {
    mpz_class l = evaluate_order(L);
    mpz_class h = evaluate_order(H);
    return mpz_divisible_p(h.get_mpz_t(), l.get_mpz_t()) != 0;
}

}  // namespace liecheck
