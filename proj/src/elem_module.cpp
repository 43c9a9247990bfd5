#include "iwasawa/elem_module.hpp"

#include <algorithm>
#include <string>

#include "iwasawa/errors.hpp"

namespace iwasawa {

ElementaryModule::ElementaryModule(unsigned p, unsigned digits, std::vector<unsigned> p_exponents,
                                   std::vector<LambdaPoly> dist_polys)
    : p_(p), digits_(digits), p_exponents_(std::move(p_exponents)), dist_polys_(std::move(dist_polys))
{
    if (!is_prime(p))
        throw DomainError("elementary module needs a prime, got " + std::to_string(p));
    for (unsigned m : p_exponents_)
        if (m == 0)
            throw DomainError("p-power summand exponents must be positive");
    for (auto const & f : dist_polys_) {
        if (f.prime() != p || f.precision() != digits)
            throw StructuralError("summand " + to_string(f) + " lives over a different ring");
        if (f.is_zero() || !is_distinguished(f))
            throw DomainError("summand " + to_string(f) + " is not distinguished");
    }
}

ModuleInvariants invariants(ElementaryModule const & e)
{
    ModuleInvariants r{0, 0};
    for (unsigned m : e.p_exponents())
        r.mu += m;
    for (auto const & f : e.dist_polys())
        r.lambda += static_cast<std::int64_t>(*f.degree());
    return r;
}

bool shares_factor_with_nu(LambdaPoly const & f, unsigned n)
{
    std::size_t const deg = *f.degree();
    for (unsigned k = 1; k <= n; ++k) {
        // deg Phi_{p^k}(1+T) = (p-1) p^(k-1), increasing in k.
        std::int64_t fdeg = (static_cast<std::int64_t>(f.prime()) - 1) * int_pow(f.prime(), k - 1);
        if (fdeg > static_cast<std::int64_t>(deg))
            break;
        auto xi = cyclotomic_factor(f.prime(), f.precision(), k);
        if (weierstrass_divide(f, xi).remainder.is_zero())
            return true;
    }
    return false;
}

QuotientOrder summand_quotient_order(LambdaPoly const & f, unsigned n)
{
    if (shares_factor_with_nu(f, n))
        return QuotientOrder::infinite();
    unsigned digits = f.precision();
    for (;;) {
        QuotientOrder q = ideal_index(f.with_precision(digits), nu(f.prime(), digits, n));
        if (!q.is_indeterminate() || digits >= max_precision)
            return q;
        digits = std::min(2 * digits, max_precision);
    }
}

QuotientOrder quotient_order_nu(ElementaryModule const & e, unsigned n)
{
    std::int64_t total = 0;
    for (unsigned m : e.p_exponents())
        total += quotient_order_pj_nu(e.prime(), m, n);
    std::optional<QuotientOrder> unresolved;
    for (auto const & f : e.dist_polys()) {
        QuotientOrder q = summand_quotient_order(f, n);
        if (q.is_infinite())
            return q;
        if (q.is_indeterminate())
            unresolved = q;
        else
            total += q.exponent();
    }
    if (unresolved)
        return *unresolved;
    return QuotientOrder::finite(total);
}

std::int64_t p_torsion_order_nu(ElementaryModule const & e, unsigned n)
{
    std::int64_t const dim = int_pow(e.prime(), n) - 1;
    std::int64_t total = static_cast<std::int64_t>(e.p_exponents().size()) * dim;
    for (auto const & f : e.dist_polys()) {
        auto deg = static_cast<std::int64_t>(*f.degree());
        if (deg > dim)
            throw DomainError("p-torsion count needs p^n - 1 >= deg f, violated by " + to_string(f) +
                              " at level " + std::to_string(n));
        total += deg;
    }
    return total;
}

std::int64_t lambdathm_lower_bound(unsigned p, std::int64_t lambda, unsigned n)
{
    if (lambda < 0)
        throw DomainError("lambda must be nonnegative");
    if (n == 1)
        return std::min<std::int64_t>(lambda, static_cast<std::int64_t>(p) - 1);
    if (n == 2 && p == 2) {
        switch (lambda) {
        case 0:
            return 0;
        case 1:
            return 2;
        case 2:
            return 4;
        default:
            return 3;
        }
    }
    throw DomainError("no quotient lower bound for p=" + std::to_string(p) + ", n=" + std::to_string(n));
}

} // namespace iwasawa
