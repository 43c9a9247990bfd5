#include "iwasawa/ambiguous.hpp"

#include <algorithm>
#include <string>

#include "iwasawa/errors.hpp"
#include "iwasawa/padic.hpp"

namespace iwasawa {

namespace {

mpz_class product(std::vector<std::uint64_t> const & v)
{
    mpz_class r = 1;
    for (auto e : v)
        r *= mpz_class(std::to_string(e));
    return r;
}

} // namespace

void validate(ChevalleyInput const & inp)
{
    if (inp.degree < 2)
        throw DomainError("cyclic extension degree must be at least 2");
    if (inp.h < 1)
        throw DomainError("class number must be positive");
    if (inp.unit_index < 1)
        throw DomainError("unit index must be positive");
    for (auto e : inp.ram_indices)
        if (e == 0 || inp.degree % e != 0)
            throw DomainError("ramification index " + std::to_string(e) + " does not divide degree " +
                              std::to_string(inp.degree));
}

mpz_class ambiguous_count(ChevalleyInput const & inp)
{
    validate(inp);
    mpz_class num = inp.h * product(inp.ram_indices);
    mpz_class den = mpz_class(std::to_string(inp.degree)) * inp.unit_index;
    if (!mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t()))
        throw InconsistentInput("ambiguous class count " + num.get_str() + "/" + den.get_str() +
                                " is not an integer");
    mpz_class q;
    mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return q;
}

std::int64_t strong_ambiguous_count(unsigned p, std::vector<std::uint64_t> const & ram_indices,
                                    mpz_class const & unit_index)
{
    if (!is_prime(p))
        throw DomainError("strong_ambiguous_count needs a prime");
    if (unit_index < 1)
        throw DomainError("unit index must be positive");
    mpz_class num = product(ram_indices);
    mpz_class den = unit_index * p;
    if (!mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t()))
        throw InconsistentInput("strongly ambiguous count " + num.get_str() + "/" + den.get_str() +
                                " is not an integer");
    mpz_class q;
    mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return integer_valuation(q, p);
}

std::int64_t mu_lower_from_s(std::int64_t s)
{
    if (s < 0)
        throw DomainError("s must be nonnegative");
    return std::max<std::int64_t>(s - 1, 0);
}

std::int64_t en_lower_bound(std::int64_t s, unsigned p, unsigned n)
{
    if (s < 1)
        throw DomainError("en_lower_bound needs s >= 1");
    return std::max<std::int64_t>((s - 1) * int_pow(p, n) - 1, 0);
}

std::pair<std::int64_t, std::int64_t> strong_ambiguous_bounds(std::int64_t s, unsigned p, unsigned n)
{
    if (s < 1)
        throw DomainError("strong_ambiguous_bounds needs s >= 1");
    std::int64_t pn = int_pow(p, n);
    return {std::max<std::int64_t>((s - 1) * pn - 1, 0), s * pn - 1};
}

mpz_class maximal_unit_index(unsigned p, unsigned n)
{
    return prime_power(p, static_cast<unsigned>(int_pow(p, n)));
}

} // namespace iwasawa
