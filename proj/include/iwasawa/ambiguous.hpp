#ifndef IWASAWA_AMBIGUOUS_HPP
#define IWASAWA_AMBIGUOUS_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace iwasawa {

/// Data for Chevalley's formula on a cyclic extension L/K.
struct ChevalleyInput {
    mpz_class h;                      // class number of K
    std::uint64_t degree;             // [L : K]
    std::vector<std::uint64_t> ram_indices;
    mpz_class unit_index;             // [E : E cap N(L^x)]
};

/// Throws DomainError when degree < 2, h or unit_index < 1, or some e_P does
/// not divide the degree.
void validate(ChevalleyInput const & inp);

/// Number of ambiguous classes h * prod e_P / (n * unit_index). Throws
/// InconsistentInput when the quotient is not an integer.
mpz_class ambiguous_count(ChevalleyInput const & inp);

/// p-exponent of prod e_P / (p * unit_index), the number of strongly
/// ambiguous classes when the base class number is prime to p.
std::int64_t strong_ambiguous_count(unsigned p, std::vector<std::uint64_t> const & ram_indices,
                                    mpz_class const & unit_index);

std::int64_t mu_lower_from_s(std::int64_t s);

/// (s-1) p^n - 1, floored at zero.
std::int64_t en_lower_bound(std::int64_t s, unsigned p, unsigned n);

/// Exponents of the bounds on the number of strongly ambiguous classes at
/// level n: ((s-1) p^n - 1 floored at 0, s p^n - 1).
std::pair<std::int64_t, std::int64_t> strong_ambiguous_bounds(std::int64_t s, unsigned p, unsigned n);

/// p^(p^n), the largest possible unit index at level n.
mpz_class maximal_unit_index(unsigned p, unsigned n);

} // namespace iwasawa

#endif /* IWASAWA_AMBIGUOUS_HPP */
