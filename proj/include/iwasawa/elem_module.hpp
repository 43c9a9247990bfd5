#ifndef IWASAWA_ELEM_MODULE_HPP
#define IWASAWA_ELEM_MODULE_HPP

#include <cstdint>
#include <vector>

#include "iwasawa/lambda_ring.hpp"

namespace iwasawa {

/* E = (+)_i Lambda/(p^mu_i) (+) (+)_j Lambda/(f_j), with every mu_i >= 1 and
 * every f_j distinguished. Free summands are not represented.
 */
class ElementaryModule {
    unsigned p_;
    unsigned digits_;
    std::vector<unsigned> p_exponents_;
    std::vector<LambdaPoly> dist_polys_;

  public:
    ElementaryModule(unsigned p, unsigned digits = default_precision)
        : ElementaryModule(p, digits, {}, {}) {}
    /// Throws DomainError on a zero exponent or a non-distinguished f_j,
    /// StructuralError when an f_j lives over a different ring.
    ElementaryModule(unsigned p, unsigned digits, std::vector<unsigned> p_exponents,
                     std::vector<LambdaPoly> dist_polys);

    unsigned prime() const { return p_; }
    unsigned precision() const { return digits_; }
    std::vector<unsigned> const & p_exponents() const { return p_exponents_; }
    std::vector<LambdaPoly> const & dist_polys() const { return dist_polys_; }
};

struct ModuleInvariants {
    std::int64_t mu;
    std::int64_t lambda;
    friend bool operator==(ModuleInvariants const &, ModuleInvariants const &) = default;
};

ModuleInvariants invariants(ElementaryModule const & e);

/// True when Lambda/(f) (+) ... has an infinite quotient by nu_n because f
/// shares an irreducible factor with nu_n.
bool shares_factor_with_nu(LambdaPoly const & f, unsigned n);

/// ideal_index(f, nu_n) with precision doubling up to max_precision.
QuotientOrder summand_quotient_order(LambdaPoly const & f, unsigned n);

/// Exponent of #(E / nu_n E), or infinite.
QuotientOrder quotient_order_nu(ElementaryModule const & e, unsigned n);

/// Exponent of #(E / nu_n E)[p]. Requires p^n - 1 >= deg f_j for every j.
std::int64_t p_torsion_order_nu(ElementaryModule const & e, unsigned n);

/* Lower bound on the exponent of #(E / nu_n E) for an elementary module
 * with mu = 0 and the given lambda. n = 1 for every p; n = 2 only for p = 2.
 * The p = 2, n = 2, lambda = 1 value (2) comes from a single linear summand
 * T - a and is not part of the published statement.
 */
std::int64_t lambdathm_lower_bound(unsigned p, std::int64_t lambda, unsigned n);

} // namespace iwasawa

#endif /* IWASAWA_ELEM_MODULE_HPP */
