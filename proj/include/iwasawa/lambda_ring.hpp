#ifndef IWASAWA_LAMBDA_RING_HPP
#define IWASAWA_LAMBDA_RING_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "iwasawa/padic.hpp"

namespace iwasawa {

/* A polynomial in T over Z/p^N, standing for an element of Z_p[[T]].
 * Coefficients are stored as residues in [0, p^N); index k is the T^k
 * coefficient and trailing zeros are trimmed, so the zero polynomial has
 * no coefficients at all.
 */
class LambdaPoly {
    unsigned p_;
    unsigned digits_;
    mpz_class modulus_;
    std::vector<mpz_class> coeffs_;

    void trim();

  public:
    /// The zero polynomial.
    LambdaPoly(unsigned p, unsigned digits);
    /// Reduces each integer coefficient mod p^N.
    LambdaPoly(unsigned p, unsigned digits, std::vector<mpz_class> coeffs);
    LambdaPoly(unsigned p, unsigned digits, std::initializer_list<long> coeffs);

    static LambdaPoly from_scalars(std::span<PadicScalar const> coeffs);
    static LambdaPoly constant(PadicScalar const & c);
    /// c * T^k
    static LambdaPoly monomial(unsigned p, unsigned digits, std::size_t k, long c = 1);

    unsigned prime() const { return p_; }
    unsigned precision() const { return digits_; }
    mpz_class const & modulus() const { return modulus_; }

    /// nullopt for the zero polynomial.
    std::optional<std::size_t> degree() const;
    bool is_zero() const { return coeffs_.empty(); }

    /// Coefficient of T^k (zero past the degree).
    PadicScalar coeff(std::size_t k) const;
    std::vector<mpz_class> const & residues() const { return coeffs_; }

    LambdaPoly with_precision(unsigned digits) const;

    bool same_ring(LambdaPoly const & o) const { return p_ == o.p_ && digits_ == o.digits_; }

    friend bool operator==(LambdaPoly const & a, LambdaPoly const & b) {
        return a.same_ring(b) && a.coeffs_ == b.coeffs_;
    }

    friend LambdaPoly operator+(LambdaPoly const & a, LambdaPoly const & b);
    friend LambdaPoly operator-(LambdaPoly const & a, LambdaPoly const & b);
    friend LambdaPoly operator*(LambdaPoly const & a, LambdaPoly const & b);
    friend LambdaPoly operator*(PadicScalar const & c, LambdaPoly const & a);
    /// Multiplication by T^k.
    friend LambdaPoly shift(LambdaPoly const & a, std::size_t k);
};

LambdaPoly operator+(LambdaPoly const & a, LambdaPoly const & b);
LambdaPoly operator-(LambdaPoly const & a, LambdaPoly const & b);
LambdaPoly operator*(LambdaPoly const & a, LambdaPoly const & b);
LambdaPoly operator*(PadicScalar const & c, LambdaPoly const & a);
LambdaPoly shift(LambdaPoly const & a, std::size_t k);

/// (1+T)^(p^n) - 1
LambdaPoly omega(unsigned p, unsigned digits, unsigned n);

/// omega_n / T = (1+T)^(p^n - 1) + ... + (1+T) + 1; nu_0 = 1.
LambdaPoly nu(unsigned p, unsigned digits, unsigned n);

/// nu_k / nu_{k-1} = Phi_{p^k}(1+T), for k >= 1. These are the irreducible
/// factors of nu_n over Q_p.
LambdaPoly cyclotomic_factor(unsigned p, unsigned digits, unsigned k);

/// Monic with every lower coefficient divisible by p.
bool is_distinguished(LambdaPoly const & f);

struct Division {
    LambdaPoly quotient;
    LambdaPoly remainder;
};

/// f = d*q + r with deg r < deg d. d must be distinguished.
Division weierstrass_divide(LambdaPoly const & f, LambdaPoly const & d);

/// The order of a quotient module, as a p-power exponent.
class QuotientOrder {
  public:
    enum class Kind { finite, infinite, indeterminate };

  private:
    Kind kind_;
    std::int64_t exponent_;
    unsigned digits_;

    QuotientOrder(Kind k, std::int64_t e, unsigned d) : kind_(k), exponent_(e), digits_(d) {}

  public:
    static QuotientOrder finite(std::int64_t e) { return {Kind::finite, e, 0}; }
    static QuotientOrder infinite() { return {Kind::infinite, 0, 0}; }
    /// Every remaining pivot vanished at this many digits.
    static QuotientOrder indeterminate(unsigned digits) { return {Kind::indeterminate, 0, digits}; }

    Kind kind() const { return kind_; }
    bool is_finite() const { return kind_ == Kind::finite; }
    bool is_infinite() const { return kind_ == Kind::infinite; }
    bool is_indeterminate() const { return kind_ == Kind::indeterminate; }
    /// Throws DomainError unless finite.
    std::int64_t exponent() const;
    unsigned digits() const { return digits_; }

    friend bool operator==(QuotientOrder const &, QuotientOrder const &) = default;
};

std::string to_string(QuotientOrder const & q);

/// Valuation of det of a square matrix over Z/p^N (residues, row-major),
/// by elimination with full pivoting on minimal valuation.
QuotientOrder determinant_valuation(std::vector<std::vector<mpz_class>> matrix, unsigned p, unsigned digits);

/* Index of the ideal (f, g) in Lambda for distinguished f: the valuation of
 * the determinant of multiplication by g on Lambda/(f) in the basis
 * {1, T, ..., T^(deg f - 1)}. Never returns infinite; a determinant that
 * vanishes at this precision gives indeterminate.
 */
QuotientOrder ideal_index(LambdaPoly const & f, LambdaPoly const & g);

/// Exponent of #Lambda/(p^j, nu_n) = j (p^n - 1).
std::int64_t quotient_order_pj_nu(unsigned p, unsigned j, unsigned n);

/// Human-readable form using balanced representatives, e.g. "T^2 - 3T + 3".
std::string to_string(LambdaPoly const & f);

/// Parse "T^2+3T+3", "T^3 + 4*T^2 - 6T + 4", "5" ... over Z/p^N.
/// Throws ParseError on malformed input.
LambdaPoly parse_poly(unsigned p, unsigned digits, std::string_view text);

} // namespace iwasawa

#endif /* IWASAWA_LAMBDA_RING_HPP */
