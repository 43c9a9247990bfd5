#ifndef IWASAWA_PADIC_HPP
#define IWASAWA_PADIC_HPP

#include <cstdint>
#include <iosfwd>
#include <variant>

#include <gmpxx.h>

namespace iwasawa {

/// Working precision (number of p-adic digits) used when nothing else is
/// requested.
inline constexpr unsigned default_precision = 64;

/// Upper limit for precision doubling when a determinant vanishes.
inline constexpr unsigned max_precision = 4096;

bool is_prime(std::uint64_t n);

/// p^k as a big integer.
mpz_class prime_power(unsigned p, unsigned k);

/// Exact p-adic valuation of a nonzero integer.
long integer_valuation(mpz_class const & v, unsigned p);

/// base^exp on machine integers; throws DomainError on overflow.
std::int64_t int_pow(std::int64_t base, unsigned exp);

/// The valuation of a zero residue: the true valuation is only known to be
/// at least the precision.
struct AtLeastPrecision {
    unsigned digits;
    friend bool operator==(AtLeastPrecision, AtLeastPrecision) = default;
};

using Valuation = std::variant<long, AtLeastPrecision>;

/* An element of Z/p^N standing for a p-adic integer known to N digits.
 * The residue is always kept in [0, p^N).
 */
class PadicScalar {
    unsigned p_;
    unsigned digits_;
    mpz_class modulus_;
    mpz_class residue_;

    PadicScalar(unsigned p, unsigned digits, mpz_class modulus, mpz_class residue)
        : p_(p), digits_(digits), modulus_(std::move(modulus)), residue_(std::move(residue)) {}

  public:
    /// Reduces an arbitrary integer (negative values included) mod p^N.
    PadicScalar(unsigned p, unsigned digits, mpz_class const & value);
    PadicScalar(unsigned p, unsigned digits, long value)
        : PadicScalar(p, digits, mpz_class(value)) {}

    static PadicScalar zero(unsigned p, unsigned digits) { return {p, digits, 0L}; }
    static PadicScalar one(unsigned p, unsigned digits) { return {p, digits, 1L}; }

    unsigned prime() const { return p_; }
    unsigned precision() const { return digits_; }
    mpz_class const & residue() const { return residue_; }
    mpz_class const & modulus() const { return modulus_; }

    /// Representative in (-p^N/2, p^N/2].
    mpz_class balanced() const;

    bool is_zero() const { return residue_ == 0; }

    /// Reduce to fewer digits, or lift to more digits through the balanced
    /// representative (so that small negative integers stay small).
    PadicScalar with_precision(unsigned digits) const;

    bool same_ring(PadicScalar const & o) const { return p_ == o.p_ && digits_ == o.digits_; }

    friend bool operator==(PadicScalar const & a, PadicScalar const & b) {
        return a.same_ring(b) && a.residue_ == b.residue_;
    }

    friend PadicScalar add(PadicScalar const & x, PadicScalar const & y);
    friend PadicScalar sub(PadicScalar const & x, PadicScalar const & y);
    friend PadicScalar mul(PadicScalar const & x, PadicScalar const & y);
    friend PadicScalar neg(PadicScalar const & x);
};

PadicScalar add(PadicScalar const & x, PadicScalar const & y);
PadicScalar sub(PadicScalar const & x, PadicScalar const & y);
PadicScalar mul(PadicScalar const & x, PadicScalar const & y);
PadicScalar neg(PadicScalar const & x);

inline PadicScalar operator+(PadicScalar const & x, PadicScalar const & y) { return add(x, y); }
inline PadicScalar operator-(PadicScalar const & x, PadicScalar const & y) { return sub(x, y); }
inline PadicScalar operator*(PadicScalar const & x, PadicScalar const & y) { return mul(x, y); }
inline PadicScalar operator-(PadicScalar const & x) { return neg(x); }

Valuation valuation(PadicScalar const & x);

bool is_unit(PadicScalar const & x);

/// Inverse of a unit; throws NotAUnit when p divides the residue.
PadicScalar invert(PadicScalar const & x);

std::ostream & operator<<(std::ostream & os, PadicScalar const & x);

} // namespace iwasawa

#endif /* IWASAWA_PADIC_HPP */
