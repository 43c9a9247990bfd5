#include "iwasawa/padic.hpp"

#include <ostream>
#include <string>

#include "iwasawa/errors.hpp"

namespace iwasawa {

bool is_prime(std::uint64_t n)
{
    if (n < 2)
        return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

mpz_class prime_power(unsigned p, unsigned k)
{
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), p, k);
    return r;
}

long integer_valuation(mpz_class const & v, unsigned p)
{
    if (v == 0)
        throw DomainError("valuation of zero integer");
    mpz_class q = abs(v);
    return static_cast<long>(mpz_remove(q.get_mpz_t(), q.get_mpz_t(), mpz_class(p).get_mpz_t()));
}

std::int64_t int_pow(std::int64_t base, unsigned exp)
{
    std::int64_t r = 1;
    for (unsigned i = 0; i < exp; ++i) {
        if (__builtin_mul_overflow(r, base, &r))
            throw DomainError("integer power overflows: " + std::to_string(base) + "^" + std::to_string(exp));
    }
    return r;
}

namespace {

void check_ring(PadicScalar const & x, PadicScalar const & y)
{
    if (!x.same_ring(y))
        throw StructuralError("p-adic operands live in different rings: Z/" + std::to_string(x.prime()) + "^" +
                              std::to_string(x.precision()) + " vs Z/" + std::to_string(y.prime()) + "^" +
                              std::to_string(y.precision()));
}

} // namespace

PadicScalar::PadicScalar(unsigned p, unsigned digits, mpz_class const & value)
    : p_(p), digits_(digits)
{
    if (!is_prime(p))
        throw DomainError("p-adic scalar needs a prime, got " + std::to_string(p));
    if (digits == 0)
        throw DomainError("p-adic precision must be positive");
    modulus_ = prime_power(p, digits);
    mpz_fdiv_r(residue_.get_mpz_t(), value.get_mpz_t(), modulus_.get_mpz_t());
}

mpz_class PadicScalar::balanced() const
{
    mpz_class twice = residue_ * 2;
    if (twice > modulus_)
        return residue_ - modulus_;
    return residue_;
}

PadicScalar PadicScalar::with_precision(unsigned digits) const
{
    if (digits == digits_)
        return *this;
    return {p_, digits, digits > digits_ ? balanced() : residue_};
}

PadicScalar add(PadicScalar const & x, PadicScalar const & y)
{
    check_ring(x, y);
    mpz_class r = x.residue_ + y.residue_;
    if (r >= x.modulus_)
        r -= x.modulus_;
    return {x.p_, x.digits_, x.modulus_, std::move(r)};
}

PadicScalar sub(PadicScalar const & x, PadicScalar const & y)
{
    check_ring(x, y);
    mpz_class r = x.residue_ - y.residue_;
    if (r < 0)
        r += x.modulus_;
    return {x.p_, x.digits_, x.modulus_, std::move(r)};
}

PadicScalar neg(PadicScalar const & x)
{
    mpz_class r = x.residue_ == 0 ? mpz_class(0) : mpz_class(x.modulus_ - x.residue_);
    return {x.p_, x.digits_, x.modulus_, std::move(r)};
}

PadicScalar mul(PadicScalar const & x, PadicScalar const & y)
{
    check_ring(x, y);
    mpz_class r = x.residue_ * y.residue_;
    mpz_fdiv_r(r.get_mpz_t(), r.get_mpz_t(), x.modulus_.get_mpz_t());
    return {x.p_, x.digits_, x.modulus_, std::move(r)};
}

Valuation valuation(PadicScalar const & x)
{
    if (x.is_zero())
        return AtLeastPrecision{x.precision()};
    return integer_valuation(x.residue(), x.prime());
}

bool is_unit(PadicScalar const & x)
{
    return mpz_divisible_ui_p(x.residue().get_mpz_t(), x.prime()) == 0;
}

PadicScalar invert(PadicScalar const & x)
{
    if (!is_unit(x))
        throw NotAUnit("residue " + x.residue().get_str() + " is divisible by " + std::to_string(x.prime()));
    mpz_class r;
    mpz_invert(r.get_mpz_t(), x.residue().get_mpz_t(), x.modulus().get_mpz_t());
    return {x.prime(), x.precision(), r};
}

std::ostream & operator<<(std::ostream & os, PadicScalar const & x)
{
    return os << x.residue().get_str() << " (mod " << x.prime() << "^" << x.precision() << ")";
}

} // namespace iwasawa
