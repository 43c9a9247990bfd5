#include "iwasawa/lambda_ring.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <sstream>
#include <utility>

#include "iwasawa/errors.hpp"

namespace iwasawa {

namespace {

void check_ring(LambdaPoly const & a, LambdaPoly const & b)
{
    if (!a.same_ring(b))
        throw StructuralError("polynomials over different coefficient rings");
}

void reduce(mpz_class & v, mpz_class const & modulus)
{
    mpz_fdiv_r(v.get_mpz_t(), v.get_mpz_t(), modulus.get_mpz_t());
}

// p^n as a degree bound for omega_n; refuse anything that cannot be stored.
std::size_t level_degree(unsigned p, unsigned n)
{
    std::int64_t m = int_pow(p, n);
    if (m > (std::int64_t{1} << 26))
        throw DomainError("level too large for an explicit polynomial: " + std::to_string(p) + "^" +
                          std::to_string(n));
    return static_cast<std::size_t>(m);
}

} // namespace

LambdaPoly::LambdaPoly(unsigned p, unsigned digits)
    : p_(p), digits_(digits)
{
    modulus_ = PadicScalar::one(p, digits).modulus();
}

LambdaPoly::LambdaPoly(unsigned p, unsigned digits, std::vector<mpz_class> coeffs)
    : LambdaPoly(p, digits)
{
    coeffs_ = std::move(coeffs);
    for (auto & c : coeffs_)
        reduce(c, modulus_);
    trim();
}

LambdaPoly::LambdaPoly(unsigned p, unsigned digits, std::initializer_list<long> coeffs)
    : LambdaPoly(p, digits)
{
    for (long c : coeffs)
        coeffs_.emplace_back(c);
    for (auto & c : coeffs_)
        reduce(c, modulus_);
    trim();
}

LambdaPoly LambdaPoly::from_scalars(std::span<PadicScalar const> coeffs)
{
    if (coeffs.empty())
        throw StructuralError("from_scalars needs at least one coefficient to fix the ring");
    LambdaPoly r(coeffs[0].prime(), coeffs[0].precision());
    for (auto const & c : coeffs) {
        if (!c.same_ring(coeffs[0]))
            throw StructuralError("coefficients from different rings");
        r.coeffs_.push_back(c.residue());
    }
    r.trim();
    return r;
}

LambdaPoly LambdaPoly::constant(PadicScalar const & c)
{
    return from_scalars(std::span<PadicScalar const>(&c, 1));
}

LambdaPoly LambdaPoly::monomial(unsigned p, unsigned digits, std::size_t k, long c)
{
    std::vector<mpz_class> v(k + 1);
    v[k] = c;
    return {p, digits, std::move(v)};
}

void LambdaPoly::trim()
{
    while (!coeffs_.empty() && coeffs_.back() == 0)
        coeffs_.pop_back();
}

std::optional<std::size_t> LambdaPoly::degree() const
{
    if (coeffs_.empty())
        return std::nullopt;
    return coeffs_.size() - 1;
}

PadicScalar LambdaPoly::coeff(std::size_t k) const
{
    return {p_, digits_, k < coeffs_.size() ? coeffs_[k] : mpz_class(0)};
}

LambdaPoly LambdaPoly::with_precision(unsigned digits) const
{
    if (digits == digits_)
        return *this;
    std::vector<mpz_class> v;
    v.reserve(coeffs_.size());
    for (std::size_t k = 0; k < coeffs_.size(); ++k)
        v.push_back(digits > digits_ ? coeff(k).balanced() : coeffs_[k]);
    return {p_, digits, std::move(v)};
}

LambdaPoly operator+(LambdaPoly const & a, LambdaPoly const & b)
{
    check_ring(a, b);
    LambdaPoly r = a;
    r.coeffs_.resize(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t k = 0; k < b.coeffs_.size(); ++k) {
        r.coeffs_[k] += b.coeffs_[k];
        if (r.coeffs_[k] >= r.modulus_)
            r.coeffs_[k] -= r.modulus_;
    }
    r.trim();
    return r;
}

LambdaPoly operator-(LambdaPoly const & a, LambdaPoly const & b)
{
    check_ring(a, b);
    LambdaPoly r = a;
    r.coeffs_.resize(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t k = 0; k < b.coeffs_.size(); ++k) {
        r.coeffs_[k] -= b.coeffs_[k];
        if (r.coeffs_[k] < 0)
            r.coeffs_[k] += r.modulus_;
    }
    r.trim();
    return r;
}

LambdaPoly operator*(LambdaPoly const & a, LambdaPoly const & b)
{
    check_ring(a, b);
    LambdaPoly r(a.p_, a.digits_);
    if (a.is_zero() || b.is_zero())
        return r;
    r.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0)
            continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    for (auto & c : r.coeffs_)
        reduce(c, r.modulus_);
    r.trim();
    return r;
}

LambdaPoly operator*(PadicScalar const & c, LambdaPoly const & a)
{
    if (c.prime() != a.p_ || c.precision() != a.digits_)
        throw StructuralError("scalar and polynomial over different rings");
    LambdaPoly r = a;
    for (auto & x : r.coeffs_) {
        x *= c.residue();
        reduce(x, r.modulus_);
    }
    r.trim();
    return r;
}

LambdaPoly shift(LambdaPoly const & a, std::size_t k)
{
    LambdaPoly r = a;
    if (!r.is_zero())
        r.coeffs_.insert(r.coeffs_.begin(), k, mpz_class(0));
    return r;
}

LambdaPoly omega(unsigned p, unsigned digits, unsigned n)
{
    std::size_t m = level_degree(p, n);
    std::vector<mpz_class> v(m + 1);
    for (std::size_t k = 1; k <= m; ++k)
        mpz_bin_uiui(v[k].get_mpz_t(), m, k);
    return {p, digits, std::move(v)};
}

LambdaPoly nu(unsigned p, unsigned digits, unsigned n)
{
    std::size_t m = level_degree(p, n);
    std::vector<mpz_class> v(m);
    for (std::size_t k = 0; k < m; ++k)
        mpz_bin_uiui(v[k].get_mpz_t(), m, k + 1);
    return {p, digits, std::move(v)};
}

LambdaPoly cyclotomic_factor(unsigned p, unsigned digits, unsigned k)
{
    if (k == 0)
        throw DomainError("cyclotomic factor index starts at 1");
    auto [q, r] = weierstrass_divide(nu(p, digits, k), nu(p, digits, k - 1));
    return q;
}

bool is_distinguished(LambdaPoly const & f)
{
    if (f.is_zero())
        throw StructuralError("is_distinguished: zero polynomial");
    auto const & c = f.residues();
    if (c.back() != 1)
        return false;
    for (std::size_t k = 0; k + 1 < c.size(); ++k)
        if (mpz_divisible_ui_p(c[k].get_mpz_t(), f.prime()) == 0)
            return false;
    return true;
}

Division weierstrass_divide(LambdaPoly const & f, LambdaPoly const & d)
{
    check_ring(f, d);
    if (d.is_zero() || !is_distinguished(d))
        throw DomainError("divisor " + to_string(d) + " is not distinguished");
    std::size_t dd = *d.degree();
    unsigned p = f.prime(), digits = f.precision();
    auto const & dc = d.residues();
    mpz_class const & modulus = f.modulus();

    std::vector<mpz_class> rem = f.residues();
    if (rem.size() <= dd)
        return {LambdaPoly(p, digits), f};

    std::vector<mpz_class> quo(rem.size() - dd);
    for (std::size_t i = rem.size(); i-- > dd;) {
        mpz_class c = rem[i];
        if (c == 0)
            continue;
        quo[i - dd] = c;
        for (std::size_t j = 0; j <= dd; ++j) {
            rem[i - dd + j] -= c * dc[j];
            reduce(rem[i - dd + j], modulus);
        }
    }
    rem.resize(dd);
    return {LambdaPoly(p, digits, std::move(quo)), LambdaPoly(p, digits, std::move(rem))};
}

std::int64_t QuotientOrder::exponent() const
{
    if (kind_ != Kind::finite)
        throw DomainError("quotient order is " + to_string(*this) + ", not finite");
    return exponent_;
}

std::string to_string(QuotientOrder const & q)
{
    switch (q.kind()) {
    case QuotientOrder::Kind::finite:
        return std::to_string(q.exponent());
    case QuotientOrder::Kind::infinite:
        return "infinite";
    case QuotientOrder::Kind::indeterminate:
        return "indeterminate at " + std::to_string(q.digits()) + " digits";
    }
    return {};
}

QuotientOrder determinant_valuation(std::vector<std::vector<mpz_class>> m, unsigned p, unsigned digits)
{
    std::size_t const n = m.size();
    mpz_class const modulus = prime_power(p, digits);
    mpz_class const pz(p);
    std::int64_t total = 0;

    for (std::size_t k = 0; k < n; ++k) {
        // Full pivoting: the entry of least valuation in the trailing block.
        long best = std::numeric_limits<long>::max();
        std::size_t pi = 0, pj = 0;
        for (std::size_t i = k; i < n; ++i) {
            for (std::size_t j = k; j < n; ++j) {
                if (m[i][j] == 0)
                    continue;
                long v = integer_valuation(m[i][j], p);
                if (v < best) {
                    best = v;
                    pi = i;
                    pj = j;
                }
            }
        }
        if (best == std::numeric_limits<long>::max())
            return QuotientOrder::indeterminate(digits);
        total += best;
        std::swap(m[k], m[pi]);
        for (auto & row : m)
            std::swap(row[k], row[pj]);

        mpz_class const pk = prime_power(p, static_cast<unsigned>(best));
        mpz_class unit;
        mpz_divexact(unit.get_mpz_t(), m[k][k].get_mpz_t(), pk.get_mpz_t());
        mpz_class inv;
        mpz_invert(inv.get_mpz_t(), unit.get_mpz_t(), modulus.get_mpz_t());

        // Every entry below has valuation >= best, so the division by p^best
        // is exact and the update stays correct mod p^N.
        for (std::size_t i = k + 1; i < n; ++i) {
            if (m[i][k] == 0)
                continue;
            mpz_class factor;
            mpz_divexact(factor.get_mpz_t(), m[i][k].get_mpz_t(), pk.get_mpz_t());
            factor *= inv;
            reduce(factor, modulus);
            for (std::size_t j = k; j < n; ++j) {
                m[i][j] -= factor * m[k][j];
                reduce(m[i][j], modulus);
            }
        }
    }
    return QuotientOrder::finite(total);
}

QuotientOrder ideal_index(LambdaPoly const & f, LambdaPoly const & g)
{
    check_ring(f, g);
    if (f.is_zero() || !is_distinguished(f))
        throw DomainError("ideal_index: " + to_string(f) + " is not distinguished");
    std::size_t const d = *f.degree();
    if (d == 0)
        return QuotientOrder::finite(0);

    // Column k is g * T^k reduced mod f.
    std::vector<std::vector<mpz_class>> m(d, std::vector<mpz_class>(d));
    LambdaPoly col = weierstrass_divide(g, f).remainder;
    for (std::size_t k = 0; k < d; ++k) {
        auto const & r = col.residues();
        for (std::size_t i = 0; i < r.size(); ++i)
            m[i][k] = r[i];
        if (k + 1 < d)
            col = weierstrass_divide(shift(col, 1), f).remainder;
    }
    return determinant_valuation(std::move(m), f.prime(), f.precision());
}

std::int64_t quotient_order_pj_nu(unsigned p, unsigned j, unsigned n)
{
    if (j == 0)
        throw DomainError("quotient_order_pj_nu needs j >= 1");
    std::int64_t r;
    if (__builtin_mul_overflow(static_cast<std::int64_t>(j), int_pow(p, n) - 1, &r))
        throw DomainError("exponent overflow");
    return r;
}

std::string to_string(LambdaPoly const & f)
{
    if (f.is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = f.residues().size(); k-- > 0;) {
        if (f.residues()[k] == 0)
            continue;
        mpz_class c = f.coeff(k).balanced();
        bool negative = c < 0;
        mpz_class mag = abs(c);
        if (first)
            os << (negative ? "-" : "");
        else
            os << (negative ? " - " : " + ");
        first = false;
        if (k == 0 || mag != 1)
            os << mag.get_str();
        if (k >= 1)
            os << 'T';
        if (k >= 2)
            os << '^' << k;
    }
    return os.str();
}

LambdaPoly parse_poly(unsigned p, unsigned digits, std::string_view text)
{
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch)))
            s.push_back(ch);
    if (s.empty())
        throw ParseError("poly", "empty polynomial");

    std::vector<mpz_class> coeffs;
    std::size_t i = 0;
    auto fail = [&](std::string const & why) -> void {
        throw ParseError("poly", why + " in '" + std::string(text) + "'");
    };
    auto read_digits = [&](std::string & out) {
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
            out.push_back(s[i++]);
    };

    while (i < s.size()) {
        int sign = 1;
        if (s[i] == '+' || s[i] == '-') {
            sign = s[i] == '-' ? -1 : 1;
            ++i;
        } else if (i != 0) {
            fail("expected '+' or '-'");
        }
        std::string num;
        read_digits(num);
        bool has_t = false;
        std::size_t power = 0;
        if (i < s.size() && s[i] == '*') {
            if (num.empty())
                fail("dangling '*'");
            ++i;
            if (i >= s.size() || s[i] != 'T')
                fail("expected 'T' after '*'");
        }
        if (i < s.size() && s[i] == 'T') {
            has_t = true;
            power = 1;
            ++i;
            if (i < s.size() && s[i] == '^') {
                ++i;
                std::string e;
                read_digits(e);
                if (e.empty())
                    fail("missing exponent");
                if (e.size() > 6)
                    fail("exponent too large");
                power = std::stoul(e);
            }
        }
        if (num.empty() && !has_t)
            fail("empty term");
        mpz_class c = num.empty() ? mpz_class(1) : mpz_class(num);
        if (coeffs.size() <= power)
            coeffs.resize(power + 1);
        coeffs[power] += sign * c;
    }
    return {p, digits, std::move(coeffs)};
}

} // namespace iwasawa
