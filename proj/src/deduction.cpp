#include "iwasawa/deduction.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "iwasawa/elem_module.hpp"
#include "iwasawa/errors.hpp"
#include "iwasawa/padic.hpp"

namespace iwasawa {

bool LambdaConstraint::allows(std::int64_t lambda) const
{
    if (lambda < 0)
        return false;
    if (value)
        return lambda == *value;
    if (lambda % modulus != 0)
        return false;
    if (max && lambda > *max)
        return false;
    return std::find(excluded.begin(), excluded.end(), lambda) == excluded.end();
}

std::int64_t mu_upper(std::vector<std::int64_t> const & e, unsigned p)
{
    if (e.size() < 2)
        throw ValidationError("mu_upper needs at least two levels");
    for (std::size_t n = 1; n < e.size(); ++n)
        if (e[n] < e[n - 1])
            throw ValidationError("e_" + std::to_string(n) + " < e_" + std::to_string(n - 1) +
                                  ": class numbers in the tower cannot shrink");
    std::int64_t best = -1;
    for (std::size_t n = 1; n < e.size(); ++n) {
        std::int64_t q = (e[n] - e[0]) / (int_pow(p, static_cast<unsigned>(n)) - 1);
        if (best < 0 || q < best)
            best = q;
    }
    return best;
}

std::vector<std::int64_t> residuals(std::vector<std::int64_t> const & e, unsigned p, std::int64_t mu)
{
    std::vector<std::int64_t> r;
    for (std::size_t n = 0; n < e.size(); ++n)
        r.push_back(e[n] - e[0] - mu * (int_pow(p, static_cast<unsigned>(n)) - 1));
    return r;
}

std::int64_t predict_e(std::int64_t mu, std::int64_t lambda, std::int64_t nu, unsigned p, unsigned n)
{
    return mu * int_pow(p, n) + lambda * static_cast<std::int64_t>(n) + nu;
}

namespace {

std::string join(std::vector<std::int64_t> const & v)
{
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < v.size(); ++i)
        os << (i ? "," : "") << v[i];
    os << ']';
    return os.str();
}

bool admissible(std::vector<std::int64_t> const & r)
{
    for (std::size_t n = 0; n < r.size(); ++n) {
        if (r[n] < 0)
            return false;
        if (n > 0 && r[n] < r[n - 1])
            return false;
    }
    return true;
}

class Engine {
    ExampleRecord const & rec_;
    unsigned p_;
    std::vector<std::int64_t> e_;
    DeductionResult out_;

    void note(std::string rule, std::string theorem, std::string consequence)
    {
        out_.trace.push_back({std::move(rule), std::move(theorem), std::move(consequence)});
    }

  public:
    explicit Engine(ExampleRecord const & rec) : rec_(rec), p_(rec.p), e_(rec.e_sequence()) {}

    DeductionResult run();

  private:
    void flag_constraints();
    // The rules below run only once mu is pinned down.
    bool r6(std::int64_t mu, std::vector<std::int64_t> const & r);
    void r7(std::vector<std::int64_t> const & r);
    bool r8(std::int64_t mu, std::vector<std::int64_t> const & r);
    void r9(std::int64_t mu, std::vector<std::int64_t> const & r);
};

void Engine::flag_constraints()
{
    if (rec_.flags.single_ramified_prime) {
        out_.lambda.modulus = std::lcm<std::int64_t>(out_.lambda.modulus, 2);
        note("R3", "lambda parity theorem", "a single prime ramifies, so lambda is even");
    } else {
        note("R3", "lambda parity theorem", "skipped: more than one prime ramifies");
    }
    if (rec_.flags.p_nmid_class_number_k0) {
        out_.lambda.modulus = std::lcm<std::int64_t>(out_.lambda.modulus, static_cast<std::int64_t>(p_) - 1);
        note("R4", "lambda divisibility theorem", "p does not divide h(k_0), so (p-1) | lambda");
    } else {
        note("R4", "lambda divisibility theorem", "skipped: p may divide h(k_0)");
    }
}

bool Engine::r6(std::int64_t mu, std::vector<std::int64_t> const & r)
{
    if (r[1] != 0) {
        note("R6", "vanishing lemma", "R_1 = " + std::to_string(r[1]) + " > 0, so F_1 or E_2 is nonzero");
        return false;
    }
    for (std::size_t n = 2; n < r.size(); ++n)
        if (r[n] != 0)
            throw InconsistentInput(rec_.label + ": R_1 = 0 forces every later residual to vanish, but R_" +
                                    std::to_string(n) + " = " + std::to_string(r[n]));
    out_.lambda = LambdaConstraint{0, out_.lambda.modulus, 0, {}};
    out_.nu = {NuValue::Kind::exact, e_[0] - mu};
    note("R6", "vanishing lemma",
         "R_1 = 0 gives F_1 = E_2 = 0, hence lambda = 0 and nu = e_0 - mu = " + std::to_string(out_.nu.value));
    note("note", "exact from level 0", "the formula e_n = mu p^n + nu is taken to hold from n = 0");
    return true;
}

void Engine::r7(std::vector<std::int64_t> const & r)
{
    // Bounds are available at n = 1 for every p and at n = 2 for p = 2.
    // They are constant once lambda >= max(p-1, 3).
    std::vector<unsigned> levels{1};
    if (p_ == 2 && r.size() > 2)
        levels.push_back(2);
    auto survives = [&](std::int64_t lambda) {
        for (unsigned n : levels)
            if (lambdathm_lower_bound(p_, lambda, n) > r[n])
                return false;
        return true;
    };

    std::int64_t const m = out_.lambda.modulus;
    std::int64_t const tail = std::max<std::int64_t>(static_cast<std::int64_t>(p_) - 1, 3);
    std::int64_t const top = tail + m;
    std::vector<std::int64_t> allowed, cut;
    for (std::int64_t l = 0; l <= top; l += m)
        (survives(l) ? allowed : cut).push_back(l);

    std::string where = levels.size() == 2 ? "R_1 = " + std::to_string(r[1]) + ", R_2 = " + std::to_string(r[2])
                                           : "R_1 = " + std::to_string(r[1]);
    if (levels.size() == 2)
        note("note", "derived-not-quoted", "the n = 2 bound for lambda = 1 (exponent 2) is derived, not quoted");
    if (cut.empty()) {
        note("R7", "quotient lower bound", "no lambda eliminated by " + where);
        return;
    }
    std::string what;
    if (!survives(top)) {
        if (allowed.empty())
            throw InconsistentInput(rec_.label + ": every lambda exceeds the residual bound");
        out_.lambda.max = allowed.back();
        std::erase_if(cut, [&](std::int64_t l) { return l > allowed.back(); });
        if (allowed.size() == 1)
            out_.lambda.value = allowed.front();
        what = "lambda > " + std::to_string(allowed.back());
        if (!cut.empty())
            what += " and lambda in " + join(cut);
    } else {
        what = "lambda in " + join(cut);
    }
    out_.lambda.excluded = cut;
    what += " eliminated by " + where;
    if (out_.lambda.value)
        what += "; lambda = " + std::to_string(*out_.lambda.value);
    else if (out_.lambda.max)
        what += "; lambda <= " + std::to_string(*out_.lambda.max);
    note("R7", "quotient lower bound", what);
}

bool Engine::r8(std::int64_t mu, std::vector<std::int64_t> const & r)
{
    if (!rec_.flags.totally_ramified) {
        note("R8", "stabilization", "skipped: the tower is not known to be totally ramified");
        return false;
    }
    std::size_t n = 1;
    while (n + 1 < r.size() && r[n] != r[n + 1])
        ++n;
    if (n + 1 >= r.size()) {
        note("R8", "stabilization", "residuals never repeat at consecutive levels");
        return false;
    }
    for (std::size_t m = n + 2; m < r.size(); ++m)
        if (r[m] != r[n])
            throw InconsistentInput(rec_.label + ": residuals stabilize at level " + std::to_string(n) +
                                    " but R_" + std::to_string(m) + " = " + std::to_string(r[m]));
    if (!out_.lambda.allows(0))
        throw InconsistentInput(rec_.label + ": stabilization forces lambda = 0, which is excluded");
    out_.lambda = LambdaConstraint{0, out_.lambda.modulus, 0, {}};
    out_.nu = {NuValue::Kind::exact, e_[0] - mu + r[n]};
    note("R8", "stabilization",
         "R_" + std::to_string(n) + " = R_" + std::to_string(n + 1) + " = " + std::to_string(r[n]) +
             ", so lambda = 0 and nu = e_0 - mu + R_" + std::to_string(n) + " = " + std::to_string(out_.nu.value));
    for (std::size_t m = 0; m < n; ++m)
        if (r[m] != r[n])
            out_.asymptotic_levels.push_back(static_cast<std::int64_t>(m));
    if (!out_.asymptotic_levels.empty())
        note("note", "asymptotic only",
             "levels " + join(out_.asymptotic_levels) + " precede stabilization and are not reproduced");
    return true;
}

void Engine::r9(std::int64_t mu, std::vector<std::int64_t> const & r)
{
    if (!out_.lambda.exact() || *out_.lambda.value != 0) {
        note("R9", "nu lower bound", "skipped: lambda is not forced to 0");
        return;
    }
    std::int64_t top = *std::max_element(r.begin(), r.end());
    out_.nu = {NuValue::Kind::lower_bound, e_[0] - mu + top};
    note("R9", "nu lower bound",
         "lambda = 0 and the residual reaches " + std::to_string(top) + ", which may still grow; nu >= " +
             std::to_string(out_.nu.value));
}

DeductionResult Engine::run()
{
    if (e_.size() < 2)
        throw ValidationError(rec_.label + ": deduction needs at least two levels");

    std::int64_t lo = std::max<std::int64_t>(rec_.s - 1, 0);
    note("R1", "inert prime bound", "s = " + std::to_string(rec_.s) + ", so mu >= " + std::to_string(lo));

    std::int64_t hi = mu_upper(e_, p_);
    note("R2", "growth bound", "e = " + join(e_) + ", so mu <= " + std::to_string(hi));
    if (lo > hi)
        throw InconsistentInput(rec_.label + ": mu >= " + std::to_string(lo) + " contradicts mu <= " +
                                std::to_string(hi));

    flag_constraints();

    std::vector<std::int64_t> surviving;
    for (std::int64_t mu = lo; mu <= hi; ++mu) {
        auto r = residuals(e_, p_, mu);
        bool ok = admissible(r);
        out_.residuals.push_back({mu, r, ok});
        if (ok)
            surviving.push_back(mu);
        else
            note("R5", "monotone quotient lemma",
                 "mu = " + std::to_string(mu) + " eliminated: residuals " + join(r) +
                     " are negative or decreasing");
    }
    if (surviving.empty())
        throw InconsistentInput(rec_.label + ": no mu in [" + std::to_string(lo) + "," + std::to_string(hi) +
                                "] has admissible residuals");
    // Surviving candidates form an initial segment of [lo, hi].
    out_.mu_min = surviving.front();
    out_.mu_max = surviving.back();

    if (!out_.mu_exact()) {
        note("R5", "monotone quotient lemma",
             "mu in [" + std::to_string(out_.mu_min) + "," + std::to_string(out_.mu_max) +
                 "]; lambda and nu use flag constraints only");
        return std::move(out_);
    }

    std::int64_t mu = out_.mu_min;
    auto r = residuals(e_, p_, mu);
    note("R5", "monotone quotient lemma", "mu = " + std::to_string(mu) + " with residuals " + join(r));

    if (r6(mu, r))
        return std::move(out_);
    r7(r);
    if (r8(mu, r))
        return std::move(out_);
    r9(mu, r);
    return std::move(out_);
}

} // namespace

DeductionResult deduce(ExampleRecord const & rec)
{
    return Engine(rec).run();
}

std::vector<LevelVerdict> consistency_check(ExampleRecord const & rec, std::int64_t mu, std::int64_t lambda,
                                            std::int64_t nu)
{
    std::vector<LevelVerdict> out;
    auto e = rec.e_sequence();
    for (unsigned n = 0; n < e.size(); ++n) {
        std::int64_t pred = predict_e(mu, lambda, nu, rec.p, n);
        out.push_back({n, e[n], pred, pred == e[n]});
    }
    return out;
}

std::vector<LevelVerdict> consistency_check(ExampleRecord const & rec, DeductionResult const & result)
{
    if (!result.fully_exact())
        throw DomainError(rec.label + ": consistency check needs exact mu, lambda and nu");
    return consistency_check(rec, result.mu_min, *result.lambda.value, result.nu.value);
}

std::vector<HRatio> h_ratio_checks(ExampleRecord const & rec, DeductionResult const & result)
{
    std::vector<HRatio> out;
    if (!rec.aux)
        return out;
    auto e = rec.e_sequence();
    auto const & h = rec.aux->h_primes;
    for (unsigned n = 0; n < h.size(); ++n) {
        if (!h[n])
            continue;
        if (n < e.size()) {
            out.push_back({n, check_h_ratio(e[n], *h[n], rec.p), false});
            continue;
        }
        if (!result.mu_exact() || result.nu.kind == NuValue::Kind::unknown)
            continue;
        std::int64_t lambda_min = result.lambda.value.value_or(0);
        std::int64_t bound = predict_e(result.mu_min, lambda_min, result.nu.value, rec.p, n);
        // An exact triple predicts e_n itself; a bound on nu only bounds it.
        bool is_bound = !result.fully_exact();
        out.push_back({n, check_h_ratio(bound, *h[n], rec.p), is_bound});
    }
    return out;
}

} // namespace iwasawa
