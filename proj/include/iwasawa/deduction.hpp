#ifndef IWASAWA_DEDUCTION_HPP
#define IWASAWA_DEDUCTION_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "iwasawa/class_data.hpp"

namespace iwasawa {

/* What is known about lambda: lambda = 0 mod `modulus`, lambda <= max when
 * max is set, and lambda not in `excluded`. `value` is set once a single
 * candidate remains.
 */
struct LambdaConstraint {
    std::optional<std::int64_t> value;
    std::int64_t modulus = 1;
    std::optional<std::int64_t> max;
    std::vector<std::int64_t> excluded;

    bool exact() const { return value.has_value(); }
    bool allows(std::int64_t lambda) const;

    friend bool operator==(LambdaConstraint const &, LambdaConstraint const &) = default;
};

struct NuValue {
    enum class Kind { exact, lower_bound, unknown };
    Kind kind = Kind::unknown;
    std::int64_t value = 0;

    bool exact() const { return kind == Kind::exact; }
    friend bool operator==(NuValue const &, NuValue const &) = default;
};

struct ResidualRow {
    std::int64_t mu;
    std::vector<std::int64_t> values;
    bool survived;
    friend bool operator==(ResidualRow const &, ResidualRow const &) = default;
};

struct TraceEntry {
    std::string rule;        // "R1" .. "R9", or "note"
    std::string theorem;
    std::string consequence;
    friend bool operator==(TraceEntry const &, TraceEntry const &) = default;
};

struct DeductionResult {
    std::int64_t mu_min = 0;
    std::int64_t mu_max = 0;
    LambdaConstraint lambda;
    NuValue nu;
    std::vector<ResidualRow> residuals;
    std::vector<TraceEntry> trace;
    /// Levels the exact formula does not reproduce; it only holds from the
    /// stabilization index on.
    std::vector<std::int64_t> asymptotic_levels;

    bool mu_exact() const { return mu_min == mu_max; }
    bool fully_exact() const { return mu_exact() && lambda.exact() && nu.exact(); }

    friend bool operator==(DeductionResult const &, DeductionResult const &) = default;
};

/// min over n >= 1 of floor((e_n - e_0) / (p^n - 1)). Needs at least two
/// entries; throws ValidationError when e decreases.
std::int64_t mu_upper(std::vector<std::int64_t> const & e, unsigned p);

/// R_n = e_n - e_0 - mu (p^n - 1), so R_0 = 0.
std::vector<std::int64_t> residuals(std::vector<std::int64_t> const & e, unsigned p, std::int64_t mu);

/// mu p^n + lambda n + nu
std::int64_t predict_e(std::int64_t mu, std::int64_t lambda, std::int64_t nu, unsigned p, unsigned n);

/// Runs rules R1..R9 on a validated record with at least two levels.
/// Throws InconsistentInput when the data admit no (mu, lambda, nu).
DeductionResult deduce(ExampleRecord const & rec);

struct LevelVerdict {
    unsigned n;
    std::int64_t observed;
    std::int64_t predicted;
    bool match;
    friend bool operator==(LevelVerdict const &, LevelVerdict const &) = default;
};

std::vector<LevelVerdict> consistency_check(ExampleRecord const & rec, std::int64_t mu, std::int64_t lambda,
                                            std::int64_t nu);
/// Throws DomainError unless the result is fully exact.
std::vector<LevelVerdict> consistency_check(ExampleRecord const & rec, DeductionResult const & result);

/* c = e(h_n) - 2 e(h_n') for every level with h_n' data. e(h_n) comes from
 * the levels when present; past them it is bounded below by
 * mu p^n + lambda_min n + nu_min, and `lower_bound` is set.
 */
struct HRatio {
    unsigned n;
    std::int64_t c;
    bool lower_bound;
    friend bool operator==(HRatio const &, HRatio const &) = default;
};

std::vector<HRatio> h_ratio_checks(ExampleRecord const & rec, DeductionResult const & result);

} // namespace iwasawa

#endif /* IWASAWA_DEDUCTION_HPP */
