#include <gtest/gtest.h>

#include "iwasawa/deduction.hpp"
#include "iwasawa/errors.hpp"
#include "iwasawa/padic.hpp"
#include "oracles.hpp"

using namespace iwasawa;

namespace {

struct Flags {
    bool single = false;
    bool nmid = false;
    bool total = true;
};

// Level n is encoded as (Z/p)^e_n.
ExampleRecord make(unsigned p, std::int64_t s, std::vector<std::int64_t> const & e, Flags f = {})
{
    ExampleRecord rec;
    rec.p = p;
    rec.label = "synthetic";
    rec.s = s;
    rec.flags = {f.single, f.total, f.nmid};
    for (auto k : e)
        rec.levels.emplace_back(std::vector<std::uint64_t>(static_cast<std::size_t>(k), p));
    return rec;
}

bool has_note(DeductionResult const & r, std::string const & theorem)
{
    for (auto const & t : r.trace)
        if (t.rule == "note" && t.theorem == theorem)
            return true;
    return false;
}

} // namespace

TEST(Deduction, MuUpperAndResiduals)
{
    EXPECT_EQ(mu_upper({2, 4}, 3), 1);
    EXPECT_EQ(mu_upper({6, 13}, 3), 3);
    EXPECT_EQ(mu_upper({1, 3, 6, 11}, 2), 1);
    EXPECT_EQ(mu_upper({4, 8, 17, 26}, 2), 3);
    EXPECT_EQ(mu_upper({0, 0}, 3), 0);
    EXPECT_THROW(mu_upper({3, 2}, 3), ValidationError);
    EXPECT_THROW(mu_upper({3}, 3), ValidationError);

    EXPECT_EQ(residuals({1, 3, 6, 11}, 2, 1), (std::vector<std::int64_t>{0, 1, 2, 3}));
    EXPECT_EQ(residuals({1, 3, 6, 11}, 2, 2), (std::vector<std::int64_t>{0, 0, -1, -4}));
    EXPECT_EQ(predict_e(1, 1, 0, 2, 3), 11);
    EXPECT_EQ(predict_e(2, 0, -1, 3, 2), 17);
}

TEST(Deduction, ExactFromLevelZero)
{
    // d = 22 and d = 10 at p = 3.
    auto r = deduce(make(3, 2, {2, 4}, {.single = true, .nmid = true}));
    EXPECT_EQ(r.mu_min, 1);
    EXPECT_TRUE(r.fully_exact());
    EXPECT_EQ(*r.lambda.value, 0);
    EXPECT_EQ(r.nu, (NuValue{NuValue::Kind::exact, 1}));
    EXPECT_TRUE(has_note(r, "exact from level 0"));

    auto r10 = deduce(make(3, 2, {0, 2}, {.single = true, .nmid = true}));
    EXPECT_EQ(r10.nu.value, -1);

    auto r21 = deduce(make(2, 2, {1, 2, 4}, {.single = true}));
    EXPECT_EQ(r21.mu_min, 1);
    EXPECT_EQ(*r21.lambda.value, 0);
    EXPECT_EQ(r21.nu.value, 0);
}

TEST(Deduction, LambdaBoundedAtLevelTwo)
{
    // d = 33: R_1 = 1, R_2 = 2 leaves lambda in {0, 1}.
    auto r = deduce(make(2, 2, {1, 3, 6, 11}));
    EXPECT_TRUE(r.mu_exact());
    EXPECT_EQ(r.mu_min, 1);
    EXPECT_FALSE(r.lambda.exact());
    EXPECT_EQ(r.lambda.max, 1);
    EXPECT_EQ(r.nu.kind, NuValue::Kind::unknown);
    EXPECT_TRUE(has_note(r, "derived-not-quoted"));
}

TEST(Deduction, NuLowerBound)
{
    // d = 1870 at p = 3.
    auto r = deduce(make(3, 4, {6, 13}, {.single = true, .nmid = true}));
    EXPECT_EQ(r.mu_min, 3);
    EXPECT_EQ(*r.lambda.value, 0);
    EXPECT_EQ(r.nu, (NuValue{NuValue::Kind::lower_bound, 4}));
}

TEST(Deduction, Stabilization)
{
    // q = 79 at p = 2: e = [0,2,8,8].
    auto r = deduce(make(2, 1, {0, 2, 8, 8}, {.single = true}));
    EXPECT_EQ(r.mu_min, 0);
    EXPECT_EQ(*r.lambda.value, 0);
    EXPECT_EQ(r.nu, (NuValue{NuValue::Kind::exact, 8}));
    EXPECT_EQ(r.asymptotic_levels, (std::vector<std::int64_t>{0, 1}));
    EXPECT_TRUE(has_note(r, "asymptotic only"));

    // Without total ramification R8 does not fire.
    auto r2 = deduce(make(2, 1, {0, 2, 8, 8}, {.single = true, .total = false}));
    EXPECT_EQ(r2.nu.kind, NuValue::Kind::unknown);
}

TEST(Deduction, MuRange)
{
    // d = 5 * 11 * 173 at p = 3.
    auto r = deduce(make(3, 3, {6, 14}, {.single = true, .nmid = true}));
    EXPECT_EQ(r.mu_min, 2);
    EXPECT_EQ(r.mu_max, 4);
    EXPECT_EQ(deduce(make(3, 3, {4, 15}, {.single = true, .nmid = true})).mu_max, 5);
    EXPECT_FALSE(r.mu_exact());
    EXPECT_EQ(r.lambda.modulus, 2);
    EXPECT_EQ(r.nu.kind, NuValue::Kind::unknown);
}

TEST(Deduction, R5Eliminates)
{
    // d = 3 * 11 * 19 at p = 2: mu = 3 leaves a decreasing residual.
    auto r = deduce(make(2, 3, {4, 8, 17, 26}, {.single = true}));
    EXPECT_EQ(r.mu_min, 2);
    EXPECT_EQ(r.mu_max, 2);
    ASSERT_EQ(r.residuals.size(), 2u);
    EXPECT_FALSE(r.residuals[1].survived);
    EXPECT_EQ(r.lambda.modulus, 2);
    EXPECT_EQ(r.nu.kind, NuValue::Kind::unknown);
}

TEST(Deduction, Inconsistent)
{
    EXPECT_THROW(deduce(make(3, 4, {0, 2})), InconsistentInput);
    // R_1 = 0 then R_2 > 0.
    EXPECT_THROW(deduce(make(2, 2, {1, 2, 5})), InconsistentInput);
    // Stabilized then grows again.
    EXPECT_THROW(deduce(make(2, 1, {0, 1, 1, 2})), InconsistentInput);
    // Only negative residuals.
    EXPECT_THROW(deduce(make(2, 3, {4, 6, 7})), InconsistentInput);
    EXPECT_THROW(deduce(make(3, 1, {2})), ValidationError);
}

TEST(Deduction, ConsistencyCheck)
{
    auto r21 = make(2, 2, {1, 2, 4}, {.single = true});
    for (auto const & v : consistency_check(r21, deduce(r21)))
        EXPECT_TRUE(v.match) << v.n;

    auto r33 = make(2, 2, {1, 3, 6, 11});
    for (auto const & v : consistency_check(r33, 1, 1, 0))
        EXPECT_TRUE(v.match) << v.n;
    EXPECT_THROW(consistency_check(r33, deduce(r33)), DomainError);

    // Negative control: (1, 0, 0) misses every level past 0.
    auto bad = consistency_check(r33, 1, 0, 0);
    ASSERT_EQ(bad.size(), 4u);
    EXPECT_TRUE(bad[0].match);
    for (std::size_t n = 1; n < bad.size(); ++n) {
        EXPECT_FALSE(bad[n].match);
        EXPECT_EQ(bad[n].predicted, (1 << n));
    }
}

TEST(Deduction, HRatios)
{
    auto rec = make(3, 4, {6, 13}, {.single = true, .nmid = true});
    rec.aux = AuxData{{std::nullopt, 6, 15}, true, false, ""};
    auto checks = h_ratio_checks(rec, deduce(rec));
    ASSERT_EQ(checks.size(), 2u);
    EXPECT_EQ(checks[0], (HRatio{1, 1, false}));
    // e_2 >= 27 + 4 = 31, so c >= 1.
    EXPECT_EQ(checks[1], (HRatio{2, 1, true}));
}

TEST(Deduction, Deterministic)
{
    auto rec = make(2, 3, {6, 9, 15, 27}, {.single = true});
    EXPECT_EQ(deduce(rec), deduce(rec));
}

namespace {

/* e_n = e_0 + mu (p^n - 1) + F_n with F_n = sum_i min(a_i, n): a
 * nondecreasing residual that, once flat, stays flat.
 */
std::vector<std::int64_t> model_sequence(oracle::Gen & gen, unsigned p, std::int64_t mu, std::size_t levels)
{
    std::vector<long> a(static_cast<std::size_t>(gen.range(0, 3)));
    for (auto & x : a)
        x = gen.range(0, 4);
    std::int64_t e0 = gen.range(0, 6);
    std::vector<std::int64_t> e;
    for (std::size_t n = 0; n < levels; ++n) {
        std::int64_t f = 0;
        for (long x : a)
            f += std::min<long>(x, static_cast<long>(n));
        e.push_back(e0 + mu * (int_pow(p, static_cast<unsigned>(n)) - 1) + f);
    }
    return e;
}

} // namespace

// The true mu survives R1, R2 and R5.
TEST(DeductionProperty, R5Sound)
{
    oracle::Gen gen(61);
    for (int trial = 0; trial < 500; ++trial) {
        unsigned p = gen.coin() ? 2 : 3;
        std::int64_t mu = gen.range(0, 4);
        auto e = model_sequence(gen, p, mu, static_cast<std::size_t>(gen.range(2, p == 2 ? 5 : 3)));
        auto rec = make(p, gen.range(0, mu + 1), e);
        DeductionResult r;
        ASSERT_NO_THROW(r = deduce(rec)) << trial;
        EXPECT_LE(r.mu_min, mu);
        EXPECT_GE(r.mu_max, mu);
        if (r.mu_exact() && r.lambda.exact() && r.nu.exact()) {
            // Exact answers reproduce every level at or past stabilization.
            for (auto const & v : consistency_check(rec, r)) {
                bool early = std::find(r.asymptotic_levels.begin(), r.asymptotic_levels.end(), v.n) !=
                             r.asymptotic_levels.end();
                EXPECT_EQ(v.match, !early) << trial << " n=" << v.n;
            }
        }
    }
}

// One more level never widens the mu range.
TEST(DeductionProperty, MoreLevelsNeverWiden)
{
    oracle::Gen gen(62);
    for (int trial = 0; trial < 300; ++trial) {
        unsigned p = gen.coin() ? 2 : 3;
        std::int64_t mu = gen.range(0, 3);
        auto e = model_sequence(gen, p, mu, p == 2 ? 5 : 3);
        std::int64_t s = gen.range(0, mu + 1);
        auto shorter = e;
        shorter.pop_back();
        auto full = deduce(make(p, s, e));
        auto part = deduce(make(p, s, shorter));
        EXPECT_GE(full.mu_min, part.mu_min);
        EXPECT_LE(full.mu_max, part.mu_max);
    }
}
