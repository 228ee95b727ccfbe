#include <gtest/gtest.h>

#include "ybe/reductions.hpp"

using namespace ybe;

namespace ybe {
// readable parameter names in test listings
void PrintTo(LimitKind k, std::ostream* os) { *os << to_string(k); }
}  // namespace ybe

class Converges : public ::testing::TestWithParam<LimitKind> {};

TEST_P(Converges, DefaultExperiment)
{
    ConvergenceTable t = run_limit(default_experiment(GetParam()));
    EXPECT_TRUE(t.monotone);
    EXPECT_TRUE(t.converged) << "final " << t.final_deviation << " threshold " << t.threshold;
    EXPECT_EQ(t.orders.size() + 1, t.rows.size());
}

INSTANTIATE_TEST_SUITE_P(Kinds, Converges,
                         ::testing::Values(LimitKind::omega2_to_inf, LimitKind::q_to_one, LimitKind::r_to_inf,
                                           LimitKind::asymptotic_behaviour),
                         [](const auto& info) { return to_string(info.param); });

TEST(Reductions, Thresholds)
{
    EXPECT_EQ(default_experiment(LimitKind::omega2_to_inf).threshold, 1e-4);
    EXPECT_EQ(default_experiment(LimitKind::q_to_one).threshold, 1e-4);
    EXPECT_EQ(default_experiment(LimitKind::r_to_inf).threshold, 1e-3);
    EXPECT_EQ(default_experiment(LimitKind::asymptotic_behaviour).threshold, 1e-6);
}

TEST(Reductions, RLimitSectorAndSlope)
{
    LimitExperiment e = default_experiment(LimitKind::r_to_inf);
    e.m = 1;
    ConvergenceTable t = run_limit(e);
    EXPECT_TRUE(t.converged);
    EXPECT_NEAR(t.slope, t.expected_slope, 0.05);
}

TEST(Reductions, PrintedRPrefactorLeavesOffset)
{
    LimitExperiment e = default_experiment(LimitKind::r_to_inf);
    e.printed_prefactor = true;
    ConvergenceTable t = run_limit(e);
    EXPECT_FALSE(t.converged);
    EXPECT_GT(t.final_deviation, 0.1);
}

TEST(Reductions, OtherSector)
{
    LimitExperiment e = default_experiment(LimitKind::asymptotic_behaviour);
    e.sign = -1;
    e.ray_arg = -kPi / 2;
    EXPECT_TRUE(run_limit(e).converged);
}

TEST(NegativeControl, RayInsideTheCone)
{
    ConvergenceTable t = run_limit(asymptotic_negative_control());
    EXPECT_FALSE(t.converged);
    EXPECT_FALSE(t.notes.empty());
    LimitExperiment e = asymptotic_negative_control();
    e.sign = -1;
    EXPECT_FALSE(run_limit(e).converged);
}

TEST(NegativeControl, WrongSign)
{
    LimitExperiment e = default_experiment(LimitKind::asymptotic_behaviour);
    e.sign = -1;  // ray in the + sector
    EXPECT_FALSE(run_limit(e).converged);
}

TEST(Reductions, LadderValidation)
{
    LimitExperiment e = default_experiment(LimitKind::q_to_one);
    e.ladder = {0.9, 0.99, 0.999};
    EXPECT_THROW(run_limit(e), DomainError);
    e.ladder = {0.9, 0.99, 0.98, 0.999};
    EXPECT_THROW(run_limit(e), DomainError);
    e.ladder = {0.9, 0.99, 0.999, 1.0};
    EXPECT_THROW(run_limit(e), DomainError);
    LimitExperiment r = default_experiment(LimitKind::r_to_inf);
    r.ladder = {4, 8, 16.5, 32};
    EXPECT_THROW(run_limit(r), DomainError);
}

TEST(Reductions, MonotoneHelper)
{
    EXPECT_TRUE(monotone_after_first({1e-3, 1e-2, 1e-3, 1e-4}));  // first rung exempt
    EXPECT_FALSE(monotone_after_first({1e-1, 1e-2, 1e-3, 2e-3}));
    EXPECT_TRUE(monotone_after_first({1e-1, 1e-2, 1e-14, 3e-14}));  // below the floor
    EXPECT_EQ(limit_kind_from_string("q_to_one"), LimitKind::q_to_one);
    EXPECT_THROW(limit_kind_from_string("x"), DomainError);
}
