#include <gtest/gtest.h>

#include "bstab/jaggedness.hpp"
#include "oracles.hpp"

using bstab::BigInteger;
using bstab::Partition;
using bstab::Rational;

namespace {
Partition P(const char* s) { return Partition::parse(s); }
Rational Q(long p, long q) { return Rational(BigInteger(p), BigInteger(q)); }

// Independent expectation: sum jaggedness over (P, i) by scanning each RPP
// cell by cell, without the library's induced_subshape or WeakEnsemble.
Rational expected_oracle(const Partition& lambda, int k) {
    std::uint64_t pairs = 0;
    std::uint64_t jag = 0;
    for (const auto& p : bstab::enumerate_rpp(lambda, k)) {
        for (int i = 1; i <= k; ++i) {
            std::vector<int> mu;
            for (int r = 1; r <= lambda.rows(); ++r) {
                int len = 0;
                while (len < lambda.part(r) && p.at({r, len + 1}) < i) ++len;
                if (len == 0) break;
                mu.push_back(len);
            }
            jag += static_cast<std::uint64_t>(bstab::jaggedness(Partition(mu), lambda));
            ++pairs;
        }
    }
    return Rational(BigInteger(static_cast<long>(jag)), BigInteger(static_cast<long>(pairs)));
}
}  // namespace

TEST(WeakEnsemble, SizeIsKTimesRppCount) {
    const bstab::WeakEnsemble q(P("2,1"), 3);
    std::uint64_t n = 0;
    q.for_each([&](const bstab::ReversePlanePartition&, int, const Partition&) { ++n; });
    EXPECT_EQ(n, q.size());
    EXPECT_EQ(q.size(), 3 * bstab::count_rpp(P("2,1"), 3));
}

TEST(WeakProbability, Examples) {
    EXPECT_EQ(bstab::weak_probability(P(""), P("1"), 1), Q(1, 2));
    EXPECT_EQ(bstab::weak_probability(P("1"), P("1"), 1), Q(1, 2));
    EXPECT_EQ(bstab::weak_probability(P("1"), P("1"), 2), Q(1, 2));
}

TEST(WeakProbability, SumsToOne) {
    for (const auto& lambda : bstab::all_subshapes(P("3,2,2"))) {
        for (int k = 1; k <= 3; ++k) {
            Rational total;
            for (const auto& mu : bstab::all_subshapes(lambda)) {
                total += bstab::weak_probability(mu, lambda, k);
            }
            EXPECT_EQ(total, Rational(1)) << lambda.to_string();
        }
    }
}

TEST(ExpectedJaggedness, Examples) {
    EXPECT_EQ(bstab::expected_jaggedness_weak(P("1"), 1), Rational(1));
    EXPECT_EQ(bstab::expected_jaggedness_weak(P("2,2,1,1"), 2), Q(8, 3));
    EXPECT_NE(bstab::expected_jaggedness_weak(P("3,1"), 1), Q(12, 5));
    EXPECT_EQ(bstab::balanced_jaggedness_formula(P("4,4,2,1")), Rational(4));
    EXPECT_EQ(bstab::render(Q(8, 3)), "8/3");
    EXPECT_EQ(bstab::render(Rational(4)), "4");
}

TEST(ExpectedJaggedness, MatchesOracleAndIgnoresThreadCount) {
    for (const auto& lambda : bstab::all_subshapes(P("3,3,2"))) {
        if (lambda.empty()) continue;
        for (int k = 1; k <= 2; ++k) {
            const Rational e = bstab::expected_jaggedness_weak(lambda, k, 1);
            EXPECT_EQ(e, expected_oracle(lambda, k)) << lambda.to_string();
            EXPECT_EQ(bstab::expected_jaggedness_weak(lambda, k, 3), e);
        }
    }
}

TEST(EnsembleTotals, ThreadedMatchesSerial) {
    const auto a = bstab::accumulate_weak_ensemble(P("4,3,1"), 2, 1);
    const auto b = bstab::accumulate_weak_ensemble(P("4,3,1"), 2, 4);
    EXPECT_EQ(a.pairs, b.pairs);
    EXPECT_EQ(a.corner_sum, b.corner_sum);
    EXPECT_EQ(a.outside_sum, b.outside_sum);
    EXPECT_EQ(a.toggle_in, b.toggle_in);
    EXPECT_EQ(a.toggle_out, b.toggle_out);
}

TEST(ToggleSymmetry, Examples) {
    const auto one = bstab::check_toggle_symmetric(P("1"), 1);
    ASSERT_EQ(one.size(), 1u);
    EXPECT_EQ(one[0].lhs, "1");
    EXPECT_EQ(one[0].rhs, "1");
    EXPECT_EQ(bstab::check_toggle_symmetric(P("2,1"), 2).size(), 3u);
    const auto big = bstab::check_toggle_symmetric(P("4,4,2,1"), 2);
    EXPECT_EQ(big.size(), 11u);
    for (const auto& r : big) EXPECT_TRUE(r.equal);
}

TEST(ToggleSymmetry, HoldsInsideFourByFour) {
    for (const auto& lambda : bstab::all_subshapes(P("4,4,4,4"))) {
        for (int k = 1; k <= 3; ++k) {
            for (const auto& r : bstab::check_toggle_symmetric(lambda, k)) {
                EXPECT_TRUE(r.equal) << lambda.to_string() << " k=" << k << " " << r.params.dump();
            }
        }
    }
}

TEST(BalancedExpectation, Examples) {
    const auto r = bstab::verify_balanced_expectation(P("2,1"), 1);
    EXPECT_TRUE(r.equal);
    EXPECT_EQ(r.rhs, "2");
    EXPECT_TRUE(bstab::verify_balanced_expectation(P("1"), 3).equal);
    const auto s = bstab::verify_balanced_expectation(P("4,4,2,1"), 2);
    EXPECT_TRUE(s.equal);
    EXPECT_EQ(s.rhs, "4");
    EXPECT_THROW(bstab::verify_balanced_expectation(P("3,1"), 1), bstab::PreconditionError);
    EXPECT_THROW(bstab::verify_weak_mean_by_subshape(P("3,1"), 1), bstab::PreconditionError);
    EXPECT_TRUE(bstab::all_equal(bstab::verify_weak_mean_by_subshape(P("2,2,1,1"), 2)));
}

TEST(CountIdentity, Examples) {
    EXPECT_TRUE(bstab::all_equal(bstab::verify_count_identity(P("1"), 3)));
    EXPECT_TRUE(bstab::all_equal(bstab::verify_count_identity(P("2,1"), 1)));
    EXPECT_TRUE(bstab::all_equal(bstab::verify_count_identity(P("2,2,1,1"), 1)));
    EXPECT_EQ(bstab::count_bssyt(P("2,2,1,1"), 1) * 3, bstab::count_ssyt(P("2,2,1,1"), 1) * 4);
    EXPECT_THROW(bstab::verify_count_identity(P("3,1"), 1), bstab::PreconditionError);
}

TEST(Conjecture, Examples) {
    const auto a = bstab::verify_conjecture_rect(1, 1, 3, 1);
    EXPECT_TRUE(a.equal);
    EXPECT_EQ(a.lhs, "5");
    EXPECT_EQ(bstab::count_ssyt(P("2"), 1), 3u);
    EXPECT_EQ(bstab::count_bssyt(P("2"), 1), 2u);
    EXPECT_TRUE(bstab::verify_conjecture_rect(1, 2, 2, 1).equal);
    for (int k = 1; k <= 5; ++k) {
        EXPECT_TRUE(bstab::verify_conjecture_rect(1, 1, 2, k).equal);
        EXPECT_EQ(bstab::count_bssyt(P("1"), k), oracle::binom(k + 1, 2));
    }
    const auto empty = bstab::verify_conjecture_rect(2, 2, 1, 1);
    EXPECT_TRUE(empty.equal);
    EXPECT_FALSE(empty.note.empty());
}

TEST(DoubleSums, Examples) {
    EXPECT_TRUE(bstab::all_equal(bstab::verify_double_sums(P("1"), 1)));
    EXPECT_TRUE(bstab::all_equal(bstab::verify_double_sums(P("3,1"), 2)));
    EXPECT_TRUE(bstab::all_equal(bstab::verify_double_sums(P("4,4,2,1"), 2)));
}

TEST(Bridge, HoldsForUnbalancedShapes) {
    for (const auto& lambda : bstab::all_subshapes(P("3,3,2"))) {
        if (lambda.empty()) continue;
        for (int k = 1; k <= 2; ++k) {
            EXPECT_TRUE(bstab::all_equal(bstab::verify_bridge(lambda, k))) << lambda.to_string();
            EXPECT_TRUE(bstab::all_equal(bstab::verify_ensemble_size(lambda, k)));
        }
    }
}
