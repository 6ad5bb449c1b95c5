#include <gtest/gtest.h>

#include <set>

#include "bstab/tableaux.hpp"
#include "oracles.hpp"

using bstab::Partition;
using bstab::ReversePlanePartition;
using bstab::SetValuedTableau;
using bstab::TableauKind;

namespace {
Partition P(const char* s) { return Partition::parse(s); }
const char* kWorkedT = "1,1,2,2/{2,4},4,4,4/5,5/6";
const char* kWorkedP = "0,0,1,1/0,2,2,2/2,2/2";
}  // namespace

TEST(SetValuedTableau, ParseRoundTrip) {
    const auto t = SetValuedTableau::parse(kWorkedT, 2);
    EXPECT_EQ(t.shape(), P("4,4,2,1"));
    EXPECT_EQ(t.to_string(), kWorkedT);
    EXPECT_EQ(t.at({2, 1}), (bstab::EntrySet{2, 4}));
    EXPECT_TRUE(t.is_valid());
    EXPECT_THROW(SetValuedTableau::parse("1,{}", 1), std::invalid_argument);
    EXPECT_THROW(SetValuedTableau(P("1"), 0), std::invalid_argument);
}

TEST(SetValuedTableau, Validation) {
    EXPECT_FALSE(SetValuedTableau::parse("2,1", 2).is_valid());       // row decreases
    EXPECT_FALSE(SetValuedTableau::parse("1/1", 2).is_valid());       // column not strict
    EXPECT_FALSE(SetValuedTableau::parse("3", 1).is_valid());         // exceeds flag k+1
    EXPECT_FALSE(SetValuedTableau::parse("{1,3},2", 2).is_valid());   // max 3 > min 2
    EXPECT_TRUE(SetValuedTableau::parse("{1,2},2", 2).is_valid());
}

TEST(Classify, Examples) {
    EXPECT_EQ(bstab::classify(SetValuedTableau::parse("1,2,2,3/{2,4},4,4/5,6/7,7", 3)), TableauKind::BSSYT);
    EXPECT_EQ(bstab::classify(SetValuedTableau::parse("1,1/2", 1)), TableauKind::SSYT);
    EXPECT_EQ(bstab::classify(SetValuedTableau::parse("{1,2},{2,3}", 2)), TableauKind::Other);
    EXPECT_EQ(bstab::classify(SetValuedTableau::parse("{1,2,3}", 2)), TableauKind::Other);
    EXPECT_EQ(bstab::to_string(TableauKind::BSSYT), "BSSYT");
}

TEST(Enumerate, SsytExamples) {
    EXPECT_EQ(bstab::enumerate_ssyt(P("1"), 2).size(), 3u);
    EXPECT_EQ(bstab::enumerate_ssyt(P("2,1"), 1).size(), 5u);
    EXPECT_EQ(bstab::enumerate_ssyt(P("2"), 3).size(), 10u);
    EXPECT_EQ(bstab::count_ssyt(P(""), 4), 1u);
}

TEST(Enumerate, BssytExamples) {
    const auto one = bstab::enumerate_bssyt(P("1"), 1);
    ASSERT_EQ(one.size(), 1u);
    EXPECT_EQ(one[0].to_string(), "{1,2}");
    EXPECT_EQ(bstab::enumerate_bssyt(P("1"), 3).size(), 6u);
    EXPECT_EQ(bstab::enumerate_bssyt(P("2,1"), 1).size(), 5u);
    EXPECT_EQ(bstab::count_bssyt(P(""), 2), 0u);
}

TEST(Enumerate, RppExamples) {
    EXPECT_EQ(bstab::enumerate_rpp(P("1"), 1).size(), 2u);
    EXPECT_EQ(bstab::enumerate_rpp(P("2"), 1).size(), 3u);
    EXPECT_EQ(bstab::enumerate_rpp(P("2,1"), 1).size(), 5u);
    EXPECT_EQ(bstab::count_rpp(P(""), 1), 1u);
}

TEST(Enumerate, MacMahonBoxCounts) {
    EXPECT_EQ(bstab::count_rpp(P("4,4,4,4"), 3), 24696u);
    EXPECT_EQ(bstab::count_rpp(P("4,4,4,4"), 2), 1764u);
    EXPECT_EQ(bstab::count_rpp(P("4,4,4"), 3), 4116u);
}

TEST(Enumerate, CountsMatchBruteForce) {
    for (const auto& lambda : bstab::all_subshapes(P("3,2,2"))) {
        for (int k = 1; k <= 2; ++k) {
            const auto s = lambda.parts();
            EXPECT_EQ(bstab::count_ssyt(lambda, k), oracle::count_flagged_ssyt(s, k)) << lambda.to_string();
            EXPECT_EQ(bstab::count_rpp(lambda, k), oracle::count_rpp(s, k)) << lambda.to_string();
            if (lambda.size() <= 5) {
                EXPECT_EQ(bstab::count_bssyt(lambda, k), oracle::count_bssyt(s, k)) << lambda.to_string();
            }
        }
    }
}

TEST(Enumerate, OutputsValidAndDistinct) {
    for (const auto& lambda : bstab::all_subshapes(P("3,3,2"))) {
        for (int k = 1; k <= 2; ++k) {
            std::set<std::string> seen;
            for (const auto& t : bstab::enumerate_bssyt(lambda, k)) {
                EXPECT_TRUE(t.is_valid());
                EXPECT_EQ(bstab::classify(t), TableauKind::BSSYT);
                EXPECT_TRUE(seen.insert(t.to_string()).second);
            }
            seen.clear();
            for (const auto& t : bstab::enumerate_ssyt(lambda, k)) {
                EXPECT_TRUE(t.is_valid());
                EXPECT_EQ(bstab::classify(t), TableauKind::SSYT);
                EXPECT_TRUE(seen.insert(t.to_string()).second);
            }
            seen.clear();
            for (const auto& p : bstab::enumerate_rpp(lambda, k)) {
                EXPECT_TRUE(p.is_valid());
                EXPECT_TRUE(seen.insert(p.to_string()).second);
            }
        }
    }
}

TEST(Enumerate, ShardsPartitionTheRpps) {
    const Partition lambda = P("3,2,1");
    for (int count = 1; count <= 4; ++count) {
        std::uint64_t total = 0;
        for (int index = 0; index < count; ++index) {
            bstab::for_each_rpp(lambda, 2, [&](const ReversePlanePartition&) { ++total; }, {index, count});
        }
        EXPECT_EQ(total, bstab::count_rpp(lambda, 2));
    }
}

TEST(RowShift, Examples) {
    const auto p = ReversePlanePartition::parse("0,0/1", 2);
    EXPECT_EQ(bstab::rpp_to_ssyt(p).to_string(), "1,1/3");
    EXPECT_TRUE(bstab::rpp_to_ssyt(ReversePlanePartition(P(""), 1)).shape().empty());
    const auto sample = ReversePlanePartition::parse(kWorkedP, 2);
    EXPECT_EQ(bstab::rpp_to_ssyt(sample).to_string(), "1,1,2,2/2,4,4,4/5,5/6");
    EXPECT_EQ(bstab::ssyt_to_rpp(bstab::rpp_to_ssyt(sample)), sample);
    EXPECT_THROW(bstab::ssyt_to_rpp(SetValuedTableau::parse("{1,2}", 1)), std::invalid_argument);
}

TEST(RowShift, BijectionOnSmallShapes) {
    for (const auto& lambda : bstab::all_subshapes(P("3,3,3"))) {
        for (int k = 1; k <= 3; ++k) {
            std::uint64_t n = 0;
            bstab::for_each_rpp(lambda, k, [&](const ReversePlanePartition& p) {
                const auto t = bstab::rpp_to_ssyt(p);
                EXPECT_TRUE(t.is_valid());
                EXPECT_EQ(bstab::ssyt_to_rpp(t), p);
                ++n;
            });
            EXPECT_EQ(n, bstab::count_ssyt(lambda, k));
        }
    }
}

TEST(InducedSubshape, Examples) {
    EXPECT_EQ(bstab::induced_subshape(ReversePlanePartition::parse(kWorkedP, 2), 2), P("4,1"));
    EXPECT_EQ(bstab::induced_subshape(ReversePlanePartition::parse("0,0,1,1/2,2,2,2/2,2/2", 2), 1), P("2"));
    EXPECT_TRUE(bstab::induced_subshape(ReversePlanePartition::parse("1,1/2", 2), 1).empty());
    EXPECT_THROW(bstab::induced_subshape(ReversePlanePartition::parse("1", 2), 3), std::invalid_argument);
}

TEST(InducedSubshape, MonotoneAndContained) {
    const Partition lambda = P("3,3,2");
    for (const auto& p : bstab::enumerate_rpp(lambda, 3)) {
        Partition prev;
        for (int i = 1; i <= 3; ++i) {
            const auto a = bstab::induced_subshape(p, i);
            EXPECT_TRUE(bstab::subshape_contained(a, lambda));
            EXPECT_TRUE(bstab::subshape_contained(prev, a));
            prev = a;
        }
    }
}
