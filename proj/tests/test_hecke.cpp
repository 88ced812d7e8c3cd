#include <gtest/gtest.h>

#include "hvt/error.hpp"
#include "hvt/hecke.hpp"
#include "oracles.hpp"

namespace {

using hvt::Cell;
using hvt::IncreasingTableau;

IncreasingTableau T(std::vector<std::vector<int>> rows) { return IncreasingTableau::from_rows(std::move(rows)); }

const IncreasingTableau kBaseTableau = T({{1, 2, 3, 4}, {2, 3, 5}, {4, 5}, {5, 7}});

TEST(Hecke, InsertGrowsShape) {
    const auto out = hvt::hecke_insert(kBaseTableau, 1);
    EXPECT_EQ(out.result, T({{1, 2, 3, 4}, {2, 3, 5}, {3, 5}, {4, 7}, {5}}));
    EXPECT_EQ(out.corner, (Cell{5, 1}));
    EXPECT_EQ(out.alpha, 1);
}

TEST(Hecke, InsertKeepsShape) {
    const auto out = hvt::hecke_insert(kBaseTableau, 3);
    EXPECT_EQ(out.result, T({{1, 2, 3, 4}, {2, 3, 4}, {4, 5}, {5, 7}}));
    EXPECT_EQ(out.corner, (Cell{4, 2}));
    EXPECT_EQ(out.alpha, 0);
}

TEST(Hecke, InsertIntoEmpty) {
    const auto out = hvt::hecke_insert(IncreasingTableau{}, 5);
    EXPECT_EQ(out.result, T({{5}}));
    EXPECT_EQ(out.corner, (Cell{1, 1}));
    EXPECT_EQ(out.alpha, 1);
    EXPECT_THROW(hvt::hecke_insert(IncreasingTableau{}, 0), hvt::Error);
}

TEST(Hecke, ReverseExamples) {
    EXPECT_EQ(hvt::hecke_reverse_insert(T({{1, 2, 3, 4}, {2, 3, 5}, {3, 5}, {4, 7}, {5}}), {5, 1}, 1),
              std::make_pair(kBaseTableau, 1));
    EXPECT_EQ(hvt::hecke_reverse_insert(T({{1, 2, 3, 4}, {2, 3, 4}, {4, 5}, {5, 7}}), {4, 2}, 0),
              std::make_pair(kBaseTableau, 3));
    EXPECT_EQ(hvt::hecke_reverse_insert(T({{5}}), {1, 1}, 1), std::make_pair(IncreasingTableau{}, 5));
}

TEST(Hecke, ReverseRejectsNonCorners) {
    for (int alpha : {0, 1}) {
        try {
            hvt::hecke_reverse_insert(kBaseTableau, {1, 3}, alpha);
            FAIL();
        } catch (const hvt::Error &e) {
            EXPECT_EQ(e.code(), hvt::ErrorCode::precondition);
        }
    }
    EXPECT_THROW(hvt::hecke_reverse_insert(kBaseTableau, {4, 2}, 2), hvt::Error);
}

TEST(Hecke, InsertionTableauOfWords) {
    EXPECT_EQ(hvt::insertion_tableau({2, 1, 1, 3, 1, 3, 2, 1}), T({{1, 2}, {2, 3}, {3}}));
    EXPECT_EQ(hvt::insertion_tableau({2, 1, 1, 1, 2, 1}), T({{1, 2}, {2}}));
    EXPECT_EQ(hvt::insertion_tableau({}), IncreasingTableau{});
}

TEST(Hecke, LongestMonotoneExamples) {
    EXPECT_EQ(hvt::longest_monotone({2, 1, 1, 3, 1, 3, 2, 1}), (hvt::MonotoneLengths{2, 3}));
    EXPECT_EQ(hvt::longest_monotone({1, 2, 3}), (hvt::MonotoneLengths{3, 1}));
    EXPECT_EQ(hvt::longest_monotone({}), (hvt::MonotoneLengths{0, 0}));
}

TEST(Hecke, LongestMonotoneAgreesWithSubsetScan) {
    for (const auto &w : hvt::testing::all_words(4, 7)) {
        const auto [inc, dec] = hvt::testing::monotone_by_subsets(w);
        ASSERT_EQ(hvt::longest_monotone(w), (hvt::MonotoneLengths{inc, dec}));
    }
}

TEST(Hecke, ForwardThenReverseIsIdentity) {
    for (const auto &t : hvt::increasing_tableaux_in_box(3, 3, 5)) {
        for (int x = 1; x <= 5; ++x) {
            const auto out = hvt::hecke_insert(t, x);
            const int grown = out.result.shape().size() - t.shape().size();
            ASSERT_EQ(grown, out.alpha);
            ASSERT_TRUE(out.result.shape().contains(t.shape()));
            ASSERT_EQ(hvt::hecke_reverse_insert(out.result, out.corner, out.alpha), std::make_pair(t, x));
        }
    }
}

TEST(Hecke, ReverseThenForwardIsIdentity) {
    std::size_t accepted = 0;
    for (const auto &u : hvt::increasing_tableaux_in_box(3, 3, 5)) {
        for (const auto &c : hvt::corners(u.shape())) {
            for (int alpha : {0, 1}) {
                std::pair<IncreasingTableau, int> back;
                try {
                    back = hvt::hecke_reverse_insert(u, c, alpha);
                } catch (const hvt::Error &) {
                    continue;
                }
                ++accepted;
                ASSERT_EQ(hvt::hecke_insert(back.first, back.second), (hvt::InsertionOutcome{u, c, alpha}));
            }
        }
    }
    EXPECT_GT(accepted, 0u);
}

TEST(Hecke, InsertionShapeDeterminesMonotoneLengths) {
    for (const auto &w : hvt::testing::all_words(4, 6)) {
        const auto t = hvt::insertion_tableau(w);
        const auto m = hvt::longest_monotone(w);
        ASSERT_EQ(m.increasing, t.num_cols());
        ASSERT_EQ(m.decreasing, t.num_rows());
    }
}

} // namespace
