#include <gtest/gtest.h>

#include "hvt/error.hpp"
#include "hvt/linked.hpp"

namespace {

using hvt::Arc;
using hvt::BlockPartition;
using hvt::CrossNest;
using hvt::LinkedPartition;

const LinkedPartition kTenMixed(10, {{1, 3}, {1, 5}, {2, 6}, {2, 10}, {5, 8}, {5, 9}, {6, 7}});
const LinkedPartition kTenFront(10, {{1, 3}, {1, 5}, {1, 8}, {2, 6}, {2, 9}, {7, 10}});
const LinkedPartition kSevenArcs(7, {{1, 2}, {1, 3}, {1, 5}, {1, 6}, {2, 4}, {2, 7}});

TEST(Linked, ConstructorValidates) {
    EXPECT_THROW(LinkedPartition(3, {{1, 3}, {2, 3}}), hvt::Error);
    EXPECT_THROW(LinkedPartition(3, {{2, 2}}), hvt::Error);
    EXPECT_THROW(LinkedPartition(3, {{1, 4}}), hvt::Error);
    EXPECT_THROW(LinkedPartition(3, {{1, 2}, {1, 2}}), hvt::Error);
    EXPECT_EQ(LinkedPartition(3, {{2, 3}, {1, 2}}).arcs(), (std::vector<Arc>{{1, 2}, {2, 3}}));
}

TEST(Linked, BlocksToArcs) {
    EXPECT_EQ(hvt::blocks_to_arcs({10, {{1, 3, 5}, {2, 6, 10}, {4}, {5, 8, 9}, {6, 7}}}), kTenMixed);
    EXPECT_EQ(hvt::blocks_to_arcs({10, {{1, 3, 5, 8}, {2, 6, 9}, {4}, {7, 10}}}), kTenFront);
    EXPECT_EQ(hvt::blocks_to_arcs({3, {{1}, {2}, {3}}}), LinkedPartition(3, {}));
}

TEST(Linked, ArcsToBlocks) {
    EXPECT_EQ(hvt::arcs_to_blocks(kSevenArcs), (BlockPartition{7, {{1, 2, 3, 5, 6}, {2, 4, 7}}}));
    EXPECT_EQ(hvt::arcs_to_blocks(kTenMixed), (BlockPartition{10, {{1, 3, 5}, {2, 6, 10}, {4}, {5, 8, 9}, {6, 7}}}));
    EXPECT_EQ(hvt::arcs_to_blocks(LinkedPartition(3, {})), (BlockPartition{3, {{1}, {2}, {3}}}));
}

TEST(Linked, NearDisjointness) {
    EXPECT_NO_THROW(hvt::validate_nearly_disjoint(10, {{1, 3, 5}, {2, 6, 10}, {4}, {5, 8, 9}, {6, 7}}));
    try {
        hvt::validate_nearly_disjoint(3, {{1, 2}, {1, 3}});
        FAIL();
    } catch (const hvt::Error &e) {
        EXPECT_EQ(e.code(), hvt::ErrorCode::validation);
        EXPECT_NE(std::string(e.what()).find("{1,2} and {1,3} are not nearly disjoint at 1"), std::string::npos)
            << e.what();
    }
    EXPECT_THROW(hvt::validate_nearly_disjoint(2, {{1, 2}, {2}}), hvt::Error);
    EXPECT_THROW(hvt::validate_nearly_disjoint(3, {{1, 2}}), hvt::Error);
    EXPECT_THROW(hvt::validate_nearly_disjoint(3, {{1, 2}, {3}, {}}), hvt::Error);
}

TEST(Linked, CrossingNestingExamples) {
    EXPECT_EQ(hvt::crossing_nesting(kTenMixed), (CrossNest{2, 3}));
    EXPECT_EQ(hvt::crossing_nesting(LinkedPartition(5, {})), (CrossNest{0, 0}));
    EXPECT_EQ(hvt::crossing_nesting(kSevenArcs), (CrossNest{2, 2}));
}

TEST(Linked, OracleExamples) {
    EXPECT_EQ(hvt::crossing_nesting_oracle(kTenMixed), (CrossNest{2, 3}));
    EXPECT_EQ(hvt::crossing_nesting_oracle(LinkedPartition(2, {{1, 2}})), (CrossNest{1, 1}));
    EXPECT_EQ(hvt::crossing_nesting_oracle(LinkedPartition(4, {{1, 3}, {2, 4}})), (CrossNest{2, 1}));

    std::vector<Arc> star;
    for (int r = 2; r <= 23; ++r) star.push_back({1, r});
    try {
        hvt::crossing_nesting_oracle(LinkedPartition(23, star));
        FAIL();
    } catch (const hvt::Error &e) {
        EXPECT_EQ(e.code(), hvt::ErrorCode::limit);
    }
}

TEST(Linked, SharedLeftOrHeadToTailNeverCount) {
    EXPECT_EQ(hvt::crossing_nesting(LinkedPartition(3, {{1, 2}, {2, 3}})), (CrossNest{1, 1}));
    EXPECT_EQ(hvt::crossing_nesting(LinkedPartition(3, {{1, 2}, {1, 3}})), (CrossNest{1, 1}));
    EXPECT_EQ(hvt::crossing_nesting(LinkedPartition(4, {{1, 2}, {2, 3}, {3, 4}})), (CrossNest{1, 1}));
}

TEST(Linked, FastStatisticsMatchOracle) {
    for (int n = 1; n <= 7; ++n)
        hvt::for_each_linked(n, [](const LinkedPartition &p) {
            ASSERT_EQ(hvt::crossing_nesting(p), hvt::crossing_nesting_oracle(p));
        });
}

TEST(Linked, Endpoints) {
    EXPECT_EQ(hvt::endpoints(kTenFront), (hvt::Endpoints{{1, 2, 7}, {3, 5, 6, 8, 9, 10}}));
    EXPECT_EQ(hvt::endpoints(kTenMixed), (hvt::Endpoints{{1, 2, 5, 6}, {3, 5, 6, 7, 8, 9, 10}}));
    EXPECT_EQ(hvt::endpoints(LinkedPartition(4, {})), hvt::Endpoints{});
    EXPECT_TRUE(hvt::is_front_representation(kTenFront));
    EXPECT_FALSE(hvt::is_front_representation(kTenMixed));
    EXPECT_TRUE(hvt::is_front_representation(LinkedPartition(3, {})));
}

TEST(Linked, EnumerationCountsAndOrder) {
    EXPECT_EQ(hvt::enumerate_linked(1).size(), 1u);
    EXPECT_EQ(hvt::enumerate_linked(3).size(), 6u);
    EXPECT_EQ(hvt::enumerate_linked(5).size(), 120u);
    std::size_t f = 1;
    for (int n = 1; n <= 7; ++n) {
        f *= n;
        const auto all = hvt::enumerate_linked(n);
        EXPECT_EQ(all.size(), f);
        for (std::size_t i = 1; i < all.size(); ++i) ASSERT_LT(all[i - 1].arcs(), all[i].arcs());
    }
    EXPECT_THROW(hvt::enumerate_linked(0), hvt::Error);
    EXPECT_THROW(hvt::enumerate_linked(10), hvt::Error);
}

TEST(Linked, BlockAndArcViewsAreInverse) {
    for (int n = 1; n <= 7; ++n)
        hvt::for_each_linked(n, [](const LinkedPartition &p) {
            const BlockPartition b = hvt::arcs_to_blocks(p);
            ASSERT_EQ(hvt::blocks_to_arcs(b), p);
            ASSERT_EQ(hvt::arcs_to_blocks(hvt::blocks_to_arcs(b)), b);
        });
}

TEST(Linked, InDegreeCharacterization) {
    for (int n = 1; n <= 5; ++n) {
        std::vector<Arc> universe;
        for (int l = 1; l <= n; ++l)
            for (int r = l + 1; r <= n; ++r) universe.push_back({l, r});
        for (unsigned mask = 0; mask < (1u << universe.size()); ++mask) {
            std::vector<Arc> arcs;
            std::vector<int> indeg(n + 1, 0);
            for (std::size_t i = 0; i < universe.size(); ++i)
                if (mask & (1u << i)) {
                    arcs.push_back(universe[i]);
                    ++indeg[universe[i].right];
                }
            const bool expect = std::all_of(indeg.begin(), indeg.end(), [](int d) { return d <= 1; });

            bool accepted = true;
            try {
                LinkedPartition(n, arcs);
            } catch (const hvt::Error &) {
                accepted = false;
            }
            ASSERT_EQ(accepted, expect);

            std::vector<std::vector<int>> blocks;
            std::vector<bool> touched(n + 1, false);
            for (int v = 1; v <= n; ++v) {
                std::vector<int> b{v};
                for (const auto &a : arcs)
                    if (a.left == v) {
                        b.push_back(a.right);
                        touched[a.left] = touched[a.right] = true;
                    }
                if (b.size() > 1) blocks.push_back(b);
            }
            for (int v = 1; v <= n; ++v)
                if (!touched[v]) blocks.push_back({v});
            bool blocks_ok = true;
            try {
                hvt::validate_nearly_disjoint(n, blocks);
            } catch (const hvt::Error &) {
                blocks_ok = false;
            }
            ASSERT_EQ(blocks_ok, expect);
        }
    }
}

} // namespace
