#include <gtest/gtest.h>

#include <map>

#include "hvt/error.hpp"
#include "hvt/shapes.hpp"

namespace {

using hvt::Cell;
using hvt::HeckeDiagram;
using hvt::Partition;

Partition P(std::vector<int> parts) { return Partition(std::move(parts)); }

TEST(Shapes, PartitionRejectsIncreasingParts) {
    EXPECT_THROW(P({2, 3}), hvt::Error);
    EXPECT_THROW(P({2, 0}), hvt::Error);
    EXPECT_NO_THROW(P({}));
}

TEST(Shapes, CornersOfExampleDiagram) {
    EXPECT_EQ(hvt::corners(P({4, 4, 2, 1})), (std::vector<Cell>{{2, 4}, {3, 2}, {4, 1}}));
    EXPECT_TRUE(hvt::corners(P({})).empty());
    EXPECT_EQ(hvt::corners(P({1})), (std::vector<Cell>{{1, 1}}));
}

TEST(Shapes, CornersAreExactlyTheRemovableCells) {
    for (const auto &p : hvt::partitions_in_box(5, 5)) {
        const auto cs = hvt::corners(p);
        for (int r = 1; r <= p.rows(); ++r) {
            for (int c = 1; c <= p.row_length(r); ++c) {
                std::vector<int> parts = p.parts();
                // Removing (r, c) is only shape-preserving when it is the last
                // cell of its row and nothing sits below it.
                bool removable = c == parts[r - 1] && (r == p.rows() || parts[r] < c);
                const bool listed = std::find(cs.begin(), cs.end(), Cell{r, c}) != cs.end();
                EXPECT_EQ(listed, removable) << "cell " << r << "," << c;
            }
        }
    }
}

TEST(Shapes, RookStripExamples) {
    EXPECT_TRUE(hvt::is_rook_strip(P({4, 3, 1}), P({3, 2})));
    EXPECT_FALSE(hvt::is_rook_strip(P({4, 3, 1}), P({3, 1})));
    EXPECT_TRUE(hvt::is_rook_strip(P({2, 1}), P({2, 1})));
    EXPECT_THROW(hvt::is_rook_strip(P({2}), P({1, 1})), hvt::Error);
}

TEST(Shapes, SkewCells) {
    EXPECT_EQ(hvt::skew_cells(P({4, 3, 1}), P({3, 2})), (std::vector<Cell>{{1, 4}, {2, 3}, {3, 1}}));
    EXPECT_TRUE(hvt::skew_cells(P({2, 1}), P({2, 1})).empty());
    EXPECT_EQ(hvt::skew_cells(P({2, 1}), P({1})), (std::vector<Cell>{{1, 2}, {2, 1}}));
    try {
        hvt::skew_cells(P({1}), P({2}));
        FAIL();
    } catch (const hvt::Error &e) {
        EXPECT_EQ(e.code(), hvt::ErrorCode::precondition);
    }
}

TEST(Shapes, RookStripMatchesCellCountOracle) {
    const auto box = hvt::partitions_in_box(4, 4);
    for (const auto &outer : box) {
        for (const auto &inner : box) {
            if (!outer.contains(inner)) continue;
            std::map<int, int> per_row, per_col;
            for (const auto &c : hvt::skew_cells(outer, inner)) {
                ++per_row[c.row];
                ++per_col[c.col];
            }
            bool expect = true;
            for (const auto &[k, n] : per_row) expect = expect && n <= 1;
            for (const auto &[k, n] : per_col) expect = expect && n <= 1;
            EXPECT_EQ(hvt::is_rook_strip(outer, inner), expect);
        }
    }
}

TEST(Shapes, RemovingACornerLeavesARookStrip) {
    for (const auto &p : hvt::partitions_in_box(5, 5))
        for (const auto &c : hvt::corners(p)) EXPECT_TRUE(hvt::is_rook_strip(p, hvt::remove_corner(p, c)));
}

TEST(Shapes, ConjugateExamples) {
    EXPECT_EQ(hvt::conjugate_diagram(HeckeDiagram(P({4, 4, 2, 1}))), HeckeDiagram(P({4, 3, 2, 2})));
    EXPECT_EQ(hvt::conjugate_diagram(HeckeDiagram(P({4, 4, 2, 1}), Cell{3, 2})),
              HeckeDiagram(P({4, 3, 2, 2}), Cell{2, 3}));
    EXPECT_EQ(hvt::conjugate_diagram(HeckeDiagram()), HeckeDiagram());
}

TEST(Shapes, ConjugationIsAnInvolution) {
    for (const auto &p : hvt::partitions_in_box(5, 5)) {
        const HeckeDiagram plain(p);
        EXPECT_EQ(hvt::conjugate_diagram(hvt::conjugate_diagram(plain)), plain);
        for (const auto &c : hvt::corners(p)) {
            const HeckeDiagram marked(p, c);
            EXPECT_EQ(hvt::conjugate_diagram(hvt::conjugate_diagram(marked)), marked);
        }
    }
}

TEST(Shapes, MarkMustBeACorner) {
    EXPECT_THROW(HeckeDiagram(P({2, 2}), Cell{1, 2}), hvt::Error);
    EXPECT_THROW(HeckeDiagram(P({}), Cell{1, 1}), hvt::Error);
    EXPECT_NO_THROW(HeckeDiagram(P({2, 2}), Cell{2, 2}));
}

TEST(Shapes, BoxEnumerationCount) {
    // binomial(rows + cols, rows)
    EXPECT_EQ(hvt::partitions_in_box(3, 3).size(), 20u);
    EXPECT_EQ(hvt::partitions_in_box(5, 5).size(), 252u);
}

} // namespace
