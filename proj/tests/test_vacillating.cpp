#include <gtest/gtest.h>

#include <set>

#include "hvt/error.hpp"
#include "hvt/format.hpp"
#include "hvt/vacillating.hpp"

namespace {

using hvt::HeckeDiagram;
using hvt::LinkedPartition;
using hvt::Partition;
using hvt::VacillatingTableau;

const char *kSevenStep = "-;-;1@1,1;1;2,1@2,1;2,1;2,1;1,1;1,1@2,1;1,1;1,1;1;1;-;-";
const LinkedPartition kSevenArcs(7, {{1, 2}, {1, 3}, {1, 5}, {1, 6}, {2, 4}, {2, 7}});
const LinkedPartition kSevenArcsConjugate(7, {{1, 2}, {2, 3}, {1, 4}, {2, 5}, {2, 6}, {1, 7}});

HeckeDiagram D(std::vector<int> parts) { return HeckeDiagram(Partition(std::move(parts))); }

TEST(Vacillating, ValidExamples) {
    const auto v = hvt::parse_vht(kSevenStep);
    EXPECT_EQ(v.n(), 7);
    EXPECT_EQ(v.diagrams().size(), 15u);
    EXPECT_EQ(hvt::validate_vht({D({}), D({}), D({})}).n(), 1);
    EXPECT_EQ(VacillatingTableau{}.n(), 0);
}

TEST(Vacillating, InvalidExamplesNameTheClause) {
    try {
        hvt::validate_vht({D({}), D({}), D({1}), D({1}), D({})});
        FAIL();
    } catch (const hvt::Error &e) {
        EXPECT_EQ(e.code(), hvt::ErrorCode::validation);
        EXPECT_NE(std::string(e.what()).find("diagram 4"), std::string::npos) << e.what();
    }
    EXPECT_THROW(hvt::validate_vht({D({}), D({})}), hvt::Error);
    EXPECT_THROW(hvt::validate_vht({D({1}), D({}), D({})}), hvt::Error);
    EXPECT_THROW(hvt::validate_vht({D({}), HeckeDiagram(Partition({1}), hvt::Cell{1, 1}), D({})}), hvt::Error);
    // adding two squares in one row is not a rook strip
    EXPECT_THROW(hvt::validate_vht({D({}), D({}), D({2}), D({2}), D({})}), hvt::Error);
}

TEST(Vacillating, PhiExamples) {
    EXPECT_EQ(hvt::phi(hvt::parse_vht(kSevenStep)), kSevenArcs);
    EXPECT_EQ(hvt::phi(hvt::parse_vht("-;-;-")), LinkedPartition(1, {}));
    EXPECT_EQ(hvt::phi(hvt::parse_vht("-;-;1;-;-")), LinkedPartition(2, {{1, 2}}));
}

TEST(Vacillating, PhiInverseExamples) {
    EXPECT_EQ(hvt::phi_inverse(kSevenArcs), hvt::parse_vht(kSevenStep));
    EXPECT_EQ(hvt::phi_inverse(LinkedPartition(1, {})), hvt::parse_vht("-;-;-"));
    EXPECT_EQ(hvt::phi_inverse(LinkedPartition(2, {{1, 2}})), hvt::parse_vht("-;-;1;-;-"));
}

TEST(Vacillating, Extrema) {
    EXPECT_EQ(hvt::vht_extrema(hvt::parse_vht(kSevenStep)), (hvt::Extrema{2, 2}));
    EXPECT_EQ(hvt::vht_extrema(hvt::parse_vht("-;-;-")), (hvt::Extrema{0, 0}));
    EXPECT_EQ(hvt::vht_extrema(hvt::parse_vht("-;-;1;-;-")), (hvt::Extrema{1, 1}));
}

TEST(Vacillating, PsiExamples) {
    EXPECT_EQ(hvt::psi(kSevenArcs), kSevenArcsConjugate);
    EXPECT_EQ(hvt::psi(hvt::psi(kSevenArcs)), kSevenArcs);
    EXPECT_EQ(hvt::psi(LinkedPartition(4, {})), LinkedPartition(4, {}));
}

TEST(Vacillating, PhiTraceRecordsLetters) {
    hvt::PhiTrace trace;
    hvt::phi(hvt::parse_vht("-;-;1;-;-"), &trace);
    ASSERT_EQ(trace.tableaux.size(), 5u);
    ASSERT_EQ(trace.letters.size(), 5u);
    EXPECT_EQ(trace.letters[3], 1);
    EXPECT_EQ(trace.edges.back(), (std::vector<hvt::Arc>{{1, 2}}));
    EXPECT_EQ(hvt::to_text(trace.tableaux[2]), "1");
}

TEST(Vacillating, WordTraceExamples) {
    // w(i) must insert to the underlying tableau of diagram i, so the word
    // changes exactly where the tableau does.
    const std::vector<std::string> seven_step{"",     "",    "1111", "111", "21121", "2112", "2112", "211",
                                        "211",  "21",  "21",   "2",   "2",     "",     ""};
    std::vector<hvt::Word> expected;
    for (const auto &s : seven_step) {
        hvt::Word w;
        for (char ch : s) w.push_back(ch - '0');
        expected.push_back(w);
    }
    EXPECT_EQ(hvt::phi_word_trace(hvt::parse_vht(kSevenStep)), expected);
    EXPECT_EQ(hvt::phi_word_trace(hvt::parse_vht("-;-;-")), (std::vector<hvt::Word>{{}, {}, {}}));
    EXPECT_EQ(hvt::phi_word_trace(hvt::parse_vht("-;-;1;-;-")), (std::vector<hvt::Word>{{}, {}, {1}, {}, {}}));
}

TEST(Vacillating, EnumerationIsValidDistinctAndFactorial) {
    std::size_t f = 1;
    for (int n = 1; n <= 6; ++n) {
        f *= n;
        const auto all = hvt::enumerate_vht(n);
        EXPECT_EQ(all.size(), f) << "n=" << n;
        std::set<VacillatingTableau> seen(all.begin(), all.end());
        EXPECT_EQ(seen.size(), all.size());
        for (const auto &v : all) ASSERT_EQ(hvt::validate_vht(v.diagrams()), v);
    }
    EXPECT_THROW(hvt::enumerate_vht(0), hvt::Error);
    EXPECT_THROW(hvt::enumerate_vht(9), hvt::Error);
}

TEST(Vacillating, PhiIsABijection) {
    for (int n = 1; n <= 6; ++n) {
        std::set<LinkedPartition> image;
        hvt::for_each_vht(n, [&](const VacillatingTableau &v) {
            const LinkedPartition p = hvt::phi(v);
            ASSERT_EQ(p.n(), n);
            ASSERT_TRUE(image.insert(p).second) << hvt::to_text(v);
            ASSERT_EQ(hvt::phi_inverse(p), v);
        });
        const auto all = hvt::enumerate_linked(n);
        EXPECT_EQ(image, std::set<LinkedPartition>(all.begin(), all.end()));
        for (const auto &p : all) ASSERT_EQ(hvt::phi(hvt::phi_inverse(p)), p);
    }
}

TEST(Vacillating, EndpointReading) {
    for (int n = 1; n <= 6; ++n) {
        hvt::for_each_vht(n, [&](const VacillatingTableau &v) {
            const auto ends = hvt::endpoints(hvt::phi(v));
            for (int i = 1; i <= n; ++i) {
                const bool left = v[2 * i].shape() != v[2 * i - 1].shape();
                const bool right = v[2 * i - 2] != v[2 * i - 1];
                ASSERT_EQ(ends.left.count(i) == 1, left) << hvt::to_text(v) << " vertex " << i;
                ASSERT_EQ(ends.right.count(i) == 1, right) << hvt::to_text(v) << " vertex " << i;
            }
        });
    }
}

TEST(Vacillating, WordTraceSoundness) {
    for (int n = 1; n <= 5; ++n) {
        hvt::for_each_vht(n, [&](const VacillatingTableau &v) {
            hvt::PhiTrace trace;
            hvt::phi(v, &trace);
            const auto words = hvt::phi_word_trace(v);
            ASSERT_EQ(words.size(), v.diagrams().size());
            ASSERT_TRUE(words.front().empty());
            ASSERT_TRUE(words.back().empty());
            for (std::size_t i = 0; i < words.size(); ++i)
                ASSERT_EQ(hvt::insertion_tableau(words[i]), trace.tableaux[i].tab()) << hvt::to_text(v) << " i=" << i;
        });
    }
}

TEST(Vacillating, ConjugateIsAnInvolutionOnTableaux) {
    for (const auto &v : hvt::enumerate_vht(5)) {
        const auto c = hvt::conjugate_vht(v);
        ASSERT_EQ(hvt::validate_vht(c.diagrams()), c);
        ASSERT_EQ(hvt::conjugate_vht(c), v);
    }
}

} // namespace
