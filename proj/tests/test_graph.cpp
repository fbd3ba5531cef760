#include "majext/graph.hpp"
#include "majext/degree_sequences.hpp"

#include <gtest/gtest.h>

using namespace majext;

namespace {

SimpleGraph path(int n) {
    SimpleGraph g(n);
    for (int i = 0; i + 1 < n; ++i)
        g.add_edge(i, i + 1);
    return g;
}

} // namespace

TEST(SimpleGraphTest, RejectsLoopsAndDuplicates) {
    SimpleGraph g(3);
    g.add_edge(0, 1);
    EXPECT_THROW(g.add_edge(1, 0), DomainError);
    EXPECT_THROW(g.add_edge(2, 2), DomainError);
    EXPECT_THROW(g.add_edge(0, 3), DomainError);
    EXPECT_EQ(g.edge_count(), 1u);
}

TEST(Realize, StarOnFive) {
    const auto g = realize(DegreeSequence({4, 1, 1, 1, 1}));
    EXPECT_EQ(g.edges(), (std::vector<Edge>{{0, 1}, {0, 2}, {0, 3}, {0, 4}}));
}

TEST(Realize, Triangle) {
    const auto g = realize(DegreeSequence({2, 2, 2}));
    EXPECT_EQ(g.edges(), (std::vector<Edge>{{0, 1}, {0, 2}, {1, 2}}));
    EXPECT_EQ(cyclomatic_number(g), 1);
}

TEST(Realize, TricyclicMinimalNeedsRepair) {
    const DegreeSequence s({3, 3, 3, 3, 2, 2, 2, 2});
    const auto g = realize(s);
    EXPECT_TRUE(g.connected());
    EXPECT_EQ(g.degree_list(), s.degrees());
    EXPECT_EQ(g.edge_count(), 10u);
    EXPECT_EQ(cyclomatic_number(g), 3);
}

TEST(Realize, Errors) {
    const std::vector<int> not_graphical{3, 1, 1};
    EXPECT_THROW(realize(std::span<const int>(not_graphical)), RealizationError);
    const std::vector<int> forest{1, 1, 1, 1};
    EXPECT_THROW(realize(std::span<const int>(forest)), RealizationError);
    const std::vector<int> unsorted{1, 2, 1};
    EXPECT_THROW(realize(std::span<const int>(unsorted)), RealizationError);
    const std::vector<int> zero{2, 2, 2, 0};
    EXPECT_THROW(realize(std::span<const int>(zero)), RealizationError);
}

TEST(Realize, Deterministic) {
    const DegreeSequence s({5, 4, 3, 3, 3, 2, 2, 2});
    EXPECT_EQ(realize(s).edges(), realize(s).edges());
}

TEST(Realize, RoundTripOverAllClassSequences) {
    std::size_t total = 0;
    for (int c = 0; c <= kMaxCyclomatic; ++c)
        for (int n = min_order(c); n <= 10; ++n)
            for (const auto& s : enumerate_sequences(CyclomaticClass::make(n, c))) {
                const auto g = realize(s);
                ASSERT_EQ(g.degree_list(), s.degrees()) << format_plain(s);
                ASSERT_TRUE(g.connected()) << format_plain(s);
                ASSERT_EQ(cyclomatic_number(g), c) << format_plain(s);
                ++total;
            }
    EXPECT_GT(total, 1000u);
}

TEST(Cyclomatic, Examples) {
    EXPECT_EQ(cyclomatic_number(path(6)), 0);
    EXPECT_EQ(cyclomatic_number(realize(DegreeSequence({7, 4, 2, 2, 2, 1, 1, 1}))), 3);
    SimpleGraph two(4);
    two.add_edge(0, 1);
    two.add_edge(2, 3);
    EXPECT_THROW(cyclomatic_number(two), DomainError);
}

TEST(Dot, TriangleDocument) {
    EXPECT_EQ(export_dot(realize(DegreeSequence({2, 2, 2})), "C3"),
              "graph \"C3\" {\n"
              "  0 [label=\"0\", degree=2];\n"
              "  1 [label=\"1\", degree=2];\n"
              "  2 [label=\"2\", degree=2];\n"
              "  0 -- 1;\n"
              "  0 -- 2;\n"
              "  1 -- 2;\n"
              "}\n");
}

TEST(Dot, StarHubFirst) {
    SimpleGraph g(5);
    for (int leaf = 0; leaf < 4; ++leaf)
        g.add_edge(leaf, 4);
    const auto dot = export_dot(g, "star");
    EXPECT_NE(dot.find("  0 [label=\"0\", degree=4];"), std::string::npos);
    for (int leaf = 1; leaf <= 4; ++leaf)
        EXPECT_NE(dot.find("  0 -- " + std::to_string(leaf) + ";"), std::string::npos);
}

TEST(Dot, EdgeCountOfExtremalGraphs) {
    for (int c = 0; c <= kMaxCyclomatic; ++c) {
        const int n = c + 4;
        for (const auto& m : extremal_family(CyclomaticClass::make(n, c)).maximals) {
            const auto dot = export_dot(realize(m), "g");
            std::size_t edges = 0;
            for (std::size_t pos = dot.find(" -- "); pos != std::string::npos; pos = dot.find(" -- ", pos + 1))
                ++edges;
            EXPECT_EQ(edges, static_cast<std::size_t>(n + c - 1));
        }
    }
}

TEST(Dot, EscapesLabel) {
    EXPECT_EQ(export_dot(SimpleGraph(0), "a\"b"), "graph \"a\\\"b\" {\n}\n");
}
