#include "collections.hpp"
#include "polyo/encoding.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace polyo;
using namespace testdata;

TEST(ParseEncoding, SessionInputs) {
    EXPECT_EQ(parse_encoding("Q={{{1, 1}, {2, 2}}, {{2, 1}, {3, 2}}, {{3, 1}, {4, 2}}, {{2, 2}, {3, 3}}, \n"
                             "{{3, 2}, {4, 3}}, {{2, 3}, {3, 4}}};"),
              figure2());
    EXPECT_EQ(parse_encoding("Q={{{1, 1}, {2, 2}}, {{2, 2}, {3, 3}}, {{2, 1}, {3, 2}},{{3, 2}, {4, 3}}, \n"
                             "{{2, 3}, {3, 4}}, {{4, 1}, {5, 2}}, {{3, 4}, {4, 5}}};"),
              figure3a());
    EXPECT_EQ(parse_encoding("Q={{{2, 1}, {3, 2}}, {{2, 2}, {3, 3}}, {{1, 2}, {2, 3}}, {{1, 3}, {2, 4}}, \n"
                             "{{1, 4}, {2, 5}}, {{2, 4}, {3, 5}}, {{2, 5}, {3, 6}}, {{3, 5}, {4, 6}},\n"
                             "{{4, 5}, {5, 6}}, {{4, 4}, {5, 5}}, {{5, 4}, {6, 5}}, {{5, 3}, {6, 4}}, \n"
                             "{{5, 2}, {6, 3}}, {{4, 2}, {5, 3}}, {{4, 1}, {5, 2}}, {{3, 1}, {4, 2}}};"),
              closed_path());
    EXPECT_EQ(parse_encoding("Q={{{1,1},{2,2}},{{2,2},{3,3}},{{3,3},{4,4}}};"), staircase3());
    EXPECT_EQ(parse_encoding("Q={{{1, 3}, {2, 4}}, {{2, 2}, {3, 3}}, {{2, 3}, {3, 4}}, {{2, 4}, {3, 5}}, \n"
                             "{{3, 4}, {4, 5}}, {{3, 3}, {4, 4}}, {{3, 2}, {4, 3}}, {{3, 1}, {4, 2}}, \n"
                             "{{3, 5}, {4, 6}}, {{4, 4}, {5, 5}}, {{4, 3}, {5, 4}}, {{5, 4}, {6, 5}}};"),
              convex12());
    EXPECT_EQ(parse_encoding("Q={{{3, 1}, {4, 2}}, {{3, 2}, {4, 3}}, {{4, 2}, {5, 3}}, {{4, 3}, {5, 4}},\n"
                             "{{4, 4}, {5, 5}}, {{5, 3}, {6, 4}}, {{3, 4}, {4, 5}}, {{2, 4}, {3, 5}},\n"
                             "{{2, 3}, {3, 4}}, {{2, 2}, {3, 3}}, {{1, 3}, {2, 4}}, {{3, 5}, {4, 6}}};"),
              figure5());
}

TEST(ParseEncoding, BracketStyleAndBareLists) {
    EXPECT_EQ(parse_encoding("[[[1,1],[2,2]]]"), single_cell());
    EXPECT_EQ(parse_encoding("  {{{1,1},{2,2}}}  "), single_cell());
    EXPECT_EQ(parse_encoding("cells = [[[0,0],[1,1]], [[-1,0],[0,1]]]"), cells({{0, 0}, {-1, 0}}));
    EXPECT_EQ(parse_encoding("{{{+1,1},{2,2}}}"), single_cell());
}

TEST(ParseEncoding, OrderOfCellsIsIrrelevant) {
    EXPECT_EQ(parse_encoding("{{{2,1},{3,2}},{{1,1},{2,2}}}"), parse_encoding("{{{1,1},{2,2}},{{2,1},{3,2}}}"));
}

TEST(ParseEncoding, Errors) {
    const char* bad[] = {
        "",
        "{}",
        "[]",
        "5",
        "{{{1,1},{3,3}}}",
        "{{{1,1},{2,3}}}",
        "{{{1,1}}}",
        "{{{1,1},{2,2},{3,3}}}",
        "{{{1,1,1},{2,2}}}",
        "{{{1,1},{2,2}}",
        "{{{1,1},{2,2}}}}",
        "{{{1,1},{2,2}}} extra",
        "{{{1,1},{2,2}}};;",
        "{{{1,1},{2,2]]]",
        "{{{1,1},{2,2}},}",
        "{{{a,1},{2,2}}}",
        "{{{1.5,1},{2,2}}}",
        "{{{-,1},{2,2}}}",
        "{{{99999999999999999999,1},{2,2}}}",
        "{{{1000000,1},{1000001,2}}}",
        "{{{1,1},{2,2}},{{1,1},{2,2}}}",
        "{{{{{{{{{{{1}}}}}}}}}}}",
    };
    for (const char* s : bad) EXPECT_THROW(parse_encoding(s), ParseError) << s;
}

TEST(ParseEncoding, ErrorMessagesCarryTheOffset) {
    try {
        parse_encoding("{{{1,1},{2,2}} x}");
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_NE(std::string(e.what()).find("offset"), std::string::npos) << e.what();
    }
}

TEST(ParseEncoding, DedupeDropsRepeatedCells) {
    ParseOptions opts;
    opts.dedupe = true;
    EXPECT_EQ(parse_encoding("{{{1,1},{2,2}},{{1,1},{2,2}},{{2,1},{3,2}}}", opts), cells({{1, 1}, {2, 1}}));
}

TEST(ParseEncoding, CoordinateBoundIsInclusive) {
    auto P = parse_encoding("{{{999999,999999},{1000000,1000000}}}");
    EXPECT_EQ(P.cells().front().a, (GridPoint{999999, 999999}));
}

TEST(RenderEncoding, Format) {
    EXPECT_EQ(render_encoding(cells({{2, 1}, {1, 1}})), "{{{1, 1}, {2, 2}}, {{2, 1}, {3, 2}}}");
}

TEST(RenderEncoding, RoundTrip) {
    for (const auto& P : {figure2(), figure3a(), closed_path(), convex12(), figure5(), staircase3()})
        EXPECT_EQ(parse_encoding(render_encoding(P)), P);
    std::mt19937_64 rng(8);
    for (int n = 0; n < 200; ++n) {
        auto P = random_subset(rng, 6, 0.4);
        EXPECT_EQ(parse_encoding(render_encoding(P)), P);
    }
}

TEST(ParsePoints, BothStyles) {
    EXPECT_EQ(parse_points("{{2,3}}"), (std::vector<GridPoint>{{2, 3}}));
    EXPECT_EQ(parse_points("[[2,3],[-1,4]]"), (std::vector<GridPoint>{{2, 3}, {-1, 4}}));
    EXPECT_TRUE(parse_points("[]").empty());
    EXPECT_THROW(parse_points("[[1]]"), ParseError);
    EXPECT_THROW(parse_points("7"), ParseError);
    EXPECT_THROW(parse_points("[[1,2]"), ParseError);
}
