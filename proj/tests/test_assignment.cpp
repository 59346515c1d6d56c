#include <vector>

#include "doctest.h"
#include "egoten/assignment.hpp"

using namespace egoten;

namespace {

Matrix mat(std::vector<std::vector<double>> rows) {
    Matrix m(rows.size(), rows.front().size());
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < rows[r].size(); ++c) m(r, c) = rows[r][c];
    return m;
}

}  // namespace

TEST_SUITE("assignment") {

TEST_CASE("hard_assign takes the argmax with ties to the lowest index") {
    Matrix c = mat({{0.2, 0.7, 0.1},   // -> 1
                    {0.5, 0.5, 0.0},   // tie -> 0
                    {0.0, 0.1, 0.9}}); // -> 2
    Cover cover = hard_assign(c);
    CHECK(cover.n_nodes == 3);
    REQUIRE(cover.size() == 3);
    CHECK(cover.communities[0] == std::vector<index_t>{1});
    CHECK(cover.communities[1] == std::vector<index_t>{0});
    CHECK(cover.communities[2] == std::vector<index_t>{2});
    CHECK(cover.is_disjoint_partition());
    REQUIRE(cover.soft.has_value());
    CHECK(*cover.soft == c);
}

TEST_CASE("hard_assign drops empty columns") {
    Matrix c = mat({{0.9, 0.1, 0.0}, {0.8, 0.2, 0.0}});
    Cover cover = hard_assign(c);
    CHECK(cover.size() == 1);
    CHECK(cover.communities[0] == std::vector<index_t>{0, 1});
}

TEST_CASE("identity memberships give singletons") {
    Matrix c = mat({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
    Cover cover = hard_assign(c);
    REQUIRE(cover.size() == 3);
    for (index_t k = 0; k < 3; ++k) CHECK(cover.communities[k] == std::vector<index_t>{k});
}

TEST_CASE("crisp_cover applies the strict threshold") {
    Matrix c = mat({{0.4, 0.4, 0.2}});
    Cover cover = crisp_cover(c, 1.0 / 3.0);
    REQUIRE(cover.size() == 2);
    CHECK(cover.communities[0] == std::vector<index_t>{0});
    CHECK(cover.communities[1] == std::vector<index_t>{0});

    // Exactly at tau is not a membership.
    Matrix d = mat({{0.5, 0.5}});
    Cover at = crisp_cover(d, 0.5);
    REQUIRE(at.size() == 1);  // fallback to argmax, column 0
    CHECK(at.communities[0] == std::vector<index_t>{0});
}

TEST_CASE("crisp_cover fallback versus strict mode") {
    // Nothing clears tau strictly (0.9 > 0.9 is false), so the default mode
    // falls back to per-row argmax while strict mode assigns nobody.
    Matrix c = mat({{0.5, 0.5}, {0.1, 0.9}});
    Cover fallback = crisp_cover(c, 0.9);
    REQUIRE(fallback.size() == 2);
    CHECK(fallback.communities[0] == std::vector<index_t>{0});
    CHECK(fallback.communities[1] == std::vector<index_t>{1});

    Cover strict = crisp_cover(c, 0.9, true);
    CHECK(strict.size() == 0);
    CHECK(strict.n_nodes == 2);
}

TEST_CASE("crisp_cover with tau zero includes every positive membership") {
    Matrix c = mat({{0.6, 0.4, 0.0}, {0.0, 1.0, 0.0}});
    Cover cover = crisp_cover(c, 0.0);
    REQUIRE(cover.size() == 2);
    CHECK(cover.communities[0] == std::vector<index_t>{0});
    CHECK(cover.communities[1] == std::vector<index_t>{0, 1});
}

TEST_CASE("crisp_cover validates tau") {
    Matrix c = mat({{1.0}});
    CHECK_THROWS_AS(crisp_cover(c, -0.1), ConfigError);
    CHECK_THROWS_AS(crisp_cover(c, 1.0), ConfigError);
    CHECK_THROWS_AS(crisp_cover(c, 1.5), ConfigError);
    CHECK_NOTHROW(crisp_cover(c, 0.0));
}

TEST_CASE("cover validation catches malformed communities") {
    Cover ok;
    ok.n_nodes = 3;
    ok.communities = {{0, 1}, {2}};
    CHECK_NOTHROW(ok.validate());
    CHECK(ok.is_disjoint_partition());

    Cover overlap = ok;
    overlap.communities = {{0, 1}, {1, 2}};
    CHECK_NOTHROW(overlap.validate());
    CHECK(!overlap.is_disjoint_partition());

    Cover partial = ok;
    partial.communities = {{0, 1}};
    CHECK(!partial.is_disjoint_partition());  // node 2 uncovered

    Cover out_of_range = ok;
    out_of_range.communities = {{0, 5}};
    CHECK_THROWS_AS(out_of_range.validate(), Error);

    Cover dup = ok;
    dup.communities = {{0, 0, 1}, {2}};
    CHECK_THROWS_AS(dup.validate(), Error);

    Cover empty_comm = ok;
    empty_comm.communities = {{}, {0, 1, 2}};
    CHECK_THROWS_AS(empty_comm.validate(), Error);
}

TEST_CASE("hard_assign equals singleton crisp assignment when unambiguous") {
    Matrix c = mat({{0.8, 0.2}, {0.3, 0.7}, {0.6, 0.4}});
    Cover hard = hard_assign(c);
    Cover crisp = crisp_cover(c, 0.5);
    REQUIRE(hard.size() == crisp.size());
    for (std::size_t k = 0; k < hard.size(); ++k)
        CHECK(hard.communities[k] == crisp.communities[k]);
}

TEST_CASE("argmax is scale invariant per row") {
    Matrix c = mat({{0.2, 0.3}, {0.6, 0.9}});  // row 1 = 3x row 0
    Cover cover = hard_assign(c);
    REQUIRE(cover.size() == 1);
    CHECK(cover.communities[0] == std::vector<index_t>{0, 1});
}

}  // TEST_SUITE
