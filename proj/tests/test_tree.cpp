#include <doctest.h>

#include "crossnest/multiset.hpp"
#include "crossnest/tree.hpp"
#include "oracles.hpp"

using namespace crossnest;

TEST_CASE("children of the smallest partitions") {
    CHECK(children(parse_partition("1")) ==
          std::vector<SetPartition>{parse_partition("1/2"), parse_partition("1,2")});
    CHECK(children(SetPartition{}) == std::vector<SetPartition>{parse_partition("1")});
}

TEST_CASE("children statistics of 1,2,5/3,4") {
    const auto kids = children(parse_partition("1,2,5/3,4"));
    REQUIRE(kids.size() == 3);
    MultiSet<std::pair<long long, long long>> stats;
    for (const SetPartition& c : kids) stats.add({cr(c), ne(c)});
    const MultiSet<std::pair<long long, long long>> expected{{0, 1}, {0, 1}, {1, 2}};
    CHECK(stats == expected);
}

TEST_CASE("a partition has k+1 children; child block counts") {
    for (int n = 0; n <= 8; ++n)
        for_each_partition(n, [&](const SetPartition& p) {
            const auto kids = children(p);
            CHECK(static_cast<int>(kids.size()) == p.block_count() + 1);
            CHECK(kids[0].block_count() == p.block_count() + 1);
            for (size_t i = 1; i < kids.size(); ++i)
                CHECK(kids[i].block_count() == p.block_count());
        });
}

TEST_CASE("parent inverts every child edge") {
    CHECK(parent(parse_partition("1,2")) == parse_partition("1"));
    CHECK(parent(parse_partition("1/2")) == parse_partition("1"));
    CHECK_THROWS_AS(parent(SetPartition{}), std::invalid_argument);

    for (int n = 1; n <= 8; ++n)
        for_each_partition(n, [&](const SetPartition& p) {
            const auto kids = children(parent(p));
            CHECK(std::find(kids.begin(), kids.end(), p) != kids.end());
        });
    for (int n = 0; n <= 6; ++n)
        for_each_partition(n, [&](const SetPartition& p) {
            for (const SetPartition& c : children(p)) CHECK(parent(c) == p);
        });
}

TEST_CASE("levels below the one-element partition count Bell numbers") {
    const auto bell = oracles::bell_numbers(8);
    const SetPartition one = parse_partition("1");
    for (int l = 0; l <= 7; ++l)
        CHECK(static_cast<long long>(level(one, l).size()) ==
              bell[static_cast<size_t>(l) + 1]);
}

TEST_CASE("level slices at depth 0 and 1") {
    const SetPartition lam = parse_partition("1,2,5/3,4");
    const int k = lam.block_count();
    CHECK(level_m(lam, 0, k) == std::vector<SetPartition>{lam});
    CHECK(level_m(lam, 1, k + 1) == std::vector<SetPartition>{children(lam)[0]});
}

TEST_CASE("a level slice is nonempty exactly for k <= m <= k+l") {
    for (int n = 1; n <= 6; ++n)
        for_each_partition(n, [&](const SetPartition& p) {
            const int k = p.block_count();
            for (int l = 0; l <= 3; ++l)
                for (int m = std::max(0, k - 1); m <= k + l + 1; ++m) {
                    const bool expect_nonempty = k <= m && m <= k + l;
                    CHECK(!level_m(p, l, m).empty() == expect_nonempty);
                }
        });
}

TEST_CASE("the first two children leave the statistics unchanged") {
    for (int n = 1; n <= 8; ++n)
        for_each_partition(n, [&](const SetPartition& p) {
            const auto kids = children(p);
            CHECK(cr(kids[0]) == cr(p));
            CHECK(cr(kids[1]) == cr(p));
            CHECK(ne(kids[0]) == ne(p));
            CHECK(ne(kids[1]) == ne(p));
            CHECK(al(kids[0]) == al(p));
        });
}

TEST_CASE("statistic distributions over levels") {
    const SetPartition lam35 = parse_partition("1,7/2,6/3,4/5,8");
    const MultiSet<GroupVec> level1 =
        stat_distribution(lam35, 1, std::nullopt, kAlpha, kBeta);
    const MultiSet<GroupVec> expected{{2, 3}, {2, 3}, {3, 3}, {4, 3}, {4, 4}};
    CHECK(level1 == expected);

    const MultiSet<GroupVec> level0 =
        stat_distribution(lam35, 0, std::nullopt, kAlpha, kBeta);
    CHECK(level0 == MultiSet<GroupVec>{{cr(lam35), ne(lam35)}});
}

TEST_CASE("swapped-statistic pair agrees level by level") {
    const SetPartition lam = parse_partition("1,2,5/3,4");
    const SetPartition pi = parse_partition("1,2,4/3,5");
    CHECK(stat(lam, kAlpha, kBeta) == stat(pi, kBeta, kAlpha));
    for (int l = 0; l <= 3; ++l)
        for (int m = lam.block_count(); m <= lam.block_count() + l; ++m)
            CHECK(stat_distribution(lam, l, m, kAlpha, kBeta) ==
                  stat_distribution(pi, l, m, kBeta, kAlpha));
}
