#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "combrank/setpartition.hpp"
#include "oracles.hpp"

using namespace combrank;

namespace {

const std::vector<std::vector<long long>> kDTable6 = {
    {203, 151, 77, 26, 6, 1}, {52, 37, 17, 5, 1}, {15, 10, 4, 1}, {5, 3, 1}, {2, 1}, {1}};

// "(1, 4, 5)(2, 3)" -> restricted growth string, groups in listed order
std::vector<int> parse_stylized(const std::string& text, int n) {
    std::vector<int> blocks(n, -1);
    int group = -1;
    std::string number;
    for (char c : text) {
        if (c == '(') {
            ++group;
        } else if (c >= '0' && c <= '9') {
            number += c;
        } else if (c == ',' || c == ')') {
            if (!number.empty()) {
                blocks.at(std::stoi(number) - 1) = group;
                number.clear();
            }
        }
    }
    return blocks;
}

}  // namespace

TEST_CASE("d-matrix golden table n=6") {
    const DMatrix d(6);
    CHECK(d.size() == 6);
    for (int u = 0; u < 6; ++u)
        for (int v = 0; u + v <= 5; ++v) CHECK(d.entry(u, v) == kDTable6[u][v]);
    CHECK_THROWS_AS(d.entry(3, 3), std::out_of_range);
    CHECK_THROWS_AS(d.entry(-1, 0), std::out_of_range);
}

TEST_CASE("d-matrix small and derived entries") {
    const DMatrix d1(1);
    CHECK(d1.entry(0, 0) == 1);

    const DMatrix d5(5);
    CHECK(d5.entry(0, 2) == 17);  // (B5-B4) - 2(B4-B3) with B3=5, B4=15, B5=52
    CHECK_THROWS_AS(DMatrix(0), std::invalid_argument);
}

TEST_CASE("d-matrix rows and columns encode the tree node expressions") {
    // first three levels of the n=5 tree, nodes numbered top-down
    const Count b3 = 5, b4 = 15, b5 = 52;
    const DMatrix d(5);
    CHECK(d.entry(0, 0) == b5);                             // node 1
    CHECK(d.entry(1, 0) == b4);                             // node 2
    CHECK(d.entry(0, 1) == b5 - b4);                        // node 3
    CHECK(d.entry(2, 0) == b3);                             // node 4
    CHECK(d.entry(1, 1) == b4 - b3);                        // nodes 5-7
    CHECK(d.entry(0, 2) == (b5 - b4) - 2 * (b4 - b3));      // node 8
}

TEST_CASE("d-matrix recurrence, bell column and entry count") {
    for (int n = 1; n <= 10; ++n) {
        const DMatrix d(n);
        CHECK(d.entry(0, 0) == bell(n));
        int entries = 0;
        for (int u = 0; u < n; ++u)
            for (int v = 0; u + v <= n - 1; ++v) {
                ++entries;
                CHECK(d.entry(u, v) > 0);
                if (v == 0) {
                    CHECK(d.entry(u, 0) == bell(n - u));
                } else {
                    // descendant law: parent minus v siblings of the next level
                    CHECK(d.entry(u, v) == d.entry(u, v - 1) - v * d.entry(u + 1, v - 1));
                }
            }
        CHECK(entries == n * (n + 1) / 2);
    }
}

TEST_CASE("counting") {
    CHECK(count_setpartitions(1) == 1);
    CHECK(count_setpartitions(5) == 52);
    CHECK(count_setpartitions(6) == 203);
    CHECK_THROWS_AS(count_setpartitions(0), std::invalid_argument);
}

TEST_CASE("worked example serial 26 of n=5") {
    const std::vector<int> blocks = {0, 1, 1, 0, 0};
    CHECK(unrank_setpartition(26, 5) == blocks);
    CHECK(rank_setpartition(blocks) == 26);
    CHECK(stylize(blocks) == "(1, 4, 5)(2, 3)");
}

TEST_CASE("first and last serials") {
    for (int n : {1, 3, 5, 7}) {
        CHECK(unrank_setpartition(1, n) == std::vector<int>(n, 0));
        CHECK(rank_setpartition(std::vector<int>(n, 0)) == 1);
    }
    std::vector<int> singletons = {0, 1, 2, 3, 4};
    CHECK(unrank_setpartition(52, 5) == singletons);
    CHECK(rank_setpartition(singletons) == 52);
}

TEST_CASE("stylized output") {
    CHECK(stylize({0, 0, 0}) == "(1, 2, 3)");
    CHECK(stylize({0, 1, 2}) == "(1)(2)(3)");
    CHECK(stylize({0}) == "(1)");
}

TEST_CASE("stylize lists every element once and parses back") {
    for (const auto& blocks : oracles::all_rgs(6)) {
        const std::string text = stylize(blocks);
        std::vector<bool> seen(6, false);
        std::string number;
        for (char c : text) {
            if (c >= '0' && c <= '9') {
                number += c;
            } else if (!number.empty()) {
                const int e = std::stoi(number);
                number.clear();
                REQUIRE(e >= 1);
                REQUIRE(e <= 6);
                CHECK_FALSE(seen[e - 1]);
                seen[e - 1] = true;
            }
        }
        CHECK(std::all_of(seen.begin(), seen.end(), [](bool b) { return b; }));
        CHECK(parse_stylized(text, 6) == blocks);
    }
}

TEST_CASE("input validation") {
    CHECK_THROWS_AS(unrank_setpartition(0, 5), std::out_of_range);
    CHECK_THROWS_AS(unrank_setpartition(53, 5), std::out_of_range);
    CHECK_THROWS_AS(rank_setpartition({1, 0, 0}), std::invalid_argument);   // must start at 0
    CHECK_THROWS_AS(rank_setpartition({0, 2, 0}), std::invalid_argument);   // skipped index 1
    CHECK_THROWS_AS(rank_setpartition({0, -1}), std::invalid_argument);
    CHECK_THROWS_AS(rank_setpartition({}), std::invalid_argument);
    CHECK_THROWS_AS(rank_setpartition({0, 1}, DMatrix(3)), std::invalid_argument);
}

TEST_CASE("round trip and bijection against independent enumeration") {
    for (int n = 1; n <= 7; ++n) {
        const DMatrix d(n);
        const long count = count_setpartitions(n).convert_to<long>();

        for (long s = 1; s <= count; ++s) {
            const auto blocks = unrank_setpartition(s, d);
            CHECK(rank_setpartition(blocks, d) == s);
        }

        const auto all = oracles::all_rgs(n);
        REQUIRE(static_cast<long>(all.size()) == count);
        std::vector<bool> hit(count, false);
        for (const auto& blocks : all) {
            const long idx = rank_setpartition(blocks, d).convert_to<long>() - 1;
            REQUIRE(idx >= 0);
            REQUIRE(idx < count);
            CHECK_FALSE(hit[idx]);
            hit[idx] = true;
            CHECK(unrank_setpartition(idx + 1, d) == blocks);
        }
    }
}
