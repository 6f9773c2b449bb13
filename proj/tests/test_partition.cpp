#include <doctest.h>

#include <algorithm>
#include <set>

#include "partition.hpp"

using namespace nefcert;

namespace {

/* Independent counting oracle: p(n, max part <= cap), brute recursion. */
long long count_partitions(int n, int cap) {
    if (n == 0) return 1;
    long long total = 0;
    for (int p = std::min(n, cap); p >= 1; --p) total += count_partitions(n - p, p);
    return total;
}

std::vector<int> parts(std::initializer_list<int> init) { return std::vector<int>(init); }

}  // namespace

TEST_CASE("partition construction and validation") {
    Partition p(parts({2, 4, 3, 1}));
    CHECK(p.parts() == parts({4, 3, 2, 1}));
    CHECK(p.n() == 10);
    CHECK(p.length() == 4);
    CHECK(p.is_strict());
    CHECK_FALSE(Partition(parts({2, 2, 1})).is_strict());
    CHECK_THROWS_AS(Partition({}), std::invalid_argument);
    CHECK_THROWS_AS(Partition(parts({3, 0})), std::invalid_argument);
}

TEST_CASE("partition string round trip") {
    CHECK(Partition::from_string("4,3,2,1").parts() == parts({4, 3, 2, 1}));
    CHECK(Partition(parts({4, 3, 2, 1})).to_string() == "4,3,2,1");
    CHECK(Partition::from_string("2,2,2").to_string() == "2,2,2");
    CHECK_THROWS_AS(Partition::from_string("3,4"), std::invalid_argument);
    CHECK_THROWS_AS(Partition::from_string("4,,3"), std::invalid_argument);
    CHECK_THROWS_AS(Partition::from_string(""), std::invalid_argument);
    CHECK_THROWS_AS(Partition::from_string("0"), std::invalid_argument);
}

TEST_CASE("partitions_of enumerates strict partitions of 6") {
    auto strict = partitions_of(6, PartitionFilter::Strict);
    REQUIRE(strict.size() == 4);
    CHECK(strict[0].parts() == parts({6}));
    CHECK(strict[1].parts() == parts({5, 1}));
    CHECK(strict[2].parts() == parts({4, 2}));
    CHECK(strict[3].parts() == parts({3, 2, 1}));

    // cross-check: filtering the full list gives the same set
    auto all = partitions_of(6);
    CHECK(all.size() == 11);
    std::vector<Partition> filtered;
    for (const auto& p : all)
        if (p.is_strict()) filtered.push_back(p);
    CHECK(filtered == strict);
}

TEST_CASE("partitions_of base cases and ordering") {
    auto one = partitions_of(1);
    REQUIRE(one.size() == 1);
    CHECK(one[0].parts() == parts({1}));

    auto all9 = partitions_of(9);
    CHECK(std::is_sorted(all9.begin(), all9.end(),
                         [](const Partition& a, const Partition& b) { return b < a; }));
    std::set<std::vector<int>> distinct;
    for (const auto& p : all9) distinct.insert(p.parts());
    CHECK(distinct.size() == all9.size());
}

TEST_CASE("partition counts match the independent oracle") {
    for (int n = 1; n <= 26; ++n) {
        CHECK(static_cast<long long>(partitions_of(n).size()) == count_partitions(n, n));
        long long strict_brute = 0;
        for (const auto& p : partitions_of(n))
            if (p.is_strict()) ++strict_brute;
        CHECK(static_cast<long long>(partitions_of(n, PartitionFilter::Strict).size()) ==
              strict_brute);
    }
    CHECK(partitions_of(35).size() == 14883);  // A000041
}

TEST_CASE("partitions_of_length") {
    auto l3 = partitions_of_length(10, 3);
    for (const auto& p : l3) CHECK(p.length() == 3);
    long long brute = 0;
    for (const auto& p : partitions_of(10))
        if (p.length() == 3) ++brute;
    CHECK(static_cast<long long>(l3.size()) == brute);
    CHECK(partitions_of_length(5, 7).empty());
}

TEST_CASE("strict partitions of 35 have length at most 7") {
    auto strict = partitions_of(35, PartitionFilter::Strict);
    int max_len = 0;
    for (const auto& p : strict) max_len = std::max(max_len, p.length());
    CHECK(max_len == 7);
    CHECK(max_strict_length(35) == 7);
}

TEST_CASE("merge_equal_pair") {
    CHECK(merge_equal_pair(Partition(parts({2, 2, 1, 1})), 1).parts() == parts({2, 2, 2}));
    CHECK(merge_equal_pair(Partition(parts({5, 3, 2, 2})), 2).parts() == parts({5, 4, 3}));
    CHECK(merge_equal_pair(Partition(parts({1, 1, 1, 1})), 1).parts() == parts({2, 1, 1}));
    CHECK_THROWS_AS(merge_equal_pair(Partition(parts({4, 2})), 2), std::invalid_argument);
}

TEST_CASE("merge preserves sum and drops length by one") {
    for (const auto& p : partitions_of(12)) {
        for (int v = 1; v <= 6; ++v) {
            if (p.multiplicity(v) < 2) continue;
            Partition merged = merge_equal_pair(p, v);
            CHECK(merged.n() == p.n());
            CHECK(merged.length() == p.length() - 1);
        }
    }
}

TEST_CASE("reduction_path policy and endpoints") {
    CHECK(reduction_path(Partition(parts({4, 2}))).steps.empty());

    auto path = reduction_path(Partition(parts({2, 2, 1, 1})));
    REQUIRE(path.steps.size() == 2);
    // largest repeated value merges first
    CHECK(path.steps[0].from.parts() == parts({2, 2, 1, 1}));
    CHECK(path.steps[0].merged_value == 2);
    CHECK(path.steps[1].from.parts() == parts({4, 1, 1}));
    CHECK(path.steps[1].merged_value == 1);
    CHECK(path.endpoint.parts() == parts({4, 2}));
    CHECK(path.endpoint.is_strict());
    CHECK(path.endpoint.n() == 6);

    auto ones = reduction_path(Partition(parts({1, 1, 1, 1})));
    CHECK(ones.endpoint.parts() == parts({4}));
    CHECK(ones.steps.size() == 3);
}

TEST_CASE("reduction_path steps are valid merges ending strict") {
    for (const auto& p : partitions_of(14)) {
        auto path = reduction_path(p);
        Partition cur = p;
        for (const auto& step : path.steps) {
            CHECK(step.from == cur);
            cur = merge_equal_pair(cur, step.merged_value);
        }
        CHECK(cur == path.endpoint);
        CHECK(cur.is_strict());
        CHECK(cur.n() == p.n());
        CHECK(static_cast<int>(path.steps.size()) == p.length() - cur.length());
    }
}

TEST_CASE("max_strict_length") {
    CHECK(max_strict_length(35) == 7);
    CHECK(max_strict_length(36) == 8);
    CHECK(max_strict_length(1) == 1);
    CHECK(max_strict_length(2) == 1);
    CHECK(max_strict_length(3) == 2);

    for (int n = 1; n <= 200; ++n) {
        int k = max_strict_length(n);
        CHECK(static_cast<long long>(k) * (k + 1) / 2 <= n);
        CHECK(static_cast<long long>(k + 1) * (k + 2) / 2 > n);
        // witness attaining the bound: staircase with the excess on top
        std::vector<int> staircase;
        for (int i = k; i >= 1; --i) staircase.push_back(i);
        staircase[0] += n - k * (k + 1) / 2;
        Partition witness(staircase);
        CHECK(witness.n() == n);
        CHECK(witness.is_strict());
        CHECK(witness.length() == k);
    }
    // exhaustive equality check in a small range
    for (int n = 1; n <= 30; ++n) {
        int longest = 0;
        for (const auto& p : partitions_of(n, PartitionFilter::Strict))
            longest = std::max(longest, p.length());
        CHECK(longest == max_strict_length(n));
    }
}

TEST_CASE("conjecture_bound") {
    CHECK(conjecture_bound(7) == 35);
    CHECK(conjecture_bound(6) == 27);
    CHECK(conjecture_bound(4) == 14);
    CHECK_THROWS_AS(conjecture_bound(2), std::invalid_argument);
}

TEST_CASE("four_quads") {
    auto q4 = four_quads(4);
    REQUIRE(q4.size() == 1);
    CHECK(q4[0] == FQuad{{1, 1, 1, 1}});

    auto q6 = four_quads(6);
    REQUIRE(q6.size() == 2);
    CHECK(q6[0] == FQuad{{3, 1, 1, 1}});
    CHECK(q6[1] == FQuad{{2, 2, 1, 1}});

    auto q10 = four_quads(10);
    CHECK(std::find(q10.begin(), q10.end(), FQuad{{4, 3, 2, 1}}) != q10.end());

    CHECK_THROWS_AS(four_quads(3), std::invalid_argument);
}

TEST_CASE("four_quads is complete and duplicate-free") {
    for (int n = 4; n <= 20; ++n) {
        std::set<std::array<int, 4>> brute;
        for (int a = 1; a < n; ++a)
            for (int b = 1; b < n; ++b)
                for (int c = 1; c < n; ++c) {
                    int d = n - a - b - c;
                    if (d < 1) continue;
                    std::array<int, 4> q{a, b, c, d};
                    std::sort(q.begin(), q.end(), std::greater<int>());
                    brute.insert(q);
                }
        auto quads = four_quads(n);
        CHECK(quads.size() == brute.size());
        for (const auto& q : quads) {
            CHECK(brute.count(q.q) == 1);
            CHECK(q.n() == n);
            CHECK(std::is_sorted(q.q.begin(), q.q.end(), std::greater<int>()));
        }
    }
}
