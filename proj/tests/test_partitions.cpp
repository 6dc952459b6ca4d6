#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <permspectra/partitions.hpp>

using namespace permspectra;

namespace {

// Independent tableau counter used as the dimension oracle.
Int count_syt(const std::vector<int>& shape, std::vector<int>& fill, int placed, int n) {
    if (placed == n) return 1;
    Int total = 0;
    for (std::size_t r = 0; r < shape.size(); ++r)
        if (fill[r] < shape[r] && (r == 0 || fill[r] < fill[r - 1])) {
            ++fill[r];
            total += count_syt(shape, fill, placed + 1, n);
            --fill[r];
        }
    return total;
}

Int count_syt(const Partition& alpha) {
    std::vector<int> fill(alpha.num_parts(), 0);
    return count_syt(alpha.parts(), fill, 0, alpha.n());
}

}  // namespace

TEST_CASE("validation and accessors") {
    Partition p({3, 2, 2});
    CHECK(p.n() == 7);
    CHECK(p.num_parts() == 3);
    CHECK(p.first_part() == 3);
    CHECK(p.multiplicity(2) == 2);
    CHECK(p.ones() == 0);
    CHECK(Partition({3, 1, 1}).ones() == 2);
    CHECK_THROWS(Partition({2, 3}));
    CHECK_THROWS(Partition({3, 0}));
    CHECK_THROWS(Partition({-1}));
}

TEST_CASE("string round trip") {
    CHECK(Partition({3, 2, 2}).to_string() == "[3,2,2]");
    CHECK(Partition::from_string("[3,2,2]") == Partition({3, 2, 2}));
    CHECK(Partition::from_string("[1]") == Partition({1}));
    CHECK(Partition().to_string() == "[]");
}

TEST_CASE("canonical order starts at the full row and ends at the column") {
    for (int n = 1; n <= 9; ++n) {
        auto ps = partitions_of(n);
        CHECK(ps.front() == Partition({n}));
        CHECK(ps.back() == Partition(std::vector<int>(n, 1)));
        for (std::size_t i = 1; i < ps.size(); ++i) CHECK(ps[i - 1] < ps[i]);
        CHECK(Int(ps.size()) == partition_count(n));
    }
    CHECK(partition_count(7) == 15);
    CHECK(partition_count(50) == 204226);
}

TEST_CASE("conjugation is an involution and transposes the diagram") {
    CHECK(Partition({3, 2, 2}).conjugate() == Partition({3, 3, 1}));
    CHECK(Partition({4}).conjugate() == Partition({1, 1, 1, 1}));
    for (const auto& p : partitions_of(8)) {
        CHECK(p.conjugate().conjugate() == p);
        CHECK(p.conjugate().n() == p.n());
    }
}

TEST_CASE("hook lengths") {
    auto h = hook_lengths(Partition({3, 2, 2}));
    std::vector<std::vector<int>> expected = {{5, 4, 1}, {3, 2}, {2, 1}};
    CHECK(h.rows == expected);
    auto single = hook_lengths(Partition({4}));
    CHECK(single.rows == std::vector<std::vector<int>>{{4, 3, 2, 1}});
}

TEST_CASE("dimension against tableau enumeration") {
    CHECK(dimension(Partition({3, 2, 2})) == 21);
    CHECK(dimension(Partition({5})) == 1);
    CHECK(dimension(Partition({1, 1, 1, 1})) == 1);
    CHECK(dimension(Partition({4, 1})) == 4);
    for (int n = 1; n <= 7; ++n) {
        Int sum_sq = 0;
        for (const auto& p : partitions_of(n)) {
            Int d = dimension(p);
            CHECK(d == count_syt(p));
            CHECK(d == dimension(p.conjugate()));
            sum_sq += d * d;
        }
        CHECK(sum_sq == factorial(n));
    }
}

TEST_CASE("semistandard filling counts") {
    // same shape and content: exactly the superstandard filling
    for (const auto& p : partitions_of(6)) CHECK(kostka(p, p) == 1);
    // full row shape: any content admits exactly one weakly increasing row
    for (const auto& b : partitions_of(6)) CHECK(kostka(Partition({6}), b) == 1);
    CHECK(kostka(Partition({2, 1}), Partition({1, 1, 1})) == 2);
    CHECK(kostka(Partition({3, 1}), Partition({2, 1, 1})) == 2);
    CHECK(kostka(Partition({2, 2}), Partition({2, 1, 1})) == 1);
    CHECK(kostka(Partition({2, 2}), Partition({1, 1, 1, 1})) == 2);
    // dominance: zero when the content is strictly above the shape
    CHECK(kostka(Partition({2, 2}), Partition({3, 1})) == 0);
    CHECK(kostka(Partition({1, 1, 1}), Partition({2, 1})) == 0);
}

TEST_CASE("first-row-heavy partitions") {
    auto fats = fat_partitions(5, 1);
    CHECK(fats == std::vector<Partition>{Partition({5}), Partition({4, 1})});
    auto fats2 = fat_partitions(5, 2);
    CHECK(fats2.size() == 4);
    for (const auto& p : fats2) CHECK(p.first_part() >= 3);
    // t = n keeps everything
    CHECK(fat_partitions(4, 4).size() == partitions_of(4).size());
}

TEST_CASE("compositions normalize or vanish") {
    Composition c({2, 0, 3, 2}, 7);
    auto p = normalize_composition(c);
    REQUIRE(p.has_value());
    CHECK(*p == Partition({3, 2, 2}));
    Composition neg({3, -1, 5}, 7);
    CHECK(!normalize_composition(neg).has_value());
}
