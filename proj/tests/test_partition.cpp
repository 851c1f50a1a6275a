#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "finsym/partition.hpp"

using namespace finsym;

TEST_CASE("construction validates") {
    CHECK_THROWS_AS(Partition({1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(Partition({2, 0}), std::invalid_argument);
    CHECK(Partition{}.empty());
    CHECK(Partition({3, 1}).size() == 4);
    CHECK(Partition({3, 1}).length() == 2);
    CHECK(Partition({3, 1}).part(1) == 3);
    CHECK(Partition({3, 1}).part(5) == 0);
}

TEST_CASE("text round trip") {
    CHECK(Partition::parse("[3,1]") == Partition({3, 1}));
    CHECK(Partition::parse("[]") == Partition{});
    CHECK(Partition::parse(" [ 2 , 2 ] ") == Partition({2, 2}));
    CHECK(Partition({3, 1}).to_string() == "[3,1]");
    CHECK(Partition{}.to_string() == "[]");
    CHECK_THROWS_AS(Partition::parse("3,1"), std::invalid_argument);
}

TEST_CASE("transpose examples and involutivity") {
    CHECK(transpose(Partition({3, 1})) == Partition({2, 1, 1}));
    CHECK(transpose(Partition{}) == Partition{});
    CHECK(transpose(Partition({2, 2})) == Partition({2, 2}));
    for (int n = 0; n <= 12; ++n)
        for (const auto& mu : partitions_of(n)) CHECK(transpose(transpose(mu)) == mu);
}

TEST_CASE("n_stat") {
    CHECK(n_stat(Partition({2, 1})) == 1);
    CHECK(n_stat(Partition({1, 1, 1})) == 3);
    CHECK(n_stat(Partition({7})) == 0);
    /* n(mu') = sum of C(mu_i, 2) */
    for (int n = 0; n <= 10; ++n)
        for (const auto& mu : partitions_of(n)) {
            long long rows = 0;
            for (int p : mu.parts()) rows += (long long)p * (p - 1) / 2;
            CHECK(n_stat(transpose(mu)) == rows);
        }
}

TEST_CASE("stats examples") {
    auto s = stats(Partition({1, 1}));
    CHECK(s.z == 2);
    CHECK(s.epsilon == 1);
    CHECK_FALSE(s.is_even);

    s = stats(Partition({2, 1}));
    CHECK(s.z == 2);
    CHECK(s.epsilon == -1);
    CHECK(s.length_even == 1);
    CHECK(s.length_odd == 1);

    s = stats(Partition({4, 2}));
    CHECK(s.is_even);
    CHECK(s.length_0mod4 == 1);
    CHECK(s.length_2mod4 == 1);
    CHECK(s.z == 8);
    CHECK(s.epsilon == 1);
}

TEST_CASE("evenness through multiplicities of the transpose") {
    for (int n = 0; n <= 12; ++n)
        for (const auto& mu : partitions_of(n))
            CHECK(is_even_partition(mu) == has_even_multiplicities(transpose(mu)));
}

TEST_CASE("enumeration order and counts") {
    auto p0 = partitions_of(0);
    REQUIRE(p0.size() == 1);
    CHECK(p0[0].empty());

    auto p3 = partitions_of(3);
    REQUIRE(p3.size() == 3);
    CHECK(p3[0] == Partition({3}));
    CHECK(p3[1] == Partition({2, 1}));
    CHECK(p3[2] == Partition({1, 1, 1}));

    CHECK(partitions_of(8).size() == 22);
    for (int n = 0; n <= 20; ++n) CHECK(Int(partitions_of(n).size()) == partition_count(n));
    CHECK_THROWS_AS(partitions_of(41), std::domain_error);
}
