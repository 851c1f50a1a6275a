#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "finsym/involutions.hpp"

using namespace finsym;

namespace {

std::vector<InvolutionStats> structural_stats(const Partition& nu) {
    std::vector<InvolutionStats> out;
    for (const auto& w : enumerate_involutions(nu)) out.push_back(w.stats);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<InvolutionStats> brute_stats(const Partition& nu) {
    std::vector<InvolutionStats> out;
    for (const auto& perm : brute_force_involutions(nu))
        out.push_back(stats_from_permutation(nu, perm));
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

TEST_CASE("small structural counts") {
    CHECK(enumerate_involutions(Partition({1, 1})).size() == 2);
    CHECK(enumerate_involutions(Partition({2})).size() == 2);
    CHECK(enumerate_involutions(Partition({2, 1})).size() == 2);
    CHECK(enumerate_involutions(Partition({1, 1, 1})).size() == 4);
    CHECK(enumerate_involutions(Partition{}).size() == 1);
    CHECK(brute_force_involutions(Partition({1})).size() == 1);
}

TEST_CASE("structural generator matches brute force for |nu| <= 6") {
    for (int n = 0; n <= 6; ++n)
        for (const auto& nu : partitions_of(n)) {
            CAPTURE(nu.to_string());
            CHECK(structural_stats(nu) == brute_stats(nu));
        }
}

TEST_CASE("per-involution structural invariants") {
    for (int n = 0; n <= 8; ++n)
        for (const auto& nu : partitions_of(n))
            enumerate_involutions(nu, {}, [&](const CentralizerInvolution& w) {
                const auto& s = w.stats;
                CHECK(s.l1 + s.l2 + s.l3 == nu.length());
                CHECK(s.l3 % 2 == 0);
                CHECK(s.l1_even + s.l1_odd == s.l1);
                CHECK(s.l2_0mod4 + s.l2_2mod4 == s.l2);
                CHECK(s.l3_even + s.l3_odd == s.l3);
                /* group-2 cycles always have even length */
                for (int j = 0; j < nu.length(); ++j)
                    if (w.partner[j] == j && w.shift[j] != 0) {
                        CHECK(nu.parts()[j] % 2 == 0);
                        CHECK(2 * w.shift[j] == nu.parts()[j]);
                    }
                /* involution conditions */
                for (int j = 0; j < nu.length(); ++j) {
                    CHECK(w.partner[w.partner[j]] == j);
                    CHECK(nu.parts()[w.partner[j]] == nu.parts()[j]);
                    CHECK((w.shift[j] + w.shift[w.partner[j]]) % nu.parts()[j] == 0);
                }
            });
}

TEST_CASE("filters") {
    CHECK(weighted_involution_sum(Partition({1}), {.no_fixed = true}, {}) == 0);
    CHECK(weighted_involution_sum(Partition({1, 1}), {.no_fixed = true}, {}) == 1);
    /* identity contributes (-2), half-rotation contributes 1 */
    CHECK(weighted_involution_sum(Partition({2}), {.no_odd_fixed = true}, {.base = -2}) == -1);
}

TEST_CASE("weighted sums") {
    CHECK(weighted_involution_sum(Partition({1, 1}), {}, {.neg_l2 = true}) == 2);
    CHECK(weighted_involution_sum(Partition({1}), {}, {.base = -2}) == -2);
}

TEST_CASE("signed families: examples") {
    CHECK(count_signed(Partition({1}), SignedFamily::Plus) == 2);
    CHECK(count_signed(Partition({2}), SignedFamily::Star) == 3);
    CHECK(count_signed(Partition({1, 1}), SignedFamily::Plus, 2) == 1);
    /* the star family on (1,1): only the swap qualifies */
    CHECK(count_signed(Partition({1, 1}), SignedFamily::Star) == 1);
}

TEST_CASE("plus-family count identity |signed| = sum 2^{l1} for |nu| <= 8") {
    for (int n = 0; n <= 8; ++n)
        for (const auto& nu : partitions_of(n)) {
            Int expected = weighted_involution_sum(nu, {}, {.base = 2});
            CHECK(count_signed(nu, SignedFamily::Plus) == expected);
        }
}

TEST_CASE("star-family count identity for |nu| <= 8") {
    for (int n = 0; n <= 8; ++n)
        for (const auto& nu : partitions_of(n)) {
            Int expected = weighted_involution_sum(nu, {.no_odd_fixed = true}, {.base = 2});
            CHECK(count_signed(nu, SignedFamily::Star) == expected);
        }
}

TEST_CASE("explicit signed enumeration agrees with the counting shortcut") {
    for (int n = 0; n <= 6; ++n)
        for (const auto& nu : partitions_of(n)) {
            for (auto family : {SignedFamily::Plus, SignedFamily::Star}) {
                Int listed = 0;
                enumerate_signed(nu, family, std::nullopt,
                                 [&](const SignedInvolution&) { ++listed; });
                CHECK(listed == count_signed(nu, family));
            }
            /* per signature class, and classes partition the plus family */
            Int by_class = 0;
            for (int d = -n; d <= n; ++d) {
                Int cls = 0;
                enumerate_signed(nu, SignedFamily::Plus, d,
                                 [&](const SignedInvolution& s) {
                                     CHECK(s.signature_d == d);
                                     ++cls;
                                 });
                CHECK(cls == count_signed(nu, SignedFamily::Plus, d));
                by_class += cls;
            }
            CHECK(by_class == count_signed(nu, SignedFamily::Plus));
        }
}

TEST_CASE("star family always has signature zero") {
    for (int n = 0; n <= 6; ++n)
        for (const auto& nu : partitions_of(n)) {
            CHECK(count_signed(nu, SignedFamily::Star, 1) == 0);
            CHECK(count_signed(nu, SignedFamily::Star, 0) ==
                  count_signed(nu, SignedFamily::Star));
        }
}

TEST_CASE("bounds") {
    CHECK_THROWS_AS(enumerate_involutions(Partition(std::vector<int>(15, 1))).size(),
                    std::domain_error);
    CHECK_THROWS_AS(brute_force_involutions(Partition({9})), std::domain_error);
}
