#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "finsym/identities.hpp"

using namespace finsym;

TEST_CASE("registry") {
    auto names = identity_names();
    CHECK(names.size() == 11);
    CHECK(identity_takes_signature("glnglngln"));
    CHECK(identity_takes_signature("ununun"));
    CHECK_FALSE(identity_takes_signature("ff-inv"));
    CHECK_THROWS_AS(check_identity("no-such-identity", Partition({1})),
                    std::invalid_argument);
}

TEST_CASE("worked examples") {
    auto r = check_identity("ff-inv", Partition({1, 1}));
    CHECK(r.lhs == 1);
    CHECK(r.rhs == 1);
    CHECK(r.equal);

    r = check_identity("ff-inv", Partition({3}));
    CHECK(r.lhs == 0);
    CHECK(r.equal);

    r = check_identity("gln-on", Partition({1}));
    CHECK(r.lhs == -2);
    CHECK(r.equal);

    r = check_identity("glnglngln", Partition({1, 1}), 2);
    CHECK(r.lhs == 1);
    CHECK(r.equal);
}

TEST_CASE("closed forms on rectangles") {
    CHECK(multiplicative_closed_form(Partition({3, 3}), "ff-inv") == 3);
    CHECK(multiplicative_closed_form(Partition({2}), "ff-inv") == 1);
    CHECK(multiplicative_closed_form(Partition({3}), "ff-inv") == 0);
    CHECK(multiplicative_closed_form(Partition({2}), "macdonald-I8E11") == 0);
    CHECK(multiplicative_closed_form(Partition({2, 2}), "macdonald-I8E11") == 2);
    CHECK_THROWS_AS(multiplicative_closed_form(Partition({1}), "nope"),
                    std::invalid_argument);
}

TEST_CASE("closed forms are multiplicative over distinct part sizes") {
    for (const char* family : {"ff-inv", "macdonald-I8E11"})
        for (int n = 0; n <= 8; ++n)
            for (const auto& nu : partitions_of(n)) {
                Int prod = 1;
                for (auto [size, mult] : multiplicities(nu))
                    prod *= multiplicative_closed_form(
                        Partition(std::vector<int>(mult, size)), family);
                CAPTURE(family);
                CAPTURE(nu.to_string());
                CHECK(multiplicative_closed_form(nu, family) == prod);
            }
}

TEST_CASE("spot sweeps on small sizes") {
    /* the full-depth sweep lives in the acceptance binary; keep unit tests fast */
    for (const auto& name : identity_names())
        for (int n = 0; n <= 5; ++n)
            for (const auto& nu : partitions_of(n)) {
                CAPTURE(name);
                CAPTURE(nu.to_string());
                if (identity_takes_signature(name)) {
                    for (int d = -n; d <= n; ++d) {
                        auto r = check_identity(name, nu, d);
                        CAPTURE(d);
                        CHECK(r.lhs == r.rhs);
                    }
                } else {
                    auto r = check_identity(name, nu);
                    CHECK(r.lhs == r.rhs);
                }
            }
}
