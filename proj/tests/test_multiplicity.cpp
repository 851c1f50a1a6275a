#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "finsym/multiplicity.hpp"

using namespace finsym;

namespace {

/* every valid case for the given n, covering all splits and both epsilons */
std::vector<SymmetricSpaceCase> cases_for(int n) {
    std::vector<SymmetricSpaceCase> out;
    for (int k = 0; k <= n; ++k) {
        out.push_back(SymmetricSpaceCase::make(CaseKind::GlGlGl, n, k, n - k));
        out.push_back(SymmetricSpaceCase::make(CaseKind::UUU, n, k, n - k));
    }
    if (n % 2 == 0) {
        out.push_back(SymmetricSpaceCase::make(CaseKind::GlSp, n));
        out.push_back(SymmetricSpaceCase::make(CaseKind::USp, n));
        out.push_back(SymmetricSpaceCase::make(CaseKind::GlGl2, n));
        out.push_back(SymmetricSpaceCase::make(CaseKind::UU4, n));
        for (int eps : {1, -1}) {
            out.push_back(SymmetricSpaceCase::make(CaseKind::GlOpm, n, 0, 0, eps));
            out.push_back(SymmetricSpaceCase::make(CaseKind::UOpm, n, 0, 0, eps));
        }
    } else {
        out.push_back(SymmetricSpaceCase::make(CaseKind::GlO, n));
        out.push_back(SymmetricSpaceCase::make(CaseKind::UO, n));
    }
    return out;
}

Int unipotent_via_engine(const SymmetricSpaceCase& c, const Partition& rho) {
    auto table = make_abstract_table(c.twist(), {{OrbitTag::One, 1, 1}});
    MultiPartition mp;
    mp.table = &table;
    if (!rho.empty()) mp.assign[0] = rho;
    return multiplicity(c, mp);
}

}  // namespace

TEST_CASE("case construction and keys") {
    CHECK_THROWS_AS(SymmetricSpaceCase::make(CaseKind::GlSp, 3), std::invalid_argument);
    CHECK_THROWS_AS(SymmetricSpaceCase::make(CaseKind::GlO, 2), std::invalid_argument);
    CHECK_THROWS_AS(SymmetricSpaceCase::make(CaseKind::GlGlGl, 3, 1, 1),
                    std::invalid_argument);
    CHECK_THROWS_AS(SymmetricSpaceCase::make(CaseKind::GlOpm, 2, 0, 0, 2),
                    std::invalid_argument);
    CHECK_THROWS_AS(SymmetricSpaceCase::make(CaseKind::GlSp, 2, 0, 0, 1, true),
                    std::invalid_argument);
    for (auto kind : {CaseKind::GlSp, CaseKind::USp, CaseKind::GlGlGl, CaseKind::GlGl2,
                      CaseKind::UUU, CaseKind::UU4, CaseKind::GlO, CaseKind::GlOpm,
                      CaseKind::UO, CaseKind::UOpm})
        CHECK(SymmetricSpaceCase::kind_from_key(SymmetricSpaceCase::key(kind)) == kind);
    CHECK_THROWS_AS(SymmetricSpaceCase::kind_from_key("bogus"), std::invalid_argument);
    CHECK(SymmetricSpaceCase::make(CaseKind::GlSp, 2).twist() == Twist::Split);
    CHECK(SymmetricSpaceCase::make(CaseKind::UO, 1).twist() == Twist::Nonsplit);
}

TEST_CASE("unipotent closed-form values") {
    auto u = [](CaseKind k, int n, const Partition& rho, int eps = 1) {
        return unipotent_multiplicity(SymmetricSpaceCase::make(k, n, 0, 0, eps), rho);
    };
    CHECK(u(CaseKind::GlSp, 4, Partition({2, 2})) == 1);
    CHECK(u(CaseKind::GlSp, 4, Partition({3, 1})) == 0);
    CHECK(u(CaseKind::GlSp, 4, Partition({4})) == 1);
    CHECK(u(CaseKind::GlO, 1, Partition({1})) == 1);
    CHECK(u(CaseKind::UU4, 4, Partition({2, 2})) == 3);
    CHECK(u(CaseKind::UO, 3, Partition({3})) == 1);
    /* rho' even: the two epsilon branches straddle the half-integer */
    CHECK(u(CaseKind::GlOpm, 2, Partition({1, 1}), 1) == 2);
    CHECK(u(CaseKind::GlOpm, 2, Partition({1, 1}), -1) == 1);
    /* rho' not even: both branches equal */
    CHECK(u(CaseKind::GlOpm, 2, Partition({2}), 1) == 1);
    CHECK(u(CaseKind::GlOpm, 2, Partition({2}), -1) == 1);
    CHECK(u(CaseKind::UOpm, 2, Partition({1, 1}), 1) == 1);
    CHECK(u(CaseKind::UOpm, 2, Partition({1, 1}), -1) == 0);
    CHECK(u(CaseKind::UOpm, 2, Partition({2}), 1) == 1);
    CHECK(u(CaseKind::UOpm, 2, Partition({2}), -1) == 1);
    CHECK_THROWS_AS(u(CaseKind::GlSp, 4, Partition({2, 1})), std::invalid_argument);
}

TEST_CASE("unipotent closed forms agree with the engine for n <= 6") {
    for (int n = 1; n <= 6; ++n)
        for (const auto& c : cases_for(n))
            for (const auto& rho : partitions_of(n)) {
                CAPTURE(SymmetricSpaceCase::key(c.kind));
                CAPTURE(rho.to_string());
                CHECK(unipotent_multiplicity(c, rho) == unipotent_via_engine(c, rho));
            }
}

TEST_CASE("epsilon branches differ by one exactly when rho' is even") {
    for (auto kind : {CaseKind::GlOpm, CaseKind::UOpm})
        for (int n = 2; n <= 8; n += 2)
            for (const auto& rho : partitions_of(n)) {
                Int plus = unipotent_multiplicity(SymmetricSpaceCase::make(kind, n, 0, 0, 1), rho);
                Int minus = unipotent_multiplicity(SymmetricSpaceCase::make(kind, n, 0, 0, -1), rho);
                CAPTURE(rho.to_string());
                if (is_even_partition(transpose(rho)))
                    CHECK(plus - minus == 1);
                else
                    CHECK(plus == minus);
            }
}

TEST_CASE("signature classes of the two-factor case sum to the tableau total") {
    for (int n = 1; n <= 8; ++n)
        for (const auto& rho : partitions_of(n)) {
            Int total = 0;
            for (int k = 0; k <= n; ++k)
                total += unipotent_multiplicity(
                    SymmetricSpaceCase::make(CaseKind::GlGlGl, n, k, n - k), rho);
            CHECK(total == prod_mult_plus_one(transpose(rho)));
        }
}

TEST_CASE("dual-pair mismatch kills inner cases") {
    auto table = make_abstract_table(Twist::Split,
                                     {{OrbitTag::One, 1, 1}, {OrbitTag::DualPair, 1, -1}});
    MultiPartition rho;
    rho.table = &table;
    rho.assign[1] = Partition({2});
    rho.assign[2] = Partition({1, 1});
    auto c = SymmetricSpaceCase::make(CaseKind::GlGlGl, 4, 2, 2);
    CHECK(multiplicity(c, rho) == 0);
    CHECK(basic_character_multiplicity(c, rho, Route::Involution) == 0);
    CHECK(basic_character_multiplicity(c, rho, Route::Character) == 0);
}

TEST_CASE("route agreement on unipotent labels, n <= 4") {
    for (int n = 1; n <= 4; ++n)
        for (const auto& c : cases_for(n)) {
            auto table = make_abstract_table(c.twist(), {{OrbitTag::One, 1, 1}});
            for (const auto& nu : partitions_of(n)) {
                MultiPartition mp;
                mp.table = &table;
                mp.assign[0] = nu;
                CAPTURE(SymmetricSpaceCase::key(c.kind));
                CAPTURE(nu.to_string());
                Int inv = basic_character_multiplicity(c, mp, Route::Involution);
                Int chr = basic_character_multiplicity(c, mp, Route::Character);
                CHECK(inv == chr);
            }
        }
}

TEST_CASE("route agreement pinned values") {
    auto split = make_abstract_table(Twist::Split, {{OrbitTag::One, 1, 1}});
    MultiPartition nu;
    nu.table = &split;
    nu.assign[0] = Partition({1, 1});
    auto c = SymmetricSpaceCase::make(CaseKind::GlSp, 2);
    CHECK(basic_character_multiplicity(c, nu, Route::Involution) == 1);
    CHECK(basic_character_multiplicity(c, nu, Route::Character) == 1);

    nu.assign[0] = Partition({1});
    auto o = SymmetricSpaceCase::make(CaseKind::GlO, 1);
    CHECK(basic_character_multiplicity(o, nu, Route::Involution) == 1);
    CHECK(basic_character_multiplicity(o, nu, Route::Character) == 1);
}

TEST_CASE("route agreement on a mixed two-orbit support") {
    auto table = make_abstract_table(Twist::Split,
                                     {{OrbitTag::One, 1, 1}, {OrbitTag::MinusOne, 1, -1}});
    for (int a = 1; a <= 3; ++a)
        for (int b = 1; a + b <= 4; ++b)
            for (const auto& pa : partitions_of(a))
                for (const auto& pb : partitions_of(b)) {
                    MultiPartition nu;
                    nu.table = &table;
                    nu.assign[0] = pa;
                    nu.assign[1] = pb;
                    for (const auto& c : cases_for(a + b)) {
                        if (c.twist() != Twist::Split) continue;
                        CAPTURE(SymmetricSpaceCase::key(c.kind));
                        CAPTURE(pa.to_string());
                        CAPTURE(pb.to_string());
                        CHECK(basic_character_multiplicity(c, nu, Route::Involution) ==
                              basic_character_multiplicity(c, nu, Route::Character));
                    }
                }
}

TEST_CASE("special orthogonal branch sum at q=3") {
    auto table = enumerate_orbits(3, Twist::Split, 1);
    int one = -1, minus = -1;
    for (size_t i = 0; i < table.orbits.size(); ++i) {
        if (table.orbits[i].tag == OrbitTag::One) one = (int)i;
        if (table.orbits[i].tag == OrbitTag::MinusOne) minus = (int)i;
    }
    REQUIRE(one >= 0);
    REQUIRE(minus >= 0);

    auto c = SymmetricSpaceCase::make(CaseKind::GlO, 1, 0, 0, 1, true);
    MultiPartition rho;
    rho.table = &table;
    rho.assign[one] = Partition({1});
    /* SO_1 is trivial, so every linear character of GL_1 has invariants 1 */
    CHECK(so_multiplicity(c, rho) == 1);
    auto twisted = zeta_twist(rho);
    CHECK(so_multiplicity(c, twisted) == 1);
    CHECK(so_multiplicity(c, rho) ==
          multiplicity(c, rho) + multiplicity(c, twisted));

    CHECK_THROWS_AS(so_multiplicity(SymmetricSpaceCase::make(CaseKind::GlSp, 2), rho),
                    std::invalid_argument);
}

TEST_CASE("compatibility errors") {
    auto split = make_abstract_table(Twist::Split, {{OrbitTag::One, 1, 1}});
    MultiPartition rho;
    rho.table = &split;
    rho.assign[0] = Partition({1, 1});
    CHECK_THROWS_AS(multiplicity(SymmetricSpaceCase::make(CaseKind::USp, 2), rho),
                    std::invalid_argument);
    CHECK_THROWS_AS(multiplicity(SymmetricSpaceCase::make(CaseKind::GlSp, 4), rho),
                    std::invalid_argument);

    MultiPartition big;
    big.table = &split;
    big.assign[0] = Partition({9});
    CHECK_THROWS_AS(basic_character_multiplicity(SymmetricSpaceCase::make(CaseKind::GlO, 9),
                                                 big, Route::Character),
                    std::domain_error);
}
