#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nikulin/bn.hpp"
#include "nikulin/lattice.hpp"

using namespace nikulin;

TEST_CASE("rho")
{
    for (long long g = 1; g <= 40; ++g)
        for (long long d = 0; d <= 40; ++d)
            CHECK(bn::rho(g, 0, d) == d);

    CHECK(bn::rho(7, 1, 6) == 3); // = 2g-1-(r+1)^2 at g = 4
    CHECK(bn::rho(bn::BNInput{7, 1, 6}) == 3);

    for (long long g = 2; g <= 500; ++g)
        CHECK(bn::rho(2 * g - 1, 1, g) == -1);

    CHECK_THROWS_AS(bn::rho(0, 0, 0), std::invalid_argument);
    CHECK_THROWS_AS(bn::rho(3, -1, 0), std::invalid_argument);
}

TEST_CASE("prym record")
{
    for (long long g = 2; g <= 200; ++g) {
        bn::PrymRecord rec = bn::prym_numbers(g, 0);
        CHECK(rec.rho_minus == g - 1);
        CHECK(rec.rho_plus == g - 1);
    }

    bn::PrymRecord rec73 = bn::prym_numbers(7, 3);
    CHECK(rec73.rho_minus == 0);
    CHECK(rec73.rho_tilde == -3);
    CHECK(rec73.rho_plus == -3);
    CHECK(rec73.cond_window); // -3 in [-3, 3)
    CHECK(rec73.cond_dim_bound);

    CHECK(bn::prym_numbers(11, 5).rho_minus == -5);

    // grid identities
    for (long long g = 2; g <= 500; ++g)
        for (long long r = 0; r <= 50; ++r) {
            bn::PrymRecord rec = bn::prym_numbers(g, r);
            REQUIRE(rec.rho_tilde == 2 * g - 1 - (r + 1) * (r + 1));
            REQUIRE(rec.rho_tilde == rec.rho_plus + rec.rho_minus);
            REQUIRE(rec.cond_dim_bound == rec.cond_window);
        }

    CHECK_THROWS_AS(bn::prym_numbers(1, 0), std::invalid_argument);
}

TEST_CASE("schwarz emptiness predicate")
{
    CHECK(bn::schwarz_forced_empty(3, 1, 2));       // rho = -3 < -1
    CHECK_FALSE(bn::schwarz_forced_empty(3, 1, 3)); // rho = -1 = -r

    for (long long g = 2; g <= 30; ++g)
        for (long long r = 0; r <= 6; ++r)
            for (long long d = 0; d <= 40; ++d)
                if (bn::rho(2 * g - 1, r, d) >= 0)
                    REQUIRE_FALSE(bn::schwarz_forced_empty(g, r, d));
}

TEST_CASE("bertram nonemptiness predicate")
{
    CHECK(bn::bertram_nonempty(5, 0));
    CHECK(bn::bertram_nonempty(7, 3));      // rho- = 0
    CHECK_FALSE(bn::bertram_nonempty(6, 3)); // rho- = -1
}

TEST_CASE("gonality")
{
    bn::Gonality g5 = bn::expected_gonality(5);
    CHECK(g5.gonality == 6);
    CHECK(g5.clifford_index == 4);
    bn::Gonality g6 = bn::expected_gonality(6);
    CHECK(g6.gonality == 6);
    CHECK(g6.clifford_index == 4);
    CHECK_THROWS_AS(bn::expected_gonality(1), std::invalid_argument);

    // the gonality pencil is never Schwarz-excluded
    for (long long g = 2; g <= 50; ++g)
        CHECK_FALSE(bn::schwarz_forced_empty(g, 1, bn::expected_gonality(g).gonality));
}

TEST_CASE("hurwitz cover genus")
{
    CHECK(bn::hurwitz_cover_genus(4, 0) == 7); // etale: 2g-1
    CHECK(bn::hurwitz_cover_genus(2, 2) == 4);
    CHECK(bn::hurwitz_cover_genus(1, 6) == 4);
    CHECK_THROWS_AS(bn::hurwitz_cover_genus(2, 3), std::invalid_argument);
    CHECK_THROWS_AS(bn::hurwitz_cover_genus(0, 2), std::invalid_argument);
}

TEST_CASE("standard-Nikulin obstruction record")
{
    bn::Thm55Record h6 = bn::thm55_standard_nikulin(6);
    CHECK(h6.r == 3);
    CHECK(h6.rho_minus == -1);
    CHECK(h6.fails_welters);
    CHECK_FALSE(h6.on_nikulin_general);

    bn::Thm55Record h7 = bn::thm55_standard_nikulin(7);
    CHECK(h7.r == 3);
    CHECK(h7.rho_minus == 0);
    CHECK_FALSE(h7.fails_welters);
    CHECK(h7.on_nikulin_general);

    bn::Thm55Record h12 = bn::thm55_standard_nikulin(12);
    CHECK(h12.r == 6);
    CHECK(h12.rho_minus == -10);

    CHECK_THROWS_AS(bn::thm55_standard_nikulin(1), std::invalid_argument);

    // closed forms and boundary coherence on a moderate sweep (the
    // acceptance suite pushes this to 10^4)
    for (long long h = 2; h <= 1000; ++h) {
        bn::Thm55Record rec = bn::thm55_standard_nikulin(h);
        long long closed = (h % 2 != 0) ? -((h - 1) * (h - 7)) / 8
                                        : -((h - 2) * (h - 4)) / 8;
        REQUIRE(rec.rho_minus == closed);
        REQUIRE(rec.fails_welters == (h > 7 || h == 6));
        REQUIRE(rec.fails_welters != rec.on_nikulin_general);
    }

    // r agrees with the lattice-side chi(A) - 1
    for (long long h = 2; h <= 200; ++h)
        REQUIRE(bn::thm55_standard_nikulin(h).r == lat::pic_tilde_class(h).r);
}

TEST_CASE("non-standard cover numerics")
{
    auto c7 = bn::cover_numerics_nonstandard(7);
    REQUIRE(c7.size() == 2);
    CHECK(c7[0].base_genus == 2);
    CHECK(c7[0].branch_count == 2);
    CHECK(c7[0].cover_genus == 4);
    CHECK(c7[1].base_genus == 1);
    CHECK(c7[1].branch_count == 6);
    CHECK(c7[1].cover_genus == 4);

    auto c9 = bn::cover_numerics_nonstandard(9);
    REQUIRE(c9.size() == 2);
    for (const auto& cn : c9) {
        CHECK(cn.base_genus == 2);
        CHECK(cn.branch_count == 4);
        CHECK(cn.cover_genus == 5);
    }

    auto c11 = bn::cover_numerics_nonstandard(11);
    REQUIRE(c11.size() == 2);
    CHECK(c11[0].base_genus == 3);
    CHECK(c11[0].branch_count == 2);
    CHECK(c11[1].base_genus == 2);
    CHECK(c11[1].branch_count == 6);

    // at h = 3 the second class has negative norm and carries no curve
    auto c3 = bn::cover_numerics_nonstandard(3);
    REQUIRE(c3.size() == 1);
    CHECK(c3[0].base_genus == 1);
    CHECK(c3[0].branch_count == 2);
    CHECK(c3[0].cover_genus == 2);

    CHECK_THROWS_AS(bn::cover_numerics_nonstandard(8), lat::NonStandardParityError);

    for (long long h = 3; h <= 199; h += 2)
        for (const auto& cn : bn::cover_numerics_nonstandard(h))
            REQUIRE(bn::hurwitz_cover_genus(cn.base_genus, cn.branch_count) ==
                    (h + 1) / 2);
}

TEST_CASE("spin locus expected dimension")
{
    for (long long g = 2; g <= 50; ++g) {
        CHECK(bn::spin_locus_expected_dim(g, 0) == 3 * g - 3);
        CHECK(bn::spin_locus_expected_dim(g, 1) == 3 * g - 4); // a divisor
    }
    CHECK(bn::spin_locus_expected_dim(3, 2) == 3);
}

TEST_CASE("open-question sweep, cross-derived")
{
    std::vector<long long> swept = bn::question1_open_genera(99);
    std::vector<long long> frozen = {3,  5,  9,  13, 15, 19, 21, 25, 27, 33,
                                     35, 41, 43, 45, 51, 53, 55, 61, 63, 65,
                                     73, 75, 77, 85, 87, 89, 91, 99};
    CHECK(swept == frozen);

    // independent derivation: some r >= 1 works iff the odd number 2g-1
    // lands in [r^2+r+1, r^2+2r] for some r
    std::vector<long long> alt;
    for (long long g = 3; g <= 99; g += 2) {
        bool found = false;
        for (long long r = 1; r * r + r + 1 <= 2 * g - 1; ++r)
            if (2 * g - 1 <= r * r + 2 * r)
                found = true;
        if (!found)
            alt.push_back(g);
    }
    CHECK(swept == alt);
}
