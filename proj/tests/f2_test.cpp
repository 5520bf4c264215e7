#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <bit>
#include <random>
#include <set>

#include "nikulin/f2.hpp"

using namespace nikulin;
using f2::F2Vector;
using f2::QuadraticForm;
using f2::SymplecticSpace;

namespace {

std::uint64_t pow2(unsigned e)
{
    return std::uint64_t{1} << e;
}

} // namespace

TEST_CASE("standard symplectic space")
{
    SymplecticSpace s1 = f2::standard_symplectic(1);
    CHECK(s1.dim() == 2);
    CHECK(s1.gram_row(0) == 0b10);
    CHECK(s1.gram_row(1) == 0b01);

    SymplecticSpace s2 = f2::standard_symplectic(2);
    CHECK(f2::symplectic_basis(s2).size() == 4); // full rank

    CHECK_THROWS_AS(f2::standard_symplectic(0), std::invalid_argument);
    CHECK_THROWS_AS(f2::standard_symplectic(33), std::invalid_argument);
}

TEST_CASE("space constructor validation")
{
    // not symmetric
    CHECK_THROWS_AS(SymplecticSpace({0b10, 0b00}), std::invalid_argument);
    // not alternating
    CHECK_THROWS_AS(SymplecticSpace({0b01, 0b10}), std::invalid_argument);
    // odd dimension
    CHECK_THROWS_AS(SymplecticSpace({0b0, 0b0, 0b0}), std::invalid_argument);
}

TEST_CASE("pairing")
{
    SymplecticSpace s = f2::standard_symplectic(2);
    F2Vector e1 = F2Vector::unit(0, 4), e2 = F2Vector::unit(1, 4);
    F2Vector f1 = F2Vector::unit(2, 4);
    CHECK(f2::pair(s, e1, f1) == 1);
    CHECK(f2::pair(s, e1, e2) == 0);
    for (std::uint64_t x = 0; x < 16; ++x)
        CHECK(f2::pair(s, F2Vector(x, 4), F2Vector(x, 4)) == 0);
    CHECK_THROWS_AS(f2::pair(s, F2Vector(1, 2), f1), std::invalid_argument);
}

TEST_CASE("form evaluation basics")
{
    SymplecticSpace s = f2::standard_symplectic(1);
    F2Vector ef(0b11, 2);
    CHECK(f2::eval_form(QuadraticForm(s, 0b00), F2Vector::zero(2)) == 0);
    CHECK(f2::eval_form(QuadraticForm(s, 0b00), ef) == 1); // 0 + 0 + <e,f>
    CHECK(f2::eval_form(QuadraticForm(s, 0b11), ef) == 1); // 1 + 1 + 1
    CHECK_THROWS_AS(f2::eval_form(QuadraticForm(s, 0), F2Vector(0, 4)),
                    std::invalid_argument);
}

TEST_CASE("polarity identity, exhaustive small genus + sampled g=6")
{
    for (int g = 1; g <= 4; ++g) {
        SymplecticSpace s = f2::standard_symplectic(g);
        std::size_t n = 2 * static_cast<std::size_t>(g);
        std::uint64_t total = pow2(static_cast<unsigned>(n));
        for (std::uint64_t bv = 0; bv < total; ++bv) {
            QuadraticForm q(s, bv);
            for (std::uint64_t x = 0; x < total; ++x)
                for (std::uint64_t y = 0; y < total; ++y) {
                    F2Vector vx(x, n), vy(y, n);
                    int lhs = f2::eval_form(q, vx + vy);
                    int rhs =
                        f2::eval_form(q, vx) ^ f2::eval_form(q, vy) ^ f2::pair(s, vx, vy);
                    REQUIRE(lhs == rhs);
                }
        }
    }

    SymplecticSpace s6 = f2::standard_symplectic(6);
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 20000; ++trial) {
        std::uint64_t mask = pow2(12) - 1;
        QuadraticForm q(s6, rng() & mask);
        F2Vector x(rng() & mask, 12), y(rng() & mask, 12);
        CHECK(f2::eval_form(q, x + y) ==
              (f2::eval_form(q, x) ^ f2::eval_form(q, y) ^ f2::pair(s6, x, y)));
    }
}

TEST_CASE("translate: identity element and the frozen example")
{
    SymplecticSpace s = f2::standard_symplectic(1);
    QuadraticForm q(s, 0b00);
    CHECK(f2::translate_form(q, F2Vector::zero(2)) == q);
    // q' = q + <., e1>: q'(f1) = 0 + <f1, e1> = 1
    QuadraticForm qt = f2::translate_form(q, F2Vector::unit(0, 2));
    CHECK(f2::eval_form(qt, F2Vector::unit(1, 2)) == 1);
}

TEST_CASE("translate identity arf(q + <.,v>) = arf(q) + q(v), exhaustive g <= 3")
{
    for (int g = 1; g <= 3; ++g) {
        SymplecticSpace s = f2::standard_symplectic(g);
        std::size_t n = 2 * static_cast<std::size_t>(g);
        std::uint64_t total = pow2(static_cast<unsigned>(n));
        for (std::uint64_t bv = 0; bv < total; ++bv) {
            QuadraticForm q(s, bv);
            int aq = f2::arf(q);
            for (std::uint64_t v = 0; v < total; ++v) {
                F2Vector vv(v, n);
                REQUIRE(f2::arf(f2::translate_form(q, vv)) ==
                        (aq ^ f2::eval_form(q, vv)));
            }
        }
    }
}

TEST_CASE("torsor freeness: only v = 0 fixes a form")
{
    for (int g = 1; g <= 3; ++g) {
        SymplecticSpace s = f2::standard_symplectic(g);
        std::size_t n = 2 * static_cast<std::size_t>(g);
        QuadraticForm q(s, 0b01 & (pow2(static_cast<unsigned>(n)) - 1));
        for (std::uint64_t v = 1; v < pow2(static_cast<unsigned>(n)); ++v)
            CHECK(f2::translate_form(q, F2Vector(v, n)) != q);
    }
}

TEST_CASE("symplectic basis: standard space reproduces the standard basis")
{
    for (int g = 1; g <= 4; ++g) {
        SymplecticSpace s = f2::standard_symplectic(g);
        auto basis = f2::symplectic_basis(s);
        REQUIRE(basis.size() == 2 * static_cast<std::size_t>(g));
        for (std::size_t i = 0; i < basis.size(); ++i)
            CHECK(basis[i] == F2Vector::unit(i, 2 * static_cast<std::size_t>(g)));
    }
}

TEST_CASE("symplectic basis: permuted gram satisfies the delta contract")
{
    // swap the roles of the two hyperbolic pairs of the g=2 standard space
    std::vector<std::uint64_t> rows(4, 0);
    auto set = [&](int i, int j) {
        rows[i] |= std::uint64_t{1} << j;
        rows[j] |= std::uint64_t{1} << i;
    };
    set(0, 3);
    set(1, 2);
    SymplecticSpace s(rows);
    auto basis = f2::symplectic_basis(s);
    REQUIRE(basis.size() == 4);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) {
            int expected = (j == i + 2 && i < 2) ? 1 : (i == j + 2 && j < 2) ? 1 : 0;
            CHECK(f2::pair(s, basis[i], basis[j]) == expected);
        }
}

TEST_CASE("symplectic basis: singular gram is rejected")
{
    SymplecticSpace zero2({0, 0});
    CHECK_THROWS_AS(f2::symplectic_basis(zero2), f2::NoSymplecticBasisError);

    // hyperbolic plane plus a 2-dimensional radical
    std::vector<std::uint64_t> rows = {0b0010, 0b0001, 0, 0};
    CHECK_THROWS_AS(f2::symplectic_basis(SymplecticSpace(rows)),
                    f2::NoSymplecticBasisError);
}

TEST_CASE("arf values")
{
    SymplecticSpace s1 = f2::standard_symplectic(1);
    CHECK(f2::arf(QuadraticForm(s1, 0b11)) == 1);
    CHECK(f2::arf(QuadraticForm(s1, 0b00)) == 0);
    SymplecticSpace s2 = f2::standard_symplectic(2);
    CHECK(f2::arf(QuadraticForm(s2, 0b1111)) == 0); // 1*1 + 1*1
}

TEST_CASE("arf is basis independent (random transvection bases)")
{
    for (int g = 2; g <= 4; ++g) {
        SymplecticSpace s = f2::standard_symplectic(g);
        std::size_t n = 2 * static_cast<std::size_t>(g);
        std::mt19937_64 rng(42 + g);
        for (int rep = 0; rep < 10; ++rep) {
            auto basis = f2::random_symplectic_basis(s, rng);
            for (std::uint64_t bv = 0; bv < pow2(static_cast<unsigned>(n)); ++bv) {
                QuadraticForm q(s, bv);
                REQUIRE(f2::arf_in_basis(q, basis) == f2::arf(q));
            }
        }
    }
}

TEST_CASE("arf_in_basis rejects a non-symplectic basis")
{
    SymplecticSpace s = f2::standard_symplectic(1);
    std::vector<F2Vector> bad = {F2Vector::unit(0, 2), F2Vector::unit(0, 2)};
    CHECK_THROWS_AS(f2::arf_in_basis(QuadraticForm(s, 0), bad), std::invalid_argument);
}

TEST_CASE("form enumeration")
{
    CHECK(f2::enumerate_forms(f2::standard_symplectic(1)).size() == 4);
    auto forms = f2::enumerate_forms(f2::standard_symplectic(3));
    CHECK(forms.size() == 64);
    std::set<std::uint64_t> seen;
    for (const auto& q : forms)
        seen.insert(q.basis_values());
    CHECK(seen.size() == 64);
    // deterministic lexicographic order
    for (std::size_t i = 0; i < forms.size(); ++i)
        CHECK(forms[i].basis_values() == i);

    CHECK_THROWS_AS(f2::enumerate_forms(f2::standard_symplectic(13)),
                    f2::ResourceLimitError);
}

TEST_CASE("arf census matches the closed forms")
{
    auto c1 = f2::count_forms_by_arf(1);
    CHECK(c1.n_even == 3);
    CHECK(c1.n_odd == 1);
    auto c2 = f2::count_forms_by_arf(2);
    CHECK(c2.n_even == 10);
    CHECK(c2.n_odd == 6);
    auto c3 = f2::count_forms_by_arf(3);
    CHECK(c3.n_even == 36);
    CHECK(c3.n_odd == 28);
    for (unsigned g = 1; g <= 6; ++g) {
        auto c = f2::count_forms_by_arf(g);
        CHECK(c.n_even == pow2(g - 1) * (pow2(g) + 1));
        CHECK(c.n_odd == pow2(g - 1) * (pow2(g) - 1));
        CHECK(c.n_even + c.n_odd == pow2(2 * g));
    }
    CHECK_THROWS_AS(f2::count_forms_by_arf(0), std::invalid_argument);
    CHECK_THROWS_AS(f2::count_forms_by_arf(13), f2::ResourceLimitError);
}

TEST_CASE("special theta counts")
{
    for (std::uint64_t e = 1; e < 4; ++e) {
        auto c = f2::count_special_theta(1, F2Vector(e, 2));
        CHECK(c.n_solutions == 0);
        CHECK(c.n_vanishing_thetanulls == 0);
    }
    auto c2 = f2::count_special_theta(2, F2Vector::unit(0, 4));
    CHECK(c2.n_solutions == 2);
    CHECK(c2.n_vanishing_thetanulls == 1);
    auto c3 = f2::count_special_theta(3, F2Vector::unit(2, 6));
    CHECK(c3.n_solutions == 12);
    CHECK(c3.n_vanishing_thetanulls == 6);

    // independent of eta
    for (unsigned g = 2; g <= 3; ++g)
        for (std::uint64_t e = 1; e < pow2(2 * g); ++e) {
            auto c = f2::count_special_theta(g, F2Vector(e, 2 * g));
            CHECK(c.n_solutions == pow2(g - 1) * (pow2(g - 1) - 1));
        }

    CHECK_THROWS_AS(f2::count_special_theta(2, F2Vector::zero(4)),
                    std::invalid_argument);
}

TEST_CASE("decompose_and_restrict")
{
    SymplecticSpace s1 = f2::standard_symplectic(1);
    for (std::uint64_t bv = 0; bv < 4; ++bv) {
        QuadraticForm q(s1, bv);
        auto dec = f2::decompose_and_restrict(q, F2Vector::unit(0, 2),
                                              F2Vector::unit(1, 2));
        CHECK(dec.sigma_perp.dim() == 0);
        CHECK(f2::arf(q) == f2::arf(dec.q_sigma));
    }

    SymplecticSpace s2 = f2::standard_symplectic(2);
    for (std::uint64_t bv = 0; bv < 16; ++bv) {
        QuadraticForm q(s2, bv);
        for (std::uint64_t e = 1; e < 16; ++e)
            for (std::uint64_t f = 1; f < 16; ++f) {
                F2Vector eta(e, 4), eps(f, 4);
                if (f2::pair(s2, eta, eps) != 1)
                    continue;
                auto dec = f2::decompose_and_restrict(q, eta, eps);
                CHECK(dec.sigma.dim() == 2);
                CHECK(dec.sigma_perp.dim() == 2);
                REQUIRE(f2::arf(q) == (f2::arf(dec.q_sigma) ^ f2::arf(dec.q_perp)));
            }
    }

    CHECK_THROWS_AS(f2::decompose_and_restrict(QuadraticForm(s2, 0),
                                               F2Vector::unit(0, 4),
                                               F2Vector::unit(1, 4)),
                    f2::NotHyperbolicPairError);
}

TEST_CASE("zero counts (democratic oracle)")
{
    SymplecticSpace s1 = f2::standard_symplectic(1);
    CHECK(f2::zero_count(QuadraticForm(s1, 0b00)) == 3);
    CHECK(f2::zero_count(QuadraticForm(s1, 0b11)) == 1);

    for (unsigned g = 1; g <= 3; ++g) {
        SymplecticSpace s = f2::standard_symplectic(g);
        for (std::uint64_t bv = 0; bv < pow2(2 * g); ++bv) {
            QuadraticForm q(s, bv);
            std::uint64_t zc = f2::zero_count(q);
            CHECK(zc >= 1); // q(0) = 0
            std::uint64_t expect = f2::arf(q) == 0 ? pow2(2 * g - 1) + pow2(g - 1)
                                                   : pow2(2 * g - 1) - pow2(g - 1);
            REQUIRE(zc == expect);
        }
    }
}

TEST_CASE("subspace independence check")
{
    SymplecticSpace s = f2::standard_symplectic(2);
    CHECK_NOTHROW(f2::Subspace(s, {F2Vector(0b0011, 4), F2Vector(0b0110, 4)}));
    CHECK_THROWS_AS(f2::Subspace(s, {F2Vector(0b0011, 4), F2Vector(0b0101, 4),
                                     F2Vector(0b0110, 4)}),
                    std::invalid_argument);
}

TEST_CASE("vector plumbing")
{
    CHECK(F2Vector(0b1010, 4).hex() == "0xa");
    CHECK(F2Vector(0x2f, 6).hex() == "0x2f");
    CHECK_THROWS_AS(F2Vector(1, 3), std::invalid_argument);   // odd dim
    CHECK_THROWS_AS(F2Vector(0b100, 2), std::invalid_argument); // bits beyond dim
    CHECK_THROWS_AS(F2Vector(0, 2) + F2Vector(0, 4), std::invalid_argument);
    CHECK(F2Vector(0b01, 2) + F2Vector(0b11, 2) == F2Vector(0b10, 2));
}
