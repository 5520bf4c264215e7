#include "nikulin/claims.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

#include "nikulin/bn.hpp"
#include "nikulin/f2.hpp"
#include "nikulin/lattice.hpp"

namespace nikulin::claims {

namespace {

using f2::F2Vector;
using f2::QuadraticForm;
using f2::SymplecticSpace;

template <typename... Args>
std::string tup(Args&&... args)
{
    std::ostringstream out;
    out << std::boolalpha << '(';
    bool first = true;
    ((out << (first ? "" : ", ") << args, first = false), ...);
    out << ')';
    return out.str();
}

std::string ts(std::uint64_t v)
{
    return std::to_string(v);
}

int cap_g(const RunConfig& cfg, int hard)
{
    return std::min(hard, cfg.max_genus);
}

long long cap_h(const RunConfig& cfg, long long hard)
{
    return std::min(hard, cfg.max_h);
}

std::uint64_t pow2(unsigned e)
{
    return std::uint64_t{1} << e;
}

std::string class_str(const lat::GlueClassData& c)
{
    return "(norm " + c.norm.str() + ", genus " + c.genus.str() + ", branch " +
           c.branch.str() + ")";
}

// ---------------------------------------------------------------- f2 ----

void add_f2_claims(std::vector<Claim>& out)
{
    out.push_back(
        {"f2.polarity.exhaustive",
         "the evaluation rule satisfies q(x+y) = q(x) + q(y) + <x,y> for every form "
         "and every pair of vectors, exhaustively in low genus",
         "Riemann-Mumford relation", "ok",
         [](const RunConfig& cfg) -> std::string {
             for (int g = 1; g <= cap_g(cfg, 4); ++g) {
                 SymplecticSpace space = f2::standard_symplectic(g);
                 const std::size_t n = 2 * static_cast<std::size_t>(g);
                 const std::uint64_t total = pow2(static_cast<unsigned>(n));
                 std::vector<std::uint64_t> pm(total);
                 for (std::uint64_t y = 0; y < total; ++y)
                     pm[y] = space.pairing_mask(F2Vector(y, n));
                 std::vector<char> vals(total);
                 for (std::uint64_t bv = 0; bv < total; ++bv) {
                     QuadraticForm q(space, bv);
                     for (std::uint64_t x = 0; x < total; ++x)
                         vals[x] = static_cast<char>(f2::eval_form(q, F2Vector(x, n)));
                     for (std::uint64_t x = 0; x < total; ++x)
                         for (std::uint64_t y = 0; y < total; ++y) {
                             int rhs = vals[x] ^ vals[y] ^
                                       (std::popcount(x & pm[y]) & 1);
                             if (vals[x ^ y] != rhs)
                                 return "violated at g=" + std::to_string(g);
                         }
                 }
             }
             return "ok";
         },
         0, 0});

    struct CountRow {
        int g;
        const char* expected;
    };
    static const CountRow count_rows[] = {{1, "(3, 1)"},     {2, "(10, 6)"},
                                          {3, "(36, 28)"},   {4, "(136, 120)"},
                                          {5, "(528, 496)"}, {6, "(2080, 2016)"}};
    for (const CountRow& row : count_rows)
        out.push_back({"f2.count.g" + std::to_string(row.g),
                       "census of the 2^(2g) forms by Arf invariant at g = " +
                           std::to_string(row.g) +
                           " equals (2^(g-1)(2^g+1), 2^(g-1)(2^g-1))",
                       "theta-characteristic counts", row.expected,
                       [g = row.g](const RunConfig&) {
                           f2::ArfCounts c = f2::count_forms_by_arf(
                               static_cast<std::size_t>(g));
                           return tup(c.n_even, c.n_odd);
                       },
                       row.g, 0});

    out.push_back({"f2.forms.total.g3",
                   "enumeration yields exactly 2^6 distinct forms at g = 3",
                   "theta-characteristic counts", "64 distinct",
                   [](const RunConfig&) -> std::string {
                       auto forms = f2::enumerate_forms(f2::standard_symplectic(3));
                       std::set<std::uint64_t> seen;
                       for (const auto& q : forms)
                           seen.insert(q.basis_values());
                       if (seen.size() != forms.size())
                           return "duplicates found";
                       return ts(forms.size()) + " distinct";
                   },
                   3, 0});

    out.push_back(
        {"f2.torsor.g2",
         "translation acts freely and transitively on the 16 forms at g = 2, "
         "with the zero vector acting as the identity",
         "theta-characteristic torsor", "free and transitive",
         [](const RunConfig&) -> std::string {
             SymplecticSpace space = f2::standard_symplectic(2);
             QuadraticForm q0(space, 0);
             std::set<std::uint64_t> orbit;
             for (std::uint64_t v = 0; v < 16; ++v)
                 orbit.insert(f2::translate_form(q0, F2Vector(v, 4)).basis_values());
             QuadraticForm probe(space, 0b0110);
             if (orbit.size() == 16 &&
                 f2::translate_form(probe, F2Vector::zero(4)) == probe)
                 return "free and transitive";
             return "violated";
         },
         2, 0});

    out.push_back(
        {"f2.translate.identity",
         "arf(q + <.,v>) = arf(q) + q(v) for every form and vector, exhaustively",
         "theta-characteristic torsor", "ok",
         [](const RunConfig& cfg) -> std::string {
             for (int g = 1; g <= cap_g(cfg, 3); ++g) {
                 SymplecticSpace space = f2::standard_symplectic(g);
                 const std::size_t n = 2 * static_cast<std::size_t>(g);
                 const std::uint64_t total = pow2(static_cast<unsigned>(n));
                 for (std::uint64_t bv = 0; bv < total; ++bv) {
                     QuadraticForm q(space, bv);
                     int aq = f2::arf(q);
                     for (std::uint64_t v = 0; v < total; ++v) {
                         F2Vector vv(v, n);
                         if (f2::arf(f2::translate_form(q, vv)) !=
                             (aq ^ f2::eval_form(q, vv)))
                             return "violated at g=" + std::to_string(g);
                     }
                 }
             }
             return "ok";
         },
         0, 0});

    out.push_back({"f2.torsor.freeness",
                   "translate_form(q, v) = q forces v = 0 (nondegeneracy of the action)",
                   "theta-characteristic torsor", "ok",
                   [](const RunConfig& cfg) -> std::string {
                       for (int g = 1; g <= cap_g(cfg, 3); ++g) {
                           SymplecticSpace space = f2::standard_symplectic(g);
                           const std::size_t n = 2 * static_cast<std::size_t>(g);
                           QuadraticForm q0(space, 0);
                           for (std::uint64_t v = 1; v < pow2(static_cast<unsigned>(n));
                                ++v)
                               if (f2::translate_form(q0, F2Vector(v, n)) == q0)
                                   return "fixed by v=" + F2Vector(v, n).hex();
                       }
                       return "ok";
                   },
                   0, 0});

    out.push_back(
        {"f2.arf.basis_independence",
         "the Arf sum is identical across at least 100 random symplectic bases "
         "per genus (seeded transvection walks)",
         "Arf invariant", "0 violations",
         [](const RunConfig& cfg) -> std::string {
             long long violations = 0;
             for (int g = 2; g <= cap_g(cfg, 5); ++g) {
                 SymplecticSpace space = f2::standard_symplectic(g);
                 const std::size_t n = 2 * static_cast<std::size_t>(g);
                 const std::uint64_t total = pow2(static_cast<unsigned>(n));
                 const std::uint64_t stride = (g == 5) ? 7 : 1;
                 std::vector<int> reference;
                 for (std::uint64_t bv = 0; bv < total; bv += stride)
                     reference.push_back(f2::arf(QuadraticForm(space, bv)));
                 std::mt19937_64 rng(1201 + g);
                 for (int rep = 0; rep < 100; ++rep) {
                     auto basis = f2::random_symplectic_basis(space, rng);
                     std::size_t k = 0;
                     for (std::uint64_t bv = 0; bv < total; bv += stride, ++k)
                         if (f2::arf_in_basis(QuadraticForm(space, bv), basis) !=
                             reference[k])
                             ++violations;
                 }
             }
             return ts(static_cast<std::uint64_t>(violations)) + " violations";
         },
         0, 0});

    out.push_back(
        {"f2.arf.democratic",
         "zero counts split as 2^(2g-1) +- 2^(g-1) exactly along the Arf parity, "
         "exhaustively over all forms",
         "Arf invariant", "ok",
         [](const RunConfig& cfg) -> std::string {
             for (int g = 1; g <= cap_g(cfg, 4); ++g) {
                 SymplecticSpace space = f2::standard_symplectic(g);
                 const unsigned n = 2 * static_cast<unsigned>(g);
                 for (std::uint64_t bv = 0; bv < pow2(n); ++bv) {
                     QuadraticForm q(space, bv);
                     std::uint64_t expect =
                         f2::arf(q) == 0
                             ? pow2(n - 1) + pow2(static_cast<unsigned>(g - 1))
                             : pow2(n - 1) - pow2(static_cast<unsigned>(g - 1));
                     if (f2::zero_count(q) != expect)
                         return "violated at g=" + std::to_string(g);
                 }
             }
             return "ok";
         },
         0, 0});

    struct BeauvilleRow {
        int g;
        const char* solutions;
        const char* pairs;
    };
    static const BeauvilleRow beauville_rows[] = {{2, "2", "1"},
                                                  {3, "12", "6"},
                                                  {4, "56", "28"},
                                                  {5, "240", "120"},
                                                  {6, "992", "496"}};
    for (const BeauvilleRow& row : beauville_rows) {
        out.push_back({"f2.beauville.g" + std::to_string(row.g),
                       "odd forms vanishing at a fixed eta != 0 number "
                       "2^(g-1)(2^(g-1)-1) at g = " +
                           std::to_string(row.g),
                       "Beauville vanishing thetanull count", row.solutions,
                       [g = row.g](const RunConfig&) {
                           auto c = f2::count_special_theta(
                               static_cast<std::size_t>(g),
                               F2Vector::unit(0, 2 * static_cast<std::size_t>(g)));
                           return ts(c.n_solutions);
                       },
                       row.g, 0});
        out.push_back({"f2.thetanulls.g" + std::to_string(row.g),
                       "the solutions pair off two by two, leaving "
                       "2^(g-2)(2^(g-1)-1) invariant vanishing thetanulls at g = " +
                           std::to_string(row.g),
                       "Beauville vanishing thetanull count", row.pairs,
                       [g = row.g](const RunConfig&) {
                           auto c = f2::count_special_theta(
                               static_cast<std::size_t>(g),
                               F2Vector::unit(0, 2 * static_cast<std::size_t>(g)));
                           return ts(c.n_vanishing_thetanulls);
                       },
                       row.g, 0});
    }

    out.push_back({"f2.beauville.g1",
                   "at g = 1 the unique odd form never vanishes on a nonzero eta",
                   "Beauville vanishing thetanull count", "(0, 0)",
                   [](const RunConfig&) {
                       auto c = f2::count_special_theta(1, F2Vector::unit(0, 2));
                       return tup(c.n_solutions, c.n_vanishing_thetanulls);
                   },
                   0, 0});

    out.push_back(
        {"f2.beauville.eta_all",
         "the count is independent of the choice of eta != 0 (all eta swept)",
         "Beauville vanishing thetanull count", "ok",
         [](const RunConfig& cfg) -> std::string {
             for (int g = 2; g <= cap_g(cfg, 4); ++g) {
                 const std::size_t n = 2 * static_cast<std::size_t>(g);
                 std::uint64_t closed =
                     pow2(static_cast<unsigned>(g - 1)) *
                     (pow2(static_cast<unsigned>(g - 1)) - 1);
                 for (std::uint64_t e = 1; e < pow2(static_cast<unsigned>(n)); ++e) {
                     auto c = f2::count_special_theta(static_cast<std::size_t>(g),
                                                      F2Vector(e, n));
                     if (c.n_solutions != closed ||
                         c.n_vanishing_thetanulls != closed / 2)
                         return "violated at g=" + std::to_string(g) +
                                " eta=" + F2Vector(e, n).hex();
                 }
             }
             return "ok";
         },
         0, 0});

    out.push_back(
        {"f2.decompose.additivity",
         "arf(q) = arf(q|span) + arf(q|perp) for every form and hyperbolic pair, "
         "exhaustively",
         "Beauville vanishing thetanull count", "ok",
         [](const RunConfig& cfg) -> std::string {
             for (int g = 1; g <= cap_g(cfg, 3); ++g) {
                 SymplecticSpace space = f2::standard_symplectic(g);
                 const std::size_t n = 2 * static_cast<std::size_t>(g);
                 const std::uint64_t total = pow2(static_cast<unsigned>(n));
                 for (std::uint64_t bv = 0; bv < total; ++bv) {
                     QuadraticForm q(space, bv);
                     int aq = f2::arf(q);
                     for (std::uint64_t e = 1; e < total; ++e)
                         for (std::uint64_t f = 1; f < total; ++f) {
                             F2Vector eta(e, n), eps(f, n);
                             if (space.pair(eta, eps) != 1)
                                 continue;
                             auto dec = f2::decompose_and_restrict(q, eta, eps);
                             if (dec.sigma_perp.dim() != n - 2 ||
                                 aq != (f2::arf(dec.q_sigma) ^ f2::arf(dec.q_perp)))
                                 return "violated at g=" + std::to_string(g);
                         }
                 }
             }
             return "ok";
         },
         0, 0});
}

// ----------------------------------------------------------- lattice ----

void add_lattice_claims(std::vector<Claim>& out)
{
    out.push_back({"lattice.nikulin.disc",
                   "the Nikulin lattice has discriminant group of order 64",
                   "Nikulin lattice", "64",
                   [](const RunConfig&) {
                       return lat::discriminant_group(lat::nikulin_lattice())
                           .group_order.str();
                   },
                   0, 0});

    out.push_back({"lattice.nikulin.divisors",
                   "elementary divisors of the Nikulin lattice are six 2s "
                   "(discriminant group (Z/2)^6)",
                   "Nikulin lattice", "(1, 1, 2, 2, 2, 2, 2, 2)",
                   [](const RunConfig&) {
                       auto data = lat::discriminant_group(lat::nikulin_lattice());
                       std::ostringstream s;
                       s << '(';
                       for (std::size_t i = 0; i < data.elementary_divisors.size(); ++i)
                           s << (i ? ", " : "") << data.elementary_divisors[i];
                       s << ')';
                       return s.str();
                   },
                   0, 0});

    out.push_back({"lattice.nikulin.n8",
                   "the derived eighth node 2M - N1 - ... - N7 is a (-2)-class "
                   "disjoint from N1..N7",
                   "Nikulin lattice", "(-2, 0)",
                   [](const RunConfig&) {
                       lat::IntegerLattice nik = lat::nikulin_lattice();
                       std::vector<lat::Int> n8(8, -1);
                       n8[7] = 2;
                       auto c8 = lat::RationalClass::integral(n8);
                       lat::Rat self = lat::inner(nik, c8, c8);
                       lat::Rat worst(0);
                       for (std::size_t j = 0; j < 7; ++j) {
                           std::vector<lat::Int> ej(8, 0);
                           ej[j] = 1;
                           lat::Rat p =
                               lat::inner(nik, c8, lat::RationalClass::integral(ej));
                           if (abs(p) > worst)
                               worst = abs(p);
                       }
                       return tup(self, worst);
                   },
                   0, 0});

    out.push_back({"lattice.nikulin.json",
                   "report serialization of the Nikulin lattice is stable",
                   "Nikulin lattice", "FROZEN_NIKULIN_JSON",
                   [](const RunConfig&) {
                       return lat::to_json_string(lat::nikulin_lattice());
                   },
                   0, 0});

    out.push_back({"lattice.e8m2.disc", "E8(-2) has discriminant 256",
                   "E8(-2) lattice", "256",
                   [](const RunConfig&) {
                       return lat::discriminant_group(lat::e8_minus2())
                           .group_order.str();
                   },
                   0, 0});

    out.push_back({"lattice.e8m2.definite",
                   "E8(-2) is even and negative definite (principal minor signs)",
                   "E8(-2) lattice", "even negative definite",
                   [](const RunConfig&) -> std::string {
                       lat::IntegerLattice e8 = lat::e8_minus2();
                       if (lat::definiteness(e8) == -1 && e8.is_even())
                           return "even negative definite";
                       return "violated";
                   },
                   0, 0});

    out.push_back({"lattice.e8m2.roots",
                   "E8(-2) contains 240 vectors of norm -4 (the E8 roots)",
                   "E8(-2) lattice", "240",
                   [](const RunConfig&) {
                       return std::to_string(
                           lat::short_vectors(lat::e8_minus2(), lat::Int(-4)).count);
                   },
                   0, 0});

    out.push_back({"lattice.e8m2.norm8",
                   "E8(-2) contains 2160 vectors of norm -8",
                   "E8(-2) lattice", "2160",
                   [](const RunConfig&) {
                       return std::to_string(
                           lat::short_vectors(lat::e8_minus2(), lat::Int(-8)).count);
                   },
                   0, 0});

    out.push_back({"lattice.e8m2.norm2",
                   "E8(-2) has no vector of norm -2 (all norms are 0 mod 4)",
                   "E8(-2) lattice", "0",
                   [](const RunConfig&) {
                       return std::to_string(
                           lat::short_vectors(lat::e8_minus2(), lat::Int(-2)).count);
                   },
                   0, 0});

    out.push_back({"lattice.lambda.even",
                   "the rank 9 lattice Z[H] + Nikulin is even for every genus swept",
                   "Nikulin surface definition", "ok",
                   [](const RunConfig& cfg) -> std::string {
                       for (long long h = 2; h <= cfg.max_h; ++h)
                           if (!lat::lambda_h(h).is_even())
                               return "odd at h=" + std::to_string(h);
                       return "ok";
                   },
                   0, 0});

    out.push_back(
        {"lattice.lambda.disc",
         "disc = 128(h-1) for h up to 20, via the Smith normal form",
         "Nikulin surface definition", "ok",
         [](const RunConfig& cfg) -> std::string {
             for (long long h = 2; h <= cap_h(cfg, 20); ++h) {
                 lat::Int want = 128 * (lat::Int(h) - 1);
                 if (lat::discriminant_group(lat::lambda_h(h)).group_order != want)
                     return "violated at h=" + std::to_string(h);
             }
             return "ok";
         },
         0, 0});

    out.push_back({"lattice.glue.h7",
                   "(H - N1 - N2)/2 is a valid glue class at h = 7 "
                   "(integral pairings, norm 2)",
                   "Garbagnati-Sarti non-standard dichotomy", "true",
                   [](const RunConfig&) -> std::string {
                       auto cls = lat::RationalClass::half(
                           {1, -1, -1, 0, 0, 0, 0, 0, 0});
                       return lat::glue_check(lat::lambda_h(7), cls) ? "true" : "false";
                   },
                   0, 7});

    out.push_back({"lattice.glue.h9",
                   "(H - N1 - N2)/2 fails at h = 9 (odd self-intersection 3)",
                   "Garbagnati-Sarti non-standard dichotomy", "false",
                   [](const RunConfig&) -> std::string {
                       auto cls = lat::RationalClass::half(
                           {1, -1, -1, 0, 0, 0, 0, 0, 0});
                       return lat::glue_check(lat::lambda_h(9), cls) ? "true" : "false";
                   },
                   0, 9});

    out.push_back({"lattice.glue.halfH",
                   "(H - N1)/2 fails at any genus: it meets M in a half-integer",
                   "Garbagnati-Sarti non-standard dichotomy", "false",
                   [](const RunConfig&) -> std::string {
                       auto cls = lat::RationalClass::half(
                           {1, -1, 0, 0, 0, 0, 0, 0, 0});
                       return lat::glue_check(lat::lambda_h(7), cls) ? "true" : "false";
                   },
                   0, 7});

    out.push_back(
        {"lattice.glue.parity2",
         "the two-node class glues exactly when h = 3 mod 4, over the full sweep",
         "Garbagnati-Sarti non-standard dichotomy", "ok",
         [](const RunConfig& cfg) -> std::string {
             auto cls = lat::RationalClass::half({1, -1, -1, 0, 0, 0, 0, 0, 0});
             for (long long h = 2; h <= cfg.max_h; ++h)
                 if (lat::glue_check(lat::lambda_h(h), cls) != (h % 4 == 3))
                     return "violated at h=" + std::to_string(h);
             return "ok";
         },
         0, 0});

    out.push_back(
        {"lattice.glue.parity4",
         "the four-node class glues exactly when h = 1 mod 4, over the full sweep",
         "Garbagnati-Sarti non-standard dichotomy", "ok",
         [](const RunConfig& cfg) -> std::string {
             auto cls = lat::RationalClass::half({1, -1, -1, -1, -1, 0, 0, 0, 0});
             for (long long h = 2; h <= cfg.max_h; ++h)
                 if (lat::glue_check(lat::lambda_h(h), cls) != (h % 4 == 1))
                     return "violated at h=" + std::to_string(h);
             return "ok";
         },
         0, 0});

    out.push_back({"lattice.nonstandard.h7",
                   "non-standard classes at h = 7: R1 has genus 2 with 2 branch "
                   "points, R2 has genus 1 with 6",
                   "Garbagnati-Sarti non-standard dichotomy",
                   "R1 (norm 2, genus 2, branch 2); R2 (norm 0, genus 1, branch 6)",
                   [](const RunConfig&) {
                       auto c = lat::nonstandard_classes(7);
                       return "R1 " + class_str(c.r1) + "; R2 " + class_str(c.r2);
                   },
                   0, 7});

    out.push_back({"lattice.nonstandard.h9",
                   "non-standard classes at h = 9: both of genus 2 with 4 branch "
                   "points",
                   "Garbagnati-Sarti non-standard dichotomy",
                   "R1 (norm 2, genus 2, branch 4); R2 (norm 2, genus 2, branch 4)",
                   [](const RunConfig&) {
                       auto c = lat::nonstandard_classes(9);
                       return "R1 " + class_str(c.r1) + "; R2 " + class_str(c.r2);
                   },
                   0, 9});

    out.push_back({"lattice.nonstandard.even_h",
                   "an even genus is rejected: a non-primitive embedding forces h odd",
                   "Garbagnati-Sarti non-standard dichotomy", "rejected even genus",
                   [](const RunConfig&) -> std::string {
                       try {
                           lat::nonstandard_classes(8);
                       } catch (const lat::NonStandardParityError&) {
                           return "rejected even genus";
                       }
                       return "accepted";
                   },
                   0, 8});

    out.push_back(
        {"lattice.nonstandard.genus_sweep",
         "genera of the glue classes match the closed forms (h+1)/4, (h-3)/4 and "
         "(h-1)/4 for every valid odd genus swept",
         "Garbagnati-Sarti non-standard dichotomy", "ok",
         [](const RunConfig& cfg) -> std::string {
             for (long long h = 3; h <= cfg.max_h; h += 2) {
                 auto c = lat::nonstandard_classes(h);
                 bool ok = true;
                 if (h % 4 == 3) {
                     ok = c.r1.genus == lat::Int((h + 1) / 4);
                     if (c.r2.norm >= 0)
                         ok = ok && c.r2.genus == lat::Int((h - 3) / 4);
                 } else {
                     if (c.r1.norm >= 0)
                         ok = ok && c.r1.genus == lat::Int((h - 1) / 4) &&
                              c.r2.genus == lat::Int((h - 1) / 4);
                 }
                 if (!ok)
                     return "violated at h=" + std::to_string(h);
             }
             return "ok";
         },
         0, 3});

    out.push_back(
        {"lattice.branch.h3mod4",
         "branch counts via R.(N1+...+N8) = R.2M are (2, 6) for every h = 3 mod 4",
         "branch relations", "(2, 6)",
         [](const RunConfig& cfg) -> std::string {
             for (long long h = 3; h <= cfg.max_h; h += 4) {
                 auto c = lat::nonstandard_classes(h);
                 if (c.r1.branch != 2 || c.r2.branch != 6)
                     return "violated at h=" + std::to_string(h);
             }
             return "(2, 6)";
         },
         0, 3});

    out.push_back(
        {"lattice.branch.h1mod4",
         "branch counts via R.(N1+...+N8) = R.2M are (4, 4) for every h = 1 mod 4",
         "branch relations", "(4, 4)",
         [](const RunConfig& cfg) -> std::string {
             for (long long h = 5; h <= cfg.max_h; h += 4) {
                 auto c = lat::nonstandard_classes(h);
                 if (c.r1.branch != 4 || c.r2.branch != 4)
                     return "violated at h=" + std::to_string(h);
             }
             return "(4, 4)";
         },
         0, 5});

    out.push_back(
        {"lattice.rawRM.h3mod4",
         "informational: the raw products R1.M, R2.M with M = (N1+...+N8)/2 are "
         "(1, 3); the stated branch values 2 and 6 equal the products with 2M, "
         "so M there denotes the branch divisor, not the half-sum class",
         "branch relations", "(1, 3)",
         [](const RunConfig& cfg) -> std::string {
             for (long long h = 3; h <= cfg.max_h; h += 4) {
                 auto c = lat::nonstandard_classes(h);
                 if (c.r1.m_product != 1 || c.r2.m_product != 3)
                     return "violated at h=" + std::to_string(h);
             }
             return "(1, 3)";
         },
         0, 3});

    out.push_back(
        {"lattice.rawRM.h1mod4",
         "informational: the raw products R1.M, R2.M are (2, 2) when h = 1 mod 4, "
         "half of the stated branch count 4",
         "branch relations", "(2, 2)",
         [](const RunConfig& cfg) -> std::string {
             for (long long h = 5; h <= cfg.max_h; h += 4) {
                 auto c = lat::nonstandard_classes(h);
                 if (c.r1.m_product != 2 || c.r2.m_product != 2)
                     return "violated at h=" + std::to_string(h);
             }
             return "(2, 2)";
         },
         0, 5});

    out.push_back(
        {"lattice.hurwitz.consistency",
         "2 g(R_i) - 1 + branch/2 = (h+1)/2 for both classes at every odd genus "
         "swept",
         "Hurwitz formula", "ok",
         [](const RunConfig& cfg) -> std::string {
             for (long long h = 3; h <= cfg.max_h; h += 2) {
                 auto c = lat::nonstandard_classes(h);
                 for (const lat::GlueClassData* cls : {&c.r1, &c.r2})
                     if (2 * cls->genus - 1 + cls->branch / 2 !=
                         lat::Int((h + 1) / 2))
                         return "violated at h=" + std::to_string(h);
             }
             return "ok";
         },
         0, 3});

    out.push_back(
        {"lattice.overlattice.index2",
         "re-basing the glued lattice to an integral Gram matrix keeps it even and "
         "divides the discriminant by exactly 4",
         "Garbagnati-Sarti non-standard dichotomy", "ok",
         [](const RunConfig& cfg) -> std::string {
             for (long long h = 3; h <= cap_h(cfg, 49); h += 2) {
                 lat::IntegerLattice L = lat::lambda_h(h);
                 lat::Int disc = abs(lat::det(L.gram()));
                 auto c = lat::nonstandard_classes(h);
                 for (const lat::GlueClassData* cls : {&c.r1, &c.r2}) {
                     lat::IntegerLattice over = lat::glued_overlattice(L, cls->cls);
                     if (!over.is_even() || 4 * abs(lat::det(over.gram())) != disc)
                         return "violated at h=" + std::to_string(h);
                 }
             }
             return "ok";
         },
         0, 3});

    struct PicRow {
        long long h;
        const char* expected;
    };
    static const PicRow pic_rows[] = {{2, "(-4, 0, 2, 1)"},
                                      {7, "(-8, 4, 4, 3)"},
                                      {8, "(-4, 6, 5, 4)"}};
    for (const PicRow& row : pic_rows)
        out.push_back({"lattice.pic.h" + std::to_string(row.h),
                       "covering Picard generator (H~ + v)/2 at h = " +
                           std::to_string(row.h) + ": (v^2, A^2, chi, r)",
                       "van Geemen-Sarti covering Picard lattice", row.expected,
                       [h = row.h](const RunConfig&) {
                           lat::PicTildeClass p = lat::pic_tilde_class(h);
                           return tup(p.required_v_norm, p.a_norm, p.chi, p.r);
                       },
                       0, row.h});

    out.push_back(
        {"lattice.pic.parity",
         "A^2 is an even integer and chi - 1 = floor(h/2) for every genus swept "
         "(the v^2 = -4 / -8 dichotomy is exactly what makes this work)",
         "van Geemen-Sarti covering Picard lattice", "ok",
         [](const RunConfig& cfg) -> std::string {
             for (long long h = 2; h <= cfg.max_h; ++h) {
                 lat::PicTildeClass p = lat::pic_tilde_class(h);
                 if (p.a_norm % 2 != 0 || p.r != h / 2)
                     return "violated at h=" + std::to_string(h);
             }
             return "ok";
         },
         0, 0});

    out.push_back({"lattice.snf.diag23",
                   "Smith normal form of diag(2, 3) is diag(1, 6)",
                   "exact linear algebra oracle", "(1, 6)",
                   [](const RunConfig&) {
                       auto snf = lat::smith_normal_form({{2, 0}, {0, 3}});
                       return tup(snf.d[0][0], snf.d[1][1]);
                   },
                   0, 0});

    out.push_back(
        {"lattice.snf.random",
         "U M V = D with unimodular U, V, nonnegative divisor chain and preserved "
         "determinant on 1000 seeded random integer matrices",
         "exact linear algebra oracle", "1000/1000 ok",
         [](const RunConfig&) -> std::string {
             std::mt19937_64 rng(0x5eed);
             int good = 0;
             for (int trial = 0; trial < 1000; ++trial) {
                 std::size_t r = 1 + rng() % 6;
                 std::size_t c = 1 + rng() % 6;
                 lat::Mat m(r, std::vector<lat::Int>(c));
                 for (auto& row : m)
                     for (auto& x : row)
                         x = static_cast<long long>(rng() % 21) - 10;
                 auto snf = lat::smith_normal_form(m);
                 bool ok = lat::mat_mul(lat::mat_mul(snf.u, m), snf.v) == snf.d;
                 ok = ok && abs(lat::det(snf.u)) == 1 && abs(lat::det(snf.v)) == 1;
                 for (std::size_t t = 0; t + 1 < std::min(r, c); ++t) {
                     const lat::Int& a = snf.d[t][t];
                     const lat::Int& b = snf.d[t + 1][t + 1];
                     if (a < 0 || (a == 0 && b != 0) || (a != 0 && b % a != 0))
                         ok = false;
                 }
                 if (r == c)
                     ok = ok && abs(lat::det(m)) == abs(lat::det(snf.d));
                 if (ok)
                     ++good;
             }
             return std::to_string(good) + "/1000 ok";
         },
         0, 0});

    out.push_back({"lattice.genus.examples",
                   "genus of a node is 0, genus of H at h = 7 is 7, genus of R1 at "
                   "h = 7 is 2",
                   "Nikulin surface definition", "(0, 7, 2)",
                   [](const RunConfig&) {
                       lat::IntegerLattice nik = lat::nikulin_lattice();
                       std::vector<lat::Int> n1(8, 0);
                       n1[0] = 1;
                       lat::Int g_node =
                           lat::genus_and_euler(nik, lat::RationalClass::integral(n1))
                               .genus;
                       lat::IntegerLattice L7 = lat::lambda_h(7);
                       std::vector<lat::Int> hvec(9, 0);
                       hvec[0] = 1;
                       lat::Int g_h =
                           lat::genus_and_euler(L7, lat::RationalClass::integral(hvec))
                               .genus;
                       lat::Int g_r1 = lat::nonstandard_classes(7).r1.genus;
                       return tup(g_node, g_h, g_r1);
                   },
                   0, 7});

    out.push_back({"lattice.inner.examples",
                   "at h = 7: H.H = 12, H.M = 0, M.M = -4, M.N1 = -1",
                   "Nikulin surface definition", "(12, 0, -4, -1)",
                   [](const RunConfig&) {
                       lat::IntegerLattice L = lat::lambda_h(7);
                       auto unit = [](std::size_t i) {
                           std::vector<lat::Int> v(9, 0);
                           v[i] = 1;
                           return lat::RationalClass::integral(v);
                       };
                       auto H = unit(0), N1 = unit(1), M = unit(8);
                       return tup(lat::inner(L, H, H), lat::inner(L, H, M),
                                  lat::inner(L, M, M), lat::inner(L, M, N1));
                   },
                   0, 7});
}

// ---------------------------------------------------------------- bn ----

void add_bn_claims(std::vector<Claim>& out)
{
    out.push_back({"bn.rho.r0",
                   "rho(g, 0, d) collapses to d",
                   "Brill-Noether number definition", "ok",
                   [](const RunConfig&) -> std::string {
                       for (long long g = 1; g <= 50; ++g)
                           for (long long d = 0; d <= 50; ++d)
                               if (bn::rho(g, 0, d) != d)
                                   return "violated";
                       return "ok";
                   },
                   0, 0});

    out.push_back({"bn.rho.g4r1",
                   "rho(7, 1, 6) = 3, the anti-canonical instance 2g-1-(r+1)^2 at "
                   "g = 4, r = 1",
                   "Brill-Noether number definition", "3",
                   [](const RunConfig&) { return std::to_string(bn::rho(7, 1, 6)); },
                   0, 0});

    out.push_back(
        {"bn.rho.tilde_identity",
         "rho(2g-1, r, 2g-2) = 2g-1-(r+1)^2 on the grid g <= 500, r <= 50",
         "Brill-Noether number definition", "ok",
         [](const RunConfig&) -> std::string {
             for (long long g = 2; g <= 500; ++g)
                 for (long long r = 0; r <= 50; ++r)
                     if (bn::rho(2 * g - 1, r, 2 * g - 2) !=
                         2 * g - 1 - (r + 1) * (r + 1))
                         return "violated";
             return "ok";
         },
         0, 0});

    out.push_back(
        {"bn.prym.decomposition",
         "rho~ = rho+ + rho- on the full grid",
         "invariant Petri map window", "ok",
         [](const RunConfig&) -> std::string {
             for (long long g = 2; g <= 500; ++g)
                 for (long long r = 0; r <= 50; ++r) {
                     bn::PrymRecord rec = bn::prym_numbers(g, r);
                     if (rec.rho_tilde != rec.rho_plus + rec.rho_minus ||
                         rec.rho_tilde != 2 * g - 1 - (r + 1) * (r + 1))
                         return "violated";
                 }
             return "ok";
         },
         0, 0});

    out.push_back(
        {"bn.prym.window_equiv",
         "the rho- bound and the rho window describe the same range on the full "
         "grid",
         "invariant Petri map window", "ok",
         [](const RunConfig&) -> std::string {
             for (long long g = 2; g <= 500; ++g)
                 for (long long r = 0; r <= 50; ++r) {
                     bn::PrymRecord rec = bn::prym_numbers(g, r);
                     if (rec.cond_dim_bound != rec.cond_window)
                         return "violated at g=" + std::to_string(g) +
                                " r=" + std::to_string(r);
                 }
             return "ok";
         },
         0, 0});

    out.push_back({"bn.prym.r0",
                   "rho-(g, 0) = rho+(g, 0) = g - 1",
                   "Prym-Brill-Noether number (Welters)", "ok",
                   [](const RunConfig&) -> std::string {
                       for (long long g = 2; g <= 500; ++g) {
                           bn::PrymRecord rec = bn::prym_numbers(g, 0);
                           if (rec.rho_minus != g - 1 || rec.rho_plus != g - 1)
                               return "violated";
                       }
                       return "ok";
                   },
                   0, 0});

    out.push_back({"bn.prym.g7r3",
                   "at (g, r) = (7, 3): rho- = 0, rho~ = -3, rho+ = -3, and the "
                   "window -3 in [-3, 3) holds",
                   "Prym-Brill-Noether number (Welters)", "(0, -3, -3, true)",
                   [](const RunConfig&) {
                       bn::PrymRecord rec = bn::prym_numbers(7, 3);
                       return tup(rec.rho_minus, rec.rho_tilde, rec.rho_plus,
                                  rec.cond_window);
                   },
                   0, 0});

    out.push_back({"bn.prym.g11r5",
                   "rho-(11, 5) = -5, the odd closed form -(h-1)(h-7)/8 at h = 11",
                   "Prym-Brill-Noether number (Welters)", "-5",
                   [](const RunConfig&) {
                       return std::to_string(bn::prym_numbers(11, 5).rho_minus);
                   },
                   0, 0});

    out.push_back({"bn.bertram.examples",
                   "nonemptiness holds at (5, 0) and (7, 3), fails at (6, 3)",
                   "Bertram existence theorem", "(true, true, false)",
                   [](const RunConfig&) {
                       return tup(bn::bertram_nonempty(5, 0), bn::bertram_nonempty(7, 3),
                                  bn::bertram_nonempty(6, 3));
                   },
                   0, 0});

    out.push_back({"bn.schwarz.below",
                   "rho(5, 1, 2) = -3 < -1 forces emptiness at (3, 1, 2)",
                   "Schwarz emptiness bound", "true",
                   [](const RunConfig&) -> std::string {
                       return bn::schwarz_forced_empty(3, 1, 2) ? "true" : "false";
                   },
                   0, 0});

    out.push_back({"bn.schwarz.boundary",
                   "rho(5, 1, 3) = -1 = -r does not force emptiness at (3, 1, 3)",
                   "Schwarz emptiness bound", "false",
                   [](const RunConfig&) -> std::string {
                       return bn::schwarz_forced_empty(3, 1, 3) ? "true" : "false";
                   },
                   0, 0});

    out.push_back(
        {"bn.schwarz.nonneg",
         "no input with rho >= 0 is ever forced empty",
         "Schwarz emptiness bound", "ok",
         [](const RunConfig&) -> std::string {
             for (long long g = 2; g <= 30; ++g)
                 for (long long r = 0; r <= 6; ++r)
                     for (long long d = 0; d <= 40; ++d)
                         if (bn::rho(2 * g - 1, r, d) >= 0 &&
                             bn::schwarz_forced_empty(g, r, d))
                             return "violated";
             return "ok";
         },
         0, 0});

    out.push_back({"bn.gonality.g5",
                   "odd genus 5: gonality 6 (maximal), Clifford index 4",
                   "Aprodu-Farkas gonality", "(6, 4)",
                   [](const RunConfig&) {
                       bn::Gonality gon = bn::expected_gonality(5);
                       return tup(gon.gonality, gon.clifford_index);
                   },
                   0, 0});

    out.push_back({"bn.gonality.g6",
                   "even genus 6: gonality 6 (the degree-g pencil), Clifford index 4",
                   "Aprodu-Farkas gonality", "(6, 4)",
                   [](const RunConfig&) {
                       bn::Gonality gon = bn::expected_gonality(6);
                       return tup(gon.gonality, gon.clifford_index);
                   },
                   0, 0});

    out.push_back(
        {"bn.gonality.schwarz",
         "the gonality pencil is never Schwarz-excluded, g = 2..50",
         "Aprodu-Farkas gonality", "ok",
         [](const RunConfig&) -> std::string {
             for (long long g = 2; g <= 50; ++g)
                 if (bn::schwarz_forced_empty(g, 1, bn::expected_gonality(g).gonality))
                     return "violated at g=" + std::to_string(g);
             return "ok";
         },
         0, 0});

    out.push_back({"bn.evenpencil",
                   "rho(2g-1, 1, g) = -1 for every g (the degree-g pencil sits just "
                   "outside the Schwarz range)",
                   "even-genus pencil", "ok",
                   [](const RunConfig&) -> std::string {
                       for (long long g = 2; g <= 500; ++g)
                           if (bn::rho(2 * g - 1, 1, g) != -1)
                               return "violated at g=" + std::to_string(g);
                       return "ok";
                   },
                   0, 0});

    out.push_back({"bn.hurwitz.etale",
                   "an unramified double cover of genus 4 has genus 7",
                   "Hurwitz formula", "7",
                   [](const RunConfig&) {
                       return std::to_string(bn::hurwitz_cover_genus(4, 0));
                   },
                   0, 0});

    out.push_back({"bn.hurwitz.examples",
                   "cover genus 2g-1+b/2: (2, 2) -> 4 and (1, 6) -> 4",
                   "Hurwitz formula", "(4, 4)",
                   [](const RunConfig&) {
                       return tup(bn::hurwitz_cover_genus(2, 2),
                                  bn::hurwitz_cover_genus(1, 6));
                   },
                   0, 0});

    struct Thm55Row {
        long long h;
        const char* expected;
    };
    static const Thm55Row thm55_rows[] = {{6, "(3, -1, true, false)"},
                                          {7, "(3, 0, false, true)"},
                                          {12, "(6, -10, true, false)"}};
    for (const Thm55Row& row : thm55_rows)
        out.push_back({"bn.thm55.h" + std::to_string(row.h),
                       "standard-type obstruction at h = " + std::to_string(row.h) +
                           ": (r, rho-, fails, lies on a general Nikulin surface)",
                       "standard-type obstruction (Welters failure)", row.expected,
                       [h = row.h](const RunConfig&) {
                           bn::Thm55Record rec = bn::thm55_standard_nikulin(h);
                           return tup(rec.r, rec.rho_minus, rec.fails_welters,
                                      rec.on_nikulin_general);
                       },
                       0, row.h});

    out.push_back(
        {"bn.thm55.closedform",
         "rho-(h, floor(h/2)) equals -(h-1)(h-7)/8 for odd h and -(h-2)(h-4)/8 for "
         "even h over the sweep",
         "standard-type obstruction (Welters failure)", "ok",
         [](const RunConfig& cfg) -> std::string {
             long long top = std::max<long long>(100, cfg.max_h);
             for (long long h = 2; h <= top; ++h) {
                 long long rho_minus = bn::prym_numbers(h, h / 2).rho_minus;
                 long long closed = (h % 2 != 0) ? -((h - 1) * (h - 7)) / 8
                                                 : -((h - 2) * (h - 4)) / 8;
                 if (((h % 2 != 0) && ((h - 1) * (h - 7)) % 8 != 0) ||
                     ((h % 2 == 0) && ((h - 2) * (h - 4)) % 8 != 0))
                     return "non-integral closed form at h=" + std::to_string(h);
                 if (rho_minus != closed)
                     return "violated at h=" + std::to_string(h);
             }
             return "ok";
         },
         0, 0});

    out.push_back(
        {"bn.thm55.boundary",
         "the covers failing the expected-dimension statement are exactly those "
         "off the general-Nikulin range: h > 7 or h = 6",
         "Farkas-Verra existence range", "ok",
         [](const RunConfig& cfg) -> std::string {
             for (long long h = 2; h <= cfg.max_h; ++h) {
                 bn::Thm55Record rec = bn::thm55_standard_nikulin(h);
                 if (rec.fails_welters == rec.on_nikulin_general)
                     return "violated at h=" + std::to_string(h);
             }
             return "ok";
         },
         0, 0});

    out.push_back(
        {"bn.crosscheck.r",
         "floor(h/2) agrees with the lattice-side chi(A) - 1 for every genus swept",
         "van Geemen-Sarti covering Picard lattice", "ok",
         [](const RunConfig& cfg) -> std::string {
             for (long long h = 2; h <= cfg.max_h; ++h) {
                 if (bn::thm55_standard_nikulin(h).r != lat::pic_tilde_class(h).r)
                     return "violated at h=" + std::to_string(h);
             }
             return "ok";
         },
         0, 0});

    struct CoverRow {
        long long h;
        const char* expected;
    };
    static const CoverRow cover_rows[] = {{7, "[(2, 2, 4), (1, 6, 4)]"},
                                          {9, "[(2, 4, 5), (2, 4, 5)]"},
                                          {11, "[(3, 2, 6), (2, 6, 6)]"}};
    for (const CoverRow& row : cover_rows)
        out.push_back({"bn.cover.h" + std::to_string(row.h),
                       "ramified cover data (genus, branch, cover genus) from the "
                       "non-standard classes at h = " +
                           std::to_string(row.h),
                       "non-standard cover generality", row.expected,
                       [h = row.h](const RunConfig&) {
                           std::string s = "[";
                           bool first = true;
                           for (const auto& cn : bn::cover_numerics_nonstandard(h)) {
                               s += (first ? "" : ", ") +
                                    tup(cn.base_genus, cn.branch_count, cn.cover_genus);
                               first = false;
                           }
                           return s + "]";
                       },
                       0, row.h});

    out.push_back(
        {"bn.cover.hurwitz",
         "every non-standard cover entry satisfies 2g-1+b/2 = (h+1)/2 over the "
         "odd-genus sweep",
         "ramified cover bookkeeping", "ok",
         [](const RunConfig& cfg) -> std::string {
             for (long long h = 3; h <= cfg.max_h; h += 2)
                 for (const auto& cn : bn::cover_numerics_nonstandard(h))
                     if (bn::hurwitz_cover_genus(cn.base_genus, cn.branch_count) !=
                         (h + 1) / 2)
                         return "violated at h=" + std::to_string(h);
             return "ok";
         },
         0, 3});

    out.push_back({"bn.spinlocus.r0",
                   "expected spin locus dimension at r = 0 is 3g - 3",
                   "spin locus expected dimension (Harris)", "ok",
                   [](const RunConfig&) -> std::string {
                       for (long long g = 2; g <= 50; ++g)
                           if (bn::spin_locus_expected_dim(g, 0) != 3 * g - 3)
                               return "violated";
                       return "ok";
                   },
                   0, 0});

    out.push_back({"bn.spinlocus.divisor",
                   "r = 1 drops the expected dimension by exactly 1: the vanishing "
                   "thetanull locus is a divisor",
                   "spin locus expected dimension (Harris)", "ok",
                   [](const RunConfig&) -> std::string {
                       for (long long g = 2; g <= 50; ++g)
                           if (bn::spin_locus_expected_dim(g, 1) != 3 * g - 4)
                               return "violated";
                       return "ok";
                   },
                   0, 0});

    out.push_back({"bn.spinlocus.g3r2",
                   "expected spin locus dimension at (3, 2) is 3",
                   "spin locus expected dimension (Harris)", "3",
                   [](const RunConfig&) {
                       return std::to_string(bn::spin_locus_expected_dim(3, 2));
                   },
                   0, 0});

    out.push_back(
        {"bn.question1.sweep",
         "odd genera up to 99 where no r >= 1 puts rho~ in [-r, 0): the range "
         "where generality of the cover remains open",
         "even-genus pencil", // the open question sits in the same discussion
         "(3, 5, 9, 13, 15, 19, 21, 25, 27, 33, 35, 41, 43, 45, 51, 53, 55, 61, "
         "63, 65, 73, 75, 77, 85, 87, 89, 91, 99)",
         [](const RunConfig&) {
             std::ostringstream s;
             s << '(';
             bool first = true;
             for (long long g : bn::question1_open_genera(99)) {
                 s << (first ? "" : ", ") << g;
                 first = false;
             }
             s << ')';
             return s.str();
         },
         0, 0});
}

} // namespace

const std::vector<Claim>& builtin_claims()
{
    static const std::vector<Claim> catalog = [] {
        std::vector<Claim> claims;
        add_f2_claims(claims);
        add_lattice_claims(claims);
        add_bn_claims(claims);
        std::sort(claims.begin(), claims.end(),
                  [](const Claim& a, const Claim& b) { return a.id < b.id; });
        for (std::size_t i = 0; i + 1 < claims.size(); ++i)
            if (claims[i].id == claims[i + 1].id)
                throw std::logic_error("duplicate claim id: " + claims[i].id);
        return claims;
    }();
    return catalog;
}

} // namespace nikulin::claims
