#include "nikulin/bn.hpp"

#include <stdexcept>
#include <string>

#include "nikulin/lattice.hpp"

namespace nikulin::bn {

namespace {

long long exact_div(long long num, long long den)
{
    if (num % den != 0)
        throw std::logic_error("exact_div: " + std::to_string(num) +
                               " is not divisible by " + std::to_string(den));
    return num / den;
}

void check_ranges(long long g, long long r, long long d)
{
    if (g < 1)
        throw std::invalid_argument("rho: genus must be >= 1");
    if (r < 0 || d < 0)
        throw std::invalid_argument("rho: r and d must be >= 0");
}

} // namespace

long long rho(const BNInput& input)
{
    return rho(input.g, input.r, input.d);
}

long long rho(long long g, long long r, long long d)
{
    check_ranges(g, r, d);
    return g - (r + 1) * (g - d + r);
}

PrymRecord prym_numbers(long long g, long long r)
{
    if (g < 2)
        throw std::invalid_argument("prym_numbers: genus must be >= 2");
    if (r < 0)
        throw std::invalid_argument("prym_numbers: r must be >= 0");
    PrymRecord rec;
    rec.g = g;
    rec.r = r;
    rec.rho_minus = g - 1 - exact_div(r * (r + 1), 2);
    rec.rho_tilde = rho(2 * g - 1, r, 2 * g - 2);
    rec.rho_plus = rec.rho_tilde - rec.rho_minus;
    rec.cond_dim_bound = rec.rho_minus > std::max<long long>(-1, rec.rho_tilde);
    rec.cond_window = (-r <= rec.rho_tilde) && (rec.rho_tilde < r);
    return rec;
}

bool schwarz_forced_empty(long long g, long long r, long long d)
{
    if (g < 2)
        throw std::invalid_argument("schwarz_forced_empty: genus must be >= 2");
    return rho(2 * g - 1, r, d) < -r;
}

bool bertram_nonempty(long long g, long long r)
{
    return prym_numbers(g, r).rho_minus >= 0;
}

Gonality expected_gonality(long long g)
{
    if (g < 2)
        throw std::invalid_argument("expected_gonality: genus must be >= 2");
    long long gon = (g % 2 != 0) ? g + 1 : g;
    return Gonality{gon, gon - 2};
}

long long hurwitz_cover_genus(long long g, long long b)
{
    if (g < 1)
        throw std::invalid_argument("hurwitz_cover_genus: base genus must be >= 1");
    if (b < 0 || b % 2 != 0)
        throw std::invalid_argument(
            "hurwitz_cover_genus: a double cover has an even branch count >= 0");
    return 2 * g - 1 + b / 2;
}

Thm55Record thm55_standard_nikulin(long long h)
{
    if (h < 2)
        throw std::invalid_argument("thm55_standard_nikulin: genus must be >= 2");
    Thm55Record rec;
    rec.h = h;
    rec.r = h / 2;

    // The lattice-side Euler characteristic must reproduce floor(h/2).
    lat::PicTildeClass pic = lat::pic_tilde_class(h);
    if (pic.r != rec.r)
        throw std::logic_error("thm55_standard_nikulin: chi(A) - 1 != floor(h/2) at h = " +
                               std::to_string(h));

    rec.rho_minus = prym_numbers(h, rec.r).rho_minus;
    long long closed = (h % 2 != 0) ? -exact_div((h - 1) * (h - 7), 8)
                                    : -exact_div((h - 2) * (h - 4), 8);
    if (rec.rho_minus != closed)
        throw std::logic_error("thm55_standard_nikulin: closed form mismatch at h = " +
                               std::to_string(h));

    rec.fails_welters = rec.rho_minus < 0;
    rec.on_nikulin_general = (h <= 7 && h != 6);
    return rec;
}

std::vector<CoverNumerics> cover_numerics_nonstandard(long long h)
{
    lat::NonStandardClasses classes = lat::nonstandard_classes(h);
    std::vector<CoverNumerics> out;
    for (const lat::GlueClassData* cls : {&classes.r1, &classes.r2}) {
        if (cls->norm < 0)
            continue; // no smooth curve in the class
        CoverNumerics cn;
        cn.base_genus = static_cast<long long>(cls->genus);
        cn.branch_count = static_cast<long long>(cls->branch);
        cn.cover_genus = hurwitz_cover_genus(cn.base_genus, cn.branch_count);
        if (cn.cover_genus != exact_div(h + 1, 2))
            throw std::logic_error("cover_numerics_nonstandard: cover genus != (h+1)/2");
        out.push_back(cn);
    }
    return out;
}

long long spin_locus_expected_dim(long long g, long long r)
{
    if (g < 2)
        throw std::invalid_argument("spin_locus_expected_dim: genus must be >= 2");
    if (r < 0)
        throw std::invalid_argument("spin_locus_expected_dim: r must be >= 0");
    return 3 * g - 3 - exact_div(r * (r + 1), 2);
}

std::vector<long long> question1_open_genera(long long max_g)
{
    if (max_g < 1)
        throw std::invalid_argument("question1_open_genera: max_g must be >= 1");
    std::vector<long long> out;
    for (long long g = 3; g <= max_g; g += 2) {
        bool found = false;
        // rho~(g, r) >= -r fails for all r past 2g, well inside this bound
        for (long long r = 1; r <= 2 * g && !found; ++r) {
            long long rt = 2 * g - 1 - (r + 1) * (r + 1);
            found = (-r <= rt) && (rt < 0);
        }
        if (!found)
            out.push_back(g);
    }
    return out;
}

} // namespace nikulin::bn
