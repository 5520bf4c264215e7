#pragma once

// Brill-Noether and Prym-Brill-Noether numerology. Everything is exact
// integer arithmetic on closed-form expressions:
//
//   rho(g, r, d)   = g - (r+1)(g - d + r)         expected dim of W^r_d
//   rho-(g, r)     = g - 1 - r(r+1)/2             expected dim of V^r
//   rho~(g, r)     = rho(2g-1, r, 2g-2)           = 2g - 1 - (r+1)^2
//   rho+(g, r)     = rho~ - rho-                  = g - (r+1)(r+2)/2
//
// plus the cover-genus bookkeeping 2g - 1 + b/2 and the full arithmetic
// of the standard-Nikulin obstruction: at r = floor(h/2) the number
// rho-(h, r) collapses to -(h-1)(h-7)/8 (h odd) or -(h-2)(h-4)/8
// (h even), negative exactly for h > 7 or h = 6.
//
// Divisions are performed only after an explicit divisibility check.

#include <vector>

namespace nikulin::bn {

struct BNInput {
    long long g; // genus >= 1
    long long r; // >= 0
    long long d; // >= 0
};

long long rho(const BNInput& input);
long long rho(long long g, long long r, long long d);

struct PrymRecord {
    long long g;
    long long r;
    long long rho_minus;
    long long rho_plus;
    long long rho_tilde;
    // The two equivalent ranges in which the invariant half of the Petri
    // map is forced to have a kernel: one phrased through rho-, one as a
    // window on rho~ alone. Computed independently of each other.
    bool cond_dim_bound; // rho- > max(-1, rho~)
    bool cond_window;    // -r <= rho~ < r
};

PrymRecord prym_numbers(long long g, long long r);

// W^r_d on the cover is empty once rho(2g-1, r, d) < -r.
bool schwarz_forced_empty(long long g, long long r, long long d);

// V^r is nonempty once rho-(g, r) >= 0.
bool bertram_nonempty(long long g, long long r);

struct Gonality {
    long long gonality;       // g+1 for odd g, g for even g
    long long clifford_index; // gonality - 2
};

Gonality expected_gonality(long long g);

// Genus of a double cover with b branch points: 2g - 1 + b/2.
long long hurwitz_cover_genus(long long g, long long b);

struct Thm55Record {
    long long h;
    long long r;         // floor(h/2), cross-checked against the lattice side
    long long rho_minus; // the parity closed form
    bool fails_welters;  // rho_minus < 0
    bool on_nikulin_general; // h <= 7 and h != 6
};

// Arithmetic of the standard-Nikulin counterexample. r is recomputed on
// the lattice side as chi(A) - 1 and both the equality r = floor(h/2)
// and the closed form for rho- are enforced at runtime.
Thm55Record thm55_standard_nikulin(long long h);

struct CoverNumerics {
    long long base_genus;
    long long branch_count;
    long long cover_genus; // 2g - 1 + b/2
};

// Cover data of smooth curves in the two non-standard glue classes
// (classes of negative self-intersection carry no curve and are
// omitted). The cover genus always works out to (h+1)/2.
std::vector<CoverNumerics> cover_numerics_nonstandard(long long h);

// Expected dimension 3g - 3 - r(r+1)/2 of the locus of spin curves with
// at least r+1 sections of matching parity.
long long spin_locus_expected_dim(long long g, long long r);

// Odd g <= max_g for which no r >= 1 satisfies -r <= rho~(g, r) < 0,
// i.e. the genera where the cover is not forced to be special by that
// window. Reported as data; whether such covers are general is open.
std::vector<long long> question1_open_genera(long long max_g);

} // namespace nikulin::bn
