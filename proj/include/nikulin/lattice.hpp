#pragma once

// Exact integer-lattice arithmetic for the rank <= 9 Picard lattices of
// Nikulin K3 surfaces: the Nikulin lattice (eight disjoint (-2)-classes
// whose sum is 2-divisible), its orthogonal extension by a polarization,
// and E8(-2). Half-integral classes model index-2 overlattice generators;
// glue_check certifies that such a class lands in an even integral
// overlattice. Discriminants come from Smith normal form, short-vector
// counts from exact enumeration over an LDL^T split of the definite form.
//
// All arithmetic is arbitrary precision (overflow is impossible, not
// merely detected).

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace nikulin::lat {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;
using Mat = std::vector<std::vector<Int>>;

struct DegenerateLatticeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NotACurveClassError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NonStandardParityError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct IndefiniteLatticeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ResourceLimitError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Small dense exact matrix helpers.
Mat mat_identity(std::size_t n);
Mat mat_mul(const Mat& a, const Mat& b);
Mat mat_transpose(const Mat& m);

// Exact determinant (fraction-free Bareiss).
Int det(const Mat& m);

// Lattice with a symmetric integer Gram matrix and named basis vectors.
class IntegerLattice {
public:
    IntegerLattice(Mat gram, std::vector<std::string> labels);

    std::size_t rank() const noexcept { return gram_.size(); }
    const Mat& gram() const noexcept { return gram_; }
    const std::vector<std::string>& labels() const noexcept { return labels_; }
    bool is_even() const noexcept { return even_; }

private:
    Mat gram_;
    std::vector<std::string> labels_;
    bool even_;
};

IntegerLattice lattice_from_gram(Mat gram, std::vector<std::string> labels = {});

// Coefficient vector with denominator 1 or 2. Denominator 2 is kept only
// when some numerator is odd; otherwise the class is normalized to be
// integral.
class RationalClass {
public:
    RationalClass(std::vector<Int> numerators, Int denominator);

    static RationalClass integral(std::vector<Int> coords);
    static RationalClass half(std::vector<Int> numerators);

    const std::vector<Int>& numerators() const noexcept { return num_; }
    const Int& denominator() const noexcept { return den_; }
    std::size_t size() const noexcept { return num_.size(); }

private:
    std::vector<Int> num_;
    Int den_;
};

// u^T * gram * v / (den_u * den_v), exact.
Rat inner(const IntegerLattice& L, const RationalClass& u, const RationalClass& v);

struct GenusEuler {
    Int genus;
    Int chi;
};

// K3 adjunction numbers of a class with even integral self-intersection:
// genus = 1 + v.v/2, chi = 2 + v.v/2.
GenusEuler genus_and_euler(const IntegerLattice& L, const RationalClass& v);

struct SnfResult {
    Mat d; // diagonal, d_i | d_{i+1}, nonnegative
    Mat u; // unimodular, u * m * v == d
    Mat v; // unimodular
};

SnfResult smith_normal_form(const Mat& m);

struct DiscriminantData {
    std::vector<Int> elementary_divisors; // SNF diagonal, 1s retained
    Int group_order;                      // product = |det gram|
};

DiscriminantData discriminant_group(const IntegerLattice& L);

// Rank 8, basis (N1..N7, M) where M = (N1+...+N8)/2; the eighth node
// N8 = 2M - N1 - ... - N7 is recomputed and checked at construction.
IntegerLattice nikulin_lattice();

// Rank 9: Z[H] orthogonal to the Nikulin lattice, H.H = 2(h-1).
IntegerLattice lambda_h(long long h);

// -2 times the E8 Cartan matrix: even, negative definite, |det| = 256.
IntegerLattice e8_minus2();

// True iff the half-integral class pairs integrally with every basis
// vector and has even integral self-intersection, i.e. iff L + Zc is an
// even integral overlattice of index 2.
bool glue_check(const IntegerLattice& L, const RationalClass& c);

// Integral Gram matrix of L + Zc for a valid glue class c; its
// discriminant is |det gram| / 4.
IntegerLattice glued_overlattice(const IntegerLattice& L, const RationalClass& c);

struct GlueClassData {
    Int norm;
    Int genus;
    Int branch;    // pairing with N1 + ... + N8 = 2M
    Rat m_product; // raw pairing with M (half the branch count)
    RationalClass cls;
};

struct NonStandardClasses {
    int residue_mod_4; // 1 or 3
    GlueClassData r1;
    GlueClassData r2;
};

// The two non-standard glue classes of an odd-genus model: for
// h = 3 mod 4 they are (H - N1 - N2)/2 and (H - N3 - ... - N8)/2, for
// h = 1 mod 4 both drop four nodes. Both must pass glue_check.
// Even h is rejected: a non-primitive embedding forces h odd.
NonStandardClasses nonstandard_classes(long long h);

struct PicTildeClass {
    Int h_tilde_norm;    // 4h - 4
    Int required_v_norm; // -4 for even h, -8 for odd h
    Int a_norm;          // ((H~ + v)/2)^2, always an even integer
    Int chi;             // 2 + a_norm / 2
    long long r;         // chi - 1 = floor(h/2)
};

// Numbers of the index-2 generator (H~ + v)/2 of the covering K3's Picard
// group in the standard case. Certifies that a vector v of the required
// norm exists in E8(-2) and that the resulting class passes glue_check.
PicTildeClass pic_tilde_class(long long h);

struct ShortVectorResult {
    long long count = 0;
    std::vector<std::vector<Int>> vectors; // filled only when collected
};

// Nonzero vectors of the given norm in a definite lattice, by exact
// enumeration (LDL^T split with exact rational interval bounds at every
// level, so completeness is certified by the decomposition itself).
ShortVectorResult short_vectors(const IntegerLattice& L, const Int& target_norm,
                                bool collect = false);

// +1 positive definite, -1 negative definite, 0 otherwise
// (leading-principal-minor signs).
int definiteness(const IntegerLattice& L);

// {labels, gram, even, disc_order} with integers rendered as exact
// decimal strings; the report encoding of a lattice.
std::string to_json_string(const IntegerLattice& L);

} // namespace nikulin::lat
