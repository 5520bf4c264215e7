#pragma once

// Quadratic forms over F2 with a fixed symplectic polarity.
//
// Models the 2-torsion of a Jacobian as the symplectic F2-space (V, <.,.>)
// and the set of theta-characteristics as Q(V), the quadratic forms q
// satisfying q(x+y) = q(x) + q(y) + <x,y>. A form is stored by its values
// on the fixed coordinate basis; evaluation anywhere else goes through the
// polarization expansion, so the polarity identity is a testable property
// of the evaluation rule rather than a construction artifact.
//
// Everything here is exact and enumerable: vectors are bit masks (dim = 2g
// capped at 64), forms are bit masks of basis values, and the counting
// routines walk all 2^(2g) forms.

#include <cstddef>
#include <cstdint>
#include <memory>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace nikulin::f2 {

// Hard cap on the ambient dimension 2g: one machine word.
inline constexpr std::size_t kMaxDim = 64;

// Operations that walk 2^(2g) objects refuse g beyond this.
inline constexpr std::size_t kMaxEnumGenus = 12;

struct ResourceLimitError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NoSymplecticBasisError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NotHyperbolicPairError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Element of F2^(2g) as a coefficient bit mask in the fixed basis.
// Addition is XOR. dim must be even and <= kMaxDim (dim 0 is the zero space).
class F2Vector {
public:
    F2Vector(std::uint64_t bits, std::size_t dim);

    static F2Vector zero(std::size_t dim) { return F2Vector(0, dim); }
    static F2Vector unit(std::size_t index, std::size_t dim);

    std::uint64_t bits() const noexcept { return bits_; }
    std::size_t dim() const noexcept { return dim_; }
    bool bit(std::size_t i) const;
    bool is_zero() const noexcept { return bits_ == 0; }

    F2Vector operator+(const F2Vector& other) const;

    bool operator==(const F2Vector& other) const noexcept
    {
        return bits_ == other.bits_ && dim_ == other.dim_;
    }
    bool operator!=(const F2Vector& other) const noexcept { return !(*this == other); }

    // Report encoding: 0x-prefixed lowercase hex, one digit per four bits.
    std::string hex() const;

private:
    std::uint64_t bits_;
    std::uint32_t dim_;
};

// F2^(2g) with an alternating bilinear form given by its Gram matrix,
// one row per basis vector as a bit mask. The constructor checks shape,
// symmetry and zero diagonal; nondegeneracy is certified separately by
// symplectic_basis. Copies are cheap (rows are shared, values immutable).
class SymplecticSpace {
public:
    explicit SymplecticSpace(const std::vector<std::uint64_t>& gram_rows);

    std::size_t dim() const noexcept { return dim_; }
    std::size_t genus() const noexcept { return dim_ / 2; }
    std::uint64_t gram_row(std::size_t i) const;

    // <x, y> = x^T * gram * y over F2.
    int pair(const F2Vector& x, const F2Vector& y) const;

    // Bit i = <b_i, v>: the linear functional <., v> on basis values.
    std::uint64_t pairing_mask(const F2Vector& v) const;

    bool operator==(const SymplecticSpace& other) const;

private:
    std::shared_ptr<const std::vector<std::uint64_t>> rows_;
    std::uint32_t dim_;
};

// Canonical model: basis (e_1..e_g, f_1..f_g) with <e_i, f_i> = 1, rest 0.
SymplecticSpace standard_symplectic(std::size_t g);

int pair(const SymplecticSpace& space, const F2Vector& x, const F2Vector& y);

// A set of linearly independent vectors spanning a subspace of `ambient`.
class Subspace {
public:
    Subspace(SymplecticSpace ambient, std::vector<F2Vector> basis);

    const SymplecticSpace& ambient() const noexcept { return ambient_; }
    const std::vector<F2Vector>& basis() const noexcept { return basis_; }
    std::size_t dim() const noexcept { return basis_.size(); }

private:
    SymplecticSpace ambient_;
    std::vector<F2Vector> basis_;
};

// Quadratic form with polarity <.,.>, stored as its basis values
// q(b_1)..q(b_2g) packed into a bit mask.
class QuadraticForm {
public:
    QuadraticForm(SymplecticSpace space, std::uint64_t basis_values);

    const SymplecticSpace& space() const noexcept { return space_; }
    std::uint64_t basis_values() const noexcept { return bv_; }
    std::string hex() const;

    bool operator==(const QuadraticForm& other) const
    {
        return bv_ == other.bv_ && space_ == other.space_;
    }
    bool operator!=(const QuadraticForm& other) const { return !(*this == other); }

private:
    SymplecticSpace space_;
    std::uint64_t bv_;
};

// q(sum c_i b_i) = sum c_i q(b_i) + sum_{i<j} c_i c_j <b_i, b_j>.
int eval_form(const QuadraticForm& q, const F2Vector& x);

// The torsor action of V on Q(V): q' = q + <., v>.
QuadraticForm translate_form(const QuadraticForm& q, const F2Vector& v);

// Greedy hyperbolic splitting: returns (e_1..e_g, f_1..f_g) with
// <e_i, f_j> = delta_ij and all other pairings zero. Ties are broken by
// lowest index so the output is deterministic; for the standard space it
// returns the standard basis. Throws NoSymplecticBasisError when the Gram
// matrix is singular.
std::vector<F2Vector> symplectic_basis(const SymplecticSpace& space);

// arf(q) = sum q(e_i) q(f_i) over a symplectic basis; basis-independent.
int arf(const QuadraticForm& q);

// Same sum over a caller-supplied basis, validated against the
// delta_ij contract first. Used to check basis independence.
int arf_in_basis(const QuadraticForm& q, const std::vector<F2Vector>& basis);

// A fresh symplectic basis obtained from random transvections
// x -> x + <x,w> w, which preserve the pairing.
std::vector<F2Vector> random_symplectic_basis(const SymplecticSpace& space,
                                              std::mt19937_64& rng);

// All 2^(2g) forms in increasing basis_values order.
std::vector<QuadraticForm> enumerate_forms(const SymplecticSpace& space);

struct ArfCounts {
    std::uint64_t n_even = 0;
    std::uint64_t n_odd = 0;
};

// Exhaustive census of Q(V) by Arf invariant for the standard genus-g
// space; must reproduce |Q+| = 2^(g-1)(2^g+1), |Q-| = 2^(g-1)(2^g-1).
ArfCounts count_forms_by_arf(std::size_t g);

struct SpecialThetaCounts {
    std::uint64_t n_solutions = 0;
    std::uint64_t n_vanishing_thetanulls = 0;
};

// Counts odd forms q with q(eta) = 0 (Beauville's census of the
// theta-characteristics pulling back to invariant vanishing thetanulls).
// Solutions pair up under q -> q + <., eta>; the pairing is verified
// element by element at runtime, not assumed.
SpecialThetaCounts count_special_theta(std::size_t g, const F2Vector& eta);

struct Decomposition {
    Subspace sigma;
    Subspace sigma_perp;
    QuadraticForm q_sigma;
    QuadraticForm q_perp;
};

// Splits V as span(eta, eps) + its perp for a hyperbolic pair
// <eta, eps> = 1 and restricts q to both summands; Arf is additive
// across the split.
Decomposition decompose_and_restrict(const QuadraticForm& q, const F2Vector& eta,
                                     const F2Vector& eps);

// #{x : q(x) = 0}. Independent "democratic" Arf oracle:
// 2^(2g-1) + 2^(g-1) for even forms, 2^(2g-1) - 2^(g-1) for odd ones.
// Deliberately does not consult arf().
std::uint64_t zero_count(const QuadraticForm& q);

} // namespace nikulin::f2
