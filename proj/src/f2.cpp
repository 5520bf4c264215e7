#include "nikulin/f2.hpp"

#include <algorithm>
#include <bit>

namespace nikulin::f2 {

namespace {

int parity(std::uint64_t x) noexcept
{
    return std::popcount(x) & 1;
}

std::uint64_t low_mask(std::size_t n) noexcept
{
    return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}

// bits strictly above position i
std::uint64_t above_mask(std::size_t i) noexcept
{
    return i >= 63 ? 0 : ~low_mask(i + 1);
}

void check_dim(const F2Vector& x, std::size_t dim, const char* what)
{
    if (x.dim() != dim)
        throw std::invalid_argument(std::string(what) + ": vector dimension " +
                                    std::to_string(x.dim()) + " does not match " +
                                    std::to_string(dim));
}

void check_enum_genus(std::size_t g, const char* what)
{
    if (g > kMaxEnumGenus)
        throw ResourceLimitError(std::string(what) + ": genus " + std::to_string(g) +
                                 " exceeds enumeration cap " +
                                 std::to_string(kMaxEnumGenus));
}

} // namespace

F2Vector::F2Vector(std::uint64_t bits, std::size_t dim)
    : bits_(bits), dim_(static_cast<std::uint32_t>(dim))
{
    if (dim > kMaxDim || dim % 2 != 0)
        throw std::invalid_argument("F2Vector: dimension must be even and <= " +
                                    std::to_string(kMaxDim));
    if ((bits & ~low_mask(dim)) != 0)
        throw std::invalid_argument("F2Vector: bits outside dimension");
}

F2Vector F2Vector::unit(std::size_t index, std::size_t dim)
{
    if (index >= dim)
        throw std::invalid_argument("F2Vector::unit: index out of range");
    return F2Vector(std::uint64_t{1} << index, dim);
}

bool F2Vector::bit(std::size_t i) const
{
    if (i >= dim_)
        throw std::invalid_argument("F2Vector::bit: index out of range");
    return (bits_ >> i) & 1;
}

F2Vector F2Vector::operator+(const F2Vector& other) const
{
    if (dim_ != other.dim_)
        throw std::invalid_argument("F2Vector: dimension mismatch in addition");
    return F2Vector(bits_ ^ other.bits_, dim_);
}

std::string F2Vector::hex() const
{
    static const char* digits = "0123456789abcdef";
    std::size_t ndigits = (dim_ + 3) / 4;
    std::string out = "0x";
    if (ndigits == 0)
        ndigits = 1;
    for (std::size_t k = ndigits; k-- > 0;)
        out.push_back(digits[(bits_ >> (4 * k)) & 0xf]);
    return out;
}

SymplecticSpace::SymplecticSpace(const std::vector<std::uint64_t>& gram_rows)
    : rows_(std::make_shared<const std::vector<std::uint64_t>>(gram_rows)),
      dim_(static_cast<std::uint32_t>(gram_rows.size()))
{
    if (dim_ > kMaxDim || dim_ % 2 != 0)
        throw std::invalid_argument("SymplecticSpace: dimension must be even and <= " +
                                    std::to_string(kMaxDim));
    const auto& rows = *rows_;
    for (std::size_t i = 0; i < dim_; ++i) {
        if ((rows[i] & ~low_mask(dim_)) != 0)
            throw std::invalid_argument("SymplecticSpace: row bits outside dimension");
        if ((rows[i] >> i) & 1)
            throw std::invalid_argument("SymplecticSpace: Gram matrix must be alternating");
        for (std::size_t j = i + 1; j < dim_; ++j)
            if (((rows[i] >> j) & 1) != ((rows[j] >> i) & 1))
                throw std::invalid_argument("SymplecticSpace: Gram matrix must be symmetric");
    }
}

std::uint64_t SymplecticSpace::gram_row(std::size_t i) const
{
    if (i >= dim_)
        throw std::invalid_argument("SymplecticSpace::gram_row: index out of range");
    return (*rows_)[i];
}

int SymplecticSpace::pair(const F2Vector& x, const F2Vector& y) const
{
    check_dim(x, dim_, "pair");
    check_dim(y, dim_, "pair");
    int acc = 0;
    std::uint64_t xb = x.bits();
    while (xb) {
        std::size_t i = static_cast<std::size_t>(std::countr_zero(xb));
        acc ^= parity((*rows_)[i] & y.bits());
        xb &= xb - 1;
    }
    return acc;
}

std::uint64_t SymplecticSpace::pairing_mask(const F2Vector& v) const
{
    check_dim(v, dim_, "pairing_mask");
    std::uint64_t mask = 0;
    for (std::size_t i = 0; i < dim_; ++i)
        mask |= static_cast<std::uint64_t>(parity((*rows_)[i] & v.bits())) << i;
    return mask;
}

bool SymplecticSpace::operator==(const SymplecticSpace& other) const
{
    return rows_ == other.rows_ || *rows_ == *other.rows_;
}

SymplecticSpace standard_symplectic(std::size_t g)
{
    if (g == 0 || 2 * g > kMaxDim)
        throw std::invalid_argument("standard_symplectic: need 1 <= g <= " +
                                    std::to_string(kMaxDim / 2));
    std::vector<std::uint64_t> rows(2 * g, 0);
    for (std::size_t i = 0; i < g; ++i) {
        rows[i] = std::uint64_t{1} << (g + i);
        rows[g + i] = std::uint64_t{1} << i;
    }
    return SymplecticSpace(rows);
}

int pair(const SymplecticSpace& space, const F2Vector& x, const F2Vector& y)
{
    return space.pair(x, y);
}

Subspace::Subspace(SymplecticSpace ambient, std::vector<F2Vector> basis)
    : ambient_(std::move(ambient)), basis_(std::move(basis))
{
    // Echelon reduction keyed by leading bit.
    std::uint64_t pivot[kMaxDim] = {0};
    for (const auto& v : basis_) {
        check_dim(v, ambient_.dim(), "Subspace");
        std::uint64_t b = v.bits();
        while (b) {
            std::size_t t = 63 - static_cast<std::size_t>(std::countl_zero(b));
            if (!pivot[t]) {
                pivot[t] = b;
                break;
            }
            b ^= pivot[t];
        }
        if (b == 0)
            throw std::invalid_argument("Subspace: basis vectors are linearly dependent");
    }
}

QuadraticForm::QuadraticForm(SymplecticSpace space, std::uint64_t basis_values)
    : space_(std::move(space)), bv_(basis_values)
{
    if ((bv_ & ~low_mask(space_.dim())) != 0)
        throw std::invalid_argument("QuadraticForm: basis values outside dimension");
}

std::string QuadraticForm::hex() const
{
    return F2Vector(bv_, space_.dim()).hex();
}

int eval_form(const QuadraticForm& q, const F2Vector& x)
{
    const SymplecticSpace& sp = q.space();
    check_dim(x, sp.dim(), "eval_form");
    std::uint64_t c = x.bits();
    int acc = parity(q.basis_values() & c);
    std::uint64_t rest = c;
    while (rest) {
        std::size_t i = static_cast<std::size_t>(std::countr_zero(rest));
        acc ^= parity(sp.gram_row(i) & c & above_mask(i));
        rest &= rest - 1;
    }
    return acc;
}

QuadraticForm translate_form(const QuadraticForm& q, const F2Vector& v)
{
    const SymplecticSpace& sp = q.space();
    check_dim(v, sp.dim(), "translate_form");
    return QuadraticForm(sp, q.basis_values() ^ sp.pairing_mask(v));
}

std::vector<F2Vector> symplectic_basis(const SymplecticSpace& space)
{
    const std::size_t n = space.dim();
    std::vector<F2Vector> candidates;
    candidates.reserve(n);
    for (std::size_t i = 0; i < n; ++i)
        candidates.push_back(F2Vector::unit(i, n));

    std::vector<F2Vector> es, fs;
    while (!candidates.empty()) {
        // lowest-index nonzero candidate
        std::size_t ei = candidates.size();
        for (std::size_t i = 0; i < candidates.size(); ++i) {
            if (!candidates[i].is_zero()) {
                ei = i;
                break;
            }
        }
        if (ei == candidates.size())
            break; // only zero vectors left (cannot happen for nondegenerate grams)
        F2Vector e = candidates[ei];

        std::size_t fi = candidates.size();
        for (std::size_t i = ei + 1; i < candidates.size(); ++i) {
            if (space.pair(e, candidates[i]) == 1) {
                fi = i;
                break;
            }
        }
        if (fi == candidates.size())
            throw NoSymplecticBasisError(
                "symplectic_basis: Gram matrix is degenerate (unpaired vector)");
        F2Vector f = candidates[fi];

        es.push_back(e);
        fs.push_back(f);

        std::vector<F2Vector> next;
        next.reserve(candidates.size() - 2);
        for (std::size_t i = 0; i < candidates.size(); ++i) {
            if (i == ei || i == fi)
                continue;
            F2Vector c = candidates[i];
            if (space.pair(c, f))
                c = c + e;
            if (space.pair(c, e))
                c = c + f;
            next.push_back(c);
        }
        candidates = std::move(next);
    }

    std::vector<F2Vector> out;
    out.reserve(n);
    out.insert(out.end(), es.begin(), es.end());
    out.insert(out.end(), fs.begin(), fs.end());
    return out;
}

namespace {

// Core Arf sum; the basis is trusted here.
int arf_unchecked(const QuadraticForm& q, const std::vector<F2Vector>& basis)
{
    const std::size_t g = basis.size() / 2;
    int acc = 0;
    for (std::size_t i = 0; i < g; ++i)
        acc ^= eval_form(q, basis[i]) & eval_form(q, basis[g + i]);
    return acc;
}

} // namespace

int arf(const QuadraticForm& q)
{
    return arf_unchecked(q, symplectic_basis(q.space()));
}

int arf_in_basis(const QuadraticForm& q, const std::vector<F2Vector>& basis)
{
    const SymplecticSpace& sp = q.space();
    const std::size_t n = sp.dim();
    if (basis.size() != n)
        throw std::invalid_argument("arf_in_basis: basis size must equal dimension");
    const std::size_t g = n / 2;
    for (std::size_t i = 0; i < n; ++i) {
        check_dim(basis[i], n, "arf_in_basis");
        for (std::size_t j = i; j < n; ++j) {
            int expected = (j == i + g && i < g) ? 1 : 0;
            if (sp.pair(basis[i], basis[j]) != expected)
                throw std::invalid_argument("arf_in_basis: basis is not symplectic");
        }
    }
    return arf_unchecked(q, basis);
}

std::vector<F2Vector> random_symplectic_basis(const SymplecticSpace& space,
                                              std::mt19937_64& rng)
{
    const std::size_t n = space.dim();
    std::vector<F2Vector> basis = symplectic_basis(space);
    if (n == 0)
        return basis;
    for (std::size_t round = 0; round < 2 * n; ++round) {
        std::uint64_t bits = 0;
        while (bits == 0)
            bits = rng() & low_mask(n); // raw draws keep the stream portable
        F2Vector w(bits, n);
        for (auto& v : basis)
            if (space.pair(v, w))
                v = v + w;
    }
    return basis;
}

std::vector<QuadraticForm> enumerate_forms(const SymplecticSpace& space)
{
    check_enum_genus(space.genus(), "enumerate_forms");
    const std::uint64_t total = std::uint64_t{1} << space.dim();
    std::vector<QuadraticForm> forms;
    forms.reserve(total);
    for (std::uint64_t bv = 0; bv < total; ++bv)
        forms.emplace_back(space, bv);
    return forms;
}

ArfCounts count_forms_by_arf(std::size_t g)
{
    if (g == 0)
        throw std::invalid_argument("count_forms_by_arf: genus must be positive");
    check_enum_genus(g, "count_forms_by_arf");
    SymplecticSpace space = standard_symplectic(g);
    std::vector<F2Vector> basis = symplectic_basis(space);
    ArfCounts counts;
    const std::uint64_t total = std::uint64_t{1} << (2 * g);
    for (std::uint64_t bv = 0; bv < total; ++bv) {
        if (arf_unchecked(QuadraticForm(space, bv), basis))
            ++counts.n_odd;
        else
            ++counts.n_even;
    }
    return counts;
}

SpecialThetaCounts count_special_theta(std::size_t g, const F2Vector& eta)
{
    if (g == 0)
        throw std::invalid_argument("count_special_theta: genus must be positive");
    check_enum_genus(g, "count_special_theta");
    if (eta.is_zero())
        throw std::invalid_argument("count_special_theta: eta must be nonzero");
    SymplecticSpace space = standard_symplectic(g);
    check_dim(eta, space.dim(), "count_special_theta");
    std::vector<F2Vector> basis = symplectic_basis(space);

    std::vector<std::uint64_t> solutions;
    const std::uint64_t total = std::uint64_t{1} << (2 * g);
    for (std::uint64_t bv = 0; bv < total; ++bv) {
        QuadraticForm q(space, bv);
        if (eval_form(q, eta) == 0 && arf_unchecked(q, basis) == 1)
            solutions.push_back(bv);
    }

    // Solutions must pair up under q -> q + <., eta>: verify, do not assume.
    const std::uint64_t shift = space.pairing_mask(eta);
    for (std::uint64_t bv : solutions) {
        std::uint64_t partner = bv ^ shift;
        if (partner == bv ||
            !std::binary_search(solutions.begin(), solutions.end(), partner))
            throw std::logic_error("count_special_theta: orbit of size 2 violated");
    }

    SpecialThetaCounts counts;
    counts.n_solutions = solutions.size();
    counts.n_vanishing_thetanulls = solutions.size() / 2;
    return counts;
}

Decomposition decompose_and_restrict(const QuadraticForm& q, const F2Vector& eta,
                                     const F2Vector& eps)
{
    const SymplecticSpace& sp = q.space();
    const std::size_t n = sp.dim();
    check_dim(eta, n, "decompose_and_restrict");
    check_dim(eps, n, "decompose_and_restrict");
    if (sp.pair(eta, eps) != 1)
        throw NotHyperbolicPairError("decompose_and_restrict: <eta, eps> must be 1");

    // Kernel of x -> (<x,eta>, <x,eps>) via row reduction of the two functionals.
    std::uint64_t r1 = sp.pairing_mask(eta);
    std::uint64_t r2 = sp.pairing_mask(eps);
    std::size_t p1 = static_cast<std::size_t>(std::countr_zero(r1));
    if ((r2 >> p1) & 1)
        r2 ^= r1;
    std::size_t p2 = static_cast<std::size_t>(std::countr_zero(r2));
    if ((r1 >> p2) & 1)
        r1 ^= r2;

    std::vector<F2Vector> perp_basis;
    perp_basis.reserve(n - 2);
    for (std::size_t j = 0; j < n; ++j) {
        if (j == p1 || j == p2)
            continue;
        std::uint64_t v = std::uint64_t{1} << j;
        if ((r1 >> j) & 1)
            v ^= std::uint64_t{1} << p1;
        if ((r2 >> j) & 1)
            v ^= std::uint64_t{1} << p2;
        perp_basis.emplace_back(v, n);
    }

    // Restricted Gram matrices and basis values.
    std::vector<std::uint64_t> sigma_rows = {std::uint64_t{2}, std::uint64_t{1}};
    SymplecticSpace sigma_space(sigma_rows);
    std::uint64_t sigma_bv = static_cast<std::uint64_t>(eval_form(q, eta)) |
                             (static_cast<std::uint64_t>(eval_form(q, eps)) << 1);

    std::vector<std::uint64_t> perp_rows(n - 2, 0);
    std::uint64_t perp_bv = 0;
    for (std::size_t k = 0; k < perp_basis.size(); ++k) {
        for (std::size_t l = 0; l < perp_basis.size(); ++l)
            perp_rows[k] |=
                static_cast<std::uint64_t>(sp.pair(perp_basis[k], perp_basis[l])) << l;
        perp_bv |= static_cast<std::uint64_t>(eval_form(q, perp_basis[k])) << k;
    }
    SymplecticSpace perp_space(perp_rows);

    return Decomposition{
        Subspace(sp, {eta, eps}),
        Subspace(sp, perp_basis),
        QuadraticForm(sigma_space, sigma_bv),
        QuadraticForm(perp_space, perp_bv),
    };
}

std::uint64_t zero_count(const QuadraticForm& q)
{
    const std::size_t g = q.space().genus();
    check_enum_genus(g, "zero_count");
    const std::size_t n = q.space().dim();
    const std::uint64_t total = std::uint64_t{1} << n;
    std::uint64_t zeros = 0;
    for (std::uint64_t x = 0; x < total; ++x)
        if (eval_form(q, F2Vector(x, n)) == 0)
            ++zeros;
    return zeros;
}

} // namespace nikulin::f2
