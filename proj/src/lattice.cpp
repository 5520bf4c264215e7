#include "nikulin/lattice.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <utility>

#include <nlohmann/json.hpp>

namespace nikulin::lat {

namespace {

void check_square_symmetric(const Mat& gram, const char* what)
{
    const std::size_t n = gram.size();
    if (n == 0)
        throw std::invalid_argument(std::string(what) + ": empty Gram matrix");
    for (const auto& row : gram)
        if (row.size() != n)
            throw std::invalid_argument(std::string(what) + ": Gram matrix must be square");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (gram[i][j] != gram[j][i])
                throw std::invalid_argument(std::string(what) +
                                            ": Gram matrix must be symmetric");
}

std::vector<std::string> default_labels(std::size_t n)
{
    std::vector<std::string> labels;
    labels.reserve(n);
    for (std::size_t i = 0; i < n; ++i)
        labels.push_back("b" + std::to_string(i + 1));
    return labels;
}

// quotient with remainder of minimal absolute value
Int div_nearest(const Int& a, const Int& b)
{
    Int q = a / b;
    Int r = a - q * b;
    if (2 * abs(r) > abs(b))
        q += ((r > 0) == (b > 0)) ? 1 : -1;
    return q;
}

Int floor_div(const Int& num, const Int& den)
{
    Int q = num / den;
    if ((num % den != 0) && ((num < 0) != (den < 0)))
        --q;
    return q;
}

} // namespace

Mat mat_identity(std::size_t n)
{
    Mat m(n, std::vector<Int>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        m[i][i] = 1;
    return m;
}

Mat mat_mul(const Mat& a, const Mat& b)
{
    const std::size_t r = a.size();
    const std::size_t k = r ? a[0].size() : 0;
    const std::size_t c = b.empty() ? 0 : b[0].size();
    if (b.size() != k)
        throw std::invalid_argument("mat_mul: shape mismatch");
    Mat out(r, std::vector<Int>(c, 0));
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t l = 0; l < k; ++l) {
            if (a[i][l] == 0)
                continue;
            for (std::size_t j = 0; j < c; ++j)
                out[i][j] += a[i][l] * b[l][j];
        }
    return out;
}

Mat mat_transpose(const Mat& m)
{
    const std::size_t r = m.size();
    const std::size_t c = r ? m[0].size() : 0;
    Mat out(c, std::vector<Int>(r));
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j)
            out[j][i] = m[i][j];
    return out;
}

Int det(const Mat& m)
{
    const std::size_t n = m.size();
    for (const auto& row : m)
        if (row.size() != n)
            throw std::invalid_argument("det: matrix must be square");
    if (n == 0)
        return 1;
    Mat a = m;
    Int sign = 1;
    Int prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t piv = k;
            for (std::size_t i = k + 1; i < n; ++i)
                if (a[i][k] != 0) {
                    piv = i;
                    break;
                }
            if (piv == k)
                return 0;
            std::swap(a[k], a[piv]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev; // exact (Bareiss)
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    return sign * a[n - 1][n - 1];
}

IntegerLattice::IntegerLattice(Mat gram, std::vector<std::string> labels)
    : gram_(std::move(gram)), labels_(std::move(labels))
{
    check_square_symmetric(gram_, "IntegerLattice");
    if (labels_.empty())
        labels_ = default_labels(gram_.size());
    if (labels_.size() != gram_.size())
        throw std::invalid_argument("IntegerLattice: one label per basis vector");
    even_ = true;
    for (std::size_t i = 0; i < gram_.size(); ++i)
        if (gram_[i][i] % 2 != 0)
            even_ = false;
}

IntegerLattice lattice_from_gram(Mat gram, std::vector<std::string> labels)
{
    return IntegerLattice(std::move(gram), std::move(labels));
}

RationalClass::RationalClass(std::vector<Int> numerators, Int denominator)
    : num_(std::move(numerators)), den_(std::move(denominator))
{
    if (num_.empty())
        throw std::invalid_argument("RationalClass: empty coefficient vector");
    if (den_ != 1 && den_ != 2)
        throw std::invalid_argument("RationalClass: denominator must be 1 or 2");
    if (den_ == 2) {
        bool any_odd = false;
        for (const Int& x : num_)
            if (x % 2 != 0)
                any_odd = true;
        if (!any_odd) {
            for (Int& x : num_)
                x /= 2;
            den_ = 1;
        }
    }
}

RationalClass RationalClass::integral(std::vector<Int> coords)
{
    return RationalClass(std::move(coords), 1);
}

RationalClass RationalClass::half(std::vector<Int> numerators)
{
    return RationalClass(std::move(numerators), 2);
}

Rat inner(const IntegerLattice& L, const RationalClass& u, const RationalClass& v)
{
    const std::size_t n = L.rank();
    if (u.size() != n || v.size() != n)
        throw std::invalid_argument("inner: coefficient length must equal rank");
    Int s = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (u.numerators()[i] == 0)
            continue;
        Int row = 0;
        for (std::size_t j = 0; j < n; ++j)
            row += L.gram()[i][j] * v.numerators()[j];
        s += u.numerators()[i] * row;
    }
    return Rat(s, u.denominator() * v.denominator());
}

GenusEuler genus_and_euler(const IntegerLattice& L, const RationalClass& v)
{
    Rat norm = inner(L, v, v);
    if (denominator(norm) != 1 || numerator(norm) % 2 != 0)
        throw NotACurveClassError("genus_and_euler: self-intersection " +
                                  norm.str() + " is not an even integer");
    Int half = numerator(norm) / 2;
    return GenusEuler{1 + half, 2 + half};
}

SnfResult smith_normal_form(const Mat& m)
{
    const std::size_t rows = m.size();
    const std::size_t cols = rows ? m[0].size() : 0;
    for (const auto& row : m)
        if (row.size() != cols)
            throw std::invalid_argument("smith_normal_form: ragged matrix");

    SnfResult res{m, mat_identity(rows), mat_identity(cols)};
    Mat& d = res.d;
    Mat& u = res.u;
    Mat& v = res.v;

    auto row_swap = [&](std::size_t i, std::size_t j) {
        std::swap(d[i], d[j]);
        std::swap(u[i], u[j]);
    };
    auto col_swap = [&](std::size_t i, std::size_t j) {
        for (std::size_t r = 0; r < rows; ++r)
            std::swap(d[r][i], d[r][j]);
        for (std::size_t r = 0; r < cols; ++r)
            std::swap(v[r][i], v[r][j]);
    };
    // row_i -= q * row_j  /  col_i -= q * col_j
    auto row_sub = [&](std::size_t i, std::size_t j, const Int& q) {
        for (std::size_t k = 0; k < cols; ++k)
            d[i][k] -= q * d[j][k];
        for (std::size_t k = 0; k < rows; ++k)
            u[i][k] -= q * u[j][k];
    };
    auto col_sub = [&](std::size_t i, std::size_t j, const Int& q) {
        for (std::size_t k = 0; k < rows; ++k)
            d[k][i] -= q * d[k][j];
        for (std::size_t k = 0; k < cols; ++k)
            v[k][i] -= q * v[k][j];
    };

    const std::size_t steps = std::min(rows, cols);
    for (std::size_t t = 0; t < steps; ++t) {
        // smallest nonzero entry of the trailing submatrix becomes the pivot
        std::size_t pi = rows, pj = cols;
        for (std::size_t i = t; i < rows; ++i)
            for (std::size_t j = t; j < cols; ++j)
                if (d[i][j] != 0 &&
                    (pi == rows || abs(d[i][j]) < abs(d[pi][pj]))) {
                    pi = i;
                    pj = j;
                }
        if (pi == rows)
            break; // submatrix is zero
        if (pi != t)
            row_swap(t, pi);
        if (pj != t)
            col_swap(t, pj);

        for (bool stable = false; !stable;) {
            stable = true;
            for (std::size_t i = t + 1; i < rows; ++i) {
                if (d[i][t] == 0)
                    continue;
                row_sub(i, t, div_nearest(d[i][t], d[t][t]));
                if (d[i][t] != 0) { // remainder is a smaller pivot
                    row_swap(t, i);
                    stable = false;
                }
            }
            if (!stable)
                continue;
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (d[t][j] == 0)
                    continue;
                col_sub(j, t, div_nearest(d[t][j], d[t][t]));
                if (d[t][j] != 0) {
                    col_swap(t, j);
                    stable = false;
                }
            }
            if (!stable)
                continue;
            // divisibility chain: pivot must divide the trailing block
            for (std::size_t i = t + 1; i < rows && stable; ++i)
                for (std::size_t j = t + 1; j < cols && stable; ++j)
                    if (d[i][j] % d[t][t] != 0) {
                        row_sub(t, i, Int(-1)); // fold row i into the pivot row
                        stable = false;
                    }
        }
    }

    for (std::size_t t = 0; t < steps; ++t)
        if (d[t][t] < 0) {
            for (std::size_t k = 0; k < cols; ++k)
                d[t][k] = -d[t][k];
            for (std::size_t k = 0; k < rows; ++k)
                u[t][k] = -u[t][k];
        }
    return res;
}

DiscriminantData discriminant_group(const IntegerLattice& L)
{
    SnfResult snf = smith_normal_form(L.gram());
    DiscriminantData data;
    data.group_order = 1;
    for (std::size_t i = 0; i < L.rank(); ++i) {
        const Int& di = snf.d[i][i];
        if (di == 0)
            throw DegenerateLatticeError("discriminant_group: singular Gram matrix");
        data.elementary_divisors.push_back(di);
        data.group_order *= di;
    }
    return data;
}

IntegerLattice nikulin_lattice()
{
    // basis N1..N7, M with M = (N1+...+N8)/2: M.M = -4, M.Ni = -1
    Mat gram(8, std::vector<Int>(8, 0));
    for (std::size_t i = 0; i < 7; ++i) {
        gram[i][i] = -2;
        gram[i][7] = gram[7][i] = -1;
    }
    gram[7][7] = -4;
    std::vector<std::string> labels = {"N1", "N2", "N3", "N4", "N5", "N6", "N7", "M"};
    IntegerLattice L(std::move(gram), std::move(labels));

    // The derived eighth node N8 = 2M - N1 - ... - N7 must behave like the
    // others: self-intersection -2, disjoint from N1..N7.
    std::vector<Int> n8(8, -1);
    n8[7] = 2;
    RationalClass cls8 = RationalClass::integral(n8);
    if (inner(L, cls8, cls8) != -2)
        throw std::logic_error("nikulin_lattice: derived N8 has wrong self-intersection");
    for (std::size_t j = 0; j < 7; ++j) {
        std::vector<Int> ej(8, 0);
        ej[j] = 1;
        if (inner(L, cls8, RationalClass::integral(ej)) != 0)
            throw std::logic_error("nikulin_lattice: derived N8 meets N" +
                                   std::to_string(j + 1));
    }
    return L;
}

IntegerLattice lambda_h(long long h)
{
    if (h < 2)
        throw std::invalid_argument("lambda_h: genus must be >= 2");
    IntegerLattice nik = nikulin_lattice();
    Mat gram(9, std::vector<Int>(9, 0));
    gram[0][0] = 2 * (Int(h) - 1);
    for (std::size_t i = 0; i < 8; ++i)
        for (std::size_t j = 0; j < 8; ++j)
            gram[i + 1][j + 1] = nik.gram()[i][j];
    std::vector<std::string> labels = {"H"};
    labels.insert(labels.end(), nik.labels().begin(), nik.labels().end());
    return IntegerLattice(std::move(gram), std::move(labels));
}

IntegerLattice e8_minus2()
{
    // E8 Cartan matrix, nodes 1..8 with the branch node in position 4
    static const int edges[][2] = {{0, 2}, {1, 3}, {2, 3}, {3, 4},
                                   {4, 5}, {5, 6}, {6, 7}};
    Mat gram(8, std::vector<Int>(8, 0));
    for (std::size_t i = 0; i < 8; ++i)
        gram[i][i] = -4; // -2 * 2
    for (const auto& e : edges)
        gram[e[0]][e[1]] = gram[e[1]][e[0]] = 2; // -2 * (-1)
    std::vector<std::string> labels;
    for (int i = 1; i <= 8; ++i)
        labels.push_back("E" + std::to_string(i));
    return IntegerLattice(std::move(gram), std::move(labels));
}

bool glue_check(const IntegerLattice& L, const RationalClass& c)
{
    if (c.denominator() != 2)
        throw std::invalid_argument("glue_check: class must have denominator 2");
    if (c.size() != L.rank())
        throw std::invalid_argument("glue_check: coefficient length must equal rank");
    // c . b_j integral for every basis vector
    for (std::size_t j = 0; j < L.rank(); ++j) {
        Int s = 0;
        for (std::size_t i = 0; i < L.rank(); ++i)
            s += c.numerators()[i] * L.gram()[i][j];
        if (s % 2 != 0)
            return false;
    }
    // c . c an even integer
    Int nn = 0;
    for (std::size_t i = 0; i < L.rank(); ++i)
        for (std::size_t j = 0; j < L.rank(); ++j)
            nn += c.numerators()[i] * L.gram()[i][j] * c.numerators()[j];
    return nn % 8 == 0;
}

IntegerLattice glued_overlattice(const IntegerLattice& L, const RationalClass& c)
{
    if (!glue_check(L, c))
        throw std::invalid_argument("glued_overlattice: class fails the glue conditions");
    const std::size_t n = L.rank();

    // Work in half-units: integer row y stands for (1/2) sum y_i b_i.
    // The overlattice is the row space of [2I; numerators]; reduce to a
    // square basis by integer row echelon.
    Mat rows(n + 1, std::vector<Int>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        rows[i][i] = 2;
    rows[n] = c.numerators();

    std::size_t r = 0;
    for (std::size_t col = 0; col < n; ++col) {
        while (true) {
            std::size_t piv = rows.size();
            for (std::size_t i = r; i < rows.size(); ++i)
                if (rows[i][col] != 0 &&
                    (piv == rows.size() || abs(rows[i][col]) < abs(rows[piv][col])))
                    piv = i;
            if (piv == rows.size())
                break;
            std::swap(rows[r], rows[piv]);
            bool again = false;
            for (std::size_t i = r + 1; i < rows.size(); ++i) {
                if (rows[i][col] == 0)
                    continue;
                Int q = div_nearest(rows[i][col], rows[r][col]);
                for (std::size_t k = 0; k < n; ++k)
                    rows[i][k] -= q * rows[r][k];
                if (rows[i][col] != 0)
                    again = true;
            }
            if (!again)
                break;
        }
        if (r < rows.size() && rows[r][col] != 0)
            ++r;
    }
    if (r != n)
        throw DegenerateLatticeError("glued_overlattice: generators do not span");
    rows.resize(n);

    Mat gram(n, std::vector<Int>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Int s = 0;
            for (std::size_t k = 0; k < n; ++k)
                for (std::size_t l = 0; l < n; ++l)
                    s += rows[i][k] * L.gram()[k][l] * rows[j][l];
            if (s % 4 != 0)
                throw std::logic_error("glued_overlattice: non-integral Gram entry");
            gram[i][j] = s / 4;
        }
    return IntegerLattice(std::move(gram), {});
}

NonStandardClasses nonstandard_classes(long long h)
{
    if (h % 2 == 0)
        throw NonStandardParityError(
            "nonstandard_classes: a non-primitive embedding forces odd genus");
    if (h < 3)
        throw std::invalid_argument("nonstandard_classes: need odd h >= 3");

    IntegerLattice L = lambda_h(h);
    std::vector<Int> two_m(9, 0), m_vec(9, 0);
    two_m[8] = 2;
    m_vec[8] = 1;
    RationalClass cls_2m = RationalClass::integral(two_m);
    RationalClass cls_m = RationalClass::integral(m_vec);

    auto make = [&](std::vector<Int> nums) {
        RationalClass cls = RationalClass::half(std::move(nums));
        if (!glue_check(L, cls))
            throw std::logic_error("nonstandard_classes: glue conditions violated");
        Rat norm = inner(L, cls, cls);
        GenusEuler ge = genus_and_euler(L, cls);
        Rat branch = inner(L, cls, cls_2m);
        if (denominator(branch) != 1)
            throw std::logic_error("nonstandard_classes: non-integral branch count");
        return GlueClassData{numerator(norm), ge.genus, numerator(branch),
                             inner(L, cls, cls_m), cls};
    };

    NonStandardClasses out{static_cast<int>(h % 4),
                           make(h % 4 == 3 ? std::vector<Int>{1, -1, -1, 0, 0, 0, 0, 0, 0}
                                           : std::vector<Int>{1, -1, -1, -1, -1, 0, 0, 0, 0}),
                           make(h % 4 == 3 ? std::vector<Int>{1, 1, 1, 0, 0, 0, 0, 0, -2}
                                           : std::vector<Int>{1, 1, 1, 1, 1, 0, 0, 0, -2})};
    return out;
}

namespace {

struct NormCertificate {
    long long count;
    std::vector<Int> sample;
};

const NormCertificate& e8m2_certificate(const Int& norm)
{
    static const NormCertificate cert4 = [] {
        ShortVectorResult sv = short_vectors(e8_minus2(), Int(-4), true);
        if (sv.count <= 0)
            throw std::logic_error("no vector of norm -4 in E8(-2)");
        return NormCertificate{sv.count, sv.vectors.front()};
    }();
    static const NormCertificate cert8 = [] {
        ShortVectorResult sv = short_vectors(e8_minus2(), Int(-8), true);
        if (sv.count <= 0)
            throw std::logic_error("no vector of norm -8 in E8(-2)");
        return NormCertificate{sv.count, sv.vectors.front()};
    }();
    if (norm == -4)
        return cert4;
    if (norm == -8)
        return cert8;
    throw std::invalid_argument("e8m2_certificate: only norms -4 and -8 are certified");
}

} // namespace

PicTildeClass pic_tilde_class(long long h)
{
    if (h < 2)
        throw std::invalid_argument("pic_tilde_class: genus must be >= 2");
    PicTildeClass out;
    out.h_tilde_norm = 4 * Int(h) - 4;
    out.required_v_norm = (h % 2 == 0) ? -4 : -8;
    Int four_a = out.h_tilde_norm + out.required_v_norm;
    out.a_norm = four_a / 4;
    if (four_a % 4 != 0 || out.a_norm % 2 != 0)
        throw std::logic_error("pic_tilde_class: parity dichotomy violated");
    out.chi = 2 + out.a_norm / 2;
    out.r = static_cast<long long>(out.chi) - 1;

    // Existence of v and validity of (H~ + v)/2 as an index-2 generator.
    const NormCertificate& cert = e8m2_certificate(out.required_v_norm);
    IntegerLattice e8 = e8_minus2();
    Mat gram(9, std::vector<Int>(9, 0));
    gram[0][0] = out.h_tilde_norm;
    for (std::size_t i = 0; i < 8; ++i)
        for (std::size_t j = 0; j < 8; ++j)
            gram[i + 1][j + 1] = e8.gram()[i][j];
    std::vector<std::string> labels = {"Ht"};
    labels.insert(labels.end(), e8.labels().begin(), e8.labels().end());
    IntegerLattice lambda_tilde(std::move(gram), std::move(labels));

    std::vector<Int> nums(9, 0);
    nums[0] = 1;
    for (std::size_t i = 0; i < 8; ++i)
        nums[i + 1] = cert.sample[i];
    if (!glue_check(lambda_tilde, RationalClass::half(nums)))
        throw std::logic_error("pic_tilde_class: (H~ + v)/2 fails the glue conditions");
    return out;
}

namespace {

// adjugate via cofactors; fine at rank <= 9
Mat adjugate(const Mat& m)
{
    const std::size_t n = m.size();
    Mat adj(n, std::vector<Int>(n));
    if (n == 0)
        return adj;
    if (n == 1) {
        adj[0][0] = 1;
        return adj;
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Mat minor(n - 1, std::vector<Int>(n - 1));
            for (std::size_t r = 0, mr = 0; r < n; ++r) {
                if (r == i)
                    continue;
                for (std::size_t c = 0, mc = 0; c < n; ++c) {
                    if (c == j)
                        continue;
                    minor[mr][mc++] = m[r][c];
                }
                ++mr;
            }
            Int cof = det(minor);
            adj[j][i] = ((i + j) % 2 == 0) ? cof : -cof;
        }
    return adj;
}

} // namespace

ShortVectorResult short_vectors(const IntegerLattice& L, const Int& target_norm,
                                bool collect)
{
    int sign = definiteness(L);
    if (sign == 0)
        throw IndefiniteLatticeError("short_vectors: lattice must be definite");

    ShortVectorResult res;
    if (target_norm == 0)
        return res; // only nonzero vectors are counted
    if ((sign > 0) != (target_norm > 0))
        return res; // no vector can have a norm of the wrong sign

    const std::size_t n = L.rank();
    Mat q(n, std::vector<Int>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            q[i][j] = sign * L.gram()[i][j];
    const Int target = sign * target_norm;

    // Exact prefix pruning: with x_0..x_k fixed, the minimum of x^T Q x
    // over all tails is  p^T A_k p / m_k,  where m_k is the determinant of
    // the tail block and A_k = m_k Q_PP - Q_PT adj(Q_TT) Q_TP is the
    // integer-scaled Schur complement. A prefix survives iff
    // p^T A_k p <= target * m_k; at the last level A = Q and the bound is
    // an exact norm check, so the enumeration is certified complete.
    std::vector<Mat> schur(n);
    std::vector<Int> bound(n); // target * m_k
    for (std::size_t k = 0; k < n; ++k) {
        const std::size_t tail = n - 1 - k;
        if (tail == 0) {
            schur[k] = q;
            bound[k] = target;
            continue;
        }
        Mat qtt(tail, std::vector<Int>(tail));
        for (std::size_t i = 0; i < tail; ++i)
            for (std::size_t j = 0; j < tail; ++j)
                qtt[i][j] = q[k + 1 + i][k + 1 + j];
        Int mk = det(qtt);
        Mat adj = adjugate(qtt);
        Mat a(k + 1, std::vector<Int>(k + 1));
        for (std::size_t i = 0; i <= k; ++i)
            for (std::size_t j = 0; j <= k; ++j) {
                Int cross = 0;
                for (std::size_t s = 0; s < tail; ++s)
                    for (std::size_t t = 0; t < tail; ++t)
                        cross += q[i][k + 1 + s] * adj[s][t] * q[k + 1 + t][j];
                a[i][j] = mk * q[i][j] - cross;
            }
        schur[k] = std::move(a);
        bound[k] = target * mk;
    }

    constexpr long long kNodeBudget = 50'000'000;
    long long nodes = 0;
    std::vector<Int> x(n, 0);

    std::function<void(std::size_t)> descend = [&](std::size_t k) {
        const Mat& a = schur[k];
        // level-k inequality as a parabola in x_k
        const Int& quad = a[k][k];
        Int lin = 0;
        Int base = 0;
        for (std::size_t j = 0; j < k; ++j) {
            if (x[j] == 0)
                continue;
            lin += a[k][j] * x[j];
            for (std::size_t i = 0; i < k; ++i)
                base += x[i] * a[i][j] * x[j];
        }
        auto admissible = [&](const Int& xi) {
            return quad * xi * xi + 2 * lin * xi + base <= bound[k];
        };
        auto visit = [&](const Int& xi) {
            if (++nodes > kNodeBudget)
                throw ResourceLimitError("short_vectors: enumeration budget exceeded");
            x[k] = xi;
            if (k + 1 < n) {
                descend(k + 1);
                return;
            }
            // leaf: exact norm and nonzero checks
            if (quad * xi * xi + 2 * lin * xi + base != target)
                return;
            bool nonzero = false;
            for (const Int& c : x)
                if (c != 0)
                    nonzero = true;
            if (!nonzero)
                return;
            ++res.count;
            if (collect)
                res.vectors.push_back(x);
        };
        Int start = floor_div(-lin, quad); // parabola vertex, rounded down
        for (Int xi = start; admissible(xi); --xi)
            visit(xi);
        for (Int xi = start + 1; admissible(xi); ++xi)
            visit(xi);
        x[k] = 0;
    };
    descend(0);
    return res;
}

int definiteness(const IntegerLattice& L)
{
    const std::size_t n = L.rank();
    bool pos = true, neg = true;
    for (std::size_t k = 1; k <= n; ++k) {
        Mat minor(k, std::vector<Int>(k));
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j)
                minor[i][j] = L.gram()[i][j];
        Int dk = det(minor);
        if (dk <= 0)
            pos = false;
        if ((k % 2 == 0) ? (dk <= 0) : (dk >= 0))
            neg = false;
    }
    return pos ? 1 : (neg ? -1 : 0);
}

std::string to_json_string(const IntegerLattice& L)
{
    nlohmann::ordered_json j;
    j["labels"] = L.labels();
    nlohmann::ordered_json gram = nlohmann::ordered_json::array();
    for (const auto& row : L.gram()) {
        nlohmann::ordered_json jrow = nlohmann::ordered_json::array();
        for (const Int& x : row)
            jrow.push_back(x.str());
        gram.push_back(jrow);
    }
    j["gram"] = gram;
    j["even"] = L.is_even();
    j["disc_order"] = Int(abs(det(L.gram()))).str();
    return j.dump();
}

} // namespace nikulin::lat
