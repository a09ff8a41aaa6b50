#include "og10lat/int_matrix.hpp"

#include <algorithm>

namespace og10lat {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    entries_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_)
            throw precondition_error("ragged rows in matrix literal");
        for (long x : r)
            entries_.emplace_back(x);
    }
}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<RowVec>& rows, std::size_t cols) {
    IntMatrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols)
            throw precondition_error("row length does not match column count");
        for (std::size_t j = 0; j < cols; ++j)
            m(i, j) = rows[i][j];
    }
    return m;
}

RowVec IntMatrix::row(std::size_t i) const {
    RowVec r(cols_);
    for (std::size_t j = 0; j < cols_; ++j)
        r[j] = (*this)(i, j);
    return r;
}

void IntMatrix::set_row(std::size_t i, const RowVec& r) {
    for (std::size_t j = 0; j < cols_; ++j)
        (*this)(i, j) = r[j];
}

bool IntMatrix::is_symmetric() const {
    if (!is_square())
        return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = i + 1; j < cols_; ++j)
            if ((*this)(i, j) != (*this)(j, i))
                return false;
    return true;
}

bool IntMatrix::is_zero() const {
    return std::all_of(entries_.begin(), entries_.end(),
                       [](const Int& x) { return x == 0; });
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            t(j, i) = (*this)(i, j);
    return t;
}

IntMatrix IntMatrix::negated() const {
    IntMatrix n(rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            n(i, j) = -(*this)(i, j);
    return n;
}

IntMatrix IntMatrix::operator*(const IntMatrix& other) const {
    if (cols_ != other.rows_)
        throw precondition_error("matrix product dimension mismatch");
    IntMatrix p(rows_, other.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Int& a = (*this)(i, k);
            if (a == 0)
                continue;
            for (std::size_t j = 0; j < other.cols_; ++j)
                p(i, j) += a * other(k, j);
        }
    return p;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
    if (a == b)
        return;
    for (std::size_t j = 0; j < cols_; ++j)
        std::swap((*this)(a, j), (*this)(b, j));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
    if (a == b)
        return;
    for (std::size_t i = 0; i < rows_; ++i)
        std::swap((*this)(i, a), (*this)(i, b));
}

RatMatrix::RatMatrix(const IntMatrix& m) : RatMatrix(m.rows(), m.cols()) {
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            (*this)(i, j) = m(i, j);
}

RatMatrix RatMatrix::identity(std::size_t n) {
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

RatMatrix RatMatrix::from_rows(const std::vector<RatVec>& rows, std::size_t cols) {
    RatMatrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols)
            throw precondition_error("row length does not match column count");
        for (std::size_t j = 0; j < cols; ++j)
            m(i, j) = rows[i][j];
    }
    return m;
}

RatVec RatMatrix::row(std::size_t i) const {
    RatVec r(cols_);
    for (std::size_t j = 0; j < cols_; ++j)
        r[j] = (*this)(i, j);
    return r;
}

RatMatrix RatMatrix::operator*(const RatMatrix& other) const {
    if (cols_ != other.rows_)
        throw precondition_error("matrix product dimension mismatch");
    RatMatrix p(rows_, other.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Rat& a = (*this)(i, k);
            if (a == 0)
                continue;
            for (std::size_t j = 0; j < other.cols_; ++j)
                p(i, j) += a * other(k, j);
        }
    return p;
}

std::vector<Int> SmithDecomposition::diagonal() const {
    std::vector<Int> d;
    std::size_t n = std::min(s.rows(), s.cols());
    d.reserve(n);
    for (std::size_t i = 0; i < n; ++i)
        d.push_back(s(i, i));
    return d;
}

std::vector<Int> SmithDecomposition::invariant_factors() const {
    std::vector<Int> f;
    for (const Int& d : diagonal())
        if (d > 1)
            f.push_back(d);
    return f;
}

Int det(const IntMatrix& m) {
    if (!m.is_square())
        throw precondition_error("determinant requires a square matrix");
    std::size_t n = m.rows();
    if (n == 0)
        return 1;
    IntMatrix a = m;
    int sign = 1;
    Int prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && a(p, k) == 0)
                ++p;
            if (p == n)
                return 0;
            a.swap_rows(k, p);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Int t = a(i, j) * a(k, k) - a(i, k) * a(k, j);
                // exact by the Sylvester identity
                mpz_divexact(a(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            a(i, k) = 0;
        }
        prev = a(k, k);
    }
    return sign * a(n - 1, n - 1);
}

namespace {

// Unimodular row transform turning (w[r0][j], w[r][j]) into (g, 0), with
// g = gcd. When the pivot a divides b this is a plain reduction that leaves
// row r0 untouched; otherwise an extended-gcd combination that strictly
// shrinks |a|, which guarantees termination of the elimination loops.
void gcd_row_step(IntMatrix& w, IntMatrix& u, std::size_t r0, std::size_t r, std::size_t j) {
    Int a = w(r0, j), b = w(r, j);
    if (a != 0 && b % a == 0) {
        Int q = b / a;
        for (std::size_t c = 0; c < w.cols(); ++c)
            w(r, c) -= q * w(r0, c);
        for (std::size_t c = 0; c < u.cols(); ++c)
            u(r, c) -= q * u(r0, c);
        return;
    }
    Int g, s, t;
    mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    Int ag = a / g, bg = b / g;
    auto apply = [&](IntMatrix& m) {
        for (std::size_t c = 0; c < m.cols(); ++c) {
            Int x = m(r0, c), y = m(r, c);
            m(r0, c) = s * x + t * y;
            m(r, c) = ag * y - bg * x;
        }
    };
    apply(w);
    apply(u);
}

void negate_row(IntMatrix& m, std::size_t r) {
    for (std::size_t c = 0; c < m.cols(); ++c)
        m(r, c) = -m(r, c);
}

void permute_rows(IntMatrix& m, const std::vector<std::size_t>& perm) {
    IntMatrix out(m.rows(), m.cols());
    for (std::size_t i = 0; i < perm.size(); ++i)
        out.set_row(i, m.row(perm[i]));
    m = out;
}

} // namespace

HermiteResult hnf_with_transform(const IntMatrix& m) {
    std::size_t nr = m.rows(), nc = m.cols();
    IntMatrix w = m;
    IntMatrix u = IntMatrix::identity(nr);
    std::vector<bool> active(nr, true);
    // (pivot column, pivot row), discovered right to left
    std::vector<std::pair<std::size_t, std::size_t>> pivots;

    for (std::size_t jj = nc; jj-- > 0;) {
        std::vector<std::size_t> nz;
        for (std::size_t r = 0; r < nr; ++r)
            if (active[r] && w(r, jj) != 0)
                nz.push_back(r);
        if (nz.empty())
            continue;
        std::size_t r0 = nz[0];
        for (std::size_t k = 1; k < nz.size(); ++k)
            gcd_row_step(w, u, r0, nz[k], jj);
        if (w(r0, jj) < 0) {
            negate_row(w, r0);
            negate_row(u, r0);
        }
        pivots.emplace_back(jj, r0);
        active[r0] = false;
    }

    // pivot rows by ascending pivot column, then the zero rows
    std::reverse(pivots.begin(), pivots.end());
    std::vector<std::size_t> perm;
    perm.reserve(nr);
    for (const auto& [col, row] : pivots)
        perm.push_back(row);
    for (std::size_t r = 0; r < nr; ++r)
        if (active[r])
            perm.push_back(r);
    permute_rows(w, perm);
    permute_rows(u, perm);

    // reduce entries below each pivot into [0, pivot); descending pivot
    // order keeps already-reduced columns intact
    std::size_t r = pivots.size();
    for (std::size_t i = r; i-- > 0;) {
        std::size_t pc = pivots[i].first;
        const Int p = w(i, pc);
        for (std::size_t k = i + 1; k < r; ++k) {
            Int q;
            mpz_fdiv_q(q.get_mpz_t(), w(k, pc).get_mpz_t(), p.get_mpz_t());
            if (q == 0)
                continue;
            for (std::size_t c = 0; c < nc; ++c)
                w(k, c) -= q * w(i, c);
            for (std::size_t c = 0; c < nr; ++c)
                u(k, c) -= q * u(i, c);
        }
    }
    return HermiteResult{std::move(w), std::move(u)};
}

IntMatrix hnf(const IntMatrix& m) {
    return hnf_with_transform(m).h;
}

std::size_t rank(const IntMatrix& m) {
    IntMatrix h = hnf(m);
    std::size_t r = 0;
    for (std::size_t i = 0; i < h.rows(); ++i) {
        bool zero = true;
        for (std::size_t j = 0; j < h.cols(); ++j)
            if (h(i, j) != 0) {
                zero = false;
                break;
            }
        if (!zero)
            ++r;
    }
    return r;
}

namespace {

// Column counterpart of gcd_row_step.
void gcd_col_step(IntMatrix& w, IntMatrix& v, std::size_t c0, std::size_t c, std::size_t i) {
    Int a = w(i, c0), b = w(i, c);
    if (a != 0 && b % a == 0) {
        Int q = b / a;
        for (std::size_t r = 0; r < w.rows(); ++r)
            w(r, c) -= q * w(r, c0);
        for (std::size_t r = 0; r < v.rows(); ++r)
            v(r, c) -= q * v(r, c0);
        return;
    }
    Int g, s, t;
    mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    Int ag = a / g, bg = b / g;
    auto apply = [&](IntMatrix& m) {
        for (std::size_t r = 0; r < m.rows(); ++r) {
            Int x = m(r, c0), y = m(r, c);
            m(r, c0) = s * x + t * y;
            m(r, c) = ag * y - bg * x;
        }
    };
    apply(w);
    apply(v);
}

} // namespace

SmithDecomposition snf(const IntMatrix& m) {
    std::size_t nr = m.rows(), nc = m.cols();
    IntMatrix s = m;
    IntMatrix u = IntMatrix::identity(nr);
    IntMatrix v = IntMatrix::identity(nc);

    std::size_t n = std::min(nr, nc);
    for (std::size_t t = 0; t < n; ++t) {
        // first nonzero entry of the trailing block, row-major
        std::size_t pi = nr, pj = nc;
        for (std::size_t i = t; i < nr && pi == nr; ++i)
            for (std::size_t j = t; j < nc; ++j)
                if (s(i, j) != 0) {
                    pi = i;
                    pj = j;
                    break;
                }
        if (pi == nr)
            break;
        s.swap_rows(t, pi);
        u.swap_rows(t, pi);
        s.swap_cols(t, pj);
        v.swap_cols(t, pj);

        for (;;) {
            for (std::size_t i = t + 1; i < nr; ++i)
                if (s(i, t) != 0)
                    gcd_row_step(s, u, t, i, t);
            bool row_clear = true;
            for (std::size_t j = t + 1; j < nc; ++j)
                if (s(t, j) != 0) {
                    gcd_col_step(s, v, t, j, t);
                    row_clear = false;
                }
            if (!row_clear)
                continue; // column t may have been disturbed
            bool col_clear = true;
            for (std::size_t i = t + 1; i < nr; ++i)
                if (s(i, t) != 0) {
                    col_clear = false;
                    break;
                }
            if (!col_clear)
                continue;

            // pivot divides the rest of the block, else absorb the
            // offending row and restart the cleaning loop
            std::size_t bi = nr, bj = nc;
            for (std::size_t i = t + 1; i < nr && bi == nr; ++i)
                for (std::size_t j = t + 1; j < nc; ++j)
                    if (s(i, j) % s(t, t) != 0) {
                        bi = i;
                        bj = j;
                        break;
                    }
            if (bi == nr)
                break;
            (void)bj;
            for (std::size_t c = 0; c < nc; ++c)
                s(t, c) += s(bi, c);
            for (std::size_t c = 0; c < nr; ++c)
                u(t, c) += u(bi, c);
        }
        if (s(t, t) < 0) {
            negate_row(s, t);
            negate_row(u, t);
        }
    }
    return SmithDecomposition{std::move(u), std::move(s), std::move(v)};
}

IntMatrix kernel_basis(const IntMatrix& m) {
    HermiteResult hr = hnf_with_transform(m);
    std::size_t r = rank(hr.h);
    std::size_t dim = m.rows() - r;
    IntMatrix k(dim, m.rows());
    for (std::size_t i = 0; i < dim; ++i)
        k.set_row(i, hr.u.row(r + i));
    // the canonical form of the (already saturated) kernel lattice
    IntMatrix canon = hnf(k);
    IntMatrix out(dim, m.rows());
    for (std::size_t i = 0; i < dim; ++i)
        out.set_row(i, canon.row(i));
    return out;
}

Signature signature_of_symmetric(const IntMatrix& m) {
    if (!m.is_symmetric())
        throw precondition_error("signature requires a symmetric matrix");
    std::size_t n = m.rows();
    RatMatrix a(m);
    std::vector<bool> live(n, true);
    Signature sig;
    std::size_t remaining = n;

    while (remaining > 0) {
        // nonzero diagonal pivot, lowest index
        std::size_t p = n;
        for (std::size_t i = 0; i < n; ++i)
            if (live[i] && a(i, i) != 0) {
                p = i;
                break;
            }
        if (p < n) {
            const Rat piv = a(p, p);
            if (piv > 0)
                ++sig.positive;
            else
                ++sig.negative;
            live[p] = false;
            --remaining;
            for (std::size_t i = 0; i < n; ++i) {
                if (!live[i] || a(i, p) == 0)
                    continue;
                const Rat f = a(i, p) / piv;
                for (std::size_t j = 0; j < n; ++j)
                    if (live[j])
                        a(i, j) -= f * a(p, j);
            }
            continue;
        }
        // diagonal is zero; find an off-diagonal entry
        std::size_t bi = n, bj = n;
        for (std::size_t i = 0; i < n && bi == n; ++i) {
            if (!live[i])
                continue;
            for (std::size_t j = i + 1; j < n; ++j)
                if (live[j] && a(i, j) != 0) {
                    bi = i;
                    bj = j;
                    break;
                }
        }
        if (bi == n) {
            sig.zero += static_cast<int>(remaining);
            break;
        }
        // hyperbolic block [[0,b],[b,0]] contributes (1,1); project the
        // remaining vectors orthogonally to span(e_bi, e_bj)
        const Rat b = a(bi, bj);
        ++sig.positive;
        ++sig.negative;
        live[bi] = live[bj] = false;
        remaining -= 2;
        for (std::size_t k = 0; k < n; ++k) {
            if (!live[k])
                continue;
            const Rat ak = a(k, bj) / b; // coefficient along e_bi
            const Rat bk = a(k, bi) / b; // coefficient along e_bj
            if (ak == 0 && bk == 0)
                continue;
            for (std::size_t l = 0; l < n; ++l)
                if (live[l])
                    a(k, l) -= ak * a(bi, l) + bk * a(bj, l);
        }
    }
    return sig;
}

Int dot(const RowVec& a, const RowVec& b) {
    Int s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        s += a[i] * b[i];
    return s;
}

RowVec row_times(const RowVec& x, const IntMatrix& m) {
    if (x.size() != m.rows())
        throw precondition_error("vector-matrix dimension mismatch");
    RowVec r(m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        if (x[i] == 0)
            continue;
        for (std::size_t j = 0; j < m.cols(); ++j)
            r[j] += x[i] * m(i, j);
    }
    return r;
}

RatVec rat_row_times(const RatVec& x, const IntMatrix& m) {
    if (x.size() != m.rows())
        throw precondition_error("vector-matrix dimension mismatch");
    RatVec r(m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        if (x[i] == 0)
            continue;
        for (std::size_t j = 0; j < m.cols(); ++j)
            r[j] += x[i] * m(i, j);
    }
    return r;
}

Rat rat_dot(const RatVec& a, const RatVec& b) {
    Rat s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        s += a[i] * b[i];
    return s;
}

Int vec_gcd(const RowVec& v) {
    Int g = 0;
    for (const Int& x : v)
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    return g;
}

bool is_zero_vec(const RowVec& v) {
    return std::all_of(v.begin(), v.end(), [](const Int& x) { return x == 0; });
}

std::string format_vec(const RowVec& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i)
            s += ",";
        s += v[i].get_str();
    }
    return s + ")";
}

std::string format_rat_vec(const RatVec& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i)
            s += ",";
        s += v[i].get_str();
    }
    return s + ")";
}

RatMatrix inverse(const RatMatrix& m) {
    if (m.rows() != m.cols())
        throw precondition_error("inverse requires a square matrix");
    std::size_t n = m.rows();
    RatMatrix a = m;
    RatMatrix inv = RatMatrix::identity(n);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        while (p < n && a(p, k) == 0)
            ++p;
        if (p == n)
            throw math_error("matrix is singular");
        if (p != k)
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(a(k, j), a(p, j));
                std::swap(inv(k, j), inv(p, j));
            }
        const Rat piv = a(k, k);
        for (std::size_t j = 0; j < n; ++j) {
            a(k, j) /= piv;
            inv(k, j) /= piv;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k || a(i, k) == 0)
                continue;
            const Rat f = a(i, k);
            for (std::size_t j = 0; j < n; ++j) {
                a(i, j) -= f * a(k, j);
                inv(i, j) -= f * inv(k, j);
            }
        }
    }
    return inv;
}

std::optional<RatVec> solve_left(const RatMatrix& b, const RatVec& v) {
    // x * b = v  <=>  b^T x^T = v^T; eliminate on [b^T | v^T]
    std::size_t k = b.rows(), n = b.cols();
    if (v.size() != n)
        throw precondition_error("solve_left dimension mismatch");
    RatMatrix aug(n, k + 1);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < k; ++j)
            aug(i, j) = b(j, i);
        aug(i, k) = v[i];
    }
    std::size_t row = 0;
    std::vector<std::size_t> pivot_col;
    for (std::size_t col = 0; col < k && row < n; ++col) {
        std::size_t p = row;
        while (p < n && aug(p, col) == 0)
            ++p;
        if (p == n)
            continue;
        if (p != row)
            for (std::size_t j = 0; j <= k; ++j)
                std::swap(aug(row, j), aug(p, j));
        const Rat piv = aug(row, col);
        for (std::size_t j = 0; j <= k; ++j)
            aug(row, j) /= piv;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == row || aug(i, col) == 0)
                continue;
            const Rat f = aug(i, col);
            for (std::size_t j = 0; j <= k; ++j)
                aug(i, j) -= f * aug(row, j);
        }
        pivot_col.push_back(col);
        ++row;
    }
    for (std::size_t i = row; i < n; ++i)
        if (aug(i, k) != 0)
            return std::nullopt; // inconsistent
    RatVec x(k);
    for (std::size_t i = 0; i < pivot_col.size(); ++i)
        x[pivot_col[i]] = aug(i, k);
    return x;
}

std::optional<RowVec> integral(const RatVec& v) {
    RowVec out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i].get_den() != 1)
            return std::nullopt;
        out[i] = v[i].get_num();
    }
    return out;
}

} // namespace og10lat
