#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "og10lat/errors.hpp"

namespace og10lat {

using Int = mpz_class;
using Rat = mpq_class;
using RowVec = std::vector<Int>;
using RatVec = std::vector<Rat>;

/// Dense matrix of arbitrary-precision integers, row-major.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols) {}
    IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

    static IntMatrix identity(std::size_t n);
    static IntMatrix from_rows(const std::vector<RowVec>& rows, std::size_t cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Int& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    const Int& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

    RowVec row(std::size_t i) const;
    void set_row(std::size_t i, const RowVec& r);

    bool is_square() const { return rows_ == cols_; }
    bool is_symmetric() const;
    bool is_zero() const;

    IntMatrix transpose() const;
    IntMatrix negated() const;
    IntMatrix operator*(const IntMatrix& other) const;
    bool operator==(const IntMatrix& other) const = default;

    void swap_rows(std::size_t a, std::size_t b);
    void swap_cols(std::size_t a, std::size_t b);

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Int> entries_;
};

/// Dense matrix of rationals; used for dual bases, solving, inverses.
class RatMatrix {
public:
    RatMatrix() = default;
    RatMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols) {}
    explicit RatMatrix(const IntMatrix& m);

    static RatMatrix identity(std::size_t n);
    static RatMatrix from_rows(const std::vector<RatVec>& rows, std::size_t cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rat& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    const Rat& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

    RatVec row(std::size_t i) const;
    RatMatrix operator*(const RatMatrix& other) const;
    bool operator==(const RatMatrix& other) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rat> entries_;
};

struct Signature {
    int positive = 0;
    int negative = 0;
    int zero = 0;
    bool operator==(const Signature&) const = default;
};

/// u * m * v = s with u, v unimodular and s diagonal, nonnegative,
/// d1 | d2 | ... | dr followed by zeros.
struct SmithDecomposition {
    IntMatrix u;
    IntMatrix s;
    IntMatrix v;
    std::vector<Int> diagonal() const;
    std::vector<Int> invariant_factors() const; // diagonal entries > 1
};

/// h = u * m with u unimodular and h in canonical form (see hnf).
struct HermiteResult {
    IntMatrix h;
    IntMatrix u;
};

/// Exact determinant by fraction-free (Bareiss) elimination.
/// det of the empty 0x0 matrix is 1.
Int det(const IntMatrix& m);

/// Canonical Hermite normal form of the row span, lower-left convention:
/// nonzero rows first, each with its trailing nonzero entry ("pivot")
/// positive, pivot columns strictly increasing, and every entry below a
/// pivot reduced into [0, pivot). Output has the shape of the input, with
/// zero rows at the bottom. Idempotent and unique for a given row span.
IntMatrix hnf(const IntMatrix& m);
HermiteResult hnf_with_transform(const IntMatrix& m);

std::size_t rank(const IntMatrix& m);

/// Smith normal form by classical elimination with gcd pivoting.
/// Pivot scan and all tie-breaks use the lowest index, so the output is
/// deterministic for a fixed input.
SmithDecomposition snf(const IntMatrix& m);

/// Basis of the saturated left kernel {x : x * m = 0}, hnf-canonical rows.
/// Empty (0 x m.rows()) when the kernel is trivial.
IntMatrix kernel_basis(const IntMatrix& m);

/// Inertia of a symmetric matrix via exact rational diagonalization.
/// Pivots on the first nonzero diagonal entry; when the remaining diagonal
/// vanishes but the block does not, splits off a hyperbolic 2x2 block
/// contributing (1,1).
Signature signature_of_symmetric(const IntMatrix& m);

// vector helpers
Int dot(const RowVec& a, const RowVec& b);
RowVec row_times(const RowVec& x, const IntMatrix& m); // x * m
RatVec rat_row_times(const RatVec& x, const IntMatrix& m);
Rat rat_dot(const RatVec& a, const RatVec& b);
Int vec_gcd(const RowVec& v); // nonnegative, 0 for the zero vector
bool is_zero_vec(const RowVec& v);
std::string format_vec(const RowVec& v);
std::string format_rat_vec(const RatVec& v);

/// Inverse of a nonsingular rational matrix (Gauss-Jordan).
RatMatrix inverse(const RatMatrix& m); // math_error if singular

/// Solve x * b = v exactly; nullopt when inconsistent. b need not be square
/// but must have full row rank for the solution to be unique.
std::optional<RatVec> solve_left(const RatMatrix& b, const RatVec& v);

/// The integer vector equal to v, or nullopt if any entry is non-integral.
std::optional<RowVec> integral(const RatVec& v);

} // namespace og10lat
