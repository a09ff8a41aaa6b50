#include <doctest.h>

#include "og10lat/catalog.hpp"
#include "og10lat/int_matrix.hpp"
#include "test_util.hpp"

using namespace og10lat;
using testutil::laplace_det;
using testutil::random_matrix;
using testutil::random_symmetric;
using testutil::random_unimodular;

namespace {

bool divisibility_chain(const std::vector<Int>& d) {
    for (std::size_t i = 0; i + 1 < d.size(); ++i) {
        if (d[i] < 0 || d[i + 1] < 0)
            return false;
        if (d[i] == 0 && d[i + 1] != 0)
            return false; // trailing zeros only
        if (d[i] != 0 && d[i + 1] % d[i] != 0)
            return false;
    }
    return true;
}

} // namespace

TEST_CASE("determinant: frozen values") {
    CHECK(det(IntMatrix{{0, 1}, {1, 0}}) == -1);
    CHECK(det(IntMatrix{{2, -1}, {-1, 2}}) == 3); // 2*2 - 1 by hand
    CHECK(det(IntMatrix(0, 0)) == 1);
    CHECK(det(IntMatrix{{5}}) == 5);
    CHECK(det(IntMatrix{{1, 2}, {2, 4}}) == 0);
}

TEST_CASE("determinant: E8(-1) is unimodular, cross-checked by SNF") {
    IntMatrix g = catalog::make_e8_neg().gram();
    CHECK(det(g) == 1);
    SmithDecomposition sd = snf(g);
    CHECK(sd.s == IntMatrix::identity(8));
}

TEST_CASE("determinant: rejects non-square input") {
    CHECK_THROWS_AS(det(IntMatrix(2, 3)), precondition_error);
}

TEST_CASE("determinant agrees with Laplace expansion on random matrices") {
    std::mt19937 rng(12345);
    for (int it = 0; it < 200; ++it) {
        std::size_t n = 1 + it % 5;
        IntMatrix m = random_matrix(rng, n, n, 9);
        CHECK(det(m) == laplace_det(m));
    }
}

TEST_CASE("hnf: frozen values") {
    // hand row-reduction: (6,8) - 3(2,4) = (0,-4); (2,4) - (0,4) = (2,0)
    CHECK(hnf(IntMatrix{{2, 4}, {6, 8}}) == IntMatrix{{2, 0}, {0, 4}});
    CHECK(hnf(IntMatrix::identity(3)) == IntMatrix::identity(3));
    CHECK(hnf(IntMatrix(2, 2)) == IntMatrix(2, 2));
}

TEST_CASE("hnf: canonical lower-left shape") {
    IntMatrix h = hnf(IntMatrix{{0, 0, 5}, {3, 1, 2}, {3, 1, -3}});
    // pivot columns strictly increase and pivots are positive
    std::size_t r = rank(h);
    long last = -1;
    for (std::size_t i = 0; i < r; ++i) {
        std::size_t p = h.cols();
        for (std::size_t j = h.cols(); j-- > 0;)
            if (h(i, j) != 0) {
                p = j;
                break;
            }
        REQUIRE(p != h.cols());
        CHECK(static_cast<long>(p) > last);
        last = static_cast<long>(p);
        CHECK(h(i, p) > 0);
        for (std::size_t k = i + 1; k < r; ++k) {
            CHECK(h(k, p) >= 0);
            CHECK(h(k, p) < h(i, p));
        }
    }
}

TEST_CASE("hnf is idempotent and transform is unimodular") {
    std::mt19937 rng(777);
    for (int it = 0; it < 200; ++it) {
        std::size_t rows = 1 + it % 5, cols = 1 + (it / 2) % 5;
        IntMatrix m = random_matrix(rng, rows, cols, 9);
        HermiteResult hr = hnf_with_transform(m);
        CHECK(hnf(hr.h) == hr.h);
        CHECK(abs(det(hr.u)) == 1);
        CHECK(hr.u * m == hr.h);
    }
}

TEST_CASE("snf: frozen values") {
    CHECK(snf(IntMatrix{{2, -1}, {-1, 2}}).diagonal() == std::vector<Int>{1, 3});
    CHECK(snf(IntMatrix{{0, 1}, {1, 0}}).diagonal() == std::vector<Int>{1, 1});
    // d1 = gcd of entries = 2, d1*d2 = |det| = 8
    CHECK(snf(IntMatrix{{2, 4}, {6, 8}}).diagonal() == std::vector<Int>{2, 4});
}

TEST_CASE("snf properties on random matrices") {
    std::mt19937 rng(424242);
    for (int it = 0; it < 300; ++it) {
        std::size_t rows = 1 + it % 6, cols = 1 + (it / 3) % 6;
        IntMatrix m = random_matrix(rng, rows, cols, 9);
        SmithDecomposition sd = snf(m);
        CHECK(sd.u * m * sd.v == sd.s);
        CHECK(abs(det(sd.u)) == 1);
        CHECK(abs(det(sd.v)) == 1);
        CHECK(divisibility_chain(sd.diagonal()));
        for (std::size_t i = 0; i < sd.s.rows(); ++i)
            for (std::size_t j = 0; j < sd.s.cols(); ++j)
                if (i != j)
                    CHECK(sd.s(i, j) == 0);
        if (rows == cols) {
            Int prod = 1;
            for (const Int& d : sd.diagonal())
                prod *= d;
            CHECK(abs(det(m)) == prod);
        }
    }
}

TEST_CASE("snf is deterministic") {
    std::mt19937 rng(5);
    IntMatrix m = random_matrix(rng, 4, 4, 9);
    SmithDecomposition a = snf(m), b = snf(m);
    CHECK(a.u == b.u);
    CHECK(a.s == b.s);
    CHECK(a.v == b.v);
}

TEST_CASE("kernel_basis: frozen values") {
    IntMatrix k = kernel_basis(IntMatrix{{1, 2}, {2, 4}});
    REQUIRE(k.rows() == 1);
    bool plus = k.row(0) == RowVec{2, -1};
    bool minus = k.row(0) == RowVec{-2, 1};
    CHECK((plus || minus));

    CHECK(kernel_basis(IntMatrix::identity(3)).rows() == 0);
    CHECK(kernel_basis(IntMatrix(2, 2)) == IntMatrix::identity(2));
}

TEST_CASE("kernel_basis annihilates and is saturated") {
    std::mt19937 rng(99);
    for (int it = 0; it < 200; ++it) {
        std::size_t rows = 1 + it % 5, cols = 1 + (it / 2) % 4;
        IntMatrix m = random_matrix(rng, rows, cols, 6);
        IntMatrix k = kernel_basis(m);
        CHECK(k.rows() == rows - rank(m));
        if (k.rows() == 0)
            continue;
        IntMatrix prod = k * m;
        CHECK(prod.is_zero());
        // saturation: the kernel basis has unit elementary divisors
        CHECK(snf(k).invariant_factors().empty());
    }
}

TEST_CASE("signature: frozen values") {
    CHECK(signature_of_symmetric(IntMatrix{{0, 1}, {1, 0}}) == Signature{1, 1, 0});
    CHECK(signature_of_symmetric(catalog::make_e8_neg().gram()) == Signature{0, 8, 0});
    // positive definite by leading minors 2, 3
    CHECK(signature_of_symmetric(IntMatrix{{2, -1}, {-1, 2}}) == Signature{2, 0, 0});
    CHECK(signature_of_symmetric(IntMatrix(3, 3)) == Signature{0, 0, 3});
    CHECK(signature_of_symmetric(IntMatrix{{1, 2}, {2, 4}}) == Signature{1, 0, 1});
}

TEST_CASE("signature: rejects non-symmetric input") {
    CHECK_THROWS_AS(signature_of_symmetric(IntMatrix{{0, 1}, {2, 0}}),
                    precondition_error);
}

TEST_CASE("signature is invariant under unimodular congruence") {
    std::mt19937 rng(31415);
    for (int it = 0; it < 200; ++it) {
        std::size_t n = 1 + it % 5;
        IntMatrix m = random_symmetric(rng, n, 9);
        IntMatrix t = random_unimodular(rng, n);
        IntMatrix conj = t.transpose() * m * t;
        CHECK(signature_of_symmetric(conj) == signature_of_symmetric(m));
    }
}

TEST_CASE("solve_left and inverse round-trip") {
    std::mt19937 rng(2024);
    for (int it = 0; it < 50; ++it) {
        std::size_t n = 1 + it % 4;
        IntMatrix m = random_matrix(rng, n, n, 9);
        if (det(m) == 0)
            continue;
        RatMatrix rm(m);
        RatMatrix inv = inverse(rm);
        CHECK(rm * inv == RatMatrix::identity(n));
        RatVec v(n);
        for (std::size_t i = 0; i < n; ++i)
            v[i] = Rat(static_cast<long>(i) + 1);
        auto x = solve_left(rm, v);
        REQUIRE(x.has_value());
        RatVec back(n);
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t i = 0; i < n; ++i)
                back[j] += (*x)[i] * rm(i, j);
        CHECK(back == v);
    }
}
