#include <doctest.h>

#include <random>

#include "og10lat/catalog.hpp"
#include "og10lat/lattice.hpp"
#include "test_util.hpp"

using namespace og10lat;
using catalog::make_a2;
using catalog::make_e8_neg;
using catalog::make_span;
using catalog::make_u;
using testutil::random_symmetric;
using testutil::random_unimodular;

TEST_CASE("lattice construction rejects a non-symmetric Gram") {
    CHECK_THROWS_AS(IntegralLattice(IntMatrix{{0, 1}, {2, 0}}), precondition_error);
}

TEST_CASE("discriminant: frozen values") {
    CHECK(make_a2().discriminant() == 3);
    CHECK(make_u(3).discriminant() == -9);
    CHECK(direct_sum(make_u(), make_span(-42)).discriminant() == 42);
}

TEST_CASE("disc_group: frozen values") {
    CHECK(disc_group(make_a2()).invariant_factors == std::vector<Int>{3});
    CHECK(disc_group(make_u(3)).invariant_factors == std::vector<Int>{3, 3});
    CHECK(disc_group(make_u()).invariant_factors.empty());

    // discriminant form of A2(-1): one generator of order 3 with q = 4/3
    DiscriminantGroup d = disc_group(rescale(make_a2(), -1));
    REQUIRE(d.invariant_factors == std::vector<Int>{3});
    CHECK(d.q_values[0] == Rat(4, 3));

    // rank-1 forms: q((1/n)e) = 1/n * e^2 mod 2Z
    CHECK(disc_group(make_span(2)).q_values[0] == Rat(1, 2));
    CHECK(disc_group(make_span(-2)).q_values[0] == Rat(3, 2));
    CHECK(disc_group(make_span(-6)).q_values[0] == Rat(11, 6));
}

TEST_CASE("disc_group rejects a degenerate lattice") {
    CHECK_THROWS_AS(disc_group(IntegralLattice(IntMatrix{{1, 2}, {2, 4}})), math_error);
}

TEST_CASE("disc_group order equals |det| and q denominators divide the factors") {
    std::mt19937 rng(808);
    int done = 0;
    while (done < 100) {
        std::size_t n = 1 + done % 3;
        IntMatrix g = random_symmetric(rng, n, 12);
        IntegralLattice l(g);
        if (!l.is_nondegenerate())
            continue;
        ++done;
        DiscriminantGroup d = disc_group(l);
        CHECK(d.order() == abs(l.discriminant()));
        for (std::size_t i = 0; i < d.length(); ++i) {
            // canonical reduction mod 2Z
            CHECK(d.q_values[i] >= 0);
            CHECK(d.q_values[i] < 2);
            if (l.is_even())
                CHECK(d.invariant_factors[i] % d.q_values[i].get_den() == 0);
            for (std::size_t j = 0; j < d.length(); ++j) {
                CHECK(d.b_matrix(i, j) >= 0);
                CHECK(d.b_matrix(i, j) < 1);
                CHECK(d.b_matrix(i, j) == d.b_matrix(j, i));
            }
        }
        // generators have the advertised order: d_i * g_i pairs integrally
        // with the whole lattice
        for (std::size_t i = 0; i < d.length(); ++i) {
            RatVec gi = d.generators.row(i);
            RatVec w = rat_row_times(gi, l.gram());
            for (const Rat& x : w) {
                Rat scaled = x * d.invariant_factors[i];
                CHECK(scaled.get_den() == 1);
            }
        }
    }
}

TEST_CASE("divisibility: frozen values") {
    CHECK(divisibility(make_u(3), RowVec{1, 0}) == 3); // ebar in U(3)
    CHECK(divisibility(make_u(), RowVec{1, 0}) == 1);
    CHECK_THROWS_AS(divisibility(make_u(), RowVec{0, 0}), precondition_error);
}

TEST_CASE("divisibility divides the square and matches a sampling oracle") {
    std::mt19937 rng(3333);
    std::uniform_int_distribution<long> coord(-9, 9);
    int done = 0;
    while (done < 100) {
        std::size_t n = 1 + done % 3;
        IntegralLattice l(random_symmetric(rng, n, 12));
        if (!l.is_nondegenerate())
            continue;
        RowVec v(n);
        bool zero = true;
        for (auto& x : v) {
            long c = coord(rng);
            x = c;
            zero = zero && c == 0;
        }
        if (zero)
            continue;
        ++done;
        Int d = divisibility(l, v);
        CHECK(l.pairing(v, v) % d == 0);
        // oracle: gcd of pairings with randomly sampled lattice vectors
        Int sampled = 0;
        for (int s = 0; s < 1000; ++s) {
            RowVec w(n);
            for (auto& x : w)
                x = coord(rng);
            Int p = l.pairing(v, w);
            mpz_gcd(sampled.get_mpz_t(), sampled.get_mpz_t(), p.get_mpz_t());
        }
        CHECK(sampled == d);
    }
}

TEST_CASE("orth_complement: whole lattice has trivial complement") {
    IntegralLattice u = make_u();
    Sublattice whole(u, IntMatrix::identity(2));
    CHECK(orth_complement(whole).rank() == 0);
}

TEST_CASE("orth_complement is saturated and ranks add up") {
    std::mt19937 rng(606);
    int done = 0;
    while (done < 60) {
        std::size_t n = 2 + done % 3;
        IntegralLattice l(random_symmetric(rng, n, 9));
        if (!l.is_nondegenerate())
            continue;
        IntMatrix rows = testutil::random_matrix(rng, 1 + done % 2, n, 3);
        if (rank(rows) != rows.rows())
            continue;
        ++done;
        Sublattice s(l, rows);
        Sublattice c = orth_complement(s);
        CHECK(saturation(c).index == 1);
        if (s.induced().is_nondegenerate())
            CHECK(s.rank() + c.rank() == l.rank());
    }
}

TEST_CASE("saturation: frozen values") {
    IntegralLattice u = make_u();
    SaturationResult r = saturation(Sublattice(u, IntMatrix{{2, 0}}));
    CHECK(r.index == 2);
    CHECK(r.sublattice.basis() == IntMatrix{{1, 0}});

    SaturationResult r2 = saturation(Sublattice(u, IntMatrix{{1, 1}}));
    CHECK(r2.index == 1);
}

TEST_CASE("finite-index sublattices scale the determinant by index^2") {
    std::mt19937 rng(112);
    int done = 0;
    while (done < 60) {
        std::size_t n = 1 + done % 4;
        IntegralLattice l(random_symmetric(rng, n, 6));
        if (!l.is_nondegenerate())
            continue;
        ++done;
        // upper-triangular basis with nonzero diagonal: index = |prod diag|
        IntMatrix t(n, n);
        std::uniform_int_distribution<long> diag(1, 3), off(-2, 2);
        Int index = 1;
        for (std::size_t i = 0; i < n; ++i) {
            t(i, i) = diag(rng);
            index *= t(i, i);
            for (std::size_t j = i + 1; j < n; ++j)
                t(i, j) = off(rng);
        }
        Sublattice s(l, t);
        CHECK(s.induced().discriminant() == index * index * l.discriminant());
    }
}

TEST_CASE("direct_sum: frozen values") {
    IntegralLattice uu = direct_sum(make_u(), make_u());
    CHECK(uu.rank() == 4);
    CHECK(uu.discriminant() == 1);
    CHECK(uu.signature() == Signature{2, 2, 0});
    CHECK(direct_sum(make_a2(), make_span(-6)).discriminant() == -18);
}

TEST_CASE("rescale: frozen values") {
    CHECK(rescale(make_u(), 3).gram() == IntMatrix{{0, 3}, {3, 0}});
    CHECK(rescale(make_a2(), 1).gram() == make_a2().gram());
    IntegralLattice a2m = rescale(make_a2(), -1);
    CHECK(a2m.discriminant() == 3);
    CHECK(a2m.signature() == Signature{0, 2, 0});
}

TEST_CASE("scale: frozen values") {
    CHECK(direct_sum(make_u(3), make_span(-36)).scale() == 3);
    CHECK(make_u().scale() == 1);
    CHECK(IntegralLattice(IntMatrix(2, 2)).scale() == 0);
}

TEST_CASE("overlattice_from_glue: U(3) glued along (1/3, 0) becomes unimodular") {
    RatVec g(2);
    g[0] = Rat(1, 3);
    Overlattice o = overlattice_from_glue(make_u(3), {GlueVector{g}});
    CHECK(o.index == 3);
    CHECK(o.lattice.discriminant() == -1);
    CHECK(o.lattice.is_even());
    CHECK(same_coarse_invariants(o.lattice, make_u()));
}

TEST_CASE("overlattice_from_glue: no glue vectors leaves the lattice unchanged") {
    Overlattice o = overlattice_from_glue(make_a2(), {});
    CHECK(o.index == 1);
    CHECK(o.lattice.gram() == make_a2().gram());
}

TEST_CASE("overlattice_from_glue: rejection cases are distinct") {
    RatVec half(2);
    half[0] = Rat(1, 2);
    CHECK_THROWS_WITH_AS(overlattice_from_glue(make_u(), {GlueVector{half}}),
                         "glue vector pairs non-integrally with the lattice",
                         math_error);

    // (1/2, 1/2) on diag(2,2) pairs integrally but has odd square 1
    RatVec oddsq(2);
    oddsq[0] = Rat(1, 2);
    oddsq[1] = Rat(1, 2);
    IntegralLattice diag22(IntMatrix{{2, 0}, {0, 2}});
    CHECK_THROWS_WITH_AS(overlattice_from_glue(diag22, {GlueVector{oddsq}}),
                         "glue vector has odd square on an even lattice", math_error);
}

TEST_CASE("overlattice determinant drops by index^2 and evenness is preserved") {
    // the k = 7 verification: det 378 / 3^2 = 42
    IntMatrix g{{0, 3, 0}, {3, 0, 0}, {0, 0, -42}};
    IntegralLattice l(g);
    RatVec a(3);
    a[0] = Rat(1, 3);
    a[1] = Rat(7, 3);
    a[2] = Rat(1, 3);
    Overlattice o = overlattice_from_glue(l, {GlueVector{a}});
    CHECK(o.index == 3);
    CHECK(o.lattice.discriminant() * o.index * o.index == l.discriminant());
    CHECK(o.lattice.discriminant() == 42);
    CHECK(o.lattice.is_even());
}

TEST_CASE("same_coarse_invariants: frozen values") {
    CHECK(same_coarse_invariants(make_u(), make_u()));
    CHECK_FALSE(same_coarse_invariants(make_u(), make_u(3)));
    CHECK_FALSE(same_coarse_invariants(make_a2(), rescale(make_a2(), -1)));
}

TEST_CASE("sublattice basis must be independent") {
    CHECK_THROWS_AS(Sublattice(make_u(), IntMatrix{{1, 0}, {2, 0}}), precondition_error);
}
