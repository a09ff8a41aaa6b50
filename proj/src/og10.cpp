#include "og10lat/og10.hpp"

#include <cassert>

#include "og10lat/hassett.hpp"

namespace og10lat::og10 {

MukaiVector make_og10_vector(const IntegralLattice& mukai, const RowVec& lambda0) {
    if (lambda0.size() != mukai.rank())
        throw precondition_error("lambda0 length does not match lattice rank");
    if (vec_gcd(lambda0) != 1)
        throw precondition_error("lambda0 must be primitive");
    if (mukai.pairing(lambda0, lambda0) != 2)
        throw precondition_error("lambda0 must have square 2");
    RowVec coords(lambda0.size());
    for (std::size_t i = 0; i < coords.size(); ++i)
        coords[i] = 2 * lambda0[i];
    return MukaiVector{std::move(coords), lambda0, 8};
}

Sublattice lambda_perp(const IntegralLattice& mukai, const MukaiVector& v) {
    Sublattice span(mukai, IntMatrix::from_rows({v.lambda0}, mukai.rank()));
    return orth_complement(span);
}

GammaLattice gamma_lattice(const IntegralLattice& mukai, const MukaiVector& v) {
    Sublattice perp = lambda_perp(mukai, v);
    IntegralLattice perp_lat = perp.induced();
    DiscriminantGroup dg = disc_group(perp_lat);
    if (!(dg.invariant_factors == std::vector<Int>{2}))
        throw math_error("internal: lambda-perp discriminant group is not Z/2");

    const std::size_t r = perp_lat.rank(); // 23
    IntegralLattice base_sum = direct_sum(perp_lat, catalog::make_span(-6));
    RatVec glue(r + 1);
    for (std::size_t j = 0; j < r; ++j)
        glue[j] = dg.generators(0, j);
    glue[r] = Rat(1, 2);
    Overlattice over = overlattice_from_glue(base_sum, {GlueVector{std::move(glue)}});
    assert(over.index == 2);

    RatVec sigma_old(r + 1);
    sigma_old[r] = 1;
    RowVec sigma = over.coords_in_new(sigma_old);

    std::vector<RowVec> base_rows;
    base_rows.reserve(r + 1);
    for (std::size_t i = 0; i < r + 1; ++i) {
        RatVec e(r + 1);
        e[i] = 1;
        base_rows.push_back(over.coords_in_new(e));
    }
    Sublattice base(over.lattice, IntMatrix::from_rows(base_rows, r + 1));
    IntegralLattice gamma = over.lattice;
    gamma.set_label("Gamma");
    return GammaLattice{std::move(gamma), std::move(sigma), std::move(base),
                        std::move(over.index)};
}

namespace {

FactorialityVerdict parity_verdict(const IntegralLattice& alg, const RowVec& coords) {
    RowVec pairings = row_times(coords, alg.gram());
    for (std::size_t j = 0; j < pairings.size(); ++j) {
        if (pairings[j] % 2 != 0) {
            RowVec witness(pairings.size());
            witness[j] = 1;
            return FactorialityVerdict{Factoriality::TwoFactorial, std::move(witness), 2};
        }
    }
    return FactorialityVerdict{Factoriality::LocallyFactorial, std::nullopt, 1};
}

} // namespace

FactorialityVerdict factoriality(const Sublattice& n_alg, const RowVec& lambda0_ambient) {
    if (lambda0_ambient.size() != n_alg.ambient().rank())
        throw precondition_error("lambda0 length does not match ambient rank");
    RatVec rhs(lambda0_ambient.size());
    for (std::size_t i = 0; i < rhs.size(); ++i)
        rhs[i] = lambda0_ambient[i];
    auto sol = solve_left(RatMatrix(n_alg.basis()), rhs);
    std::optional<RowVec> coords = sol ? integral(*sol) : std::nullopt;
    if (!coords)
        throw precondition_error("lambda0 is not in the algebraic sublattice");
    if (vec_gcd(lambda0_ambient) != 1)
        throw precondition_error("lambda0 must be primitive");
    if (n_alg.ambient().pairing(lambda0_ambient, lambda0_ambient) != 2)
        throw precondition_error("lambda0 must have square 2");
    return parity_verdict(n_alg.induced(), *coords);
}

FactorialityVerdict factoriality(const IntegralLattice& alg, const RowVec& lambda0) {
    if (lambda0.size() != alg.rank())
        throw precondition_error("lambda0 length does not match lattice rank");
    if (vec_gcd(lambda0) != 1)
        throw precondition_error("lambda0 must be primitive");
    if (alg.pairing(lambda0, lambda0) != 2)
        throw precondition_error("lambda0 must have square 2");
    return parity_verdict(alg, lambda0);
}

Sublattice transcendental(const Sublattice& algebraic) {
    if (!algebraic.induced().is_nondegenerate())
        throw math_error("degenerate algebraic sublattice");
    return orth_complement(algebraic);
}

PicardLPZ picard_lpz(long d) {
    if (d <= 6)
        throw precondition_error("picard-lpz requires d > 6");
    if (d % 2 != 0)
        throw precondition_error("picard-lpz requires an even d");
    if (!hassett::admissible(d))
        throw precondition_error("picard-lpz requires an admissible d (d = 0, 2 mod 6)");
    const long k = d / 2;
    IntMatrix base(3, 3);
    base(0, 1) = 3;
    base(1, 0) = 3;
    base(2, 2) = -6 * k;
    IntegralLattice base_lat(base);

    if (d % 6 == 0) {
        base_lat.set_label("U(3) + <" + Int(-6 * k).get_str() + ">");
        return PicardLPZ{d, k, std::move(base_lat), {"ebar", "fbar", "D"},
                         false, std::nullopt};
    }

    // A = (e + k f + D)/3
    RatVec a(3);
    a[0] = Rat(1, 3);
    a[1] = Rat(Int(k), Int(3));
    a[1].canonicalize();
    a[2] = Rat(1, 3);
    Overlattice over = overlattice_from_glue(base_lat, {GlueVector{a}});
    assert(over.index == 3);

    // new basis A, fbar, Z = D + 2k fbar; verified below by congruence
    RatVec f(3), z(3);
    f[1] = 1;
    z[1] = 2 * k;
    z[2] = 1;
    RowVec ra = over.coords_in_new(a);
    RowVec rf = over.coords_in_new(f);
    RowVec rz = over.coords_in_new(z);
    IntMatrix t = IntMatrix::from_rows({ra, rf, rz}, 3);
    IntMatrix final_gram = t * over.lattice.gram() * t.transpose();

    IntMatrix expected(3, 3);
    expected(0, 1) = 1;
    expected(1, 0) = 1;
    expected(2, 2) = -6 * k;
    if (!(final_gram == expected))
        throw math_error("internal: glued Picard lattice is not U + <-6k>");

    IntegralLattice lat(std::move(final_gram),
                        "U + <" + Int(-6 * k).get_str() + ">");
    RowVec ua = {1, 0, 0}, uf = {0, 1, 0};
    return PicardLPZ{d, k, std::move(lat), {"A", "fbar", "Z"}, true,
                     std::make_pair(std::move(ua), std::move(uf))};
}

namespace {

// Odometer over [-bound, bound]^rank in lexicographic order.
bool next_point(std::vector<long>& x, long bound) {
    for (std::size_t i = x.size(); i-- > 0;) {
        if (x[i] < bound) {
            ++x[i];
            for (std::size_t j = i + 1; j < x.size(); ++j)
                x[j] = -bound;
            return true;
        }
    }
    return false;
}

bool first_nonzero_positive(const std::vector<long>& x) {
    for (long v : x) {
        if (v > 0)
            return true;
        if (v < 0)
            return false;
    }
    return false; // zero vector
}

RowVec to_rowvec(const std::vector<long>& x) {
    RowVec v(x.size());
    for (std::size_t i = 0; i < x.size(); ++i)
        v[i] = x[i];
    return v;
}

// Solve sum b_i w_i = 1 by iterated extended gcd; requires gcd(w) = 1.
RowVec solve_unit_pairing(const RowVec& w) {
    RowVec b(w.size());
    Int g = 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (w[i] == 0)
            continue;
        if (g == 0) {
            // first nonzero: g = |w_i|, coefficient +-1
            b[i] = (w[i] > 0) ? 1 : -1;
            g = abs(w[i]);
            continue;
        }
        Int g2, s, t;
        mpz_gcdext(g2.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(),
                   g.get_mpz_t(), w[i].get_mpz_t());
        for (std::size_t j = 0; j < i; ++j)
            b[j] *= s;
        b[i] = t;
        g = g2;
    }
    return b;
}

} // namespace

USearchResult contains_unimodular_u(const IntegralLattice& l, long bound) {
    if (bound < 1)
        throw precondition_error("search bound must be >= 1");
    if (l.scale() > 1)
        return USearchResult{USearchOutcome::NoByScale, std::nullopt};
    const std::size_t n = l.rank();
    if (n == 0)
        return USearchResult{USearchOutcome::NotFoundWithinBound, std::nullopt};

    std::vector<long> x(n, -bound);
    x[n - 1] = -bound - 1; // so the first next_point lands on (-bound,...,-bound)
    while (next_point(x, bound)) {
        if (!first_nonzero_positive(x))
            continue;
        RowVec a = to_rowvec(x);
        if (vec_gcd(a) != 1)
            continue;
        RowVec w = row_times(a, l.gram());
        if (dot(w, a) != 0)
            continue; // not isotropic
        if (vec_gcd(w) != 1)
            continue; // (a, b) = 1 unsolvable
        RowVec b = solve_unit_pairing(w);
        Int bsq = l.pairing(b, b);
        if (bsq % 2 != 0) {
            // odd lattices only: look for a correction c with (a,c) = 0 and
            // c^2 odd to fix the parity of b^2
            std::vector<long> y(n, -bound);
            y[n - 1] = -bound - 1;
            bool fixed = false;
            while (next_point(y, bound)) {
                RowVec c = to_rowvec(y);
                if (is_zero_vec(c))
                    continue;
                if (dot(w, c) != 0)
                    continue;
                if (l.pairing(c, c) % 2 == 0)
                    continue;
                for (std::size_t i = 0; i < n; ++i)
                    b[i] += c[i];
                bsq = l.pairing(b, b);
                fixed = true;
                break;
            }
            if (!fixed)
                continue;
        }
        // translate along a: (b - t a)^2 = b^2 - 2t
        Int t = bsq / 2;
        for (std::size_t i = 0; i < n; ++i)
            b[i] -= t * a[i];
        assert(l.pairing(a, a) == 0);
        assert(l.pairing(a, b) == 1);
        assert(l.pairing(b, b) == 0);
        return USearchResult{USearchOutcome::Yes, std::make_pair(std::move(a), std::move(b))};
    }
    return USearchResult{USearchOutcome::NotFoundWithinBound, std::nullopt};
}

bool lsv_birational(long d) {
    return hassett::admissible(d) && ((d % 6) + 6) % 6 == 2;
}

bool k3_moduli_birational(long d) {
    return hassett::admissible(d) && hassett::star2(d).holds;
}

bool twisted_k3_stratum_birational(long d) {
    return hassett::admissible(d) && d % 2 == 0 && hassett::star2prime(d);
}

} // namespace og10lat::og10
