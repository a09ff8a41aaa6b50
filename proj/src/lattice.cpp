#include "og10lat/lattice.hpp"

#include <algorithm>

namespace og10lat {

IntegralLattice::IntegralLattice(IntMatrix gram, std::string label)
    : gram_(std::move(gram)), label_(std::move(label)) {
    if (!gram_.is_symmetric())
        throw precondition_error("lattice Gram matrix must be symmetric");
}

bool IntegralLattice::is_even() const {
    for (std::size_t i = 0; i < rank(); ++i)
        if (gram_(i, i) % 2 != 0)
            return false;
    return true;
}

Int IntegralLattice::scale() const {
    Int g = 0;
    for (std::size_t i = 0; i < rank(); ++i)
        for (std::size_t j = 0; j < rank(); ++j)
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), gram_(i, j).get_mpz_t());
    return g;
}

Int IntegralLattice::pairing(const RowVec& x, const RowVec& y) const {
    return dot(row_times(x, gram_), y);
}

Rat IntegralLattice::pairing(const RatVec& x, const RatVec& y) const {
    return rat_dot(rat_row_times(x, gram_), y);
}

Int DiscriminantGroup::order() const {
    Int o = 1;
    for (const Int& f : invariant_factors)
        o *= f;
    return o;
}

Rat reduce_mod_2z(const Rat& q) {
    Rat r = q;
    r.canonicalize();
    Int den = r.get_den();
    Int num = r.get_num();
    Int mod = 2 * den;
    mpz_fdiv_r(num.get_mpz_t(), num.get_mpz_t(), mod.get_mpz_t());
    return Rat(num, den); // gcd(num, den) unchanged by shifting mod 2*den
}

Rat reduce_mod_z(const Rat& b) {
    Rat r = b;
    r.canonicalize();
    Int den = r.get_den();
    Int num = r.get_num();
    mpz_fdiv_r(num.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return Rat(num, den);
}

DiscriminantGroup disc_group(const IntegralLattice& l) {
    if (!l.is_nondegenerate())
        throw math_error("degenerate lattice: discriminant group undefined");
    const std::size_t n = l.rank();
    SmithDecomposition sd = snf(l.gram());

    // L*/L is cyclic of order d_i on the generator row_i(u)/d_i: with
    // u*G*v = s, the class of a dual vector x in (+) Z/d_i has coordinates
    // x*G*v mod (d_1,...,d_n).
    DiscriminantGroup dg;
    std::vector<RatVec> gens;
    for (std::size_t i = 0; i < n; ++i) {
        const Int d = sd.s(i, i);
        if (d <= 1)
            continue;
        dg.invariant_factors.push_back(d);
        RatVec g(n);
        for (std::size_t j = 0; j < n; ++j) {
            g[j] = Rat(sd.u(i, j), d);
            g[j].canonicalize();
        }
        gens.push_back(std::move(g));
    }
    dg.generators = RatMatrix::from_rows(gens, n);
    dg.b_matrix = RatMatrix(gens.size(), gens.size());
    for (std::size_t i = 0; i < gens.size(); ++i) {
        dg.q_values.push_back(reduce_mod_2z(l.pairing(gens[i], gens[i])));
        for (std::size_t j = 0; j < gens.size(); ++j)
            dg.b_matrix(i, j) = reduce_mod_z(l.pairing(gens[i], gens[j]));
    }
    return dg;
}

Int divisibility(const IntegralLattice& l, const RowVec& v) {
    if (v.size() != l.rank())
        throw precondition_error("vector length does not match lattice rank");
    if (is_zero_vec(v))
        throw precondition_error("divisibility of the zero vector is undefined");
    if (!l.is_nondegenerate())
        throw math_error("degenerate lattice: divisibility undefined");
    return vec_gcd(row_times(v, l.gram()));
}

Sublattice::Sublattice(IntegralLattice ambient, IntMatrix basis)
    : ambient_(std::move(ambient)), basis_(std::move(basis)) {
    if (basis_.cols() != ambient_.rank())
        throw precondition_error("sublattice basis width does not match ambient rank");
    if (og10lat::rank(basis_) != basis_.rows())
        throw precondition_error("sublattice basis rows must be linearly independent");
}

IntegralLattice Sublattice::induced() const {
    IntMatrix g = basis_ * ambient_.gram() * basis_.transpose();
    return IntegralLattice(std::move(g));
}

RowVec Sublattice::to_ambient(const RowVec& v) const {
    return row_times(v, basis_);
}

Sublattice orth_complement(const Sublattice& s) {
    if (!s.ambient().is_nondegenerate())
        throw precondition_error("orthogonal complement requires a nondegenerate ambient lattice");
    IntMatrix pairings = s.ambient().gram() * s.basis().transpose();
    IntMatrix k = kernel_basis(pairings);
    return Sublattice(s.ambient(), std::move(k));
}

SaturationResult saturation(const Sublattice& s) {
    const std::size_t k = s.basis().rows();
    const std::size_t n = s.basis().cols();
    SmithDecomposition sd = snf(s.basis());
    Int index = 1;
    for (std::size_t i = 0; i < k; ++i)
        index *= sd.s(i, i);
    // rows of v^-1 indexed by the nonzero part of s span the saturation
    RatMatrix vinv = inverse(RatMatrix(sd.v));
    std::vector<RowVec> rows;
    rows.reserve(k);
    for (std::size_t i = 0; i < k; ++i) {
        RowVec r(n);
        for (std::size_t j = 0; j < n; ++j)
            r[j] = vinv(i, j).get_num(); // v is unimodular, entries integral
        rows.push_back(std::move(r));
    }
    IntMatrix basis = hnf(IntMatrix::from_rows(rows, n));
    return SaturationResult{Sublattice(s.ambient(), std::move(basis)), index};
}

IntegralLattice direct_sum(const IntegralLattice& a, const IntegralLattice& b) {
    const std::size_t ra = a.rank(), rb = b.rank();
    IntMatrix g(ra + rb, ra + rb);
    for (std::size_t i = 0; i < ra; ++i)
        for (std::size_t j = 0; j < ra; ++j)
            g(i, j) = a.gram()(i, j);
    for (std::size_t i = 0; i < rb; ++i)
        for (std::size_t j = 0; j < rb; ++j)
            g(ra + i, ra + j) = b.gram()(i, j);
    std::string label;
    if (!a.label().empty() && !b.label().empty())
        label = a.label() + " + " + b.label();
    return IntegralLattice(std::move(g), std::move(label));
}

IntegralLattice rescale(const IntegralLattice& l, const Int& n) {
    IntMatrix g = l.gram();
    for (std::size_t i = 0; i < g.rows(); ++i)
        for (std::size_t j = 0; j < g.cols(); ++j)
            g(i, j) *= n;
    std::string label;
    if (!l.label().empty() && n != 1)
        label = l.label() + "(" + n.get_str() + ")";
    else if (n == 1)
        label = l.label();
    return IntegralLattice(std::move(g), std::move(label));
}

RowVec Overlattice::coords_in_new(const RatVec& old_coords) const {
    auto x = solve_left(basis, old_coords);
    if (!x)
        throw math_error("vector is not in the span of the overlattice basis");
    auto xi = integral(*x);
    if (!xi)
        throw math_error("vector is not in the overlattice");
    return *xi;
}

Overlattice overlattice_from_glue(const IntegralLattice& l,
                                  const std::vector<GlueVector>& glue) {
    const std::size_t n = l.rank();
    const bool even = l.is_even();
    for (const GlueVector& g : glue) {
        if (g.coords.size() != n)
            throw precondition_error("glue vector length does not match lattice rank");
        RatVec w = rat_row_times(g.coords, l.gram());
        for (const Rat& p : w)
            if (p.get_den() != 1)
                throw math_error("glue vector pairs non-integrally with the lattice");
    }
    for (std::size_t i = 0; i < glue.size(); ++i)
        for (std::size_t j = i; j < glue.size(); ++j) {
            Rat p = l.pairing(glue[i].coords, glue[j].coords);
            if (p.get_den() != 1)
                throw math_error("glue vectors pair non-integrally with each other");
            if (even && i == j && p.get_num() % 2 != 0)
                throw math_error("glue vector has odd square on an even lattice");
        }

    Int c = 1;
    for (const GlueVector& g : glue)
        for (const Rat& x : g.coords)
            mpz_lcm(c.get_mpz_t(), c.get_mpz_t(), x.get_den().get_mpz_t());

    // Z-span of the old basis and the glue vectors, scaled by c to land in Z^n
    IntMatrix stacked(n + glue.size(), n);
    for (std::size_t i = 0; i < n; ++i)
        stacked(i, i) = c;
    for (std::size_t i = 0; i < glue.size(); ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Rat scaled = glue[i].coords[j] * c;
            stacked(n + i, j) = scaled.get_num();
        }
    IntMatrix h = hnf(stacked);
    RatMatrix basis(n, n);
    Int hdet = 1;
    for (std::size_t i = 0; i < n; ++i) {
        hdet *= h(i, i); // h restricted to its nonzero rows is square triangular
        for (std::size_t j = 0; j < n; ++j) {
            basis(i, j) = Rat(h(i, j), c);
            basis(i, j).canonicalize();
        }
    }
    Int cn;
    mpz_pow_ui(cn.get_mpz_t(), c.get_mpz_t(), static_cast<unsigned long>(n));
    Int index;
    mpz_divexact(index.get_mpz_t(), cn.get_mpz_t(), hdet.get_mpz_t());

    IntMatrix gram(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        RatVec bi = basis.row(i);
        RatVec wi = rat_row_times(bi, l.gram());
        for (std::size_t j = 0; j < n; ++j) {
            Rat p = rat_dot(wi, basis.row(j));
            if (p.get_den() != 1)
                throw math_error("internal: overlattice Gram is not integral");
            gram(i, j) = p.get_num();
        }
    }
    IntegralLattice out(std::move(gram));
    if (even && !out.is_even())
        throw math_error("internal: overlattice of an even lattice must be even");
    return Overlattice{std::move(out), std::move(basis), std::move(index)};
}

bool same_coarse_invariants(const IntegralLattice& a, const IntegralLattice& b) {
    if (a.rank() != b.rank())
        return false;
    if (!(a.signature() == b.signature()))
        return false;
    if (a.discriminant() != b.discriminant())
        return false;
    if (a.is_even() != b.is_even())
        return false;
    if (a.discriminant() == 0)
        return true; // both degenerate; no discriminant group to compare
    return disc_group(a).invariant_factors == disc_group(b).invariant_factors;
}

} // namespace og10lat
