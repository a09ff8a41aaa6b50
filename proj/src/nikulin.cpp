#include "og10lat/nikulin.hpp"

namespace og10lat::nikulin {

std::size_t disc_group_length(const IntegralLattice& l) {
    return disc_group(l).length();
}

EmbeddingVerdict embedding_sufficient(const IntegralLattice& t, int lplus, int lminus) {
    if (!t.is_even())
        throw precondition_error("embedding criterion requires an even lattice");
    if (!t.is_nondegenerate())
        throw precondition_error("embedding criterion requires a nondegenerate lattice");
    if (lplus <= 0 || lminus <= 0)
        throw precondition_error("target signature must be indefinite");
    if ((lplus - lminus) % 8 != 0)
        throw precondition_error(
            "no even unimodular lattice of this signature (l+ - l- must be divisible by 8)");
    Signature sig = t.signature();
    const long target_rank = lplus + lminus;
    const long t_rank = static_cast<long>(t.rank());
    const long length = static_cast<long>(disc_group_length(t));
    if (sig.positive < lplus && sig.negative < lminus &&
        target_rank - t_rank >= length + 2)
        return EmbeddingVerdict::Exists;
    return EmbeddingVerdict::Unknown;
}

DiscAction disc_action(const IntegralLattice& l, const IntMatrix& iso) {
    const std::size_t n = l.rank();
    if (iso.rows() != n || iso.cols() != n)
        throw precondition_error("isometry matrix size does not match lattice rank");
    if (!(iso * l.gram() * iso.transpose() == l.gram()))
        throw precondition_error("matrix is not an isometry of the lattice");
    if (!l.is_nondegenerate())
        throw math_error("degenerate lattice: discriminant action undefined");

    SmithDecomposition sd = snf(l.gram());
    std::vector<std::size_t> gen_idx;
    std::vector<Int> factors;
    for (std::size_t i = 0; i < n; ++i)
        if (sd.s(i, i) > 1) {
            gen_idx.push_back(i);
            factors.push_back(sd.s(i, i));
        }

    // generator g_i = row_i(u)/d_i; its image g_i * iso lies in L*, and the
    // class coordinates of a dual vector x are (x * G * v) mod (d_1,...,d_n)
    IntMatrix action(gen_idx.size(), gen_idx.size());
    for (std::size_t a = 0; a < gen_idx.size(); ++a) {
        const std::size_t i = gen_idx[a];
        const Int& d = sd.s(i, i);
        RatVec g(n);
        for (std::size_t j = 0; j < n; ++j) {
            g[j] = Rat(sd.u(i, j), d);
            g[j].canonicalize();
        }
        RatVec image(n);
        for (std::size_t r = 0; r < n; ++r)
            if (g[r] != 0)
                for (std::size_t j2 = 0; j2 < n; ++j2)
                    image[j2] += g[r] * iso(r, j2);
        RatVec z = rat_row_times(image, l.gram());
        for (std::size_t b = 0; b < gen_idx.size(); ++b) {
            const std::size_t j = gen_idx[b];
            Rat coord = 0;
            for (std::size_t r = 0; r < n; ++r)
                coord += z[r] * sd.v(r, j);
            if (coord.get_den() != 1)
                throw math_error("internal: discriminant action is not integral");
            Int c = coord.get_num();
            mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), sd.s(j, j).get_mpz_t());
            action(a, b) = c;
        }
    }
    return DiscAction{std::move(factors), std::move(action)};
}

DiscAction disc_action(const Sublattice& s, const IntMatrix& iso) {
    return disc_action(s.induced(), iso);
}

bool acts_trivially(const DiscAction& a) {
    for (std::size_t i = 0; i < a.matrix.rows(); ++i)
        for (std::size_t j = 0; j < a.matrix.cols(); ++j) {
            const Int expect = (i == j) ? 1 : 0; // factors exceed 1
            if (a.matrix(i, j) != expect)
                return false;
        }
    return true;
}

} // namespace og10lat::nikulin
