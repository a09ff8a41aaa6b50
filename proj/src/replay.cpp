#include "og10lat/replay.hpp"

#include <functional>
#include <sstream>

#include "og10lat/catalog.hpp"
#include "og10lat/hassett.hpp"
#include "og10lat/lattice.hpp"
#include "og10lat/nikulin.hpp"
#include "og10lat/og10.hpp"

namespace og10lat::replay {

namespace {

struct Runner {
    std::vector<ReplayCheck> out;

    void check(const std::string& name, const std::function<bool()>& f) {
        ReplayCheck c{name, false, ""};
        try {
            c.pass = f();
            if (!c.pass)
                c.detail = "check returned false";
        } catch (const std::exception& e) {
            c.pass = false;
            c.detail = e.what();
        }
        out.push_back(std::move(c));
    }
};

} // namespace

std::vector<ReplayCheck> run_replay() {
    Runner r;
    using namespace catalog;

    IntegralLattice e8 = make_e8_neg();
    r.check("E8(-1): signature (0,8), determinant 1, even", [&] {
        return e8.signature() == Signature{0, 8, 0} && e8.discriminant() == 1 &&
               e8.is_even();
    });

    MarkedMukaiLattice mk = mukai_kuznetsov();
    r.check("mukai lattice: rank 24, determinant 1, signature (4,20)", [&] {
        return mk.lattice.rank() == 24 && mk.lattice.discriminant() == 1 &&
               mk.lattice.signature() == Signature{4, 20, 0};
    });
    r.check("marked classes: lambda_i^2 = 2, (lambda1,lambda2) = -1", [&] {
        return mk.lattice.pairing(mk.lambda1, mk.lambda1) == 2 &&
               mk.lattice.pairing(mk.lambda2, mk.lambda2) == 2 &&
               mk.lattice.pairing(mk.lambda1, mk.lambda2) == -1;
    });
    r.check("A2 complement: rank 22, signature (2,20), disc group [3]", [&] {
        Sublattice c = orth_complement(mk.marked_a2());
        IntegralLattice ind = c.induced();
        return c.rank() == 22 && ind.signature() == Signature{2, 20, 0} &&
               disc_group(ind).invariant_factors == std::vector<Int>{3};
    });

    RowVec lambda0(24);
    lambda0[1] = 1; // lambda1 + lambda2 = f1 + e2 + f2
    lambda0[2] = 1;
    lambda0[3] = 1;
    og10::MukaiVector mv = og10::make_og10_vector(mk.lattice, lambda0);
    Sublattice perp = og10::lambda_perp(mk.lattice, mv);
    IntegralLattice perp_lat = perp.induced();
    r.check("lambda-perp: rank 23, signature (3,20), disc group Z/2", [&] {
        return perp.rank() == 23 && perp_lat.signature() == Signature{3, 20, 0} &&
               disc_group(perp_lat).invariant_factors == std::vector<Int>{2};
    });

    r.check("U(3) is the rescaled hyperbolic plane [[0,3],[3,0]]", [] {
        return rescale(make_u(), 3).gram() == IntMatrix{{0, 3}, {3, 0}};
    });

    r.check("K3 mukai vector (2,0,-2) has square 8", [] {
        K3MukaiLattice k3 = mukai_k3();
        RowVec v = k3.vector_rs(2, -2);
        return k3.lattice.pairing(v, v) == 8;
    });

    og10::GammaLattice gamma = og10::gamma_lattice(mk.lattice, mv);
    r.check("Gamma: sigma^2 = -6 and div(sigma) = 3", [&] {
        return gamma.lattice.pairing(gamma.sigma, gamma.sigma) == -6 &&
               divisibility(gamma.lattice, gamma.sigma) == 3;
    });
    r.check("Gamma: rank 24, signature (3,21), even, disc group [3]", [&] {
        return gamma.lattice.rank() == 24 &&
               gamma.lattice.signature() == Signature{3, 21, 0} &&
               gamma.lattice.is_even() &&
               disc_group(gamma.lattice).invariant_factors == std::vector<Int>{3};
    });
    r.check("Gamma: index 2 over lambda-perp + Z sigma", [&] {
        return gamma.base_index == 2;
    });

    r.check("factoriality of (A2, lambda1+lambda2): 2-factorial", [&] {
        og10::FactorialityVerdict v = og10::factoriality(mk.marked_a2(), lambda0);
        return v.kind == og10::Factoriality::TwoFactorial && v.quotient_order == 2;
    });

    r.check("transcendental lattice of the very general cubic: rank 22", [&] {
        return og10::transcendental(mk.marked_a2()).rank() == 22;
    });

    r.check("glue (1,7,1)/3 on U(3) + <-42>: overlattice of determinant 42", [] {
        IntMatrix g{{0, 3, 0}, {3, 0, 0}, {0, 0, -42}};
        RatVec a(3);
        a[0] = Rat(1, 3);
        a[1] = Rat(7, 3);
        a[2] = Rat(1, 3);
        Overlattice o = overlattice_from_glue(IntegralLattice(g), {GlueVector{a}});
        return o.index == 3 && o.lattice.discriminant() == 42 && o.lattice.is_even();
    });

    og10::PicardLPZ p14 = og10::picard_lpz(14);
    r.check("picard-lpz(14): glued basis Gram is U + <-42>", [&] {
        return p14.glued &&
               p14.lattice.gram() == IntMatrix{{0, 1, 0}, {1, 0, 0}, {0, 0, -42}};
    });
    r.check("picard-lpz(14) matches the coarse invariants of U + <-42>", [&] {
        return same_coarse_invariants(p14.lattice,
                                      direct_sum(make_u(), make_span(-42)));
    });
    r.check("picard-lpz(14) contains a unimodular hyperbolic plane", [&] {
        og10::USearchResult u = og10::contains_unimodular_u(p14.lattice);
        return u.outcome == og10::USearchOutcome::Yes;
    });
    r.check("U(3) + <-36>: no unimodular U by the scale obstruction", [] {
        IntegralLattice l = direct_sum(make_u(3), make_span(-36));
        return og10::contains_unimodular_u(l).outcome ==
               og10::USearchOutcome::NoByScale;
    });

    r.check("LSV birationality at d = 14 (Pfaffian case)", [] {
        return og10::lsv_birational(14);
    });
    r.check("K3 moduli birationality at d = 14 (Pfaffian case)", [] {
        return og10::k3_moduli_birational(14);
    });

    r.check("Hassett admissibility: d = 8 yes, d = 6 no, d = 10 no", [] {
        return hassett::admissible(8) && !hassett::admissible(6) &&
               !hassett::admissible(10);
    });
    r.check("(**) holds at d = 14 with least witness n = 2", [] {
        hassett::Star2Result s = hassett::star2(14);
        return s.holds && s.witness == 2;
    });

    r.check("any isometry of a Z/2-discriminant lattice acts trivially", [&] {
        IntMatrix minus = IntMatrix::identity(perp_lat.rank()).negated();
        return nikulin::acts_trivially(nikulin::disc_action(perp_lat, minus));
    });

    return r.out;
}

} // namespace og10lat::replay
