#pragma once

#include <array>
#include <optional>
#include <utility>

#include "og10lat/catalog.hpp"
#include "og10lat/lattice.hpp"

namespace og10lat::og10 {

/// Mukai vector of the non-primitive OG10 form: lambda = 2*lambda0 with
/// lambda0 primitive of square 2.
struct MukaiVector {
    RowVec coords;  // 2 * lambda0
    RowVec lambda0;
    Int square;     // cached (coords, coords) = 8
};

MukaiVector make_og10_vector(const IntegralLattice& mukai, const RowVec& lambda0);

/// Orthogonal complement of lambda0 (equivalently of lambda) in the
/// ambient Mukai lattice; rank 23.
Sublattice lambda_perp(const IntegralLattice& mukai, const MukaiVector& v);

/// The index-2 overlattice of lambda-perp + Z*sigma (sigma^2 = -6) glued
/// along the order-2 discriminant class paired with sigma/2.
struct GammaLattice {
    IntegralLattice lattice; // rank 24
    RowVec sigma;            // in the basis of `lattice`
    Sublattice base;         // image of lambda-perp + Z*sigma
    Int base_index;          // always 2
};

GammaLattice gamma_lattice(const IntegralLattice& mukai, const MukaiVector& v);

enum class Factoriality { LocallyFactorial, TwoFactorial };

struct FactorialityVerdict {
    Factoriality kind = Factoriality::LocallyFactorial;
    std::optional<RowVec> witness; // basis vector of n_alg with odd pairing
    int quotient_order = 1;        // order of the Weil/Cartier quotient
};

/// Parity test deciding local factoriality: locally factorial iff lambda0
/// pairs evenly with every vector of the algebraic lattice, 2-factorial
/// otherwise. lambda0 is given in ambient coordinates and must lie in
/// n_alg, be primitive in the ambient lattice and have square 2.
FactorialityVerdict factoriality(const Sublattice& n_alg, const RowVec& lambda0_ambient);
/// Same test on a bare Gram matrix; lambda0 in the basis of alg. Only
/// primitivity inside alg can be checked in this form.
FactorialityVerdict factoriality(const IntegralLattice& alg, const RowVec& lambda0);

/// Orthogonal complement of the algebraic sublattice.
Sublattice transcendental(const Sublattice& algebraic);

/// Rank-3 Picard lattice of the desingularised moduli space for a cubic
/// general in C_d. For d = 2 (mod 6) the glue class A = (e + k*f + D)/3
/// exists and the lattice is U + <-6k> in the basis (A, f, Z = D + 2k*f);
/// for d = 0 (mod 6) it is U(3) + <-6k>.
struct PicardLPZ {
    long d = 0;
    long k = 0; // d/2
    IntegralLattice lattice;
    std::array<std::string, 3> basis_roles;
    bool glued = false;
    std::optional<std::pair<RowVec, RowVec>> u_embedding; // (A, f) when glued
};

PicardLPZ picard_lpz(long d);

enum class USearchOutcome { Yes, NoByScale, NotFoundWithinBound };

struct USearchResult {
    USearchOutcome outcome = USearchOutcome::NotFoundWithinBound;
    std::optional<std::pair<RowVec, RowVec>> witness; // (a, b): a^2 = b^2 = 0, (a,b) = 1
};

/// Decide whether the lattice contains a unimodular hyperbolic plane U.
/// scale > 1 is a definitive obstruction; otherwise a bounded box search
/// over primitive isotropic vectors either produces an explicit pair or is
/// inconclusive.
USearchResult contains_unimodular_u(const IntegralLattice& l, long bound = 32);

bool lsv_birational(long d);
bool k3_moduli_birational(long d);
/// Numerical side only; the stratum-preserving hypothesis is geometric and
/// reported as a caveat by callers.
bool twisted_k3_stratum_birational(long d);

} // namespace og10lat::og10
