#pragma once

#include <optional>
#include <string>

#include "og10lat/lattice.hpp"

namespace og10lat::catalog {

/// Hyperbolic plane scaled by n: Gram [[0,n],[n,0]].
IntegralLattice make_u(const Int& n = 1);
IntegralLattice make_a2();
IntegralLattice make_e8_neg();
/// Rank-1 lattice <n>.
IntegralLattice make_span(const Int& n);

/// U^4 + E8(-1)^2 with a marked primitive A2 = <lambda1, lambda2>,
/// lambda_i^2 = 2 and (lambda1, lambda2) = -1.
struct MarkedMukaiLattice {
    IntegralLattice lattice;
    RowVec lambda1;
    RowVec lambda2;
    Sublattice marked_a2() const;
};

MarkedMukaiLattice mukai_kuznetsov();

/// The same abstract lattice with a distinguished hyperbolic pair (h0, h4),
/// (h0, h4) = -1, so that (r, 0, s) classes are r*h0 + s*h4 with square -2rs.
struct K3MukaiLattice {
    IntegralLattice lattice;
    RowVec h0;
    RowVec h4;
    /// r*h0 + s*h4 (vanishing middle part).
    RowVec vector_rs(const Int& r, const Int& s) const;
};

K3MukaiLattice mukai_k3();

/// Resolve a catalog name: "U", "U(n)", "A2", "E8-", "<n>",
/// "mukai-k3", "mukai-kuznetsov". nullopt if the name is not recognized.
std::optional<IntegralLattice> by_name(const std::string& name);

} // namespace og10lat::catalog
