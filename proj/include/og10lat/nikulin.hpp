#pragma once

#include "og10lat/lattice.hpp"

namespace og10lat::nikulin {

/// Minimal number of generators of the discriminant group.
std::size_t disc_group_length(const IntegralLattice& l);

enum class EmbeddingVerdict { Exists, Unknown };

/// Sufficient criterion for a primitive embedding of an even nondegenerate
/// lattice t into an even unimodular lattice of signature (lplus, lminus):
///
///   sig+(t) < lplus,  sig-(t) < lminus,
///   and  lplus + lminus - rank(t) >= length(disc(t)) + 2.
///
/// Sufficient only: the negative direction is never decided, so the other
/// outcome is Unknown. The inequality is pinned here and nowhere else.
EmbeddingVerdict embedding_sufficient(const IntegralLattice& t, int lplus, int lminus);

/// Induced action of an isometry on the discriminant group, expressed on
/// the invariant-factor generators; entry (i, j) is reduced mod factor j.
struct DiscAction {
    std::vector<Int> factors;
    IntMatrix matrix;
};

DiscAction disc_action(const IntegralLattice& l, const IntMatrix& iso);
DiscAction disc_action(const Sublattice& s, const IntMatrix& iso);

bool acts_trivially(const DiscAction& a);

} // namespace og10lat::nikulin
