#pragma once

#include <string>
#include <vector>

#include "og10lat/int_matrix.hpp"

namespace og10lat {

/// A finitely generated free Z-module with an integer-valued symmetric
/// bilinear form, given by its Gram matrix.
class IntegralLattice {
public:
    explicit IntegralLattice(IntMatrix gram, std::string label = "");

    const IntMatrix& gram() const { return gram_; }
    const std::string& label() const { return label_; }
    void set_label(std::string l) { label_ = std::move(l); }

    std::size_t rank() const { return gram_.rows(); }
    Int discriminant() const { return det(gram_); }
    bool is_nondegenerate() const { return discriminant() != 0; }
    /// Even iff every diagonal Gram entry is even.
    bool is_even() const;
    Signature signature() const { return signature_of_symmetric(gram_); }
    /// gcd of all Gram entries, 0 for the zero form.
    Int scale() const;

    Int pairing(const RowVec& x, const RowVec& y) const;
    Rat pairing(const RatVec& x, const RatVec& y) const;

private:
    IntMatrix gram_;
    std::string label_;
};

/// L*/L for a nondegenerate lattice L: invariant factors, generator
/// representatives in L* (as rational rows in the basis of L), their
/// quadratic-form values mod 2Z and pairwise bilinear values mod Z.
struct DiscriminantGroup {
    std::vector<Int> invariant_factors; // > 1, divisibility chain
    RatMatrix generators;               // one row per invariant factor
    std::vector<Rat> q_values;          // canonical: 0 <= num/den < 2
    RatMatrix b_matrix;                 // canonical: 0 <= num/den < 1
    std::size_t length() const { return invariant_factors.size(); }
    Int order() const;
};

/// Canonical representative of q mod 2Z (resp. b mod Z): reduce to lowest
/// terms, then shift the numerator into [0, 2*den) (resp. [0, den)).
Rat reduce_mod_2z(const Rat& q);
Rat reduce_mod_z(const Rat& b);

DiscriminantGroup disc_group(const IntegralLattice& l);

/// Positive generator of the ideal of pairings (v, L).
Int divisibility(const IntegralLattice& l, const RowVec& v);

/// A lattice embedded in an ambient one via an integer basis (rows are
/// generators in ambient coordinates, required linearly independent).
class Sublattice {
public:
    Sublattice(IntegralLattice ambient, IntMatrix basis);

    const IntegralLattice& ambient() const { return ambient_; }
    const IntMatrix& basis() const { return basis_; }
    std::size_t rank() const { return basis_.rows(); }
    /// Gram of the induced form: basis * ambient.gram * basis^T.
    IntegralLattice induced() const;
    /// Ambient coordinates of a vector given in the sublattice basis.
    RowVec to_ambient(const RowVec& v) const;

private:
    IntegralLattice ambient_;
    IntMatrix basis_;
};

/// Saturated sublattice {x in ambient : (x, s) = 0}.
Sublattice orth_complement(const Sublattice& s);

struct SaturationResult {
    Sublattice sublattice;
    Int index; // [saturation : s]
};

/// Primitive closure (Q-span intersected with the ambient lattice).
SaturationResult saturation(const Sublattice& s);

IntegralLattice direct_sum(const IntegralLattice& a, const IntegralLattice& b);
IntegralLattice rescale(const IntegralLattice& l, const Int& n);

/// Rational row vector, in the basis of the lattice being extended, to be
/// adjoined to it.
struct GlueVector {
    RatVec coords;
};

struct Overlattice {
    IntegralLattice lattice; // Gram in the new basis
    RatMatrix basis;         // rows: new basis in old coordinates
    Int index;               // [new : old]
    /// New-basis coordinates of a vector given in old coordinates; the
    /// vector must lie in the overlattice.
    RowVec coords_in_new(const RatVec& old_coords) const;
};

/// Lattice generated by l together with the glue vectors. Every glue vector
/// must pair integrally with l and with the others; on an even lattice glue
/// squares must be even.
Overlattice overlattice_from_glue(const IntegralLattice& l,
                                  const std::vector<GlueVector>& glue);

/// True iff rank, signature, determinant, parity and discriminant-group
/// invariant factors all agree. Necessary for isometry, not sufficient.
bool same_coarse_invariants(const IntegralLattice& a, const IntegralLattice& b);

} // namespace og10lat
