#pragma once

#include <vector>

#include "eqvar/corr.hpp"
#include "eqvar/point.hpp"
#include "eqvar/vanishing.hpp"

namespace eqvar {

// A finite set of rational points of the affine space with coordinates indexed by ⟨λ⟩.
struct PointSetVariety {
    GenComposition lambda;
    PointSet points;

    PointSetVariety() = default;
    PointSetVariety(GenComposition l, PointSet p);

    // Every point has pairwise distinct coordinates.
    bool distinct_coordinates() const;
    // The values occurring as coordinates.
    std::set<Q> values() const;
};

// Coordinate i of the result is x[f(i)].
Tuple act_point(const CompMap& f, const Tuple& x);

// α_f(S) = α_{f1}^{-1}(α_{f2}(S)) for f: μ ⇢ λ and S on λ; result on μ.
PointSetVariety apply_corr(const Correspondence& f, const PointSetVariety& S);

// Z^e: union of α_f(Z) over all endomorphisms f of λ.
PointSetVariety end_closure(const PointSetVariety& Z);

// Γ_λ(Z)_μ (μ infinite) or Γ_λ(Z)⁺_μ (μ finite): union of α_f(Z^e) over good f: μ ⇢ λ.
PointSetVariety gamma_at(const PointSetVariety& Z, const GenComposition& mu);

// Same as above, but as the literal union over enumerate_good (slower, used for cross-checks).
PointSetVariety gamma_at_by_enumeration(const PointSetVariety& Z, const GenComposition& mu);

// Membership z ∈ Γ given the End-closure Ze on λ, without building the whole set.
bool gamma_contains(const PointSetVariety& Ze, const GenComposition& mu, const Tuple& z);

// x ∈ Θ_λ(Z).  Z must have distinct coordinates.
bool theta_member(const PointSetVariety& Z, const FinitaryPoint& x);

// Θ_μ(Z1) ⊆ Θ_λ(Z2), i.e. Z1 ⊆ Γ_λ(Z2)_μ.  Both must have distinct coordinates.
bool contains(const PointSetVariety& Z1, const PointSetVariety& Z2);

// Orbits of Z under Aut(λ) permuting coordinates.
std::vector<PointSet> aut_orbits(const PointSetVariety& Z);

} // namespace eqvar
