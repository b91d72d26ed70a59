#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "eqvar/point.hpp"
#include "eqvar/poly.hpp"
#include "eqvar/variety.hpp"

namespace eqvar {

struct Generator {
    FactoredPoly poly;
    std::string provenance;
};

// Orbit-generated ideal ⟨⟨g_1, ..., g_s⟩⟩ with per-generator provenance.
struct TypeIdeal {
    GenPartition lambda;
    std::vector<Generator> generators;
};

// ∏ (ξ_i − ξ_j), i < j, over labels in distinct rows.
FactoredPoly h_tableau_factored(const Tableau& T);
SparsePoly h_tableau(const Tableau& T);

// Equations of the type locus: h of the canonical tableau of each minimal excluded α.
TypeIdeal i_lambda(const GenPartition& lambda);

enum class Recipe {
    // Row-equality factors and ⪯-closed truncation set (sound and complete).
    Corrected,
    // Bare h_T·ι(g) over {μ⁻ : μ ≤ λ}; kept for comparison, rejects some points of Θ.
    Literal,
};

// Polynomial in a, b that is 1 when a = b ∈ V and 0 at every other pair of points of V.
SparsePoly equality_indicator(const std::set<Q>& V, Var a, Var b);

TypeIdeal i_lambda_z(const PointSetVariety& Z, Recipe recipe = Recipe::Corrected);

bool member_by_equations(const TypeIdeal& ideal, const FinitaryPoint& x);
bool member_by_equations_par(const TypeIdeal& ideal, const FinitaryPoint& x);

// Heuristic pruning: drops a generator when, on a seeded battery of random points,
// its vanishing is implied by that of another kept generator.
TypeIdeal reduce_generators(const TypeIdeal& ideal, std::uint64_t seed, int battery = 200);

} // namespace eqvar
