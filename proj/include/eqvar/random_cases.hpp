#pragma once

#include <random>

#include "eqvar/corr.hpp"
#include "eqvar/point.hpp"
#include "eqvar/variety.hpp"

namespace eqvar {

using Rng = std::mt19937_64;

inline std::uint64_t uniform(Rng& rng, std::uint64_t lo, std::uint64_t hi) {
    return std::uniform_int_distribution<std::uint64_t>(lo, hi)(rng);
}

// ∞-partition with at most max_len parts and e(λ) <= max_e.
GenPartition random_inf_partition(Rng& rng, std::size_t max_len, std::uint64_t max_e);

// Point of the given type with values drawn without repetition from pool.
FinitaryPoint random_point_of_type(Rng& rng, const GenPartition& type, std::vector<Q> pool);

// A type obtained from λ by combining, decreasing and removing parts (so it is ⪯ λ).
GenPartition random_type_below(Rng& rng, const GenPartition& lambda);

// Arbitrary ∞-type of width <= max_width with finite parts <= max_part.
GenPartition random_type(Rng& rng, std::size_t max_width, std::uint64_t max_part);

// Up to max_points points with pairwise distinct coordinates, values in [0, max_value].
PointSetVariety random_variety(Rng& rng, const GenComposition& lambda, std::size_t max_points, int max_value);

// Splits every weight of mu into random positive parts (a principal surjection onto mu).
CompMap random_principal_surjection(Rng& rng, const GenComposition& mu, std::size_t max_parts);
CompMap random_injection(Rng& rng, const GenComposition& mu);
// Arbitrary weight-respecting map into mu.
CompMap random_map(Rng& rng, const GenComposition& mu, std::size_t max_labels);
GenComposition random_inf_composition(Rng& rng, std::size_t max_len, std::uint64_t max_part);

// Random instances for the equation-vs-type-order comparison (ℓ(λ) <= 4, e(λ) <= 4, width <= 5).
struct TypeLocusCase {
    GenPartition lambda;
    FinitaryPoint x;
};
TypeLocusCase random_type_locus_case(Rng& rng);

// Random instances for the equation-vs-closure comparison (ℓ(λ) <= 3, |Z| <= 3).
struct ClosureCase {
    PointSetVariety Z;
    FinitaryPoint x;
};
ClosureCase random_closure_case(Rng& rng);

} // namespace eqvar
