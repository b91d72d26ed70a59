#pragma once

#include <set>
#include <vector>

#include "eqvar/poly.hpp"

namespace eqvar {

using Tuple = std::vector<Q>;
using PointSet = std::set<Tuple>;

// Reduced grlex Gröbner basis (in t_1..t_r) of the ideal of polynomials vanishing
// on a finite point set, by Buchberger–Möller, ordered by degree and then by
// decreasing leading monomial.  The empty set gives {1}.
std::vector<SparsePoly> vanishing_ideal(const PointSet& points, int r);

// Monomials of t_1..t_r not divisible by any leading monomial of the basis.
std::vector<Monomial> standard_monomials(const std::vector<SparsePoly>& basis, int r);

} // namespace eqvar
