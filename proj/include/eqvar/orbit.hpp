#pragma once

#include <set>

#include "eqvar/point.hpp"
#include "eqvar/poly.hpp"

namespace eqvar {

// { p(σx) : σ ∈ S }: p evaluated under every assignment of its ξ-support to the
// value classes of x respecting multiplicities.  p must not involve t-variables.
std::set<Q> orbit_evaluations(const FactoredPoly& p, const FinitaryPoint& x);

// True iff every value in orbit_evaluations(p, x) is zero; stops at the first nonzero value.
bool orbit_vanishes(const FactoredPoly& p, const FinitaryPoint& x);

// OpenMP versions of the two kernels above; identical results.
std::set<Q> orbit_evaluations_par(const FactoredPoly& p, const FinitaryPoint& x);
bool orbit_vanishes_par(const FactoredPoly& p, const FinitaryPoint& x);

} // namespace eqvar
