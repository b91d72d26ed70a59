#pragma once

#include "eqvar/poly.hpp"

namespace eqvar {

// p = ±σ(q) for some relabeling σ of the ξ-variables.  Products of linear
// differences are compared as multigraphs; anything else is expanded and every
// bijection of the supports is tried.
bool equivalent_up_to_sign_relabel(const FactoredPoly& p, const FactoredPoly& q);

} // namespace eqvar
