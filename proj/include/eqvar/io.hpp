#pragma once

#include <string>

#include "eqvar/equations.hpp"
#include "eqvar/variety.hpp"

namespace eqvar {

// {"lambda": [..., "inf"], "points": [["p/q", 3, ...], ...]}
PointSetVariety parse_variety_json(const std::string& text);
PointSetVariety load_variety(const std::string& path);
std::string variety_to_json(const PointSetVariety& Z);

// "0,1/2,-3"
std::string tuple_str(const Tuple& t);

// One "# provenance: ..." line followed by the generator, per generator.
std::string ideal_text(const TypeIdeal& I, bool expand = false);

} // namespace eqvar
