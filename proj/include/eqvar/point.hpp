#pragma once

#include <string>
#include <utility>
#include <vector>

#include "eqvar/partitions.hpp"
#include "eqvar/poly.hpp"

namespace eqvar {

// A point of A^∞ with finitely many distinct coordinate values.
class FinitaryPoint {
public:
    using Class = std::pair<Q, ExtNat>;

    FinitaryPoint() = default;
    // Values must be distinct, multiplicities >= 1, at least one INF.
    explicit FinitaryPoint(std::vector<Class> classes);

    // Sorted by multiplicity (descending), then value (ascending).
    const std::vector<Class>& classes() const { return classes_; }
    std::size_t width() const { return classes_.size(); }
    GenPartition type() const;
    std::string str() const;

    bool operator==(const FinitaryPoint&) const = default;

private:
    std::vector<Class> classes_;
};

inline GenPartition type_of(const FinitaryPoint& x) { return x.type(); }
inline bool width_at_most(const FinitaryPoint& x, std::size_t n) { return x.width() <= n; }

// "0^inf,1^3,-1/2^2"
FinitaryPoint parse_point(const std::string& s);

} // namespace eqvar
