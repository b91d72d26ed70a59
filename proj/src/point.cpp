#include "eqvar/point.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace eqvar {

FinitaryPoint::FinitaryPoint(std::vector<Class> classes) : classes_(std::move(classes)) {
    std::set<Q> seen;
    bool has_inf = false;
    for (auto& c : classes_) c.first.canonicalize();
    for (const auto& [v, m] : classes_) {
        if (m.is_zero()) throw std::invalid_argument("point: multiplicity must be >= 1");
        if (!seen.insert(v).second) throw std::invalid_argument("point: repeated value " + q_str(v));
        has_inf = has_inf || m.is_inf();
    }
    if (!has_inf) throw std::invalid_argument("point: some value must have multiplicity inf");
    std::sort(classes_.begin(), classes_.end(), [](const Class& a, const Class& b) {
        if (!(a.second == b.second)) return a.second > b.second;
        return a.first < b.first;
    });
}

GenPartition FinitaryPoint::type() const {
    std::vector<ExtNat> m;
    for (const auto& c : classes_) m.push_back(c.second);
    return GenPartition(std::move(m));
}

std::string FinitaryPoint::str() const {
    std::string out;
    for (const auto& [v, m] : classes_) {
        if (!out.empty()) out += ',';
        out += q_str(v) + '^' + m.str();
    }
    return out;
}

FinitaryPoint parse_point(const std::string& s) {
    std::vector<FinitaryPoint::Class> cls;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        auto caret = tok.find('^');
        if (caret == std::string::npos) throw std::invalid_argument("point: expected value^mult in '" + tok + "'");
        std::string mult = tok.substr(caret + 1);
        std::erase_if(mult, [](char c) { return c == ' '; });
        cls.emplace_back(parse_rational(tok.substr(0, caret)), parse_extnat(mult));
    }
    return FinitaryPoint(std::move(cls));
}

} // namespace eqvar
