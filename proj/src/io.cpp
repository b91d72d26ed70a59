#include "eqvar/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace eqvar {

using nlohmann::json;

namespace {

ExtNat weight_from_json(const json& j) {
    if (j.is_string()) return parse_extnat(j.get<std::string>());
    if (j.is_number_unsigned() || (j.is_number_integer() && j.get<long long>() >= 0))
        return ExtNat(j.get<std::uint64_t>());
    throw std::invalid_argument("variety: lambda entries must be naturals or \"inf\"");
}

Q rational_from_json(const json& j) {
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_integer()) return Q(j.get<long>());
    throw std::invalid_argument("variety: coordinates must be integers or \"p/q\" strings");
}

} // namespace

PointSetVariety parse_variety_json(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("variety: malformed JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("lambda") || !doc.contains("points"))
        throw std::invalid_argument("variety: expected an object with 'lambda' and 'points'");
    std::vector<ExtNat> w;
    for (const auto& x : doc.at("lambda")) w.push_back(weight_from_json(x));
    PointSet pts;
    for (const auto& p : doc.at("points")) {
        if (!p.is_array()) throw std::invalid_argument("variety: each point must be an array");
        Tuple t;
        for (const auto& c : p) t.push_back(rational_from_json(c));
        pts.insert(std::move(t));
    }
    return PointSetVariety(GenComposition(std::move(w)), std::move(pts));
}

PointSetVariety load_variety(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open variety file '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_variety_json(ss.str());
}

std::string variety_to_json(const PointSetVariety& Z) {
    json doc;
    doc["lambda"] = json::array();
    for (const auto& x : Z.lambda.weights()) {
        if (x.is_inf()) doc["lambda"].push_back("inf");
        else doc["lambda"].push_back(x.value());
    }
    doc["points"] = json::array();
    for (const auto& t : Z.points) {
        json row = json::array();
        for (const auto& q : t) {
            if (q.get_den() == 1 && q.get_num().fits_slong_p()) row.push_back(q.get_num().get_si());
            else row.push_back(q_str(q));
        }
        doc["points"].push_back(row);
    }
    return doc.dump();
}

std::string tuple_str(const Tuple& t) {
    std::string out;
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (i) out += ',';
        out += q_str(t[i]);
    }
    return out;
}

std::string ideal_text(const TypeIdeal& I, bool expand) {
    std::string out;
    for (const auto& g : I.generators) {
        out += "# provenance: " + g.provenance + "\n";
        out += (expand ? g.poly.expand().str() : g.poly.str()) + "\n";
    }
    return out;
}

} // namespace eqvar
