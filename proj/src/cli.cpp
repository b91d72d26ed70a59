#include "eqvar/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include "eqvar/equations.hpp"
#include "eqvar/io.hpp"
#include "eqvar/selfcheck.hpp"

namespace eqvar {

using nlohmann::json;

namespace {

constexpr int kTrue = 0, kFalse = 1, kError = 2;

json partition_json(const GenPartition& p) {
    json a = json::array();
    for (const auto& x : p.parts()) {
        if (x.is_inf()) a.push_back("inf");
        else a.push_back(x.value());
    }
    return a;
}

json tuple_json(const Tuple& t) {
    json a = json::array();
    for (const auto& q : t) a.push_back(q_str(q));
    return a;
}

int verdict(bool v, bool as_json, std::ostream& out, json extra = json::object()) {
    if (as_json) {
        extra["result"] = v;
        out << extra.dump() << "\n";
    } else {
        out << (v ? "true" : "false") << "\n";
    }
    return v ? kTrue : kFalse;
}

// The ambient composition of a variety file must have the given shape.
void check_shape(const PointSetVariety& Z, const GenPartition& lambda, const std::string& what) {
    if (!(Z.lambda.shape() == lambda))
        throw std::invalid_argument(what + ": file composition " + Z.lambda.str() + " does not match " + lambda.str());
}

} // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Equations and membership for S-stable subvarieties of infinite affine space"};
    app.name("eqvar");
    app.require_subcommand(1, 1);

    bool as_json = false;
    auto add_json = [&](CLI::App* s) { s->add_flag("--json", as_json, "Machine-readable output"); };

    std::string a1, a2, a3, a4, variety, method = "direct";
    bool reduce = false, expand = false, literal = false;
    std::uint64_t seed = 1;

    auto* c_type = app.add_subcommand("type", "Type of a finitary point, e.g. 3^3,5^2,6^inf,7^inf");
    c_type->add_option("point", a1)->required();
    add_json(c_type);

    auto* c_preceq = app.add_subcommand("preceq", "Decide mu ⪯ lambda");
    c_preceq->add_option("mu", a1)->required();
    c_preceq->add_option("lambda", a2)->required();
    add_json(c_preceq);

    auto* c_minex = app.add_subcommand("min-excluded", "Minimal finite partitions not ⪯ lambda");
    c_minex->add_option("lambda", a1)->required();
    add_json(c_minex);

    auto* c_eq = app.add_subcommand("equations", "Generators of the type-locus ideal, or of the ideal of (lambda, Z)");
    c_eq->add_option("lambda", a1)->required();
    c_eq->add_option("--variety", variety, "Variety file (JSON)");
    c_eq->add_flag("--reduce", reduce, "Drop generators implied on a random point battery (heuristic)");
    c_eq->add_flag("--expand", expand, "Print generators fully expanded");
    c_eq->add_flag("--literal", literal, "Use the bare h_T*iota(g) recipe without row-equality factors");
    c_eq->add_option("--seed", seed, "Seed for --reduce");
    add_json(c_eq);

    auto* c_member = app.add_subcommand("member", "Membership of a finitary point");
    c_member->add_option("lambda", a1)->required();
    c_member->add_option("point", a2)->required();
    c_member->add_option("--variety", variety, "Variety file (JSON)");
    c_member->add_option("--method", method, "direct | equations | both")
        ->check(CLI::IsMember({"direct", "equations", "both"}));
    add_json(c_member);

    auto* c_contains = app.add_subcommand("contains", "Decide Theta_mu(Z1) ⊆ Theta_lambda(Z2)");
    c_contains->add_option("mu", a1)->required();
    c_contains->add_option("file1", a2)->required();
    c_contains->add_option("lambda", a3)->required();
    c_contains->add_option("file2", a4)->required();
    add_json(c_contains);

    auto* c_gamma = app.add_subcommand("gamma", "Point set Gamma_lambda(Z) at mu");
    c_gamma->add_option("lambda", a1)->required();
    c_gamma->add_option("file", a2)->required();
    c_gamma->add_option("mu", a3)->required();
    add_json(c_gamma);

    auto* c_self = app.add_subcommand("selfcheck", "Run the invariant battery");
    c_self->add_option("--seed", seed, "Random seed");
    add_json(c_self);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : kError;
    }

    try {
        if (c_type->parsed()) {
            const auto t = parse_point(a1).type();
            if (as_json) out << json{{"type", t.str()}, {"parts", partition_json(t)}}.dump() << "\n";
            else out << t.str() << "\n";
            return kTrue;
        }
        if (c_preceq->parsed()) return verdict(preceq(parse_partition(a1), parse_partition(a2)), as_json, out);
        if (c_minex->parsed()) {
            const auto m = min_excluded(parse_partition(a1));
            if (as_json) {
                json a = json::array();
                for (const auto& p : m) a.push_back(partition_json(p));
                out << json{{"min_excluded", a}}.dump() << "\n";
            } else {
                for (const auto& p : m) out << p.str() << "\n";
            }
            return kTrue;
        }
        if (c_eq->parsed()) {
            const auto lambda = parse_partition(a1);
            TypeIdeal I;
            if (variety.empty()) {
                I = i_lambda(lambda);
            } else {
                const auto Z = load_variety(variety);
                check_shape(Z, lambda, "equations");
                I = i_lambda_z(Z, literal ? Recipe::Literal : Recipe::Corrected);
            }
            if (reduce) I = reduce_generators(I, seed);
            if (as_json) {
                json a = json::array();
                for (const auto& g : I.generators)
                    a.push_back({{"poly", expand ? g.poly.expand().str() : g.poly.str()}, {"provenance", g.provenance}});
                out << json{{"lambda", lambda.str()}, {"reduced", reduce}, {"generators", a}}.dump() << "\n";
            } else {
                if (reduce) out << "# reduced heuristically on a random point battery (seed " << seed << ")\n";
                out << ideal_text(I, expand);
            }
            return kTrue;
        }
        if (c_member->parsed()) {
            const auto lambda = parse_partition(a1);
            const auto x = parse_point(a2);
            std::optional<PointSetVariety> Z;
            if (!variety.empty()) {
                Z = load_variety(variety);
                check_shape(*Z, lambda, "member");
            }
            auto direct = [&] { return Z ? theta_member(*Z, x) : preceq(x.type(), lambda); };
            auto by_eq = [&] { return member_by_equations(Z ? i_lambda_z(*Z) : i_lambda(lambda), x); };
            if (method == "direct") return verdict(direct(), as_json, out);
            if (method == "equations") return verdict(by_eq(), as_json, out);
            const bool d = direct(), e = by_eq();
            if (d != e) {
                err << "error: methods disagree (direct=" << d << ", equations=" << e << ")\n";
                if (as_json) out << json{{"direct", d}, {"equations", e}, {"agree", false}}.dump() << "\n";
                return kError;
            }
            return verdict(d, as_json, out, {{"direct", d}, {"equations", e}, {"agree", true}});
        }
        if (c_contains->parsed()) {
            const auto Z1 = load_variety(a2), Z2 = load_variety(a4);
            check_shape(Z1, parse_partition(a1), "contains");
            check_shape(Z2, parse_partition(a3), "contains");
            return verdict(contains(Z1, Z2), as_json, out);
        }
        if (c_gamma->parsed()) {
            const auto Z = load_variety(a2);
            check_shape(Z, parse_partition(a1), "gamma");
            const auto mu = parse_partition(a3);
            if (mu.empty()) throw std::invalid_argument("gamma: mu must be non-empty");
            const auto G = gamma_at(Z, GenComposition(mu));
            if (as_json) {
                json a = json::array();
                for (const auto& t : G.points) a.push_back(tuple_json(t));
                out << json{{"mu", mu.str()}, {"points", a}}.dump() << "\n";
            } else {
                for (const auto& t : G.points) out << tuple_str(t) << "\n";
            }
            return kTrue;
        }
        if (c_self->parsed()) {
            const auto results = run_selfcheck(seed);
            int passed = 0;
            json a = json::array();
            for (const auto& r : results) {
                passed += r.failures == 0;
                if (as_json) {
                    a.push_back({{"name", r.name}, {"cases", r.cases}, {"failures", r.failures}, {"note", r.note}});
                } else {
                    out << (r.failures == 0 ? "PASS " : "FAIL ") << r.name << ": " << r.cases << " cases, "
                        << r.failures << " failures" << (r.note.empty() ? "" : " (" + r.note + ")") << "\n";
                }
            }
            if (as_json) out << json{{"seed", seed}, {"checks", a}, {"passed", passed}}.dump() << "\n";
            else out << "passed " << passed << "/" << results.size() << " (seed " << seed << ")\n";
            return passed == int(results.size()) ? kTrue : kFalse;
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kError;
    }
    return kError;
}

} // namespace eqvar
