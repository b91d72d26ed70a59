// Acceptance battery: one PASS/FAIL line per criterion.
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <unistd.h>

#include "eqvar/cli.hpp"
#include "eqvar/equations.hpp"
#include "eqvar/equivalence.hpp"
#include "eqvar/extract.hpp"
#include "eqvar/random_cases.hpp"
#include "eqvar/vanishing.hpp"
#include "oracles.hpp"

using namespace eqvar;

namespace {

SparsePoly X(int i) { return SparsePoly::variable(xi(i)); }
SparsePoly T(int i) { return SparsePoly::variable(tv(i)); }
SparsePoly D(int a, int b) { return X(a) - X(b); }

struct Outcome {
    bool ok = true;
    std::string detail;
    void fail(const std::string& why) {
        if (ok) detail = why;
        ok = false;
    }
};

struct CliRun {
    int code;
    std::string out;
};

CliRun cli(std::vector<std::string> args) {
    args.insert(args.begin(), "eqvar");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = run_cli(int(argv.size()), argv.data(), out, err);
    return {code, out.str()};
}

std::vector<std::string> lines(const std::string& s) {
    std::vector<std::string> v;
    std::istringstream in(s);
    for (std::string l; std::getline(in, l);) v.push_back(l);
    return v;
}

// Generator lines of `equations` output (provenance comments skipped).
std::vector<FactoredPoly> generators_of(const std::string& out) {
    std::vector<FactoredPoly> g;
    for (const auto& l : lines(out))
        if (!l.empty() && l[0] != '#') g.push_back(parse_factored(l));
    return g;
}

std::set<std::string> partition_lines(const std::string& out) {
    const auto v = lines(out);
    return {v.begin(), v.end()};
}

bool matches_as_sets(const std::vector<FactoredPoly>& got, const std::vector<FactoredPoly>& want) {
    if (got.size() != want.size()) return false;
    std::vector<bool> used(got.size(), false);
    for (const auto& w : want) {
        bool found = false;
        for (std::size_t i = 0; i < got.size() && !found; ++i)
            if (!used[i] && equivalent_up_to_sign_relabel(got[i], w)) found = used[i] = true;
        if (!found) return false;
    }
    return true;
}

bool contains_equivalent(const std::vector<FactoredPoly>& got, const FactoredPoly& w) {
    for (const auto& g : got)
        if (equivalent_up_to_sign_relabel(g, w)) return true;
    return false;
}

std::string temp_variety(const std::string& text) {
    char buf[] = "/tmp/eqvar_acceptance_XXXXXX";
    const int fd = mkstemp(buf);
    if (fd >= 0) close(fd);
    std::ofstream(buf) << text;
    return buf;
}

Tuple tup(std::initializer_list<long> v) {
    Tuple t;
    for (long x : v) t.emplace_back(x);
    return t;
}

// ---------------------------------------------------------------------------

Outcome type_locus_inf_n() {
    Outcome o;
    for (int n = 1; n <= 5; ++n) {
        const std::string lam = "inf," + std::to_string(n);
        const auto m = cli({"min-excluded", lam});
        const std::string big = std::to_string(n + 1) + "," + std::to_string(n + 1);
        if (m.code != 0 || partition_lines(m.out) != std::set<std::string>{"1,1,1", big})
            o.fail("min-excluded " + lam + " gave " + m.out);
        const auto e = cli({"equations", lam});
        // h1 = (x1-x2)(x2-x3)(x3-x1);  h2 = ∏_{0<=k,l<=n} (x_{n+1-k} - x_{2n+2-l}).
        FactoredPoly h1(Q(1), {D(1, 2), D(2, 3), D(3, 1)});
        FactoredPoly h2;
        for (int k = 0; k <= n; ++k)
            for (int l = 0; l <= n; ++l) h2.factors.push_back(D(n + 1 - k, 2 * n + 2 - l));
        if (e.code != 0 || !matches_as_sets(generators_of(e.out), {h1, h2})) o.fail("equations " + lam);
    }
    return o;
}

Outcome type_locus_inf_inf_2_1() {
    Outcome o;
    const auto m = cli({"min-excluded", "inf,inf,2,1"});
    if (m.code != 0 || partition_lines(m.out) != std::set<std::string>{"1,1,1,1,1", "2,2,2,2", "3,3,3,1", "4,4,4"})
        o.fail("min-excluded gave " + m.out);
    FactoredPoly h1, h2, h3, h4;
    for (int i = 1; i <= 5; ++i)
        for (int j = i + 1; j <= 5; ++j) h1.factors.push_back(D(i, j));
    for (int i = 1; i <= 4; ++i)
        for (int j = i + 1; j <= 4; ++j)
            for (int k = 0; k <= 1; ++k)
                for (int l = 0; l <= 1; ++l) h2.factors.push_back(D(2 * i - k, 2 * j - l));
    for (int i = 1; i <= 9; ++i) h3.factors.push_back(D(i, 10));
    for (int i = 1; i <= 3; ++i)
        for (int j = i + 1; j <= 3; ++j)
            for (int k = 0; k <= 2; ++k)
                for (int l = 0; l <= 2; ++l) h3.factors.push_back(D(3 * i - k, 3 * j - l));
    for (int i = 1; i <= 3; ++i)
        for (int j = i + 1; j <= 3; ++j)
            for (int k = 0; k <= 3; ++k)
                for (int l = 0; l <= 3; ++l) h4.factors.push_back(D(4 * i - k, 4 * j - l));
    const auto e = cli({"equations", "inf,inf,2,1"});
    if (e.code != 0 || !matches_as_sets(generators_of(e.out), {h1, h2, h3, h4})) o.fail("generators differ");
    return o;
}

Outcome two_value_closure() {
    Outcome o;
    const PointSetVariety Z(GenComposition{INF, INF}, {tup({0, 1}), tup({1, 0})});
    const PointSet g11 = gamma_at(Z, GenComposition{1, 1}).points;
    const PointSet g1 = gamma_at(Z, GenComposition{1}).points;
    if (g11 != PointSet{tup({0, 1}), tup({1, 0}), tup({0, 0}), tup({1, 1})}) o.fail("gamma at (1,1)");
    if (g1 != PointSet{tup({0}), tup({1})}) o.fail("gamma at (1)");
    if (vanishing_ideal(g11, 2) != std::vector<SparsePoly>{T(1).pow(2) - T(1), T(2).pow(2) - T(2)})
        o.fail("vanishing ideal at (1,1)");
    if (vanishing_ideal(g1, 1) != std::vector<SparsePoly>{T(1).pow(2) - T(1)}) o.fail("vanishing ideal at (1)");
    const std::string file = temp_variety(R"({"lambda": ["inf", "inf"], "points": [[0, 1], [1, 0]]})");
    const auto e = cli({"equations", "inf,inf", "--variety", file});
    std::remove(file.c_str());
    const auto got = generators_of(e.out);
    const SparsePoly q1 = X(1) * (X(1) - SparsePoly(1)), q2 = X(2) * (X(2) - SparsePoly(1));
    const std::vector<FactoredPoly> want{FactoredPoly(Q(1), {D(1, 2), D(2, 3), D(3, 1)}),
                                         FactoredPoly(Q(1), {D(1, 2), q1}), FactoredPoly(Q(1), {D(1, 2), q2}),
                                         FactoredPoly(q1)};
    if (e.code != 0) o.fail("equations exit code");
    for (std::size_t k = 0; k < want.size(); ++k)
        if (!contains_equivalent(got, want[k])) o.fail("missing display " + std::to_string(k + 1));
    return o;
}

Outcome type_locus_random() {
    Outcome o;
    Rng rng(20240101);
    int members = 0;
    for (int i = 0; i < 200; ++i) {
        const auto c = random_type_locus_case(rng);
        if (c.lambda.length() > 4 || c.lambda.finite_sum() > 4 || c.x.width() > 5) o.fail("case outside bounds");
        const bool want = preceq(c.x.type(), c.lambda);
        members += want;
        if (member_by_equations(i_lambda(c.lambda), c.x) != want) o.fail(c.lambda.str() + " at " + c.x.str());
    }
    o.detail += (o.detail.empty() ? "" : "; ") + std::to_string(members) + "/200 members";
    return o;
}

Outcome closure_random() {
    Outcome o;
    Rng rng(20240202);
    int members = 0;
    for (int i = 0; i < 100; ++i) {
        const auto c = random_closure_case(rng);
        if (c.Z.lambda.size() > 3 || c.Z.points.size() > 3 || !c.Z.distinct_coordinates()) o.fail("case outside bounds");
        const bool want = theta_member(c.Z, c.x);
        members += want;
        if (member_by_equations(i_lambda_z(c.Z), c.x) != want) o.fail("disagreement at " + c.x.str());
    }
    o.detail += (o.detail.empty() ? "" : "; ") + std::to_string(members) + "/100 members";
    return o;
}

Outcome filling_vs_grouping() {
    Outcome o;
    const auto all = oracle::partitions_from({1, 2, 3, INF}, 4);
    long pairs = 0;
    for (const auto& a : all)
        for (const auto& b : all) {
            ++pairs;
            if (preceq(a, b) != good_filling_exists(a, b)) o.fail(a.str() + " vs " + b.str());
        }
    o.detail += (o.detail.empty() ? "" : "; ") + std::to_string(pairs) + " pairs";
    return o;
}

Outcome skew_identity() {
    Outcome o;
    for (int n = 2; n <= 5; ++n)
        for (int k = 0; k <= n - 1; ++k) {
            const SparsePoly want = k == n - 1 ? discriminant(n) : SparsePoly();
            if (skew_sum(n, k) != want) o.fail("n=" + std::to_string(n) + " k=" + std::to_string(k));
        }
    return o;
}

Outcome extraction() {
    Outcome o;
    Rng rng(20240303);
    int done = 0;
    while (done < 60) {
        SparsePoly f;
        const int nterms = int(uniform(rng, 1, 4));
        for (int k = 0; k < nterms; ++k) {
            Monomial m;
            auto budget = std::uint32_t(uniform(rng, 0, 3));
            for (int v = 1; v <= 3 && budget; ++v) {
                const auto e = std::uint32_t(uniform(rng, 0, budget));
                if (e) m.emplace_back(xi(v), e);
                budget -= e;
            }
            f.add_term(m, Q(long(uniform(rng, 0, 4)) - 2));
        }
        if (f.is_zero()) continue;
        ++done;
        const auto w = extract_discriminant(f);
        if (!verify_witness(f, w) || replay(f, w) != discriminant(w.n) * w.c) o.fail(f.str());
    }
    o.detail += (o.detail.empty() ? "" : "; ") + std::to_string(done) + " polynomials";
    return o;
}

Outcome pullbacks() {
    Outcome o;
    Rng rng(20240404);
    for (int i = 0; i < 100; ++i) {
        const auto mu = random_inf_composition(rng, 3, 6);
        const CompMap f1 = uniform(rng, 0, 1) ? random_principal_surjection(rng, mu, 3) : random_map(rng, mu, 4);
        CompMap f2;
        switch (uniform(rng, 0, 2)) {
        case 0: f2 = random_principal_surjection(rng, mu, 3); break;
        case 1: f2 = random_injection(rng, mu); break;
        default: f2 = random_map(rng, mu, 4); break;
        }
        const auto sq = pullback_square(f1, f2);
        if (then(sq.g1, f1) != then(sq.g2, f2)) o.fail("square does not commute");
        if (f2.is_principal_surjection() && !sq.g1.is_principal_surjection()) o.fail("surjection not preserved");
        if (f2.is_injection() && !sq.g1.is_injection()) o.fail("injection not preserved");
    }
    return o;
}

Outcome end_closure_strict() {
    Outcome o;
    const GenComposition lambda{INF, 2, 1, 1};
    const PointSetVariety Z(lambda, {tup({1, 2, 3, 3})});
    if (end_closure(Z).points.count(tup({1, 3, 2, 2}))) o.fail("(1,3,2,2) in the End-closure");
    if (!gamma_at(Z, lambda).points.count(tup({1, 3, 2, 2}))) o.fail("(1,3,2,2) not in gamma");
    return o;
}

Outcome membership_semantics() {
    Outcome o;
    auto both = [&](const PointSetVariety& Z, const FinitaryPoint& x, bool want) {
        if (theta_member(Z, x) != want) o.fail("direct at " + x.str());
        if (member_by_equations(i_lambda_z(Z), x) != want) o.fail("equations at " + x.str());
    };
    const PointSetVariety Z(GenComposition{INF, INF}, {tup({0, 1}), tup({1, 0})});
    for (const char* s : {"0^inf", "1^inf", "0^inf,1^inf", "0^inf,1^1", "0^inf,1^4", "1^inf,0^2"})
        both(Z, parse_point(s), true);
    for (const char* s : {"2^inf", "0^inf,1^inf,2^1", "0^inf,3^1"}) both(Z, parse_point(s), false);
    for (std::uint64_t n = 1; n <= 3; ++n) {
        const PointSetVariety Zn(GenComposition{INF, ExtNat(n)}, {tup({0, 1})});
        both(Zn, FinitaryPoint({{Q(0), INF}, {Q(1), ExtNat(n)}}), true);
        both(Zn, FinitaryPoint({{Q(0), INF}, {Q(1), ExtNat(n + 1)}}), false);
    }
    return o;
}

} // namespace

int main() {
    struct Criterion {
        const char* name;
        std::function<Outcome()> run;
        double budget_s;
    };
    const std::vector<Criterion> criteria{
        {"type locus of (inf,n), n=1..5: minimal excluded set and generators", type_locus_inf_n, 1},
        {"type locus of (inf,inf,2,1): four minimal excluded partitions and generators", type_locus_inf_inf_2_1, 5},
        {"two-value closure: gamma sets, vanishing ideals and generators", two_value_closure, 0},
        {"type-locus equations vs preceq on 200 random cases", type_locus_random, 60},
        {"closure equations vs direct membership on 100 random cases", closure_random, 120},
        {"filling criterion vs grouping, <= 4 parts in {1,2,3,inf}", filling_vs_grouping, 0},
        {"skew-sum identity for n <= 5", skew_identity, 0},
        {"discriminant extraction witnesses", extraction, 0},
        {"100 random pullback squares", pullbacks, 0},
        {"gamma strictly larger than the End-closure for (inf,2,1,1)", end_closure_strict, 0},
        {"membership of 0/1 points and of points with bounded ones, n=1..3", membership_semantics, 0},
    };
    int passed = 0, k = 0;
    for (const auto& c : criteria) {
        ++k;
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.fail(std::string("exception: ") + e.what());
        }
        const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (c.budget_s > 0 && s > c.budget_s) o.fail("over time budget");
        passed += o.ok;
        std::printf("%s %2d  %-78s %8.3f s%s%s\n", o.ok ? "PASS" : "FAIL", k, c.name, s,
                    o.detail.empty() ? "" : "  ", o.detail.c_str());
    }
    std::printf("%d/%zu criteria passed\n", passed, criteria.size());
    return passed == int(criteria.size()) ? 0 : 1;
}
