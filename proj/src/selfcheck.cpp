#include "eqvar/selfcheck.hpp"

#include "eqvar/equations.hpp"
#include "eqvar/extract.hpp"
#include "eqvar/random_cases.hpp"

namespace eqvar {

namespace {

CheckResult skew_identity() {
    CheckResult r{"skew-sum identity (n <= 5)", 0, 0, ""};
    for (int n = 2; n <= 5; ++n)
        for (int k = 0; k <= n - 1; ++k) {
            ++r.cases;
            const SparsePoly want = k == n - 1 ? discriminant(n) : SparsePoly();
            if (skew_sum(n, k) != want) ++r.failures;
        }
    return r;
}

CheckResult pullbacks(Rng& rng) {
    CheckResult r{"pullback squares", 0, 0, ""};
    for (int i = 0; i < 100; ++i) {
        const auto mu = random_inf_composition(rng, 3, 6);
        const CompMap f1 = uniform(rng, 0, 1) ? random_principal_surjection(rng, mu, 3) : random_map(rng, mu, 4);
        CompMap f2;
        switch (uniform(rng, 0, 2)) {
        case 0: f2 = random_principal_surjection(rng, mu, 3); break;
        case 1: f2 = random_injection(rng, mu); break;
        default: f2 = random_map(rng, mu, 4); break;
        }
        ++r.cases;
        const auto sq = pullback_square(f1, f2);
        bool ok = then(sq.g1, f1) == then(sq.g2, f2);
        if (f2.is_principal_surjection()) ok = ok && sq.g1.is_principal_surjection();
        if (f2.is_injection()) ok = ok && sq.g1.is_injection();
        if (!ok) ++r.failures;
    }
    return r;
}

CheckResult filling_vs_grouping() {
    CheckResult r{"filling vs grouping (<= 4 parts in {1,2,3,inf})", 0, 0, ""};
    std::vector<GenPartition> all;
    const ExtNat vals[] = {1, 2, 3, INF};
    std::vector<ExtNat> cur;
    auto rec = [&](auto&& self, int from) -> void {
        all.emplace_back(cur);
        if (cur.size() == 4) return;
        for (int v = from; v < 4; ++v) {
            cur.push_back(vals[v]);
            self(self, v);
            cur.pop_back();
        }
    };
    rec(rec, 0);
    for (const auto& a : all)
        for (const auto& b : all) {
            ++r.cases;
            if (preceq(a, b) != good_filling_exists(a, b)) ++r.failures;
        }
    return r;
}

SparsePoly random_small_poly(Rng& rng) {
    SparsePoly f;
    while (f.is_zero()) {
        const int nterms = int(uniform(rng, 1, 4));
        for (int k = 0; k < nterms; ++k) {
            Monomial m;
            std::uint32_t budget = std::uint32_t(uniform(rng, 0, 3));
            for (int v = 1; v <= 3 && budget; ++v) {
                const std::uint32_t e = std::uint32_t(uniform(rng, 0, budget));
                if (e) m.emplace_back(xi(v), e);
                budget -= e;
            }
            f.add_term(m, Q(long(uniform(rng, 0, 4)) - 2));
        }
    }
    return f;
}

CheckResult extraction(Rng& rng) {
    CheckResult r{"discriminant extraction", 0, 0, ""};
    for (int i = 0; i < 50; ++i) {
        const SparsePoly f = random_small_poly(rng);
        ++r.cases;
        if (!verify_witness(f, extract_discriminant(f))) ++r.failures;
    }
    return r;
}

CheckResult type_locus(Rng& rng) {
    CheckResult r{"type-locus equations vs preceq", 0, 0, ""};
    int yes = 0;
    for (int i = 0; i < 200; ++i) {
        const auto c = random_type_locus_case(rng);
        const bool direct = preceq(c.x.type(), c.lambda);
        yes += direct;
        ++r.cases;
        if (member_by_equations(i_lambda(c.lambda), c.x) != direct) ++r.failures;
    }
    r.note = std::to_string(yes) + " members";
    return r;
}

CheckResult closure(Rng& rng) {
    CheckResult r{"closure equations vs direct membership", 0, 0, ""};
    int yes = 0;
    for (int i = 0; i < 100; ++i) {
        const auto c = random_closure_case(rng);
        const bool direct = theta_member(c.Z, c.x);
        yes += direct;
        ++r.cases;
        if (member_by_equations(i_lambda_z(c.Z), c.x) != direct) ++r.failures;
    }
    r.note = std::to_string(yes) + " members";
    return r;
}

} // namespace

std::vector<CheckResult> run_selfcheck(std::uint64_t seed) {
    Rng rng(seed);
    std::vector<CheckResult> out;
    out.push_back(skew_identity());
    out.push_back(pullbacks(rng));
    out.push_back(filling_vs_grouping());
    out.push_back(extraction(rng));
    out.push_back(type_locus(rng));
    out.push_back(closure(rng));
    return out;
}

} // namespace eqvar
