#include <doctest.h>

#include "eqvar/io.hpp"
#include "eqvar/random_cases.hpp"
#include "eqvar/variety.hpp"
#include "oracles.hpp"

using namespace eqvar;

namespace {

Tuple tup(std::initializer_list<long> v) {
    Tuple t;
    for (long x : v) t.emplace_back(x);
    return t;
}

PointSetVariety example_c() { return PointSetVariety(GenComposition{INF, INF}, {tup({0, 1}), tup({1, 0})}); }

PointSetVariety one_point(std::uint64_t n) { return PointSetVariety(GenComposition{INF, ExtNat(n)}, {tup({0, 1})}); }

} // namespace

TEST_CASE("type of a point") {
    CHECK(parse_point("3^3,5^2,6^inf,7^inf").type() == GenPartition{INF, INF, 3, 2});
    CHECK(parse_point("4^inf").type() == GenPartition{INF});
    CHECK(parse_point("0^inf,1^3,2^inf").type() == GenPartition{INF, INF, 3});
    CHECK_THROWS(parse_point("0^3"));
    CHECK_THROWS(parse_point("0^inf,0^2"));
    CHECK_THROWS(parse_point("0^inf,1^0"));
}

TEST_CASE("point round trip") {
    Rng rng(4);
    for (int i = 0; i < 100; ++i) {
        const auto x = random_point_of_type(rng, random_type(rng, 5, 4), {0, 1, -2, Q(3, 4), 7, Q(-1, 3)});
        CHECK(parse_point(x.str()) == x);
    }
}

TEST_CASE("width") {
    CHECK(width_at_most(parse_point("0^inf,1^inf"), 2));
    CHECK_FALSE(width_at_most(parse_point("0^inf,1^inf"), 1));
}

TEST_CASE("act_point") {
    const GenComposition l{INF, 2, 1};
    const Tuple x = tup({5, 6, 7});
    CHECK(act_point(CompMap::identity(l), x) == x);
    CHECK(act_point(CompMap(GenComposition{1, 1}, l, {1, 1}), x) == tup({6, 6}));
    CHECK(act_point(CompMap(GenComposition{INF, 1}, l, {0, 2}), x) == tup({5, 7}));
}

TEST_CASE("apply_corr basics") {
    const GenComposition l{INF, 2, 1, 1};
    const PointSetVariety S(l, {tup({1, 2, 3, 3})});
    CHECK(apply_corr(Correspondence::identity(l), S).points == S.points);
    CHECK(apply_corr(Correspondence::identity(l), PointSetVariety(l, {})).points.empty());
}

TEST_CASE("a correspondence can leave the End-closure") {
    const GenComposition lambda{INF, 2, 1, 1}, rho{INF, 1, 1, 1, 1};
    const PointSetVariety Z(lambda, {tup({1, 2, 3, 3})});
    const auto Ze = end_closure(Z);
    CHECK_FALSE(Ze.points.count(tup({1, 3, 2, 2})));
    const Correspondence f{rho, CompMap(rho, lambda, {0, 1, 1, 2, 3}), CompMap(rho, lambda, {0, 2, 3, 1, 1})};
    CHECK(apply_corr(f, Z).points.count(tup({1, 3, 2, 2})));
    CHECK(apply_corr(f, Ze).points.count(tup({1, 3, 2, 2})));
    CHECK(gamma_at(Z, lambda).points.count(tup({1, 3, 2, 2})));
}

TEST_CASE("End-closure") {
    const auto Z = PointSetVariety(GenComposition{INF, INF}, {tup({0, 1})});
    CHECK(end_closure(Z).points == PointSet{tup({0, 1}), tup({0, 0}), tup({1, 1}), tup({1, 0})});
    Rng rng(12);
    for (int i = 0; i < 40; ++i) {
        const auto lam = random_inf_composition(rng, 3, 3);
        const auto V = random_variety(rng, lam, 3, 3);
        const auto E = end_closure(V);
        CHECK(end_closure(E).points == E.points);
        // Same as the union over the exhaustively enumerated endomorphisms.
        PointSet want;
        for (const auto& f : oracle::all_maps(lam, lam))
            for (const auto& p : V.points) want.insert(act_point(f, p));
        CHECK(E.points == want);
    }
}

TEST_CASE("Gamma at the finite compositions of the two-value example") {
    const auto Z = example_c();
    CHECK(gamma_at(Z, GenComposition{1, 1}).points == PointSet{tup({0, 1}), tup({1, 0}), tup({0, 0}), tup({1, 1})});
    CHECK(gamma_at(Z, GenComposition{1}).points == PointSet{tup({0}), tup({1})});
}

TEST_CASE("Gamma by search equals the union over enumerated good correspondences") {
    Rng rng(21);
    const std::vector<GenComposition> mus{GenComposition{INF},       GenComposition{1},         GenComposition{1, 1},
                                          GenComposition{INF, 1},    GenComposition{2, 1},      GenComposition{INF, INF},
                                          GenComposition{INF, 2, 1}, GenComposition{INF, 1, 1}, GenComposition{3}};
    for (int i = 0; i < 40; ++i) {
        const auto lam = random_inf_composition(rng, 3, 2);
        const auto Z = random_variety(rng, lam, 2, 3);
        for (const auto& mu : mus) {
            const auto a = gamma_at(Z, mu);
            const auto b = gamma_at_by_enumeration(Z, mu);
            CHECK_MESSAGE(a.points == b.points, variety_to_json(Z) << " at " << mu.str());
            const auto Ze = end_closure(Z);
            for (const auto& p : a.points) CHECK(gamma_contains(Ze, mu, p));
        }
    }
}

TEST_CASE("Gamma is compatible with principal surjections") {
    // Points of Γ at μ constant on the fibers of f: μ ↠ ν collapse onto Γ at ν.
    Rng rng(23);
    for (int i = 0; i < 30; ++i) {
        const auto lam = random_inf_composition(rng, 3, 2);
        const auto Z = random_variety(rng, lam, 2, 2);
        const auto nu = random_inf_composition(rng, 2, 2);
        const CompMap f = random_principal_surjection(rng, nu, 2);
        const auto Gmu = gamma_at(Z, f.domain);
        const auto Gnu = gamma_at(Z, nu);
        PointSet collapsed;
        for (const auto& p : Gmu.points) {
            bool constant = true;
            Tuple q(nu.size());
            std::vector<bool> seen(nu.size(), false);
            for (std::size_t k = 0; k < p.size(); ++k) {
                const auto j = std::size_t(f.table[k]);
                if (seen[j] && q[j] != p[k]) constant = false;
                q[j] = p[k];
                seen[j] = true;
            }
            if (constant) collapsed.insert(q);
        }
        CHECK_MESSAGE(collapsed == Gnu.points, variety_to_json(Z) << " via " << f.domain.str() << " -> " << nu.str());
    }
}

TEST_CASE("Gamma restricted to distinct coordinates is the Aut-orbit of Z") {
    Rng rng(29);
    for (int i = 0; i < 30; ++i) {
        const auto lam = random_inf_composition(rng, 3, 2);
        const auto Z = random_variety(rng, lam, 2, 4);
        PointSet want;
        for (const auto& s : aut(lam))
            for (const auto& p : Z.points) {
                Tuple q(p.size());
                for (std::size_t k = 0; k < p.size(); ++k) q[std::size_t(s[k])] = p[k];
                want.insert(q);
            }
        PointSet got;
        for (const auto& p : gamma_at(Z, lam).points)
            if (std::set<Q>(p.begin(), p.end()).size() == p.size()) got.insert(p);
        CHECK(got == want);
    }
}

TEST_CASE("Gamma is monotone in Z") {
    Rng rng(37);
    for (int i = 0; i < 20; ++i) {
        const auto lam = random_inf_composition(rng, 3, 2);
        const auto Z = random_variety(rng, lam, 3, 3);
        if (Z.points.size() < 2) continue;
        PointSetVariety Zs(lam, {*Z.points.begin()});
        const auto mu = random_inf_composition(rng, 2, 2);
        for (const auto& p : gamma_at(Zs, mu).points) CHECK(gamma_at(Z, mu).points.count(p));
    }
}

TEST_CASE("theta membership for the two-value and bounded-ones examples") {
    const auto Z = example_c();
    CHECK(theta_member(Z, parse_point("0^inf,1^inf")));
    CHECK(theta_member(Z, parse_point("0^inf,1^5")));
    CHECK(theta_member(Z, parse_point("1^inf")));
    CHECK_FALSE(theta_member(Z, parse_point("0^inf,1^inf,2^1")));
    CHECK_FALSE(theta_member(Z, parse_point("0^inf,2^1")));
    for (std::uint64_t n = 1; n <= 3; ++n) {
        const auto Zn = one_point(n);
        CHECK(theta_member(Zn, FinitaryPoint({{Q(0), INF}, {Q(1), ExtNat(n)}})));
        CHECK_FALSE(theta_member(Zn, FinitaryPoint({{Q(0), INF}, {Q(1), ExtNat(n + 1)}})));
        CHECK(theta_member(Zn, parse_point("0^inf")));
        CHECK_FALSE(theta_member(Zn, parse_point("1^inf")));
    }
    CHECK_THROWS(theta_member(PointSetVariety(GenComposition{INF, INF}, {tup({1, 1})}), parse_point("1^inf")));
    CHECK_FALSE(theta_member(PointSetVariety(GenComposition{INF, INF}, {}), parse_point("1^inf")));
}

TEST_CASE("theta membership requires the type to be below lambda") {
    Rng rng(43);
    for (int i = 0; i < 60; ++i) {
        const auto c = random_closure_case(rng);
        if (!preceq(c.x.type(), c.Z.lambda.shape())) CHECK_FALSE(theta_member(c.Z, c.x));
    }
}

TEST_CASE("containment") {
    CHECK(contains(one_point(1), one_point(2)));
    CHECK_FALSE(contains(one_point(2), one_point(1)));
    CHECK(contains(example_c(), example_c()));
    CHECK(contains(PointSetVariety(GenComposition{INF, 1}, {}), one_point(1)));
}

TEST_CASE("containment agrees with membership on sampled points") {
    // Θ_μ(Z1) ⊆ Θ_λ(Z2) implies every sampled member of the first is a member of the second.
    Rng rng(47);
    std::vector<PointSetVariety> vs{one_point(1), one_point(2), one_point(3), example_c(),
                                    PointSetVariety(GenComposition{INF}, {tup({0})})};
    for (int i = 0; i < 10; ++i) vs.push_back(random_closure_case(rng).Z);
    int implied = 0;
    for (const auto& a : vs)
        for (const auto& b : vs) {
            if (!contains(a, b)) continue;
            ++implied;
            for (int k = 0; k < 30; ++k) {
                const auto x = random_closure_case(rng).x;
                if (theta_member(a, x)) CHECK(theta_member(b, x));
            }
        }
    CHECK(implied > int(vs.size()));
}

TEST_CASE("containment is transitive on sampled pairs") {
    Rng rng(53);
    std::vector<PointSetVariety> vs;
    for (int i = 0; i < 14; ++i) vs.push_back(random_closure_case(rng).Z);
    vs.push_back(one_point(1));
    vs.push_back(one_point(2));
    vs.push_back(example_c());
    for (const auto& a : vs) {
        CHECK(contains(a, a));
        for (const auto& b : vs) {
            if (!contains(a, b)) continue;
            for (const auto& c : vs)
                if (contains(b, c)) CHECK(contains(a, c));
        }
    }
}

TEST_CASE("Aut orbits") {
    CHECK(aut_orbits(example_c()).size() == 1);
    CHECK(aut_orbits(one_point(3)).size() == 1);
    CHECK(aut_orbits(PointSetVariety(GenComposition{INF, INF}, {tup({0, 1}), tup({2, 3})})).size() == 2);
}

TEST_CASE("variety file round trip") {
    Rng rng(61);
    for (int i = 0; i < 50; ++i) {
        const auto Z = random_closure_case(rng).Z;
        const auto back = parse_variety_json(variety_to_json(Z));
        CHECK(back.lambda == Z.lambda);
        CHECK(back.points == Z.points);
    }
    const auto Z = parse_variety_json(R"({"lambda": ["inf", 2], "points": [["1/2", 3], [0, "-4"]]})");
    CHECK(Z.lambda == GenComposition{INF, 2});
    CHECK(Z.points.count(Tuple{Q(1, 2), Q(3)}));
    CHECK_THROWS(parse_variety_json(R"({"lambda": ["inf", 2], "points": [[1]]})"));
    CHECK_THROWS(parse_variety_json(R"({"lambda": [0], "points": []})"));
    CHECK_THROWS(parse_variety_json("not json"));
}
