#include "eqvar/equations.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#include "eqvar/orbit.hpp"
#include "eqvar/vanishing.hpp"

namespace eqvar {

FactoredPoly h_tableau_factored(const Tableau& T) {
    std::vector<std::pair<int, int>> cells; // (label, row)
    for (std::size_t r = 0; r < T.size(); ++r)
        for (int l : T[r]) cells.emplace_back(l, int(r));
    std::sort(cells.begin(), cells.end());
    FactoredPoly h;
    for (std::size_t p = 0; p < cells.size(); ++p)
        for (std::size_t q = p + 1; q < cells.size(); ++q)
            if (cells[p].second != cells[q].second)
                h.factors.push_back(SparsePoly::variable(xi(cells[p].first)) -
                                    SparsePoly::variable(xi(cells[q].first)));
    return h;
}

SparsePoly h_tableau(const Tableau& T) { return h_tableau_factored(T).expand(); }

TypeIdeal i_lambda(const GenPartition& lambda) {
    TypeIdeal I{lambda, {}};
    for (const auto& a : min_excluded(lambda))
        I.generators.push_back({h_tableau_factored(canonical_tableau(a)), "excluded " + a.str()});
    return I;
}

SparsePoly equality_indicator(const std::set<Q>& V, Var a, Var b) {
    auto lagrange = [&](const Q& w, Var v) {
        SparsePoly L(1);
        for (const auto& u : V)
            if (u != w) L *= (SparsePoly::variable(v) - SparsePoly(u)) * Q(Q(1) / (w - u));
        return L;
    };
    SparsePoly E;
    for (const auto& w : V) E += lagrange(w, a) * lagrange(w, b);
    return E;
}

TypeIdeal i_lambda_z(const PointSetVariety& Z, Recipe recipe) {
    if (!Z.distinct_coordinates()) throw std::invalid_argument("i_lambda_z: points must have distinct coordinates");
    const GenPartition lambda = Z.lambda.shape();
    TypeIdeal I = i_lambda(lambda);
    const bool corrected = recipe == Recipe::Corrected;
    const auto Lambda = corrected ? lambda_minus_set_preceq(lambda) : lambda_minus_set(lambda);
    const std::set<Q> V = Z.values();
    for (const auto& mu : Lambda) {
        const GenComposition muc(mu);
        const auto S = gamma_at(Z, muc);
        const auto G = vanishing_ideal(S.points, int(mu.length()));
        const Tableau T = canonical_tableau(mu);
        FactoredPoly base = h_tableau_factored(T);
        if (corrected)
            for (const auto& row : T)
                for (std::size_t k = 1; k < row.size(); ++k)
                    base.factors.push_back(equality_indicator(V, xi(row[0]), xi(row[k])));
        for (const auto& g : G) {
            SparsePoly ig = g.rename([&](Var v) { return xi(T[var_index(v) - 1][0]); });
            FactoredPoly gen = base;
            gen *= FactoredPoly(ig);
            if (gen.is_zero()) continue;
            I.generators.push_back({std::move(gen), "mu=" + mu.str() + " g=" + g.str()});
        }
    }
    return I;
}

bool member_by_equations(const TypeIdeal& ideal, const FinitaryPoint& x) {
    for (const auto& g : ideal.generators)
        if (!orbit_vanishes(g.poly, x)) return false;
    return true;
}

bool member_by_equations_par(const TypeIdeal& ideal, const FinitaryPoint& x) {
    for (const auto& g : ideal.generators)
        if (!orbit_vanishes_par(g.poly, x)) return false;
    return true;
}

TypeIdeal reduce_generators(const TypeIdeal& ideal, std::uint64_t seed, int battery) {
    // Battery values: every constant occurring in the generators plus a few fresh ones.
    std::set<Q> pool{Q(0), Q(1), Q(-1), Q(2), Q(7, 3)};
    for (const auto& g : ideal.generators)
        for (const auto& f : g.poly.factors)
            for (const auto& [m, c] : f.terms())
                if (m.empty()) pool.insert(-c);
    std::vector<Q> vals(pool.begin(), pool.end());
    std::mt19937_64 rng(seed);
    const std::size_t maxw = std::min<std::size_t>(vals.size(), ideal.lambda.length() + 3);
    std::vector<FinitaryPoint> pts;
    for (int i = 0; i < battery; ++i) {
        std::shuffle(vals.begin(), vals.end(), rng);
        const std::size_t w = 1 + rng() % maxw;
        std::vector<FinitaryPoint::Class> cls;
        for (std::size_t k = 0; k < w; ++k) {
            const std::uint64_t r = rng() % 5;
            cls.emplace_back(vals[k], k == 0 || r == 0 ? INF : ExtNat(r));
        }
        pts.emplace_back(std::move(cls));
    }
    const std::size_t n = ideal.generators.size();
    std::vector<std::vector<bool>> van(n, std::vector<bool>(pts.size()));
    for (std::size_t g = 0; g < n; ++g)
        for (std::size_t p = 0; p < pts.size(); ++p) van[g][p] = orbit_vanishes(ideal.generators[g].poly, pts[p]);
    std::vector<bool> kept(n, true);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j || !kept[j]) continue;
            bool implied = true;
            for (std::size_t p = 0; p < pts.size() && implied; ++p) implied = !van[j][p] || van[i][p];
            if (implied) {
                kept[i] = false;
                break;
            }
        }
    TypeIdeal out{ideal.lambda, {}};
    for (std::size_t i = 0; i < n; ++i)
        if (kept[i]) out.generators.push_back(ideal.generators[i]);
    return out;
}

} // namespace eqvar
