#include "eqvar/vanishing.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace eqvar {

namespace {

std::vector<Monomial> monomials_of_degree(int r, std::uint32_t d) {
    std::vector<Monomial> out;
    Monomial cur;
    std::function<void(int, std::uint32_t)> rec = [&](int i, std::uint32_t left) {
        if (i == r) {
            if (left == 0) out.push_back(cur);
            return;
        }
        for (std::uint32_t e = 0; e <= left; ++e) {
            if (e) cur.emplace_back(tv(i + 1), e);
            rec(i + 1, left - e);
            if (e) cur.pop_back();
        }
    };
    rec(0, d);
    std::sort(out.begin(), out.end(), grlex_less);
    return out;
}

Q eval_mono(const Monomial& m, const Tuple& p) {
    Q v = 1;
    for (const auto& [var, e] : m)
        for (std::uint32_t k = 0; k < e; ++k) v *= p[var_index(var) - 1];
    return v;
}

} // namespace

std::vector<SparsePoly> vanishing_ideal(const PointSet& points, int r) {
    if (r < 1) throw std::invalid_argument("vanishing_ideal: need at least one variable");
    const std::vector<Tuple> pts(points.begin(), points.end());
    for (const auto& p : pts)
        if (int(p.size()) != r) throw std::invalid_argument("vanishing_ideal: tuple length mismatch");
    const std::size_t N = pts.size();

    struct Row {
        std::vector<Q> v;
        std::size_t pivot;
        std::vector<Q> comb; // v = Σ comb_j · eval(standard_j)
    };
    std::vector<Row> rows;
    std::vector<Monomial> standard;
    std::vector<SparsePoly> basis;
    std::vector<Monomial> leads;

    for (std::uint32_t d = 0;; ++d) {
        bool any = false;
        for (const auto& m : monomials_of_degree(r, d)) {
            if (std::any_of(leads.begin(), leads.end(), [&](const Monomial& l) { return mono_divides(l, m); }))
                continue;
            any = true;
            std::vector<Q> vec(N);
            for (std::size_t i = 0; i < N; ++i) vec[i] = eval_mono(m, pts[i]);
            std::vector<Q> a(standard.size());
            for (const auto& row : rows) {
                if (vec[row.pivot] == 0) continue;
                const Q f = vec[row.pivot];
                for (std::size_t i = 0; i < N; ++i) vec[i] -= f * row.v[i];
                for (std::size_t j = 0; j < row.comb.size(); ++j) a[j] -= f * row.comb[j];
            }
            auto nz = std::find_if(vec.begin(), vec.end(), [](const Q& q) { return q != 0; });
            if (nz == vec.end()) {
                SparsePoly g = SparsePoly::monomial(m, 1);
                for (std::size_t j = 0; j < standard.size(); ++j) g.add_term(standard[j], a[j]);
                basis.push_back(std::move(g));
                leads.push_back(m);
            } else {
                const std::size_t piv = std::size_t(nz - vec.begin());
                const Q pv = vec[piv];
                for (auto& q : vec) q /= pv;
                a.push_back(1);
                for (auto& q : a) q /= pv;
                rows.push_back({std::move(vec), piv, std::move(a)});
                standard.push_back(m);
            }
        }
        if (!any) break;
    }
    // By degree, then t1-leading before t2-leading.
    std::sort(basis.begin(), basis.end(), [](const SparsePoly& a, const SparsePoly& b) {
        const auto da = a.degree(), db = b.degree();
        if (da != db) return da < db;
        return grlex_less(b.leading_monomial(), a.leading_monomial());
    });
    return basis;
}

std::vector<Monomial> standard_monomials(const std::vector<SparsePoly>& basis, int r) {
    std::uint32_t maxd = 0;
    for (const auto& g : basis) maxd = std::max(maxd, g.degree());
    std::vector<Monomial> out;
    for (std::uint32_t d = 0; d <= maxd; ++d)
        for (const auto& m : monomials_of_degree(r, d))
            if (std::none_of(basis.begin(), basis.end(),
                             [&](const SparsePoly& g) { return mono_divides(g.leading_monomial(), m); }))
                out.push_back(m);
    return out;
}

} // namespace eqvar
