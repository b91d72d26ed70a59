#include "eqvar/equivalence.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

namespace eqvar {

namespace {

struct Graph {
    Q scalar = 1;
    std::vector<int> verts;
    std::map<std::pair<int, int>, int> mult;

    int edge(int a, int b) const {
        auto it = mult.find({std::min(a, b), std::max(a, b)});
        return it == mult.end() ? 0 : it->second;
    }
    int degree(int a) const {
        int d = 0;
        for (const auto& [e, m] : mult)
            if (e.first == a || e.second == a) d += m;
        return d;
    }
};

Graph as_graph(const FactoredPoly& p) {
    Graph g;
    g.scalar = p.coef;
    std::set<int> vs;
    for (const auto& f : p.factors) {
        if (f.is_constant()) {
            g.scalar *= f.constant_term();
            continue;
        }
        auto it = f.terms().begin();
        const int a = var_index(it->first[0].first);
        g.scalar *= it->second;
        ++it;
        const int b = var_index(it->first[0].first);
        ++g.mult[{std::min(a, b), std::max(a, b)}];
        vs.insert(a);
        vs.insert(b);
    }
    g.verts.assign(vs.begin(), vs.end());
    return g;
}

bool isomorphic(const Graph& A, const Graph& B) {
    if (A.verts.size() != B.verts.size() || A.mult.size() != B.mult.size()) return false;
    std::vector<int> va = A.verts;
    std::map<int, int> dA, dB;
    for (int v : A.verts) dA[v] = A.degree(v);
    for (int v : B.verts) dB[v] = B.degree(v);
    std::stable_sort(va.begin(), va.end(), [&](int x, int y) { return dA[x] > dA[y]; });
    std::vector<int> img(va.size());
    std::set<int> usedB;
    std::function<bool(std::size_t)> rec = [&](std::size_t k) -> bool {
        if (k == va.size()) return true;
        for (int b : B.verts) {
            if (usedB.count(b) || dB[b] != dA[va[k]]) continue;
            bool ok = true;
            for (std::size_t i = 0; i < k && ok; ++i) ok = A.edge(va[k], va[i]) == B.edge(b, img[i]);
            if (!ok) continue;
            img[k] = b;
            usedB.insert(b);
            if (rec(k + 1)) return true;
            usedB.erase(b);
        }
        return false;
    };
    return rec(0);
}

} // namespace

bool equivalent_up_to_sign_relabel(const FactoredPoly& p, const FactoredPoly& q) {
    if (p.is_zero() || q.is_zero()) return p.is_zero() && q.is_zero();
    if (p.is_difference_product() && q.is_difference_product()) {
        Graph A = as_graph(p), B = as_graph(q);
        return abs(A.scalar) == abs(B.scalar) && isomorphic(A, B);
    }
    const SparsePoly a = p.expand(), b = q.expand();
    if (a.num_terms() != b.num_terms() || a.degree() != b.degree()) return false;
    const auto sa = a.variables(), sb = b.variables();
    if (sa.size() != sb.size()) return false;
    if (sa.size() > 9) throw std::length_error("equivalence: too many variables for exhaustive relabeling");
    std::vector<Var> from(sa.begin(), sa.end()), to(sb.begin(), sb.end());
    const SparsePoly nb = -b;
    do {
        std::map<Var, Var> m;
        for (std::size_t i = 0; i < from.size(); ++i) m[from[i]] = to[i];
        SparsePoly r = a.rename([&](Var v) { return m.at(v); });
        if (r == b || r == nb) return true;
    } while (std::next_permutation(to.begin(), to.end()));
    return false;
}

} // namespace eqvar
