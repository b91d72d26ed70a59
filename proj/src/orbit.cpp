#include "eqvar/orbit.hpp"

#include <atomic>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace eqvar {

namespace {

struct CTerm {
    Q coef;
    std::vector<std::pair<int, std::uint32_t>> pw; // (position, exponent)
};
using CFactor = std::vector<CTerm>;

// Search plan: support variables in increasing index order; each factor is
// evaluated as soon as its last variable has been assigned.
struct Plan {
    Q coef = 1;
    int n = 0;
    std::vector<std::vector<CFactor>> at;
    std::vector<Q> values;
    std::vector<std::uint64_t> cap;
    bool symmetric = false; // zero pattern depends only on equalities of values

    Plan(const FactoredPoly& p, const FinitaryPoint& x) {
        coef = p.coef;
        std::map<Var, int> pos;
        for (Var v : p.variables()) {
            if (!is_xi(v)) throw std::invalid_argument("orbit evaluation: polynomial involves t-variables");
            pos.emplace(v, int(pos.size()));
        }
        n = int(pos.size());
        at.resize(std::max(n, 1));
        for (const auto& f : p.factors) {
            if (f.is_constant()) {
                coef *= f.constant_term();
                continue;
            }
            CFactor cf;
            int last = 0;
            for (const auto& [m, c] : f.terms()) {
                CTerm t{c, {}};
                for (const auto& [v, e] : m) {
                    t.pw.emplace_back(pos.at(v), e);
                    last = std::max(last, pos.at(v));
                }
                cf.push_back(std::move(t));
            }
            at[last].push_back(std::move(cf));
        }
        for (const auto& [v, m] : x.classes()) {
            values.push_back(v);
            cap.push_back(m.is_inf() ? std::uint64_t(n) : m.value());
        }
        symmetric = p.is_difference_product();
    }

    Q eval(const CFactor& f, const std::vector<int>& cls) const {
        Q s = 0, t;
        for (const auto& term : f) {
            t = term.coef;
            for (const auto& [k, e] : term.pw)
                for (std::uint32_t i = 0; i < e; ++i) t *= values[cls[k]];
            s += t;
        }
        return s;
    }

    // Multiplies in the factors completed at position k; false if the product became zero.
    bool step(int k, const std::vector<int>& cls, Q& prod) const {
        for (const auto& f : at[k]) {
            prod *= eval(f, cls);
            if (prod == 0) return false;
        }
        return true;
    }

    bool skip_symmetric(int c, const std::vector<std::uint64_t>& used) const {
        if (!symmetric || used[c] != 0) return false;
        for (int d = 0; d < c; ++d)
            if (used[d] == 0 && cap[d] == cap[c]) return true;
        return false;
    }
};

struct Node {
    int depth;
    std::vector<int> cls;
    std::vector<std::uint64_t> used;
    Q prod;
};

void full_search(const Plan& pl, int k, std::vector<int>& cls, std::vector<std::uint64_t>& used, const Q& prod,
                 std::set<Q>& out) {
    if (k == pl.n) {
        out.insert(prod);
        return;
    }
    for (int c = 0; c < int(pl.values.size()); ++c) {
        if (used[c] == pl.cap[c]) continue;
        cls[k] = c;
        ++used[c];
        Q next = prod;
        if (pl.step(k, cls, next)) full_search(pl, k + 1, cls, used, next, out);
        else out.insert(Q(0)); // every partial assignment extends (some class is infinite)
        --used[c];
    }
}

bool nonzero_search(const Plan& pl, int k, std::vector<int>& cls, std::vector<std::uint64_t>& used, const Q& prod,
                    const std::atomic<bool>* stop) {
    if (k == pl.n) return true;
    if (stop && stop->load(std::memory_order_relaxed)) return false;
    for (int c = 0; c < int(pl.values.size()); ++c) {
        if (used[c] == pl.cap[c] || pl.skip_symmetric(c, used)) continue;
        cls[k] = c;
        ++used[c];
        Q next = prod;
        bool hit = pl.step(k, cls, next) && nonzero_search(pl, k + 1, cls, used, next, stop);
        --used[c];
        if (hit) return true;
    }
    return false;
}

// Breadth-first expansion to a frontier of independent subproblems.
std::vector<Node> frontier(const Plan& pl, std::size_t target, bool vanish_mode, bool& saw_zero) {
    std::vector<Node> cur{{0, std::vector<int>(pl.n, 0), std::vector<std::uint64_t>(pl.values.size(), 0), pl.coef}};
    while (!cur.empty() && cur.size() < target && cur.front().depth < pl.n) {
        std::vector<Node> next;
        for (auto& nd : cur) {
            for (int c = 0; c < int(pl.values.size()); ++c) {
                if (nd.used[c] == pl.cap[c]) continue;
                if (vanish_mode && pl.skip_symmetric(c, nd.used)) continue;
                Node ch = nd;
                ch.cls[nd.depth] = c;
                ++ch.used[c];
                ch.depth = nd.depth + 1;
                if (pl.step(nd.depth, ch.cls, ch.prod)) next.push_back(std::move(ch));
                else saw_zero = true;
            }
        }
        cur = std::move(next);
    }
    return cur;
}

int thread_count() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

} // namespace

std::set<Q> orbit_evaluations(const FactoredPoly& p, const FinitaryPoint& x) {
    if (p.is_zero()) return {Q(0)};
    Plan pl(p, x);
    std::set<Q> out;
    std::vector<int> cls(pl.n, 0);
    std::vector<std::uint64_t> used(pl.values.size(), 0);
    if (pl.n == 0) return {pl.coef};
    full_search(pl, 0, cls, used, pl.coef, out);
    return out;
}

bool orbit_vanishes(const FactoredPoly& p, const FinitaryPoint& x) {
    if (p.is_zero()) return true;
    Plan pl(p, x);
    if (pl.n == 0) return pl.coef == 0;
    std::vector<int> cls(pl.n, 0);
    std::vector<std::uint64_t> used(pl.values.size(), 0);
    return !nonzero_search(pl, 0, cls, used, pl.coef, nullptr);
}

std::set<Q> orbit_evaluations_par(const FactoredPoly& p, const FinitaryPoint& x) {
    if (p.is_zero()) return {Q(0)};
    Plan pl(p, x);
    if (pl.n == 0) return {pl.coef};
    bool saw_zero = false;
    auto nodes = frontier(pl, std::size_t(8 * thread_count()), false, saw_zero);
    std::set<Q> out;
    if (saw_zero) out.insert(Q(0));
#pragma omp parallel
    {
        std::set<Q> local;
#pragma omp for schedule(dynamic, 1)
        for (std::size_t i = 0; i < nodes.size(); ++i) {
            Node nd = nodes[i];
            full_search(pl, nd.depth, nd.cls, nd.used, nd.prod, local);
        }
#pragma omp critical
        out.insert(local.begin(), local.end());
    }
    return out;
}

bool orbit_vanishes_par(const FactoredPoly& p, const FinitaryPoint& x) {
    if (p.is_zero()) return true;
    Plan pl(p, x);
    if (pl.n == 0) return pl.coef == 0;
    bool saw_zero = false;
    auto nodes = frontier(pl, std::size_t(8 * thread_count()), true, saw_zero);
    std::atomic<bool> found{false};
#pragma omp parallel for schedule(dynamic, 1)
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        if (found.load(std::memory_order_relaxed)) continue;
        Node nd = nodes[i];
        if (nonzero_search(pl, nd.depth, nd.cls, nd.used, nd.prod, &found)) found.store(true);
    }
    return !found.load();
}

} // namespace eqvar
