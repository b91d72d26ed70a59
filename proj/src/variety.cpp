#include "eqvar/variety.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace eqvar {

PointSetVariety::PointSetVariety(GenComposition l, PointSet p) : lambda(std::move(l)) {
    for (auto t : p) {
        for (auto& q : t) q.canonicalize();
        points.insert(std::move(t));
    }
    for (const auto& t : points)
        if (t.size() != lambda.size())
            throw std::invalid_argument("variety: point has " + std::to_string(t.size()) + " coordinates, expected " +
                                        std::to_string(lambda.size()));
}

bool PointSetVariety::distinct_coordinates() const {
    for (const auto& t : points) {
        std::set<Q> s(t.begin(), t.end());
        if (s.size() != t.size()) return false;
    }
    return true;
}

std::set<Q> PointSetVariety::values() const {
    std::set<Q> s;
    for (const auto& t : points) s.insert(t.begin(), t.end());
    return s;
}

Tuple act_point(const CompMap& f, const Tuple& x) {
    if (x.size() != f.codomain.size()) throw std::invalid_argument("act_point: tuple size mismatch");
    Tuple out(f.table.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = x[f.table[i]];
    return out;
}

PointSetVariety apply_corr(const Correspondence& f, const PointSetVariety& S) {
    if (!(f.right() == S.lambda)) throw std::invalid_argument("apply_corr: composition mismatch");
    PointSet out;
    const auto fib = f.f1.fibers();
    for (const auto& y : S.points) {
        Tuple r = act_point(f.f2, y);
        Tuple x(fib.size());
        bool ok = true;
        for (std::size_t i = 0; i < fib.size() && ok; ++i) {
            x[i] = r[fib[i][0]];
            for (int k : fib[i]) ok = ok && r[k] == x[i];
        }
        if (ok) out.insert(std::move(x));
    }
    return {f.left(), std::move(out)};
}

PointSetVariety end_closure(const PointSetVariety& Z) {
    PointSet out;
    for (const auto& f : enumerate_end(Z.lambda))
        for (const auto& z : Z.points) out.insert(act_point(f, z));
    return {Z.lambda, std::move(out)};
}

namespace {

using Fiber = std::vector<std::pair<ExtNat, int>>;

std::vector<std::vector<Fiber>> fiber_options(const GenComposition& mu, const GenComposition& lambda) {
    if (!lambda.is_inf()) throw std::invalid_argument("gamma: ambient composition must be infinite");
    std::vector<std::vector<Fiber>> opts;
    for (std::size_t i = 0; i < mu.size(); ++i) opts.push_back(good_fiber_options(mu.weight(i), lambda));
    return opts;
}

// Depth-first over μ-labels choosing a fiber per label whose targets all carry one
// value of y, with the finite capacities of λ shared between labels.
struct GammaSearch {
    const GenComposition& lambda;
    const std::vector<std::vector<Fiber>>& opts;
    const Tuple& y;
    std::vector<ExtNat> load;

    GammaSearch(const GenComposition& l, const std::vector<std::vector<Fiber>>& o, const Tuple& yy)
        : lambda(l), opts(o), y(yy), load(l.size(), ExtNat(0)) {}

    bool place(const Fiber& fb, const Q* want, Q& value) {
        value = y[fb[0].second];
        for (const auto& [w, j] : fb)
            if (y[j] != value) return false;
        if (want && *want != value) return false;
        for (const auto& [w, j] : fb)
            if (load[j] + w > lambda.weight(j)) return false;
        return true;
    }

    template <class Leaf>
    bool run(std::size_t i, Tuple& x, const Tuple* target, Leaf&& leaf) {
        if (i == opts.size()) return leaf(x);
        for (const auto& fb : opts[i]) {
            Q v;
            if (!place(fb, target ? &(*target)[i] : nullptr, v)) continue;
            // Capacity check above is per fiber; re-check jointly when a fiber hits a label twice.
            std::vector<ExtNat> saved = load;
            bool ok = true;
            for (const auto& [w, j] : fb) {
                load[j] += w;
                ok = ok && !(load[j] > lambda.weight(j));
            }
            if (ok) {
                x[i] = v;
                if (run(i + 1, x, target, leaf)) {
                    load = std::move(saved);
                    return true;
                }
            }
            load = std::move(saved);
        }
        return false;
    }
};

} // namespace

PointSetVariety gamma_at(const PointSetVariety& Z, const GenComposition& mu) {
    const auto E = end_closure(Z);
    const auto opts = fiber_options(mu, Z.lambda);
    PointSet out;
    for (const auto& y : E.points) {
        GammaSearch s(Z.lambda, opts, y);
        Tuple x(mu.size());
        s.run(0, x, nullptr, [&](const Tuple& t) {
            out.insert(t);
            return false;
        });
    }
    return {mu, std::move(out)};
}

PointSetVariety gamma_at_by_enumeration(const PointSetVariety& Z, const GenComposition& mu) {
    const auto E = end_closure(Z);
    PointSet out;
    for (const auto& f : enumerate_good(mu, Z.lambda)) {
        auto part = apply_corr(f, E);
        out.insert(part.points.begin(), part.points.end());
    }
    return {mu, std::move(out)};
}

bool gamma_contains(const PointSetVariety& Ze, const GenComposition& mu, const Tuple& z) {
    if (z.size() != mu.size()) throw std::invalid_argument("gamma_contains: tuple size mismatch");
    const auto opts = fiber_options(mu, Ze.lambda);
    for (const auto& y : Ze.points) {
        GammaSearch s(Ze.lambda, opts, y);
        Tuple x(mu.size());
        if (s.run(0, x, &z, [](const Tuple&) { return true; })) return true;
    }
    return false;
}

bool theta_member(const PointSetVariety& Z, const FinitaryPoint& x) {
    if (!Z.distinct_coordinates()) throw std::invalid_argument("theta_member: points must have distinct coordinates");
    if (Z.points.empty()) return false;
    const auto E = end_closure(Z);
    const auto& cls = x.classes();
    const GenComposition mu(x.type());
    // Arrangements: values of x onto the labels of μ, permuting within blocks of equal multiplicity.
    Tuple z(cls.size());
    for (std::size_t i = 0; i < cls.size(); ++i) z[i] = cls[i].first;
    std::vector<std::pair<std::size_t, std::size_t>> blocks;
    for (std::size_t i = 0; i < cls.size();) {
        std::size_t j = i;
        while (j < cls.size() && cls[j].second == cls[i].second) ++j;
        blocks.emplace_back(i, j);
        i = j;
    }
    std::function<bool(std::size_t)> rec = [&](std::size_t b) -> bool {
        if (b == blocks.size()) return gamma_contains(E, mu, z);
        auto [lo, hi] = blocks[b];
        std::sort(z.begin() + lo, z.begin() + hi);
        do {
            if (rec(b + 1)) return true;
        } while (std::next_permutation(z.begin() + lo, z.begin() + hi));
        return false;
    };
    return rec(0);
}

bool contains(const PointSetVariety& Z1, const PointSetVariety& Z2) {
    if (!Z1.distinct_coordinates() || !Z2.distinct_coordinates())
        throw std::invalid_argument("contains: points must have distinct coordinates");
    if (Z1.points.empty()) return true;
    const auto E = end_closure(Z2);
    for (const auto& z : Z1.points)
        if (!gamma_contains(E, Z1.lambda, z)) return false;
    return true;
}

std::vector<PointSet> aut_orbits(const PointSetVariety& Z) {
    const auto perms = aut(Z.lambda);
    std::vector<PointSet> out;
    PointSet seen;
    for (const auto& z : Z.points) {
        if (seen.count(z)) continue;
        PointSet orbit;
        for (const auto& s : perms) {
            Tuple t(z.size());
            for (std::size_t i = 0; i < z.size(); ++i) t[s[i]] = z[i];
            if (Z.points.count(t)) orbit.insert(t);
        }
        seen.insert(orbit.begin(), orbit.end());
        out.push_back(std::move(orbit));
    }
    return out;
}

} // namespace eqvar
