#include "eqvar/random_cases.hpp"

#include <algorithm>
#include <numeric>

namespace eqvar {

GenPartition random_inf_partition(Rng& rng, std::size_t max_len, std::uint64_t max_e) {
    const std::size_t len = uniform(rng, 1, max_len);
    std::size_t finite = uniform(rng, 0, len - 1);
    finite = std::min<std::size_t>(finite, max_e);
    std::vector<ExtNat> parts(len - finite, INF);
    std::uint64_t budget = uniform(rng, finite, max_e);
    for (std::size_t k = 0; k < finite; ++k) {
        const std::uint64_t rest = finite - k - 1;
        const std::uint64_t p = uniform(rng, 1, budget - rest);
        parts.push_back(p);
        budget -= p;
    }
    return GenPartition(std::move(parts));
}

FinitaryPoint random_point_of_type(Rng& rng, const GenPartition& type, std::vector<Q> pool) {
    std::shuffle(pool.begin(), pool.end(), rng);
    std::vector<FinitaryPoint::Class> cls;
    for (std::size_t i = 0; i < type.length(); ++i) cls.emplace_back(pool.at(i), type[i]);
    return FinitaryPoint(std::move(cls));
}

GenPartition random_type_below(Rng& rng, const GenPartition& lambda) {
    const std::size_t L = lambda.length();
    const std::uint64_t e = lambda.finite_sum();
    std::vector<int> group(L);
    for (auto& g : group) g = uniform(rng, 0, 3) == 0 ? -1 : int(uniform(rng, 0, L - 1));
    // Keep some infinite part so the result is the type of a point.
    group[0] = group[0] < 0 ? 0 : group[0];
    std::vector<ExtNat> sums(L, ExtNat(0));
    for (std::size_t i = 0; i < L; ++i)
        if (group[i] >= 0) sums[group[i]] += lambda[i];
    std::vector<ExtNat> parts;
    for (const auto& s : sums) {
        if (s.is_zero()) continue;
        if (s.is_inf()) parts.push_back(uniform(rng, 0, 2) ? INF : ExtNat(uniform(rng, 1, e + 2)));
        else parts.push_back(uniform(rng, 1, s.value()));
    }
    if (std::none_of(parts.begin(), parts.end(), [](const ExtNat& x) { return x.is_inf(); }))
        for (std::size_t i = 0; i < L; ++i)
            if (sums[i].is_inf()) {
                // Replace the part that came from this group.
                std::size_t k = 0;
                for (std::size_t j = 0; j < i; ++j)
                    if (!sums[j].is_zero()) ++k;
                parts[k] = INF;
                break;
            }
    return GenPartition(std::move(parts));
}

GenPartition random_type(Rng& rng, std::size_t max_width, std::uint64_t max_part) {
    const std::size_t w = uniform(rng, 1, max_width);
    std::vector<ExtNat> parts{INF};
    for (std::size_t i = 1; i < w; ++i) parts.push_back(uniform(rng, 0, 2) == 0 ? INF : ExtNat(uniform(rng, 1, max_part)));
    return GenPartition(std::move(parts));
}

PointSetVariety random_variety(Rng& rng, const GenComposition& lambda, std::size_t max_points, int max_value) {
    const std::size_t n = uniform(rng, 1, max_points);
    std::vector<int> vals(max_value + 1);
    std::iota(vals.begin(), vals.end(), 0);
    PointSet pts;
    for (std::size_t k = 0; k < n; ++k) {
        std::shuffle(vals.begin(), vals.end(), rng);
        Tuple t;
        for (std::size_t i = 0; i < lambda.size(); ++i) t.push_back(Q(vals.at(i)));
        pts.insert(std::move(t));
    }
    return PointSetVariety(lambda, std::move(pts));
}

namespace {

template <class T>
void shuffle_domain(Rng& rng, std::vector<ExtNat>& w, std::vector<T>& t) {
    std::vector<std::size_t> p(w.size());
    std::iota(p.begin(), p.end(), 0);
    std::shuffle(p.begin(), p.end(), rng);
    std::vector<ExtNat> w2;
    std::vector<T> t2;
    for (auto i : p) {
        w2.push_back(w[i]);
        t2.push_back(t[i]);
    }
    w = std::move(w2);
    t = std::move(t2);
}

} // namespace

CompMap random_principal_surjection(Rng& rng, const GenComposition& mu, std::size_t max_parts) {
    std::vector<ExtNat> w;
    std::vector<int> t;
    for (std::size_t j = 0; j < mu.size(); ++j) {
        const std::size_t k = uniform(rng, 1, max_parts);
        if (mu.weight(j).is_inf()) {
            w.push_back(INF);
            t.push_back(int(j));
            for (std::size_t i = 1; i < k; ++i) {
                w.push_back(uniform(rng, 0, 1) ? INF : ExtNat(uniform(rng, 1, 4)));
                t.push_back(int(j));
            }
        } else {
            std::uint64_t left = mu.weight(j).value();
            for (std::size_t i = 0; i < k && left; ++i) {
                const std::uint64_t p = i + 1 == k ? left : uniform(rng, 1, left);
                w.push_back(p);
                t.push_back(int(j));
                left -= p;
            }
        }
    }
    shuffle_domain(rng, w, t);
    return CompMap(GenComposition(std::move(w)), mu, std::move(t));
}

CompMap random_injection(Rng& rng, const GenComposition& mu) {
    std::vector<ExtNat> w;
    std::vector<int> t;
    for (std::size_t j = 0; j < mu.size(); ++j) {
        if (uniform(rng, 0, 2) == 0 && !(j + 1 == mu.size() && w.empty())) continue;
        const ExtNat& m = mu.weight(j);
        w.push_back(m.is_inf() ? (uniform(rng, 0, 1) ? INF : ExtNat(uniform(rng, 1, 5))) : ExtNat(uniform(rng, 1, m.value())));
        t.push_back(int(j));
    }
    shuffle_domain(rng, w, t);
    return CompMap(GenComposition(std::move(w)), mu, std::move(t));
}

CompMap random_map(Rng& rng, const GenComposition& mu, std::size_t max_labels) {
    const std::size_t n = uniform(rng, 1, max_labels);
    std::vector<ExtNat> room = mu.weights();
    std::vector<ExtNat> w;
    std::vector<int> t;
    for (std::size_t k = 0; k < n; ++k) {
        const int j = int(uniform(rng, 0, mu.size() - 1));
        if (room[j].is_inf()) {
            w.push_back(uniform(rng, 0, 2) == 0 ? INF : ExtNat(uniform(rng, 1, 4)));
        } else {
            if (room[j].is_zero()) continue;
            const std::uint64_t p = uniform(rng, 1, room[j].value());
            room[j] = room[j].minus(p);
            w.push_back(p);
        }
        t.push_back(j);
    }
    if (w.empty()) {
        w.push_back(mu.weight(0).is_inf() ? INF : mu.weight(0));
        t.push_back(0);
    }
    return CompMap(GenComposition(std::move(w)), mu, std::move(t));
}

GenComposition random_inf_composition(Rng& rng, std::size_t max_len, std::uint64_t max_part) {
    const std::size_t n = uniform(rng, 1, max_len);
    std::vector<ExtNat> w{INF};
    for (std::size_t i = 1; i < n; ++i) w.push_back(uniform(rng, 0, 2) == 0 ? INF : ExtNat(uniform(rng, 1, max_part)));
    std::shuffle(w.begin(), w.end(), rng);
    return GenComposition(std::move(w));
}

TypeLocusCase random_type_locus_case(Rng& rng) {
    TypeLocusCase c;
    c.lambda = random_inf_partition(rng, 4, 4);
    const GenPartition t = uniform(rng, 0, 1) ? random_type_below(rng, c.lambda) : random_type(rng, 5, 5);
    std::vector<Q> pool;
    for (int v = -2; v <= 6; ++v) pool.emplace_back(v);
    pool.emplace_back(1, 2);
    c.x = random_point_of_type(rng, t, pool);
    return c;
}

ClosureCase random_closure_case(Rng& rng) {
    ClosureCase c;
    const GenComposition lambda(random_inf_partition(rng, 3, 3));
    c.Z = random_variety(rng, lambda, 3, 3);
    const std::set<Q> zv = c.Z.values();
    std::vector<Q> pool(zv.begin(), zv.end());
    const Tuple& y = *std::next(c.Z.points.begin(), std::ptrdiff_t(uniform(rng, 0, c.Z.points.size() - 1)));
    GenPartition t;
    std::vector<Q> vals;
    switch (uniform(rng, 0, 2)) {
    case 0: // a type below λ valued by coordinates of a point of Z
        t = random_type_below(rng, lambda.shape());
        vals.assign(y.begin(), y.end());
        std::shuffle(vals.begin(), vals.end(), rng);
        break;
    case 1: // anything, values near Z
        t = random_type(rng, 4, 4);
        vals = pool;
        vals.emplace_back(4);
        vals.emplace_back(1, 2);
        std::shuffle(vals.begin(), vals.end(), rng);
        break;
    default: // the type of λ with a point of Z, sometimes disturbed
        t = lambda.shape();
        vals.assign(y.begin(), y.end());
        if (uniform(rng, 0, 2) == 0) vals[uniform(rng, 0, vals.size() - 1)] = Q(5);
        break;
    }
    // Top up with fresh values if the type is wider than the chosen values.
    for (int extra = 7; vals.size() < t.length(); ++extra) vals.emplace_back(extra);
    std::vector<FinitaryPoint::Class> cls;
    std::set<Q> used;
    for (std::size_t i = 0; i < t.length(); ++i) {
        Q v = vals[i];
        for (int bump = 11; used.count(v); ++bump) v = bump;
        used.insert(v);
        cls.emplace_back(v, t[i]);
    }
    c.x = FinitaryPoint(std::move(cls));
    return c;
}

} // namespace eqvar
