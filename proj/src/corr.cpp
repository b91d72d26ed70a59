#include "eqvar/corr.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace eqvar {

CompMap::CompMap(GenComposition dom, GenComposition cod, std::vector<int> tab)
    : domain(std::move(dom)), codomain(std::move(cod)), table(std::move(tab)) {
    if (table.size() != domain.size()) throw std::invalid_argument("CompMap: table size mismatch");
    for (int t : table)
        if (t < 0 || std::size_t(t) >= codomain.size())
            throw std::invalid_argument("CompMap: label out of range");
    if (!is_valid()) throw std::invalid_argument("CompMap: weight condition violated");
}

CompMap CompMap::identity(const GenComposition& c) {
    std::vector<int> t(c.size());
    for (std::size_t i = 0; i < t.size(); ++i) t[i] = int(i);
    return CompMap(c, c, std::move(t));
}

std::vector<ExtNat> CompMap::fiber_weights() const {
    std::vector<ExtNat> s(codomain.size(), ExtNat(0));
    for (std::size_t i = 0; i < table.size(); ++i) s[table[i]] += domain.weight(i);
    return s;
}

bool CompMap::is_valid() const {
    auto s = fiber_weights();
    for (std::size_t j = 0; j < s.size(); ++j)
        if (s[j] > codomain.weight(j)) return false;
    return true;
}

bool CompMap::is_principal_surjection() const {
    auto s = fiber_weights();
    for (std::size_t j = 0; j < s.size(); ++j)
        if (!(s[j] == codomain.weight(j))) return false;
    return true;
}

bool CompMap::is_injection() const {
    std::vector<bool> hit(codomain.size(), false);
    for (int t : table) {
        if (hit[t]) return false;
        hit[t] = true;
    }
    return true;
}

std::vector<std::vector<int>> CompMap::fibers() const {
    std::vector<std::vector<int>> f(codomain.size());
    for (std::size_t i = 0; i < table.size(); ++i) f[table[i]].push_back(int(i));
    return f;
}

CompMap then(const CompMap& f, const CompMap& g) {
    if (!(f.codomain == g.domain)) throw std::invalid_argument("then: maps are not composable");
    std::vector<int> t(f.table.size());
    for (std::size_t i = 0; i < t.size(); ++i) t[i] = g.table[f.table[i]];
    return CompMap(f.domain, g.codomain, std::move(t));
}

GenComposition pushforward(const CompMap& f) {
    std::vector<ExtNat> w;
    for (const auto& x : f.fiber_weights())
        if (!x.is_zero()) w.push_back(x);
    return GenComposition(std::move(w));
}

Factorization factor(const CompMap& f) {
    auto s = f.fiber_weights();
    std::vector<int> image_label(s.size(), -1);
    std::vector<ExtNat> w;
    std::vector<int> g_table;
    for (std::size_t j = 0; j < s.size(); ++j)
        if (!s[j].is_zero()) {
            image_label[j] = int(w.size());
            w.push_back(s[j]);
            g_table.push_back(int(j));
        }
    GenComposition img(std::move(w));
    std::vector<int> h_table(f.table.size());
    for (std::size_t i = 0; i < h_table.size(); ++i) h_table[i] = image_label[f.table[i]];
    return {CompMap(f.domain, img, std::move(h_table)), CompMap(img, f.codomain, std::move(g_table))};
}

PullbackSquare pullback_square(const CompMap& f1, const CompMap& f2) {
    if (!(f1.codomain == f2.codomain)) throw std::invalid_argument("pullback_square: codomains differ");
    struct Part {
        ExtNat w;
        int label;
    };
    auto by_weight = [](const Part& a, const Part& b) {
        if (!(a.w == b.w)) return a.w > b.w;
        return a.label < b.label;
    };
    const auto fib1 = f1.fibers(), fib2 = f2.fibers();
    std::vector<ExtNat> w;
    std::vector<int> t1, t2;
    for (std::size_t j = 0; j < f1.codomain.size(); ++j) {
        std::vector<Part> A, B;
        for (int i : fib1[j]) A.push_back({f1.domain.weight(i), i});
        for (int i : fib2[j]) B.push_back({f2.domain.weight(i), i});
        // Peel off min(A1, B1) until one side is exhausted.
        while (!A.empty() && !B.empty()) {
            std::stable_sort(A.begin(), A.end(), by_weight);
            std::stable_sort(B.begin(), B.end(), by_weight);
            const ExtNat m = min(A[0].w, B[0].w);
            w.push_back(m);
            t1.push_back(A[0].label);
            t2.push_back(B[0].label);
            if (A[0].w.is_inf() && B[0].w.is_inf()) {
                A.erase(A.begin());
                continue;
            }
            A[0].w = A[0].w.minus(m);
            B[0].w = B[0].w.minus(m);
            if (A[0].w.is_zero()) A.erase(A.begin());
            if (B[0].w.is_zero()) B.erase(B.begin());
        }
    }
    GenComposition wc(std::move(w));
    return {wc, CompMap(wc, f1.domain, std::move(t1)), CompMap(wc, f2.domain, std::move(t2))};
}

Correspondence Correspondence::identity(const GenComposition& c) {
    return {c, CompMap::identity(c), CompMap::identity(c)};
}

bool Correspondence::is_valid() const {
    return f1.domain == rho && f2.domain == rho && f1.is_valid() && f2.is_valid() &&
           f1.is_principal_surjection();
}

bool Correspondence::is_good() const {
    if (!is_valid()) return false;
    const std::uint64_t e = right().shape().finite_sum();
    const std::size_t l = right().size();
    auto fib = f1.fibers();
    for (std::size_t i = 0; i < fib.size(); ++i) {
        if (fib[i].size() > l) return false;
        if (left().weight(i) > ExtNat(e) && fib[i].size() != 1) return false;
    }
    return true;
}

std::vector<std::vector<std::pair<ExtNat, int>>> Correspondence::canonical() const {
    std::vector<std::vector<std::pair<ExtNat, int>>> out(left().size());
    for (std::size_t k = 0; k < rho.size(); ++k) out[f1.table[k]].emplace_back(rho.weight(k), f2.table[k]);
    for (auto& v : out)
        std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) {
            if (!(a.first == b.first)) return a.first > b.first;
            return a.second < b.second;
        });
    return out;
}

Correspondence compose(const Correspondence& f, const Correspondence& g) {
    if (!(f.right() == g.left())) throw std::invalid_argument("compose: middle compositions differ");
    auto sq = pullback_square(f.f2, g.f1);
    return {sq.w, then(sq.g1, f.f1), then(sq.g2, g.f2)};
}

std::vector<CompMap> enumerate_end(const GenComposition& lambda) {
    const std::size_t r = lambda.size();
    std::vector<CompMap> out;
    std::vector<int> t(r, 0);
    std::function<void(std::size_t, std::vector<ExtNat>&)> rec = [&](std::size_t i, std::vector<ExtNat>& load) {
        if (i == r) {
            out.emplace_back(lambda, lambda, t);
            return;
        }
        for (std::size_t j = 0; j < r; ++j) {
            ExtNat nl = load[j] + lambda.weight(i);
            if (nl > lambda.weight(j)) continue;
            ExtNat old = load[j];
            load[j] = nl;
            t[i] = int(j);
            rec(i + 1, load);
            load[j] = old;
        }
    };
    std::vector<ExtNat> load(r, ExtNat(0));
    rec(0, load);
    return out;
}

std::vector<std::vector<std::pair<ExtNat, int>>> good_fiber_options(const ExtNat& mu_i,
                                                                    const GenComposition& lambda) {
    const std::uint64_t e = lambda.shape().finite_sum();
    std::vector<std::vector<std::pair<ExtNat, int>>> out;
    if (mu_i > ExtNat(e)) {
        for (std::size_t j = 0; j < lambda.size(); ++j)
            if (lambda.weight(j) >= mu_i) out.push_back({{mu_i, int(j)}});
        return out;
    }
    const std::uint64_t n = mu_i.value();
    // Candidate pairs in canonical order: weight descending, label ascending.
    std::vector<std::pair<ExtNat, int>> cand;
    for (std::uint64_t w = n; w >= 1; --w)
        for (std::size_t j = 0; j < lambda.size(); ++j)
            if (lambda.weight(j) >= ExtNat(w)) cand.emplace_back(ExtNat(w), int(j));
    std::vector<std::pair<ExtNat, int>> cur;
    std::vector<ExtNat> load(lambda.size(), ExtNat(0));
    std::function<void(std::size_t, std::uint64_t)> rec = [&](std::size_t from, std::uint64_t left) {
        if (left == 0) {
            out.push_back(cur);
            return;
        }
        if (cur.size() == lambda.size()) return;
        for (std::size_t k = from; k < cand.size(); ++k) {
            const auto& [w, j] = cand[k];
            if (w.value() > left) continue;
            ExtNat nl = load[j] + w;
            if (nl > lambda.weight(j)) continue;
            ExtNat old = load[j];
            load[j] = nl;
            cur.push_back(cand[k]);
            rec(k, left - w.value());
            cur.pop_back();
            load[j] = old;
        }
    };
    rec(0, n);
    return out;
}

std::vector<Correspondence> enumerate_good(const GenComposition& mu, const GenComposition& lambda) {
    if (!lambda.is_inf()) throw std::invalid_argument("enumerate_good: target must be an infinite composition");
    std::vector<std::vector<std::vector<std::pair<ExtNat, int>>>> opts;
    for (std::size_t i = 0; i < mu.size(); ++i) opts.push_back(good_fiber_options(mu.weight(i), lambda));

    std::vector<Correspondence> out;
    std::vector<std::size_t> choice(mu.size());
    std::vector<ExtNat> load(lambda.size(), ExtNat(0));
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == mu.size()) {
            std::vector<ExtNat> w;
            std::vector<int> t1, t2;
            for (std::size_t a = 0; a < mu.size(); ++a)
                for (const auto& [pw, pj] : opts[a][choice[a]]) {
                    w.push_back(pw);
                    t1.push_back(int(a));
                    t2.push_back(pj);
                }
            GenComposition rho(std::move(w));
            out.push_back({rho, CompMap(rho, mu, std::move(t1)), CompMap(rho, lambda, std::move(t2))});
            return;
        }
        for (std::size_t c = 0; c < opts[i].size(); ++c) {
            std::vector<ExtNat> saved = load;
            bool ok = true;
            for (const auto& [pw, pj] : opts[i][c]) {
                load[pj] += pw;
                if (load[pj] > lambda.weight(pj)) ok = false;
            }
            if (ok) {
                choice[i] = c;
                rec(i + 1);
            }
            load = std::move(saved);
        }
    };
    rec(0);
    return out;
}

} // namespace eqvar
