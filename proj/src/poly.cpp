#include "eqvar/poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace eqvar {

std::string var_name(Var v) { return (is_xi(v) ? "x" : "t") + std::to_string(var_index(v)); }

std::uint32_t total_degree(const Monomial& m) {
    std::uint32_t d = 0;
    for (const auto& [v, e] : m) d += e;
    return d;
}

bool grlex_less(const Monomial& a, const Monomial& b) {
    const auto da = total_degree(a), db = total_degree(b);
    if (da != db) return da < db;
    const std::size_t n = std::min(a.size(), b.size());
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i].first != b[i].first) return a[i].first > b[i].first;
        if (a[i].second != b[i].second) return a[i].second < b[i].second;
    }
    return false;
}

Monomial mono_mul(const Monomial& a, const Monomial& b) {
    Monomial r;
    r.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
            r.push_back(a[i++]);
        } else if (i == a.size() || b[j].first < a[i].first) {
            r.push_back(b[j++]);
        } else {
            r.emplace_back(a[i].first, a[i].second + b[j].second);
            ++i;
            ++j;
        }
    }
    return r;
}

bool mono_divides(const Monomial& a, const Monomial& b) {
    std::size_t j = 0;
    for (const auto& [v, e] : a) {
        while (j < b.size() && b[j].first < v) ++j;
        if (j == b.size() || b[j].first != v || b[j].second < e) return false;
    }
    return true;
}

int perm_apply(const Perm& p, int i) {
    auto it = p.find(i);
    return it == p.end() ? i : it->second;
}

Perm transposition(int a, int b) {
    if (a == b) return {};
    return {{a, b}, {b, a}};
}

Perm relabel_to_prefix(const std::vector<int>& list) {
    // Send list[k] to k+1 and complete to a bijection on the finite support.
    Perm p;
    std::set<int> dom, img;
    for (std::size_t k = 0; k < list.size(); ++k) {
        p[list[k]] = int(k) + 1;
        dom.insert(list[k]);
        img.insert(int(k) + 1);
    }
    // Indices hit but not moved away form the free targets for the freed sources.
    std::vector<int> sources, targets;
    for (int i : img)
        if (!dom.count(i)) sources.push_back(i);
    for (int i : dom)
        if (!img.count(i)) targets.push_back(i);
    for (std::size_t k = 0; k < sources.size(); ++k) p[sources[k]] = targets[k];
    std::erase_if(p, [](const auto& kv) { return kv.first == kv.second; });
    return p;
}

int perm_sign(const Perm& p) {
    std::set<int> seen;
    int sign = 1;
    for (const auto& [start, _] : p) {
        if (seen.count(start)) continue;
        int len = 0, i = start;
        do {
            seen.insert(i);
            i = perm_apply(p, i);
            ++len;
        } while (i != start);
        if (len % 2 == 0) sign = -sign;
    }
    return sign;
}

// Rationals built from a numerator/denominator pair are not reduced by GMP; every
// coefficient entering a polynomial is canonicalized first.
SparsePoly::SparsePoly(const Q& c) {
    Q x = c;
    x.canonicalize();
    if (x != 0) terms_[Monomial{}] = x;
}

SparsePoly SparsePoly::variable(Var v, std::uint32_t exp) {
    SparsePoly p;
    if (exp == 0) return SparsePoly(1);
    p.terms_[Monomial{{v, exp}}] = 1;
    return p;
}

SparsePoly SparsePoly::monomial(const Monomial& m, const Q& c) {
    SparsePoly p;
    p.add_term(m, c);
    return p;
}

void SparsePoly::add_term(const Monomial& m, const Q& c) {
    Q x = c;
    x.canonicalize();
    if (x == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, x);
    if (!inserted) {
        it->second += x;
        if (it->second == 0) terms_.erase(it);
    }
}

bool SparsePoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

Q SparsePoly::constant_term() const {
    auto it = terms_.find(Monomial{});
    return it == terms_.end() ? Q(0) : it->second;
}

const Monomial& SparsePoly::leading_monomial() const {
    if (terms_.empty()) throw std::logic_error("leading_monomial of zero");
    return terms_.begin()->first;
}

const Q& SparsePoly::leading_coefficient() const {
    if (terms_.empty()) throw std::logic_error("leading_coefficient of zero");
    return terms_.begin()->second;
}

std::uint32_t SparsePoly::degree() const { return terms_.empty() ? 0 : total_degree(terms_.begin()->first); }

std::uint32_t SparsePoly::degree_in(Var v) const {
    std::uint32_t d = 0;
    for (const auto& [m, c] : terms_)
        for (const auto& [w, e] : m)
            if (w == v) d = std::max(d, e);
    return d;
}

std::set<Var> SparsePoly::variables() const {
    std::set<Var> s;
    for (const auto& [m, c] : terms_)
        for (const auto& [v, e] : m) s.insert(v);
    return s;
}

SparsePoly SparsePoly::coefficient_of(Var v, std::uint32_t k) const {
    SparsePoly r;
    for (const auto& [m, c] : terms_) {
        std::uint32_t e = 0;
        Monomial rest;
        for (const auto& ve : m) {
            if (ve.first == v) e = ve.second;
            else rest.push_back(ve);
        }
        if (e == k) r.add_term(rest, c);
    }
    return r;
}

SparsePoly& SparsePoly::operator+=(const SparsePoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

SparsePoly& SparsePoly::operator-=(const SparsePoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) {
    SparsePoly r;
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) r.add_term(mono_mul(ma, mb), ca * cb);
    return r;
}

SparsePoly& SparsePoly::operator*=(const SparsePoly& o) { return *this = *this * o; }

SparsePoly& SparsePoly::operator*=(const Q& c) {
    Q k = c;
    k.canonicalize();
    if (k == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, x] : terms_) x *= k;
    return *this;
}

SparsePoly SparsePoly::operator-() const {
    SparsePoly r = *this;
    for (auto& [m, x] : r.terms_) x = -x;
    return r;
}

SparsePoly SparsePoly::pow(std::uint32_t k) const {
    SparsePoly r(1), base = *this;
    while (k) {
        if (k & 1) r *= base;
        k >>= 1;
        if (k) base *= base;
    }
    return r;
}

bool SparsePoly::operator==(const SparsePoly& o) const {
    if (terms_.size() != o.terms_.size()) return false;
    auto it = o.terms_.begin();
    for (const auto& [m, c] : terms_) {
        if (m != it->first || c != it->second) return false;
        ++it;
    }
    return true;
}

Q SparsePoly::evaluate(const std::function<Q(Var)>& value) const {
    Q sum = 0;
    std::map<Var, Q> cache;
    for (const auto& [m, c] : terms_) {
        Q t = c;
        for (const auto& [v, e] : m) {
            auto it = cache.find(v);
            if (it == cache.end()) it = cache.emplace(v, value(v)).first;
            for (std::uint32_t k = 0; k < e; ++k) t *= it->second;
        }
        sum += t;
    }
    return sum;
}

SparsePoly SparsePoly::rename(const std::function<Var(Var)>& f) const {
    SparsePoly r;
    for (const auto& [m, c] : terms_) {
        Monomial out;
        for (const auto& [v, e] : m) out = mono_mul(out, Monomial{{f(v), e}});
        r.add_term(out, c);
    }
    return r;
}

std::string q_str(const Q& q) { return q.get_str(); }

std::string SparsePoly::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        const bool neg = c < 0;
        const Q a = abs(c);
        if (first) out += neg ? "-" : "";
        else out += neg ? " - " : " + ";
        first = false;
        std::string mono;
        for (const auto& [v, e] : m) {
            if (!mono.empty()) mono += '*';
            mono += var_name(v);
            if (e > 1) mono += '^' + std::to_string(e);
        }
        if (mono.empty()) out += q_str(a);
        else if (a == 1) out += mono;
        else out += q_str(a) + '*' + mono;
    }
    return out;
}

SparsePoly apply_perm(const Perm& sigma, const SparsePoly& p) {
    if (sigma.empty()) return p;
    return p.rename([&](Var v) { return is_xi(v) ? xi(perm_apply(sigma, int(v))) : v; });
}

SparsePoly discriminant_of(const std::vector<int>& labels) {
    SparsePoly d(1);
    for (std::size_t q = 1; q < labels.size(); ++q)
        for (std::size_t p = 0; p < q; ++p)
            d *= SparsePoly::variable(xi(labels[q])) - SparsePoly::variable(xi(labels[p]));
    return d;
}

SparsePoly discriminant(int n) {
    if (n < 1) throw std::invalid_argument("discriminant: n must be >= 1");
    std::vector<int> l(n);
    for (int i = 0; i < n; ++i) l[i] = i + 1;
    return discriminant_of(l);
}

SparsePoly skew_sum(int n, int k) {
    if (n < 2 || k < 0 || k > n - 1) throw std::invalid_argument("skew_sum: need n >= 2, 0 <= k <= n-1");
    const SparsePoly base = SparsePoly::variable(xi(n), std::uint32_t(k)) * discriminant(n - 1);
    SparsePoly sum = base;
    for (int i = 1; i < n; ++i) sum -= apply_perm(transposition(i, n), base);
    return sum;
}

FactoredPoly::FactoredPoly(const SparsePoly& p) {
    if (p.is_constant()) coef = p.constant_term();
    else factors.push_back(p);
}

SparsePoly FactoredPoly::expand() const {
    SparsePoly r(coef);
    for (const auto& f : factors) r *= f;
    return r;
}

std::set<Var> FactoredPoly::variables() const {
    std::set<Var> s;
    if (coef == 0) return s;
    for (const auto& f : factors) {
        auto v = f.variables();
        s.insert(v.begin(), v.end());
    }
    return s;
}

bool FactoredPoly::is_zero() const {
    if (coef == 0) return true;
    return std::any_of(factors.begin(), factors.end(), [](const SparsePoly& f) { return f.is_zero(); });
}

bool FactoredPoly::is_difference_product() const {
    for (const auto& f : factors) {
        if (f.is_constant()) continue;
        if (f.num_terms() != 2) return false;
        auto it = f.terms().begin();
        const auto& [m1, c1] = *it++;
        const auto& [m2, c2] = *it;
        if (m1.size() != 1 || m2.size() != 1 || m1[0].second != 1 || m2[0].second != 1) return false;
        if (!is_xi(m1[0].first) || !is_xi(m2[0].first) || c1 != -c2) return false;
    }
    return true;
}

std::string FactoredPoly::str() const {
    if (is_zero()) return "0";
    if (factors.empty()) return q_str(coef);
    std::string out;
    if (coef == -1) out = "-";
    else if (coef != 1) out = q_str(coef) + "*";
    for (std::size_t i = 0; i < factors.size(); ++i) {
        if (i) out += '*';
        const auto& f = factors[i];
        const bool bare = f.num_terms() == 1 && f.terms().begin()->second == 1;
        out += bare ? f.str() : "(" + f.str() + ")";
    }
    return out;
}

FactoredPoly& FactoredPoly::operator*=(const FactoredPoly& o) {
    coef *= o.coef;
    factors.insert(factors.end(), o.factors.begin(), o.factors.end());
    return *this;
}

} // namespace eqvar
