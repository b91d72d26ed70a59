#include "eqvar/partitions.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>

namespace eqvar {

ExtNat parse_extnat(const std::string& s) {
    if (s == "inf" || s == "INF" || s == "oo") return INF;
    if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; }))
        throw std::invalid_argument("not a natural number or 'inf': '" + s + "'");
    return ExtNat(std::stoull(s));
}

GenPartition::GenPartition(std::vector<ExtNat> parts) {
    std::erase_if(parts, [](const ExtNat& x) { return x.is_zero(); });
    std::sort(parts.begin(), parts.end(), std::greater<>());
    parts_ = std::move(parts);
}

std::size_t GenPartition::inf_count() const {
    return std::count_if(parts_.begin(), parts_.end(), [](const ExtNat& x) { return x.is_inf(); });
}

std::uint64_t GenPartition::finite_sum() const {
    std::uint64_t s = 0;
    for (const auto& p : parts_)
        if (!p.is_inf()) s += p.value();
    return s;
}

ExtNat GenPartition::size() const {
    ExtNat s = 0;
    for (const auto& p : parts_) s += p;
    return s;
}

std::string GenPartition::str() const {
    if (parts_.empty()) return "()";
    std::string out;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) out += ',';
        out += parts_[i].str();
    }
    return out;
}

GenComposition::GenComposition(std::vector<ExtNat> weights) : w_(std::move(weights)) {
    for (const auto& x : w_)
        if (x.is_zero()) throw std::invalid_argument("composition weights must be positive");
}

bool GenComposition::is_inf() const {
    return std::any_of(w_.begin(), w_.end(), [](const ExtNat& x) { return x.is_inf(); });
}

ExtNat GenComposition::total() const {
    ExtNat s = 0;
    for (const auto& x : w_) s += x;
    return s;
}

std::string GenComposition::str() const {
    std::string out = "[";
    for (std::size_t i = 0; i < w_.size(); ++i) {
        if (i) out += ',';
        out += w_[i].str();
    }
    return out + "]";
}

Tableau canonical_tableau(const GenPartition& shape) {
    if (shape.has_inf()) throw std::invalid_argument("tableau shape must be finite");
    Tableau t;
    int next = 1;
    for (const auto& p : shape.parts()) {
        std::vector<int> row(p.value());
        std::iota(row.begin(), row.end(), next);
        next += int(p.value());
        t.push_back(std::move(row));
    }
    return t;
}

bool leq(const GenPartition& mu, const GenPartition& lambda) {
    if (mu.length() > lambda.length()) return false;
    for (std::size_t i = 0; i < mu.length(); ++i)
        if (mu[i] > lambda[i]) return false;
    return true;
}

bool preceq(const GenPartition& mu, const GenPartition& lambda) {
    const std::size_t m = mu.length(), l = lambda.length();
    if (m > l) return false;
    if (mu.inf_count() > lambda.inf_count()) return false;
    if (!lambda.has_inf() && mu.size() > lambda.size()) return false;
    if (l > 24) throw std::length_error("preceq: partition too long");

    // Search over μ parts (largest first) choosing disjoint subsets of λ indices.
    // Memoized on (j, used mask).
    std::vector<ExtNat> subset_sum(std::size_t(1) << l, ExtNat(0));
    for (std::size_t s = 1; s < subset_sum.size(); ++s) {
        std::size_t low = std::size_t(__builtin_ctzll(s));
        subset_sum[s] = subset_sum[s & (s - 1)] + lambda[low];
    }
    std::vector<std::map<std::size_t, bool>> memo(m);
    const std::size_t full = subset_sum.size() - 1;
    std::function<bool(std::size_t, std::size_t)> go = [&](std::size_t j, std::size_t used) -> bool {
        if (j == m) return true;
        auto it = memo[j].find(used);
        if (it != memo[j].end()) return it->second;
        bool ok = false;
        const std::size_t avail = full & ~used;
        for (std::size_t s = avail; s && !ok; s = (s - 1) & avail)
            if (subset_sum[s] >= mu[j]) ok = go(j + 1, used | s);
        memo[j][used] = ok;
        return ok;
    };
    return go(0, 0);
}

namespace {

// Cell-by-cell filling search.  Entries are λ-indices; entry i may be used at
// most λ_i times in total and only inside one row.
struct Filler {
    std::vector<std::uint64_t> rows;   // row lengths
    std::vector<std::uint64_t> cap;    // remaining capacity per entry
    std::vector<int> owner;            // row owning the entry, -1 if free
    std::vector<std::uint64_t> weight; // original capacity, for symmetry breaking

    bool fill(std::size_t r, std::uint64_t c, std::size_t min_entry) {
        if (r == rows.size()) return true;
        if (c == rows[r]) return fill(r + 1, 0, 0);
        // Remaining cells of this row must fit in entries it may still use.
        std::uint64_t room = 0;
        for (std::size_t i = min_entry; i < cap.size(); ++i)
            if (owner[i] == -1 || owner[i] == int(r)) room += cap[i];
        if (room < rows[r] - c) return false;
        for (std::size_t i = min_entry; i < cap.size(); ++i) {
            if (cap[i] == 0) continue;
            if (owner[i] != -1 && owner[i] != int(r)) continue;
            if (owner[i] == -1) {
                // Fresh entries of equal weight are interchangeable: try the first only.
                bool dup = false;
                for (std::size_t k = min_entry; k < i && !dup; ++k)
                    dup = owner[k] == -1 && weight[k] == weight[i] && cap[k] == cap[i];
                if (dup) continue;
            }
            const int prev = owner[i];
            owner[i] = int(r);
            --cap[i];
            if (fill(r, c + 1, i)) return true;
            ++cap[i];
            owner[i] = prev;
        }
        return false;
    }
};

} // namespace

bool good_filling_exists(const GenPartition& mu, const GenPartition& lambda) {
    const std::uint64_t e = lambda.finite_sum();
    // Truncation: an ∞ row with e+1 cells already needs an ∞ entry, and any
    // filling of the truncated shape extends by repeating that entry.
    const std::uint64_t trunc = e + 1;
    Filler f;
    for (const auto& p : mu.parts()) f.rows.push_back(p.is_inf() ? trunc : p.value());
    std::uint64_t total = std::accumulate(f.rows.begin(), f.rows.end(), std::uint64_t(0));
    for (const auto& p : lambda.parts()) {
        const std::uint64_t c = p.is_inf() ? total + 1 : p.value();
        f.cap.push_back(c);
        f.weight.push_back(c);
    }
    f.owner.assign(f.cap.size(), -1);
    return f.fill(0, 0, 0);
}

std::vector<GenPartition> finite_partitions_in_box(std::size_t max_len, std::uint64_t max_part) {
    std::vector<GenPartition> out;
    std::vector<ExtNat> cur;
    std::function<void(std::uint64_t)> rec = [&](std::uint64_t bound) {
        out.emplace_back(cur);
        if (cur.size() == max_len) return;
        for (std::uint64_t p = 1; p <= bound; ++p) {
            cur.push_back(p);
            rec(p);
            cur.pop_back();
        }
    };
    rec(max_part);
    return out;
}

std::vector<GenPartition> min_excluded_in_box(const GenPartition& lambda, std::size_t max_len,
                                              std::uint64_t max_part) {
    std::vector<GenPartition> excluded;
    for (auto& a : finite_partitions_in_box(max_len, max_part))
        if (!preceq(a, lambda)) excluded.push_back(std::move(a));
    std::vector<GenPartition> out;
    for (const auto& a : excluded) {
        bool minimal = true;
        for (const auto& b : excluded)
            if (!(b == a) && preceq(b, a)) {
                minimal = false;
                break;
            }
        if (minimal) out.push_back(a);
    }
    std::sort(out.begin(), out.end(), [](const GenPartition& a, const GenPartition& b) {
        if (a.finite_sum() != b.finite_sum()) return a.finite_sum() < b.finite_sum();
        return b < a;
    });
    return out;
}

std::vector<GenPartition> min_excluded(const GenPartition& lambda) {
    if (!lambda.has_inf()) throw std::invalid_argument("min_excluded: partition needs an infinite part");
    return min_excluded_in_box(lambda, lambda.length() + 1, lambda.finite_sum() + 1);
}

GenPartition mu_minus(const GenPartition& mu, std::uint64_t e) {
    std::vector<ExtNat> p;
    for (const auto& x : mu.parts()) p.push_back(min(x, ExtNat(e + 1)));
    return GenPartition(std::move(p));
}

GenPartition mu_s(const GenPartition& mu, std::uint64_t e) {
    std::vector<ExtNat> p;
    for (const auto& x : mu.parts()) {
        if (!x.is_inf() && x.value() > e + 1)
            throw std::invalid_argument("mu_s: part " + x.str() + " exceeds e+1");
        p.push_back(x == ExtNat(e + 1) ? INF : x);
    }
    return GenPartition(std::move(p));
}

std::set<GenPartition> lambda_minus_set(const GenPartition& lambda) {
    const std::uint64_t e = lambda.finite_sum();
    std::vector<std::uint64_t> bound;
    for (const auto& x : lambda.parts()) bound.push_back(x.is_inf() ? e + 1 : std::min(x.value(), e + 1));
    std::set<GenPartition> out;
    std::vector<ExtNat> cur(bound.size());
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == bound.size()) {
            GenPartition p(cur);
            if (!p.empty()) out.insert(mu_minus(p, e));
            return;
        }
        for (std::uint64_t v = 0; v <= bound[i]; ++v) {
            cur[i] = v;
            rec(i + 1);
        }
    };
    rec(0);
    return out;
}

std::set<GenPartition> lambda_minus_set_preceq(const GenPartition& lambda) {
    const std::uint64_t e = lambda.finite_sum();
    std::set<GenPartition> out;
    for (auto& a : finite_partitions_in_box(lambda.length(), e + 1))
        if (!a.empty() && preceq(a, lambda)) out.insert(std::move(a));
    return out;
}

std::vector<std::vector<int>> aut(const GenComposition& lambda) {
    const std::size_t r = lambda.size();
    // Group labels into blocks of equal weight, then take all products of block permutations.
    std::vector<std::vector<int>> blocks;
    std::vector<bool> seen(r, false);
    for (std::size_t i = 0; i < r; ++i) {
        if (seen[i]) continue;
        std::vector<int> b;
        for (std::size_t j = i; j < r; ++j)
            if (!seen[j] && lambda.weight(j) == lambda.weight(i)) {
                seen[j] = true;
                b.push_back(int(j));
            }
        blocks.push_back(std::move(b));
    }
    std::vector<std::vector<int>> out;
    std::vector<int> perm(r);
    std::function<void(std::size_t)> rec = [&](std::size_t k) {
        if (k == blocks.size()) {
            out.push_back(perm);
            return;
        }
        std::vector<int> img = blocks[k];
        do {
            for (std::size_t t = 0; t < img.size(); ++t) perm[blocks[k][t]] = img[t];
            rec(k + 1);
        } while (std::next_permutation(img.begin(), img.end()));
    };
    rec(0);
    std::sort(out.begin(), out.end());
    return out;
}

GenPartition parse_partition(const std::string& s) {
    std::string t;
    for (char c : s)
        if (c != ' ' && c != '(' && c != ')') t += c;
    std::vector<ExtNat> parts;
    if (t.empty()) return GenPartition();
    std::stringstream ss(t);
    std::string tok;
    while (std::getline(ss, tok, ',')) parts.push_back(parse_extnat(tok));
    return GenPartition(std::move(parts));
}

} // namespace eqvar
