#include "eqvar/extract.hpp"

#include <stdexcept>

namespace eqvar {

SparsePoly replay(const SparsePoly& f, const ExtractionWitness& w) {
    SparsePoly p = f;
    for (const auto& st : w.steps) {
        SparsePoly sum;
        for (const auto& [c, sigma] : st.ring) sum += apply_perm(sigma, p) * c;
        p = st.multiplier * sum;
    }
    return p;
}

namespace {

struct Level {
    std::vector<WitnessStep> steps;
    Q c;
    std::vector<int> order; // the indices a, b, r whose discriminant is produced
};

int fresh_index(std::set<int>& used) {
    int i = 1;
    while (used.count(i)) ++i;
    used.insert(i);
    return i;
}

// Steps turning f into c·Δ(order), by induction on the number of variables.
Level extract(const SparsePoly& f, std::set<int>& used) {
    if (f.is_constant()) return {{}, f.constant_term(), {}};
    int r = 0;
    for (Var v : f.variables()) r = std::max(r, var_index(v));
    const std::uint32_t d = f.degree_in(xi(r));
    Level inner = extract(f.coefficient_of(xi(r), d), used);

    std::vector<int> b;
    for (std::uint32_t k = 0; k < d; ++k) b.push_back(fresh_index(used));

    Level out;
    out.c = inner.c;
    // f·Δ(b); then skew-symmetrize over id and the transpositions (r b_k).  Every
    // lower power of ξ_r cancels, leaving g_d·Δ(b, r).
    out.steps.push_back({{{Q(1), Perm{}}}, discriminant_of(b)});
    WitnessStep y{{{Q(1), Perm{}}}, SparsePoly(1)};
    for (int bk : b) y.ring.emplace_back(Q(-1), transposition(r, bk));
    out.steps.push_back(std::move(y));
    // The inner steps only move indices disjoint from b and r.
    out.steps.insert(out.steps.end(), inner.steps.begin(), inner.steps.end());
    // Cross differences glue Δ(a)·Δ(b, r) into Δ(a, b, r).
    SparsePoly h(1);
    for (int a : inner.order) {
        for (int bk : b) h *= SparsePoly::variable(xi(bk)) - SparsePoly::variable(xi(a));
        h *= SparsePoly::variable(xi(r)) - SparsePoly::variable(xi(a));
    }
    out.steps.push_back({{{Q(1), Perm{}}}, h});
    out.order = inner.order;
    out.order.insert(out.order.end(), b.begin(), b.end());
    out.order.push_back(r);
    return out;
}

} // namespace

ExtractionWitness extract_discriminant(const SparsePoly& f) {
    if (f.is_zero()) throw std::invalid_argument("extract_discriminant: zero polynomial");
    for (Var v : f.variables())
        if (!is_xi(v)) throw std::invalid_argument("extract_discriminant: polynomial involves t-variables");
    std::set<int> used;
    for (Var v : f.variables()) used.insert(var_index(v));
    Level top = extract(f, used);
    ExtractionWitness w;
    w.steps = std::move(top.steps);
    w.c = top.c;
    w.n = top.order.empty() ? 1 : int(top.order.size());
    Perm rel = relabel_to_prefix(top.order);
    if (!rel.empty()) w.steps.push_back({{{Q(1), rel}}, SparsePoly(1)});
    return w;
}

bool verify_witness(const SparsePoly& f, const ExtractionWitness& w) {
    if (w.c == 0 || w.n < 1) return false;
    return replay(f, w) == discriminant(w.n) * w.c;
}

} // namespace eqvar
