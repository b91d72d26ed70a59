#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace eqvar {

using Q = mpq_class;

// Variable ids: ξ_i is i, t_i is T_BASE + i.  Smaller id = higher rank, so ξ outranks t.
using Var = std::uint32_t;
inline constexpr Var T_BASE = Var(1) << 30;
inline Var xi(int i) { return Var(i); }
inline Var tv(int i) { return T_BASE + Var(i); }
inline bool is_xi(Var v) { return v < T_BASE; }
inline int var_index(Var v) { return int(is_xi(v) ? v : v - T_BASE); }
std::string var_name(Var v);

// Sparse exponent vector sorted by variable id, exponents > 0.
using Monomial = std::vector<std::pair<Var, std::uint32_t>>;

std::uint32_t total_degree(const Monomial& m);
// Graded lexicographic comparison (x1 > x2 > ... > t1 > t2 > ...).
bool grlex_less(const Monomial& a, const Monomial& b);
Monomial mono_mul(const Monomial& a, const Monomial& b);
bool mono_divides(const Monomial& a, const Monomial& b);

struct GrlexGreater {
    bool operator()(const Monomial& a, const Monomial& b) const { return grlex_less(b, a); }
};

// A finitely supported permutation of ξ-indices (absent keys are fixed).
using Perm = std::map<int, int>;
int perm_apply(const Perm& p, int i);
Perm transposition(int a, int b);
// Relabeling list[k] -> k+1.
Perm relabel_to_prefix(const std::vector<int>& list);

class SparsePoly {
public:
    using Terms = std::map<Monomial, Q, GrlexGreater>;

    SparsePoly() = default;
    SparsePoly(const Q& c);
    SparsePoly(long c) : SparsePoly(Q(c)) {}
    SparsePoly(int c) : SparsePoly(Q(c)) {}
    static SparsePoly variable(Var v, std::uint32_t exp = 1);
    static SparsePoly monomial(const Monomial& m, const Q& c);

    const Terms& terms() const { return terms_; }
    std::size_t num_terms() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    Q constant_term() const;
    // Leading term under grlex.
    const Monomial& leading_monomial() const;
    const Q& leading_coefficient() const;

    std::uint32_t degree() const;
    std::uint32_t degree_in(Var v) const;
    std::set<Var> variables() const;
    // Coefficient of v^k as a polynomial in the remaining variables.
    SparsePoly coefficient_of(Var v, std::uint32_t k) const;

    SparsePoly& operator+=(const SparsePoly& o);
    SparsePoly& operator-=(const SparsePoly& o);
    SparsePoly& operator*=(const SparsePoly& o);
    SparsePoly& operator*=(const Q& c);
    friend SparsePoly operator+(SparsePoly a, const SparsePoly& b) { return a += b; }
    friend SparsePoly operator-(SparsePoly a, const SparsePoly& b) { return a -= b; }
    friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b);
    friend SparsePoly operator*(SparsePoly a, const Q& c) { return a *= c; }
    SparsePoly operator-() const;
    SparsePoly pow(std::uint32_t k) const;

    bool operator==(const SparsePoly& o) const;
    bool operator!=(const SparsePoly& o) const { return !(*this == o); }

    Q evaluate(const std::function<Q(Var)>& value) const;
    // Substitutes variables by variables (need not be injective).
    SparsePoly rename(const std::function<Var(Var)>& f) const;

    // "x1^2*x2 - x2 + 3/2"
    std::string str() const;

    void add_term(const Monomial& m, const Q& c);

private:
    Terms terms_;
};

SparsePoly apply_perm(const Perm& sigma, const SparsePoly& p);
int perm_sign(const Perm& p);

// Δ(ξ_{l_1}, ..., ξ_{l_k}) = ∏_{p<q} (ξ_{l_q} − ξ_{l_p}).
SparsePoly discriminant_of(const std::vector<int>& labels);
SparsePoly discriminant(int n);
// Σ_{σ ∈ S_n / S_{n-1}} sgn(σ) σ(ξ_n^k Δ_{n-1}) with coset representatives id, (i n).
SparsePoly skew_sum(int n, int k);

// A rational times a product of polynomial factors (kept unexpanded).
struct FactoredPoly {
    Q coef = 1;
    std::vector<SparsePoly> factors;

    FactoredPoly() = default;
    FactoredPoly(const SparsePoly& p);
    FactoredPoly(Q c, std::vector<SparsePoly> f) : coef(std::move(c)), factors(std::move(f)) {}

    SparsePoly expand() const;
    std::set<Var> variables() const;
    bool is_zero() const;
    // Every factor is c·(ξ_a − ξ_b) or a nonzero constant.
    bool is_difference_product() const;
    std::string str() const;
    FactoredPoly& operator*=(const FactoredPoly& o);
};

SparsePoly parse_poly(const std::string& s);
// Top-level products keep their factors; anything else becomes a single factor.
FactoredPoly parse_factored(const std::string& s);

std::string q_str(const Q& q);
Q parse_rational(const std::string& s);

} // namespace eqvar
