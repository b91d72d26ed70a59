#pragma once

#include <tuple>
#include <utility>
#include <vector>

#include "eqvar/partitions.hpp"

namespace eqvar {

// Weight-respecting map of generalized compositions: table[i] is the image of domain label i.
struct CompMap {
    GenComposition domain;
    GenComposition codomain;
    std::vector<int> table;

    CompMap() = default;
    CompMap(GenComposition dom, GenComposition cod, std::vector<int> tab);

    static CompMap identity(const GenComposition& c);

    // Σ of domain weights over the fiber of each codomain label (zeros kept).
    std::vector<ExtNat> fiber_weights() const;
    bool is_valid() const;
    bool is_principal_surjection() const;
    bool is_injection() const;
    std::vector<std::vector<int>> fibers() const;

    bool operator==(const CompMap&) const = default;
};

// g ∘ f  (f first).
CompMap then(const CompMap& f, const CompMap& g);

// Pushforward composition; zero-weight labels dropped (labels renumbered in order).
GenComposition pushforward(const CompMap& f);

struct Factorization {
    CompMap h; // principal surjection onto the image
    CompMap g; // injection
};
Factorization factor(const CompMap& f);

struct PullbackSquare {
    GenComposition w;
    CompMap g1; // w -> domain of f1
    CompMap g2; // w -> domain of f2
};
PullbackSquare pullback_square(const CompMap& f1, const CompMap& f2);

// (f1: ρ ↠ left, f2: ρ → right).  A correspondence left ⇢ right acts on point
// sets of the right composition and produces point sets of the left one.
struct Correspondence {
    GenComposition rho;
    CompMap f1;
    CompMap f2;

    const GenComposition& left() const { return f1.codomain; }
    const GenComposition& right() const { return f2.codomain; }

    static Correspondence identity(const GenComposition& c);
    bool is_valid() const;
    bool is_good() const;

    // Per left-label multiset of (ρ weight, right label), sorted.
    std::vector<std::vector<std::pair<ExtNat, int>>> canonical() const;
};

// f: λ ⇢ μ, g: μ ⇢ ν  gives  λ ⇢ ν.
Correspondence compose(const Correspondence& f, const Correspondence& g);

std::vector<CompMap> enumerate_end(const GenComposition& lambda);

// All good correspondences μ ⇢ λ (up to relabeling of ρ), deterministic order.
std::vector<Correspondence> enumerate_good(const GenComposition& mu, const GenComposition& lambda);

// Fiber options of a good correspondence above one μ-label: sorted lists of (weight, λ-label).
std::vector<std::vector<std::pair<ExtNat, int>>> good_fiber_options(const ExtNat& mu_i,
                                                                    const GenComposition& lambda);

} // namespace eqvar
