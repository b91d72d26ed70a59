#pragma once

#include <set>
#include <string>
#include <vector>

#include "eqvar/extnat.hpp"

namespace eqvar {

// Generalized partition: parts in N ∪ {INF}, non-increasing, no zeros.
class GenPartition {
public:
    GenPartition() = default;
    // Canonicalizes: sorts non-increasing, drops zeros.
    explicit GenPartition(std::vector<ExtNat> parts);
    GenPartition(std::initializer_list<ExtNat> parts)
        : GenPartition(std::vector<ExtNat>(parts)) {}

    const std::vector<ExtNat>& parts() const { return parts_; }
    std::size_t length() const { return parts_.size(); }
    bool empty() const { return parts_.empty(); }
    const ExtNat& operator[](std::size_t i) const { return parts_[i]; }

    std::size_t inf_count() const;
    bool has_inf() const { return !parts_.empty() && parts_.front().is_inf(); }
    bool is_finite() const { return !has_inf(); }
    // e(λ): sum of the finite parts.
    std::uint64_t finite_sum() const;
    ExtNat size() const;

    // "inf,3,2"; the empty partition prints as "()".
    std::string str() const;

    bool operator==(const GenPartition&) const = default;
    // Lexicographic on parts, used only for container ordering.
    bool operator<(const GenPartition& o) const { return parts_ < o.parts_; }

private:
    std::vector<ExtNat> parts_;
};

inline GenPartition canonicalize(std::vector<ExtNat> parts) { return GenPartition(std::move(parts)); }

// Generalized composition on labels 0..r-1 (printed 1..r).
class GenComposition {
public:
    GenComposition() = default;
    explicit GenComposition(std::vector<ExtNat> weights);
    explicit GenComposition(const GenPartition& p) : GenComposition(p.parts()) {}
    GenComposition(std::initializer_list<ExtNat> w) : GenComposition(std::vector<ExtNat>(w)) {}

    std::size_t size() const { return w_.size(); }
    const ExtNat& weight(std::size_t i) const { return w_[i]; }
    const std::vector<ExtNat>& weights() const { return w_; }
    bool is_inf() const;
    ExtNat total() const;
    GenPartition shape() const { return GenPartition(w_); }
    std::string str() const;

    bool operator==(const GenComposition&) const = default;

private:
    std::vector<ExtNat> w_;
};

using Tableau = std::vector<std::vector<int>>;

// Row-major filling of a finite shape with 1, 2, 3, ...
Tableau canonical_tableau(const GenPartition& shape);

bool leq(const GenPartition& mu, const GenPartition& lambda);
bool preceq(const GenPartition& mu, const GenPartition& lambda);
bool good_filling_exists(const GenPartition& mu, const GenPartition& lambda);

// All finite partitions with at most max_len parts, each part <= max_part.
std::vector<GenPartition> finite_partitions_in_box(std::size_t max_len, std::uint64_t max_part);

// ⪯-minimal finite α with ¬(α ⪯ λ).  Box: ℓ(λ)+1 parts, parts <= e(λ)+1.
std::vector<GenPartition> min_excluded(const GenPartition& lambda);
std::vector<GenPartition> min_excluded_in_box(const GenPartition& lambda, std::size_t max_len,
                                              std::uint64_t max_part);

GenPartition mu_minus(const GenPartition& mu, std::uint64_t e);
GenPartition mu_s(const GenPartition& mu, std::uint64_t e);

// {μ⁻ : μ ≤ λ} minus the empty partition.
std::set<GenPartition> lambda_minus_set(const GenPartition& lambda);
// {α finite : α ⪯ λ, parts <= e(λ)+1} minus the empty partition; contains ν⁻ for every ν ⪯ λ.
std::set<GenPartition> lambda_minus_set_preceq(const GenPartition& lambda);

// Weight-preserving permutations; perm[i] is the image of label i.
std::vector<std::vector<int>> aut(const GenComposition& lambda);

GenPartition parse_partition(const std::string& s);

} // namespace eqvar
