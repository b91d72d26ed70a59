#pragma once

#include <vector>

#include "eqvar/poly.hpp"

namespace eqvar {

// One replay step: p <- multiplier * Σ coef·σ(p).
struct WitnessStep {
    std::vector<std::pair<Q, Perm>> ring;
    SparsePoly multiplier;
};

// Certificate that the orbit ideal of f contains c·Δ_n.
struct ExtractionWitness {
    std::vector<WitnessStep> steps;
    Q c;
    int n = 1;
};

SparsePoly replay(const SparsePoly& f, const ExtractionWitness& w);
ExtractionWitness extract_discriminant(const SparsePoly& f);
bool verify_witness(const SparsePoly& f, const ExtractionWitness& w);

} // namespace eqvar
