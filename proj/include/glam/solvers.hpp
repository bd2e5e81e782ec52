#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "glam/lambda_poly.hpp"
#include "glam/rational.hpp"

namespace glam {

/// Coefficients α_p^j, 0 ≤ p ≤ j ≤ n, of a triangular symbol map.
class AlphaTable {
public:
    explicit AlphaTable(unsigned n) : n_(n) {}

    unsigned order() const { return n_; }
    const LambdaPoly& at(unsigned p, unsigned j) const { return entries_.at({p, j}); }
    void set(unsigned p, unsigned j, LambdaPoly v) { entries_[{p, j}] = std::move(v); }

    friend bool operator==(const AlphaTable&, const AlphaTable&) = default;

private:
    unsigned n_;
    std::map<std::pair<unsigned, unsigned>, LambdaPoly> entries_;
};

struct SymbolMapSolution {
    unsigned n = 0;
    bool normalized = false;
    /// False when the normalized system has no solution for generic λ.
    bool consistent = false;
    /// Generic dimension over ℚ(λ) (affine dimension when normalized).
    std::size_t dimension = 0;
    /// Reconstructed table, present when normalized and unique.
    std::optional<AlphaTable> table;
    /// λ values at which exact systems were solved.
    std::vector<Rational> samples;
};

/// Re-derives the symbol map from equivariance alone. The α_p^j are unknowns;
/// the constraints are σ∘ad(e_i) = symbol_action(e_i)∘σ on the operators
/// x^m ∂^j (j ≤ n, m ≤ 2n+2). With `normalized`, α_j^j = 1 is imposed.
/// Systems are solved exactly at sampled rational λ and the entries are
/// recovered by Lagrange interpolation. Requires 1 ≤ n ≤ 6.
SymbolMapSolution solve_equivariant_symbol_maps(unsigned n, bool normalized);

/// Slot pattern of (X_1'' ⋯ X_p'' X_{p+1}' ⋯ X_{p+m}' X_{p+m+1} ⋯ X_n)_+.
struct DerivativePattern {
    unsigned second = 0;
    unsigned first = 0;
    friend bool operator==(const DerivativePattern&, const DerivativePattern&) = default;
};

/// Space of symmetric n-linear sl2-equivariant differential maps sl2^n → F_μ
/// of the form Σ_p β_p(x)·pattern_p with total derivative order k = μ + n.
struct InvariantOperatorSpace {
    unsigned n = 0;
    int mu = 0;
    int order = 0;
    std::vector<DerivativePattern> patterns;
    /// Largest x-degree allowed in each β_p(x) of the ansatz.
    unsigned beta_x_degree = 0;
    std::size_t dimension = 0;
    /// For each basis vector, β_p(x) per pattern as ascending x-coefficients.
    /// A single basis vector is scaled so that β_0 = 1 when β_0 ≠ 0.
    std::vector<std::vector<std::vector<Rational>>> basis;

    /// Constant parts of the first basis vector; empty when dimension is 0.
    std::vector<Rational> constant_betas() const;
    /// Whether every β_p(x) of every basis vector is constant.
    bool betas_constant() const;
};

/// Requires 1 ≤ n ≤ 5 and |μ| ≤ 2n.
InvariantOperatorSpace solve_invariant_operators(unsigned n, int mu);

}  // namespace glam
