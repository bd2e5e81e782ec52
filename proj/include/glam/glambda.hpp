#pragma once

#include <map>
#include <mutex>
#include <span>
#include <tuple>

#include "glam/diffop.hpp"
#include "glam/lambda_poly.hpp"
#include "glam/symbol_map.hpp"
#include "glam/symbol_poly.hpp"
#include "glam/xpoly.hpp"

namespace glam {

/// Value A_k(X_1, …, X_n), a polynomial in x.
using XPolyLambda = XPoly;

/// A_k = Σ_{2p+m=k} C(k/2, p)(-2)^p (X_1''⋯X_p'' X_{p+1}'⋯X_{p+m}' X_{p+m+1}⋯X_n)_+,
/// each (⋯)_+ being the full S_n sum over slot assignments.
/// Throws std::invalid_argument for odd k, k > 2n, or a field outside sl2.
XPolyLambda ak_operator(unsigned k, std::span<const PolyField> fields);

/// Write-once memo of P^n_k(λ). Concurrent fills of one key compute the same
/// value; the first stored value wins.
class PnkTable {
public:
    const LambdaPoly& get(unsigned n, unsigned k, SignConvention conv);
    std::size_t size() const;

    static PnkTable& global();

private:
    mutable std::mutex mutex_;
    std::map<std::tuple<unsigned, unsigned, SignConvention>, LambdaPoly> cache_;
};

/// P^n_k(λ) = Σ_p Σ_{l=n-k}^{n} (l-n+k)! C(l,n-k)² C(±2λ-n+k, l-n+k) / C(n-k+l+1, 2n-2k+1)
///            · C(n,p) {p l} λ^(n-p).
/// Throws std::invalid_argument unless n ≥ 1, k even, k ≤ n.
LambdaPoly pnk_polynomial(unsigned n, unsigned k, SignConvention conv = SignConvention::corrected);

/// Σ_{k even ≤ n} P^n_k(λ) A_k(X_1, …, X_n) ξ^(n-k).
SymbolPoly symbol_of_symmetrized(std::span<const PolyField> fields, SignConvention conv = SignConvention::corrected);

/// σ_λ([L_{X_1} ⋯ L_{X_n}]_+) == symbol_of_symmetrized(fields), exactly in λ.
bool verify_closed_form(std::span<const PolyField> fields);

/// (x∂)^n = Σ_l {n l} x^l ∂^l.
DiffOp xd_power_expansion(unsigned n);

}  // namespace glam
