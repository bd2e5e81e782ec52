#pragma once

#include "glam/diffop.hpp"
#include "glam/lambda_poly.hpp"
#include "glam/symbol_poly.hpp"

namespace glam {

/// Which sign of 2λ enters the binomial C(±2λ - p, j - p) of the symbol-map
/// coefficients. `corrected` (-2λ) is the one compatible with L_X ↦ X(x)ξ;
/// `printed` (+2λ) is kept only as a regression guard.
enum class SignConvention { corrected, printed };

/// α_p^j = C(j,p) C(±2λ - p, j - p) / C(j + p + 1, 2p + 1).
/// Throws std::invalid_argument when p > j.
LambdaPoly alpha_coefficient(unsigned p, unsigned j, SignConvention conv = SignConvention::corrected);

/// Projectively equivariant symbol: Σ_p ā_p(x) ξ^p with ā_p = Σ_{j≥p} α_p^j a_j^(j-p).
SymbolPoly sigma(const DiffOp& A, SignConvention conv = SignConvention::corrected);

/// Inverse of sigma, by back-substitution from the top ξ-power down.
DiffOp quantize(const SymbolPoly& S, SignConvention conv = SignConvention::corrected);

/// a_n(x) ξ^n for an operator of order n. Throws std::invalid_argument on zero.
SymbolPoly principal_symbol(const DiffOp& A);

/// Lifted action of a vector field: f(x)ξ^p ↦ (X f' - p X' f) ξ^p.
SymbolPoly symbol_action(const PolyField& X, const SymbolPoly& S);

}  // namespace glam
