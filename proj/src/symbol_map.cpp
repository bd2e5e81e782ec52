#include "glam/symbol_map.hpp"

#include <stdexcept>

#include "glam/combinatorics.hpp"

namespace glam {

LambdaPoly alpha_coefficient(unsigned p, unsigned j, SignConvention conv) {
    if (p > j) throw std::invalid_argument("alpha_coefficient: requires p <= j");
    const Rational two_sign = conv == SignConvention::corrected ? Rational(-2) : Rational(2);
    LambdaPoly arg = LambdaPoly::from_coefficients({Rational(-static_cast<long>(p)), two_sign});
    Rational scale(binomial(j, p), binomial(j + p + 1, 2 * p + 1));
    return LambdaPoly(scale) * generalized_binomial(arg, j - p);
}

SymbolPoly sigma(const DiffOp& A, SignConvention conv) {
    SymbolPoly S;
    const int n = A.order();
    if (n < 0) return S;
    std::vector<XPoly> a(n + 1);
    for (int j = 0; j <= n; ++j) a[j] = A.coefficient_function(j);
    for (int p = 0; p <= n; ++p) {
        XPoly bar;
        for (int j = p; j <= n; ++j) {
            if (a[j].is_zero()) continue;
            bar += XPoly(alpha_coefficient(p, j, conv)) * a[j].derivative(j - p);
        }
        S += SymbolPoly::from_component(bar, p);
    }
    return S;
}

DiffOp quantize(const SymbolPoly& S, SignConvention conv) {
    DiffOp A;
    const int n = S.xi_degree();
    if (n < 0) return A;
    // ā_p = a_p + Σ_{j>p} α_p^j a_j^(j-p), solved for a_p with α_p^p = 1.
    std::vector<XPoly> a(n + 1);
    for (int p = n; p >= 0; --p) {
        XPoly ap = S.component(p);
        for (int j = p + 1; j <= n; ++j) {
            if (a[j].is_zero()) continue;
            ap -= XPoly(alpha_coefficient(p, j, conv)) * a[j].derivative(j - p);
        }
        a[p] = ap;
        auto cs = ap.coefficients();
        for (std::size_t m = 0; m < cs.size(); ++m) A.add_term(cs[m], static_cast<unsigned>(m), p);
    }
    return A;
}

SymbolPoly principal_symbol(const DiffOp& A) {
    if (A.is_zero()) throw std::invalid_argument("principal_symbol: the zero operator has no principal symbol");
    const auto n = static_cast<unsigned>(A.order());
    return SymbolPoly::from_component(A.coefficient_function(n), n);
}

SymbolPoly symbol_action(const PolyField& X, const SymbolPoly& S) {
    SymbolPoly out;
    const XPoly f0 = X.function();
    const XPoly f1 = X.function(1);
    const int top = S.xi_degree();
    for (int p = 0; p <= top; ++p) {
        XPoly f = S.component(p);
        if (f.is_zero()) continue;
        XPoly g = f0 * f.derivative() - XPoly(LambdaPoly(p)) * f1 * f;
        out += SymbolPoly::from_component(g, p);
    }
    return out;
}

}  // namespace glam
