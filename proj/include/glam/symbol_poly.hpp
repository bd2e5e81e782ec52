#pragma once

#include <map>

#include "glam/lambda_poly.hpp"
#include "glam/xpoly.hpp"

namespace glam {

/// Key of the monomial x^xpow ξ^xipow on T*ℝ.
struct SymbolMonomial {
    unsigned xpow = 0;
    unsigned xipow = 0;
    friend bool operator==(const SymbolMonomial&, const SymbolMonomial&) = default;
};

/// Canonical term order: ξ-power descending, then x-power ascending.
struct SymbolMonomialOrder {
    bool operator()(const SymbolMonomial& a, const SymbolMonomial& b) const {
        if (a.xipow != b.xipow) return a.xipow > b.xipow;
        return a.xpow < b.xpow;
    }
};

/// Function on T*ℝ polynomial in x and in the fiber coordinate ξ.
class SymbolPoly {
public:
    using TermMap = std::map<SymbolMonomial, LambdaPoly, SymbolMonomialOrder>;

    SymbolPoly() = default;

    static SymbolPoly monomial(const LambdaPoly& c, unsigned xpow, unsigned xipow);
    /// f(x) ξ^p.
    static SymbolPoly from_component(const XPoly& f, unsigned xipow);

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    LambdaPoly coefficient(unsigned xpow, unsigned xipow) const;
    /// The coefficient function of ξ^p.
    XPoly component(unsigned xipow) const;
    /// Highest ξ-power, -1 for the zero symbol.
    int xi_degree() const;

    void add_term(const LambdaPoly& c, unsigned xpow, unsigned xipow);
    SymbolPoly specialize(const Rational& lambda) const;

    SymbolPoly& operator+=(const SymbolPoly& o);
    SymbolPoly& operator-=(const SymbolPoly& o);
    friend SymbolPoly operator+(SymbolPoly a, const SymbolPoly& b) { return a += b; }
    friend SymbolPoly operator-(SymbolPoly a, const SymbolPoly& b) { return a -= b; }
    SymbolPoly operator-() const;
    /// Pointwise (commutative) product of functions on T*ℝ.
    friend SymbolPoly operator*(const SymbolPoly& a, const SymbolPoly& b);
    friend SymbolPoly operator*(const LambdaPoly& c, const SymbolPoly& S);

    friend bool operator==(const SymbolPoly&, const SymbolPoly&) = default;

private:
    TermMap terms_;
};

}  // namespace glam
