#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "glam/lambda_poly.hpp"

namespace glam {

/// Polynomial in x with LambdaPoly coefficients, ascending powers, trimmed.
class XPoly {
public:
    XPoly() = default;
    XPoly(const LambdaPoly& c);

    static XPoly monomial(const LambdaPoly& c, unsigned xpow);
    static XPoly from_coefficients(std::vector<LambdaPoly> coeffs);

    std::span<const LambdaPoly> coefficients() const { return coeffs_; }
    LambdaPoly coefficient(std::size_t i) const;
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }

    /// k-th derivative in x.
    XPoly derivative(unsigned k = 1) const;
    /// Value at a given x, as a polynomial in λ.
    LambdaPoly eval_at(const Rational& x) const;
    /// Specializes λ in every coefficient.
    XPoly specialize(const Rational& lambda) const;

    XPoly& operator+=(const XPoly& o);
    XPoly& operator-=(const XPoly& o);
    friend XPoly operator+(XPoly a, const XPoly& b) { return a += b; }
    friend XPoly operator-(XPoly a, const XPoly& b) { return a -= b; }
    friend XPoly operator*(const XPoly& a, const XPoly& b);
    XPoly operator-() const;

    friend bool operator==(const XPoly&, const XPoly&) = default;

private:
    void trim();
    std::vector<LambdaPoly> coeffs_;
};

/// A polynomial density φ(x)(dx)^λ; the (dx)^λ factor is implicit.
using DensityPoly = XPoly;

}  // namespace glam
