#pragma once

#include <concepts>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "glam/rational.hpp"

namespace glam {

/// Univariate polynomial in the formal density degree λ over ℚ.
///
/// Coefficients are stored in ascending powers of λ with the highest stored
/// coefficient always nonzero; the zero polynomial is the empty sequence.
class LambdaPoly {
public:
    LambdaPoly() = default;
    LambdaPoly(const Rational& c);

    template <std::integral I>
    LambdaPoly(I c) : LambdaPoly(Rational(c)) {}

    /// Normalizes away trailing zero coefficients.
    static LambdaPoly from_coefficients(std::vector<Rational> coeffs);

    /// The indeterminate λ.
    static LambdaPoly lambda();

    std::span<const Rational> coefficients() const { return coeffs_; }
    /// Coefficient of λ^i (zero beyond the degree).
    Rational coefficient(std::size_t i) const;

    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_constant() const { return coeffs_.size() <= 1; }
    /// Number of nonzero coefficients.
    std::size_t term_count() const;

    /// Horner evaluation at λ = v.
    Rational eval(const Rational& v) const;

    LambdaPoly& operator+=(const LambdaPoly& o);
    LambdaPoly& operator-=(const LambdaPoly& o);
    LambdaPoly& operator*=(const LambdaPoly& o);

    friend LambdaPoly operator+(LambdaPoly a, const LambdaPoly& b) { return a += b; }
    friend LambdaPoly operator-(LambdaPoly a, const LambdaPoly& b) { return a -= b; }
    friend LambdaPoly operator*(const LambdaPoly& a, const LambdaPoly& b);
    LambdaPoly operator-() const;

    friend bool operator==(const LambdaPoly&, const LambdaPoly&) = default;

private:
    void trim();

    std::vector<Rational> coeffs_;
};

/// Human-readable form in descending powers, e.g. "1/3*l^2 - 1/3*l".
std::string to_string(const LambdaPoly& p);

}  // namespace glam
