#pragma once

#include <cstddef>
#include <limits>
#include <map>
#include <span>
#include <vector>

#include "glam/lambda_poly.hpp"
#include "glam/xpoly.hpp"

namespace glam {

/// Polynomial vector field X = (c_0 + c_1 x + ... + c_d x^d)∂ with rational coefficients.
class PolyField {
public:
    PolyField() = default;
    explicit PolyField(std::vector<Rational> coeffs);

    /// The sl2 basis field e_i = x^i ∂, i ∈ {0, 1, 2}.
    static PolyField basis(unsigned i);
    static PolyField monomial(const Rational& c, unsigned xpow);

    std::span<const Rational> coefficients() const { return coeffs_; }
    Rational coefficient(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }
    /// -1 for the zero field.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    bool in_sl2() const { return degree() <= 2; }

    /// X(x) as an x-polynomial, optionally differentiated k times.
    XPoly function(unsigned k = 0) const;

    /// Vector-field bracket [X, Y] = (X Y' - X' Y)∂.
    friend PolyField bracket(const PolyField& X, const PolyField& Y);

    PolyField& operator+=(const PolyField& o);
    friend PolyField operator+(PolyField a, const PolyField& b) { return a += b; }
    friend PolyField operator*(const Rational& c, const PolyField& X);

    friend bool operator==(const PolyField&, const PolyField&) = default;

private:
    void trim();
    std::vector<Rational> coeffs_;
};

/// Key of the normal-ordered monomial x^xpow ∂^dpow.
struct OpMonomial {
    unsigned xpow = 0;
    unsigned dpow = 0;
    friend bool operator==(const OpMonomial&, const OpMonomial&) = default;
};

/// Canonical term order: ∂-power descending, then x-power ascending.
struct OpMonomialOrder {
    bool operator()(const OpMonomial& a, const OpMonomial& b) const {
        if (a.dpow != b.dpow) return a.dpow > b.dpow;
        return a.xpow < b.xpow;
    }
};

/// Order reported for the zero operator.
inline constexpr int kZeroOrder = std::numeric_limits<int>::min();

/// Differential operator Σ c·x^m ∂^n with LambdaPoly coefficients, kept in
/// normal order (x-powers to the left of ∂-powers) with no zero entries.
class DiffOp {
public:
    using TermMap = std::map<OpMonomial, LambdaPoly, OpMonomialOrder>;

    DiffOp() = default;

    static DiffOp identity();
    static DiffOp scalar(const LambdaPoly& c);
    static DiffOp monomial(const LambdaPoly& c, unsigned xpow, unsigned dpow);
    /// Multiplication operator by an x-polynomial.
    static DiffOp multiplication(const XPoly& f);

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    LambdaPoly coefficient(unsigned xpow, unsigned dpow) const;
    /// a_n(x) such that the operator is Σ a_n(x) ∂^n.
    XPoly coefficient_function(unsigned dpow) const;

    /// Highest ∂-power, or kZeroOrder.
    int order() const;

    void add_term(const LambdaPoly& c, unsigned xpow, unsigned dpow);

    /// Specializes λ in every coefficient.
    DiffOp specialize(const Rational& lambda) const;

    DiffOp& operator+=(const DiffOp& o);
    DiffOp& operator-=(const DiffOp& o);
    friend DiffOp operator+(DiffOp a, const DiffOp& b) { return a += b; }
    friend DiffOp operator-(DiffOp a, const DiffOp& b) { return a -= b; }
    DiffOp operator-() const;
    friend DiffOp operator*(const LambdaPoly& c, const DiffOp& A);

    friend bool operator==(const DiffOp&, const DiffOp&) = default;

private:
    TermMap terms_;
};

/// A∘B, renormalized using ∂^n x^m = Σ_k C(n,k) m!/(m-k)! x^(m-k) ∂^(n-k).
DiffOp compose(const DiffOp& A, const DiffOp& B);

/// A∘B - B∘A.
DiffOp commutator(const DiffOp& A, const DiffOp& B);

/// L_X = X(x)∂ + w·X'(x); the weight defaults to the formal λ.
DiffOp lie_derivative(const PolyField& X);
DiffOp lie_derivative(const PolyField& X, const LambdaPoly& weight);

/// [L_X, A].
DiffOp adjoint_action(const PolyField& X, const DiffOp& A);

/// Σ over all n! orderings of the n-fold composition, with no 1/n! factor.
/// Throws std::invalid_argument on an empty sequence.
DiffOp symmetrized_product(std::span<const DiffOp> ops);

/// Σ a_{m,n} x^m f^(n)(x).
DensityPoly apply_to_density(const DiffOp& A, const DensityPoly& f);

}  // namespace glam
