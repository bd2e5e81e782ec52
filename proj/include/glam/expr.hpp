#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "glam/diffop.hpp"
#include "glam/rational.hpp"
#include "glam/serialize.hpp"

namespace glam {

/// Which algebra an expression lives in. `scalar` (λ-polynomials) and
/// `xpoly` (x-polynomials) are neutral and embed into the wider universes.
enum class Universe { scalar, xpoly, op, uea, symbol };

std::string_view universe_name(Universe u);

/// Typed syntax tree produced by parse().
struct Expr {
    enum class Kind { number, symbol, negate, add, sub, mul, pow, call };

    Kind kind = Kind::number;
    std::size_t offset = 0;
    Universe type = Universe::scalar;
    Rational number;
    /// Symbol or function name.
    std::string name;
    unsigned exponent = 0;
    std::vector<Expr> args;
};

/// A diagnostic anchored at a byte offset of the input.
class ExprError : public std::runtime_error {
public:
    ExprError(std::size_t offset, const std::string& message);
    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

class SyntaxError : public ExprError {
public:
    SyntaxError(std::size_t offset, const std::string& message, std::vector<std::string> expected);
    const std::vector<std::string>& expected() const { return expected_; }

private:
    std::vector<std::string> expected_;
};

class TypeError : public ExprError {
public:
    using ExprError::ExprError;
};

/// Grammar, loosest to tightest: `+ -`, `*` (left-assoc), unary `-`, `^ INT`.
/// Atoms: rational literals (`3`, `2/5`), `l` (λ), `x`, `d` (∂), `xi` (ξ),
/// `e0 e1 e2`, `delta`, and calls `L(field)`, `sym(a, …)`, `com(a, b)`.
/// Throws SyntaxError or TypeError.
Expr parse(std::string_view text);

/// Evaluates in the expression's own universe; neutral roots become DiffOps.
Value elaborate(const Expr& e);

/// Evaluates in `target`, which must be one of op, uea, symbol and must be
/// compatible with the expression's type. Throws TypeError otherwise.
Value elaborate_as(const Expr& e, Universe target);

/// Reads X(x)∂ (rational coefficients, first-order terms only) back as a field.
/// Throws TypeError if A is not of that shape.
PolyField as_vector_field(const DiffOp& A, std::size_t offset = 0);

}  // namespace glam
