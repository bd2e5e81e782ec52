#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "glam/lambda_poly.hpp"
#include "glam/rational.hpp"

namespace glam {

/// Dense matrix over ℚ, row-major, sized for desk-scale exact systems.
class RationalMatrix {
public:
    RationalMatrix(std::size_t rows, std::size_t cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    void append_row(std::span<const Rational> row);

    /// Reduced row echelon form; returns the pivot column of each nonzero row.
    std::vector<std::size_t> reduce();

    std::size_t rank() const;
    /// Basis of {v : M v = 0}, one vector per free column.
    std::vector<std::vector<Rational>> nullspace() const;

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Rational> data_;
};

/// Solution set of M v = b.
struct AffineSolution {
    bool consistent = false;
    /// Dimension of the solution set when consistent.
    std::size_t dimension = 0;
    /// Some solution (free variables set to zero) when consistent.
    std::vector<Rational> particular;
};

AffineSolution solve_affine(const RationalMatrix& M, std::span<const Rational> b);

/// The unique polynomial of degree < n through the n points (xs[i], ys[i]).
/// Throws std::invalid_argument on repeated abscissae or mismatched sizes.
LambdaPoly lagrange_interpolate(std::span<const Rational> xs, std::span<const Rational> ys);

}  // namespace glam
