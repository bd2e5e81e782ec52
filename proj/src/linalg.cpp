#include "glam/linalg.hpp"

#include <stdexcept>

namespace glam {

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

void RationalMatrix::append_row(std::span<const Rational> row) {
    if (row.size() != cols_) throw std::invalid_argument("append_row: width mismatch");
    data_.insert(data_.end(), row.begin(), row.end());
    ++rows_;
}

std::vector<std::size_t> RationalMatrix::reduce() {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
        std::size_t p = r;
        while (p < rows_ && (*this)(p, c).is_zero()) ++p;
        if (p == rows_) continue;
        if (p != r)
            for (std::size_t k = 0; k < cols_; ++k) std::swap((*this)(p, k), (*this)(r, k));
        const Rational inv = Rational(1) / (*this)(r, c);
        for (std::size_t k = c; k < cols_; ++k) (*this)(r, k) *= inv;
        for (std::size_t i = 0; i < rows_; ++i) {
            if (i == r || (*this)(i, c).is_zero()) continue;
            const Rational f = (*this)(i, c);
            for (std::size_t k = c; k < cols_; ++k) (*this)(i, k) -= f * (*this)(r, k);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

std::size_t RationalMatrix::rank() const {
    RationalMatrix copy = *this;
    return copy.reduce().size();
}

std::vector<std::vector<Rational>> RationalMatrix::nullspace() const {
    RationalMatrix red = *this;
    const auto pivots = red.reduce();
    std::vector<bool> is_pivot(cols_, false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<std::vector<Rational>> basis;
    for (std::size_t f = 0; f < cols_; ++f) {
        if (is_pivot[f]) continue;
        std::vector<Rational> v(cols_);
        v[f] = Rational(1);
        for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -red(i, f);
        basis.push_back(std::move(v));
    }
    return basis;
}

AffineSolution solve_affine(const RationalMatrix& M, std::span<const Rational> b) {
    if (b.size() != M.rows()) throw std::invalid_argument("solve_affine: right-hand side size mismatch");
    RationalMatrix aug(M.rows(), M.cols() + 1);
    for (std::size_t i = 0; i < M.rows(); ++i) {
        for (std::size_t j = 0; j < M.cols(); ++j) aug(i, j) = M(i, j);
        aug(i, M.cols()) = b[i];
    }
    const auto pivots = aug.reduce();
    AffineSolution sol;
    if (!pivots.empty() && pivots.back() == M.cols()) return sol;
    sol.consistent = true;
    sol.dimension = M.cols() - pivots.size();
    sol.particular.assign(M.cols(), Rational(0));
    for (std::size_t i = 0; i < pivots.size(); ++i) sol.particular[pivots[i]] = aug(i, M.cols());
    return sol;
}

LambdaPoly lagrange_interpolate(std::span<const Rational> xs, std::span<const Rational> ys) {
    if (xs.size() != ys.size()) throw std::invalid_argument("lagrange_interpolate: size mismatch");
    LambdaPoly result;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        LambdaPoly basis(1);
        Rational denom(1);
        for (std::size_t j = 0; j < xs.size(); ++j) {
            if (j == i) continue;
            if (xs[i] == xs[j]) throw std::invalid_argument("lagrange_interpolate: repeated abscissa");
            basis *= LambdaPoly::from_coefficients({-xs[j], Rational(1)});
            denom *= xs[i] - xs[j];
        }
        result += LambdaPoly(ys[i] / denom) * basis;
    }
    return result;
}

}  // namespace glam
