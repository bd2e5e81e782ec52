#include "glam/xpoly.hpp"

#include "glam/combinatorics.hpp"

namespace glam {

XPoly::XPoly(const LambdaPoly& c) {
    if (!c.is_zero()) coeffs_.push_back(c);
}

XPoly XPoly::monomial(const LambdaPoly& c, unsigned xpow) {
    XPoly p;
    if (c.is_zero()) return p;
    p.coeffs_.resize(xpow + 1);
    p.coeffs_[xpow] = c;
    return p;
}

XPoly XPoly::from_coefficients(std::vector<LambdaPoly> coeffs) {
    XPoly p;
    p.coeffs_ = std::move(coeffs);
    p.trim();
    return p;
}

LambdaPoly XPoly::coefficient(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : LambdaPoly(); }

XPoly XPoly::derivative(unsigned k) const {
    if (coeffs_.size() <= k) return {};
    std::vector<LambdaPoly> out(coeffs_.size() - k);
    for (std::size_t i = k; i < coeffs_.size(); ++i) {
        // d^k/dx^k x^i = i!/(i-k)! x^(i-k)
        mpz_class falling = factorial(static_cast<unsigned>(i)) / factorial(static_cast<unsigned>(i - k));
        out[i - k] = coeffs_[i] * LambdaPoly(Rational(falling));
    }
    return from_coefficients(std::move(out));
}

LambdaPoly XPoly::eval_at(const Rational& x) const {
    LambdaPoly acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * LambdaPoly(x) + *it;
    return acc;
}

XPoly XPoly::specialize(const Rational& lambda) const {
    std::vector<LambdaPoly> out;
    out.reserve(coeffs_.size());
    for (const auto& c : coeffs_) out.emplace_back(c.eval(lambda));
    return from_coefficients(std::move(out));
}

XPoly& XPoly::operator+=(const XPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
}

XPoly& XPoly::operator-=(const XPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
}

XPoly operator*(const XPoly& a, const XPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<LambdaPoly> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return XPoly::from_coefficients(std::move(out));
}

XPoly XPoly::operator-() const {
    XPoly r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

void XPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

}  // namespace glam
