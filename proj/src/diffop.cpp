#include "glam/diffop.hpp"

#include <stdexcept>

#include "glam/combinatorics.hpp"

namespace glam {

PolyField::PolyField(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

PolyField PolyField::basis(unsigned i) {
    if (i > 2) throw std::invalid_argument("sl2 basis index must be 0, 1 or 2");
    return monomial(Rational(1), i);
}

PolyField PolyField::monomial(const Rational& c, unsigned xpow) {
    std::vector<Rational> cs(xpow + 1);
    cs[xpow] = c;
    return PolyField(std::move(cs));
}

XPoly PolyField::function(unsigned k) const {
    std::vector<LambdaPoly> cs;
    cs.reserve(coeffs_.size());
    for (const auto& c : coeffs_) cs.emplace_back(c);
    return XPoly::from_coefficients(std::move(cs)).derivative(k);
}

PolyField bracket(const PolyField& X, const PolyField& Y) {
    XPoly v = X.function() * Y.function(1) - X.function(1) * Y.function();
    std::vector<Rational> cs;
    for (const auto& c : v.coefficients()) cs.push_back(c.coefficient(0));
    return PolyField(std::move(cs));
}

PolyField& PolyField::operator+=(const PolyField& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
}

PolyField operator*(const Rational& c, const PolyField& X) {
    PolyField r = X;
    for (auto& v : r.coeffs_) v *= c;
    r.trim();
    return r;
}

void PolyField::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

DiffOp DiffOp::identity() { return scalar(LambdaPoly(1)); }

DiffOp DiffOp::scalar(const LambdaPoly& c) { return monomial(c, 0, 0); }

DiffOp DiffOp::monomial(const LambdaPoly& c, unsigned xpow, unsigned dpow) {
    DiffOp A;
    A.add_term(c, xpow, dpow);
    return A;
}

DiffOp DiffOp::multiplication(const XPoly& f) {
    DiffOp A;
    auto cs = f.coefficients();
    for (std::size_t m = 0; m < cs.size(); ++m) A.add_term(cs[m], static_cast<unsigned>(m), 0);
    return A;
}

LambdaPoly DiffOp::coefficient(unsigned xpow, unsigned dpow) const {
    auto it = terms_.find({xpow, dpow});
    return it == terms_.end() ? LambdaPoly() : it->second;
}

XPoly DiffOp::coefficient_function(unsigned dpow) const {
    XPoly f;
    for (const auto& [key, c] : terms_)
        if (key.dpow == dpow) f += XPoly::monomial(c, key.xpow);
    return f;
}

int DiffOp::order() const {
    return terms_.empty() ? kZeroOrder : static_cast<int>(terms_.begin()->first.dpow);
}

void DiffOp::add_term(const LambdaPoly& c, unsigned xpow, unsigned dpow) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace({xpow, dpow}, c);
    if (inserted) return;
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

DiffOp DiffOp::specialize(const Rational& lambda) const {
    DiffOp r;
    for (const auto& [key, c] : terms_) r.add_term(c.eval(lambda), key.xpow, key.dpow);
    return r;
}

DiffOp& DiffOp::operator+=(const DiffOp& o) {
    for (const auto& [key, c] : o.terms_) add_term(c, key.xpow, key.dpow);
    return *this;
}

DiffOp& DiffOp::operator-=(const DiffOp& o) {
    for (const auto& [key, c] : o.terms_) add_term(-c, key.xpow, key.dpow);
    return *this;
}

DiffOp DiffOp::operator-() const {
    DiffOp r = *this;
    for (auto& [key, c] : r.terms_) c = -c;
    return r;
}

DiffOp operator*(const LambdaPoly& c, const DiffOp& A) {
    DiffOp r;
    if (c.is_zero()) return r;
    for (const auto& [key, v] : A.terms_) r.add_term(c * v, key.xpow, key.dpow);
    return r;
}

DiffOp compose(const DiffOp& A, const DiffOp& B) {
    DiffOp out;
    for (const auto& [ka, ca] : A.terms()) {
        for (const auto& [kb, cb] : B.terms()) {
            LambdaPoly c = ca * cb;
            const unsigned n = ka.dpow;
            const unsigned m = kb.xpow;
            const unsigned kmax = std::min(n, m);
            for (unsigned k = 0; k <= kmax; ++k) {
                mpz_class w = binomial(n, k) * factorial(m) / factorial(m - k);
                out.add_term(c * LambdaPoly(Rational(w)), ka.xpow + m - k, n - k + kb.dpow);
            }
        }
    }
    return out;
}

DiffOp commutator(const DiffOp& A, const DiffOp& B) { return compose(A, B) - compose(B, A); }

DiffOp lie_derivative(const PolyField& X) { return lie_derivative(X, LambdaPoly::lambda()); }

DiffOp lie_derivative(const PolyField& X, const LambdaPoly& weight) {
    DiffOp L;
    auto cs = X.coefficients();
    for (std::size_t m = 0; m < cs.size(); ++m) {
        L.add_term(LambdaPoly(cs[m]), static_cast<unsigned>(m), 1);
        if (m > 0) L.add_term(weight * LambdaPoly(cs[m] * Rational(m)), static_cast<unsigned>(m - 1), 0);
    }
    return L;
}

DiffOp adjoint_action(const PolyField& X, const DiffOp& A) { return commutator(lie_derivative(X), A); }

namespace {

// Depth-first walk over orderings so that shared prefixes are composed once.
void accumulate_orderings(std::span<const DiffOp> ops, std::vector<bool>& used, const DiffOp& prefix,
                          std::size_t depth, DiffOp& total) {
    if (depth == ops.size()) {
        total += prefix;
        return;
    }
    for (std::size_t i = 0; i < ops.size(); ++i) {
        if (used[i]) continue;
        used[i] = true;
        accumulate_orderings(ops, used, compose(prefix, ops[i]), depth + 1, total);
        used[i] = false;
    }
}

}  // namespace

DiffOp symmetrized_product(std::span<const DiffOp> ops) {
    if (ops.empty()) throw std::invalid_argument("symmetrized_product: empty sequence");
    std::vector<bool> used(ops.size(), false);
    DiffOp total;
    accumulate_orderings(ops, used, DiffOp::identity(), 0, total);
    return total;
}

DensityPoly apply_to_density(const DiffOp& A, const DensityPoly& f) {
    DensityPoly out;
    for (const auto& [key, c] : A.terms()) out += XPoly::monomial(c, key.xpow) * f.derivative(key.dpow);
    return out;
}

}  // namespace glam
