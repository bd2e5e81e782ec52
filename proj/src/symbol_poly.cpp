#include "glam/symbol_poly.hpp"

namespace glam {

SymbolPoly SymbolPoly::monomial(const LambdaPoly& c, unsigned xpow, unsigned xipow) {
    SymbolPoly S;
    S.add_term(c, xpow, xipow);
    return S;
}

SymbolPoly SymbolPoly::from_component(const XPoly& f, unsigned xipow) {
    SymbolPoly S;
    auto cs = f.coefficients();
    for (std::size_t m = 0; m < cs.size(); ++m) S.add_term(cs[m], static_cast<unsigned>(m), xipow);
    return S;
}

LambdaPoly SymbolPoly::coefficient(unsigned xpow, unsigned xipow) const {
    auto it = terms_.find({xpow, xipow});
    return it == terms_.end() ? LambdaPoly() : it->second;
}

XPoly SymbolPoly::component(unsigned xipow) const {
    XPoly f;
    for (const auto& [key, c] : terms_)
        if (key.xipow == xipow) f += XPoly::monomial(c, key.xpow);
    return f;
}

int SymbolPoly::xi_degree() const { return terms_.empty() ? -1 : static_cast<int>(terms_.begin()->first.xipow); }

void SymbolPoly::add_term(const LambdaPoly& c, unsigned xpow, unsigned xipow) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace({xpow, xipow}, c);
    if (inserted) return;
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

SymbolPoly SymbolPoly::specialize(const Rational& lambda) const {
    SymbolPoly r;
    for (const auto& [key, c] : terms_) r.add_term(c.eval(lambda), key.xpow, key.xipow);
    return r;
}

SymbolPoly& SymbolPoly::operator+=(const SymbolPoly& o) {
    for (const auto& [key, c] : o.terms_) add_term(c, key.xpow, key.xipow);
    return *this;
}

SymbolPoly& SymbolPoly::operator-=(const SymbolPoly& o) {
    for (const auto& [key, c] : o.terms_) add_term(-c, key.xpow, key.xipow);
    return *this;
}

SymbolPoly SymbolPoly::operator-() const {
    SymbolPoly r = *this;
    for (auto& [key, c] : r.terms_) c = -c;
    return r;
}

SymbolPoly operator*(const SymbolPoly& a, const SymbolPoly& b) {
    SymbolPoly r;
    for (const auto& [ka, ca] : a.terms_)
        for (const auto& [kb, cb] : b.terms_) r.add_term(ca * cb, ka.xpow + kb.xpow, ka.xipow + kb.xipow);
    return r;
}

SymbolPoly operator*(const LambdaPoly& c, const SymbolPoly& S) {
    SymbolPoly r;
    if (c.is_zero()) return r;
    for (const auto& [key, v] : S.terms_) r.add_term(c * v, key.xpow, key.xipow);
    return r;
}

}  // namespace glam
