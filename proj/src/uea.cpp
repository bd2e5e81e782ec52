#include "glam/uea.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace glam {

std::string word_to_string(const Word& w) {
    std::string s;
    s.reserve(2 * w.size());
    for (Gen g : w) {
        s += 'e';
        s += static_cast<char>('0' + static_cast<int>(g));
    }
    return s;
}

Word word_from_string(const std::string& s) {
    if (s.size() % 2 != 0) throw std::invalid_argument("malformed word: '" + s + "'");
    Word w;
    for (std::size_t i = 0; i < s.size(); i += 2) {
        if (s[i] != 'e' || s[i + 1] < '0' || s[i + 1] > '2') throw std::invalid_argument("malformed word: '" + s + "'");
        w.push_back(static_cast<Gen>(s[i + 1] - '0'));
    }
    return w;
}

UEAElement UEAElement::scalar(const LambdaPoly& c) { return word({}, c); }

UEAElement UEAElement::generator(Gen g) { return word({g}); }

UEAElement UEAElement::word(Word w, const LambdaPoly& c) {
    UEAElement u;
    u.add_term(c, w);
    return u;
}

LambdaPoly UEAElement::coefficient(const Word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? LambdaPoly() : it->second;
}

int UEAElement::max_length() const {
    int n = -1;
    for (const auto& [w, c] : terms_) n = std::max(n, static_cast<int>(w.size()));
    return n;
}

bool UEAElement::is_pbw_normal() const {
    return std::all_of(terms_.begin(), terms_.end(),
                       [](const auto& t) { return std::is_sorted(t.first.begin(), t.first.end()); });
}

void UEAElement::add_term(const LambdaPoly& c, const Word& w) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(w, c);
    if (inserted) return;
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

UEAElement UEAElement::specialize(const Rational& lambda) const {
    UEAElement r;
    for (const auto& [w, c] : terms_) r.add_term(c.eval(lambda), w);
    return r;
}

UEAElement& UEAElement::operator+=(const UEAElement& o) {
    for (const auto& [w, c] : o.terms_) add_term(c, w);
    return *this;
}

UEAElement& UEAElement::operator-=(const UEAElement& o) {
    for (const auto& [w, c] : o.terms_) add_term(-c, w);
    return *this;
}

UEAElement UEAElement::operator-() const {
    UEAElement r = *this;
    for (auto& [w, c] : r.terms_) c = -c;
    return r;
}

UEAElement operator*(const UEAElement& u, const UEAElement& v) {
    UEAElement r;
    for (const auto& [wu, cu] : u.terms_) {
        for (const auto& [wv, cv] : v.terms_) {
            Word w = wu;
            w.insert(w.end(), wv.begin(), wv.end());
            r.add_term(cu * cv, w);
        }
    }
    return r;
}

UEAElement operator*(const LambdaPoly& c, const UEAElement& u) {
    UEAElement r;
    if (c.is_zero()) return r;
    for (const auto& [w, v] : u.terms_) r.add_term(c * v, w);
    return r;
}

UEAElement pbw_normalize(const UEAElement& u) {
    // Each rewrite either removes an inversion or shortens the word, so the
    // pending set drains.
    UEAElement done;
    std::map<Word, LambdaPoly> pending(u.terms().begin(), u.terms().end());
    auto push = [&pending](const Word& w, const LambdaPoly& c) {
        auto [it, inserted] = pending.try_emplace(w, c);
        if (inserted) return;
        it->second += c;
        if (it->second.is_zero()) pending.erase(it);
    };
    while (!pending.empty()) {
        auto node = pending.extract(pending.begin());
        const Word& w = node.key();
        const LambdaPoly& c = node.mapped();
        auto it = std::adjacent_find(w.begin(), w.end(), [](Gen a, Gen b) { return a > b; });
        if (it == w.end()) {
            done.add_term(c, w);
            continue;
        }
        const auto pos = static_cast<std::size_t>(it - w.begin());
        const int j = static_cast<int>(w[pos]);
        const int i = static_cast<int>(w[pos + 1]);
        Word swapped = w;
        std::swap(swapped[pos], swapped[pos + 1]);
        push(swapped, c);
        // [e_i, e_j] = (j - i) e_{i+j-1}
        Word shorter(w.begin(), w.begin() + pos);
        shorter.push_back(static_cast<Gen>(i + j - 1));
        shorter.insert(shorter.end(), w.begin() + pos + 2, w.end());
        push(shorter, -(LambdaPoly(j - i) * c));
    }
    return done;
}

UEAElement casimir() {
    const LambdaPoly half(Rational(1, 2));
    UEAElement d = UEAElement::word({Gen::e1, Gen::e1});
    d -= UEAElement::word({Gen::e0, Gen::e2}, half);
    d -= UEAElement::word({Gen::e2, Gen::e0}, half);
    return d;
}

UEAElement casimir_ideal_generator() {
    const LambdaPoly l = LambdaPoly::lambda();
    return casimir() - UEAElement::scalar(l * (l - LambdaPoly(1)));
}

UEAElement symmetrize_word(std::span<const Gen> gens) {
    if (gens.empty()) throw std::invalid_argument("symmetrize_word: empty input");
    std::vector<std::size_t> idx(gens.size());
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    UEAElement out;
    do {
        Word w;
        w.reserve(idx.size());
        for (auto i : idx) w.push_back(gens[i]);
        out.add_term(LambdaPoly(1), w);
    } while (std::next_permutation(idx.begin(), idx.end()));
    return out;
}

namespace {

const DiffOp& generator_image(Gen g) {
    static const DiffOp images[3] = {
        lie_derivative(PolyField::basis(0)),
        lie_derivative(PolyField::basis(1)),
        lie_derivative(PolyField::basis(2)),
    };
    return images[static_cast<int>(g)];
}

}  // namespace

DiffOp embed(const UEAElement& u) {
    DiffOp out;
    for (const auto& [w, c] : u.terms()) {
        DiffOp term = DiffOp::scalar(c);
        for (Gen g : w) term = compose(term, generator_image(g));
        out += term;
    }
    return out;
}

bool kernel_test(const UEAElement& u) { return embed(u).is_zero(); }

DiffOp gl_bracket_image(const UEAElement& u, const UEAElement& v) { return commutator(embed(u), embed(v)); }

SymbolPoly symbol_projection(const UEAElement& u) {
    SymbolPoly S;
    const int n = u.max_length();
    if (n < 0) return S;
    for (const auto& [w, c] : u.terms()) {
        if (static_cast<int>(w.size()) != n) continue;
        unsigned xpow = 0;
        for (Gen g : w) xpow += static_cast<unsigned>(g);
        S.add_term(c, xpow, static_cast<unsigned>(n));
    }
    return S;
}

}  // namespace glam
