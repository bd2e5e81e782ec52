#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "glam/diffop.hpp"
#include "glam/lambda_poly.hpp"
#include "glam/symbol_poly.hpp"

namespace glam {

/// Generators of sl2, realized as e_i = x^i ∂.
enum class Gen : std::uint8_t { e0 = 0, e1 = 1, e2 = 2 };

using Word = std::vector<Gen>;

/// "e0e1e2"; the empty word is "".
std::string word_to_string(const Word& w);
/// Inverse of word_to_string. Throws std::invalid_argument.
Word word_from_string(const std::string& s);

/// Element of U(sl2): a LambdaPoly-linear combination of words in e0, e1, e2.
/// Words are kept as written; use pbw_normalize for the ordered basis.
class UEAElement {
public:
    using TermMap = std::map<Word, LambdaPoly>;

    UEAElement() = default;

    static UEAElement scalar(const LambdaPoly& c);
    static UEAElement generator(Gen g);
    static UEAElement word(Word w, const LambdaPoly& c = LambdaPoly(1));

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    LambdaPoly coefficient(const Word& w) const;
    /// Longest word length, -1 for zero.
    int max_length() const;
    /// Every word is of the shape e0^a e1^b e2^c.
    bool is_pbw_normal() const;

    void add_term(const LambdaPoly& c, const Word& w);
    UEAElement specialize(const Rational& lambda) const;

    UEAElement& operator+=(const UEAElement& o);
    UEAElement& operator-=(const UEAElement& o);
    friend UEAElement operator+(UEAElement a, const UEAElement& b) { return a += b; }
    friend UEAElement operator-(UEAElement a, const UEAElement& b) { return a -= b; }
    UEAElement operator-() const;
    /// Bilinear extension of word concatenation.
    friend UEAElement operator*(const UEAElement& u, const UEAElement& v);
    friend UEAElement operator*(const LambdaPoly& c, const UEAElement& u);

    friend bool operator==(const UEAElement&, const UEAElement&) = default;

private:
    TermMap terms_;
};

/// Rewrites out-of-order pairs e_j e_i (j > i) as e_i e_j - [e_i, e_j] until
/// every word is PBW-ordered under e0 < e1 < e2.
UEAElement pbw_normalize(const UEAElement& u);

/// Δ = e1 e1 - ½ e0 e2 - ½ e2 e0, in word form.
UEAElement casimir();

/// Δ - λ(λ - 1).
UEAElement casimir_ideal_generator();

/// (X_1 ⋯ X_n)_+ : the sum over all n! permutation words. Throws on empty input.
UEAElement symmetrize_word(std::span<const Gen> gens);

/// The unital homomorphism U(sl2) → D_λ sending e_i to L_{e_i} (symbolic λ).
DiffOp embed(const UEAElement& u);

/// Whether u lies in the kernel of embed.
bool kernel_test(const UEAElement& u);

/// The gl(λ) bracket computed in the image: [embed(u), embed(v)].
DiffOp gl_bracket_image(const UEAElement& u, const UEAElement& v);

/// Principal-symbol projection through S(sl2): the top-length words, each
/// e_{i1}⋯e_{in} sent to x^{i1+⋯+in} ξ^n.
SymbolPoly symbol_projection(const UEAElement& u);

}  // namespace glam
