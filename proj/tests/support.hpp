#pragma once

// Shared fixtures and independent oracles for the test binaries.

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "glam/diffop.hpp"
#include "glam/lambda_poly.hpp"
#include "glam/serialize.hpp"
#include "glam/symbol_poly.hpp"
#include "glam/uea.hpp"

namespace testing {

using namespace glam;

inline LambdaPoly lam() { return LambdaPoly::lambda(); }

inline LambdaPoly poly(std::initializer_list<const char*> ascending) {
    std::vector<Rational> cs;
    for (const char* c : ascending) cs.push_back(Rational::parse(c));
    return LambdaPoly::from_coefficients(std::move(cs));
}

inline Rational q(long p, long d = 1) { return Rational(p, d); }

inline Rational random_rational(std::mt19937& rng, int span = 5) {
    std::uniform_int_distribution<long> num(-span, span), den(1, 4);
    return Rational(num(rng), den(rng));
}

inline LambdaPoly random_lambda_poly(std::mt19937& rng, int max_degree = 2) {
    std::uniform_int_distribution<int> deg(0, max_degree);
    std::vector<Rational> cs;
    for (int i = deg(rng); i >= 0; --i) cs.push_back(random_rational(rng));
    return LambdaPoly::from_coefficients(std::move(cs));
}

inline DiffOp random_diffop(std::mt19937& rng, unsigned max_x = 4, unsigned max_d = 4, int terms = 4) {
    std::uniform_int_distribution<unsigned> xd(0, max_x), dd(0, max_d);
    std::uniform_int_distribution<int> count(1, terms);
    DiffOp A;
    for (int i = count(rng); i > 0; --i) A.add_term(random_lambda_poly(rng), xd(rng), dd(rng));
    return A;
}

inline SymbolPoly random_symbol(std::mt19937& rng, unsigned max_x = 4, unsigned max_xi = 4, int terms = 4) {
    std::uniform_int_distribution<unsigned> xd(0, max_x), pd(0, max_xi);
    std::uniform_int_distribution<int> count(1, terms);
    SymbolPoly S;
    for (int i = count(rng); i > 0; --i) S.add_term(random_lambda_poly(rng), xd(rng), pd(rng));
    return S;
}

inline Word random_word(std::mt19937& rng, unsigned max_len, unsigned min_len = 0) {
    std::uniform_int_distribution<unsigned> len(min_len, max_len), g(0, 2);
    Word w(len(rng));
    for (auto& c : w) c = static_cast<Gen>(g(rng));
    return w;
}

inline UEAElement random_uea(std::mt19937& rng, unsigned max_len = 4, int terms = 3) {
    std::uniform_int_distribution<int> count(1, terms);
    UEAElement u;
    for (int i = count(rng); i > 0; --i) u.add_term(random_lambda_poly(rng), random_word(rng, max_len));
    return u;
}

inline PolyField random_field(std::mt19937& rng, unsigned max_degree) {
    std::uniform_int_distribution<unsigned> deg(0, max_degree);
    std::vector<Rational> cs;
    for (unsigned i = 0, d = deg(rng); i <= d; ++i) cs.push_back(random_rational(rng));
    return PolyField(std::move(cs));
}

inline std::vector<std::vector<PolyField>> basis_tuples(unsigned n) {
    std::vector<std::vector<PolyField>> out;
    std::vector<unsigned> idx(n, 0);
    for (;;) {
        std::vector<PolyField> t;
        for (unsigned i : idx) t.push_back(PolyField::basis(i));
        out.push_back(std::move(t));
        unsigned i = 0;
        while (i < n && idx[i] == 2) idx[i++] = 0;
        if (i == n) break;
        ++idx[i];
    }
    return out;
}

inline Rational fact(unsigned n) {
    Rational r(1);
    for (unsigned i = 2; i <= n; ++i) r *= Rational(i);
    return r;
}

/// (X_1''⋯X_p'' X_{p+1}'⋯X_{p+m}' X_{p+m+1}⋯X_n)_+ as a full S_n sum, computed
/// over distinct derivative-order assignments weighted by p! m! (n-p-m)!.
inline XPoly symmetric_pattern(const std::vector<PolyField>& fields, unsigned p, unsigned m) {
    const unsigned n = static_cast<unsigned>(fields.size());
    std::vector<unsigned> orders(n, 0);
    for (unsigned i = 0; i < p; ++i) orders[i] = 2;
    for (unsigned i = p; i < p + m; ++i) orders[i] = 1;
    std::sort(orders.begin(), orders.end());
    XPoly total;
    do {
        XPoly prod(LambdaPoly(1));
        for (unsigned i = 0; i < n; ++i) prod = prod * fields[i].function(orders[i]);
        total += prod;
    } while (std::next_permutation(orders.begin(), orders.end()));
    return XPoly(LambdaPoly(fact(p) * fact(m) * fact(n - p - m))) * total;
}

inline SymbolPoly xi_term(const XPoly& f, const LambdaPoly& c, unsigned p) {
    return SymbolPoly::from_component(XPoly(c) * f, p);
}

}  // namespace testing

#ifdef DOCTEST_LIBRARY_INCLUDED
namespace doctest {
template <>
struct StringMaker<glam::Rational> {
    static String convert(const glam::Rational& r) { return r.str().c_str(); }
};
template <>
struct StringMaker<glam::LambdaPoly> {
    static String convert(const glam::LambdaPoly& p) { return glam::to_string(p).c_str(); }
};
template <>
struct StringMaker<glam::DiffOp> {
    static String convert(const glam::DiffOp& A) { return glam::emit(glam::Value(A), glam::OutputFormat::latex).c_str(); }
};
template <>
struct StringMaker<glam::SymbolPoly> {
    static String convert(const glam::SymbolPoly& S) { return glam::emit(glam::Value(S), glam::OutputFormat::latex).c_str(); }
};
template <>
struct StringMaker<glam::UEAElement> {
    static String convert(const glam::UEAElement& u) { return glam::emit(glam::Value(u), glam::OutputFormat::latex).c_str(); }
};
template <>
struct StringMaker<glam::XPoly> {
    static String convert(const glam::XPoly& f) {
        return glam::emit(glam::Value(glam::SymbolPoly::from_component(f, 0)), glam::OutputFormat::latex).c_str();
    }
};
}  // namespace doctest
#endif
