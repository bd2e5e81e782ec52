#include "glam/serialize.hpp"

#include <sstream>
#include <stdexcept>
#include <vector>

namespace glam {

Json to_json(const LambdaPoly& p) {
    Json arr = Json::array();
    for (const auto& c : p.coefficients()) arr.push_back(c.str());
    return arr;
}

Json to_json(const DiffOp& A) {
    Json terms = Json::array();
    for (const auto& [key, c] : A.terms()) {
        Json t;
        t["x"] = key.xpow;
        t["d"] = key.dpow;
        t["coeff"] = to_json(c);
        terms.push_back(std::move(t));
    }
    Json j;
    j["type"] = "diffop";
    j["terms"] = std::move(terms);
    return j;
}

Json to_json(const SymbolPoly& S) {
    Json terms = Json::array();
    for (const auto& [key, c] : S.terms()) {
        Json t;
        t["x"] = key.xpow;
        t["xi"] = key.xipow;
        t["coeff"] = to_json(c);
        terms.push_back(std::move(t));
    }
    Json j;
    j["type"] = "symbol";
    j["terms"] = std::move(terms);
    return j;
}

Json to_json(const UEAElement& u) {
    Json terms = Json::array();
    for (const auto& [w, c] : u.terms()) {
        Json t;
        t["word"] = word_to_string(w);
        t["coeff"] = to_json(c);
        terms.push_back(std::move(t));
    }
    Json j;
    j["type"] = "uea";
    j["terms"] = std::move(terms);
    return j;
}

Json to_json(const Value& v) {
    return std::visit([](const auto& x) { return to_json(x); }, v);
}

namespace {

const Json& field(const Json& j, const char* name) {
    if (!j.is_object() || !j.contains(name)) throw std::invalid_argument(std::string("missing field '") + name + "'");
    return j.at(name);
}

unsigned exponent(const Json& j, const char* name) {
    const Json& v = field(j, name);
    if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0))
        throw std::invalid_argument(std::string("field '") + name + "' must be a nonnegative integer");
    return v.get<unsigned>();
}

const Json& terms_of(const Json& j, const char* type) {
    const Json& t = field(j, "type");
    if (!t.is_string() || t.get<std::string>() != type)
        throw std::invalid_argument(std::string("expected type '") + type + "'");
    const Json& terms = field(j, "terms");
    if (!terms.is_array()) throw std::invalid_argument("'terms' must be an array");
    return terms;
}

}  // namespace

LambdaPoly lambda_poly_from_json(const Json& j) {
    if (!j.is_array()) throw std::invalid_argument("LambdaPoly must be a JSON array");
    std::vector<Rational> cs;
    for (const auto& c : j) {
        if (!c.is_string()) throw std::invalid_argument("LambdaPoly coefficients must be strings");
        cs.push_back(Rational::parse(c.get<std::string>()));
    }
    return LambdaPoly::from_coefficients(std::move(cs));
}

DiffOp diffop_from_json(const Json& j) {
    DiffOp A;
    for (const auto& t : terms_of(j, "diffop"))
        A.add_term(lambda_poly_from_json(field(t, "coeff")), exponent(t, "x"), exponent(t, "d"));
    return A;
}

SymbolPoly symbol_from_json(const Json& j) {
    SymbolPoly S;
    for (const auto& t : terms_of(j, "symbol"))
        S.add_term(lambda_poly_from_json(field(t, "coeff")), exponent(t, "x"), exponent(t, "xi"));
    return S;
}

UEAElement uea_from_json(const Json& j) {
    UEAElement u;
    for (const auto& t : terms_of(j, "uea")) {
        const Json& w = field(t, "word");
        if (!w.is_string()) throw std::invalid_argument("'word' must be a string");
        u.add_term(lambda_poly_from_json(field(t, "coeff")), word_from_string(w.get<std::string>()));
    }
    return u;
}

Value value_from_json(const Json& j) {
    const Json& t = field(j, "type");
    if (t == "diffop") return diffop_from_json(j);
    if (t == "symbol") return symbol_from_json(j);
    if (t == "uea") return uea_from_json(j);
    throw std::invalid_argument("unknown value type");
}

std::string dump(const Json& j) { return j.dump(); }

namespace {

std::string latex_rational(const Rational& r) {
    // magnitude only
    const Rational a = r.abs();
    if (a.is_integer()) return a.str();
    return "\\frac{" + a.numerator().get_str() + "}{" + a.denominator().get_str() + "}";
}

std::string latex_power(const char* base, unsigned k) {
    if (k == 0) return "";
    if (k == 1) return base;
    return std::string(base) + "^{" + std::to_string(k) + "}";
}

// One summand; the sign is rendered by join_terms.
struct LatexTerm {
    bool negative = false;
    std::string body;
};

std::string join_terms(const std::vector<LatexTerm>& terms) {
    if (terms.empty()) return "0";
    std::string out;
    for (std::size_t i = 0; i < terms.size(); ++i) {
        if (i == 0)
            out += terms[i].negative ? "-" : "";
        else
            out += terms[i].negative ? " - " : " + ";
        out += terms[i].body;
    }
    return out;
}

// Combines a LambdaPoly coefficient with a monomial string.
LatexTerm scaled_term(const LambdaPoly& c, const std::string& monomial) {
    if (c.term_count() > 1) return {false, "(" + to_latex(c) + ")" + monomial};
    std::size_t k = 0;
    while (c.coefficient(k).is_zero()) ++k;
    const Rational r = c.coefficient(k);
    std::string body;
    const std::string lam = latex_power("\\lambda", static_cast<unsigned>(k));
    const bool unit = r.abs() == Rational(1);
    if (!unit || (lam.empty() && monomial.empty())) body += latex_rational(r);
    body += lam + monomial;
    return {r.sign() < 0, body};
}

}  // namespace

std::string to_latex(const LambdaPoly& p) {
    std::vector<LatexTerm> terms;
    auto cs = p.coefficients();
    for (std::size_t k = cs.size(); k-- > 0;) {
        if (cs[k].is_zero()) continue;
        const std::string lam = latex_power("\\lambda", static_cast<unsigned>(k));
        std::string body = (cs[k].abs() == Rational(1) && !lam.empty()) ? "" : latex_rational(cs[k]);
        terms.push_back({cs[k].sign() < 0, body + lam});
    }
    return join_terms(terms);
}

std::string to_latex(const DiffOp& A) {
    std::vector<LatexTerm> terms;
    for (const auto& [key, c] : A.terms())
        terms.push_back(scaled_term(c, latex_power("x", key.xpow) + latex_power("\\partial", key.dpow)));
    return join_terms(terms);
}

std::string to_latex(const SymbolPoly& S) {
    std::vector<LatexTerm> terms;
    for (const auto& [key, c] : S.terms())
        terms.push_back(scaled_term(c, latex_power("x", key.xpow) + latex_power("\\xi", key.xipow)));
    return join_terms(terms);
}

std::string to_latex(const UEAElement& u) {
    std::vector<LatexTerm> terms;
    for (const auto& [w, c] : u.terms()) {
        std::string mono;
        for (Gen g : w) mono += "e_{" + std::to_string(static_cast<int>(g)) + "}";
        terms.push_back(scaled_term(c, mono));
    }
    return join_terms(terms);
}

std::string emit(const Value& v, OutputFormat format) {
    if (format == OutputFormat::json) return dump(to_json(v));
    return std::visit([](const auto& x) { return to_latex(x); }, v);
}

std::string emit(const LambdaPoly& p, OutputFormat format) {
    return format == OutputFormat::json ? dump(to_json(p)) : to_latex(p);
}

}  // namespace glam
