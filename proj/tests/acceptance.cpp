// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "glam/cli.hpp"
#include "glam/combinatorics.hpp"
#include "glam/glambda.hpp"
#include "glam/solvers.hpp"
#include "glam/symbol_map.hpp"
#include "support.hpp"

using namespace testing;

namespace {

struct Outcome {
    bool ok = true;
    std::string note;

    void require(bool cond, const std::string& what) {
        if (cond) return;
        if (ok || note.size() < 400) note += (note.empty() ? "" : "; ") + what;
        ok = false;
    }
};

std::vector<DiffOp> lie_derivatives(const std::vector<PolyField>& fields) {
    std::vector<DiffOp> ops;
    for (const auto& X : fields) ops.push_back(lie_derivative(X));
    return ops;
}

// Reference symbols for n = 1..5, written out with the test-side pattern oracle.
SymbolPoly reference_symbol(const std::vector<PolyField>& X) {
    const LambdaPoly l = lam();
    const unsigned n = static_cast<unsigned>(X.size());
    auto P = [&](unsigned p, unsigned m) { return symmetric_pattern(X, p, m); };
    const XPoly top = P(0, 0);
    switch (n) {
        case 1:
            return SymbolPoly::from_component(top, 1);
        case 2:
            return SymbolPoly::from_component(top, 2) +
                   xi_term(P(0, 2) - XPoly(LambdaPoly(2)) * P(1, 0), Rational(1, 3) * l * (l - 1), 0);
        case 3:
            return SymbolPoly::from_component(top, 3) +
                   xi_term(P(0, 2) - XPoly(LambdaPoly(2)) * P(1, 0), Rational(1, 5) * (3 * l * l - 3 * l - 1), 1);
        case 4:
            return SymbolPoly::from_component(top, 4) +
                   xi_term(P(0, 2) - XPoly(LambdaPoly(2)) * P(1, 0), Rational(1, 7) * (6 * l * l - 6 * l - 5), 2) +
                   xi_term(P(0, 4) - XPoly(LambdaPoly(4)) * P(1, 2) + XPoly(LambdaPoly(4)) * P(2, 0),
                           Rational(1, 15) * l * (l - 1) * (3 * l * l - 3 * l - 1), 0);
        case 5:
            return SymbolPoly::from_component(top, 5) +
                   xi_term(P(0, 2) - XPoly(LambdaPoly(2)) * P(1, 0), Rational(5, 9) * (2 * l * l - 2 * l - 3), 3) +
                   xi_term(P(0, 4) - XPoly(LambdaPoly(4)) * P(1, 2) + XPoly(LambdaPoly(4)) * P(2, 0),
                           Rational(1, 7) * (3 * l * l * l * l - 6 * l * l * l + 3 * l + 1), 1);
    }
    throw std::logic_error("no reference symbol for this order");
}

Outcome closed_form_symbols() {
    Outcome o;
    std::size_t total = 0, matched = 0;
    for (unsigned n = 1; n <= 5; ++n)
        for (const auto& t : basis_tuples(n)) {
            ++total;
            const bool eq = sigma(symmetrized_product(lie_derivatives(t))) == reference_symbol(t);
            matched += eq;
            o.require(eq, "mismatch at n=" + std::to_string(n));
        }
    o.require(total == 363, "expected 363 tuples");
    o.note = std::to_string(matched) + "/" + std::to_string(total) + " tuples" + (o.note.empty() ? "" : "; " + o.note);
    return o;
}

Outcome pnk_table() {
    Outcome o;
    const LambdaPoly l = lam();
    o.require(pnk_polynomial(2, 2) == Rational(1, 3) * l * (l - 1), "P(2,2)");
    o.require(pnk_polynomial(3, 2) == Rational(1, 5) * (3 * l * l - 3 * l - 1), "P(3,2)");
    o.require(pnk_polynomial(4, 2) == Rational(1, 7) * (6 * l * l - 6 * l - 5), "P(4,2)");
    o.require(pnk_polynomial(4, 4) == Rational(1, 15) * l * (l - 1) * (3 * l * l - 3 * l - 1), "P(4,4)");
    o.require(pnk_polynomial(5, 2) == Rational(5, 9) * (2 * l * l - 2 * l - 3), "P(5,2)");
    o.require(pnk_polynomial(5, 4) == Rational(1, 7) * (3 * l * l * l * l - 6 * l * l * l + 3 * l + 1), "P(5,4)");
    for (unsigned n = 1; n <= 8; ++n) o.require(pnk_polynomial(n, 0) == LambdaPoly(1), "P(n,0) at n=" + std::to_string(n));
    return o;
}

Outcome casimir_kernel() {
    Outcome o;
    const LambdaPoly l = lam();
    o.require(embed(casimir()) == DiffOp::scalar(l * l - l), "image of the Casimir");
    const UEAElement g = casimir_ideal_generator();
    o.require(kernel_test(g), "Casimir ideal generator not in kernel");
    std::mt19937 rng(1001);
    for (int i = 0; i < 50; ++i) {
        const UEAElement w = UEAElement::word(random_word(rng, 3));
        o.require(kernel_test(w * g) && kernel_test(g * w), "ideal product not in kernel");
    }
    for (unsigned i = 0; i <= 2; ++i)
        o.require(!kernel_test(UEAElement::generator(static_cast<Gen>(i))), "generator in kernel");
    return o;
}

Outcome symbol_map_uniqueness() {
    Outcome o;
    for (unsigned n = 1; n <= 4; ++n) {
        const auto s = solve_equivariant_symbol_maps(n, true);
        const std::string tag = " at n=" + std::to_string(n);
        o.require(s.consistent && s.dimension == 0 && s.table.has_value(), "normalized solution not unique" + tag);
        if (s.table)
            for (unsigned j = 0; j <= n; ++j)
                for (unsigned p = 0; p <= j; ++p)
                    o.require(s.table->at(p, j) == alpha_coefficient(p, j), "alpha table differs" + tag);
        o.require(solve_equivariant_symbol_maps(n, false).dimension == n + 1, "unnormalized dimension" + tag);
    }
    return o;
}

Outcome invariant_operator_table() {
    // As stated: dimension 1 exactly for even k = mu + n with 0 <= k <= 2n.
    Outcome o;
    std::string failing;
    for (unsigned n = 1; n <= 4; ++n)
        for (int mu = -static_cast<int>(n); mu <= static_cast<int>(n); ++mu) {
            const int k = mu + static_cast<int>(n);
            const bool expect_one = k % 2 == 0 && k >= 0 && k <= 2 * static_cast<int>(n);
            const auto s = solve_invariant_operators(n, mu);
            const bool dim_ok = s.dimension == (expect_one ? 1u : 0u);
            bool basis_ok = true;
            if (dim_ok && expect_one) {
                const auto betas = s.constant_betas();
                basis_ok = s.betas_constant();
                for (std::size_t i = 0; i < betas.size() && basis_ok; ++i) {
                    const unsigned p = s.patterns[i].second;
                    Rational expected(binomial(static_cast<unsigned>(k / 2), p));
                    for (unsigned t = 0; t < p; ++t) expected *= Rational(-2);
                    basis_ok = betas[i] == expected;
                }
            }
            if (!dim_ok || !basis_ok) {
                failing += (failing.empty() ? "" : " ") + std::string("(n=") + std::to_string(n) + ",mu=" +
                           std::to_string(mu) + ",dim=" + std::to_string(s.dimension) + ")";
                o.ok = false;
            }
        }
    if (!o.ok) o.note = "no equivariant map at " + failing;
    return o;
}

Outcome homomorphism() {
    Outcome o;
    std::mt19937 rng(1002);
    for (int i = 0; i < 100; ++i) {
        const UEAElement u = UEAElement::word(random_word(rng, 4)), v = UEAElement::word(random_word(rng, 4));
        o.require(embed(u * v) == compose(embed(u), embed(v)), "embed(uv) != embed(u)embed(v)");
    }
    std::size_t multisets = 0;
    for (unsigned n = 1; n <= 5; ++n) {
        std::vector<unsigned> idx(n, 0);
        for (;;) {
            std::vector<Gen> gens;
            std::vector<PolyField> fields;
            for (unsigned i : idx) {
                gens.push_back(static_cast<Gen>(i));
                fields.push_back(PolyField::basis(i));
            }
            ++multisets;
            o.require(embed(symmetrize_word(gens)) == symmetrized_product(lie_derivatives(fields)),
                      "symmetrized word image at n=" + std::to_string(n));
            int j = static_cast<int>(n) - 1;
            while (j >= 0 && idx[j] == 2) --j;
            if (j < 0) break;
            ++idx[j];
            for (unsigned t = j + 1; t < n; ++t) idx[t] = idx[j];
        }
    }
    o.note = std::to_string(multisets) + " multisets" + (o.note.empty() ? "" : "; " + o.note);
    return o;
}

Outcome composition_oracle() {
    Outcome o;
    std::mt19937 rng(1003);
    std::uniform_int_distribution<unsigned> mdist(0, 8);
    for (int i = 0; i < 200; ++i) {
        const DiffOp A = random_diffop(rng), B = random_diffop(rng);
        const XPoly f = XPoly::monomial(LambdaPoly(1), mdist(rng));
        o.require(apply_to_density(compose(A, B), f) == apply_to_density(A, apply_to_density(B, f)),
                  "case " + std::to_string(i));
    }
    return o;
}

Outcome convention_guard() {
    Outcome o;
    const LambdaPoly l = lam();
    const DiffOp L2 = lie_derivative(PolyField::basis(2));
    const SymbolPoly x2xi = SymbolPoly::monomial(1, 2, 1);
    o.require(sigma(L2, SignConvention::printed) != x2xi, "printed convention reproduces x^2 xi");
    o.require(sigma(L2) == x2xi, "corrected convention lost x^2 xi");
    const LambdaPoly printed = pnk_polynomial(2, 2, SignConvention::printed);
    o.require(printed == Rational(1, 3) * (13 * l * l + l), "printed P(2,2)");
    o.require(printed != Rational(1, 3) * l * (l - 1), "printed P(2,2) coincides with corrected");
    return o;
}

std::string run_cli(std::vector<std::string> args, int& code) {
    std::ostringstream out, err;
    code = run_command(args, out, err);
    std::string s = out.str();
    if (!s.empty() && s.back() == '\n') s.pop_back();
    return s;
}

Outcome cli_end_to_end() {
    Outcome o;
    int code = 0;
    const std::string a = run_cli({"symbol", "L(x^2*d)", "--format", "latex"}, code);
    o.require(code == 0 && a == "x\\xi", "symbol L(x^2*d) printed '" + a + "', expected 'x\\xi'");
    const std::string b = run_cli({"embed", "delta"}, code);
    o.require(code == 0 && b == R"({"type":"diffop","terms":[{"x":0,"d":0,"coeff":["0","-1","1"]}]})",
              "embed delta printed " + b);
    const std::string c = run_cli({"pnk", "4", "2"}, code);
    o.require(code == 0 && c == R"(["-5/7","-6/7","6/7"])", "pnk 4 2 printed " + c);

    std::mt19937 rng(1004);
    for (int i = 0; i < 100; ++i) {
        Value v;
        switch (i % 3) {
            case 0: v = random_diffop(rng); break;
            case 1: v = random_symbol(rng); break;
            default: v = random_uea(rng); break;
        }
        o.require(value_from_json(Json::parse(emit(v, OutputFormat::json))) == v, "JSON round trip " + std::to_string(i));
    }
    return o;
}

}  // namespace

int main() {
    struct Criterion {
        const char* title;
        Outcome (*check)();
    };
    const Criterion criteria[] = {
        {"closed-form symbols of symmetrized products, n = 1..5", closed_form_symbols},
        {"P(n,k) coefficient table and P(n,0) = 1", pnk_table},
        {"Casimir image and kernel ideal", casimir_kernel},
        {"uniqueness of the equivariant symbol map", symbol_map_uniqueness},
        {"invariant symmetric operator table", invariant_operator_table},
        {"embedding is a homomorphism and respects symmetrization", homomorphism},
        {"composition agrees with nested application", composition_oracle},
        {"printed sign convention guard", convention_guard},
        {"command line examples and JSON round trips", cli_end_to_end},
    };
    int index = 0, failed = 0;
    for (const auto& c : criteria) {
        ++index;
        Outcome o;
        try {
            o = c.check();
        } catch (const std::exception& e) {
            o.ok = false;
            o.note = std::string("exception: ") + e.what();
        }
        failed += !o.ok;
        std::cout << (o.ok ? "PASS" : "FAIL") << "  criterion " << index << ": " << c.title;
        if (!o.note.empty()) std::cout << "  [" << o.note << "]";
        std::cout << '\n';
    }
    std::cout << (9 - failed) << "/9 criteria passed\n";
    return failed == 0 ? 0 : 1;
}
