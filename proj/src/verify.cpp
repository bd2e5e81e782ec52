#include "glam/verify.hpp"

#include <future>
#include <stdexcept>

#include "glam/combinatorics.hpp"
#include "glam/glambda.hpp"
#include "glam/solvers.hpp"
#include "glam/symbol_map.hpp"
#include "glam/uea.hpp"

namespace glam {

namespace {

std::vector<std::vector<PolyField>> basis_tuples(unsigned n) {
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

CheckResult closed_form_check(unsigned n) {
    const auto tuples = basis_tuples(n);
    std::size_t failures = 0;
    for (const auto& t : tuples) failures += !verify_closed_form(t);
    return {"symbol of [L...L]_+ matches closed form, n=" + std::to_string(n), failures == 0,
            std::to_string(tuples.size() - failures) + "/" + std::to_string(tuples.size()) + " tuples"};
}

CheckResult symbol_map_check(unsigned n) {
    const auto normalized = solve_equivariant_symbol_maps(n, true);
    const auto free = solve_equivariant_symbol_maps(n, false);
    bool table_ok = normalized.table.has_value();
    if (table_ok)
        for (unsigned j = 0; j <= n; ++j)
            for (unsigned p = 0; p <= j; ++p) table_ok = table_ok && normalized.table->at(p, j) == alpha_coefficient(p, j);
    const bool ok = table_ok && normalized.dimension == 0 && free.dimension == n + 1;
    return {"equivariant symbol map unique and equal to alpha table, n=" + std::to_string(n), ok,
            "unnormalized dimension " + std::to_string(free.dimension)};
}

CheckResult invariant_operator_check(unsigned n) {
    std::string detail;
    bool ok = true;
    for (int mu = -static_cast<int>(n); mu <= static_cast<int>(n); ++mu) {
        const auto space = solve_invariant_operators(n, mu);
        const int k = space.order;
        const bool expect_one = k >= 0 && k % 2 == 0 && k <= static_cast<int>(n);
        bool row_ok = space.dimension == (expect_one ? 1u : 0u);
        if (row_ok && expect_one) {
            const auto betas = space.constant_betas();
            row_ok = space.betas_constant();
            for (std::size_t i = 0; i < space.patterns.size() && row_ok; ++i) {
                const unsigned p = space.patterns[i].second;
                mpz_class c = binomial(static_cast<unsigned>(k / 2), p);
                if (p % 2 == 1) c = -c;
                c <<= p;
                row_ok = betas[i] == Rational(c);
            }
        }
        ok = ok && row_ok;
        detail += (detail.empty() ? "" : " ") + ("mu=" + std::to_string(mu) + ":" + std::to_string(space.dimension));
    }
    return {"invariant symmetric operators classified, n=" + std::to_string(n), ok, detail};
}

CheckResult casimir_check() {
    const LambdaPoly l = LambdaPoly::lambda();
    const bool scalar = embed(casimir()) == DiffOp::scalar(l * l - l);
    bool central = true;
    for (unsigned i = 0; i <= 2; ++i) {
        const auto e = UEAElement::generator(static_cast<Gen>(i));
        central = central && pbw_normalize(casimir() * e - e * casimir()).is_zero();
    }
    const bool kernel = kernel_test(casimir_ideal_generator());
    return {"Casimir is central and maps to l(l-1)", scalar && central && kernel, ""};
}

CheckResult pnk_check(unsigned n) {
    bool ok = pnk_polynomial(n, 0) == LambdaPoly(1);
    DiffOp power = DiffOp::identity();
    const DiffOp xd = DiffOp::monomial(LambdaPoly(1), 1, 1);
    for (unsigned i = 0; i < n; ++i) power = compose(power, xd);
    ok = ok && power == xd_power_expansion(n);
    // σ((x∂+λ)^n)|_{x=1} = Σ_k P^n_k ξ^(n-k)
    DiffOp Ln = DiffOp::identity();
    for (unsigned i = 0; i < n; ++i) Ln = compose(Ln, lie_derivative(PolyField::basis(1)));
    const SymbolPoly s = sigma(Ln);
    for (unsigned k = 0; k <= n; ++k) {
        const LambdaPoly at_one = s.component(n - k).eval_at(Rational(1));
        const LambdaPoly expected = k % 2 == 0 ? pnk_polynomial(n, k) : LambdaPoly();
        ok = ok && at_one == expected;
    }
    return {"P^n_0 = 1, Stirling expansion and x=1 reduction, n=" + std::to_string(n), ok, ""};
}

}  // namespace

std::vector<CheckResult> run_oracle_suite(unsigned n_max) {
    if (n_max < 1 || n_max > 5) throw std::invalid_argument("run_oracle_suite: n_max must be in 1..5");
    std::vector<std::future<std::vector<CheckResult>>> jobs;
    for (unsigned n = 1; n <= n_max; ++n) {
        jobs.push_back(std::async(std::launch::async, [n] {
            std::vector<CheckResult> r;
            r.push_back(closed_form_check(n));
            r.push_back(symbol_map_check(n));
            r.push_back(invariant_operator_check(n));
            r.push_back(pnk_check(n));
            return r;
        }));
    }
    std::vector<CheckResult> out{casimir_check()};
    for (auto& j : jobs) {
        auto r = j.get();
        out.insert(out.end(), r.begin(), r.end());
    }
    return out;
}

}  // namespace glam
