#include "glam/glambda.hpp"

#include <numeric>
#include <stdexcept>
#include <vector>

#include "glam/combinatorics.hpp"

namespace glam {

namespace {

// (X_1'' ⋯ X_p'' X_{p+1}' ⋯ X_{p+m}' X_{p+m+1} ⋯ X_n)_+ as a permutation sum.
XPoly symmetrized_pattern(std::span<const PolyField> fields, unsigned second, unsigned first) {
    std::vector<std::size_t> idx(fields.size());
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    XPoly total;
    do {
        XPoly prod(LambdaPoly(1));
        for (std::size_t slot = 0; slot < idx.size(); ++slot) {
            const unsigned d = slot < second ? 2 : (slot < second + first ? 1 : 0);
            prod = prod * fields[idx[slot]].function(d);
        }
        total += prod;
    } while (std::next_permutation(idx.begin(), idx.end()));
    return total;
}

}  // namespace

XPolyLambda ak_operator(unsigned k, std::span<const PolyField> fields) {
    const auto n = static_cast<unsigned>(fields.size());
    if (k % 2 != 0) throw std::invalid_argument("ak_operator: k must be even");
    if (k > 2 * n) throw std::invalid_argument("ak_operator: k must not exceed 2n");
    for (const auto& X : fields)
        if (!X.in_sl2()) throw std::invalid_argument("ak_operator: fields must lie in sl2 (degree <= 2)");
    XPoly total;
    const unsigned half = k / 2;
    for (unsigned p = 0; p <= half; ++p) {
        const unsigned m = k - 2 * p;
        if (p + m > n) continue;
        mpz_class c = binomial(half, p);
        if (p % 2 == 1) c = -c;
        c <<= p;  // (-2)^p
        total += XPoly(LambdaPoly(Rational(c))) * symmetrized_pattern(fields, p, m);
    }
    return total;
}

PnkTable& PnkTable::global() {
    static PnkTable table;
    return table;
}

std::size_t PnkTable::size() const {
    std::lock_guard lock(mutex_);
    return cache_.size();
}

namespace {

LambdaPoly compute_pnk(unsigned n, unsigned k, SignConvention conv) {
    const unsigned q = n - k;
    const Rational two_sign = conv == SignConvention::corrected ? Rational(-2) : Rational(2);
    const LambdaPoly arg = LambdaPoly::from_coefficients({Rational(-static_cast<long>(q)), two_sign});
    // Σ_p C(n,p){p l} λ^(n-p), for each l.
    auto stirling_sum = [n](unsigned l) {
        std::vector<Rational> cs(n + 1);
        for (unsigned p = l; p <= n; ++p) cs[n - p] = Rational(binomial(n, p) * stirling2(p, l));
        return LambdaPoly::from_coefficients(std::move(cs));
    };
    LambdaPoly total;
    for (unsigned l = q; l <= n; ++l) {
        const mpz_class c = binomial(l, q);
        Rational w(factorial(l - q) * c * c, binomial(q + l + 1, 2 * q + 1));
        total += LambdaPoly(w) * generalized_binomial(arg, l - q) * stirling_sum(l);
    }
    return total;
}

}  // namespace

const LambdaPoly& PnkTable::get(unsigned n, unsigned k, SignConvention conv) {
    const auto key = std::tuple{n, k, conv};
    {
        std::lock_guard lock(mutex_);
        if (auto it = cache_.find(key); it != cache_.end()) return it->second;
    }
    LambdaPoly value = compute_pnk(n, k, conv);
    std::lock_guard lock(mutex_);
    return cache_.try_emplace(key, std::move(value)).first->second;
}

LambdaPoly pnk_polynomial(unsigned n, unsigned k, SignConvention conv) {
    if (n < 1) throw std::invalid_argument("pnk_polynomial: n must be positive");
    if (k % 2 != 0) throw std::invalid_argument("pnk_polynomial: k must be even");
    if (k > n) throw std::invalid_argument("pnk_polynomial: k must not exceed n");
    return PnkTable::global().get(n, k, conv);
}

SymbolPoly symbol_of_symmetrized(std::span<const PolyField> fields, SignConvention conv) {
    const auto n = static_cast<unsigned>(fields.size());
    if (n == 0) throw std::invalid_argument("symbol_of_symmetrized: empty field sequence");
    SymbolPoly S;
    for (unsigned k = 0; k <= n; k += 2) {
        const XPoly a = ak_operator(k, fields);
        S += SymbolPoly::from_component(XPoly(pnk_polynomial(n, k, conv)) * a, n - k);
    }
    return S;
}

bool verify_closed_form(std::span<const PolyField> fields) {
    std::vector<DiffOp> ops;
    ops.reserve(fields.size());
    for (const auto& X : fields) ops.push_back(lie_derivative(X));
    return sigma(symmetrized_product(ops)) == symbol_of_symmetrized(fields);
}

DiffOp xd_power_expansion(unsigned n) {
    DiffOp A;
    for (unsigned l = 0; l <= n; ++l) A.add_term(LambdaPoly(Rational(stirling2(n, l))), l, l);
    return A;
}

}  // namespace glam
