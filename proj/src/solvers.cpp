#include "glam/solvers.hpp"

#include <algorithm>
#include <stdexcept>

#include "glam/combinatorics.hpp"
#include "glam/diffop.hpp"
#include "glam/linalg.hpp"
#include "glam/symbol_map.hpp"
#include "glam/symbol_poly.hpp"

namespace glam {

namespace {

// Distinct sample points for λ: a fixed head followed by thirds.
std::vector<Rational> lambda_samples(std::size_t count) {
    std::vector<Rational> s = {Rational(0), Rational(1), Rational(1, 2), Rational(2), Rational(3), Rational(-1),
                               Rational(5, 2)};
    for (long i = 7; s.size() < count; ++i) {
        if (i % 3 == 0) continue;
        s.emplace_back(i % 2 == 0 ? i : -i, 3);
    }
    s.resize(count);
    return s;
}

// Groups linear contributions by monomial into matrix rows.
template <typename Key, typename Less>
class RowCollector {
public:
    explicit RowCollector(std::size_t unknowns) : unknowns_(unknowns) {}

    void add(const Key& key, std::size_t unknown, const Rational& value) {
        if (value.is_zero()) return;
        auto [it, inserted] = rows_.try_emplace(key, std::vector<Rational>(unknowns_));
        it->second[unknown] += value;
    }

    void flush_into(RationalMatrix& M) {
        for (const auto& [key, row] : rows_)
            if (std::any_of(row.begin(), row.end(), [](const Rational& r) { return !r.is_zero(); })) M.append_row(row);
        rows_.clear();
    }

private:
    std::size_t unknowns_;
    std::map<Key, std::vector<Rational>, Less> rows_;
};

struct AlphaUnknowns {
    explicit AlphaUnknowns(unsigned n) {
        for (unsigned j = 0; j <= n; ++j)
            for (unsigned p = 0; p <= j; ++p) index.emplace_back(p, j);
    }
    std::size_t find(unsigned p, unsigned j) const {
        return static_cast<std::size_t>(std::find(index.begin(), index.end(), std::pair{p, j}) - index.begin());
    }
    std::vector<std::pair<unsigned, unsigned>> index;
};

// Equivariance constraints for the triangular ansatz at λ = v.
RationalMatrix symbol_map_system(unsigned n, const AlphaUnknowns& unk, const Rational& v) {
    RationalMatrix M(0, unk.index.size());
    for (unsigned g = 0; g <= 2; ++g) {
        const PolyField X = PolyField::basis(g);
        const DiffOp LX = lie_derivative(X, LambdaPoly(v));
        for (unsigned j0 = 0; j0 <= n; ++j0) {
            for (unsigned m = 0; m <= 2 * n + 2; ++m) {
                const DiffOp A = DiffOp::monomial(LambdaPoly(1), m, j0);
                const DiffOp B = commutator(LX, A);
                RowCollector<SymbolMonomial, SymbolMonomialOrder> rows(unk.index.size());
                for (std::size_t u = 0; u < unk.index.size(); ++u) {
                    const auto [p, j] = unk.index[u];
                    SymbolPoly contribution = SymbolPoly::from_component(B.coefficient_function(j).derivative(j - p), p);
                    contribution -=
                        symbol_action(X, SymbolPoly::from_component(A.coefficient_function(j).derivative(j - p), p));
                    for (const auto& [key, c] : contribution.terms()) rows.add(key, u, c.coefficient(0));
                }
                rows.flush_into(M);
            }
        }
    }
    return M;
}

RationalMatrix with_normalization(const RationalMatrix& M, unsigned n, const AlphaUnknowns& unk,
                                  std::vector<Rational>& rhs) {
    RationalMatrix out = M;
    rhs.assign(M.rows(), Rational(0));
    for (unsigned j = 0; j <= n; ++j) {
        std::vector<Rational> row(unk.index.size());
        row[unk.find(j, j)] = Rational(1);
        out.append_row(row);
        rhs.emplace_back(1);
    }
    return out;
}

}  // namespace

SymbolMapSolution solve_equivariant_symbol_maps(unsigned n, bool normalized) {
    if (n < 1 || n > 6) throw std::invalid_argument("solve_equivariant_symbol_maps: requires 1 <= n <= 6");
    const AlphaUnknowns unk(n);
    SymbolMapSolution sol;
    sol.n = n;
    sol.normalized = normalized;

    const std::size_t needed = 2 * n + 2;
    const auto candidates = lambda_samples(3 * needed + 8);

    if (!normalized) {
        std::size_t best_rank = 0;
        for (std::size_t i = 0; i < needed; ++i) {
            best_rank = std::max(best_rank, symbol_map_system(n, unk, candidates[i]).rank());
            sol.samples.push_back(candidates[i]);
        }
        sol.consistent = true;
        sol.dimension = unk.index.size() - best_rank;
        return sol;
    }

    // Unique samples feed the interpolation; one further unique sample checks it.
    std::vector<Rational> xs;
    std::vector<std::vector<Rational>> values;
    std::size_t min_dimension = unk.index.size();
    for (const auto& v : candidates) {
        if (xs.size() == needed + 1) break;
        std::vector<Rational> rhs;
        const RationalMatrix M = with_normalization(symbol_map_system(n, unk, v), n, unk, rhs);
        const AffineSolution s = solve_affine(M, rhs);
        sol.samples.push_back(v);
        if (!s.consistent) continue;
        sol.consistent = true;
        min_dimension = std::min(min_dimension, s.dimension);
        if (s.dimension != 0) continue;
        xs.push_back(v);
        values.push_back(s.particular);
    }
    if (!sol.consistent) return sol;
    sol.dimension = min_dimension;
    if (min_dimension != 0) return sol;
    if (xs.size() < needed + 1) throw std::logic_error("solve_equivariant_symbol_maps: too few regular samples");

    AlphaTable table(n);
    for (std::size_t u = 0; u < unk.index.size(); ++u) {
        std::vector<Rational> ys;
        for (std::size_t s = 0; s < needed; ++s) ys.push_back(values[s][u]);
        LambdaPoly entry = lagrange_interpolate(std::span(xs).first(needed), ys);
        if (entry.eval(xs[needed]) != values[needed][u])
            throw std::logic_error("solve_equivariant_symbol_maps: interpolation check failed");
        table.set(unk.index[u].first, unk.index[u].second, std::move(entry));
    }
    sol.table = std::move(table);
    return sol;
}

std::vector<Rational> InvariantOperatorSpace::constant_betas() const {
    std::vector<Rational> out;
    if (basis.empty()) return out;
    for (const auto& beta : basis.front()) out.push_back(beta.empty() ? Rational(0) : beta.front());
    return out;
}

bool InvariantOperatorSpace::betas_constant() const {
    for (const auto& vec : basis)
        for (const auto& beta : vec)
            for (std::size_t r = 1; r < beta.size(); ++r)
                if (!beta[r].is_zero()) return false;
    return true;
}

namespace {

constexpr unsigned kBetaXDegree = 2;

// Σ_{τ∈S_n} Π (derivative pattern), computed by summing over derivative-order
// assignments to slots and weighting each by p! m! (n-p-m)!.
XPoly pattern_value(const DerivativePattern& pat, std::span<const PolyField> fields) {
    const auto n = static_cast<unsigned>(fields.size());
    const unsigned plain = n - pat.second - pat.first;
    std::vector<unsigned> order(n, 0);
    XPoly total;
    for (;;) {
        unsigned twos = 0;
        unsigned ones = 0;
        for (unsigned o : order) {
            twos += o == 2;
            ones += o == 1;
        }
        if (twos == pat.second && ones == pat.first) {
            XPoly prod(LambdaPoly(1));
            for (unsigned i = 0; i < n; ++i) prod = prod * fields[i].function(order[i]);
            total += prod;
        }
        unsigned i = 0;
        while (i < n && order[i] == 2) order[i++] = 0;
        if (i == n) break;
        ++order[i];
    }
    mpz_class weight = factorial(pat.second) * factorial(pat.first) * factorial(plain);
    return XPoly(LambdaPoly(Rational(weight))) * total;
}

// All non-decreasing index tuples over {0,1,2} of length n.
std::vector<std::vector<unsigned>> basis_multisets(unsigned n) {
    std::vector<std::vector<unsigned>> out;
    std::vector<unsigned> cur(n, 0);
    for (;;) {
        out.push_back(cur);
        int i = static_cast<int>(n) - 1;
        while (i >= 0 && cur[i] == 2) --i;
        if (i < 0) break;
        ++cur[i];
        for (unsigned k = i + 1; k < n; ++k) cur[k] = cur[i];
    }
    return out;
}

}  // namespace

InvariantOperatorSpace solve_invariant_operators(unsigned n, int mu) {
    if (n < 1 || n > 5) throw std::invalid_argument("solve_invariant_operators: requires 1 <= n <= 5");
    if (mu > 2 * static_cast<int>(n) || mu < -2 * static_cast<int>(n))
        throw std::invalid_argument("solve_invariant_operators: requires |mu| <= 2n");

    InvariantOperatorSpace space;
    space.n = n;
    space.mu = mu;
    space.order = mu + static_cast<int>(n);
    space.beta_x_degree = kBetaXDegree;
    const int k = space.order;
    for (int p = 0; 2 * p <= k; ++p) {
        const int m = k - 2 * p;
        if (p + m <= static_cast<int>(n))
            space.patterns.push_back({static_cast<unsigned>(p), static_cast<unsigned>(m)});
    }
    if (space.patterns.empty()) return space;

    const std::size_t unknowns = space.patterns.size() * (kBetaXDegree + 1);
    auto unknown = [](std::size_t pat, unsigned r) { return pat * (kBetaXDegree + 1) + r; };
    RationalMatrix M(0, unknowns);
    const Rational weight(mu);

    for (const auto& tuple : basis_multisets(n)) {
        std::vector<PolyField> fields;
        for (unsigned i : tuple) fields.push_back(PolyField::basis(i));
        for (unsigned g = 0; g <= 2; ++g) {
            const PolyField Y = PolyField::basis(g);
            const XPoly y0 = Y.function();
            const XPoly y1 = Y.function(1);
            RowCollector<unsigned, std::less<unsigned>> rows(unknowns);
            for (std::size_t pi = 0; pi < space.patterns.size(); ++pi) {
                const XPoly base = pattern_value(space.patterns[pi], fields);
                XPoly moved;
                for (std::size_t slot = 0; slot < n; ++slot) {
                    std::vector<PolyField> shifted = fields;
                    shifted[slot] = bracket(Y, fields[slot]);
                    moved += pattern_value(space.patterns[pi], shifted);
                }
                for (unsigned r = 0; r <= kBetaXDegree; ++r) {
                    const XPoly xr = XPoly::monomial(LambdaPoly(1), r);
                    const XPoly F = xr * base;
                    // L^μ_Y F - Σ_i F(…, [Y, X_i], …)
                    const XPoly eq = y0 * F.derivative() + XPoly(LambdaPoly(weight)) * y1 * F - xr * moved;
                    auto cs = eq.coefficients();
                    for (std::size_t e = 0; e < cs.size(); ++e)
                        rows.add(static_cast<unsigned>(e), unknown(pi, r), cs[e].coefficient(0));
                }
            }
            rows.flush_into(M);
        }
    }

    const auto null = M.nullspace();
    space.dimension = null.size();
    for (const auto& v : null) {
        std::vector<std::vector<Rational>> betas;
        for (std::size_t pi = 0; pi < space.patterns.size(); ++pi) {
            std::vector<Rational> beta(v.begin() + unknown(pi, 0), v.begin() + unknown(pi, 0) + kBetaXDegree + 1);
            while (!beta.empty() && beta.back().is_zero()) beta.pop_back();
            betas.push_back(std::move(beta));
        }
        space.basis.push_back(std::move(betas));
    }
    if (space.basis.size() == 1 && space.patterns.front().second == 0 && !space.basis[0][0].empty() &&
        !space.basis[0][0][0].is_zero()) {
        const Rational scale = Rational(1) / space.basis[0][0][0];
        for (auto& beta : space.basis[0])
            for (auto& c : beta) c *= scale;
    }
    return space;
}

}  // namespace glam
