#include "glam/combinatorics.hpp"

#include <mutex>
#include <vector>

namespace glam {

namespace {

// Rows of the Stirling triangle, grown on demand. Row n has n+1 entries.
struct StirlingTriangle {
    std::mutex mutex;
    std::vector<std::vector<mpz_class>> rows{{mpz_class(1)}};
};

StirlingTriangle& triangle() {
    static StirlingTriangle t;
    return t;
}

}  // namespace

mpz_class stirling2(unsigned n, unsigned k) {
    if (k > n) return 0;
    auto& t = triangle();
    std::lock_guard lock(t.mutex);
    while (t.rows.size() <= n) {
        const auto& prev = t.rows.back();
        const unsigned m = static_cast<unsigned>(t.rows.size());
        std::vector<mpz_class> row(m + 1, mpz_class(0));
        for (unsigned j = 1; j <= m; ++j) {
            mpz_class a = prev[j - 1];
            mpz_class b = j < prev.size() ? prev[j] : mpz_class(0);
            row[j] = a + j * b;
        }
        t.rows.push_back(std::move(row));
    }
    return t.rows[n][k];
}

mpz_class binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

mpz_class factorial(unsigned n) {
    mpz_class r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

LambdaPoly generalized_binomial(const LambdaPoly& arg, unsigned m) {
    LambdaPoly acc(1);
    for (unsigned i = 0; i < m; ++i) acc *= arg - LambdaPoly(Rational(i));
    return acc * LambdaPoly(Rational(mpz_class(1), factorial(m)));
}

}  // namespace glam
