#pragma once

#include <gmpxx.h>

#include "glam/lambda_poly.hpp"

namespace glam {

/// Stirling number of the second kind {n k}, by the recurrence
/// {n,k} = {n-1,k-1} + k{n-1,k}. Memoized; safe to call from any thread.
mpz_class stirling2(unsigned n, unsigned k);

/// Ordinary binomial coefficient C(n, k); zero when k > n.
mpz_class binomial(unsigned n, unsigned k);

mpz_class factorial(unsigned n);

/// C(arg, m) = arg(arg-1)...(arg-m+1)/m! as a polynomial in λ; 1 when m = 0.
LambdaPoly generalized_binomial(const LambdaPoly& arg, unsigned m);

}  // namespace glam
