#include <doctest.h>

#include <algorithm>

#include "support.hpp"

using namespace testing;

namespace {

DiffOp op(const LambdaPoly& c, unsigned x, unsigned d) { return DiffOp::monomial(c, x, d); }
XPoly xm(unsigned m) { return XPoly::monomial(LambdaPoly(1), m); }

}  // namespace

TEST_CASE("operator addition") {
    std::mt19937 rng(1);
    CHECK(op(1, 0, 1) + op(1, 1, 1) == op(1, 1, 1) + op(1, 0, 1));
    CHECK((op(1, 0, 1) + op(1, 1, 1)).terms().size() == 2);
    const DiffOp A = random_diffop(rng);
    CHECK((A + LambdaPoly(-1) * A).is_zero());
    const DiffOp B = op(1, 2, 1) + op(2 * lam(), 1, 0);
    CHECK(B.coefficient(2, 1) == LambdaPoly(1));
    CHECK(B.coefficient(1, 0) == 2 * lam());
}

TEST_CASE("composition renormalizes") {
    CHECK(compose(op(1, 0, 1), op(1, 1, 0)) == op(1, 1, 1) + op(1, 0, 0));
    CHECK(compose(op(1, 0, 2), op(1, 2, 0)) == op(1, 2, 2) + op(4, 1, 1) + op(2, 0, 0));
    CHECK(compose(op(1, 2, 1), op(1, 0, 1)) == op(1, 2, 2));
}

TEST_CASE("commutators") {
    CHECK(commutator(op(1, 0, 1), op(1, 2, 1)) == op(2, 1, 1));
    CHECK(commutator(op(1, 1, 1), op(1, 2, 1)) == op(1, 2, 1));
    std::mt19937 rng(2);
    const DiffOp A = random_diffop(rng);
    CHECK(commutator(A, A).is_zero());
}

TEST_CASE("lie derivatives") {
    const LambdaPoly l = lam();
    CHECK(lie_derivative(PolyField::basis(2)) == op(1, 2, 1) + op(2 * l, 1, 0));
    CHECK(lie_derivative(PolyField::basis(0)) == op(1, 0, 1));
    CHECK(lie_derivative(PolyField::monomial(Rational(1), 3)) == op(1, 3, 1) + op(3 * l, 2, 0));
    CHECK(lie_derivative(PolyField::basis(1), LambdaPoly(Rational(1, 2))) == op(1, 1, 1) + op(Rational(1, 2), 0, 0));
}

TEST_CASE("adjoint action") {
    CHECK(adjoint_action(PolyField::basis(0), op(1, 1, 1)) == op(1, 0, 1));
    CHECK(adjoint_action(PolyField::basis(1), op(1, 0, 2)) == op(-2, 0, 2));
    CHECK(adjoint_action(PolyField::basis(2), DiffOp::scalar(3 * lam())).is_zero());
}

TEST_CASE("symmetrized products") {
    const LambdaPoly l = lam();
    const DiffOp A = op(1, 1, 2) + op(l, 0, 0);
    CHECK(symmetrized_product(std::vector<DiffOp>{A}) == A);
    const DiffOp L1 = lie_derivative(PolyField::basis(1));
    CHECK(symmetrized_product(std::vector<DiffOp>{L1, L1}) ==
          LambdaPoly(2) * (op(1, 2, 2) + op(1 + 2 * l, 1, 1) + op(l * l, 0, 0)));
    const DiffOp L0 = lie_derivative(PolyField::basis(0));
    CHECK(symmetrized_product(std::vector<DiffOp>{L0, L0, L0}) == op(6, 0, 3));
    CHECK_THROWS_AS(symmetrized_product(std::vector<DiffOp>{}), std::invalid_argument);
}

TEST_CASE("application to densities") {
    const LambdaPoly l = lam();
    CHECK(apply_to_density(op(1, 1, 1), xm(2)) == XPoly::monomial(2, 2));
    CHECK(apply_to_density(op(1, 0, 2), xm(3)) == XPoly::monomial(6, 1));
    CHECK(apply_to_density(lie_derivative(PolyField::basis(2)), xm(1)) == XPoly::monomial(1 + 2 * l, 2));
}

TEST_CASE("composition is associative") {
    std::mt19937 rng(3);
    for (int i = 0; i < 200; ++i) {
        const DiffOp A = random_diffop(rng), B = random_diffop(rng), C = random_diffop(rng);
        CHECK(compose(compose(A, B), C) == compose(A, compose(B, C)));
    }
}

TEST_CASE("composition agrees with nested application") {
    std::mt19937 rng(4);
    for (int i = 0; i < 60; ++i) {
        const DiffOp A = random_diffop(rng), B = random_diffop(rng);
        const DiffOp AB = compose(A, B);
        for (unsigned m = 0; m <= 8; ++m)
            CHECK(apply_to_density(AB, xm(m)) == apply_to_density(A, apply_to_density(B, xm(m))));
    }
}

TEST_CASE("lie derivative is a Lie algebra morphism") {
    for (unsigned a = 0; a <= 5; ++a)
        for (unsigned b = 0; b <= 5; ++b) {
            const auto X = PolyField::monomial(Rational(1), a), Y = PolyField::monomial(Rational(1), b);
            CHECK(lie_derivative(bracket(X, Y)) == commutator(lie_derivative(X), lie_derivative(Y)));
        }
    std::mt19937 rng(6);
    for (int i = 0; i < 50; ++i) {
        const auto X = random_field(rng, 5), Y = random_field(rng, 5);
        CHECK(lie_derivative(bracket(X, Y)) == commutator(lie_derivative(X), lie_derivative(Y)));
    }
}

TEST_CASE("commutator is antisymmetric and satisfies Jacobi") {
    std::mt19937 rng(7);
    for (int i = 0; i < 50; ++i) {
        const DiffOp A = random_diffop(rng, 3, 3), B = random_diffop(rng, 3, 3), C = random_diffop(rng, 3, 3);
        CHECK(commutator(A, B) == -commutator(B, A));
        CHECK((commutator(A, commutator(B, C)) + commutator(B, commutator(C, A)) + commutator(C, commutator(A, B)))
                  .is_zero());
    }
}

TEST_CASE("symmetrized product ignores input order") {
    std::mt19937 rng(8);
    for (int i = 0; i < 20; ++i) {
        std::vector<DiffOp> ops;
        for (int k = 0; k < 4; ++k) ops.push_back(random_diffop(rng, 2, 2, 2));
        const DiffOp ref = symmetrized_product(ops);
        std::shuffle(ops.begin(), ops.end(), rng);
        CHECK(symmetrized_product(ops) == ref);
    }
}

TEST_CASE("sl2 adjoint action does not raise order") {
    std::mt19937 rng(9);
    for (int i = 0; i < 100; ++i) {
        const DiffOp A = random_diffop(rng);
        const auto X = random_field(rng, 2);
        const DiffOp ad = adjoint_action(X, A);
        CHECK((ad.is_zero() || ad.order() <= A.order()));
    }
}
