#include <doctest.h>

#include "chern/chern_polynomial.hpp"
#include "chern/schur.hpp"
#include "chern/series.hpp"
#include "oracles.hpp"

using namespace chern;

namespace {

ChernPolynomial var(int i, int r) { return ChernPolynomial::variable(i, r); }

}  // namespace

TEST_CASE("chern monomials") {
    CHECK(chern_monomial(Partition{1, 1}, 2) == var(1, 2) * var(1, 2));
    CHECK(chern_monomial(Partition{2, 1}, 3) == var(2, 3) * var(1, 3));
    CHECK_THROWS_AS(chern_monomial(Partition{3, 3}, 2), std::invalid_argument);
    CHECK(chern_monomial(Partition{2, 1}, 3).degree() == 3);
}

TEST_CASE("polynomial arithmetic basics") {
    ChernPolynomial p = var(1, 3) * var(1, 3) - var(2, 3);
    CHECK(p.to_string() == "c1^2 - c2");
    CHECK(p.is_homogeneous());
    CHECK((p - p).is_zero());
    CHECK(var(4, 3).is_zero());   // truncated beyond the rank
    CHECK(var(0, 3).is_one());    // c_0 = 1
    CHECK(ChernPolynomial::scalar(Rational(0)).is_zero());
    ChernPolynomial total = ChernPolynomial::one() + var(1, 2) + var(2, 2);
    CHECK_FALSE(total.is_homogeneous());
    CHECK(total.graded_part(1) == var(1, 2));
}

TEST_CASE("canonical printing") {
    ChernPolynomial s3 = var(1, 3).pow(3) - Rational(2) * var(1, 3) * var(2, 3) + var(3, 3);
    CHECK(s3.to_string() == "c1^3 - 2*c2*c1 + c3");
    CHECK((ChernPolynomial::scalar(make_rational(-1, 2)) * var(2, 2)).to_string() == "-1/2*c2");
}

TEST_CASE("special Schur shapes from the determinant") {
    for (int r = 1; r <= 4; ++r)
        for (int i = 1; i <= r; ++i) CHECK(schur(Partition{i}, r) == var(i, r));
    // two-row shapes: S_(k-i,i) = c_{k-i} c_i - c_{k-i+1} c_{i-1}
    for (int r = 2; r <= 4; ++r)
        for (int k = 2; k <= 2 * r; ++k)
            for (int i = 1; i <= k / 2; ++i) {
                if (k - i > r) continue;
                ChernPolynomial expected =
                    var(k - i, r) * var(i, r) - var(k - i + 1, r) * var(i - 1, r);
                CHECK(schur(Partition{k - i, i}, r) == expected);
            }
    CHECK(schur(Partition{1, 1}, 2) == var(1, 2) * var(1, 2) - var(2, 2));
}

TEST_CASE("schur vanishes exactly when the first part exceeds the rank") {
    for (int w = 1; w <= 5; ++w)
        for (int r = 1; r <= 4; ++r)
            for (const Partition& lam : enumerate_gamma(w, w))
                CHECK(schur(lam, r).is_zero() == (lam.parts().front() > r));
}

TEST_CASE("padding the Jacobi-Trudi determinant with zero rows is harmless") {
    for (int w = 1; w <= 5; ++w)
        for (int r = 1; r <= 3; ++r)
            for (const Partition& lam : enumerate_gamma(w, w))
                CHECK(schur_padded(lam, r, w) == schur(lam, r));
}

TEST_CASE("to_schur_basis on the worked examples") {
    SchurExpansion e = to_schur_basis(var(1, 2) * var(1, 2));
    CHECK(e.coefficients ==
          std::map<Partition, Rational>{{Partition{2}, 1}, {Partition{1, 1}, 1}});

    SchurExpansion cube = to_schur_basis(var(1, 3).pow(3));
    CHECK(cube.coefficients == std::map<Partition, Rational>{{Partition{3}, 1},
                                                             {Partition{2, 1}, 2},
                                                             {Partition{1, 1, 1}, 1}});

    for (int w = 1; w <= 5; ++w)
        for (const Partition& lam : enumerate_gamma(w, 3)) {
            SchurExpansion round = to_schur_basis(schur(lam, 3));
            CHECK(round.coefficients == std::map<Partition, Rational>{{lam, 1}});
        }
}

TEST_CASE("to_schur_basis reconstructs inhomogeneous input per degree") {
    ChernPolynomial p = ChernPolynomial::scalar(Rational(7)) + var(1, 3) -
                        make_rational(3, 2) * var(2, 3) * var(1, 3) + var(3, 3);
    SchurExpansion e = to_schur_basis(p);
    CHECK(e.reconstruct() == p);
    CHECK(e.coefficient(Partition{}) == 7);
}

TEST_CASE("schur products: Pieri examples and rank truncation") {
    SchurExpansion e = schur_product(Partition{1}, Partition{1}, 2);
    CHECK(e.coefficients ==
          std::map<Partition, Rational>{{Partition{2}, 1}, {Partition{1, 1}, 1}});

    // rank 1: Γ(2,1) = {(1,1)} and c1^2 = S_(1,1)
    SchurExpansion rank1 = schur_product(Partition{1}, Partition{1}, 1);
    CHECK(rank1.coefficients == std::map<Partition, Rational>{{Partition{1, 1}, 1}});
}

TEST_CASE("single-row product identity C_a C_b = C_{a+b} + sum of two-row Schurs") {
    for (int r = 1; r <= 5; ++r)
        for (int a = 1; a <= r; ++a)
            for (int b = 1; b <= a; ++b) {
                ChernPolynomial lhs = var(a, r) * var(b, r) - var(a + b, r);
                ChernPolynomial rhs(r);
                for (int i = 0; i <= b - 1; ++i) rhs += schur(Partition{a + i, b - i}, r);
                CHECK(lhs == rhs);

                SchurExpansion prod = schur_product(Partition{a}, Partition{b}, r);
                SchurExpansion expected = to_schur_basis(var(a + b, r) + rhs);
                CHECK(prod == expected);
            }
}

TEST_CASE("Jacobi-Trudi matches the tableau oracle through the root substitution") {
    for (int w = 1; w <= 5; ++w)
        for (int r = 1; r <= 4; ++r)
            for (const Partition& lam : enumerate_gamma(w, w)) {
                oracle::RootPoly via_det = oracle::substitute_roots(schur(lam, r), r);
                oracle::RootPoly via_tableaux = oracle::ssyt_schur(lam.conjugate(), r);
                CHECK(via_det == via_tableaux);
            }
}

TEST_CASE("segre inversion on the abstract ring") {
    // trivial bundle
    auto trivial = segre_from_total_chern(ChernPolynomial::one(), 4);
    CHECK(trivial[0].is_one());
    for (int i = 1; i <= 4; ++i) CHECK(trivial[static_cast<size_t>(i)].is_zero());

    ChernPolynomial total = ChernPolynomial::one() + var(1, 3) + var(2, 3) + var(3, 3);
    auto s = segre_from_total_chern(total, 3);
    CHECK(s[1] == var(1, 3));
    CHECK(s[2] == var(1, 3) * var(1, 3) - var(2, 3));
    CHECK(s[3] == var(1, 3).pow(3) - Rational(2) * var(1, 3) * var(2, 3) + var(3, 3));

    // defining identity c(E*) · s(E) = 1 through the cutoff
    auto dual = dual_components(graded_components(total, 3));
    ChernPolynomial product;
    for (int d = 0; d <= 3; ++d)
        for (int i = 0; i <= d; ++i)
            product += dual[static_cast<size_t>(i)] * s[static_cast<size_t>(d - i)];
    CHECK(product == ChernPolynomial::one());

    CHECK_THROWS_AS(segre_from_total_chern(var(1, 2), 2), std::invalid_argument);
}
