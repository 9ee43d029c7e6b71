#ifndef CHERN_TESTS_ORACLES_HPP
#define CHERN_TESTS_ORACLES_HPP

// Independent oracles used only by tests: plain-series adjunction and Künneth
// computations, recursive partition counting, and the tableau route to Schur
// functions. None of these share code with the implementation they check.

#include <map>
#include <vector>

#include "chern/chern_polynomial.hpp"
#include "chern/partition.hpp"
#include "chern/rational.hpp"

namespace oracle {

using chern::Partition;
using chern::Rational;

/// Number of partitions of k with every part <= max_part.
long count_partitions(int k, int max_part);

// -- univariate series in one hyperplane class ------------------------------

using Series = std::vector<Rational>;  // index = degree

Series series_mul(const Series& a, const Series& b, int cutoff);
Series geometric_inverse(int d, int cutoff);     // (1 + d·h)^{-1}
Series binomial_series(int exponent, int cutoff);  // (1 + h)^exponent

/// Total Chern series of a complete intersection of the given degrees:
/// (1+h)^{n+c+1} · Π (1 + d_j·h)^{-1}, truncated at n.
Series ci_tangent_series(int n, const std::vector<int>& degrees);

/// ∫ c_λ for λ ∈ Γ(n,n) by the adjunction series, top power scaled by Πd_j.
std::map<Partition, Rational> ci_chern_numbers(int n, const std::vector<int>& degrees);

// -- Künneth on P^a × P^b -----------------------------------------------------

/// Bigraded coefficients c[i][j] of x^i y^j with x^{a+1} = y^{b+1} = 0.
struct BiClass {
    int na = 0, nb = 0;
    std::vector<std::vector<Rational>> c;

    static BiClass zero(int na, int nb);
    static BiClass monomial(int na, int nb, int i, int j, Rational coeff);
    BiClass mul(const BiClass& rhs) const;
    BiClass add(const BiClass& rhs) const;
    BiClass scale(const Rational& s) const;
    BiClass pow(int e) const;
    BiClass graded_part(int degree) const;
    Rational integral() const { return c[static_cast<size_t>(na)][static_cast<size_t>(nb)]; }
};

BiClass product_tangent_chern(int a, int b);  // (1+x)^{a+1} (1+y)^{b+1}
BiClass product_polarization(int a, int b, int d1, int d2);
std::map<Partition, Rational> product_chern_numbers(int a, int b);

// -- root-variable Schur functions -------------------------------------------

/// Exact polynomial in x_1..x_r.
struct RootPoly {
    int vars = 0;
    std::map<std::vector<int>, Rational> terms;

    static RootPoly zero(int vars);
    static RootPoly constant(int vars, Rational value);
    RootPoly mul(const RootPoly& rhs) const;
    RootPoly add(const RootPoly& rhs) const;
    bool operator==(const RootPoly& rhs) const { return terms == rhs.terms; }
};

RootPoly elementary_symmetric(int i, int r);

/// Substitutes c_i -> e_i(x_1..x_r) into an abstract Chern polynomial.
RootPoly substitute_roots(const chern::ChernPolynomial& p, int r);

/// Schur function of the given shape in x_1..x_r, summed over semistandard
/// Young tableaux with entries <= r.
RootPoly ssyt_schur(const Partition& shape, int r);

}  // namespace oracle

#endif
