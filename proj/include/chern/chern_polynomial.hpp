#ifndef CHERN_CHERN_POLYNOMIAL_HPP
#define CHERN_CHERN_POLYNOMIAL_HPP

#include <map>
#include <string>

#include <json.hpp>

#include "chern/partition.hpp"
#include "chern/rational.hpp"

namespace chern {

/// Sparse polynomial in the abstract Chern variables c_1..c_r with exact
/// rational coefficients. Monomials are multisets of indices, i.e. partitions
/// with parts <= r; the empty partition is the scalar term. The grading is
/// deg c_i = i. The rank convention c_0 = 1, c_i = 0 for i outside [0, r] is
/// applied when variables are created, so stored monomials never exceed the
/// rank.
///
/// A value with rank 0 is a plain scalar (or zero); it combines with any
/// ranked polynomial and adopts its rank.
class ChernPolynomial {
public:
    ChernPolynomial() = default;
    explicit ChernPolynomial(int rank);

    static ChernPolynomial scalar(Rational value);
    static ChernPolynomial one() { return scalar(Rational(1)); }
    /// c_i at the given rank: 1 for i == 0, 0 for i < 0 or i > rank.
    static ChernPolynomial variable(int i, int rank);
    /// Monomial with coefficient 1; throws if a part exceeds the rank.
    static ChernPolynomial monomial(const Partition& mono, int rank);

    int rank() const { return rank_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    const std::map<Partition, Rational>& terms() const { return terms_; }
    Rational coefficient(const Partition& mono) const;

    /// Largest monomial weight; 0 for scalars and the zero polynomial.
    int degree() const;
    bool is_homogeneous() const;
    ChernPolynomial graded_part(int d) const;

    ChernPolynomial operator-() const;
    ChernPolynomial& operator+=(const ChernPolynomial& rhs);
    ChernPolynomial& operator-=(const ChernPolynomial& rhs);
    ChernPolynomial& operator*=(const ChernPolynomial& rhs);
    ChernPolynomial& operator*=(const Rational& s);
    ChernPolynomial pow(int e) const;

    friend ChernPolynomial operator+(ChernPolynomial a, const ChernPolynomial& b) { return a += b; }
    friend ChernPolynomial operator-(ChernPolynomial a, const ChernPolynomial& b) { return a -= b; }
    friend ChernPolynomial operator*(ChernPolynomial a, const ChernPolynomial& b) { return a *= b; }
    friend ChernPolynomial operator*(ChernPolynomial a, const Rational& s) { return a *= s; }
    friend ChernPolynomial operator*(const Rational& s, ChernPolynomial a) { return a *= s; }

    /// Value equality; the rank tag does not participate.
    friend bool operator==(const ChernPolynomial& a, const ChernPolynomial& b) {
        return a.terms_ == b.terms_;
    }

    /// Canonical text: monomials by degree, then descending-lex partition;
    /// e.g. "c1^2 - c2", "1 + 3*c1".
    std::string to_string() const;
    nlohmann::json to_json() const;

private:
    void add_term(const Partition& mono, const Rational& coeff);
    void adopt_rank(const ChernPolynomial& other);

    int rank_ = 0;
    std::map<Partition, Rational> terms_;
};

/// The product monomial c_{λ_1}···c_{λ_k}; rejects λ_1 > rank.
ChernPolynomial chern_monomial(const Partition& lambda, int rank);

/// Renders one monomial, e.g. "c2^2*c1"; the empty partition renders "1".
std::string chern_monomial_string(const Partition& mono);

}  // namespace chern

#endif
