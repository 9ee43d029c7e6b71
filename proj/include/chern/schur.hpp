#ifndef CHERN_SCHUR_HPP
#define CHERN_SCHUR_HPP

#include <map>
#include <string>

#include <json.hpp>

#include "chern/chern_polynomial.hpp"
#include "chern/partition.hpp"
#include "chern/rational.hpp"

namespace chern {

/// Coordinates of a polynomial over the Schur basis {S_λ : λ ∈ Γ(k,r)},
/// one graded piece per key weight; the empty partition carries the scalar.
struct SchurExpansion {
    int rank = 0;
    std::map<Partition, Rational> coefficients;

    bool is_zero() const { return coefficients.empty(); }
    Rational coefficient(const Partition& lambda) const;
    SchurExpansion& operator+=(const SchurExpansion& rhs);

    /// Σ a_λ · S_λ, expanded back to Chern variables.
    ChernPolynomial reconstruct() const;

    /// e.g. "S(2) + S(1,1)"; within a degree ascending-lex.
    std::string to_string() const;
    nlohmann::json to_json() const;

    friend bool operator==(const SchurExpansion& a, const SchurExpansion& b) {
        return a.coefficients == b.coefficients;
    }
};

/// Schur polynomial S_λ(c_1..c_r) = det(c_{λ_i - i + j}), with c_0 = 1 and
/// c_m = 0 for m outside [0, r]. Identically zero when λ_1 > r. The
/// determinant is taken at size ℓ(λ); padding λ with zeros to any larger size
/// leaves the value unchanged (tested).
ChernPolynomial schur(const Partition& lambda, int rank);

/// Same determinant at an explicit size >= ℓ(λ) (the padded convention);
/// exists for tests of the padding invariance.
ChernPolynomial schur_padded(const Partition& lambda, int rank, int size);

/// Exact coordinates over the Schur basis, solved per graded degree by
/// back-substitution along dominance order (the transition matrix is
/// unitriangular). Throws logic_error if the basis fails to span (internal
/// fault; cannot happen for well-formed inputs).
SchurExpansion to_schur_basis(const ChernPolynomial& p);

/// S_λ · S_μ in the Schur basis; coefficients are the Littlewood–Richardson
/// numbers truncated at the rank, hence nonnegative integers.
SchurExpansion schur_product(const Partition& lambda, const Partition& mu, int rank);

}  // namespace chern

#endif
