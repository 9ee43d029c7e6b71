#ifndef CHERN_CERTIFICATE_HPP
#define CHERN_CERTIFICATE_HPP

#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <json.hpp>

#include "chern/chern_polynomial.hpp"
#include "chern/partition.hpp"
#include "chern/rational.hpp"
#include "chern/schur.hpp"

namespace chern {

/// Witness that a polynomial lies in the nonnegative Schur cone: a list of
/// (coefficient >= 0, partition) pairs whose Schur combination reproduces the
/// target exactly. Entries are kept in canonical order (degree, then
/// ascending lex).
struct Certificate {
    int rank = 0;
    int degree = 0;
    std::vector<std::pair<Rational, Partition>> entries;
    std::string provenance;  // "constructive-telescoping" | "basis-solve"
    std::string target;      // canonical text of the certified polynomial
    bool verified = false;

    ChernPolynomial expand() const;
    std::string to_string() const;  // "c1^2 - c2 = 1*S(1,1)"
    nlohmann::json to_json() const;
};

struct Refutation {
    Partition witness;     // partition of the most negative Schur coordinate
    Rational coefficient;  // that coordinate (< 0)
    std::string target;
};

using MembershipResult = std::variant<Certificate, Refutation>;

/// Constructive certificate for c_λ - c_k (k = weight λ): telescopes the
/// monomial into two-row Schur brackets and flattens the residual single-row
/// factors through the Schur basis. The expansion is re-verified against
/// chern_monomial(λ) - c_k before returning; a mismatch is an internal fault.
Certificate monomial_gap_certificate(const Partition& lambda, int rank);

/// Schur-cone membership of a homogeneous polynomial: a certificate when all
/// Schur coordinates are >= 0, otherwise the most negative coordinate as a
/// refutation witness.
MembershipResult schur_cone_membership(const ChernPolynomial& p);

}  // namespace chern

#endif
