#ifndef CHERN_THEOREMS_HPP
#define CHERN_THEOREMS_HPP

#include <optional>
#include <utility>
#include <vector>

#include "chern/report.hpp"
#include "chern/spaces.hpp"

namespace chern {

/// The degree-k class Σ_{i=0}^k (-1)^i C(n+k, k-i) · s_i(M) · L^{k-i}.
/// Computed twice — from the binomial sum and as s_k((C ⊕ T*M) ⊗ L) through
/// the tautological exact sequence — and cross-asserted before returning.
Element sharp_family_class(const PolarizedSpace& space, int k);

/// Pairs the sharp-family class with L^{n-k} and reports nonnegativity.
/// Notes when k > min(n, N-n) forces the class to vanish.
VerificationReport verify_sharp_family(const PolarizedSpace& space, int k);

/// k = 2 case with equality classification: projective space (L^n = 1) or a
/// hypersurface of degree L^n in P^{n+1}; cross-checked against the
/// catalog's embedding dimension.
VerificationReport verify_k2_equality_case(const PolarizedSpace& space);

/// For c_1 = 0: the two simplified inequalities; equality in the first flags
/// the expected degree-(n+2) hypersurface embedding.
std::vector<VerificationReport> verify_calabi_yau(const PolarizedSpace& space);

/// Total Chern class of the Gauss pullback γ*(S*), rank n+1, computed as
/// (1 + L) · c(T*M ⊗ L); the degree-1/2 parts are asserted against
/// -c_1 + (n+1)L and n(n+1)/2·L² - n·c_1·L + c_2.
FormalBundle gauss_dual_bundle(const PolarizedSpace& space);

/// [n(n+1)/2·L² - n·c_1·L + c_2]·[-c_1+(n+1)L]^{n-2} <= [-c_1+(n+1)L]^n.
VerificationReport verify_chern_number_inequality(const PolarizedSpace& space);

/// The globally-generated consequence and, when K_M is asserted ample and
/// globally generated, the reverse Miyaoka–Yau bound
/// c_2(-c_1)^{n-2} <= ((n+2)^5+n)/(2(n+1))·(-c_1)^n.
std::vector<VerificationReport> verify_reverse_my(const PolarizedSpace& space);

/// [½(n+2)(n+1)a² - ε(n+2)a + 1]·(εc_1)^n >= c_2·(εc_1)^{n-2} for
/// L = a·K_M (ε = -1) or L = a·c_1 (ε = +1), a > 0; validates the
/// polarization against the chosen (a, ε) and, on equality, the relation
/// 1/a = ε(n+2-L^n) plus the hypersurface-degree classification.
VerificationReport verify_reverse_my_sharp(const PolarizedSpace& space, const Rational& a, int eps);

/// When c_1 is an exact nonzero rational multiple t·L, the (a, ε) pair that
/// makes verify_reverse_my_sharp applicable; nullopt otherwise.
std::optional<std::pair<Rational, int>> derive_proportional_polarization(const PolarizedSpace& space);

/// ∫c_λ(E)·ω^{n-k} >= ∫c_k(E)·ω^{n-k} >= 0 for k <= n, λ ∈ Γ(k, rank E),
/// with ω = L; refuses when nefness is not asserted. At k = n the lower
/// bound is the Euler number.
std::vector<VerificationReport> verify_euler_chain(const FormalBundle& bundle,
                                                   const PolarizedSpace& space);

/// ∫S_λ(c(E))·ω^{n-k} >= 0 for k <= n, λ ∈ Γ(k, rank E).
std::vector<VerificationReport> verify_dps_schur(const FormalBundle& bundle,
                                                 const PolarizedSpace& space);

}  // namespace chern

#endif
