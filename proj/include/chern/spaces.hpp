#ifndef CHERN_SPACES_HPP
#define CHERN_SPACES_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "chern/chern_polynomial.hpp"
#include "chern/cohomology.hpp"
#include "chern/partition.hpp"
#include "chern/rational.hpp"

namespace chern {

/// Positivity attributes are asserted catalog metadata, never inferred from
/// Chern data; `notes` records the provenance of each assertion.
struct SpaceFlags {
    bool polarization_very_ample = false;
    bool tangent_nef = false;
    bool canonical_ample_gg = false;  // K_M ample and globally generated
    std::string notes;
};

/// A cohomology model together with the tangent total Chern class and a
/// distinguished degree-1 polarization class.
struct PolarizedSpace {
    std::string name;
    std::string family;  // "projective" | "hypersurface" | "complete-intersection" | "product" | "file"
    ModelPtr model;
    int n = 0;                 // dimension
    std::optional<int> N;      // embedding dimension of the Kodaira map, when known
    Element tangent_chern;     // total Chern class of TM, unit part 1
    Element polarization;      // L, homogeneous of degree 1
    SpaceFlags flags;

    Element chern_class(int i) const { return tangent_chern.graded_part(i); }
    Element canonical_class() const { return -chern_class(1); }  // K_M = -c_1
};

/// Formal bundle over a space's model: a rank and a total Chern class.
/// Nefness is an asserted attribute with a provenance note.
struct FormalBundle {
    int rank = 0;
    Element total_chern;
    bool asserted_nef = false;
    std::string note;
};

// -- constructors -----------------------------------------------------------

/// (ℙⁿ, O(1)): one generator h, h^{n+1} = 0, ∫hⁿ = 1, c(TM) = (1+h)^{n+1}.
PolarizedSpace projective_space(int n);

/// Smooth degree-d hypersurface in ℙ^{n+1}, restricted hyperplane subring:
/// c(TM) = (1+h)^{n+2}·(1+dh)^{-1}, ∫hⁿ = d. d = 1 recovers ℙⁿ.
PolarizedSpace hypersurface(int n, int d);

/// Smooth complete intersection of the given degrees in ℙ^{n+c}:
/// c(TM) = (1+h)^{n+c+1}·Π(1+d_j h)^{-1}, ∫hⁿ = Πd_j.
PolarizedSpace complete_intersection(int n, const std::vector<int>& degrees);

/// Product with polarization Σ d_i·L_i (Künneth model; integrals multiply on
/// split monomials). N is computed only when every factor is embedded by a
/// complete linear system on a projective space (factor.N == factor.n).
PolarizedSpace product_space(const std::vector<PolarizedSpace>& factors,
                             const std::vector<int>& degrees);

// -- bundle calculus ---------------------------------------------------------

FormalBundle tangent_bundle(const PolarizedSpace& space);
FormalBundle trivial_bundle(const PolarizedSpace& space, int rank);

FormalBundle bundle_dual(const FormalBundle& b);
FormalBundle bundle_direct_sum(const FormalBundle& a, const FormalBundle& b);
/// E ⊗ L for a degree-1 class with c_1(L) = ell.
FormalBundle bundle_tensor_line(const FormalBundle& b, const Element& ell);

/// Segre classes s_0..s_n in the model ring.
std::vector<Element> segre_classes(const FormalBundle& b, int dimension);
std::vector<Element> segre_classes(const PolarizedSpace& space);

/// ∫ c_λ(TM) over λ ∈ Γ(n, n), in canonical enumeration order.
std::map<Partition, Rational> chern_numbers(const PolarizedSpace& space);

/// Substitute c_i := c_i(E) into an abstract Chern polynomial.
Element instantiate(const ChernPolynomial& p, const FormalBundle& b);

Rational integrate(const PolarizedSpace& space, const Element& cls);

}  // namespace chern

#endif
