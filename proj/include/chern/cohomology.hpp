#ifndef CHERN_COHOMOLOGY_HPP
#define CHERN_COHOMOLOGY_HPP

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "chern/rational.hpp"

namespace chern {

struct Generator {
    std::string name;
    int degree = 1;
};

/// Presentation of a truncated graded ring: named graded generators, monomial
/// kill rules (any multiple of a listed monomial is zero, on top of the
/// blanket truncation above the dimension), and an integration functional on
/// top-degree monomials. Monomials are exponent vectors over the generators.
class CohomologyModel {
public:
    CohomologyModel(int dimension, std::vector<Generator> generators);

    int dimension() const { return dimension_; }
    const std::vector<Generator>& generators() const { return generators_; }
    std::optional<int> generator_index(const std::string& name) const;

    void add_kill_rule(std::vector<int> exponents);
    void set_integral(std::vector<int> exponents, Rational value);

    const std::vector<std::vector<int>>& kill_rules() const { return kill_rules_; }
    const std::map<std::vector<int>, Rational>& integrals() const { return integrals_; }

    int monomial_degree(const std::vector<int>& exponents) const;
    bool killed(const std::vector<int>& exponents) const;
    std::optional<Rational> integral(const std::vector<int>& exponents) const;
    std::string monomial_string(const std::vector<int>& exponents) const;

private:
    void check_exponents(const std::vector<int>& exponents) const;

    int dimension_;
    std::vector<Generator> generators_;
    std::vector<std::vector<int>> kill_rules_;
    std::map<std::vector<int>, Rational> integrals_;
};

using ModelPtr = std::shared_ptr<const CohomologyModel>;

/// Ring element of a cohomology model; immutable model, value semantics.
/// A default-constructed Element is the zero of any model and combines
/// freely. Reduction (dimension truncation + kill rules) is applied on every
/// construction and product.
class Element {
public:
    Element() = default;
    static Element zero(ModelPtr model) { return Element(std::move(model), {}); }
    static Element scalar(ModelPtr model, Rational value);
    static Element one(ModelPtr model) { return scalar(std::move(model), Rational(1)); }
    static Element generator(ModelPtr model, int index);
    static Element monomial(ModelPtr model, std::vector<int> exponents, Rational coeff);

    const ModelPtr& model() const { return model_; }
    const std::map<std::vector<int>, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    Rational coefficient(const std::vector<int>& exponents) const;

    int degree() const;  // max term degree; 0 when zero
    bool is_homogeneous() const;
    Element graded_part(int d) const;

    Element operator-() const;
    Element& operator+=(const Element& rhs);
    Element& operator-=(const Element& rhs);
    Element& operator*=(const Element& rhs);
    Element& operator*=(const Rational& s);
    Element pow(int e) const;

    friend Element operator+(Element a, const Element& b) { return a += b; }
    friend Element operator-(Element a, const Element& b) { return a -= b; }
    friend Element operator*(Element a, const Element& b) { return a *= b; }
    friend Element operator*(Element a, const Rational& s) { return a *= s; }
    friend Element operator*(const Rational& s, Element a) { return a *= s; }

    friend bool operator==(const Element& a, const Element& b) { return a.terms_ == b.terms_; }

    std::string to_string() const;

private:
    Element(ModelPtr model, std::map<std::vector<int>, Rational> terms)
        : model_(std::move(model)), terms_(std::move(terms)) {}
    void reduce();
    void require_model(const Element& other);

    ModelPtr model_;
    std::map<std::vector<int>, Rational> terms_;
};

/// ∫ of a top-degree class; a nonzero term of degree != dimension is an
/// error (catches degree bookkeeping bugs), as is a top monomial without an
/// integral value. Passing allow_under_degree lets lower-degree terms
/// integrate to 0 on explicit request.
Rational integrate(const Element& cls, bool allow_under_degree = false);

}  // namespace chern

#endif
