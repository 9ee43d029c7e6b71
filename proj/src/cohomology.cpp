#include "chern/cohomology.hpp"

#include <algorithm>
#include <stdexcept>

namespace chern {

CohomologyModel::CohomologyModel(int dimension, std::vector<Generator> generators)
    : dimension_(dimension), generators_(std::move(generators)) {
    if (dimension < 1) throw std::invalid_argument("model dimension must be >= 1");
    if (generators_.empty()) throw std::invalid_argument("model needs at least one generator");
    for (const auto& g : generators_) {
        if (g.name.empty()) throw std::invalid_argument("generator without a name");
        if (g.degree < 1 || g.degree > dimension)
            throw std::invalid_argument("generator degree out of range: " + g.name);
    }
    for (size_t i = 0; i < generators_.size(); ++i)
        for (size_t j = i + 1; j < generators_.size(); ++j)
            if (generators_[i].name == generators_[j].name)
                throw std::invalid_argument("duplicate generator name: " + generators_[i].name);
}

std::optional<int> CohomologyModel::generator_index(const std::string& name) const {
    for (size_t i = 0; i < generators_.size(); ++i)
        if (generators_[i].name == name) return static_cast<int>(i);
    return std::nullopt;
}

void CohomologyModel::check_exponents(const std::vector<int>& exponents) const {
    if (exponents.size() != generators_.size())
        throw std::invalid_argument("exponent vector length does not match generator count");
    for (int e : exponents)
        if (e < 0) throw std::invalid_argument("negative exponent in monomial");
}

void CohomologyModel::add_kill_rule(std::vector<int> exponents) {
    check_exponents(exponents);
    kill_rules_.push_back(std::move(exponents));
}

void CohomologyModel::set_integral(std::vector<int> exponents, Rational value) {
    check_exponents(exponents);
    if (monomial_degree(exponents) != dimension_)
        throw std::invalid_argument("integral assigned to a monomial of non-top degree");
    integrals_[std::move(exponents)] = std::move(value);
}

int CohomologyModel::monomial_degree(const std::vector<int>& exponents) const {
    int d = 0;
    for (size_t i = 0; i < exponents.size(); ++i) d += exponents[i] * generators_[i].degree;
    return d;
}

bool CohomologyModel::killed(const std::vector<int>& exponents) const {
    if (monomial_degree(exponents) > dimension_) return true;
    for (const auto& rule : kill_rules_) {
        bool divisible = true;
        for (size_t i = 0; i < rule.size(); ++i)
            if (exponents[i] < rule[i]) {
                divisible = false;
                break;
            }
        if (divisible) return true;
    }
    return false;
}

std::optional<Rational> CohomologyModel::integral(const std::vector<int>& exponents) const {
    auto it = integrals_.find(exponents);
    if (it == integrals_.end()) return std::nullopt;
    return it->second;
}

std::string CohomologyModel::monomial_string(const std::vector<int>& exponents) const {
    std::string out;
    for (size_t i = 0; i < exponents.size(); ++i) {
        if (exponents[i] == 0) continue;
        if (!out.empty()) out += '*';
        out += generators_[i].name;
        if (exponents[i] > 1) out += "^" + std::to_string(exponents[i]);
    }
    return out.empty() ? "1" : out;
}

Element Element::scalar(ModelPtr model, Rational value) {
    if (!model) throw std::invalid_argument("scalar element needs a model");
    std::map<std::vector<int>, Rational> terms;
    if (value != 0)
        terms.emplace(std::vector<int>(model->generators().size(), 0), std::move(value));
    return Element(std::move(model), std::move(terms));
}

Element Element::generator(ModelPtr model, int index) {
    if (!model) throw std::invalid_argument("generator element needs a model");
    if (index < 0 || index >= static_cast<int>(model->generators().size()))
        throw std::invalid_argument("generator index out of range");
    std::vector<int> exps(model->generators().size(), 0);
    exps[static_cast<size_t>(index)] = 1;
    return monomial(std::move(model), std::move(exps), Rational(1));
}

Element Element::monomial(ModelPtr model, std::vector<int> exponents, Rational coeff) {
    if (!model) throw std::invalid_argument("monomial element needs a model");
    std::map<std::vector<int>, Rational> terms;
    if (coeff != 0) terms.emplace(std::move(exponents), std::move(coeff));
    Element e(std::move(model), std::move(terms));
    e.reduce();
    return e;
}

bool Element::is_one() const {
    if (terms_.size() != 1) return false;
    const auto& [exps, coeff] = *terms_.begin();
    if (coeff != 1) return false;
    return std::all_of(exps.begin(), exps.end(), [](int e) { return e == 0; });
}

Rational Element::coefficient(const std::vector<int>& exponents) const {
    auto it = terms_.find(exponents);
    return it == terms_.end() ? Rational(0) : it->second;
}

int Element::degree() const {
    int d = 0;
    for (const auto& [exps, coeff] : terms_)
        d = std::max(d, model_->monomial_degree(exps));
    return d;
}

bool Element::is_homogeneous() const {
    if (terms_.empty()) return true;
    int d = model_->monomial_degree(terms_.begin()->first);
    for (const auto& [exps, coeff] : terms_)
        if (model_->monomial_degree(exps) != d) return false;
    return true;
}

Element Element::graded_part(int d) const {
    Element out(model_, {});
    for (const auto& [exps, coeff] : terms_)
        if (model_->monomial_degree(exps) == d) out.terms_.emplace(exps, coeff);
    return out;
}

void Element::reduce() {
    if (!model_) return;
    for (auto it = terms_.begin(); it != terms_.end();) {
        if (it->second == 0 || model_->killed(it->first)) it = terms_.erase(it);
        else ++it;
    }
}

void Element::require_model(const Element& other) {
    if (!model_) model_ = other.model_;
    else if (other.model_ && other.model_ != model_)
        throw std::logic_error("elements of different cohomology models combined");
}

Element Element::operator-() const {
    Element out(*this);
    for (auto& [exps, coeff] : out.terms_) coeff = -coeff;
    return out;
}

Element& Element::operator+=(const Element& rhs) {
    require_model(rhs);
    for (const auto& [exps, coeff] : rhs.terms_) {
        auto [it, inserted] = terms_.try_emplace(exps, coeff);
        if (!inserted) {
            it->second += coeff;
            if (it->second == 0) terms_.erase(it);
        }
    }
    return *this;
}

Element& Element::operator-=(const Element& rhs) { return *this += -rhs; }

Element& Element::operator*=(const Element& rhs) {
    require_model(rhs);
    std::map<std::vector<int>, Rational> product;
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : rhs.terms_) {
            std::vector<int> exps(ea.size());
            for (size_t i = 0; i < ea.size(); ++i) exps[i] = ea[i] + eb[i];
            if (model_->killed(exps)) continue;
            Rational c = ca * cb;
            auto [it, inserted] = product.try_emplace(std::move(exps), c);
            if (!inserted) {
                it->second += c;
                if (it->second == 0) product.erase(it);
            }
        }
    }
    terms_ = std::move(product);
    return *this;
}

Element& Element::operator*=(const Rational& s) {
    if (s == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [exps, coeff] : terms_) coeff *= s;
    return *this;
}

Element Element::pow(int e) const {
    if (e < 0) throw std::invalid_argument("negative power of an element");
    if (!model_) {
        if (e == 0) throw std::invalid_argument("0^0 of a model-free zero element");
        return *this;
    }
    Element out = one(model_);
    for (int i = 0; i < e; ++i) out *= *this;
    return out;
}

std::string Element::to_string() const {
    if (terms_.empty()) return "0";
    std::vector<const std::pair<const std::vector<int>, Rational>*> order;
    for (const auto& t : terms_) order.push_back(&t);
    std::sort(order.begin(), order.end(), [this](const auto* a, const auto* b) {
        int da = model_->monomial_degree(a->first), db = model_->monomial_degree(b->first);
        if (da != db) return da < db;
        return a->first < b->first;
    });
    std::string out;
    for (const auto* t : order) {
        const Rational& c = t->second;
        bool negative = c < 0;
        Rational mag = negative ? Rational(-c) : c;
        if (out.empty()) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        std::string ms = model_->monomial_string(t->first);
        if (ms == "1") out += chern::to_string(mag);
        else if (mag == 1) out += ms;
        else out += chern::to_string(mag) + "*" + ms;
    }
    return out;
}

Rational integrate(const Element& cls, bool allow_under_degree) {
    if (cls.is_zero()) return Rational(0);
    const auto& model = *cls.model();
    Rational total(0);
    for (const auto& [exps, coeff] : cls.terms()) {
        if (model.monomial_degree(exps) != model.dimension()) {
            if (allow_under_degree && model.monomial_degree(exps) < model.dimension()) continue;
            throw std::invalid_argument("integrand contains a term of degree " +
                                        std::to_string(model.monomial_degree(exps)) +
                                        " != dimension " + std::to_string(model.dimension()));
        }
        auto value = model.integral(exps);
        if (!value)
            throw std::logic_error("no integral value for top monomial " +
                                   model.monomial_string(exps));
        total += coeff * *value;
    }
    return total;
}

}  // namespace chern
