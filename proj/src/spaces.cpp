#include "chern/spaces.hpp"

#include <algorithm>
#include <stdexcept>

#include "chern/series.hpp"

namespace chern {

namespace {

/// (1 + d·h)^{-1} truncated at the model dimension.
Element inverse_linear(const ModelPtr& model, const Element& h, int d) {
    Element acc = Element::one(model);
    Element power = Element::one(model);
    for (int k = 1; k <= model->dimension(); ++k) {
        power *= h;
        Rational coeff = Rational((k % 2 == 0) ? 1 : -1);
        for (int i = 0; i < k; ++i) coeff *= d;
        acc += power * coeff;
    }
    return acc;
}

Element binomial_power(const ModelPtr& model, const Element& h, int exponent) {
    Element acc = Element::one(model);
    Element base = Element::one(model) + h;
    for (int i = 0; i < exponent; ++i) acc *= base;
    return acc;
}

}  // namespace

PolarizedSpace projective_space(int n) {
    if (n < 1) throw std::invalid_argument("projective space needs n >= 1");
    auto model = std::make_shared<CohomologyModel>(n, std::vector<Generator>{{"h", 1}});
    model->add_kill_rule({n + 1});
    model->set_integral({n}, Rational(1));
    ModelPtr m = model;

    PolarizedSpace s;
    s.name = "P" + std::to_string(n);
    s.family = "projective";
    s.model = m;
    s.n = n;
    s.N = n;
    Element h = Element::generator(m, 0);
    s.tangent_chern = binomial_power(m, h, n + 1);
    s.polarization = h;
    s.flags.polarization_very_ample = true;
    s.flags.tangent_nef = true;
    s.flags.notes = "O(1) hyperplane class; tangent bundle globally generated";
    return s;
}

PolarizedSpace complete_intersection(int n, const std::vector<int>& degrees) {
    if (n < 1) throw std::invalid_argument("complete intersection needs n >= 1");
    if (degrees.empty()) throw std::invalid_argument("complete intersection needs degrees");
    for (int d : degrees)
        if (d < 1) throw std::invalid_argument("complete intersection degrees must be >= 1");
    const int c = static_cast<int>(degrees.size());

    auto model = std::make_shared<CohomologyModel>(n, std::vector<Generator>{{"h", 1}});
    model->add_kill_rule({n + 1});
    Rational top(1);
    for (int d : degrees) top *= d;
    model->set_integral({n}, top);
    ModelPtr m = model;

    PolarizedSpace s;
    s.family = c == 1 ? "hypersurface" : "complete-intersection";
    s.model = m;
    s.n = n;
    int nontrivial = static_cast<int>(std::count_if(degrees.begin(), degrees.end(),
                                                    [](int d) { return d >= 2; }));
    s.N = n + nontrivial;  // Kodaira map of O(1); degree-1 slices stay inside a smaller P^k
    Element h = Element::generator(m, 0);
    Element chern = binomial_power(m, h, n + c + 1);
    for (int d : degrees) chern *= inverse_linear(m, h, d);
    s.tangent_chern = chern;
    s.polarization = h;
    s.flags.polarization_very_ample = true;
    s.flags.notes = "restriction of the ambient hyperplane class";

    std::string degs;
    for (size_t i = 0; i < degrees.size(); ++i)
        degs += (i ? "x" : "") + std::to_string(degrees[i]);
    s.name = (c == 1 ? "X" : "CI") + std::to_string(n) + "_d" + degs;
    return s;
}

PolarizedSpace hypersurface(int n, int d) {
    PolarizedSpace s = complete_intersection(n, {d});
    s.family = "hypersurface";
    return s;
}

PolarizedSpace product_space(const std::vector<PolarizedSpace>& factors,
                             const std::vector<int>& degrees) {
    if (factors.size() < 2) throw std::invalid_argument("product needs at least two factors");
    if (degrees.size() != factors.size())
        throw std::invalid_argument("one polarization degree per factor required");
    for (int d : degrees)
        if (d < 1) throw std::invalid_argument("polarization degrees must be >= 1");

    int n = 0;
    std::vector<Generator> gens;
    std::vector<size_t> offsets;
    for (size_t f = 0; f < factors.size(); ++f) {
        offsets.push_back(gens.size());
        n += factors[f].n;
        for (const auto& g : factors[f].model->generators()) {
            std::string name = g.name;
            bool clash = std::any_of(gens.begin(), gens.end(),
                                     [&](const Generator& e) { return e.name == name; });
            if (clash) name += std::to_string(f + 1);
            gens.push_back({name, g.degree});
        }
    }
    auto model = std::make_shared<CohomologyModel>(n, gens);

    auto embed = [&](size_t f, const std::vector<int>& exps) {
        std::vector<int> out(gens.size(), 0);
        std::copy(exps.begin(), exps.end(), out.begin() + static_cast<long>(offsets[f]));
        return out;
    };

    for (size_t f = 0; f < factors.size(); ++f)
        for (const auto& rule : factors[f].model->kill_rules())
            model->add_kill_rule(embed(f, rule));

    // Künneth: integrals multiply over split monomials; every surviving
    // top-degree monomial splits with each block at its factor's top degree.
    std::vector<std::pair<std::vector<int>, Rational>> split{{std::vector<int>(gens.size(), 0),
                                                              Rational(1)}};
    for (size_t f = 0; f < factors.size(); ++f) {
        std::vector<std::pair<std::vector<int>, Rational>> next;
        for (const auto& [exps, value] : split) {
            for (const auto& [fexps, fvalue] : factors[f].model->integrals()) {
                auto merged = exps;
                std::copy(fexps.begin(), fexps.end(),
                          merged.begin() + static_cast<long>(offsets[f]));
                next.emplace_back(std::move(merged), value * fvalue);
            }
        }
        split = std::move(next);
    }
    for (auto& [exps, value] : split) model->set_integral(std::move(exps), std::move(value));
    ModelPtr m = model;

    auto pull_back = [&](size_t f, const Element& e) {
        Element out = Element::zero(m);
        for (const auto& [exps, coeff] : e.terms())
            out += Element::monomial(m, embed(f, exps), coeff);
        return out;
    };

    PolarizedSpace s;
    s.family = "product";
    s.model = m;
    s.n = n;
    s.tangent_chern = Element::one(m);
    s.polarization = Element::zero(m);
    bool nef = true, know_n = true;
    std::string name;
    for (size_t f = 0; f < factors.size(); ++f) {
        s.tangent_chern *= pull_back(f, factors[f].tangent_chern);
        s.polarization += pull_back(f, factors[f].polarization) * Rational(degrees[f]);
        nef = nef && factors[f].flags.tangent_nef;
        know_n = know_n && factors[f].N && *factors[f].N == factors[f].n;
        name += (f ? "x" : "") + factors[f].name;
    }
    if (know_n) {
        // dim H^0(P^m, O(d)) = C(m+d, d); sections of an external tensor
        // product multiply.
        Rational h0(1);
        for (size_t f = 0; f < factors.size(); ++f)
            h0 *= binomial(factors[f].n + degrees[f], degrees[f]);
        s.N = static_cast<int>(to_long(h0)) - 1;
    }
    s.name = name;
    s.flags.polarization_very_ample = true;
    s.flags.tangent_nef = nef;
    s.flags.notes = "product polarization sum of pulled-back factor classes";
    return s;
}

FormalBundle tangent_bundle(const PolarizedSpace& space) {
    return {space.n, space.tangent_chern, space.flags.tangent_nef,
            space.flags.tangent_nef ? "nef per catalog assertion on " + space.name : ""};
}

FormalBundle trivial_bundle(const PolarizedSpace& space, int rank) {
    if (rank < 1) throw std::invalid_argument("bundle rank must be >= 1");
    return {rank, Element::one(space.model), true, "trivial bundle"};
}

FormalBundle bundle_dual(const FormalBundle& b) {
    FormalBundle out = b;
    out.asserted_nef = false;
    out.note = "";
    Element total = Element::zero(b.total_chern.model());
    int top = b.total_chern.degree();
    for (int d = 0; d <= top; ++d) {
        Element part = b.total_chern.graded_part(d);
        total += (d % 2 == 1) ? part * Rational(-1) : part;
    }
    out.total_chern = total;
    return out;
}

FormalBundle bundle_direct_sum(const FormalBundle& a, const FormalBundle& b) {
    FormalBundle out;
    out.rank = a.rank + b.rank;
    out.total_chern = a.total_chern * b.total_chern;  // Whitney formula
    out.asserted_nef = a.asserted_nef && b.asserted_nef;
    return out;
}

FormalBundle bundle_tensor_line(const FormalBundle& b, const Element& ell) {
    const ModelPtr& m = b.total_chern.model();
    if (!m) throw std::invalid_argument("tensor with a model-free bundle");
    if (!ell.is_zero() && !(ell.is_homogeneous() && ell.degree() == 1))
        throw std::invalid_argument("line class must be homogeneous of degree 1");
    std::vector<Element> comps =
        graded_components(b.total_chern, std::min(b.rank, m->dimension()));
    comps.resize(static_cast<size_t>(b.rank) + 1, Element::zero(m));
    FormalBundle out;
    out.rank = b.rank;
    out.total_chern = chern_tensor_line(comps, b.rank, ell);
    return out;
}

std::vector<Element> segre_classes(const FormalBundle& b, int dimension) {
    return segre_from_total_chern(b.total_chern, dimension);
}

std::vector<Element> segre_classes(const PolarizedSpace& space) {
    return segre_classes(tangent_bundle(space), space.n);
}

std::map<Partition, Rational> chern_numbers(const PolarizedSpace& space) {
    std::map<Partition, Rational> out;
    for (const Partition& lam : enumerate_gamma(space.n, space.n)) {
        Element cls = Element::one(space.model);
        for (int part : lam.parts()) cls *= space.chern_class(part);
        out.emplace(lam, integrate(space, cls));
    }
    return out;
}

Element instantiate(const ChernPolynomial& p, const FormalBundle& b) {
    const ModelPtr& m = b.total_chern.model();
    if (!m) throw std::invalid_argument("instantiate needs a modeled bundle");
    Element out = Element::zero(m);
    for (const auto& [mono, coeff] : p.terms()) {
        Element term = Element::scalar(m, coeff);
        for (int part : mono.parts()) term *= b.total_chern.graded_part(part);
        out += term;
    }
    return out;
}

Rational integrate(const PolarizedSpace& space, const Element& cls) {
    if (cls.model() && cls.model() != space.model)
        throw std::invalid_argument("class does not live on " + space.name);
    return integrate(cls);
}

}  // namespace chern
