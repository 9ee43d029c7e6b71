#include "chern/catalog.hpp"

#include <stdexcept>

#include "chern/space_file.hpp"
#include "chern/theorems.hpp"

namespace chern {

namespace {

PolarizedSpace named(PolarizedSpace s, const std::string& name) {
    s.name = name;
    return s;
}

PolarizedSpace with_nef_tangent(PolarizedSpace s, const std::string& why) {
    s.flags.tangent_nef = true;
    s.flags.notes += "; " + why;
    return s;
}

PolarizedSpace with_canonical_ample(PolarizedSpace s, const std::string& why) {
    s.flags.canonical_ample_gg = true;
    s.flags.notes += "; " + why;
    return s;
}

std::vector<CatalogEntry> build_catalog() {
    std::vector<CatalogEntry> out;
    auto add = [&out](PolarizedSpace s) {
        std::vector<std::string> tags = derive_tags(s);
        out.push_back({std::move(s), std::move(tags)});
    };

    for (int n = 1; n <= 6; ++n) add(projective_space(n));

    add(with_nef_tangent(named(hypersurface(2, 2), "quadric_surface"),
                         "smooth quadric is homogeneous, tangent bundle globally generated"));
    add(named(hypersurface(2, 3), "cubic_surface"));
    add(named(hypersurface(2, 4), "quartic_surface"));
    add(with_canonical_ample(named(hypersurface(2, 5), "quintic_surface"),
                             "K restricts from O(1), very ample"));
    add(with_nef_tangent(named(hypersurface(3, 2), "quadric_threefold"),
                         "smooth quadric is homogeneous, tangent bundle globally generated"));
    add(named(hypersurface(3, 5), "quintic_threefold"));
    add(with_canonical_ample(named(hypersurface(3, 7), "septic_threefold"),
                             "K restricts from O(2), very ample"));
    add(named(hypersurface(4, 6), "sextic_fourfold"));
    add(named(hypersurface(5, 7), "septic_fivefold"));

    add(named(complete_intersection(2, {2, 2}), "del_pezzo_quartic"));
    add(named(complete_intersection(3, {3, 3}), "bicubic_threefold"));
    add(with_nef_tangent(named(complete_intersection(1, {3}), "elliptic_curve"),
                         "trivial tangent bundle (genus one)"));

    PolarizedSpace p1 = projective_space(1), p2 = projective_space(2);
    add(named(product_space({p1, p1}, {1, 1}), "p1xp1"));
    add(named(product_space({p1, p1}, {1, 2}), "p1xp1_12"));
    add(named(product_space({p1, p2}, {1, 1}), "p1xp2"));
    add(named(product_space({p2, p2}, {1, 1}), "p2xp2"));
    return out;
}

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t comma = text.find(',', pos);
        std::string tok = text.substr(pos, comma == std::string::npos ? std::string::npos
                                                                      : comma - pos);
        if (tok.empty()) throw std::invalid_argument("empty number in selector parameters");
        size_t used = 0;
        int v = std::stoi(tok, &used);
        if (used != tok.size()) throw std::invalid_argument("malformed selector number: " + tok);
        out.push_back(v);
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return out;
}

}  // namespace

std::vector<std::string> derive_tags(const PolarizedSpace& space) {
    std::vector<std::string> tags{space.family};
    if (space.chern_class(1).is_zero()) tags.push_back("cy");
    if (auto params = derive_proportional_polarization(space))
        tags.push_back(params->second > 0 ? "fano" : "general-type");
    if (space.flags.tangent_nef) tags.push_back("nef-tangent");
    if (space.flags.canonical_ample_gg) tags.push_back("canonical-ample");
    return tags;
}

const std::vector<CatalogEntry>& builtin_catalog() {
    static const std::vector<CatalogEntry> catalog = build_catalog();
    return catalog;
}

std::optional<PolarizedSpace> find_space(const std::string& selector) {
    for (const auto& entry : builtin_catalog())
        if (entry.space.name == selector) return entry.space;

    auto colon = selector.find(':');
    if (colon == std::string::npos) return std::nullopt;
    std::string family = selector.substr(0, colon);
    std::string args = selector.substr(colon + 1);

    if (family == "file") return load_space_file(args);
    if (family == "P" || family == "p" || family == "projective") {
        auto v = parse_int_list(args);
        if (v.size() != 1) throw std::invalid_argument("projective selector takes one dimension");
        return projective_space(v[0]);
    }
    if (family == "hypersurface") {
        auto v = parse_int_list(args);
        if (v.size() != 2)
            throw std::invalid_argument("hypersurface selector takes dimension,degree");
        return hypersurface(v[0], v[1]);
    }
    if (family == "ci" || family == "complete-intersection") {
        auto v = parse_int_list(args);
        if (v.size() < 2)
            throw std::invalid_argument("ci selector takes dimension,degree[,degree...]");
        return complete_intersection(v[0], {v.begin() + 1, v.end()});
    }
    return std::nullopt;
}

}  // namespace chern
