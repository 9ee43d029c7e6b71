#include "chern/report.hpp"

#include <algorithm>
#include <sstream>

namespace chern {

void VerificationReport::finalize() {
    equality = lhs == rhs;
    holds = orientation == Orientation::GreaterEqual ? lhs >= rhs : lhs <= rhs;
}

std::string VerificationReport::pretty() const {
    std::ostringstream out;
    out << (holds ? "PASS" : "FAIL") << "  " << space << "  " << theorem;
    for (const auto& [key, value] : params) out << " " << key << "=" << value;
    out << ": " << to_string(lhs) << (orientation == Orientation::GreaterEqual ? " >= " : " <= ")
        << to_string(rhs);
    if (equality) out << " (equality)";
    if (!note.empty()) out << "  [" << note << "]";
    return out.str();
}

nlohmann::json VerificationReport::to_json() const {
    nlohmann::json p = nlohmann::json::object();
    for (const auto& [key, value] : params) p[key] = value;
    return {{"space", space},
            {"theorem", theorem},
            {"params", p},
            {"lhs", to_string(lhs)},
            {"rhs", to_string(rhs)},
            {"relation", orientation == Orientation::GreaterEqual ? ">=" : "<="},
            {"holds", holds},
            {"equality", equality},
            {"note", note},
            {"scope", scope}};
}

VerificationReport VerificationReport::from_json(const nlohmann::json& j) {
    VerificationReport r;
    r.space = j.at("space").get<std::string>();
    r.theorem = j.at("theorem").get<std::string>();
    for (const auto& [key, value] : j.at("params").items())
        r.params[key] = value.get<std::string>();
    r.lhs = rational_from_string(j.at("lhs").get<std::string>());
    r.rhs = rational_from_string(j.at("rhs").get<std::string>());
    r.orientation = j.at("relation").get<std::string>() == ">=" ? Orientation::GreaterEqual
                                                                : Orientation::LessEqual;
    r.holds = j.at("holds").get<bool>();
    r.equality = j.at("equality").get<bool>();
    r.note = j.at("note").get<std::string>();
    r.scope = j.at("scope").get<std::string>();
    return r;
}

std::string VerificationReport::csv_header() {
    return "space,theorem,k,lhs,rhs,holds,equality";
}

std::string VerificationReport::csv_row() const {
    auto it = params.find("k");
    std::string k = it == params.end() ? "" : it->second;
    std::ostringstream out;
    out << space << ',' << theorem << ',' << k << ',' << to_string(lhs) << ',' << to_string(rhs)
        << ',' << (holds ? "true" : "false") << ',' << (equality ? "true" : "false");
    return out.str();
}

void sort_reports(std::vector<VerificationReport>& reports) {
    std::stable_sort(reports.begin(), reports.end(),
                     [](const VerificationReport& a, const VerificationReport& b) {
                         if (a.space != b.space) return a.space < b.space;
                         if (a.theorem != b.theorem) return a.theorem < b.theorem;
                         return a.params < b.params;
                     });
}

std::string reports_to_json_text(const std::vector<VerificationReport>& reports) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : reports) arr.push_back(r.to_json());
    return arr.dump(2);
}

std::string reports_to_csv_text(const std::vector<VerificationReport>& reports) {
    std::string out = VerificationReport::csv_header();
    for (const auto& r : reports) out += "\n" + r.csv_row();
    return out;
}

}  // namespace chern
