#ifndef CHERN_REPORT_HPP
#define CHERN_REPORT_HPP

#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "chern/rational.hpp"

namespace chern {

enum class Orientation { GreaterEqual, LessEqual };

/// Outcome of one inequality evaluation. All values are exact; `holds` and
/// `equality` are derived from lhs/rhs under the theorem's orientation.
/// `scope` records that the check is an integral pairing against powers of
/// the polarization, not class-level positivity.
struct VerificationReport {
    std::string space;
    std::string theorem;
    std::map<std::string, std::string> params;  // "k", "lambda", "a", "eps", ...
    Rational lhs{0};
    Rational rhs{0};
    Orientation orientation = Orientation::GreaterEqual;
    bool holds = false;
    bool equality = false;
    std::string note;
    std::string scope = "integral pairings against powers of L";

    void finalize();  // recompute holds/equality from lhs, rhs, orientation

    std::string pretty() const;
    nlohmann::json to_json() const;
    static VerificationReport from_json(const nlohmann::json& j);

    static std::string csv_header();
    std::string csv_row() const;

    friend bool operator==(const VerificationReport&, const VerificationReport&) = default;
};

/// Canonical report order for emission: space, theorem, params.
void sort_reports(std::vector<VerificationReport>& reports);

std::string reports_to_json_text(const std::vector<VerificationReport>& reports);
std::string reports_to_csv_text(const std::vector<VerificationReport>& reports);

}  // namespace chern

#endif
