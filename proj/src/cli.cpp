#include "chern/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "chern/catalog.hpp"
#include "chern/certificate.hpp"
#include "chern/expression.hpp"
#include "chern/report.hpp"
#include "chern/theorems.hpp"

namespace chern {

namespace {

enum class Format { Pretty, Json, Csv };

Format parse_format(const std::string& name) {
    if (name == "pretty") return Format::Pretty;
    if (name == "json") return Format::Json;
    if (name == "csv") return Format::Csv;
    throw std::invalid_argument("unknown output format: " + name +
                                " (expected pretty, json or csv)");
}

Format default_format() {
    if (const char* env = std::getenv("CHERN_FORMAT")) return parse_format(env);
    return Format::Pretty;
}

void emit(const std::string& text, const std::string& output_path, std::ostream& out) {
    if (output_path.empty()) {
        out << text << "\n";
        return;
    }
    std::ofstream file(output_path);
    if (!file) throw std::invalid_argument("cannot open output file: " + output_path);
    file << text << "\n";
}

struct TheoremRequest {
    std::string name = "all";
    std::optional<int> k;
    std::optional<Rational> a;
    std::optional<int> eps;
};

std::vector<VerificationReport> run_single_theorem(const PolarizedSpace& space,
                                                   const TheoremRequest& req) {
    const std::string& t = req.name;
    if (t == "sharp") {
        std::vector<VerificationReport> out;
        if (req.k) out.push_back(verify_sharp_family(space, *req.k));
        else
            for (int k = 1; k <= space.n; ++k) out.push_back(verify_sharp_family(space, k));
        return out;
    }
    if (t == "k2") return {verify_k2_equality_case(space)};
    if (t == "calabi-yau" || t == "cy") return verify_calabi_yau(space);
    if (t == "chern-number") return {verify_chern_number_inequality(space)};
    if (t == "reverse-my") return verify_reverse_my(space);
    if (t == "reverse-my-sharp") {
        Rational a;
        int eps = 0;
        if (req.a && req.eps) {
            a = *req.a;
            eps = *req.eps;
        } else if (!req.a && !req.eps) {
            auto derived = derive_proportional_polarization(space);
            if (!derived)
                throw std::invalid_argument(
                    "this bound needs c_1 proportional to L; pass --a and --eps or pick another space");
            a = derived->first;
            eps = derived->second;
        } else {
            throw std::invalid_argument("reverse-my-sharp needs both --a and --eps (or neither)");
        }
        return {verify_reverse_my_sharp(space, a, eps)};
    }
    if (t == "euler-chain") return verify_euler_chain(tangent_bundle(space), space);
    if (t == "dps") return verify_dps_schur(tangent_bundle(space), space);
    throw std::invalid_argument("unknown theorem: " + t);
}

/// For `--theorem all`: every theorem whose hypotheses the space asserts.
std::vector<VerificationReport> run_applicable(const PolarizedSpace& space) {
    std::vector<VerificationReport> out;
    auto run = [&](const std::string& name) {
        TheoremRequest req;
        req.name = name;
        auto reports = run_single_theorem(space, req);
        out.insert(out.end(), reports.begin(), reports.end());
    };
    if (space.flags.polarization_very_ample) {
        run("sharp");
        if (space.n >= 2) {
            run("k2");
            run("chern-number");
            run("reverse-my");
            if (space.chern_class(1).is_zero()) run("calabi-yau");
            if (derive_proportional_polarization(space)) run("reverse-my-sharp");
        }
    }
    if (space.flags.tangent_nef) {
        run("euler-chain");
        run("dps");
    }
    return out;
}

int cmd_catalog(bool as_json, const std::string& filter, const std::string& output_path,
                std::ostream& out) {
    auto matches = [&filter](const CatalogEntry& entry) {
        if (filter.empty()) return true;
        if (entry.space.name.find(filter) != std::string::npos) return true;
        return std::any_of(entry.tags.begin(), entry.tags.end(), [&](const std::string& tag) {
            return tag.find(filter) != std::string::npos;
        });
    };

    std::ostringstream text;
    if (as_json) {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& entry : builtin_catalog()) {
            if (!matches(entry)) continue;
            nlohmann::json j{{"name", entry.space.name},
                             {"family", entry.space.family},
                             {"n", entry.space.n},
                             {"flags",
                              {{"very_ample", entry.space.flags.polarization_very_ample},
                               {"tangent_nef", entry.space.flags.tangent_nef},
                               {"canonical_ample_gg", entry.space.flags.canonical_ample_gg}}},
                             {"tags", entry.tags},
                             {"notes", entry.space.flags.notes}};
            if (entry.space.N) j["N"] = *entry.space.N;
            arr.push_back(std::move(j));
        }
        text << arr.dump(2);
    } else {
        bool first = true;
        for (const auto& entry : builtin_catalog()) {
            if (!matches(entry)) continue;
            if (!first) text << "\n";
            first = false;
            const auto& s = entry.space;
            text << s.name << ": n=" << s.n;
            if (s.N) text << ", N=" << *s.N;
            if (s.flags.polarization_very_ample) text << ", very_ample";
            if (s.flags.tangent_nef) text << ", nef_tangent";
            if (s.flags.canonical_ample_gg) text << ", canonical_ample";
            if (s.chern_class(1).is_zero()) text << ", c1=0";
            text << "  [";
            for (size_t i = 0; i < entry.tags.size(); ++i)
                text << (i ? "," : "") << entry.tags[i];
            text << "]";
            if (!s.flags.notes.empty()) text << "  -- " << s.flags.notes;
        }
    }
    emit(text.str(), output_path, out);
    return 0;
}

int cmd_verify(const std::string& space_selector, const TheoremRequest& req, Format format,
               const std::string& output_path, std::ostream& out) {
    std::vector<PolarizedSpace> spaces;
    if (space_selector == "all") {
        for (const auto& entry : builtin_catalog()) spaces.push_back(entry.space);
    } else {
        auto space = find_space(space_selector);
        if (!space) throw std::invalid_argument("unknown space: " + space_selector);
        spaces.push_back(std::move(*space));
    }

    std::vector<VerificationReport> reports;
    for (const auto& space : spaces) {
        std::vector<VerificationReport> part = req.name == "all"
                                                   ? run_applicable(space)
                                                   : run_single_theorem(space, req);
        reports.insert(reports.end(), part.begin(), part.end());
    }
    sort_reports(reports);

    long violations = std::count_if(reports.begin(), reports.end(),
                                    [](const VerificationReport& r) { return !r.holds; });
    std::ostringstream text;
    switch (format) {
        case Format::Pretty: {
            for (const auto& r : reports) text << r.pretty() << "\n";
            text << reports.size() << " checks, " << violations << " violations";
            break;
        }
        case Format::Json: text << reports_to_json_text(reports); break;
        case Format::Csv: text << reports_to_csv_text(reports); break;
    }
    emit(text.str(), output_path, out);
    return violations == 0 ? 0 : 1;
}

int cmd_certificate(const std::string& partition_csv, const std::string& expr, int rank,
                    Format format, const std::string& output_path, std::ostream& out) {
    if (rank < 1) throw std::invalid_argument("--rank must be >= 1");
    if (partition_csv.empty() == expr.empty())
        throw std::invalid_argument("pass exactly one of --partition or --expr");

    std::ostringstream text;
    int status = 0;
    if (!partition_csv.empty()) {
        Partition lambda = Partition::from_string(partition_csv);
        Certificate cert = monomial_gap_certificate(lambda, rank);

        // Independent route: basis-solve of the same target must agree.
        ChernPolynomial target = chern_monomial(lambda, rank);
        target -= ChernPolynomial::variable(lambda.weight(), rank);
        MembershipResult check = schur_cone_membership(target);
        const auto* solved = std::get_if<Certificate>(&check);
        if (!solved || solved->entries != cert.entries)
            throw std::logic_error("constructive and basis-solve certificates disagree");

        if (format == Format::Json) text << cert.to_json().dump(2);
        else text << cert.to_string() << "\nverified: exact expansion matches; basis-solve agrees";
    } else {
        ChernPolynomial p = parse_chern_expression(expr, rank, 16);
        MembershipResult result = schur_cone_membership(p);
        if (const auto* cert = std::get_if<Certificate>(&result)) {
            if (format == Format::Json) text << cert->to_json().dump(2);
            else text << cert->to_string() << "\nverified: member of the Schur cone";
        } else {
            const auto& ref = std::get<Refutation>(result);
            if (format == Format::Json)
                text << nlohmann::json{{"target", ref.target},
                                       {"refuted_at", ref.witness.to_string()},
                                       {"coefficient", to_string(ref.coefficient)},
                                       {"verified", false}}
                            .dump(2);
            else
                text << ref.target << " is not in the Schur cone: coefficient "
                     << to_string(ref.coefficient) << " at S(" << ref.witness.to_string() << ")";
            status = 1;
        }
    }
    emit(text.str(), output_path, out);
    return status;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact verification of Chern class and Chern number inequalities on polarized "
                 "spaces, with Schur-positivity certificates"};
    app.require_subcommand(1);

    std::string format_name;
    app.add_option("--format", format_name, "Output format: pretty|json|csv")
        ->envname("CHERN_FORMAT");

    auto* catalog = app.add_subcommand("catalog", "List the built-in spaces");
    catalog->fallthrough();
    bool catalog_json = false;
    std::string catalog_filter, catalog_output;
    catalog->add_flag("--json", catalog_json, "Emit JSON");
    catalog->add_option("--filter", catalog_filter, "Substring filter on name or tags");
    catalog->add_option("--output", catalog_output, "Write to a file instead of stdout");

    auto* verify = app.add_subcommand("verify", "Evaluate inequalities on a space");
    verify->fallthrough();
    std::string verify_space, verify_theorem = "all", verify_output, verify_a;
    std::optional<int> verify_k, verify_eps;
    verify->add_option("--space", verify_space,
                       "Catalog name, all, P:n, hypersurface:n,d, ci:n,d..., or file:path")
        ->required();
    verify->add_option("--theorem", verify_theorem,
                       "sharp|k2|calabi-yau|chern-number|reverse-my|reverse-my-sharp|euler-chain|dps|all");
    verify->add_option("--k", verify_k, "Degree for the sharp family");
    verify->add_option("--a", verify_a, "Rational a for reverse-my-sharp, e.g. 1/2");
    verify->add_option("--eps", verify_eps, "Sign for reverse-my-sharp: +1 or -1");
    verify->add_option("--output", verify_output, "Write to a file instead of stdout");

    auto* certificate = app.add_subcommand("certificate", "Schur-cone certificates");
    certificate->fallthrough();
    std::string cert_partition, cert_expr, cert_output;
    int cert_rank = 0;
    certificate->add_option("--partition", cert_partition,
                            "Certify c_lambda - c_k for this partition, e.g. 2,1");
    certificate->add_option("--expr", cert_expr,
                            "Test cone membership of a homogeneous polynomial, e.g. c1^2-c2");
    certificate->add_option("--rank", cert_rank, "Bundle rank r")->required();
    certificate->add_option("--output", cert_output, "Write to a file instead of stdout");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {  // --help
            out << app.help();
            return 0;
        }
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        Format format = format_name.empty() ? default_format() : parse_format(format_name);
        if (catalog->parsed())
            return cmd_catalog(catalog_json || format == Format::Json, catalog_filter,
                               catalog_output, out);
        if (verify->parsed()) {
            TheoremRequest req;
            req.name = verify_theorem;
            if (verify_k) req.k = *verify_k;
            if (!verify_a.empty()) req.a = rational_from_string(verify_a);
            if (verify_eps) req.eps = *verify_eps;
            return cmd_verify(verify_space, req, format, verify_output, out);
        }
        return cmd_certificate(cert_partition, cert_expr, cert_rank, format, cert_output, out);
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace chern
