#include "chern/certificate.hpp"

#include <algorithm>
#include <stdexcept>

namespace chern {

namespace {

constexpr int kMaxCertificateDegree = 32;

std::vector<std::pair<Rational, Partition>> canonical_entries(const SchurExpansion& e) {
    std::vector<std::pair<Rational, Partition>> out;
    out.reserve(e.coefficients.size());
    for (const auto& [lam, coeff] : e.coefficients) out.emplace_back(coeff, lam);
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        int wa = a.second.weight(), wb = b.second.weight();
        if (wa != wb) return wa < wb;
        return a.second < b.second;
    });
    return out;
}

}  // namespace

ChernPolynomial Certificate::expand() const {
    ChernPolynomial out(rank);
    for (const auto& [coeff, lam] : entries) out += schur(lam, rank) * coeff;
    return out;
}

std::string Certificate::to_string() const {
    std::string rhs;
    if (entries.empty()) rhs = "0";
    for (const auto& [coeff, lam] : entries) {
        if (!rhs.empty()) rhs += " + ";
        rhs += chern::to_string(coeff) + "*S(" + lam.to_string() + ")";
    }
    return target + " = " + rhs;
}

nlohmann::json Certificate::to_json() const {
    nlohmann::json ent = nlohmann::json::array();
    for (const auto& [coeff, lam] : entries)
        ent.push_back({{"partition", lam.to_string()}, {"coefficient", chern::to_string(coeff)}});
    return {{"target", target},
            {"rank", rank},
            {"degree", degree},
            {"entries", ent},
            {"provenance", provenance},
            {"verified", verified}};
}

Certificate monomial_gap_certificate(const Partition& lambda, int rank) {
    if (rank < 1) throw std::invalid_argument("certificate requires rank >= 1");
    if (!lambda.empty() && lambda.parts().front() > rank)
        throw std::invalid_argument("partition part exceeds rank");
    const int k = lambda.weight();
    if (k > kMaxCertificateDegree)
        throw std::invalid_argument("certificate degree above configured maximum");

    // c_λ - c_k = Σ_i (C_{σ_i} C_{λ_{i+1}} - C_{σ_{i+1}}) · C_{λ_{i+2}} ··· C_{λ_ℓ},
    // σ_i = λ_1 + ... + λ_i; each bracket expands into two-row Schur
    // polynomials S_(σ_i + j, λ_{i+1} - j), and the trailing monomial factors
    // are single-row Schur polynomials flattened one product at a time.
    SchurExpansion total;
    total.rank = rank;
    const auto& parts = lambda.parts();
    const int len = lambda.length();
    int sigma = parts.empty() ? 0 : parts[0];
    for (int i = 1; i < len; ++i) {
        const int b = parts[static_cast<size_t>(i)];
        SchurExpansion bracket;
        bracket.rank = rank;
        for (int j = 0; j < b; ++j) {
            if (sigma + j > rank) continue;  // S with first part beyond rank is 0
            bracket.coefficients.emplace(Partition{sigma + j, b - j}, Rational(1));
        }
        for (int t = i + 1; t < len; ++t) {
            SchurExpansion flattened;
            flattened.rank = rank;
            Partition row{parts[static_cast<size_t>(t)]};
            for (const auto& [lam, coeff] : bracket.coefficients) {
                SchurExpansion prod = schur_product(lam, row, rank);
                for (auto& [plam, pcoeff] : prod.coefficients) pcoeff *= coeff;
                flattened += prod;
            }
            bracket = std::move(flattened);
        }
        total += bracket;
        sigma += b;
    }

    Certificate cert;
    cert.rank = rank;
    cert.degree = k;
    cert.entries = canonical_entries(total);
    cert.provenance = "constructive-telescoping";

    ChernPolynomial expected = chern_monomial(lambda, rank);
    expected -= ChernPolynomial::variable(k, rank);  // c_0 = 1, c_k = 0 beyond the rank
    cert.target = expected.to_string();
    for (const auto& [coeff, lam] : cert.entries)
        if (coeff < 0) throw std::logic_error("telescoping produced a negative coefficient");
    if (!(cert.expand() == expected))
        throw std::logic_error("telescoping certificate does not expand to its target");
    cert.verified = true;
    return cert;
}

MembershipResult schur_cone_membership(const ChernPolynomial& p) {
    if (!p.is_homogeneous())
        throw std::invalid_argument("cone membership is defined for homogeneous polynomials");
    SchurExpansion expansion = to_schur_basis(p);

    const Partition* worst = nullptr;
    const Rational* worst_coeff = nullptr;
    for (const auto& [lam, coeff] : expansion.coefficients) {
        if (coeff < 0 && (!worst_coeff || coeff < *worst_coeff)) {
            worst = &lam;
            worst_coeff = &coeff;
        }
    }
    if (worst) return Refutation{*worst, *worst_coeff, p.to_string()};

    Certificate cert;
    cert.rank = p.rank();
    cert.degree = p.degree();
    cert.entries = canonical_entries(expansion);
    cert.provenance = "basis-solve";
    cert.target = p.to_string();
    cert.verified = cert.expand() == p;
    if (!cert.verified) throw std::logic_error("basis-solve certificate failed verification");
    return cert;
}

}  // namespace chern
