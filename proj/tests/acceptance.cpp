// Acceptance suite: one pass/fail line per criterion, exact rational checks
// throughout, with the stated wall-clock budgets enforced.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "chern/catalog.hpp"
#include "chern/certificate.hpp"
#include "chern/schur.hpp"
#include "chern/series.hpp"
#include "chern/theorems.hpp"
#include "oracles.hpp"

using namespace chern;

namespace {

struct Criterion {
    std::string name;
    std::function<void(std::ostream&)> run;  // throws on failure
    long budget_ms;                          // 0 = no stated budget
};

void require(bool condition, const std::string& message) {
    if (!condition) throw std::runtime_error(message);
}

template <class T>
std::string str(const T& value) {
    std::ostringstream out;
    out << value;
    return out.str();
}

const PolarizedSpace& catalog_space(const std::string& name) {
    for (const auto& entry : builtin_catalog())
        if (entry.space.name == name) return entry.space;
    throw std::runtime_error("missing catalog entry " + name);
}

// 1. sharp-family classes vanish identically on (P^n, O(1))
void criterion_projective_equalities(std::ostream&) {
    for (int n = 1; n <= 6; ++n) {
        PolarizedSpace p = projective_space(n);
        for (int k = 1; k <= n; ++k)
            require(sharp_family_class(p, k).is_zero(),
                    "nonzero class on P" + str(n) + " at k=" + str(k));
    }
}

// 2. hypersurface k=2 equality and classification
void criterion_hypersurface_k2(std::ostream&) {
    for (int n = 2; n <= 6; ++n)
        for (int d = 1; d <= 10; ++d) {
            VerificationReport r = verify_k2_equality_case(hypersurface(n, d));
            require(r.lhs == 0 && r.equality,
                    "pairing not zero for n=" + str(n) + " d=" + str(d));
            std::string expected = d == 1 ? "projective space"
                                          : "hypersurface, degree L^n = " + str(d);
            require(r.note.find(expected) != std::string::npos,
                    "classifier note missing \"" + expected + "\" for n=" + str(n) +
                        " d=" + str(d) + " (note: " + r.note + ")");
        }
}

// 3. quintic threefold ledger, oracle first
void criterion_quintic_ledger(std::ostream& log) {
    auto oracle_numbers = oracle::ci_chern_numbers(3, {5});
    require(oracle_numbers.at(Partition{3}) == -200, "oracle c3");
    require(oracle_numbers.at(Partition{2, 1}) == 0, "oracle c1c2");
    require(oracle_numbers.at(Partition{1, 1, 1}) == 0, "oracle c1^3");
    oracle::Series chern = oracle::ci_tangent_series(3, {5});
    require(chern[2] * 5 == 50, "oracle c2·L");

    PolarizedSpace quintic = hypersurface(3, 5);
    require(integrate(quintic, quintic.chern_class(2) * quintic.polarization) == 50,
            "∫c2·L != 50");
    require(integrate(quintic, quintic.chern_class(3)) == -200, "∫c3 != -200");
    require(chern_numbers(quintic) == oracle_numbers, "chern numbers disagree with the oracle");

    auto cy = verify_calabi_yau(quintic);
    require(cy[0].equality, "first Calabi-Yau inequality not an equality");
    require(cy[0].note.find("L^n = 5 = n+2, consistent") != std::string::npos,
            "degree note wrong: " + cy[0].note);

    require(verify_sharp_family(quintic, 3).lhs == 0, "k=3 pairing nonzero");

    VerificationReport cn = verify_chern_number_inequality(quintic);
    require(cn.lhs == 320 && cn.rhs == 320 && cn.equality, "chern-number not 320 = 320");
    log << "∫c2L=50 ∫c3=-200 CY-equality d=5 sharp(k=3)=0 chern-number 320=320";
}

// 4. reverse Miyaoka-Yau instances
void criterion_reverse_my(std::ostream& log) {
    auto septic = verify_reverse_my(catalog_space("septic_threefold"));
    require(septic.size() == 2, "yau-opposite report missing");
    require(septic[1].lhs == 336 && septic[1].rhs == 21896 && septic[1].holds,
            "hypersurface(3,7): expected 336 <= 21896, got " + to_string(septic[1].lhs) +
                " <= " + to_string(septic[1].rhs));

    VerificationReport qs = verify_reverse_my_sharp(hypersurface(2, 5), Rational(1), -1);
    require(qs.lhs == 55 && qs.rhs == 55 && qs.equality,
            "hypersurface(2,5): expected equality 55 = 55");
    require(qs.note.find("(n^2+5n+8)/2 = 11") != std::string::npos,
            "coefficient note missing: " + qs.note);
    log << "336<=21896, 55=55 with coefficient 11";
}

// 5. certificate suite over k <= 6, r <= 4
void criterion_certificates(std::ostream& log) {
    int count = 0;
    for (int k = 1; k <= 6; ++k)
        for (int r = 1; r <= 4; ++r)
            for (const Partition& lam : enumerate_gamma(k, r)) {
                Certificate cert = monomial_gap_certificate(lam, r);
                ChernPolynomial target = chern_monomial(lam, r);
                target -= ChernPolynomial::variable(k, r);
                require(cert.expand() == target, "expansion mismatch at " + lam.to_string());
                for (const auto& [coeff, mu] : cert.entries)
                    require(coeff >= 0 && is_integer(coeff),
                            "bad coefficient at " + lam.to_string());
                MembershipResult solved = schur_cone_membership(target);
                const auto* basis = std::get_if<Certificate>(&solved);
                require(basis && basis->entries == cert.entries,
                        "basis-solve route disagrees at " + lam.to_string());
                ++count;
            }
    log << count << " certificates cross-checked";
}

// 6. Jacobi-Trudi vs the tableau oracle
void criterion_jacobi_trudi(std::ostream& log) {
    int count = 0;
    for (int w = 1; w <= 5; ++w)
        for (int r = 1; r <= 4; ++r)
            for (const Partition& lam : enumerate_gamma(w, w)) {
                require(oracle::substitute_roots(schur(lam, r), r) ==
                            oracle::ssyt_schur(lam.conjugate(), r),
                        "tableau oracle mismatch at " + lam.to_string() + " r=" + str(r));
                ++count;
            }
    log << count << " shapes checked";
}

// 7. Euler chain on nef examples
void criterion_euler_chain(std::ostream& log) {
    for (int n = 2; n <= 4; ++n) {
        PolarizedSpace p = projective_space(n);
        auto chain = verify_euler_chain(tangent_bundle(p), p);
        for (const auto& r : chain)
            require(r.holds, "chain violation on P" + str(n) + ": " + r.pretty());
        Rational euler = integrate(p, p.chern_class(n));
        require(euler == n + 1, "Euler number of P" + str(n));
        for (const auto& [lam, value] : chern_numbers(p))
            require(value >= euler, "Chern number below Euler number on P" + str(n));
    }
    {
        PolarizedSpace p3 = projective_space(3);
        auto numbers = chern_numbers(p3);
        require(numbers.at(Partition{1, 1, 1}) == 64 && numbers.at(Partition{2, 1}) == 24 &&
                    numbers.at(Partition{3}) == 4,
                "P3 chain values expected 64 >= 24 >= 4");
    }
    const PolarizedSpace& quadric = catalog_space("p1xp1");
    auto chain = verify_euler_chain(tangent_bundle(quadric), quadric);
    for (const auto& r : chain) require(r.holds, "chain violation on p1xp1");
    auto numbers = chern_numbers(quadric);
    require(numbers.at(Partition{1, 1}) == 8 && numbers.at(Partition{2}) == 4,
            "p1xp1 numbers expected {8, 4}");
    log << "P2..P4 and p1xp1 chains hold; 64>=24>=4>=0 on P3, {8,4}>=4>=0 on p1xp1";
}

// 8. strictness witness on (P1 x P1, L = (1,2))
void criterion_strictness(std::ostream& log) {
    const PolarizedSpace& skew = catalog_space("p1xp1_12");
    VerificationReport cn = verify_chern_number_inequality(skew);
    require(cn.lhs == 4 && cn.rhs == 8 && cn.holds && !cn.equality,
            "expected strict 4 < 8, got " + to_string(cn.lhs) + " vs " + to_string(cn.rhs));
    VerificationReport k2 = verify_k2_equality_case(skew);
    require(k2.lhs > 0, "k=2 pairing not strictly positive");
    log << "4 < 8 and k2 pairing " << to_string(k2.lhs) << " > 0";
}

// 9. randomized property battery
void criterion_properties(std::ostream& log) {
    std::mt19937_64 rng(0xacce97edULL);
    auto pick = [&rng](int lo, int hi) {
        return std::uniform_int_distribution<int>(lo, hi)(rng);
    };

    for (int trial = 0; trial < 200; ++trial) {
        int rank = pick(1, 4), cutoff = pick(2, 6);
        ChernPolynomial total = ChernPolynomial::one();
        for (int d = 1; d <= cutoff; ++d)
            for (const Partition& mono : enumerate_gamma(d, rank))
                if (pick(0, 2) == 0)
                    total += chern_monomial(mono, rank) * make_rational(pick(-9, 9), pick(1, 4));
        auto segre = segre_from_total_chern(total, cutoff);
        auto dual = dual_components(graded_components(total, cutoff));
        for (int d = 0; d <= cutoff; ++d) {
            ChernPolynomial conv;
            for (int i = 0; i <= d; ++i)
                conv += dual[static_cast<size_t>(i)] * segre[static_cast<size_t>(d - i)];
            require(d == 0 ? conv.is_one() : conv.is_zero(), "segre identity failed");
        }
    }

    PolarizedSpace p4 = projective_space(4);
    Element h = p4.polarization;
    for (int trial = 0; trial < 50; ++trial) {
        auto random_bundle = [&](int rank) {
            Element total = Element::one(p4.model);
            for (int d = 1; d <= rank; ++d)
                total += h.pow(d) * make_rational(pick(-9, 9), pick(1, 4));
            return FormalBundle{rank, total, false, ""};
        };
        FormalBundle a = random_bundle(pick(1, 3)), b = random_bundle(pick(1, 3));
        require(bundle_dual(bundle_dual(a)).total_chern == a.total_chern, "dual involution");
        FormalBundle sum = bundle_direct_sum(a, b);
        require(sum.total_chern == a.total_chern * b.total_chern, "whitney failed");
    }

    for (int trial = 0; trial < 100; ++trial) {
        int r = pick(1, 4);
        int w1 = pick(1, 6), w2 = pick(1, 6);
        auto g1 = enumerate_gamma(w1, r), g2 = enumerate_gamma(w2, r);
        Partition lam = g1[static_cast<size_t>(pick(0, static_cast<int>(g1.size()) - 1))];
        Partition mu = g2[static_cast<size_t>(pick(0, static_cast<int>(g2.size()) - 1))];
        SchurExpansion prod = schur_product(lam, mu, r);
        for (const auto& [nu, coeff] : prod.coefficients)
            require(coeff > 0 && is_integer(coeff), "LR coefficient not a positive integer");
    }
    log << "200 segre inversions, 50 whitney/dual draws, 100 schur products";
}

}  // namespace

int main() {
    std::vector<Criterion> criteria{
        {"1 projective-space equalities", criterion_projective_equalities, 1000},
        {"2 hypersurface k=2 equality + classification", criterion_hypersurface_k2, 5000},
        {"3 quintic threefold ledger", criterion_quintic_ledger, 0},
        {"4 reverse Miyaoka-Yau instances", criterion_reverse_my, 0},
        {"5 certificate suite (k<=6, r<=4)", criterion_certificates, 30000},
        {"6 Jacobi-Trudi tableau oracle (weight<=5, r<=4)", criterion_jacobi_trudi, 30000},
        {"7 Euler chain on nef examples", criterion_euler_chain, 0},
        {"8 strictness witness P1xP1 L=(1,2)", criterion_strictness, 0},
        {"9 randomized property battery", criterion_properties, 0},
    };

    int failures = 0;
    for (const auto& criterion : criteria) {
        auto start = std::chrono::steady_clock::now();
        std::string detail, error;
        bool ok = true;
        try {
            std::ostringstream log;
            criterion.run(log);
            detail = log.str();
        } catch (const std::exception& e) {
            ok = false;
            error = e.what();
        }
        auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                           std::chrono::steady_clock::now() - start)
                           .count();
        if (ok && criterion.budget_ms > 0 && elapsed > criterion.budget_ms) {
            ok = false;
            error = "exceeded budget of " + std::to_string(criterion.budget_ms) + " ms";
        }
        std::cout << (ok ? "PASS" : "FAIL") << "  criterion " << criterion.name << " ("
                  << elapsed << " ms)";
        if (!detail.empty()) std::cout << " -- " << detail;
        if (!ok) std::cout << " -- " << error;
        std::cout << "\n";
        if (!ok) ++failures;
    }
    std::cout << (failures == 0 ? "ACCEPTANCE PASSED" : "ACCEPTANCE FAILED") << " ("
              << criteria.size() - static_cast<size_t>(failures) << "/" << criteria.size()
              << ")\n";
    return failures == 0 ? 0 : 1;
}
