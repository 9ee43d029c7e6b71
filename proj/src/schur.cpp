#include "chern/schur.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace chern {

Rational SchurExpansion::coefficient(const Partition& lambda) const {
    auto it = coefficients.find(lambda);
    return it == coefficients.end() ? Rational(0) : it->second;
}

SchurExpansion& SchurExpansion::operator+=(const SchurExpansion& rhs) {
    if (rank == 0) rank = rhs.rank;
    else if (rhs.rank != 0 && rhs.rank != rank)
        throw std::logic_error("rank mismatch in Schur expansion arithmetic");
    for (const auto& [lam, coeff] : rhs.coefficients) {
        auto [it, inserted] = coefficients.try_emplace(lam, coeff);
        if (!inserted) {
            it->second += coeff;
            if (it->second == 0) coefficients.erase(it);
        } else if (it->second == 0) {
            coefficients.erase(it);
        }
    }
    return *this;
}

ChernPolynomial SchurExpansion::reconstruct() const {
    ChernPolynomial out(rank);
    for (const auto& [lam, coeff] : coefficients) {
        if (lam.empty()) out += ChernPolynomial::scalar(coeff);
        else out += schur(lam, rank) * coeff;
    }
    return out;
}

std::string SchurExpansion::to_string() const {
    if (coefficients.empty()) return "0";
    std::vector<const std::pair<const Partition, Rational>*> order;
    for (const auto& t : coefficients) order.push_back(&t);
    std::sort(order.begin(), order.end(), [](const auto* a, const auto* b) {
        int wa = a->first.weight(), wb = b->first.weight();
        if (wa != wb) return wa < wb;
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
        std::string name = t->first.empty() ? "1" : "S(" + t->first.to_string() + ")";
        if (name == "1") out += chern::to_string(mag);
        else if (mag == 1) out += name;
        else out += chern::to_string(mag) + "*" + name;
    }
    return out;
}

nlohmann::json SchurExpansion::to_json() const {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& [lam, coeff] : coefficients)
        arr.push_back({{"partition", lam.to_string()}, {"coefficient", chern::to_string(coeff)}});
    return arr;
}

namespace {

int permutation_sign(const std::vector<int>& perm) {
    int inversions = 0;
    for (size_t i = 0; i < perm.size(); ++i)
        for (size_t j = i + 1; j < perm.size(); ++j)
            if (perm[i] > perm[j]) ++inversions;
    return (inversions % 2 == 0) ? 1 : -1;
}

}  // namespace

ChernPolynomial schur_padded(const Partition& lambda, int rank, int size) {
    if (rank < 1) throw std::invalid_argument("schur requires rank >= 1");
    if (size < lambda.length())
        throw std::invalid_argument("determinant size below partition length");
    if (size == 0) return ChernPolynomial::one();

    // det(c_{λ_i - i + j}) over permutations; each surviving term is one
    // Chern monomial, so the expansion stays sparse.
    ChernPolynomial out(rank);
    std::vector<int> perm(static_cast<size_t>(size));
    std::iota(perm.begin(), perm.end(), 0);
    do {
        std::vector<int> factors;
        bool zero = false;
        for (int i = 0; i < size && !zero; ++i) {
            int m = lambda.part_or_zero(i) - i + perm[static_cast<size_t>(i)];
            if (m < 0 || m > rank) zero = true;
            else if (m > 0) factors.push_back(m);
        }
        if (zero) continue;
        std::sort(factors.begin(), factors.end(), std::greater<int>());
        ChernPolynomial term = ChernPolynomial::monomial(Partition(std::move(factors)), rank);
        if (permutation_sign(perm) > 0) out += term;
        else out -= term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

ChernPolynomial schur(const Partition& lambda, int rank) {
    if (lambda.empty()) return ChernPolynomial::one();
    return schur_padded(lambda, rank, lambda.length());
}

SchurExpansion to_schur_basis(const ChernPolynomial& p) {
    SchurExpansion out;
    out.rank = p.rank();
    if (p.is_zero()) return out;

    int max_deg = p.degree();
    for (int k = 0; k <= max_deg; ++k) {
        ChernPolynomial piece = p.graded_part(k);
        if (piece.is_zero()) continue;
        if (k == 0) {
            out.coefficients.emplace(Partition{}, piece.coefficient(Partition{}));
            continue;
        }
        if (out.rank < 1)
            throw std::logic_error("positive-degree polynomial without a rank");
        // Ascending dominance (ascending lex extends it): at each step the
        // residual's c_λ coefficient is exactly the S_λ coordinate.
        std::vector<Partition> gamma = enumerate_gamma(k, out.rank);
        std::reverse(gamma.begin(), gamma.end());
        for (const Partition& lam : gamma) {
            Rational a = piece.coefficient(lam);
            if (a == 0) continue;
            piece -= schur(lam, out.rank) * a;
            out.coefficients.emplace(lam, a);
        }
        if (!piece.is_zero())
            throw std::logic_error("Schur transition system failed to span degree " +
                                   std::to_string(k));
    }
    return out;
}

SchurExpansion schur_product(const Partition& lambda, const Partition& mu, int rank) {
    return to_schur_basis(schur(lambda, rank) * schur(mu, rank));
}

}  // namespace chern
