#include "chern/chern_polynomial.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace chern {

namespace {

Partition merge_monomials(const Partition& a, const Partition& b) {
    std::vector<int> parts;
    parts.reserve(a.parts().size() + b.parts().size());
    std::merge(a.parts().begin(), a.parts().end(), b.parts().begin(), b.parts().end(),
               std::back_inserter(parts), std::greater<int>());
    return Partition(std::move(parts));
}

}  // namespace

ChernPolynomial::ChernPolynomial(int rank) : rank_(rank) {
    if (rank < 0) throw std::invalid_argument("negative rank");
}

ChernPolynomial ChernPolynomial::scalar(Rational value) {
    ChernPolynomial p;
    if (value != 0) p.terms_.emplace(Partition{}, std::move(value));
    return p;
}

ChernPolynomial ChernPolynomial::variable(int i, int rank) {
    if (rank < 1) throw std::invalid_argument("variable requires rank >= 1");
    ChernPolynomial p(rank);
    if (i == 0) p.terms_.emplace(Partition{}, Rational(1));
    else if (i >= 1 && i <= rank) p.terms_.emplace(Partition{i}, Rational(1));
    return p;  // c_i = 0 outside [0, rank]
}

ChernPolynomial ChernPolynomial::monomial(const Partition& mono, int rank) {
    if (rank < 1) throw std::invalid_argument("monomial requires rank >= 1");
    if (!mono.empty() && mono.parts().front() > rank)
        throw std::invalid_argument("monomial index " + std::to_string(mono.parts().front()) +
                                    " exceeds rank " + std::to_string(rank));
    ChernPolynomial p(rank);
    p.terms_.emplace(mono, Rational(1));
    return p;
}

bool ChernPolynomial::is_one() const {
    return terms_.size() == 1 && terms_.begin()->first.empty() && terms_.begin()->second == 1;
}

Rational ChernPolynomial::coefficient(const Partition& mono) const {
    auto it = terms_.find(mono);
    return it == terms_.end() ? Rational(0) : it->second;
}

int ChernPolynomial::degree() const {
    int d = 0;
    for (const auto& [mono, coeff] : terms_) d = std::max(d, mono.weight());
    return d;
}

bool ChernPolynomial::is_homogeneous() const {
    if (terms_.empty()) return true;
    int d = terms_.begin()->first.weight();
    for (const auto& [mono, coeff] : terms_)
        if (mono.weight() != d) return false;
    return true;
}

ChernPolynomial ChernPolynomial::graded_part(int d) const {
    ChernPolynomial out(rank_);
    for (const auto& [mono, coeff] : terms_)
        if (mono.weight() == d) out.terms_.emplace(mono, coeff);
    return out;
}

void ChernPolynomial::add_term(const Partition& mono, const Rational& coeff) {
    auto [it, inserted] = terms_.try_emplace(mono, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    } else if (it->second == 0) {
        terms_.erase(it);
    }
}

void ChernPolynomial::adopt_rank(const ChernPolynomial& other) {
    if (rank_ == 0) rank_ = other.rank_;
    else if (other.rank_ != 0 && other.rank_ != rank_)
        throw std::logic_error("rank mismatch in Chern polynomial arithmetic");
}

ChernPolynomial ChernPolynomial::operator-() const {
    ChernPolynomial out(*this);
    for (auto& [mono, coeff] : out.terms_) coeff = -coeff;
    return out;
}

ChernPolynomial& ChernPolynomial::operator+=(const ChernPolynomial& rhs) {
    adopt_rank(rhs);
    for (const auto& [mono, coeff] : rhs.terms_) add_term(mono, coeff);
    return *this;
}

ChernPolynomial& ChernPolynomial::operator-=(const ChernPolynomial& rhs) {
    adopt_rank(rhs);
    for (const auto& [mono, coeff] : rhs.terms_) add_term(mono, -coeff);
    return *this;
}

ChernPolynomial& ChernPolynomial::operator*=(const ChernPolynomial& rhs) {
    adopt_rank(rhs);
    std::map<Partition, Rational> product;
    for (const auto& [ma, ca] : terms_) {
        for (const auto& [mb, cb] : rhs.terms_) {
            Rational c = ca * cb;
            if (c == 0) continue;
            Partition mono = merge_monomials(ma, mb);
            auto [it, inserted] = product.try_emplace(std::move(mono), c);
            if (!inserted) {
                it->second += c;
                if (it->second == 0) product.erase(it);
            }
        }
    }
    terms_ = std::move(product);
    return *this;
}

ChernPolynomial& ChernPolynomial::operator*=(const Rational& s) {
    if (s == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [mono, coeff] : terms_) coeff *= s;
    return *this;
}

ChernPolynomial ChernPolynomial::pow(int e) const {
    if (e < 0) throw std::invalid_argument("negative power of a polynomial");
    ChernPolynomial out = one();
    for (int i = 0; i < e; ++i) out *= *this;
    return out;
}

std::string chern_monomial_string(const Partition& mono) {
    if (mono.empty()) return "1";
    std::string out;
    const auto& parts = mono.parts();
    for (size_t i = 0; i < parts.size();) {
        size_t j = i;
        while (j < parts.size() && parts[j] == parts[i]) ++j;
        if (!out.empty()) out += '*';
        out += "c" + std::to_string(parts[i]);
        if (j - i > 1) out += "^" + std::to_string(j - i);
        i = j;
    }
    return out;
}

std::string ChernPolynomial::to_string() const {
    if (terms_.empty()) return "0";
    // degree ascending; within a degree, pure c1-powers lead (ascending lex)
    std::vector<const std::pair<const Partition, Rational>*> order;
    order.reserve(terms_.size());
    for (const auto& t : terms_) order.push_back(&t);
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
        std::string ms = chern_monomial_string(t->first);
        if (ms == "1") out += chern::to_string(mag);
        else if (mag == 1) out += ms;
        else out += chern::to_string(mag) + "*" + ms;
    }
    return out;
}

nlohmann::json ChernPolynomial::to_json() const {
    std::vector<const std::pair<const Partition, Rational>*> order;
    order.reserve(terms_.size());
    for (const auto& t : terms_) order.push_back(&t);
    std::sort(order.begin(), order.end(), [](const auto* a, const auto* b) {
        int wa = a->first.weight(), wb = b->first.weight();
        if (wa != wb) return wa < wb;
        return a->first < b->first;
    });
    nlohmann::json arr = nlohmann::json::array();
    for (const auto* t : order)
        arr.push_back(
            {{"partition", t->first.to_string()}, {"coefficient", chern::to_string(t->second)}});
    return arr;
}

ChernPolynomial chern_monomial(const Partition& lambda, int rank) {
    return ChernPolynomial::monomial(lambda, rank);
}

}  // namespace chern
