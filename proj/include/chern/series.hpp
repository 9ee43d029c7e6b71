#ifndef CHERN_SERIES_HPP
#define CHERN_SERIES_HPP

#include <stdexcept>
#include <vector>

#include "chern/rational.hpp"

namespace chern {

// Graded-series helpers shared by the abstract Chern ring and the cohomology
// models. T must provide graded_part(int), is_zero(), is_one(), +, -, * and
// scalar multiplication by Rational; T{} is zero.

template <class T>
std::vector<T> graded_components(const T& x, int cutoff) {
    std::vector<T> out;
    out.reserve(static_cast<size_t>(cutoff) + 1);
    for (int d = 0; d <= cutoff; ++d) out.push_back(x.graded_part(d));
    return out;
}

template <class T>
T sum_components(const std::vector<T>& comps) {
    T acc{};
    for (const T& c : comps) acc = acc + c;
    return acc;
}

template <class T>
T pow_of(const T& x, int e, const T& unit) {
    if (e < 0) throw std::invalid_argument("negative power");
    T acc = unit;
    for (int i = 0; i < e; ++i) acc = acc * x;
    return acc;
}

/// Multiplicative inverse of 1 + u_1 + u_2 + ..., degree by degree:
/// v_0 = 1, v_k = -Σ_{i=1..k} u_i v_{k-i}.
template <class T>
std::vector<T> inverse_total_class(const std::vector<T>& comps) {
    if (comps.empty() || !comps[0].is_one())
        throw std::invalid_argument("series inverse requires unit part 1");
    std::vector<T> inv(comps.size());
    inv[0] = comps[0];
    for (size_t k = 1; k < comps.size(); ++k) {
        T acc{};
        for (size_t i = 1; i <= k; ++i) acc = acc + comps[i] * inv[k - i];
        inv[k] = acc * Rational(-1);
    }
    return inv;
}

/// Components of the dual bundle's total Chern class: c_i -> (-1)^i c_i.
template <class T>
std::vector<T> dual_components(std::vector<T> comps) {
    for (size_t i = 1; i < comps.size(); i += 2) comps[i] = comps[i] * Rational(-1);
    return comps;
}

/// Segre classes s_0..s_cutoff of E from its total Chern class:
/// s(E) = c(E*)^{-1}. Rejects unit part != 1.
template <class T>
std::vector<T> segre_from_total_chern(const T& total_chern, int cutoff) {
    return inverse_total_class(dual_components(graded_components(total_chern, cutoff)));
}

/// s_k(E ⊗ L) for a rank n+1 bundle E with Segre components s_e and a
/// degree-1 class ell: Σ_{i=0}^k C(n+k, k-i) · s_i(E) · ell^{k-i}.
/// Returns components for k = 0..max_degree.
template <class T>
std::vector<T> segre_tensor_line(const std::vector<T>& s_e, int rank_e, const T& ell,
                                 int max_degree) {
    if (rank_e < 1) throw std::invalid_argument("tensor formula requires positive rank");
    const int n = rank_e - 1;
    std::vector<T> out;
    out.reserve(static_cast<size_t>(max_degree) + 1);
    std::vector<T> ell_pow{ /* filled lazily */ };
    for (int k = 0; k <= max_degree; ++k) {
        T acc{};
        for (int i = 0; i <= k; ++i) {
            if (i >= static_cast<int>(s_e.size())) break;
            const T& si = s_e[static_cast<size_t>(i)];
            if (si.is_zero()) continue;
            Rational b = binomial(n + k, k - i);
            if (b == 0) continue;
            if (i == k) {
                acc = acc + si * b;
            } else {
                while (static_cast<int>(ell_pow.size()) < k - i)
                    ell_pow.push_back(ell_pow.empty() ? ell : ell_pow.back() * ell);
                acc = acc + si * ell_pow[static_cast<size_t>(k - i - 1)] * b;
            }
        }
        out.push_back(std::move(acc));
    }
    return out;
}

/// Total Chern class of E ⊗ L for a rank-r bundle E with Chern components
/// c_e (c_e[0] must be 1): Σ_{i=0}^r c_i(E) · (1 + L)^{r-i}.
template <class T>
T chern_tensor_line(const std::vector<T>& c_e, int rank_e, const T& ell) {
    if (rank_e < 1) throw std::invalid_argument("tensor formula requires positive rank");
    if (c_e.empty() || !c_e[0].is_one())
        throw std::invalid_argument("total Chern class must have unit part 1");
    const T& unit = c_e[0];
    T one_plus_ell = unit + ell;
    T acc{};
    for (int i = 0; i <= rank_e; ++i) {
        if (i >= static_cast<int>(c_e.size())) break;
        const T& ci = c_e[static_cast<size_t>(i)];
        if (ci.is_zero()) continue;
        acc = acc + ci * pow_of(one_plus_ell, rank_e - i, unit);
    }
    return acc;
}

}  // namespace chern

#endif
