#ifndef CHERN_RATIONAL_HPP
#define CHERN_RATIONAL_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace chern {

// Exact arithmetic everywhere; no floating point in the core.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational make_rational(long num, long den) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

/// C(n, k) as an exact rational; 0 outside 0 <= k <= n.
inline Rational binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) return Rational(0);
    Integer b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return Rational(b);
}

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

inline long to_long(const Rational& q) {
    if (!is_integer(q) || !q.get_num().fits_slong_p())
        throw std::invalid_argument("rational does not fit a machine integer: " + q.get_str());
    return q.get_num().get_si();
}

/// Reduced "p/q", or plain "p" for integers.
inline std::string to_string(const Rational& q) { return q.get_str(); }

inline Rational rational_from_string(std::string_view text) {
    Rational q;
    if (q.set_str(std::string(text), 10) != 0)
        throw std::invalid_argument("malformed rational: \"" + std::string(text) + "\"");
    if (q.get_den() == 0) throw std::invalid_argument("rational with zero denominator");
    q.canonicalize();
    return q;
}

}  // namespace chern

#endif
