#ifndef RCBRACKET_RATIONAL_HPP
#define RCBRACKET_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace rcb {

/// Arbitrary-precision rational, canonical form (gcd(num,den)=1, den>0, 0 = 0/1).
/// GMP keeps the invariants as long as values are built through these helpers.
using rational = mpq_class;
using integer = mpz_class;

inline rational make_rational(long num, long den = 1) {
    if (den == 0) throw std::domain_error("rational: zero denominator");
    rational q(num, den);
    q.canonicalize();
    return q;
}

inline bool is_zero(const rational& q) { return sgn(q) == 0; }

inline bool is_integer(const rational& q) { return q.get_den() == 1; }

/// Parses "p", "-p", or "p/q" with arbitrary-precision parts. No floating point.
inline rational parse_rational(std::string_view s) {
    if (s.empty()) throw std::invalid_argument("rational: empty string");
    const std::string text(s);
    if (text.find_first_not_of("+-/0123456789") != std::string::npos)
        throw std::invalid_argument("rational: bad character in '" + text + "'");
    rational q;
    if (mpq_set_str(q.get_mpq_t(), text.c_str(), 10) != 0)
        throw std::invalid_argument("rational: cannot parse '" + text + "'");
    if (mpz_sgn(mpq_denref(q.get_mpq_t())) == 0)
        throw std::domain_error("rational: zero denominator in '" + text + "'");
    q.canonicalize();
    return q;
}

inline std::string to_string(const rational& q) { return q.get_str(); }

inline rational pow_rational(const rational& base, unsigned long e) {
    rational r = 1;
    rational b = base;
    unsigned long k = e;
    while (k > 0) {
        if (k & 1UL) r *= b;
        k >>= 1UL;
        if (k) b *= b;
    }
    return r;
}

inline integer factorial(unsigned long k) {
    integer r;
    mpz_fac_ui(r.get_mpz_t(), k);
    return r;
}

inline integer binomial(unsigned long n, unsigned long k) {
    integer r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

}  // namespace rcb

#endif
