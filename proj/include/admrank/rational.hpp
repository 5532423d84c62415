#ifndef ADMRANK_RATIONAL_HPP
#define ADMRANK_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <vector>

namespace admrank {

using Int = mpz_class;
using Rat = mpq_class;

/// Parse "p/q" or "p" into an exact rational. Throws ParseError on garbage
/// or zero denominator.
Rat parse_rational(const std::string& s);

/// Render a rational as "p" or "p/q" (canonical GMP form, q > 0).
std::string format_rational(const Rat& r);

/// Scale a rational vector to a primitive integer vector (coprime entries)
/// whose first nonzero entry is positive. The all-zero vector maps to
/// all-zero. This is the canonical projective representative used for
/// equality of points throughout.
std::vector<Int> primitive_normalize(const std::vector<Rat>& v);

/// Same canonicalization starting from integers.
std::vector<Int> primitive_normalize(const std::vector<Int>& v);

inline std::vector<Rat> to_rational(const std::vector<Int>& v) {
    std::vector<Rat> out;
    out.reserve(v.size());
    for (const auto& x : v) out.emplace_back(x);
    return out;
}

inline int sign_of(const Int& x) { return sgn(x); }
inline int sign_of(const Rat& x) { return sgn(x); }

} // namespace admrank

#endif
