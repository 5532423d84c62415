#ifndef ADMRANK_UPOLY_HPP
#define ADMRANK_UPOLY_HPP

#include "admrank/rational.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace admrank {

/// Dense univariate polynomial over Z, coefficients low-to-high.
/// The zero polynomial has an empty coefficient vector and degree -1.
class UPoly {
  public:
    UPoly() = default;
    explicit UPoly(std::vector<Int> coeffs) : c_(std::move(coeffs)) { trim(); }
    static UPoly constant(Int v) { return UPoly(std::vector<Int>{std::move(v)}); }
    static UPoly monomial(int deg, Int v);

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const Int& lc() const { return c_.back(); }
    const std::vector<Int>& coeffs() const { return c_; }
    Int coeff(int i) const { return (i >= 0 && i < (int)c_.size()) ? c_[i] : Int(0); }

    bool operator==(const UPoly& o) const { return c_ == o.c_; }

    UPoly operator-() const;
    UPoly operator+(const UPoly& o) const;
    UPoly operator-(const UPoly& o) const;
    UPoly operator*(const UPoly& o) const;
    UPoly operator*(const Int& k) const;

    UPoly derivative() const;

    /// Positive content; content of 0 is 0.
    Int content() const;
    /// p / content(p), keeping the sign of the leading coefficient.
    UPoly primitive_part() const;

    Rat eval(const Rat& x) const;
    /// Exact sign of p(a/b) with b > 0, computed over Z.
    int sign_at(const Rat& x) const;
    int sign_at_plus_inf() const;
    int sign_at_minus_inf() const;

    std::string str(const std::string& var = "t") const;

  private:
    void trim();
    std::vector<Int> c_;
};

/// Quotient of an exact division a = q * b. Throws std::logic_error when the
/// division is not exact (used by fraction-free algorithms, where exactness
/// is a structural invariant).
UPoly divide_exact(const UPoly& a, const UPoly& b);

/// Primitive gcd with positive leading coefficient (gcd(0,0) = 0).
UPoly gcd(const UPoly& a, const UPoly& b);

/// p / gcd(p, p'), primitive. Roots of the result are exactly the distinct
/// roots of p.
UPoly squarefree_part(const UPoly& p);

/// Yun decomposition: list of (factor, multiplicity) with factors primitive,
/// squarefree, pairwise coprime, of positive degree, and
/// p ~ prod factor^multiplicity up to a constant.
std::vector<std::pair<UPoly, int>> squarefree_decomposition(const UPoly& p);

/// Number of distinct real roots of p on the whole line (Sturm).
int count_real_roots(const UPoly& p);

/// Number of distinct real roots in the half-open interval (a, b].
int count_real_roots_in(const UPoly& p, const Rat& a, const Rat& b);

struct RootInterval {
    Rat lo, hi;             // lo == hi means root known exactly
    bool exact() const { return lo == hi; }
};

/// Disjoint, sorted isolating intervals for the distinct real roots of p,
/// one per root. Non-degenerate intervals (lo, hi] carry p(lo) != 0 and are
/// open on the left; degenerate intervals pin a rational root exactly.
std::vector<RootInterval> isolate_real_roots(const UPoly& p);

/// Refine the intervals of isolate_real_roots until consecutive intervals
/// are separated by a strictly positive gap (hi_i < lo_{i+1}).
void separate_intervals(const UPoly& p, std::vector<RootInterval>& iv);

/// The unique rational of smallest denominator (then smallest numerator
/// magnitude) strictly inside the open interval (a, b).
Rat simplest_rational_between(const Rat& a, const Rat& b);

/// Determinant by fraction-free (Bareiss) elimination; T is Int or UPoly.
template <typename T>
T bareiss_determinant(std::vector<std::vector<T>> m);

/// Resultant of two integer polynomials (Sylvester determinant, fraction-free).
Int resultant(const UPoly& a, const UPoly& b);

/// Sylvester resultant of a and b treating a as having formal degree da and
/// b formal degree db (leading coefficients may be zero); the ring is Z[x]
/// itself, so entries are polynomials in a second variable.
UPoly resultant_formal(const std::vector<UPoly>& a, int da, const std::vector<UPoly>& b, int db);

} // namespace admrank

#endif
