#ifndef ADMRANK_FORMS_HPP
#define ADMRANK_FORMS_HPP

#include "admrank/linalg.hpp"
#include "admrank/rational.hpp"
#include "admrank/upoly.hpp"

#include <optional>
#include <string>
#include <vector>

namespace admrank {

/// A nonzero degree-d homogeneous binary form
///     f(x,y) = c_0 x^d + c_1 x^(d-1) y + ... + c_d y^d
/// stored as its canonical projective representative: coprime integer
/// coefficients with positive first nonzero entry. Two forms compare equal
/// exactly when they are the same point of P^d.
///
/// Values are immutable after construction; every operation on them is a
/// pure function, so unrestricted concurrent use is safe.
class BinaryForm {
  public:
    /// Throws ZeroFormError / LengthMismatchError per the make_form contract.
    BinaryForm(int degree, const std::vector<Rat>& coeffs);
    BinaryForm(int degree, const std::vector<Int>& coeffs);

    int degree() const { return degree_; }
    const std::vector<Int>& coeffs() const { return c_; }
    const Int& coeff(int j) const { return c_[j]; }

    bool operator==(const BinaryForm& o) const { return degree_ == o.degree_ && c_ == o.c_; }
    bool operator!=(const BinaryForm& o) const { return !(*this == o); }
    bool operator<(const BinaryForm& o) const; // lexicographic; for canonical ordering

    /// f(t, 1) as a univariate polynomial; its degree is degree() minus the
    /// multiplicity of the root at infinity [1:0].
    UPoly dehomogenize() const;

    /// Multiplicity of [1:0] as a root (index of the first nonzero coefficient).
    int infinity_multiplicity() const;

    /// Exact evaluation at a projective point given by (a : b).
    Rat evaluate(const Rat& a, const Rat& b) const;

    std::string str() const; // human-readable, e.g. "3*x^2*y - y^3"

  private:
    int degree_;
    std::vector<Int> c_;
};

/// make_form per the external contract: length(coeffs) = degree+1, not all
/// zero; result canonicalized.
BinaryForm make_form(int degree, const std::vector<Rat>& coeffs);
BinaryForm make_form(int degree, const std::vector<Int>& coeffs);

/// Rebuild a form of the given degree from its dehomogenization (the gap
/// between deg p and degree is the multiplicity at infinity).
BinaryForm homogenize(int degree, const UPoly& p);

/// Apolarity action: op of degree k acts on f of degree d >= k as a constant
/// coefficient differential operator, X^a Y^b acting as d_x^a d_y^b.
/// Returns nullopt when the image is the zero form (the Zero result is
/// representable here, unlike in make_form). Throws DegreeTooHighError if
/// k > d. The image is returned as a canonical projective representative.
std::optional<BinaryForm> contract(const BinaryForm& op, const BinaryForm& f);

/// The (d-k+1) x (k+1) catalecticant matrix of f in degree k: column j is
/// the coefficient vector of contract(X^(k-j) Y^j, f). Exact integers.
IntMatrix catalecticant(const BinaryForm& f, int k);

/// Basis of the degree-k graded piece of the apolar ideal Ann(f).
struct ApolarSystem {
    int source_degree;
    int operator_degree;
    std::vector<BinaryForm> basis; // canonicalized, lexicographically ordered
    int dim() const { return static_cast<int>(basis.size()); }
};

/// Kernel of catalecticant(f, k) by fraction-free elimination; dim may be 0.
ApolarSystem apolar_system(const BinaryForm& f, int k);

/// (a x + b y)^r expanded exactly; (a, b) != (0, 0).
BinaryForm power_of_linear_form(const Rat& a, const Rat& b, int r);

/// Linear combination sum w_i f_i of forms of equal degree; nullopt if zero.
std::optional<BinaryForm> linear_combination(const std::vector<std::pair<Rat, BinaryForm>>& terms);

/// The shear (x, y) -> (x, m x + y); moves the point at infinity, det = 1.
BinaryForm shear(const BinaryForm& f, const Int& m);

/// gcd of two forms as binary forms (handles roots at infinity); canonical.
BinaryForm form_gcd(const BinaryForm& f, const BinaryForm& g);

/// Text codec for the interchange format "d:c0,c1,...,cd".
BinaryForm parse_form(const std::string& text);
std::string format_form(const BinaryForm& f);

} // namespace admrank

#endif
