#ifndef ADMRANK_REALROOTS_HPP
#define ADMRANK_REALROOTS_HPP

#include "admrank/forms.hpp"
#include "admrank/upoly.hpp"

namespace admrank {

/// The two real structures on the ambient space of a rational normal curve:
/// Standard is coordinatewise conjugation (fixed locus P^1(R) on the curve);
/// FixedPointFree is the structure induced by z -> -1/conj(z) on the curve,
/// which fixes no curve point.
enum class RealStructure { Standard, FixedPointFree };

struct RootClassification {
    int total_distinct;  // distinct roots in P^1(C), counting [1:0]
    int real_distinct;   // roots fixed by the structure (0 under FixedPointFree)
    int conj_pairs;      // two-element orbits
    bool is_squarefree;  // whether the original form had no repeated root
    RealStructure structure;
};

/// f divided by the gcd of f with its derivative, handled homogeneously, so
/// the result has the same distinct roots (including [1:0]) all simple.
BinaryForm squarefree_part(const BinaryForm& f);

/// True when f equals its squarefree part (no repeated roots in P^1(C)).
bool is_squarefree(const BinaryForm& f);

/// Image of f under the coefficient involution induced by the fixed-point-
/// free structure: c_j -> (-1)^j c_{d-j} (canonicalized).
BinaryForm sigma_prime_image(const BinaryForm& f);

/// Whether the root multiset of f is stable under z -> -1/conj(z). Decided
/// exactly on coefficients: the image must equal f projectively.
bool is_sigma_prime_stable(const BinaryForm& f);

/// Exact root classification under the given structure. Under Standard the
/// real count uses a Sturm sequence of f(t,1) plus the separate root at
/// infinity; under FixedPointFree the form must be sigma'-stable (else
/// NotSigmaStableError) and every root lies in a two-element orbit.
RootClassification count_real_roots(const BinaryForm& f, RealStructure structure);

/// A binary form with Gaussian-rational coefficients, h = re + i*im, stored
/// as a pair of raw integer vectors normalized jointly (so the relative
/// scale of the two parts is preserved; only the common projective scale is
/// canonicalized away).
struct GaussianForm {
    int degree;
    std::vector<Int> re, im;
};

GaussianForm make_gaussian_form(int degree, const std::vector<Rat>& re,
                                const std::vector<Rat>& im);

/// Squarefree test for h = re + i*im, decided exactly through the resultant
/// of h with its derivative over Q(i).
bool is_squarefree_gaussian(const GaussianForm& h);

/// The polynomial D(lambda) = Res_t(phi, d phi/dt) of the pencil
/// phi = g1(t,1) + lambda g2(t,1), with phi treated as a formal degree-k
/// polynomial in t over Z[lambda]. Canonicalized to primitive integer
/// coefficients with positive leading coefficient. D vanishes at exactly the
/// lambda where the member has fewer than k distinct finite roots (a
/// repeated root, or a root at infinity). When both generators vanish at
/// [1:0] the pencil is moved by the smallest shear (x, y) -> (x, m x + y)
/// fixing that; DegenerateDehomogenizationError if no small shear works.
UPoly discriminant_in_lambda(const BinaryForm& g1, const BinaryForm& g2);

} // namespace admrank

#endif
