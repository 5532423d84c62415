#include "admrank/realroots.hpp"

#include "admrank/errors.hpp"

namespace admrank {

BinaryForm squarefree_part(const BinaryForm& f) {
    const int m = f.infinity_multiplicity();
    UPoly sf = squarefree_part(f.dehomogenize());
    return homogenize(sf.degree() + (m > 0 ? 1 : 0), sf);
}

bool is_squarefree(const BinaryForm& f) { return squarefree_part(f) == f; }

BinaryForm sigma_prime_image(const BinaryForm& f) {
    const int d = f.degree();
    std::vector<Int> g(d + 1);
    for (int j = 0; j <= d; ++j) {
        g[j] = f.coeff(d - j);
        if (j % 2 == 1) g[j] = -g[j];
    }
    return BinaryForm(d, g);
}

bool is_sigma_prime_stable(const BinaryForm& f) {
    // canonicalization absorbs the projective scale, including the sign
    return sigma_prime_image(f) == f;
}

RootClassification count_real_roots(const BinaryForm& f, RealStructure structure) {
    if (f.degree() < 1) throw DegreeOutOfRangeError("root classification needs degree >= 1");
    RootClassification rc;
    rc.structure = structure;
    BinaryForm sf = squarefree_part(f);
    rc.total_distinct = sf.degree();
    rc.is_squarefree = (sf == f);
    if (structure == RealStructure::Standard) {
        int finite = count_real_roots(f.dehomogenize());
        rc.real_distinct = finite + (f.infinity_multiplicity() > 0 ? 1 : 0);
        rc.conj_pairs = (rc.total_distinct - rc.real_distinct) / 2;
        return rc;
    }
    if (!is_sigma_prime_stable(f))
        throw NotSigmaStableError("root multiset is not stable under z -> -1/conj(z)");
    if (rc.total_distinct % 2 != 0)
        throw NotSigmaStableError("sigma'-stable form with an odd number of distinct roots");
    rc.real_distinct = 0;
    rc.conj_pairs = rc.total_distinct / 2;
    return rc;
}

namespace {

struct GaussRat {
    Rat re, im;
    bool is_zero() const { return re == 0 && im == 0; }
    GaussRat operator+(const GaussRat& o) const { return {re + o.re, im + o.im}; }
    GaussRat operator-(const GaussRat& o) const { return {re - o.re, im - o.im}; }
    GaussRat operator*(const GaussRat& o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }
    GaussRat operator/(const GaussRat& o) const {
        Rat n = o.re * o.re + o.im * o.im;
        return {(re * o.re + im * o.im) / n, (im * o.re - re * o.im) / n};
    }
};

// determinant over Q(i) by plain Gaussian elimination
GaussRat gauss_det(std::vector<std::vector<GaussRat>> m) {
    const size_t n = m.size();
    GaussRat det{Rat(1), Rat(0)};
    for (size_t k = 0; k < n; ++k) {
        size_t piv = k;
        while (piv < n && m[piv][k].is_zero()) ++piv;
        if (piv == n) return {Rat(0), Rat(0)};
        if (piv != k) {
            std::swap(m[k], m[piv]);
            det = GaussRat{-det.re, -det.im};
        }
        det = det * m[k][k];
        for (size_t i = k + 1; i < n; ++i) {
            if (m[i][k].is_zero()) continue;
            GaussRat t = m[i][k] / m[k][k];
            for (size_t j = k; j < n; ++j) m[i][j] = m[i][j] - t * m[k][j];
        }
    }
    return det;
}

} // namespace

GaussianForm make_gaussian_form(int degree, const std::vector<Rat>& re,
                                const std::vector<Rat>& im) {
    if (re.size() != static_cast<size_t>(degree) + 1 || im.size() != re.size())
        throw LengthMismatchError("gaussian parts must both have degree+1 coefficients");
    std::vector<Rat> joint = re;
    joint.insert(joint.end(), im.begin(), im.end());
    std::vector<Int> norm = primitive_normalize(joint);
    bool nonzero = false;
    for (const auto& x : norm) nonzero = nonzero || x != 0;
    if (!nonzero) throw ZeroFormError();
    GaussianForm h;
    h.degree = degree;
    h.re.assign(norm.begin(), norm.begin() + degree + 1);
    h.im.assign(norm.begin() + degree + 1, norm.end());
    return h;
}

bool is_squarefree_gaussian(const GaussianForm& h) {
    const int k = h.degree;
    if (k < 2) return true;
    // c'_i = sum_{j>=i} C(j,i) m^(j-i) c_j moves the point at infinity
    auto shear_raw = [&](const std::vector<Int>& c, long mshear) {
        std::vector<Int> out(k + 1, Int(0));
        for (int i = 0; i <= k; ++i) {
            Int mp(1);
            for (int j = i; j <= k; ++j) {
                Int bin;
                mpz_bin_uiui(bin.get_mpz_t(), j, i);
                out[i] += bin * mp * c[j];
                mp *= Int(mshear);
            }
        }
        return out;
    };
    std::vector<Int> a = h.re, b = h.im;
    if (a[0] == 0 && b[0] == 0) {
        bool fixed = false;
        for (long m = 1; m <= k + 2 && !fixed; ++m) {
            auto as = shear_raw(h.re, m), bs = shear_raw(h.im, m);
            if (as[0] != 0 || bs[0] != 0) {
                a = std::move(as);
                b = std::move(bs);
                fixed = true;
            }
        }
        if (!fixed) return false; // nonzero h cannot vanish at k+2 points
    }
    // h as a polynomial in t: coefficient of t^(k-j) is a[j] + i b[j]
    auto cf = [&](int deg_t) { return GaussRat{Rat(a[k - deg_t]), Rat(b[k - deg_t])}; };
    // Sylvester matrix of (h, h') with formal sizes (k, k-1); lc(h) != 0
    // after the shear, so the resultant vanishes iff h has a repeated root
    const size_t n = 2 * k - 1;
    std::vector<std::vector<GaussRat>> m(n, std::vector<GaussRat>(n, GaussRat{Rat(0), Rat(0)}));
    for (int i = 0; i < k - 1; ++i)
        for (int j = 0; j <= k; ++j) m[i][i + j] = cf(k - j);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j <= k - 1; ++j) {
            GaussRat d = cf(k - j);
            Rat mul(k - j);
            m[k - 1 + i][i + j] = GaussRat{d.re * mul, d.im * mul};
        }
    return !gauss_det(std::move(m)).is_zero();
}

UPoly discriminant_in_lambda(const BinaryForm& g1, const BinaryForm& g2) {
    const int k = g1.degree();
    if (g2.degree() != k) throw LengthMismatchError("pencil generators must have equal degree");
    if (k < 2) throw DegreeOutOfRangeError("pencil discriminant needs degree >= 2");

    BinaryForm a = g1, b = g2;
    if (a.coeff(0) == 0 && b.coeff(0) == 0) {
        // both vanish at [1:0]; move the point at infinity deterministically
        bool fixed = false;
        for (int m = 1; m <= 2 * k + 2; ++m) {
            BinaryForm as = shear(g1, Int(m)), bs = shear(g2, Int(m));
            if (as.coeff(0) != 0 || bs.coeff(0) != 0) {
                a = as;
                b = bs;
                fixed = true;
                break;
            }
        }
        if (!fixed)
            throw DegenerateDehomogenizationError("pencil generators share every tested point at infinity");
    }

    // phi(t) = a(t,1) + lambda b(t,1), coefficients in Z[lambda]
    UPoly pa = a.dehomogenize(), pb = b.dehomogenize();
    std::vector<UPoly> phi(k + 1), dphi(k);
    for (int i = 0; i <= k; ++i) phi[i] = UPoly({pa.coeff(i), pb.coeff(i)});
    for (int i = 1; i <= k; ++i) dphi[i - 1] = phi[i] * Int(i);

    UPoly res = resultant_formal(phi, k, dphi, k - 1);
    if (res.is_zero()) return res;
    res = res.primitive_part();
    if (sgn(res.lc()) < 0) res = -res;
    return res;
}

} // namespace admrank
