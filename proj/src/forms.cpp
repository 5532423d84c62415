#include "admrank/forms.hpp"

#include "admrank/errors.hpp"

#include <algorithm>
#include <sstream>

namespace admrank {

namespace {

bool all_zero_int(const std::vector<Int>& v) {
    return std::all_of(v.begin(), v.end(), [](const Int& x) { return x == 0; });
}

Int falling(long n, long k) {
    Int r(1);
    for (long i = 0; i < k; ++i) r *= Int(n - i);
    return r;
}

Int binom(long n, long k) {
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

} // namespace

BinaryForm::BinaryForm(int degree, const std::vector<Rat>& coeffs) : degree_(degree) {
    if (degree < 0) throw DegreeOutOfRangeError("negative degree");
    if (coeffs.size() != static_cast<size_t>(degree) + 1)
        throw LengthMismatchError("expected " + std::to_string(degree + 1) + " coefficients, got " +
                                  std::to_string(coeffs.size()));
    c_ = primitive_normalize(coeffs);
    if (all_zero_int(c_)) throw ZeroFormError();
}

BinaryForm::BinaryForm(int degree, const std::vector<Int>& coeffs) : degree_(degree) {
    if (degree < 0) throw DegreeOutOfRangeError("negative degree");
    if (coeffs.size() != static_cast<size_t>(degree) + 1)
        throw LengthMismatchError("expected " + std::to_string(degree + 1) + " coefficients, got " +
                                  std::to_string(coeffs.size()));
    c_ = primitive_normalize(coeffs);
    if (all_zero_int(c_)) throw ZeroFormError();
}

bool BinaryForm::operator<(const BinaryForm& o) const {
    if (degree_ != o.degree_) return degree_ < o.degree_;
    for (size_t i = 0; i < c_.size(); ++i) {
        int c = cmp(c_[i], o.c_[i]);
        if (c != 0) return c < 0;
    }
    return false;
}

UPoly BinaryForm::dehomogenize() const {
    // p(t) = f(t,1): coefficient of t^i is c_{d-i}
    std::vector<Int> up(degree_ + 1);
    for (int i = 0; i <= degree_; ++i) up[i] = c_[degree_ - i];
    return UPoly(std::move(up));
}

int BinaryForm::infinity_multiplicity() const {
    int m = 0;
    while (c_[m] == 0) ++m; // a nonzero coefficient exists
    return m;
}

Rat BinaryForm::evaluate(const Rat& a, const Rat& b) const {
    Rat acc(0);
    for (int j = 0; j <= degree_; ++j) {
        Rat term(c_[j]);
        for (int i = 0; i < degree_ - j; ++i) term *= a;
        for (int i = 0; i < j; ++i) term *= b;
        acc += term;
    }
    return acc;
}

std::string BinaryForm::str() const {
    std::string out;
    for (int j = 0; j <= degree_; ++j) {
        if (c_[j] == 0) continue;
        if (!out.empty()) out += (sgn(c_[j]) > 0) ? " + " : " - ";
        else if (sgn(c_[j]) < 0) out += "-";
        Int a = abs(c_[j]);
        int ex = degree_ - j, ey = j;
        bool unit = (a == 1) && (ex + ey > 0);
        std::string mono;
        if (ex > 0) mono += "x" + (ex > 1 ? "^" + std::to_string(ex) : "");
        if (ey > 0) {
            if (!mono.empty()) mono += "*";
            mono += "y" + (ey > 1 ? "^" + std::to_string(ey) : "");
        }
        if (!unit) out += a.get_str();
        if (!mono.empty()) {
            if (!unit) out += "*";
            out += mono;
        }
    }
    return out.empty() ? "0" : out;
}

BinaryForm make_form(int degree, const std::vector<Rat>& coeffs) { return BinaryForm(degree, coeffs); }
BinaryForm make_form(int degree, const std::vector<Int>& coeffs) { return BinaryForm(degree, coeffs); }

BinaryForm homogenize(int degree, const UPoly& p) {
    if (p.is_zero()) throw ZeroFormError();
    if (p.degree() > degree) throw DegreeOutOfRangeError("polynomial degree exceeds form degree");
    std::vector<Int> c(degree + 1, Int(0));
    for (int i = 0; i <= p.degree(); ++i) c[degree - i] = p.coeff(i);
    return BinaryForm(degree, c);
}

std::optional<BinaryForm> contract(const BinaryForm& op, const BinaryForm& f) {
    const int k = op.degree(), d = f.degree();
    if (k > d) throw DegreeTooHighError("operator degree " + std::to_string(k) +
                                        " exceeds form degree " + std::to_string(d));
    const int n = d - k;
    std::vector<Int> out(n + 1, Int(0));
    for (int m = 0; m <= n; ++m) {
        for (int i = 0; i <= k; ++i) {
            const Int& o = op.coeff(i);
            if (o == 0) continue;
            // X^(k-i) Y^i applied to the c_{m+i} monomial
            out[m] += o * f.coeff(m + i) * falling(d - m - i, k - i) * falling(m + i, i);
        }
    }
    if (all_zero_int(out)) return std::nullopt;
    return BinaryForm(n, out);
}

IntMatrix catalecticant(const BinaryForm& f, int k) {
    const int d = f.degree();
    if (k < 0 || k > d) throw DegreeOutOfRangeError("catalecticant degree out of range");
    IntMatrix m(d - k + 1, std::vector<Int>(k + 1));
    for (int j = 0; j <= k; ++j) {
        // operator X^(k-j) Y^j
        for (int row = 0; row <= d - k; ++row)
            m[row][j] = f.coeff(row + j) * falling(d - row - j, k - j) * falling(row + j, j);
    }
    return m;
}

ApolarSystem apolar_system(const BinaryForm& f, int k) {
    ApolarSystem sys;
    sys.source_degree = f.degree();
    sys.operator_degree = k;
    auto kb = kernel_basis(catalecticant(f, k));
    for (auto& v : kb) sys.basis.emplace_back(k, v);
    std::sort(sys.basis.begin(), sys.basis.end());
    return sys;
}

BinaryForm power_of_linear_form(const Rat& a, const Rat& b, int r) {
    if (a == 0 && b == 0) throw ZeroFormError();
    std::vector<Rat> c(r + 1);
    for (int j = 0; j <= r; ++j) {
        Rat term(binom(r, j));
        for (int i = 0; i < r - j; ++i) term *= a;
        for (int i = 0; i < j; ++i) term *= b;
        c[j] = term;
    }
    return BinaryForm(r, c);
}

std::optional<BinaryForm> linear_combination(const std::vector<std::pair<Rat, BinaryForm>>& terms) {
    if (terms.empty()) return std::nullopt;
    const int d = terms.front().second.degree();
    std::vector<Rat> acc(d + 1, Rat(0));
    for (const auto& [w, g] : terms) {
        if (g.degree() != d) throw LengthMismatchError("degree mismatch in linear combination");
        for (int j = 0; j <= d; ++j) acc[j] += w * Rat(g.coeff(j));
    }
    auto v = primitive_normalize(acc);
    if (all_zero_int(v)) return std::nullopt;
    return BinaryForm(d, v);
}

BinaryForm shear(const BinaryForm& f, const Int& m) {
    // g(x,y) = f(x, m x + y): c'_i = sum_{j>=i} C(j,i) m^(j-i) c_j
    const int d = f.degree();
    std::vector<Int> c(d + 1, Int(0));
    for (int i = 0; i <= d; ++i) {
        Int mp(1);
        for (int j = i; j <= d; ++j) {
            c[i] += binom(j, i) * mp * f.coeff(j);
            mp *= m;
        }
    }
    return BinaryForm(d, c);
}

BinaryForm form_gcd(const BinaryForm& f, const BinaryForm& g) {
    const int mf = f.infinity_multiplicity(), mg = g.infinity_multiplicity();
    const int minf = std::min(mf, mg);
    UPoly h = gcd(f.dehomogenize(), g.dehomogenize());
    return homogenize(h.degree() + minf, h);
}

BinaryForm parse_form(const std::string& text) {
    auto colon = text.find(':');
    if (colon == std::string::npos) throw ParseError("expected 'd:c0,c1,...,cd': " + text);
    int degree;
    try {
        size_t used = 0;
        degree = std::stoi(text.substr(0, colon), &used);
        if (used != colon) throw ParseError("bad degree in form literal");
    } catch (const ParseError&) {
        throw;
    } catch (...) {
        throw ParseError("bad degree in form literal: " + text);
    }
    std::vector<Rat> coeffs;
    std::string rest = text.substr(colon + 1);
    std::stringstream ss(rest);
    std::string item;
    while (std::getline(ss, item, ',')) coeffs.push_back(parse_rational(item));
    if (!rest.empty() && rest.back() == ',') throw ParseError("trailing comma in form literal");
    if (degree < 0) throw ParseError("negative degree in form literal");
    if (coeffs.size() != static_cast<size_t>(degree) + 1)
        throw ParseError("coefficient count does not match degree in: " + text);
    try {
        return BinaryForm(degree, coeffs);
    } catch (const ZeroFormError&) {
        throw; // domain error, not a parse error
    }
}

std::string format_form(const BinaryForm& f) {
    std::string out = std::to_string(f.degree()) + ":";
    for (int j = 0; j <= f.degree(); ++j) {
        if (j) out += ",";
        out += f.coeff(j).get_str();
    }
    return out;
}

} // namespace admrank
