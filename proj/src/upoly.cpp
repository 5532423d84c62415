#include "admrank/upoly.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace admrank {

void UPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

UPoly UPoly::monomial(int deg, Int v) {
    std::vector<Int> c(deg + 1, Int(0));
    c[deg] = std::move(v);
    return UPoly(std::move(c));
}

UPoly UPoly::operator-() const {
    std::vector<Int> c(c_);
    for (auto& x : c) x = -x;
    return UPoly(std::move(c));
}

UPoly UPoly::operator+(const UPoly& o) const {
    std::vector<Int> c(std::max(c_.size(), o.c_.size()), Int(0));
    for (size_t i = 0; i < c_.size(); ++i) c[i] = c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) c[i] += o.c_[i];
    return UPoly(std::move(c));
}

UPoly UPoly::operator-(const UPoly& o) const {
    std::vector<Int> c(std::max(c_.size(), o.c_.size()), Int(0));
    for (size_t i = 0; i < c_.size(); ++i) c[i] = c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) c[i] -= o.c_[i];
    return UPoly(std::move(c));
}

UPoly UPoly::operator*(const UPoly& o) const {
    if (is_zero() || o.is_zero()) return UPoly();
    std::vector<Int> c(c_.size() + o.c_.size() - 1, Int(0));
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < o.c_.size(); ++j) c[i + j] += c_[i] * o.c_[j];
    return UPoly(std::move(c));
}

UPoly UPoly::operator*(const Int& k) const {
    if (k == 0) return UPoly();
    std::vector<Int> c(c_);
    for (auto& x : c) x *= k;
    return UPoly(std::move(c));
}

UPoly UPoly::derivative() const {
    if (degree() <= 0) return UPoly();
    std::vector<Int> c(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) c[i - 1] = c_[i] * Int(static_cast<long>(i));
    return UPoly(std::move(c));
}

Int UPoly::content() const {
    Int g(0);
    for (const auto& x : c_) g = gcd(g, x);
    return g;
}

UPoly UPoly::primitive_part() const {
    if (is_zero()) return UPoly();
    Int g = content();
    std::vector<Int> c(c_);
    for (auto& x : c) x /= g;
    return UPoly(std::move(c));
}

Rat UPoly::eval(const Rat& x) const {
    Rat acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + Rat(*it);
    return acc;
}

int UPoly::sign_at(const Rat& x) const {
    if (is_zero()) return 0;
    // p(a/b) * b^n = sum c_i a^i b^(n-i), an integer; b > 0 keeps the sign.
    const Int& a = x.get_num();
    const Int& b = x.get_den();
    Int acc(0);
    Int bpow(1);
    // Horner from the top: acc = acc*a + c_i*b^(n-i)
    int n = degree();
    for (int i = n; i >= 0; --i) {
        acc = acc * a + c_[i] * bpow;
        if (i > 0) bpow *= b;
    }
    return sgn(acc);
}

int UPoly::sign_at_plus_inf() const { return is_zero() ? 0 : sgn(lc()); }

int UPoly::sign_at_minus_inf() const {
    if (is_zero()) return 0;
    return (degree() % 2 == 0) ? sgn(lc()) : -sgn(lc());
}

std::string UPoly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::string out;
    for (int i = degree(); i >= 0; --i) {
        if (c_[i] == 0) continue;
        if (!out.empty()) out += (sgn(c_[i]) > 0) ? " + " : " - ";
        else if (sgn(c_[i]) < 0) out += "-";
        Int a = abs(c_[i]);
        bool unit = (a == 1) && i > 0;
        if (!unit) out += a.get_str();
        if (i > 0) {
            if (!unit) out += "*";
            out += var;
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out;
}

UPoly divide_exact(const UPoly& a, const UPoly& b) {
    if (b.is_zero()) throw std::logic_error("exact division by zero polynomial");
    if (a.is_zero()) return UPoly();
    int da = a.degree(), db = b.degree();
    if (da < db) throw std::logic_error("exact polynomial division with remainder");
    std::vector<Int> r = a.coeffs();
    std::vector<Int> q(da - db + 1, Int(0));
    for (int k = da - db; k >= 0; --k) {
        Int& top = r[k + db];
        if (top == 0) continue;
        Int qk;
        mpz_fdiv_qr(qk.get_mpz_t(), top.get_mpz_t(), top.get_mpz_t(), b.lc().get_mpz_t());
        if (top != 0) throw std::logic_error("inexact polynomial division");
        q[k] = qk;
        for (int i = 0; i < db; ++i) r[k + i] -= qk * b.coeff(i);
    }
    for (const auto& x : r)
        if (x != 0) throw std::logic_error("inexact polynomial division (remainder)");
    return UPoly(std::move(q));
}

namespace {

// Pseudo-remainder scaled so that the result equals rem(a, b) times a
// positive constant (needed by the Sturm chain, which is sign-sensitive).
UPoly signed_pseudo_rem(const UPoly& a, const UPoly& b) {
    int da = a.degree(), db = b.degree();
    assert(!b.is_zero() && da >= db);
    int steps = da - db + 1;
    std::vector<Int> r = a.coeffs();
    const Int& blc = b.lc();
    for (int k = da - db; k >= 0; --k) {
        Int qk = r[k + db];
        for (auto& x : r) x *= blc;
        for (int i = 0; i <= db; ++i) r[k + i] -= qk * b.coeff(i);
    }
    UPoly rem{std::vector<Int>(r.begin(), r.begin() + db)};
    // the multiplier lc(b)^steps may be negative; flip to keep the
    // positive-multiple contract
    if (sgn(blc) < 0 && steps % 2 == 1) rem = -rem;
    return rem;
}

} // namespace

UPoly gcd(const UPoly& a, const UPoly& b) {
    UPoly f = a.primitive_part(), g = b.primitive_part();
    if (f.is_zero()) return (g.is_zero() || sgn(g.lc()) > 0) ? g : -g;
    if (g.is_zero()) return sgn(f.lc()) > 0 ? f : -f;
    if (f.degree() < g.degree()) std::swap(f, g);
    while (!g.is_zero()) {
        UPoly r = signed_pseudo_rem(f, g).primitive_part();
        f = std::move(g);
        g = std::move(r);
    }
    return sgn(f.lc()) > 0 ? f : -f;
}

UPoly squarefree_part(const UPoly& p) {
    if (p.degree() <= 0) return UPoly::constant(Int(1));
    UPoly g = gcd(p, p.derivative());
    if (g.degree() == 0) return p.primitive_part();
    return divide_exact(p.primitive_part(), g).primitive_part();
}

namespace {

// minimal rational-coefficient helpers for Yun's algorithm
using QP = std::vector<Rat>; // low-to-high, trimmed

void qtrim(QP& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

QP to_q(const UPoly& p) {
    QP out;
    out.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) out.emplace_back(c);
    return out;
}

UPoly q_primitive(const QP& a) { return UPoly(primitive_normalize(a)); }

QP qderiv(const QP& a) {
    QP out;
    if (a.size() <= 1) return out;
    out.reserve(a.size() - 1);
    for (size_t i = 1; i < a.size(); ++i) out.push_back(a[i] * Rat(static_cast<long>(i)));
    qtrim(out);
    return out;
}

QP qsub(const QP& a, const QP& b) {
    QP out(std::max(a.size(), b.size()), Rat(0));
    for (size_t i = 0; i < a.size(); ++i) out[i] = a[i];
    for (size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
    qtrim(out);
    return out;
}

// exact field division; throws if not divisible
QP qdiv(QP a, const QP& b) {
    if (b.empty()) throw std::logic_error("qdiv by zero");
    if (a.empty()) return a;
    if (a.size() < b.size()) throw std::logic_error("qdiv: not divisible");
    QP q(a.size() - b.size() + 1, Rat(0));
    for (int k = (int)q.size() - 1; k >= 0; --k) {
        Rat qk = a[k + b.size() - 1] / b.back();
        q[k] = qk;
        if (qk != 0)
            for (size_t i = 0; i < b.size(); ++i) a[k + i] -= qk * b[i];
    }
    for (const auto& x : a)
        if (x != 0) throw std::logic_error("qdiv: nonzero remainder");
    return q;
}

} // namespace

std::vector<std::pair<UPoly, int>> squarefree_decomposition(const UPoly& p) {
    // Yun's algorithm over Q; factors reported as primitive integer polys.
    std::vector<std::pair<UPoly, int>> out;
    if (p.degree() <= 0) return out;
    UPoly g0 = gcd(p, p.derivative());
    if (g0.degree() == 0) {
        out.emplace_back(p.primitive_part(), 1);
        return out;
    }
    QP f = to_q(p);
    QP g = to_q(g0);
    QP b = qdiv(f, g);
    QP c = qdiv(qderiv(f), g);
    QP d = qsub(c, qderiv(b));
    int i = 1;
    while (b.size() > 1) {
        UPoly ai = gcd(q_primitive(b), q_primitive(d));
        if (ai.degree() > 0) out.emplace_back(ai, i);
        QP aq = to_q(ai);
        b = qdiv(b, aq);
        c = qdiv(d, aq);
        d = qsub(c, qderiv(b));
        ++i;
    }
    return out;
}

namespace {

std::vector<UPoly> sturm_chain(const UPoly& p) {
    std::vector<UPoly> chain;
    UPoly f = p.primitive_part();
    if (f.is_zero()) return chain;
    chain.push_back(f);
    UPoly d = f.derivative();
    if (d.is_zero()) return chain;
    chain.push_back(d.primitive_part());
    while (true) {
        const UPoly& a = chain[chain.size() - 2];
        const UPoly& b = chain[chain.size() - 1];
        if (b.degree() < 0) break;
        if (a.degree() < b.degree()) break;
        UPoly r = signed_pseudo_rem(a, b);
        if (r.is_zero()) break;
        chain.push_back((-r).primitive_part());
    }
    return chain;
}

int variations(const std::vector<int>& signs) {
    int v = 0, prev = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++v;
        prev = s;
    }
    return v;
}

int var_at(const std::vector<UPoly>& chain, const Rat& x) {
    std::vector<int> s;
    s.reserve(chain.size());
    for (const auto& q : chain) s.push_back(q.sign_at(x));
    return variations(s);
}

int var_at_plus_inf(const std::vector<UPoly>& chain) {
    std::vector<int> s;
    for (const auto& q : chain) s.push_back(q.sign_at_plus_inf());
    return variations(s);
}

int var_at_minus_inf(const std::vector<UPoly>& chain) {
    std::vector<int> s;
    for (const auto& q : chain) s.push_back(q.sign_at_minus_inf());
    return variations(s);
}

} // namespace

int count_real_roots(const UPoly& p) {
    if (p.degree() <= 0) return 0;
    auto chain = sturm_chain(p);
    return var_at_minus_inf(chain) - var_at_plus_inf(chain);
}

int count_real_roots_in(const UPoly& p, const Rat& a, const Rat& b) {
    if (p.degree() <= 0) return 0;
    auto chain = sturm_chain(p);
    return var_at(chain, a) - var_at(chain, b);
}

std::vector<RootInterval> isolate_real_roots(const UPoly& p) {
    std::vector<RootInterval> out;
    UPoly f = squarefree_part(p);
    if (f.degree() <= 0) return out;
    auto chain = sturm_chain(f);

    // Cauchy bound: all roots lie in (-B, B)
    Int maxc(0);
    for (const auto& c : f.coeffs()) {
        Int a = abs(c);
        if (a > maxc) maxc = a;
    }
    Int B = maxc / abs(f.lc()) + 2;
    Rat lo(-B), hi(B);

    struct Seg {
        Rat lo, hi;
        int vlo, vhi;
    };
    int vl = var_at(chain, lo), vh = var_at(chain, hi);
    std::vector<Seg> stack{{lo, hi, vl, vh}};
    while (!stack.empty()) {
        Seg s = stack.back();
        stack.pop_back();
        int n = s.vlo - s.vhi; // roots in (lo, hi]
        if (n == 0) continue;
        if (n == 1) {
            if (f.sign_at(s.hi) == 0) out.push_back({s.hi, s.hi});
            else out.push_back({s.lo, s.hi});
            continue;
        }
        Rat mid = (s.lo + s.hi) / 2;
        int vm = var_at(chain, mid);
        // push right first so results come out sorted
        stack.push_back({mid, s.hi, vm, s.vhi});
        stack.push_back({s.lo, mid, s.vlo, vm});
    }
    std::sort(out.begin(), out.end(), [](const RootInterval& a, const RootInterval& b) { return a.lo < b.lo; });
    return out;
}

void separate_intervals(const UPoly& p, std::vector<RootInterval>& iv) {
    UPoly f = squarefree_part(p);
    auto chain = sturm_chain(f);
    auto refine = [&](RootInterval& r) {
        // halve (lo, hi]; the root stays in the half with a sign change
        Rat mid = (r.lo + r.hi) / 2;
        int sm = f.sign_at(mid);
        if (sm == 0) {
            r.lo = r.hi = mid;
            return;
        }
        if (var_at(chain, r.lo) - var_at(chain, mid) == 1) r.hi = mid;
        else r.lo = mid;
    };
    for (size_t i = 0; i + 1 < iv.size(); ++i) {
        while (!(iv[i].hi < iv[i + 1].lo)) {
            if (!iv[i].exact()) refine(iv[i]);
            if (!(iv[i].hi < iv[i + 1].lo) && !iv[i + 1].exact()) refine(iv[i + 1]);
            if (iv[i].exact() && iv[i + 1].exact()) break; // distinct rationals, done
        }
    }
}

namespace {

// Simplest rational in the open interval (a, b) for 0 <= a < b: smallest
// denominator, then smallest value (Stern-Brocot / continued fractions).
Rat simplest_nonneg(const Rat& a, const Rat& b) {
    Int fa;
    mpz_fdiv_q(fa.get_mpz_t(), a.get_num().get_mpz_t(), a.get_den().get_mpz_t());
    Rat n(fa + 1);
    if (n < b) return n; // an integer lies strictly inside; take the smallest
    // now floor(a) <= a < b <= floor(a)+1
    Rat a0 = a - Rat(fa), b0 = b - Rat(fa); // 0 <= a0 < b0 <= 1
    if (a0 == 0) {
        // (0, b0): need the smallest m with 1/m < b0, i.e. m > 1/b0
        Rat inv = 1 / b0;
        Int m;
        mpz_fdiv_q(m.get_mpz_t(), inv.get_num().get_mpz_t(), inv.get_den().get_mpz_t());
        m += 1;
        return Rat(fa) + 1 / Rat(m);
    }
    return Rat(fa) + 1 / simplest_nonneg(1 / b0, 1 / a0);
}

} // namespace

Rat simplest_rational_between(const Rat& a, const Rat& b) {
    if (!(a < b)) throw std::logic_error("simplest_rational_between: empty interval");
    if (a < 0 && b > 0) return Rat(0);
    if (b <= 0) return -simplest_nonneg(-b, -a);
    return simplest_nonneg(a, b);
}

namespace {

inline Int ring_div(const Int& a, const Int& b) {
    Int q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    if (r != 0) throw std::logic_error("bareiss: inexact integer division");
    return q;
}

inline UPoly ring_div(const UPoly& a, const UPoly& b) { return divide_exact(a, b); }

inline bool ring_is_zero(const Int& a) { return a == 0; }
inline bool ring_is_zero(const UPoly& a) { return a.is_zero(); }

} // namespace

template <typename T>
T bareiss_determinant(std::vector<std::vector<T>> m) {
    const size_t n = m.size();
    if (n == 0) return T(1);
    for (const auto& row : m)
        if (row.size() != n) throw std::logic_error("bareiss: non-square matrix");
    int sign = 1;
    T prev = T(1);
    for (size_t k = 0; k + 1 < n; ++k) {
        if (ring_is_zero(m[k][k])) {
            size_t piv = k + 1;
            while (piv < n && ring_is_zero(m[piv][k])) ++piv;
            if (piv == n) return T(0);
            std::swap(m[k], m[piv]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j) {
                m[i][j] = ring_div(m[i][j] * m[k][k] - m[i][k] * m[k][j], prev);
            }
            m[i][k] = T(0);
        }
        prev = m[k][k];
    }
    T det = m[n - 1][n - 1];
    if (sign < 0) det = -det;
    return det;
}

template Int bareiss_determinant<Int>(std::vector<std::vector<Int>>);

namespace {
// UPoly lacks the T(0)/T(1) integer constructors used above; provide thin
// adapters via explicit specialization instead of changing the class.
} // namespace

template <>
UPoly bareiss_determinant<UPoly>(std::vector<std::vector<UPoly>> m) {
    const size_t n = m.size();
    if (n == 0) return UPoly::constant(Int(1));
    for (const auto& row : m)
        if (row.size() != n) throw std::logic_error("bareiss: non-square matrix");
    int sign = 1;
    UPoly prev = UPoly::constant(Int(1));
    for (size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k].is_zero()) {
            size_t piv = k + 1;
            while (piv < n && m[piv][k].is_zero()) ++piv;
            if (piv == n) return UPoly();
            std::swap(m[k], m[piv]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j) {
                m[i][j] = divide_exact(m[i][j] * m[k][k] - m[i][k] * m[k][j], prev);
            }
            m[i][k] = UPoly();
        }
        prev = m[k][k];
    }
    UPoly det = m[n - 1][n - 1];
    if (sign < 0) det = -det;
    return det;
}

Int resultant(const UPoly& a, const UPoly& b) {
    if (a.is_zero() || b.is_zero()) return Int(0);
    int da = a.degree(), db = b.degree();
    if (da == 0) {
        Int r;
        mpz_pow_ui(r.get_mpz_t(), a.lc().get_mpz_t(), db);
        return r;
    }
    if (db == 0) {
        Int r;
        mpz_pow_ui(r.get_mpz_t(), b.lc().get_mpz_t(), da);
        return r;
    }
    size_t n = da + db;
    std::vector<std::vector<Int>> m(n, std::vector<Int>(n, Int(0)));
    for (int i = 0; i < db; ++i)
        for (int j = 0; j <= da; ++j) m[i][i + j] = a.coeff(da - j);
    for (int i = 0; i < da; ++i)
        for (int j = 0; j <= db; ++j) m[db + i][i + j] = b.coeff(db - j);
    return bareiss_determinant<Int>(std::move(m));
}

UPoly resultant_formal(const std::vector<UPoly>& a, int da, const std::vector<UPoly>& b, int db) {
    if (da <= 0 || db <= 0) throw std::logic_error("resultant_formal: degrees must be positive");
    size_t n = da + db;
    auto at = [](const std::vector<UPoly>& v, int i) { return (i >= 0 && i < (int)v.size()) ? v[i] : UPoly(); };
    std::vector<std::vector<UPoly>> m(n, std::vector<UPoly>(n));
    for (int i = 0; i < db; ++i)
        for (int j = 0; j <= da; ++j) m[i][i + j] = at(a, da - j);
    for (int i = 0; i < da; ++i)
        for (int j = 0; j <= db; ++j) m[db + i][i + j] = at(b, db - j);
    return bareiss_determinant<UPoly>(std::move(m));
}

} // namespace admrank
