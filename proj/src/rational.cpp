#include "admrank/rational.hpp"

#include "admrank/errors.hpp"

namespace admrank {

Rat parse_rational(const std::string& s) {
    if (s.empty()) throw ParseError("empty rational literal");
    std::string t = s;
    // mpq accepts "p/q" directly but will happily read partial garbage via
    // c-string constructors, so validate the character set first.
    size_t slashes = 0;
    for (size_t i = 0; i < t.size(); ++i) {
        char c = t[i];
        if (c == '/') {
            ++slashes;
            continue;
        }
        if (c == '-' || c == '+') {
            // sign allowed at the start of numerator or denominator
            if (i != 0 && t[i - 1] != '/') throw ParseError("bad rational literal: " + s);
            continue;
        }
        if (c < '0' || c > '9') throw ParseError("bad rational literal: " + s);
    }
    if (slashes > 1) throw ParseError("bad rational literal: " + s);
    Rat r;
    if (r.set_str(t, 10) != 0) throw ParseError("bad rational literal: " + s);
    if (r.get_den() == 0) throw ParseError("zero denominator: " + s);
    r.canonicalize();
    return r;
}

std::string format_rational(const Rat& r) {
    Rat c = r;
    c.canonicalize();
    if (c.get_den() == 1) return c.get_num().get_str();
    return c.get_num().get_str() + "/" + c.get_den().get_str();
}

std::vector<Int> primitive_normalize(const std::vector<Rat>& v) {
    Int den(1);
    for (const auto& r : v) den = lcm(den, r.get_den());
    std::vector<Int> w;
    w.reserve(v.size());
    for (const auto& r : v) w.push_back(Int(r.get_num() * (den / r.get_den())));
    return primitive_normalize(w);
}

std::vector<Int> primitive_normalize(const std::vector<Int>& v) {
    Int g(0);
    for (const auto& x : v) g = gcd(g, x);
    if (g == 0) return v; // all zero
    int lead = 0;
    for (const auto& x : v) {
        if (x != 0) {
            lead = sgn(x);
            break;
        }
    }
    if (lead < 0) g = -g;
    std::vector<Int> w;
    w.reserve(v.size());
    for (const auto& x : v) w.push_back(Int(x / g));
    return w;
}

} // namespace admrank
