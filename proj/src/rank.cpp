#include "admrank/rank.hpp"

#include "admrank/errors.hpp"

#include <algorithm>

namespace admrank {

PencilPartition pencil_partition(const BinaryForm& g1, const BinaryForm& g2) {
    PencilPartition part;
    part.disc = discriminant_in_lambda(g1, g2);

    auto add_sample = [&](const Rat& lam) {
        auto member = linear_combination({{Rat(1), g1}, {lam, g2}});
        if (!member) return; // cannot happen for independent generators
        part.samples.push_back({false, lam, *member, is_squarefree(*member)});
    };

    if (part.disc.is_zero() || part.disc.degree() == 0 || count_real_roots(part.disc) == 0) {
        // no real partition points: the whole line is one component
        if (!part.disc.is_zero()) add_sample(Rat(0));
        // disc identically zero: every finite member is degenerate, only the
        // lambda = infinity member can contribute
    } else {
        part.roots = isolate_real_roots(part.disc);
        separate_intervals(part.disc, part.roots);
        const auto& iv = part.roots;
        // leftmost: any rational strictly below the smallest root
        Int fl;
        mpz_fdiv_q(fl.get_mpz_t(), iv.front().lo.get_num().get_mpz_t(), iv.front().lo.get_den().get_mpz_t());
        add_sample(Rat(fl - 1));
        for (size_t i = 0; i + 1 < iv.size(); ++i)
            add_sample(simplest_rational_between(iv[i].hi, iv[i + 1].lo));
        Int cl;
        mpz_cdiv_q(cl.get_mpz_t(), iv.back().hi.get_num().get_mpz_t(), iv.back().hi.get_den().get_mpz_t());
        add_sample(Rat(cl + 1));
    }
    part.samples.push_back({true, Rat(0), g2, is_squarefree(g2)});
    return part;
}

int border_rank(const BinaryForm& f) {
    const int d = f.degree();
    if (d < 1) throw DegreeOutOfRangeError("rank needs degree >= 1");
    for (int k = 1; k <= d; ++k) {
        if (matrix_rank(catalecticant(f, k)) < k + 1) return k;
    }
    // unreachable: dim Ann_d = d - rank(Cat_d) >= d - 1 > 0 for d >= 2
    return d;
}

namespace {

// Deterministic widening grid over integer combinations of the basis;
// returns the first squarefree member in enumeration order.
std::optional<BinaryForm> grid_search_squarefree(const std::vector<BinaryForm>& basis) {
    const size_t s = basis.size();
    for (int bound : {1, 2, 4, 8, 16, 32}) {
        std::vector<int> tuple(s, -bound);
        while (true) {
            bool all_zero = std::all_of(tuple.begin(), tuple.end(), [](int m) { return m == 0; });
            // skip tuples inside the previous bound: those were already tried
            bool fresh = bound == 1 ||
                         std::any_of(tuple.begin(), tuple.end(),
                                     [&](int m) { return m > bound / 2 || m < -bound / 2; });
            if (!all_zero && fresh) {
                std::vector<std::pair<Rat, BinaryForm>> terms;
                for (size_t i = 0; i < s; ++i)
                    if (tuple[i] != 0) terms.emplace_back(Rat(tuple[i]), basis[i]);
                auto h = linear_combination(terms);
                if (h && is_squarefree(*h)) return h;
            }
            size_t pos = 0;
            while (pos < s && tuple[pos] == bound) tuple[pos++] = -bound;
            if (pos == s) break;
            ++tuple[pos];
        }
    }
    return std::nullopt;
}

std::optional<BinaryForm> first_squarefree_sample(const PencilPartition& part) {
    for (const auto& s : part.samples)
        if (s.squarefree) return s.member;
    return std::nullopt;
}

} // namespace

std::optional<BinaryForm> squarefree_member(const std::vector<BinaryForm>& basis) {
    if (basis.empty()) return std::nullopt;
    if (basis.size() == 1) {
        if (is_squarefree(basis[0])) return basis[0];
        return std::nullopt;
    }
    if (basis[0].degree() >= 2) {
        auto cert = first_squarefree_sample(pencil_partition(basis[0], basis[1]));
        if (cert) return cert;
    }
    if (basis.size() == 2 && basis[0].degree() >= 2) return std::nullopt; // partition is complete
    return grid_search_squarefree(basis);
}

int complex_rank(const BinaryForm& f) {
    const int d = f.degree();
    const int b = border_rank(f);
    if (2 * b <= d + 1) {
        ApolarSystem sys = apolar_system(f, b);
        // Remark-e0 regime: the minimal apolar form is unique up to scale
        if (sys.dim() != 1) throw Error("internal: minimal apolar system not a line");
        return is_squarefree(sys.basis[0]) ? b : d + 2 - b;
    }
    return b; // even d, maximal border rank d/2+1
}

std::pair<int, BinaryForm> admissible_rank(const BinaryForm& f) {
    const int d = f.degree();
    const int b = border_rank(f);
    const int r = complex_rank(f);

    ApolarSystem sys = apolar_system(f, r);
    // dim 1: the unique minimal form (necessarily squarefree here);
    // dim 2: discriminant partition of the pencil;
    // dim >= 3: pencil of the first two basis vectors, then widening grid.
    auto cert = squarefree_member(sys.basis);
    if (cert) return {r, *cert};
    (void)b;
    throw CertificateSearchExhaustedError("no squarefree apolar form found at the complex rank");
}

std::optional<SchemeLabel> scheme_label_of_border_scheme(const BinaryForm& f) {
    const int d = f.degree();
    const int b = border_rank(f);
    if (2 * b > d + 1) return std::nullopt;
    ApolarSystem sys = apolar_system(f, b);
    if (sys.dim() != 1) throw Error("internal: minimal apolar system not a line");
    const BinaryForm& h = sys.basis[0];

    SchemeLabel out;
    const int minf = h.infinity_multiplicity();
    if (minf > 0) {
        out.parts.push_back(minf); // component at [1:0], a real point
        out.b += 1;
    }
    for (const auto& [factor, mult] : squarefree_decomposition(h.dehomogenize())) {
        int reals = count_real_roots(factor);
        int pairs = (factor.degree() - reals) / 2;
        out.b += reals;
        out.a += pairs;
        for (int i = 0; i < reals + 2 * pairs; ++i) out.parts.push_back(mult);
    }
    std::sort(out.parts.begin(), out.parts.end(), std::greater<int>());
    return out;
}

RankProfile rank_profile(const BinaryForm& f) {
    auto [r, cert] = admissible_rank(f);
    RankProfile p{f.degree(),
                  border_rank(f),
                  0,
                  complex_rank(f),
                  r,
                  (f.degree() + 2) / 2,
                  f.degree() + 1,
                  cert,
                  scheme_label_of_border_scheme(f)};
    p.cactus_rank = p.border_rank;
    return p;
}

} // namespace admrank
