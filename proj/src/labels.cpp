#include "admrank/labels.hpp"

#include "admrank/errors.hpp"
#include "admrank/rng.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace admrank {

Label label_of_form(const BinaryForm& h, RealStructure structure) {
    RootClassification rc = count_real_roots(h, structure);
    return Label{rc.conj_pairs, rc.real_distinct};
}

bool LabelSet::contains(const Label& l) const {
    return std::any_of(labels.begin(), labels.end(),
                       [&](const auto& p) { return p.first == l; });
}

namespace {

void insert_label(std::map<Label, LabelWitness>& acc, const Label& l, LabelWitness w) {
    acc.emplace(l, std::move(w)); // keep the first witness per label
}

// Enumerate integer combinations of the basis with coefficients in
// [-bound, bound], lexicographically, at most cap nonzero tuples.
void for_each_combo(const std::vector<BinaryForm>& basis, int bound, int cap,
                    const std::function<void(const BinaryForm&)>& fn) {
    const size_t s = basis.size();
    std::vector<int> tuple(s, -bound);
    int seen = 0;
    while (seen < cap) {
        if (!std::all_of(tuple.begin(), tuple.end(), [](int m) { return m == 0; })) {
            std::vector<std::pair<Rat, BinaryForm>> terms;
            for (size_t i = 0; i < s; ++i)
                if (tuple[i] != 0) terms.emplace_back(Rat(tuple[i]), basis[i]);
            if (auto h = linear_combination(terms)) {
                fn(*h);
                ++seen;
            }
        }
        size_t pos = 0;
        while (pos < s && tuple[pos] == bound) tuple[pos++] = -bound;
        if (pos == s) break;
        ++tuple[pos];
    }
}

LabelSet standard_label_set(const BinaryForm& f, std::uint64_t seed) {
    auto [k, cert] = admissible_rank(f);
    ApolarSystem sys = apolar_system(f, k);
    LabelSet out;
    out.rank = k;
    out.structure = RealStructure::Standard;
    out.deciding_dim = sys.dim();

    std::map<Label, LabelWitness> acc;
    if (sys.dim() == 1) {
        const BinaryForm& h = sys.basis[0];
        if (!is_squarefree(h)) throw Error("internal: unique minimal apolar form not squarefree");
        insert_label(acc, label_of_form(h, RealStructure::Standard),
                     LabelWitness{std::nullopt, false, h, std::nullopt});
        out.exact = true;
    } else if (sys.dim() == 2) {
        PencilPartition part = pencil_partition(sys.basis[0], sys.basis[1]);
        for (const auto& s : part.samples) {
            if (!s.squarefree) continue; // cactus member, not a reduced decomposition
            insert_label(acc, label_of_form(s.member, RealStructure::Standard),
                         LabelWitness{s.at_infinity ? std::optional<Rat>() : s.lambda,
                                      s.at_infinity, s.member, std::nullopt});
        }
        out.exact = true;
    } else {
        // sampled mode: deterministic unit grid plus random rational draws
        auto visit = [&](const BinaryForm& h) {
            if (!is_squarefree(h)) return;
            insert_label(acc, label_of_form(h, RealStructure::Standard),
                         LabelWitness{std::nullopt, false, h, std::nullopt});
        };
        visit(cert); // the certificate is itself a minimal decomposition
        for_each_combo(sys.basis, 1, 256, visit);
        SplitMix64 rng(mix_stream(seed, 0x1abe15));
        for (int it = 0; it < 64; ++it) {
            std::vector<std::pair<Rat, BinaryForm>> terms;
            for (const auto& e : sys.basis) terms.emplace_back(Rat(rng.uniform(-9, 9)), e);
            if (auto h = linear_combination(terms)) visit(*h);
        }
        out.exact = false;
    }
    // certificate label as a safety net (always a valid decomposition)
    if (acc.empty())
        insert_label(acc, label_of_form(cert, RealStructure::Standard),
                     LabelWitness{std::nullopt, false, cert, std::nullopt});
    for (auto& [l, w] : acc) out.labels.emplace_back(l, std::move(w));
    return out;
}

// ---- fixed-point-free machinery ----

// Apply the coefficient involution to a raw integer vector of degree k.
std::vector<Int> sigma_prime_raw(const std::vector<Int>& c) {
    const int k = static_cast<int>(c.size()) - 1;
    std::vector<Int> g(k + 1);
    for (int j = 0; j <= k; ++j) {
        g[j] = c[k - j];
        if (j % 2 == 1) g[j] = -g[j];
    }
    return g;
}

// Rational basis of { h in span(basis) : J h = sign * h }.
std::vector<BinaryForm> eigenspace_basis(const std::vector<BinaryForm>& basis, int sign) {
    if (basis.empty()) return {};
    const int k = basis[0].degree();
    const size_t s = basis.size();
    // rows: k+1 coefficient constraints on the combination vector alpha
    IntMatrix m(k + 1, std::vector<Int>(s));
    for (size_t i = 0; i < s; ++i) {
        auto jv = sigma_prime_raw(basis[i].coeffs());
        for (int row = 0; row <= k; ++row)
            m[row][i] = jv[row] - Int(sign) * basis[i].coeff(row);
    }
    std::vector<BinaryForm> out;
    for (const auto& alpha : kernel_basis(m)) {
        std::vector<std::pair<Rat, BinaryForm>> terms;
        for (size_t i = 0; i < s; ++i)
            if (alpha[i] != 0) terms.emplace_back(Rat(alpha[i]), basis[i]);
        if (auto h = linear_combination(terms)) out.push_back(*h);
    }
    std::sort(out.begin(), out.end());
    return out;
}

LabelSet fpf_label_set(const BinaryForm& f) {
    if (!is_sigma_prime_stable(f))
        throw NotSigmaStableError("form is not real for the fixed-point-free structure");
    const int d = f.degree();
    const int k0 = complex_rank(f);
    const int g = (d + 2) / 2;
    const int kmax = std::max(2 * g, d + 2);

    LabelSet out;
    out.structure = RealStructure::FixedPointFree;
    bool first_level = true;

    for (int k = (k0 % 2 == 0) ? k0 : k0 + 1; k <= kmax; k += 2) {
        std::vector<BinaryForm> space;
        if (k <= d) {
            ApolarSystem sys = apolar_system(f, k);
            out.deciding_dim = sys.dim();
            space = sys.basis;
        } else {
            // every operator of degree > d is apolar; any sigma'-stable
            // squarefree form of degree k certifies
            out.deciding_dim = k + 1;
            std::vector<Int> mono(k + 1, Int(0));
            for (int j = 0; j <= k; ++j) {
                std::vector<Int> c(k + 1, Int(0));
                c[j] = 1;
                space.emplace_back(k, c);
            }
        }
        // search sigma'-stable members: the two rational eigenspaces first
        for (int sign : {+1, -1}) {
            auto eig = eigenspace_basis(space, sign);
            if (auto h = squarefree_member(eig)) {
                out.rank = k;
                out.exact = first_level;
                out.labels.emplace_back(Label{k / 2, 0},
                                        LabelWitness{std::nullopt, false, *h, std::nullopt});
                return out;
            }
        }
        // mixed Gaussian combinations h = A + i B, A in V+, B in V- (and the
        // conjugate convention with V-/V+ swapped covers the other scaling)
        auto vp = eigenspace_basis(space, +1);
        auto vm = eigenspace_basis(space, -1);
        if (!vp.empty() && !vm.empty()) {
            for (int bound : {1, 2}) {
                std::optional<std::pair<BinaryForm, BinaryForm>> found;
                for_each_combo(vp, bound, 32, [&](const BinaryForm& A) {
                    if (found) return;
                    for_each_combo(vm, bound, 32, [&](const BinaryForm& B) {
                        if (found) return;
                        if (is_squarefree_gaussian(A, B)) found = std::make_pair(A, B);
                    });
                });
                if (found) {
                    out.rank = k;
                    out.exact = first_level;
                    out.labels.emplace_back(Label{k / 2, 0},
                                            LabelWitness{std::nullopt, false, std::nullopt, found});
                    return out;
                }
            }
        }
        first_level = false; // a level was skipped without exact exclusion
    }
    throw CertificateSearchExhaustedError("no sigma'-stable squarefree apolar form found");
}

} // namespace

LabelSet label_set(const BinaryForm& f, RealStructure structure, std::uint64_t seed) {
    if (f.degree() < 1) throw DegreeOutOfRangeError("label set needs degree >= 1");
    if (structure == RealStructure::Standard) return standard_label_set(f, seed);
    return fpf_label_set(f);
}

RealRankResult real_rank(const BinaryForm& f) {
    const int d = f.degree();
    if (d < 1) throw DegreeOutOfRangeError("real rank needs degree >= 1");
    const int b = border_rank(f);

    auto all_real = [&](const BinaryForm& h) {
        if (!is_squarefree(h)) return false;
        RootClassification rc = count_real_roots(h, RealStructure::Standard);
        return rc.real_distinct == h.degree();
    };

    // In the principal range k <= d-b+1 every apolar form of degree k is a
    // multiple of the unique minimal form, so those levels are excluded
    // exactly once the minimal form fails to be totally real.
    std::optional<BinaryForm> minimal;
    if (2 * b <= d + 1) minimal = apolar_system(f, b).basis[0];

    int undecided_from = -1;
    for (int k = b; k <= d; ++k) {
        ApolarSystem sys = apolar_system(f, k);
        bool found = false;
        bool exact_level = sys.dim() <= 2;
        if (sys.dim() >= 3 && minimal && k <= d - b + 1 && !all_real(*minimal)) {
            // divisible by a non-totally-real form: nothing to find here
            exact_level = true;
            continue;
        }
        if (sys.dim() == 1) {
            found = all_real(sys.basis[0]);
        } else if (sys.dim() == 2) {
            PencilPartition part = pencil_partition(sys.basis[0], sys.basis[1]);
            for (const auto& s : part.samples)
                if (s.squarefree && all_real(s.member)) {
                    found = true;
                    break;
                }
        } else {
            for_each_combo(sys.basis, 1, 256, [&](const BinaryForm& h) {
                if (!found && all_real(h)) found = true;
            });
            if (!found && k == d) {
                // Top level: Ann(f)_d is a hyperplane, so the single
                // apolarity condition can be solved inside the family
                // (t - c) * prod(t - a_j) with fixed distinct real nodes a_j;
                // the form is linear in c.
                for (int base = 0; base < 8 && !found; ++base) {
                    // g = prod_j (t - a_j), a_j = 2j+1 + base/8
                    std::vector<Rat> gq{Rat(1)};
                    for (int j = 0; j < d - 1; ++j) {
                        Rat shift(base, 8);
                        shift.canonicalize();
                        Rat a = Rat(2 * j + 1) + shift;
                        std::vector<Rat> ng(gq.size() + 1, Rat(0));
                        for (size_t i = 0; i < gq.size(); ++i) {
                            ng[i + 1] += gq[i];
                            ng[i] -= a * gq[i];
                        }
                        gq = std::move(ng);
                    }
                    UPoly gz(primitive_normalize(gq));
                    UPoly tg = gz * UPoly({Int(0), Int(1)});
                    // apolar pairing <op, f> for a degree-d operator given by
                    // its dehomogenized coefficients: sum o_i c_i (d-i)! i!
                    auto pairing = [&](const UPoly& hp) {
                        Rat s(0);
                        for (int j = 0; j <= d; ++j) {
                            Int w(1);
                            for (int i = 2; i <= d - j; ++i) w *= Int(i);
                            for (int i = 2; i <= j; ++i) w *= Int(i);
                            s += Rat(hp.coeff(d - j)) * Rat(f.coeff(j)) * Rat(w);
                        }
                        return s;
                    };
                    Rat pg = pairing(gz);
                    BinaryForm h = [&]() {
                        if (pg == 0) return homogenize(d, gz); // roots a_j plus [1:0]
                        Rat c = pairing(tg) / pg;
                        std::vector<Rat> hq(gz.degree() + 2, Rat(0));
                        for (int i = 0; i <= gz.degree(); ++i) {
                            hq[i + 1] += Rat(gz.coeff(i));
                            hq[i] -= c * Rat(gz.coeff(i));
                        }
                        return homogenize(d, UPoly(primitive_normalize(hq)));
                    }();
                    if (all_real(h) && !contract(h, f)) found = true;
                }
            }
        }
        if (found) {
            int lo = (undecided_from >= 0) ? undecided_from : k;
            return RealRankResult{lo, k};
        }
        if (!exact_level && undecided_from < 0) undecided_from = k;
    }
    // theory guarantees a witness by k = d; reaching here means the sampled
    // levels were all misses
    if (undecided_from >= 0) return RealRankResult{undecided_from, d + 1};
    throw CertificateSearchExhaustedError("no totally real decomposition found up to degree");
}

Label min_weight_label(const BinaryForm& f, RealStructure structure, std::uint64_t seed) {
    LabelSet ls = label_set(f, structure, seed);
    Label best = ls.labels.front().first;
    for (const auto& [l, w] : ls.labels)
        if (l.b > best.b) best = l;
    return best;
}

BinaryForm make_sigma_prime_real(const BinaryForm& h) {
    const int d = h.degree();
    if (d % 2 != 0) throw DegreeOutOfRangeError("sigma'-symmetrization needs even degree");
    auto img = sigma_prime_raw(h.coeffs());
    std::vector<Int> sum(d + 1);
    bool nonzero = false;
    for (int j = 0; j <= d; ++j) {
        sum[j] = h.coeff(j) + img[j];
        if (sum[j] != 0) nonzero = true;
    }
    if (!nonzero) throw ZeroFormError();
    return BinaryForm(d, sum);
}

} // namespace admrank
