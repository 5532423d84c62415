#include "admrank/regions.hpp"

#include "admrank/errors.hpp"
#include "admrank/rng.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <thread>

namespace admrank {

std::string label_set_key(const std::vector<Label>& labels) {
    std::vector<Label> ls = labels;
    std::sort(ls.begin(), ls.end());
    std::string out = "{";
    for (size_t i = 0; i < ls.size(); ++i) {
        if (i) out += ",";
        out += ls[i].str();
    }
    return out + "}";
}

namespace {

constexpr long kShardSize = 128;

int effective_threads(int requested) {
    int t = requested > 0 ? requested : static_cast<int>(std::thread::hardware_concurrency());
    if (t < 1) t = 1;
    if (const char* cap = std::getenv("ADMRANK_THREADS")) {
        int c = std::atoi(cap);
        if (c >= 1 && c < t) t = c;
    }
    return t;
}

BinaryForm draw_form(SplitMix64& rng, int d, long bound, RealStructure structure) {
    while (true) {
        std::vector<Int> c(d + 1);
        bool nonzero = false;
        for (int j = 0; j <= d; ++j) {
            long x = rng.uniform(-bound, bound);
            c[j] = Int(x);
            if (x != 0) nonzero = true;
        }
        if (!nonzero) continue; // zero draw: redraw
        BinaryForm f(d, c);
        if (structure == RealStructure::Standard) return f;
        try {
            return make_sigma_prime_real(f);
        } catch (const ZeroFormError&) {
            continue; // anti-invariant draw: redraw
        }
    }
}

struct ShardResult {
    std::map<std::string, RegionReport::SetStat> sets;
    std::map<std::string, long> labels;
    long degenerate = 0;
};

} // namespace

RegionReport sample_labels(int d, RealStructure structure, long n, std::uint64_t seed,
                           long coeff_bound, double threshold, int threads) {
    if (d < 2) throw DegreeOutOfRangeError("sampling needs degree >= 2");
    if (n < 1) throw Error("sampling needs n >= 1");
    if (coeff_bound < 1) throw Error("coefficient bound must be positive");

    RegionReport rep;
    rep.degree = d;
    rep.structure = structure;
    rep.n_samples = n;
    rep.seed = seed;
    rep.coeff_bound = coeff_bound;
    rep.threshold = threshold;

    const int g = (d + 2) / 2;
    const long n_shards = (n + kShardSize - 1) / kShardSize;

    auto run_shard = [&](long shard, ShardResult& out) {
        SplitMix64 rng(mix_stream(seed, static_cast<std::uint64_t>(shard)));
        const long lo = shard * kShardSize;
        const long hi = std::min(n, lo + kShardSize);
        for (long idx = lo; idx < hi; ++idx) {
            BinaryForm f = draw_form(rng, d, coeff_bound, structure);
            LabelSet ls = label_set(f, structure, mix_stream(seed, 0x5eedULL + idx));
            bool degenerate = border_rank(f) < g || !ls.exact || ls.deciding_dim > 2;
            if (degenerate) {
                ++out.degenerate;
                continue;
            }
            std::vector<Label> labels;
            for (const auto& [l, w] : ls.labels) labels.push_back(l);
            std::string key = label_set_key(labels);
            auto& stat = out.sets[key];
            ++stat.count;
            if (stat.first_index < 0 || idx < stat.first_index) {
                stat.first_index = idx;
                stat.representative = f;
                stat.labels = labels;
            }
            for (const auto& l : labels) ++out.labels[l.str()];
        }
    };

    const int nthreads = effective_threads(threads);
    std::vector<ShardResult> results(n_shards);
    if (nthreads == 1 || n_shards == 1) {
        for (long s = 0; s < n_shards; ++s) run_shard(s, results[s]);
    } else {
        std::vector<std::thread> pool;
        std::atomic<long> next{0};
        for (int t = 0; t < nthreads; ++t)
            pool.emplace_back([&]() {
                long s;
                while ((s = next.fetch_add(1)) < n_shards) run_shard(s, results[s]);
            });
        for (auto& th : pool) th.join();
    }

    // associative, order-independent merge
    for (const auto& r : results) {
        rep.degenerate_count += r.degenerate;
        for (const auto& [key, stat] : r.sets) {
            auto& acc = rep.set_counts[key];
            acc.count += stat.count;
            acc.labels = stat.labels;
            if (acc.first_index < 0 || (stat.first_index >= 0 && stat.first_index < acc.first_index)) {
                acc.first_index = stat.first_index;
                acc.representative = stat.representative;
            }
        }
        for (const auto& [key, c] : r.labels) rep.label_counts[key] += c;
    }

    // empirical typicality: frequency above threshold plus recurrence on a
    // 16-point rational ball around a witness
    const long min_count = static_cast<long>(threshold * static_cast<double>(n));
    std::map<std::string, Label> above;
    for (const auto& [key, stat] : rep.set_counts)
        for (const auto& l : stat.labels)
            if (rep.label_counts[l.str()] >= std::max<long>(min_count, 1)) above.emplace(l.str(), l);

    for (const auto& [lstr, l] : above) {
        // witness: representative of the most frequent set containing l
        const RegionReport::SetStat* best = nullptr;
        for (const auto& [key, stat] : rep.set_counts) {
            if (std::find(stat.labels.begin(), stat.labels.end(), l) == stat.labels.end()) continue;
            if (!best || stat.count > best->count) best = &stat;
        }
        if (!best || !best->representative) continue;
        const BinaryForm& f0 = *best->representative;
        Int maxc(1);
        for (const auto& c : f0.coeffs()) {
            Int a = abs(c);
            if (a > maxc) maxc = a;
        }
        Rat delta = Rat(maxc) / 1024;
        bool stable = true;
        for (int t = 0; t < 16 && stable; ++t) {
            std::vector<Rat> c;
            for (const auto& x : f0.coeffs()) c.emplace_back(x);
            c[t % (d + 1)] += (t < 8 ? delta : -delta);
            try {
                BinaryForm fp(d, c);
                LabelSet ls = label_set(fp, structure, seed);
                if (!ls.contains(l)) stable = false;
            } catch (const Error&) {
                stable = false;
            }
        }
        if (stable) rep.empirical_typical.push_back(l);
    }
    std::sort(rep.empirical_typical.begin(), rep.empirical_typical.end());
    return rep;
}

namespace {

// product of linear dehomogenized factors (t + u)^a (t + v)^b as rationals
std::vector<Rat> linear_power_product(const Rat& u, int a, const Rat& v, int b) {
    std::vector<Rat> p{Rat(1)};
    auto mul = [&](const Rat& root, int times) {
        for (int i = 0; i < times; ++i) {
            std::vector<Rat> np(p.size() + 1, Rat(0));
            for (size_t j = 0; j < p.size(); ++j) {
                np[j + 1] += p[j];
                np[j] += root * p[j];
            }
            p = std::move(np);
        }
    };
    mul(u, a);
    mul(v, b);
    return p;
}

BinaryForm form_from_rat_dehomog(int degree, const std::vector<Rat>& p) {
    std::vector<Rat> c(degree + 1, Rat(0));
    for (size_t i = 0; i < p.size(); ++i) c[degree - i] = p[i];
    return BinaryForm(degree, c);
}

} // namespace

Rat projective_distance(const BinaryForm& p, const BinaryForm& reference) {
    if (p.degree() != reference.degree())
        throw LengthMismatchError("projective distance needs equal degrees");
    int piv = 0;
    Int best(0);
    for (int j = 0; j <= reference.degree(); ++j) {
        Int a = abs(reference.coeff(j));
        if (a > best) {
            best = a;
            piv = j;
        }
    }
    if (p.coeff(piv) == 0) throw Error("projective distance pivot vanishes on the track point");
    Rat dist(0);
    Rat pp(p.coeff(piv)), rp(reference.coeff(piv));
    for (int j = 0; j <= reference.degree(); ++j) {
        Rat dev = Rat(p.coeff(j)) / pp - Rat(reference.coeff(j)) / rp;
        if (dev < 0) dev = -dev;
        if (dev > dist) dist = dev;
    }
    return dist;
}

BoundarySequence boundary_tracks(int r, const Rat& u, const Rat& v, const Rat& w,
                                 const std::vector<Rat>& epsilons) {
    if (r < 5 || r % 2 == 0) throw DegreeOutOfRangeError("boundary tracks need odd degree r >= 5");
    if (u == v || u == w || v == w)
        throw DegenerateConfigurationError("curve parameters u, v, w must be distinct");
    for (const auto& e : epsilons)
        if (!(e > 0)) throw DegenerateConfigurationError("epsilon schedule must be positive");

    BinaryForm base = power_of_linear_form(Rat(1), w, r);

    // limit = w^r + r u^(r-1) v, a point of J(X, tau(X))
    BinaryForm limit = [&]() {
        std::vector<Rat> lim(r + 1, Rat(0));
        for (int j = 0; j <= r; ++j) lim[j] = Rat(base.coeff(j));
        auto uv = linear_power_product(u, r - 1, v, 1);
        for (size_t i = 0; i < uv.size(); ++i) lim[r - i] += Rat(r) * uv[i];
        return BinaryForm(r, lim);
    }();

    BoundarySequence seq{r, u, v, w, base, limit, {}, 0, true};

    const int sgn_half = ((r - 1) / 2) % 2 == 0 ? 1 : -1;

    for (const auto& eps : epsilons) {
        // conjugate track: w^r + (1/(2 s eps)) ((iu+eps v)^r + (-iu+eps v)^r)
        //   = w^r + sum_{k odd} s (-1)^((r-k)/2) C(r,k) eps^(k-1) u^(r-k) v^k
        std::vector<Rat> pc(r + 1, Rat(0));
        for (int j = 0; j <= r; ++j) pc[j] = Rat(base.coeff(j));
        Rat epow(1);
        for (int k = 1; k <= r; k += 2) {
            Int bin;
            mpz_bin_uiui(bin.get_mpz_t(), r, k);
            int s2 = (((r - k) / 2) % 2 == 0 ? 1 : -1) * sgn_half;
            auto prod = linear_power_product(u, r - k, v, k);
            Rat coef = Rat(bin) * epow * s2;
            for (size_t i = 0; i < prod.size(); ++i) pc[r - i] += coef * prod[i];
            epow *= eps * eps;
        }
        BinaryForm conj_track(r, pc);

        // real track: w^r + (1/eps)((u+eps v)^r - u^r)
        //   = w^r + sum_{k>=1} C(r,k) eps^(k-1) u^(r-k) v^k
        std::vector<Rat> pr(r + 1, Rat(0));
        for (int j = 0; j <= r; ++j) pr[j] = Rat(base.coeff(j));
        Rat ep(1);
        for (int k = 1; k <= r; ++k) {
            Int bin;
            mpz_bin_uiui(bin.get_mpz_t(), r, k);
            auto prod = linear_power_product(u, r - k, v, k);
            Rat coef = Rat(bin) * ep;
            for (size_t i = 0; i < prod.size(); ++i) pr[r - i] += coef * prod[i];
            ep *= eps;
        }
        BinaryForm real_track(r, pr);

        BoundaryStep step{eps,
                          conj_track,
                          real_track,
                          label_set(conj_track, RealStructure::Standard),
                          label_set(real_track, RealStructure::Standard),
                          projective_distance(conj_track, seq.limit),
                          projective_distance(real_track, seq.limit)};
        seq.steps.push_back(std::move(step));
    }

    seq.limit_border_rank = border_rank(seq.limit);
    if (2 * seq.limit_border_rank <= r + 1) {
        ApolarSystem sys = apolar_system(seq.limit, seq.limit_border_rank);
        seq.limit_minimal_apolar_squarefree = sys.dim() == 1 && is_squarefree(sys.basis[0]);
    }
    return seq;
}

} // namespace admrank
