#ifndef ADMRANK_REGIONS_HPP
#define ADMRANK_REGIONS_HPP

#include "admrank/labels.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace admrank {

/// Aggregated label statistics from coefficient-space sampling.
struct RegionReport {
    int degree = 0;
    RealStructure structure = RealStructure::Standard;
    long n_samples = 0;
    std::uint64_t seed = 0;
    long coeff_bound = 0;
    double threshold = 0.01;

    struct SetStat {
        long count = 0;
        long first_index = -1;              // earliest sample achieving this set
        std::optional<BinaryForm> representative;
        std::vector<Label> labels;
    };
    /// counts of minimal-weight label sets, keyed like "{(0,3),(1,1)}"
    std::map<std::string, SetStat> set_counts;
    /// per-label occurrence counts (a sample counts once per label it carries)
    std::map<std::string, long> label_counts;

    /// samples whose border rank fell below generic, or whose label engine
    /// left the exact (dim <= 2) regime
    long degenerate_count = 0;

    /// labels above the threshold that also recur on a 16-point rational
    /// ball around a witness (the empirical proxy for typicality)
    std::vector<Label> empirical_typical;
};

std::string label_set_key(const std::vector<Label>& labels);

/// Draw n forms with uniform integer coefficients in [-coeff_bound,
/// coeff_bound] (sigma'-symmetrized under FixedPointFree), compute each
/// label set, aggregate. Deterministic for fixed (seed, n, d, coeff_bound):
/// the sample index space is partitioned into fixed-size shards, each with
/// its own generator stream, so thread count does not affect the result.
/// threads = 0 means use the hardware count (capped by ADMRANK_THREADS).
RegionReport sample_labels(int d, RealStructure structure, long n, std::uint64_t seed,
                           long coeff_bound, double threshold = 0.01, int threads = 0);

/// One epsilon step of the two witness sequences through a label-region
/// boundary point.
struct BoundaryStep {
    Rat epsilon;
    BinaryForm conj_track;  // base + conjugate-pair secant term, in W(a,b)
    BinaryForm real_track;  // base + real secant-difference term, in W(a-1,b+2)
    LabelSet conj_labels;
    LabelSet real_labels;
    Rat conj_distance;      // exact projective distance to the common limit
    Rat real_distance;
};

struct BoundarySequence {
    int r;
    Rat u, v, w;            // curve parameters: s parametrizes (x + s y)^r
    BinaryForm base;        // w^r
    BinaryForm limit;       // base + r * u^(r-1) v, on the join with tau(X)
    std::vector<BoundaryStep> steps;
    int limit_border_rank;
    bool limit_minimal_apolar_squarefree; // false certifies the rank drop
};

/// The two sequences of Remark-component type for odd r >= 5: the conjugate
/// track p_eps = w^r + (1/(2 s eps)) ((i u + eps v)^r + (-i u + eps v)^r)
/// with s = (-1)^((r-1)/2) (the scale normalization makes both tracks share
/// the limit w^r + r u^(r-1) v), and the real track
/// p'_eps = w^r + (1/eps)((u + eps v)^r - u^r). All arithmetic exact.
BoundarySequence boundary_tracks(int r, const Rat& u, const Rat& v, const Rat& w,
                                 const std::vector<Rat>& epsilons);

/// Exact projective distance: normalize both vectors by their entry at the
/// pivot position (the largest entry of the reference), then take the max
/// coefficient deviation.
Rat projective_distance(const BinaryForm& p, const BinaryForm& reference);

} // namespace admrank

#endif
