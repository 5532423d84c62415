#ifndef ADMRANK_RANK_HPP
#define ADMRANK_RANK_HPP

#include "admrank/forms.hpp"
#include "admrank/realroots.hpp"

#include <optional>
#include <vector>

namespace admrank {

/// One sampled member of the pencil g1 + lambda g2 (lambda = infinity means
/// the pure-g2 member). Samples sit strictly between consecutive real roots
/// of the pencil discriminant, chosen as the smallest-denominator rational
/// in each gap, so the root structure of the member represents its whole
/// interval.
struct PencilSample {
    bool at_infinity = false;
    Rat lambda;          // meaningful when !at_infinity
    BinaryForm member;
    bool squarefree;
};

struct PencilPartition {
    UPoly disc;                      // canonical; zero if the resultant vanishes identically
    std::vector<RootInterval> roots; // isolated, pairwise separated, sorted
    std::vector<PencilSample> samples;
};

/// Discriminant partition of the real lambda-line for the pencil spanned by
/// g1, g2, with one interval sample per component plus lambda = infinity.
PencilPartition pencil_partition(const BinaryForm& g1, const BinaryForm& g2);

/// First squarefree member of the rational span of the given (independent)
/// forms, deterministically: the form itself (dim 1), the discriminant
/// partition samples (dim 2), or the partition of the first two basis
/// vectors followed by a widening integer grid (dim >= 3).
std::optional<BinaryForm> squarefree_member(const std::vector<BinaryForm>& basis);

/// Label data of a conjugation-stable zero-dimensional scheme: (a, b) is the
/// label of its reduced point set, parts are the component degrees
/// (descending).
struct SchemeLabel {
    int a = 0;
    int b = 0;
    std::vector<int> parts;
    bool operator==(const SchemeLabel& o) const = default;
};

struct RankProfile {
    int degree;
    int border_rank;
    int cactus_rank;    // equals border_rank on the rational normal curve
    int complex_rank;   // Sylvester: b, or degree+2-b
    int admissible_rank; // equals complex_rank (standard structure)
    int generic_rank;   // floor((degree+2)/2)
    int rho;            // degree+1
    BinaryForm certificate; // squarefree apolar form of degree complex_rank
    std::optional<SchemeLabel> scheme_label; // present when b <= floor((d+1)/2)
};

/// Smallest k >= 1 with dim Ann(f)_k > 0.
int border_rank(const BinaryForm& f);

/// Sylvester's theorem: b if the (unique) minimal apolar form is squarefree,
/// else d+2-b; b itself when b = d/2+1 (even d).
int complex_rank(const BinaryForm& f);

/// complex_rank together with a rational squarefree apolar certificate of
/// that degree (its root set is conjugation-stable, hence an admissible
/// decomposition). Throws CertificateSearchExhaustedError only if the
/// widening grid fails, which the existence theorem rules out.
std::pair<int, BinaryForm> admissible_rank(const BinaryForm& f);

/// Scheme-label of the unique border-rank scheme (absent when
/// b > floor((d+1)/2), where uniqueness is unavailable).
std::optional<SchemeLabel> scheme_label_of_border_scheme(const BinaryForm& f);

RankProfile rank_profile(const BinaryForm& f);

} // namespace admrank

#endif
