#ifndef ADMRANK_LABELS_HPP
#define ADMRANK_LABELS_HPP

#include "admrank/rank.hpp"
#include "admrank/realroots.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace admrank {

/// Label (a, b) of a conjugation-stable finite set: b totally real points,
/// a conjugate pairs; weight 2a+b.
struct Label {
    int a = 0;
    int b = 0;
    int weight() const { return 2 * a + b; }
    bool operator==(const Label& o) const = default;
    bool operator<(const Label& o) const { return a != o.a ? a < o.a : b < o.b; }
    std::string str() const { return "(" + std::to_string(a) + "," + std::to_string(b) + ")"; }
};

/// Label of the root set of a squarefree form under the given structure.
Label label_of_form(const BinaryForm& h, RealStructure structure);

/// How a label was realized. Pencil samples carry their lambda; witnesses
/// from the fixed-point-free Gaussian fallback carry the full Gaussian form
/// (the apolar form is re + i*im).
struct LabelWitness {
    std::optional<Rat> lambda;
    bool lambda_infinity = false;
    std::optional<BinaryForm> form;
    std::optional<GaussianForm> gaussian;
};

struct LabelSet {
    int rank = 0;                // admissible rank under the structure
    RealStructure structure = RealStructure::Standard;
    bool exact = false;          // complete enumeration vs sampled evidence
    int deciding_dim = 0;        // dim of the apolar system the decision ran in
    std::vector<std::pair<Label, LabelWitness>> labels; // sorted by label

    bool contains(const Label& l) const;
};

/// The set of labels of minimal admissible decompositions of f.
///
/// Standard structure: the admissible rank equals the complex rank; the
/// labels are read off the apolar system at that degree (single form /
/// discriminant partition of the pencil / sampled grid for dim >= 3; the
/// seed drives only the sampled mode).
///
/// FixedPointFree: f itself must be sigma'-real. Every label is (k/2, 0),
/// so the computation is the minimal even k admitting a sigma'-stable
/// squarefree apolar form, with the witness search run in the rational
/// eigenspaces of the coefficient involution and, failing that, over
/// Gaussian combinations.
LabelSet label_set(const BinaryForm& f, RealStructure structure, std::uint64_t seed = 0);

struct RealRankResult {
    int lo = 0;     // smallest k not exactly excluded
    int hi = 0;     // smallest k with a verified witness
    bool exact() const { return lo == hi; }
};

/// Smallest k with a totally real decomposition: the first degree at which
/// Ann(f)_k contains a squarefree form with all roots real. Exact when every
/// deciding system along the scan had dim <= 2 (or a witness was found);
/// IntervalUndecided semantics otherwise (lo < hi). Standard structure only.
RealRankResult real_rank(const BinaryForm& f);

/// The unique minimal-weight label: among the (equal-weight) labels of
/// label_set, the one with maximal totally real part b.
Label min_weight_label(const BinaryForm& f, RealStructure structure, std::uint64_t seed = 0);

/// h + sigma'*(h) with sigma'* the coefficient involution
/// c_j -> (-1)^j c_{d-j}; sigma'-real by construction. Even degree only;
/// ZeroFormError when h is anti-invariant.
BinaryForm make_sigma_prime_real(const BinaryForm& h);

} // namespace admrank

#endif
