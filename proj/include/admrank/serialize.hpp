#ifndef ADMRANK_SERIALIZE_HPP
#define ADMRANK_SERIALIZE_HPP

#include "admrank/labels.hpp"
#include "admrank/rank.hpp"
#include "admrank/regions.hpp"

#include <json.hpp>

#include <string>

namespace admrank {

/// JSON builders. All rationals are emitted as exact strings ("7/5"), forms
/// in the interchange format "d:c0,...,cd"; no floats anywhere.
nlohmann::json to_json(const Label& l);
nlohmann::json to_json(const LabelWitness& w);
nlohmann::json to_json(const LabelSet& ls);
nlohmann::json to_json(const SchemeLabel& sl);
nlohmann::json to_json(const RegionReport& rep);
nlohmann::json to_json(const BoundarySequence& seq);

/// The shared document for the rank/labels subcommands: degree, the five
/// ranks, labels with witnesses, exactness, structure.
nlohmann::json rank_document(const BinaryForm& f, const RankProfile& p, const LabelSet& ls);

std::string structure_name(RealStructure s);

/// Univariate polynomials share the textual convention of forms:
/// "k:c0,...,ck" lists coefficients from the leading one down to the
/// constant term (matching a form's x-descending order).
std::string format_upoly(const UPoly& p);
UPoly parse_upoly(const std::string& text);

/// One row per label-set key: key, count, frequency.
std::string region_report_csv(const RegionReport& rep);

} // namespace admrank

#endif
