#ifndef ADMRANK_SVG_HPP
#define ADMRANK_SVG_HPP

#include "admrank/forms.hpp"

#include <string>

namespace admrank {

/// SVG picture of the lambda-line partition for a pencil-case form (dim of
/// the deciding apolar system must be 2, else NotAPencilError): discriminant
/// roots as ticks, intervals colored by label, witnesses annotated. The
/// lambda axis is compactified by arctangent for display only; every label
/// shown is computed exactly.
std::string partition_svg(const BinaryForm& f);

} // namespace admrank

#endif
