#pragma once

#include <string>

#include "json.hpp"

#include "gnq/fusion_ring.hpp"
#include "gnq/premetric.hpp"
#include "gnq/premodular.hpp"

namespace gnq {

using ordered_json = nlohmann::ordered_json;

// scalar formats: Rational <-> "p/q"; QuadraticValue <-> {"a":"p/q","b":"p/q","D":n}
ordered_json quadratic_to_json(const QuadraticValue& v);
QuadraticValue quadratic_from_json(const ordered_json& j);

// ring schema: {"name": str, "rank": int, "labels": [str], "dual": [int],
// "N": [[[int]]]} with N[i][j][k]; deterministic key order for byte-stable
// round trips.
ordered_json ring_to_json(const FusionRing& ring);
FusionRing ring_from_json(const ordered_json& j);

// Load a ring from a file path.  Structural problems raise ParseError with
// line/field context; axiom failures raise AxiomError citing the first
// violation.
FusionRing parse_ring_file(const std::string& path);
// Catalog name or path to a ring file.
FusionRing resolve_ring(const std::string& name_or_path);
void write_ring_file(const FusionRing& ring, const std::string& path);

// pre-metric schema: {"group": [n1,...], "q": {"(a1,...,ak)": "p/q", ...}}
ordered_json premetric_to_json(const PreMetricGroup& pm);
PreMetricGroup premetric_from_json(const ordered_json& j);
PreMetricGroup parse_premetric_file(const std::string& path);

// subgroup as a list of element tuples: [[a1,...,ak], ...]
std::vector<GroupElem> subgroup_from_json(const ordered_json& j, size_t arity);
// "a1,...,ak;b1,...,bk" command-line form
std::vector<GroupElem> subgroup_from_string(const std::string& s, size_t arity);

// datum schema: {"ring": "<name-or-path>", "dims": [scalar...], "twists": ["p/q"...]}
PremodularDatum parse_datum_file(const std::string& path);
ordered_json datum_to_json(const PremodularDatum& datum);

}  // namespace gnq
