#pragma once

#include <string>

#include <json.hpp>

#include "hz/classify.hpp"
#include "hz/coloring.hpp"
#include "hz/fans.hpp"
#include "hz/graph.hpp"

namespace hz {

using nlohmann::json;

/// {"k": int, "uncolored": [u,v] | null, "edges": [[u,v,color], ...]}.
/// Only colorings with at most one uncolored edge serialize; edges sorted.
json coloring_to_json(const PartialColoring& c);

/// Rebuilds over g, validating properness and the schema. Throws
/// std::invalid_argument on any mismatch.
PartialColoring coloring_from_json(const SimpleGraph& g, const json& j);

json degree_class_view_to_json(const DegreeClassView& v);
json class_label_to_json(const ClassLabel& label);

json multifan_to_json(const Multifan& f);
json typical_multifan_to_json(const TypicalMultifan& f);
json pseudo_multifan_to_json(const TypicalPseudoMultifan& s);
json rotation_to_json(const Rotation& r);
json lollipop_to_json(const TypicalMultifan& f, const Lollipop& l);

/// DOT export of a chain, edges labeled with their colors.
std::string chain_to_dot(const PartialColoring& c, const Chain& chain);

/// DOT export of the fan star: center plus spokes, edge labels = colors,
/// spoke labels annotated with their missing colors.
std::string fan_to_dot(const TypicalMultifan& f);

/// DOT export of a colored graph.
std::string coloring_to_dot(const PartialColoring& c);

}  // namespace hz
