#pragma once

#include <vector>

#include "json.hpp"
#include "otbook/contact_presentation.hpp"
#include "otbook/framed_link.hpp"
#include "otbook/homotopy_census.hpp"
#include "otbook/lens.hpp"
#include "otbook/mcg_words.hpp"
#include "otbook/veering.hpp"

// JSON schemas. Rationals are always strings ("p/q" or "p"), never floats;
// objects use sorted keys so dump(parse(x)) == x for anything emitted here.
namespace otbook::io {

using Json = nlohmann::json;

// [["a", 2], ["b", 1], ...]
Json to_json(const mcg::TwistWord& w);
mcg::TwistWord word_from_json(const Json& j);

// {"components": [{"id", "tb", "rot", "coeff"}], "linking": [[id, id, n], ...]}
Json to_json(const contact::ContactSurgeryDiagram& d);
contact::ContactSurgeryDiagram contact_from_json(const Json& j);

// {"vertices": [{"id", "framing", "is_unknot"}], "linking": [[id, id, n], ...],
//  "move_log": [...] (optional)}
Json to_json(const FramedLinkDiagram& d, bool with_log = false);
FramedLinkDiagram diagram_from_json(const Json& j);

Json to_json(const H1Order& h);

// {"move": "blow_up", "args": {...}}
Json to_json(const MoveSpec& m);
MoveSpec move_from_json(const Json& j);
Json to_json(const MoveRecord& r);
Json script_to_json(const std::vector<MoveSpec>& script);
std::vector<MoveSpec> script_from_json(const Json& j);

Json to_json(const lens::LensSpace& l);
Json to_json(const IntMatrix& m);
Json to_json(const census::PM1Presentation& p);
Json to_json(const census::D3Data& d);
Json to_json(const census::TightDescriptor& t);
Json to_json(const census::OvertwistedReport& r);

Json to_json(const veering::CertNode& n);
veering::CertNode cert_node_from_json(const Json& j);
Json to_json(const veering::Certificate& c);
veering::Certificate certificate_from_json(const Json& j);
Json to_json(const veering::CheckResult& r);
Json to_json(const veering::DestabilizationReport& r);

}  // namespace otbook::io
