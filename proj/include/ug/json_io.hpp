#pragma once

#include <map>
#include <string>

#include <json.hpp>

#include "ug/biset.hpp"
#include "ug/bispan.hpp"
#include "ug/exponential.hpp"
#include "ug/gset.hpp"
#include "ug/report.hpp"
#include "ug/universe.hpp"

namespace ug {

// Ordered JSON keeps insertion order, which keeps CLI output byte-stable.
using Json = nlohmann::ordered_json;

Json load_json_file(const std::string& path);

// {"group": {"mul": [[...]]}} or {"group": {"perm_gens": [[...]], "degree": n}}.
GroupPtr group_from_json(const Json& j);
Json group_to_json(const GroupPtr& g);

// {"gset": {"act": [[...]]}}.
GSet gset_from_json(const Json& j, const GroupPtr& g);
Json gset_to_json(const GSet& x);

// {"gmap": {"values": [...], "source": name, "target": name}}; names refer to
// the document's gset dictionary.
GMap gmap_from_json(const Json& j, const std::map<std::string, GSet>& gsets);
Json gmap_to_json(const GMap& f, const std::string& source, const std::string& target);

// A document bundling one group with named gsets: {"group":…, "gsets": {…}}.
struct Document {
    GroupPtr group;
    std::map<std::string, GSet> gsets;
};
Document document_from_json(const Json& j);

// {"hgroup":…, "ggroup":…, "biset": {"lact": [[...]], "ract": [[...]]}}.
Biset biset_from_json(const Json& j);
Json biset_to_json(const Biset& u);

// {"group":…, "gsets":…, "bispan": {"w":…, "v":…, "u":…}}.
Bispan bispan_from_json(const Json& j);
Json bispan_to_json(const Bispan& s);

Json diagram_to_json(const ExponentialDiagram& ed);
Json ucomposite_to_json(const UComposite& uc);

// {"command":…, "passed":…, "checks": […], "witnesses": […]}; checks are
// sorted by name so merged parallel runs stay canonical.
Json report_to_json(const Report& rep);
std::string report_to_text(const Report& rep);

} // namespace ug
