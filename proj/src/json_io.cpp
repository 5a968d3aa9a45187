#include "ug/json_io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace ug {

namespace {

std::vector<std::vector<int>> table_from(const Json& j, const std::string& what) {
    if (!j.is_array()) throw InputError(what + " must be an array of arrays");
    std::vector<std::vector<int>> out;
    for (const auto& row : j) {
        if (!row.is_array()) throw InputError(what + " must be an array of arrays");
        std::vector<int> r;
        for (const auto& v : row) {
            if (!v.is_number_integer()) throw InputError(what + " entries must be integers");
            r.push_back(v.get<int>());
        }
        out.push_back(std::move(r));
    }
    return out;
}

std::vector<int> ints_from(const Json& j, const std::string& what) {
    if (!j.is_array()) throw InputError(what + " must be an array of integers");
    std::vector<int> out;
    for (const auto& v : j) {
        if (!v.is_number_integer()) throw InputError(what + " entries must be integers");
        out.push_back(v.get<int>());
    }
    return out;
}

Json table_to(const std::vector<int>& flat, int rows, int cols) {
    Json out = Json::array();
    for (int r = 0; r < rows; ++r) {
        Json row = Json::array();
        for (int c = 0; c < cols; ++c) row.push_back(flat[r * cols + c]);
        out.push_back(std::move(row));
    }
    return out;
}

} // namespace

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path);
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw InputError("malformed JSON in " + path + ": " + e.what());
    }
}

GroupPtr group_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("group"))
        throw InputError("expected an object with a \"group\" key");
    const Json& g = j.at("group");
    if (g.contains("mul")) return group_from_table(table_from(g.at("mul"), "group.mul"));
    if (g.contains("perm_gens")) {
        if (!g.contains("degree") || !g.at("degree").is_number_integer())
            throw InputError("permutation group needs an integer \"degree\"");
        return group_from_permutations(table_from(g.at("perm_gens"), "group.perm_gens"),
                                       g.at("degree").get<int>());
    }
    throw InputError("group must have \"mul\" or \"perm_gens\"+\"degree\"");
}

Json group_to_json(const GroupPtr& g) {
    return {{"group", {{"mul", table_to(g->mul_, static_cast<int>(g->order),
                                        static_cast<int>(g->order))}}}};
}

GSet gset_from_json(const Json& j, const GroupPtr& g) {
    if (!j.is_object() || !j.contains("gset"))
        throw InputError("expected an object with a \"gset\" key");
    return gset_from_table(g, table_from(j.at("gset").at("act"), "gset.act"));
}

Json gset_to_json(const GSet& x) {
    return {{"gset", {{"act", table_to(x.act_, static_cast<int>(x.group->order), x.size)}}}};
}

GMap gmap_from_json(const Json& j, const std::map<std::string, GSet>& gsets) {
    if (!j.is_object() || !j.contains("gmap"))
        throw InputError("expected an object with a \"gmap\" key");
    const Json& m = j.at("gmap");
    const std::string src = m.at("source").get<std::string>();
    const std::string tgt = m.at("target").get<std::string>();
    const auto si = gsets.find(src);
    const auto ti = gsets.find(tgt);
    if (si == gsets.end()) throw InputError("gmap source \"" + src + "\" not among the gsets");
    if (ti == gsets.end()) throw InputError("gmap target \"" + tgt + "\" not among the gsets");
    return check_gmap(ints_from(m.at("values"), "gmap.values"), si->second, ti->second);
}

Json gmap_to_json(const GMap& f, const std::string& source, const std::string& target) {
    return {{"gmap", {{"values", f.values}, {"source", source}, {"target", target}}}};
}

Document document_from_json(const Json& j) {
    Document doc;
    doc.group = group_from_json(j);
    if (j.contains("gsets")) {
        if (!j.at("gsets").is_object()) throw InputError("\"gsets\" must be an object");
        for (const auto& [name, gj] : j.at("gsets").items())
            doc.gsets.emplace(name, gset_from_table(doc.group, table_from(gj.at("act"),
                                                                          "gsets." + name)));
    }
    return doc;
}

Biset biset_from_json(const Json& j) {
    if (!j.contains("hgroup") || !j.contains("ggroup") || !j.contains("biset"))
        throw InputError("biset file needs \"hgroup\", \"ggroup\" and \"biset\"");
    const GroupPtr h = group_from_json(Json{{"group", j.at("hgroup").at("group")}});
    const GroupPtr g = group_from_json(Json{{"group", j.at("ggroup").at("group")}});
    return validate_biset(h, g, table_from(j.at("biset").at("lact"), "biset.lact"),
                          table_from(j.at("biset").at("ract"), "biset.ract"));
}

Json biset_to_json(const Biset& u) {
    Json out;
    out["hgroup"] = {{"group", group_to_json(u.hgroup).at("group")}};
    out["ggroup"] = {{"group", group_to_json(u.ggroup).at("group")}};
    out["biset"] = {{"lact", table_to(u.lact_, static_cast<int>(u.hgroup->order), u.size)},
                    {"ract", table_to(u.ract_, u.size, static_cast<int>(u.ggroup->order))}};
    return out;
}

Bispan bispan_from_json(const Json& j) {
    Document doc = document_from_json(j);
    if (!j.contains("bispan")) throw InputError("bispan file needs a \"bispan\" key");
    const Json& b = j.at("bispan");
    auto leg = [&](const char* name) {
        return gmap_from_json(Json{{"gmap", b.at(name).at("gmap")}}, doc.gsets);
    };
    return bispan_from_maps(leg("w"), leg("v"), leg("u"));
}

Json bispan_to_json(const Bispan& s) {
    Json out{{"group", group_to_json(s.x.group).at("group")},
               {"gsets",
                Json{{"X", gset_to_json(s.x).at("gset")},
                     {"Y", gset_to_json(s.y).at("gset")},
                     {"A", gset_to_json(s.a).at("gset")},
                     {"B", gset_to_json(s.b).at("gset")}}},
               {"bispan",
                Json{{"w", gmap_to_json(s.w, "A", "X")},
                     {"v", gmap_to_json(s.v, "A", "B")},
                     {"u", gmap_to_json(s.u, "B", "Y")}}}};
    return out;
}

Json diagram_to_json(const ExponentialDiagram& ed) {
    Json sections = Json::array();
    for (const Section& s : ed.sections)
        sections.push_back({{"y", s.base}, {"assignment", s.assignment}});
    return {{"pi_set", gset_to_json(ed.pi_set).at("gset")},
            {"sections", sections},
            {"pi", ed.pi.values},
            {"z", gset_to_json(ed.z).at("gset")},
            {"z_to_x", ed.z_to_x.values},
            {"rho", ed.rho.values},
            {"lam", ed.lam.values},
            {"fibers", ed.fibers}};
}

Json ucomposite_to_json(const UComposite& uc) {
    Json classes = Json::array();
    const int nclasses = uc.hset.size;
    std::vector<Json> members(nclasses);
    for (int c = 0; c < nclasses; ++c) members[c] = Json::array();
    for (int u = 0; u < uc.biset.size; ++u)
        for (int x = 0; x < uc.source.size; ++x) {
            const int c = uc.pair_class(u, x);
            if (c >= 0) members[c].push_back({u, x});
        }
    for (int c = 0; c < nclasses; ++c)
        classes.push_back({{"rep", {uc.reps[c].first, uc.reps[c].second}},
                           {"members", members[c]}});
    return {{"classes", classes},
            {"hact", table_to(uc.hset.act_, static_cast<int>(uc.hset.group->order),
                              uc.hset.size)}};
}

Json report_to_json(const Report& rep) {
    std::vector<CheckResult> checks = rep.checks;
    std::stable_sort(checks.begin(), checks.end(),
                     [](const CheckResult& a, const CheckResult& b) { return a.name < b.name; });
    Json jchecks = Json::array();
    Json witnesses = Json::array();
    bool passed = true;
    for (const auto& c : checks) {
        Json jc = {{"name", c.name}, {"passed", c.passed}};
        if (!c.passed) {
            jc["witness"] = c.witness;
            witnesses.push_back({{"check", c.name}, {"witness", c.witness}});
            passed = false;
        }
        jchecks.push_back(std::move(jc));
    }
    return {{"command", rep.command},
            {"passed", passed},
            {"checks", jchecks},
            {"witnesses", witnesses}};
}

std::string report_to_text(const Report& rep) {
    std::vector<CheckResult> checks = rep.checks;
    std::stable_sort(checks.begin(), checks.end(),
                     [](const CheckResult& a, const CheckResult& b) { return a.name < b.name; });
    std::ostringstream out;
    out << "# " << rep.command << "\n";
    for (const auto& c : checks) {
        out << (c.passed ? "[PASS] " : "[FAIL] ") << c.name;
        if (!c.passed) out << ": " << c.witness;
        out << "\n";
    }
    out << (rep.passed() ? "PASSED" : "FAILED") << "\n";
    return out.str();
}

} // namespace ug
