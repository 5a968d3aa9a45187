#include "ug/cli.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "ug/burnside.hpp"
#include "ug/checks.hpp"
#include "ug/json_io.hpp"
#include "ug/tambara.hpp"

namespace ug {

namespace {

GroupPtr resolve_group(const std::string& spec) {
    if (spec.empty()) throw InputError("a --group is required here");
    if (is_builtin_group_name(spec)) return builtin_group(spec);
    return group_from_json(load_json_file(spec));
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    out.push_back(cur);
    return out;
}

// "identity" (with --group), "induction:sub:big", "restriction:sub:big" with
// built-in group names, or a path to a biset JSON file.
Biset resolve_biset(const std::string& spec, const std::string& group_spec) {
    if (spec == "identity") return identity_biset(resolve_group(group_spec));
    const auto parts = split(spec, ':');
    if (parts.size() == 3 && (parts[0] == "induction" || parts[0] == "restriction")) {
        const GroupPtr sub = resolve_group(parts[1]);
        const GroupPtr big = resolve_group(parts[2]);
        const auto emb = find_embedding(sub, big);
        if (!emb) throw InputError("no embedding of " + parts[1] + " into " + parts[2]);
        return parts[0] == "induction" ? induction_biset(sub, big, *emb)
                                       : restriction_biset(sub, big, *emb);
    }
    return biset_from_json(load_json_file(spec));
}

TabRing resolve_ring(const std::string& spec) {
    if (spec.rfind("zmod:", 0) == 0) return ring_from_spec(spec);
    const Json j = load_json_file(spec);
    if (!j.contains("ring")) throw InputError("ring file needs a \"ring\" key");
    const Json& r = j.at("ring");
    std::vector<std::vector<int>> add, mul;
    for (const auto& row : r.at("add")) add.push_back(row.get<std::vector<int>>());
    for (const auto& row : r.at("mul")) mul.push_back(row.get<std::vector<int>>());
    return ring_from_tables(add, mul, r.at("zero").get<int>(), r.at("one").get<int>());
}

std::vector<int> parse_value_list(const std::string& csv) {
    std::vector<int> out;
    for (const std::string& tok : split(csv, ',')) {
        try {
            out.push_back(std::stoi(tok));
        } catch (...) {
            throw InputError("bad value list: " + csv);
        }
    }
    return out;
}

// "zero", "full", "multiples:k" (principal ideal of k), "pointwise:a,b,c".
IdealPtr resolve_ideal(const std::string& spec, const TabRing& ring) {
    if (spec == "zero") return zero_ideal();
    if (spec == "full") return full_ideal();
    if (spec.rfind("multiples:", 0) == 0) {
        int k = 0;
        try {
            k = std::stoi(spec.substr(10));
        } catch (...) {
            throw InputError("bad ideal spec: " + spec);
        }
        if (k < 0 || k >= ring.size) throw InputError("ideal generator out of range");
        std::vector<int> subset;
        for (int a = 0; a < ring.size; ++a) subset.push_back(ring.mul(k, a));
        return pointwise_ideal(subset);
    }
    if (spec.rfind("pointwise:", 0) == 0)
        return pointwise_ideal(parse_value_list(spec.substr(10)));
    throw InputError("unknown ideal spec: " + spec);
}

// "ones", "full", "powers:k", "pointwise:a,b,c".
SubfunctorPtr resolve_subfunctor(const std::string& spec, const TabRing& ring) {
    if (spec == "ones") return ones_subfunctor();
    if (spec == "full") return full_mult_subfunctor();
    if (spec.rfind("powers:", 0) == 0) {
        int k = 0;
        try {
            k = std::stoi(spec.substr(7));
        } catch (...) {
            throw InputError("bad subfunctor spec: " + spec);
        }
        return powers_subfunctor(ring, k);
    }
    if (spec.rfind("pointwise:", 0) == 0)
        return pointwise_subfunctor(parse_value_list(spec.substr(10)));
    throw InputError("unknown subfunctor spec: " + spec);
}

struct Emit {
    std::string format = "json";
    bool timing = false;
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

    int report(std::ostream& out, const Report& rep) const {
        if (format == "text") {
            out << report_to_text(rep);
        } else {
            Json j = report_to_json(rep);
            if (timing) j["timing_ms"] = elapsed_ms();
            out << j.dump(2) << "\n";
        }
        return rep.passed() ? 0 : 1;
    }
    int data(std::ostream& out, Json j) const {
        if (timing) j["timing_ms"] = elapsed_ms();
        out << j.dump(2) << "\n";
        return 0;
    }
    long long elapsed_ms() const {
        return std::chrono::duration_cast<std::chrono::milliseconds>(
                   std::chrono::steady_clock::now() - start)
            .count();
    }
};

// The preservation sweep driver shared by verify-phi and the acceptance tests:
// runs check_preservation over every composable (p: A -> X, f: X -> Y) in the
// universe over the biset's right group and ANDs the named checks together.
Report preservation_sweep(const Biset& u, int max_size, bool verify, long long max_sections) {
    Report rep;
    rep.command = "verify-phi";
    const Universe uni = build_universe(u.ggroup, max_size);
    std::vector<std::string> names;
    std::map<std::string, CheckResult> agg;
    long long pairs = 0;
    bool fibers_ok = true;
    std::string fibers_wit;
    for (const UniverseMap& p : uni.maps)
        for (const UniverseMap& f : uni.maps) {
            if (p.tgt != f.src) continue;
            ++pairs;
            const std::string where =
                "p:(" + std::to_string(p.src) + "->" + std::to_string(p.tgt) + "), f:(" +
                std::to_string(f.src) + "->" + std::to_string(f.tgt) + ")";
            const Report one = check_preservation(u, f.map, p.map, verify, max_sections);
            for (const auto& c : one.checks) {
                auto it = agg.find(c.name);
                if (it == agg.end()) {
                    names.push_back(c.name);
                    agg.emplace(c.name,
                                CheckResult{c.name, c.passed,
                                            c.passed ? "" : where + ": " + c.witness});
                } else if (it->second.passed && !c.passed) {
                    it->second.passed = false;
                    it->second.witness = where + ": " + c.witness;
                }
            }
            // Fiber-count identity on the G-side diagram.
            const ExponentialDiagram ed = dependent_product(f.map, p.map, max_sections);
            for (int y = 0; y < ed.f.target.size && fibers_ok; ++y) {
                long long expect = 1;
                for (int x : ed.fibers[y]) {
                    long long cnt = 0;
                    for (int a = 0; a < ed.p.source.size; ++a)
                        if (ed.p(a) == x) ++cnt;
                    expect *= cnt;
                }
                long long got = 0;
                for (int s = 0; s < ed.pi_set.size; ++s)
                    if (ed.pi(s) == y) ++got;
                if (got != expect) {
                    fibers_ok = false;
                    fibers_wit = where + ": y=" + std::to_string(y);
                }
            }
        }
    for (const std::string& n : names) rep.checks.push_back(agg.at(n));
    rep.add("fiber-count-identity", fibers_ok, fibers_wit);
    rep.add("pairs-checked-nonempty", pairs > 0, "universe produced no composable pairs");
    return rep;
}

} // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Computational toolkit for biset transformations of Tambara functors"};
    app.require_subcommand(1);

    std::string format = "json", verify = "eager", group, biset, input, ring, ideal, subf;
    std::string first, second, expected, bispan_file, functor = "fp", reading = "right-orbit";
    int max_size = 3;
    long long max_sections = 1000000;
    unsigned seed = 0;
    bool timing = false;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));
        sub->add_option("--seed", seed);
        sub->add_flag("--timing", timing);
        sub->add_option("--max-sections", max_sections);
    };

    CLI::App* c_exp = app.add_subcommand("exp-diagram", "Canonical exponential diagram of (f,p)");
    c_exp->add_option("--input", input)->required();
    add_common(c_exp);

    CLI::App* c_apply = app.add_subcommand("biset-apply", "Compute U∘X");
    c_apply->add_option("--biset", biset)->required();
    c_apply->add_option("--group", group);
    c_apply->add_option("--input", input)->required();
    c_apply->add_option("--verify", verify)->check(CLI::IsMember({"eager", "fast"}));
    c_apply->add_option("--reading", reading)
        ->check(CLI::IsMember({"right-orbit", "inverse"}));
    add_common(c_apply);

    CLI::App* c_phi = app.add_subcommand("verify-phi", "Preservation of exponential diagrams under U∘-");
    c_phi->add_option("--biset", biset)->required();
    c_phi->add_option("--group", group);
    c_phi->add_option("--max-size", max_size);
    c_phi->add_option("--verify", verify)->check(CLI::IsMember({"eager", "fast"}));
    add_common(c_phi);

    CLI::App* c_comp = app.add_subcommand("compose", "Compose two bispans");
    c_comp->add_option("--first", first)->required();
    c_comp->add_option("--second", second)->required();
    c_comp->add_option("--check", expected);
    add_common(c_comp);

    CLI::App* c_eval = app.add_subcommand("eval", "Evaluate a bispan on a functor");
    c_eval->add_option("--bispan", bispan_file)->required();
    c_eval->add_option("--functor", functor)->check(CLI::IsMember({"fp"}));
    c_eval->add_option("--ring", ring)->required();
    add_common(c_eval);

    CLI::App* c_tam = app.add_subcommand("check-tambara", "Run the Tambara axiom suite");
    c_tam->add_option("--functor", functor)->check(CLI::IsMember({"fp", "burnside"}));
    c_tam->add_option("--group", group)->required();
    c_tam->add_option("--ring", ring);
    c_tam->add_option("--max-size", max_size);
    add_common(c_tam);

    CLI::App* c_tr = app.add_subcommand("transform", "Biset transformation T∘U");
    c_tr->add_option("--functor", functor)->check(CLI::IsMember({"fp"}));
    c_tr->add_option("--ring", ring)->required();
    c_tr->add_option("--biset", biset)->required();
    c_tr->add_option("--group", group);
    c_tr->add_option("--max-size", max_size);
    add_common(c_tr);

    CLI::App* c_quot = app.add_subcommand("quotient", "Quotient by an ideal");
    c_quot->add_option("--functor", functor)->check(CLI::IsMember({"fp"}));
    c_quot->add_option("--group", group)->required();
    c_quot->add_option("--ring", ring)->required();
    c_quot->add_option("--ideal", ideal)->required();
    c_quot->add_option("--max-size", max_size);
    add_common(c_quot);

    CLI::App* c_loc = app.add_subcommand("localize", "Localize at a subfunctor");
    c_loc->add_option("--functor", functor)->check(CLI::IsMember({"fp"}));
    c_loc->add_option("--group", group)->required();
    c_loc->add_option("--ring", ring)->required();
    c_loc->add_option("--subfunctor", subf)->required();
    c_loc->add_option("--max-size", max_size);
    add_common(c_loc);

    CLI::App* c_27 = app.add_subcommand("check-cor27", "Quotient commutes with transformation");
    c_27->add_option("--ring", ring)->required();
    c_27->add_option("--ideal", ideal)->required();
    c_27->add_option("--biset", biset)->required();
    c_27->add_option("--group", group);
    c_27->add_option("--max-size", max_size);
    add_common(c_27);

    CLI::App* c_28 = app.add_subcommand("check-cor28", "Localization commutes with transformation");
    c_28->add_option("--ring", ring)->required();
    c_28->add_option("--subfunctor", subf)->required();
    c_28->add_option("--biset", biset)->required();
    c_28->add_option("--group", group);
    c_28->add_option("--max-size", max_size);
    add_common(c_28);

    CLI::App* c_uni = app.add_subcommand("universe", "Iso-class representatives of small G-sets");
    c_uni->add_option("--group", group)->required();
    c_uni->add_option("--max-size", max_size);
    add_common(c_uni);

    try {
        std::reverse(args.begin(), args.end());
        app.parse(args);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    }

    Emit emit;
    emit.format = format;
    emit.timing = timing;
    const bool eager = verify == "eager";
    AxiomOptions opts;
    opts.seed = seed;
    opts.max_sections = max_sections;

    try {
        if (c_exp->parsed()) {
            const Json j = load_json_file(input);
            Document doc = document_from_json(j);
            if (!j.contains("f") || !j.contains("p"))
                throw InputError("exp-diagram input needs \"f\" and \"p\"");
            const GMap f = gmap_from_json(j.at("f"), doc.gsets);
            const GMap p = gmap_from_json(j.at("p"), doc.gsets);
            const ExponentialDiagram ed = dependent_product(f, p, max_sections);
            Json o{{"command", "exp-diagram"}};
            o.update(diagram_to_json(ed));
            return emit.data(out, o);
        }
        if (c_apply->parsed()) {
            const Biset u = resolve_biset(biset, group);
            const Json j = load_json_file(input);
            const GSet x = gset_from_json(j, u.ggroup);
            const UComposite uc = u_apply_object(
                u, x, eager,
                reading == "inverse" ? RelationReading::InverseReading
                                     : RelationReading::RightOrbit);
            Json o{{"command", "biset-apply"}};
            o.update(ucomposite_to_json(uc));
            return emit.data(out, o);
        }
        if (c_phi->parsed()) {
            const Biset u = resolve_biset(biset, group);
            return emit.report(out, preservation_sweep(u, max_size, eager, max_sections));
        }
        if (c_comp->parsed()) {
            const Bispan s = bispan_from_json(load_json_file(first));
            const Bispan t = bispan_from_json(load_json_file(second));
            const Bispan st = compose_bispans(s, t, max_sections);
            Json o{{"command", "compose"}, {"composite", bispan_to_json(st)}};
            if (!expected.empty()) {
                const Bispan want = bispan_from_json(load_json_file(expected));
                const auto witness = bispans_equivalent(st, want);
                o["equivalent"] = witness.has_value();
                if (witness)
                    o["witness"] = {{"alpha", witness->alpha.values},
                                    {"beta", witness->beta.values}};
                emit.data(out, o);
                return witness ? 0 : 1;
            }
            return emit.data(out, o);
        }
        if (c_eval->parsed()) {
            const Bispan s = bispan_from_json(load_json_file(bispan_file));
            const FixedPointFunctor t(s.x.group, resolve_ring(ring));
            Json o{{"command", "eval"},
                   {"table", eval_bispan(t, s)},
                   {"source_ring_size", t.ring(s.x).ring.size},
                   {"target_ring_size", t.ring(s.y).ring.size}};
            return emit.data(out, o);
        }
        if (c_tam->parsed()) {
            const GroupPtr g = resolve_group(group);
            const Universe uni = build_universe(g, max_size);
            if (functor == "burnside") {
                const BurnsideFunctor bt(g, max_sections);
                SemiAxiomOptions sopts;
                sopts.seed = seed;
                Report rep = check_semi_axioms(bt, uni, sopts);
                rep.command = "check-tambara";
                return emit.report(out, rep);
            }
            if (ring.empty()) throw InputError("--ring is required for the fixed-point functor");
            const auto t = fixed_point_functor(g, resolve_ring(ring));
            Report rep = check_axioms(*t, uni, opts);
            rep.command = "check-tambara";
            return emit.report(out, rep);
        }
        if (c_tr->parsed()) {
            const Biset u = resolve_biset(biset, group);
            const auto t = fixed_point_functor(u.hgroup, resolve_ring(ring));
            const auto tu = transform(t, u);
            const Universe uni = build_universe(u.ggroup, max_size);
            Report rep = check_axioms(*tu, uni, opts);
            rep.command = "transform";
            if (biset == "identity") rep.merge(check_identity_transform(t, uni), "identity");
            return emit.report(out, rep);
        }
        if (c_quot->parsed()) {
            const GroupPtr g = resolve_group(group);
            const TabRing r = resolve_ring(ring);
            const auto t = fixed_point_functor(g, r);
            const IdealPtr i = resolve_ideal(ideal, r);
            const Universe uni = build_universe(g, max_size);
            Report rep;
            rep.command = "quotient";
            rep.merge(check_ideal(*t, *i, uni), "ideal");
            rep.merge(check_axioms(*quotient(t, i), uni, opts), "quotient");
            return emit.report(out, rep);
        }
        if (c_loc->parsed()) {
            const GroupPtr g = resolve_group(group);
            const TabRing r = resolve_ring(ring);
            const auto t = fixed_point_functor(g, r);
            const SubfunctorPtr s = resolve_subfunctor(subf, r);
            const Universe uni = build_universe(g, max_size);
            Report rep;
            rep.command = "localize";
            rep.merge(check_subfunctor(*t, *s, uni), "subfunctor");
            if (rep.passed())
                rep.merge(check_axioms(*localize(t, s), uni, opts), "localized");
            else
                rep.add("localized/skipped", false, "subfunctor checks failed");
            return emit.report(out, rep);
        }
        if (c_27->parsed()) {
            const Biset u = resolve_biset(biset, group);
            const TabRing r = resolve_ring(ring);
            const auto t = fixed_point_functor(u.hgroup, r);
            const IdealPtr i = resolve_ideal(ideal, r);
            Report rep = check_cor27(t, i, u, build_universe(u.hgroup, max_size),
                                     build_universe(u.ggroup, max_size));
            return emit.report(out, rep);
        }
        if (c_28->parsed()) {
            const Biset u = resolve_biset(biset, group);
            const TabRing r = resolve_ring(ring);
            const auto t = fixed_point_functor(u.hgroup, r);
            const SubfunctorPtr s = resolve_subfunctor(subf, r);
            Report rep = check_cor28(t, s, u, build_universe(u.hgroup, max_size),
                                     build_universe(u.ggroup, max_size));
            return emit.report(out, rep);
        }
        if (c_uni->parsed()) {
            const GroupPtr g = resolve_group(group);
            const Universe uni = build_universe(g, max_size);
            Json transitive = Json::array();
            for (const GSet& t : uni.transitive) transitive.push_back(gset_to_json(t).at("gset"));
            Json objects = Json::array();
            for (size_t i = 0; i < uni.objects.size(); ++i)
                objects.push_back({{"size", uni.objects[i].size},
                                   {"pieces", uni.compositions[i]},
                                   {"act", gset_to_json(uni.objects[i]).at("gset").at("act")}});
            return emit.data(out, Json{{"command", "universe"},
                                       {"count", uni.objects.size()},
                                       {"transitive", transitive},
                                       {"objects", objects}});
        }
        err << "usage error: no subcommand\n";
        return 2;
    } catch (const InputError& e) {
        err << "input error: " << e.what() << "\n";
        return 2;
    } catch (const AlgebraError& e) {
        err << "input error: " << e.what() << "\n";
        return 2;
    }
}

} // namespace ug
