#include "ug/checks.hpp"

#include <algorithm>
#include <random>
#include <string>

#include "ug/exponential.hpp"

namespace ug {

namespace {

std::string obj_tag(int i) { return "object#" + std::to_string(i); }

std::string map_tag(const UniverseMap& m) {
    std::string s = "map(" + std::to_string(m.src) + "->" + std::to_string(m.tgt) + ")[";
    for (size_t i = 0; i < m.map.values.size(); ++i)
        s += (i ? "," : "") + std::to_string(m.map.values[i]);
    return s + "]";
}

std::vector<int> pick_indices(int n, int want, int full_threshold, std::mt19937& rng) {
    std::vector<int> out;
    if (n <= full_threshold) {
        out.resize(n);
        for (int i = 0; i < n; ++i) out[i] = i;
    } else {
        for (int i = 0; i < want; ++i) out.push_back(static_cast<int>(rng() % n));
    }
    return out;
}

template <typename T>
std::vector<T> cap_sample(std::vector<T> all, int cap, std::mt19937& rng) {
    if (static_cast<int>(all.size()) <= cap) return all;
    std::vector<T> out;
    out.reserve(cap);
    for (int i = 0; i < cap; ++i) out.push_back(all[rng() % all.size()]);
    return out;
}

} // namespace

Report check_axioms(const TambaraFunctor& t, const Universe& uni, const AxiomOptions& opts) {
    Report rep;
    rep.command = "check-axioms";
    std::mt19937 rng(opts.seed);
    const int nobj = static_cast<int>(uni.objects.size());

    // Ring axioms objectwise: full cubic enumeration for small rings, seeded
    // triples otherwise (units and inverses are always checked in full).
    {
        bool ok = true;
        std::string wit;
        for (int i = 0; i < nobj && ok; ++i) {
            const RingModel& m = t.ring(uni.objects[i]);
            const TabRing& r = m.ring;
            if (r.size <= opts.max_ring_full) {
                try {
                    validate_ring(r);
                } catch (const NotARing& e) {
                    ok = false;
                    wit = obj_tag(i) + ": " + e.what();
                }
                continue;
            }
            for (int a = 0; a < r.size && ok; ++a) {
                if (r.add(r.zero, a) != a || r.mul(r.one, a) != a ||
                    r.add(a, r.neg(a)) != r.zero) {
                    ok = false;
                    wit = obj_tag(i) + ": unit/inverse law fails at " + std::to_string(a);
                }
            }
            for (int k = 0; k < opts.sample_triples && ok; ++k) {
                const int a = static_cast<int>(rng() % r.size);
                const int b = static_cast<int>(rng() % r.size);
                const int c = static_cast<int>(rng() % r.size);
                if (r.add(a, b) != r.add(b, a) || r.mul(a, b) != r.mul(b, a) ||
                    r.add(r.add(a, b), c) != r.add(a, r.add(b, c)) ||
                    r.mul(r.mul(a, b), c) != r.mul(a, r.mul(b, c)) ||
                    r.mul(a, r.add(b, c)) != r.add(r.mul(a, b), r.mul(a, c))) {
                    ok = false;
                    wit = obj_tag(i) + ": ring law fails at sampled (" + std::to_string(a) + "," +
                          std::to_string(b) + "," + std::to_string(c) + ")";
                }
            }
        }
        rep.add("ring-axioms", ok, wit);
    }

    // Identity maps act as identities through all three structure maps.
    {
        bool ok = true;
        std::string wit;
        for (int i = 0; i < nobj && ok; ++i) {
            const GSet& x = uni.objects[i];
            const RingModel& m = t.ring(x);
            const GMap id = identity_gmap(x);
            for (int a :
                 pick_indices(m.ring.size, opts.elem_samples, opts.max_elem_full, rng)) {
                if (!t.eq(x, t.star(id, m.elems[a]), m.elems[a]) ||
                    !t.eq(x, t.plus(id, m.elems[a]), m.elems[a]) ||
                    !t.eq(x, t.dot(id, m.elems[a]), m.elems[a])) {
                    ok = false;
                    wit = obj_tag(i) + ": identity map not inert at element " + std::to_string(a);
                    break;
                }
            }
        }
        rep.add("identity-maps", ok, wit);
    }

    // Functoriality on composable pairs (capped, seeded).
    {
        std::vector<std::pair<int, int>> pairs;
        for (int i = 0; i < static_cast<int>(uni.maps.size()); ++i)
            for (int j = 0; j < static_cast<int>(uni.maps.size()); ++j)
                if (uni.maps[i].tgt == uni.maps[j].src) pairs.emplace_back(i, j);
        pairs = cap_sample(std::move(pairs), opts.max_pairs, rng);
        bool ok = true;
        std::string wit;
        for (const auto& [i, j] : pairs) {
            const GMap& f = uni.maps[i].map;  // X -> Y
            const GMap& g = uni.maps[j].map;  // Y -> Z
            const GMap gf = compose(g, f);
            const RingModel& mx = t.ring(f.source);
            const RingModel& mz = t.ring(g.target);
            for (int a :
                 pick_indices(mx.ring.size, opts.elem_samples, opts.max_elem_full, rng)) {
                if (!t.eq(g.target, t.plus(g, t.plus(f, mx.elems[a])), t.plus(gf, mx.elems[a])) ||
                    !t.eq(g.target, t.dot(g, t.dot(f, mx.elems[a])), t.dot(gf, mx.elems[a]))) {
                    ok = false;
                    wit = map_tag(uni.maps[i]) + " then " + map_tag(uni.maps[j]) +
                          ": covariant functoriality fails at element " + std::to_string(a);
                    break;
                }
            }
            for (int a :
                 pick_indices(mz.ring.size, opts.elem_samples, opts.max_elem_full, rng)) {
                if (!t.eq(f.source, t.star(f, t.star(g, mz.elems[a])), t.star(gf, mz.elems[a]))) {
                    ok = false;
                    wit = map_tag(uni.maps[i]) + " then " + map_tag(uni.maps[j]) +
                          ": star functoriality fails at element " + std::to_string(a);
                    break;
                }
            }
            if (!ok) break;
        }
        rep.add("functoriality", ok, wit);
    }

    // star is a ring homomorphism; plus is additive; dot is multiplicative.
    {
        bool ok = true;
        std::string wit;
        for (const UniverseMap& um : uni.maps) {
            const GMap& f = um.map;
            const RingModel& mx = t.ring(f.source);
            const RingModel& my = t.ring(f.target);
            if (!t.eq(f.source, t.star(f, t.one(f.target)), t.one(f.source)) ||
                !t.eq(f.source, t.star(f, t.zero(f.target)), t.zero(f.source)) ||
                !t.eq(f.target, t.plus(f, t.zero(f.source)), t.zero(f.target)) ||
                !t.eq(f.target, t.dot(f, t.one(f.source)), t.one(f.target))) {
                ok = false;
                wit = map_tag(um) + ": unit preservation fails";
                break;
            }
            const auto ys =
                pick_indices(my.ring.size, opts.elem_samples, opts.max_elem_full, rng);
            for (size_t u = 0; u < ys.size() && ok; ++u)
                for (size_t v = u; v < ys.size(); ++v) {
                    const Elem& a = my.elems[ys[u]];
                    const Elem& b = my.elems[ys[v]];
                    if (!t.eq(f.source, t.star(f, t.add(f.target, a, b)),
                              t.add(f.source, t.star(f, a), t.star(f, b))) ||
                        !t.eq(f.source, t.star(f, t.mul(f.target, a, b)),
                              t.mul(f.source, t.star(f, a), t.star(f, b)))) {
                        ok = false;
                        wit = map_tag(um) + ": star not a ring homomorphism at elements (" +
                              std::to_string(ys[u]) + "," + std::to_string(ys[v]) + ")";
                        break;
                    }
                }
            const auto xs =
                pick_indices(mx.ring.size, opts.elem_samples, opts.max_elem_full, rng);
            for (size_t u = 0; u < xs.size() && ok; ++u)
                for (size_t v = u; v < xs.size(); ++v) {
                    const Elem& a = mx.elems[xs[u]];
                    const Elem& b = mx.elems[xs[v]];
                    if (!t.eq(f.target, t.plus(f, t.add(f.source, a, b)),
                              t.add(f.target, t.plus(f, a), t.plus(f, b)))) {
                        ok = false;
                        wit = map_tag(um) + ": plus not additive at elements (" +
                              std::to_string(xs[u]) + "," + std::to_string(xs[v]) + ")";
                        break;
                    }
                    if (!t.eq(f.target, t.dot(f, t.mul(f.source, a, b)),
                              t.mul(f.target, t.dot(f, a), t.dot(f, b)))) {
                        ok = false;
                        wit = map_tag(um) + ": dot not multiplicative at elements (" +
                              std::to_string(xs[u]) + "," + std::to_string(xs[v]) + ")";
                        break;
                    }
                }
            if (!ok) break;
        }
        rep.add("structure-map-laws", ok, wit);
    }

    // Additivity: T(X ⊔ Y) -> T(X) × T(Y) through the injections is a ring
    // isomorphism, and T(∅) is the zero ring.
    {
        bool ok = true;
        std::string wit;
        for (int i = 0; i < nobj; ++i)
            if (uni.objects[i].size == 0 && t.ring(uni.objects[i]).ring.size != 1) {
                ok = false;
                wit = obj_tag(i) + ": T(empty) is not the zero ring";
            }
        for (int i = 0; i < nobj && ok; ++i)
            for (int j = i; j < nobj && ok; ++j) {
                if (uni.objects[i].size + uni.objects[j].size > uni.max_size) continue;
                const Coproduct cp = coproduct(uni.objects[i], uni.objects[j]);
                const RingModel& ms = t.ring(cp.sum);
                const RingModel& mi = t.ring(uni.objects[i]);
                const RingModel& mj = t.ring(uni.objects[j]);
                if (static_cast<long long>(mi.ring.size) * mj.ring.size != ms.ring.size) {
                    ok = false;
                    wit = obj_tag(i) + "⊔" + obj_tag(j) + ": |T(X⊔Y)| != |T(X)|·|T(Y)|";
                    break;
                }
                std::vector<std::pair<int, int>> seen;
                for (int a = 0; a < ms.ring.size; ++a) {
                    seen.emplace_back(t.elem_index(uni.objects[i], t.star(cp.in_left, ms.elems[a])),
                                      t.elem_index(uni.objects[j], t.star(cp.in_right, ms.elems[a])));
                }
                std::sort(seen.begin(), seen.end());
                if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) {
                    ok = false;
                    wit = obj_tag(i) + "⊔" + obj_tag(j) + ": restriction pair map not injective";
                }
            }
        rep.add("additivity", ok, wit);
    }

    // Base change along pullback squares (capped, seeded cospans).
    {
        std::vector<std::pair<int, int>> cospans;
        for (int i = 0; i < static_cast<int>(uni.maps.size()); ++i)
            for (int j = 0; j < static_cast<int>(uni.maps.size()); ++j)
                if (uni.maps[i].tgt == uni.maps[j].tgt) cospans.emplace_back(i, j);
        cospans = cap_sample(std::move(cospans), opts.max_pairs, rng);
        bool ok = true;
        std::string wit;
        for (const auto& [i, j] : cospans) {
            const GMap& f = uni.maps[i].map;  // X -> Z
            const GMap& g = uni.maps[j].map;  // Y -> Z
            const Pullback pb = pullback(f, g);
            const RingModel& mx = t.ring(f.source);
            for (int a :
                 pick_indices(mx.ring.size, opts.elem_samples, opts.max_elem_full, rng)) {
                const Elem pulled = t.star(pb.to_left, mx.elems[a]);
                if (!t.eq(g.source, t.star(g, t.plus(f, mx.elems[a])),
                          t.plus(pb.to_right, pulled)) ||
                    !t.eq(g.source, t.star(g, t.dot(f, mx.elems[a])),
                          t.dot(pb.to_right, pulled))) {
                    ok = false;
                    wit = map_tag(uni.maps[i]) + " vs " + map_tag(uni.maps[j]) +
                          ": base change fails at element " + std::to_string(a);
                    break;
                }
            }
            if (!ok) break;
        }
        rep.add("base-change", ok, wit);
    }

    // Distributive law f_.(p_+(a)) = π_+(ρ_.(λ*(a))) through the canonical
    // exponential diagram of each composable pair (p: A -> X, f: X -> Y).
    {
        std::vector<std::pair<int, int>> fp;
        for (int i = 0; i < static_cast<int>(uni.maps.size()); ++i)
            for (int j = 0; j < static_cast<int>(uni.maps.size()); ++j)
                if (uni.maps[i].tgt == uni.maps[j].src) fp.emplace_back(i, j);
        fp = cap_sample(std::move(fp), opts.max_pairs, rng);
        bool ok = true;
        std::string wit;
        for (const auto& [i, j] : fp) {
            const GMap& p = uni.maps[i].map;  // A -> X
            const GMap& f = uni.maps[j].map;  // X -> Y
            const ExponentialDiagram ed = dependent_product(f, p, opts.max_sections);
            const RingModel& ma = t.ring(p.source);
            for (int a :
                 pick_indices(ma.ring.size, opts.elem_samples, opts.max_elem_full, rng)) {
                const Elem lhs = t.dot(f, t.plus(p, ma.elems[a]));
                const Elem rhs = t.plus(ed.pi, t.dot(ed.rho, t.star(ed.lam, ma.elems[a])));
                if (!t.eq(f.target, lhs, rhs)) {
                    ok = false;
                    wit = "p=" + map_tag(uni.maps[i]) + ", f=" + map_tag(uni.maps[j]) +
                          ": distributive law fails at element " + std::to_string(a);
                    break;
                }
            }
            if (!ok) break;
        }
        rep.add("distributive-law", ok, wit);
    }

    return rep;
}

namespace {

std::vector<Elem> members_of(const TambaraFunctor& t, const TamIdeal& ideal, const GSet& x) {
    std::vector<Elem> out;
    for (const Elem& a : t.enumerate(x))
        if (ideal.contains(t, x, a)) out.push_back(a);
    return out;
}

std::vector<Elem> members_of(const TambaraFunctor& t, const MultSubfunctor& s, const GSet& x) {
    std::vector<Elem> out;
    for (const Elem& a : t.enumerate(x))
        if (s.contains(t, x, a)) out.push_back(a);
    return out;
}

} // namespace

Report check_ideal(const TambaraFunctor& t, const TamIdeal& ideal, const Universe& uni) {
    Report rep;
    rep.command = "check-ideal";
    bool additive = true, absorbing = true, star_c = true, plus_c = true, dot_c = true;
    std::string wa, wb, ws, wp, wd;
    std::vector<std::vector<Elem>> members(uni.objects.size());
    for (size_t i = 0; i < uni.objects.size(); ++i)
        members[i] = members_of(t, ideal, uni.objects[i]);

    for (size_t i = 0; i < uni.objects.size(); ++i) {
        const GSet& x = uni.objects[i];
        if (!ideal.contains(t, x, t.zero(x))) {
            additive = false;
            wa = obj_tag(static_cast<int>(i)) + ": 0 not in the ideal";
        }
        for (size_t a = 0; a < members[i].size() && additive; ++a) {
            if (!ideal.contains(t, x, t.neg(x, members[i][a]))) {
                additive = false;
                wa = obj_tag(static_cast<int>(i)) + ": not closed under negation";
            }
            for (size_t b = a; b < members[i].size() && additive; ++b)
                if (!ideal.contains(t, x, t.add(x, members[i][a], members[i][b]))) {
                    additive = false;
                    wa = obj_tag(static_cast<int>(i)) + ": not closed under addition";
                }
        }
        for (const Elem& m : members[i]) {
            if (!absorbing) break;
            for (const Elem& r : t.enumerate(x))
                if (!ideal.contains(t, x, t.mul(x, m, r))) {
                    absorbing = false;
                    wb = obj_tag(static_cast<int>(i)) + ": not absorbing under multiplication";
                    break;
                }
        }
    }

    for (const UniverseMap& um : uni.maps) {
        const GMap& f = um.map;
        for (const Elem& b : members[um.tgt])
            if (star_c && !ideal.contains(t, f.source, t.star(f, b))) {
                star_c = false;
                ws = map_tag(um) + ": star leaves the ideal";
            }
        const Elem dot0 = t.dot(f, t.zero(f.source));
        for (const Elem& a : members[um.src]) {
            if (plus_c && !ideal.contains(t, f.target, t.plus(f, a))) {
                plus_c = false;
                wp = map_tag(um) + ": plus leaves the ideal";
            }
            // Norm condition: f_.(a) - f_.(0) must land in I(Y).
            if (dot_c &&
                !ideal.contains(t, f.target, t.add(f.target, t.dot(f, a), t.neg(f.target, dot0)))) {
                dot_c = false;
                wd = map_tag(um) + ": dot condition f_.(I) ⊆ f_.(0)+I fails";
            }
        }
    }

    rep.add("additive-subgroup", additive, wa);
    rep.add("absorbing", absorbing, wb);
    rep.add("star-closed", star_c, ws);
    rep.add("plus-closed", plus_c, wp);
    rep.add("dot-condition", dot_c, wd);
    return rep;
}

void validate_ideal(const TambaraFunctor& t, const TamIdeal& ideal, const Universe& uni) {
    const Report rep = check_ideal(t, ideal, uni);
    for (const auto& c : rep.checks)
        if (!c.passed) throw NotAnIdeal(c.name + ": " + c.witness);
}

Report check_subfunctor(const TambaraFunctor& t, const MultSubfunctor& s, const Universe& uni) {
    Report rep;
    rep.command = "check-subfunctor";
    bool unital = true, closed = true, star_c = true, dot_c = true;
    std::string wu, wc, ws, wd;
    std::vector<std::vector<Elem>> members(uni.objects.size());
    for (size_t i = 0; i < uni.objects.size(); ++i)
        members[i] = members_of(t, s, uni.objects[i]);

    for (size_t i = 0; i < uni.objects.size(); ++i) {
        const GSet& x = uni.objects[i];
        if (!s.contains(t, x, t.one(x))) {
            unital = false;
            wu = obj_tag(static_cast<int>(i)) + ": 1 not in the subfunctor";
        }
        for (size_t a = 0; a < members[i].size() && closed; ++a)
            for (size_t b = a; b < members[i].size() && closed; ++b)
                if (!s.contains(t, x, t.mul(x, members[i][a], members[i][b]))) {
                    closed = false;
                    wc = obj_tag(static_cast<int>(i)) + ": not closed under multiplication";
                }
    }
    for (const UniverseMap& um : uni.maps) {
        const GMap& f = um.map;
        for (const Elem& b : members[um.tgt])
            if (star_c && !s.contains(t, f.source, t.star(f, b))) {
                star_c = false;
                ws = map_tag(um) + ": star leaves the subfunctor";
            }
        for (const Elem& a : members[um.src])
            if (dot_c && !s.contains(t, f.target, t.dot(f, a))) {
                dot_c = false;
                wd = map_tag(um) + ": dot leaves the subfunctor";
            }
    }
    rep.add("contains-one", unital, wu);
    rep.add("multiplicatively-closed", closed, wc);
    rep.add("star-closed", star_c, ws);
    rep.add("dot-closed", dot_c, wd);
    return rep;
}

void validate_subfunctor(const TambaraFunctor& t, const MultSubfunctor& s, const Universe& uni) {
    const Report rep = check_subfunctor(t, s, uni);
    for (const auto& c : rep.checks)
        if (!c.passed) throw NotASubfunctor(c.name + ": " + c.witness);
}

Report compare_functors(const TambaraFunctor& a, const TambaraFunctor& b, const Universe& uni) {
    Report rep;
    rep.command = "compare-functors";
    bool rings = true, elems = true, tables = true;
    std::string wr, we, wt;
    for (size_t i = 0; i < uni.objects.size(); ++i) {
        const RingModel& ma = a.ring(uni.objects[i]);
        const RingModel& mb = b.ring(uni.objects[i]);
        if (!(ma.ring == mb.ring)) {
            rings = false;
            wr = obj_tag(static_cast<int>(i)) + ": value rings differ";
        }
        if (ma.elems != mb.elems) {
            elems = false;
            we = obj_tag(static_cast<int>(i)) + ": element enumerations differ";
        }
    }
    rep.add("value-rings-equal", rings, wr);
    rep.add("element-enumerations-equal", elems, we);
    if (rings && elems) {
        for (const UniverseMap& um : uni.maps) {
            if (a.star_table(um.map) != b.star_table(um.map) ||
                a.plus_table(um.map) != b.plus_table(um.map) ||
                a.dot_table(um.map) != b.dot_table(um.map)) {
                tables = false;
                wt = map_tag(um) + ": structure-map tables differ";
                break;
            }
        }
    }
    rep.add("structure-tables-equal", rings && elems && tables,
            rings && elems ? wt : "skipped: value layers differ");
    return rep;
}

Report check_identity_transform(const FunctorPtr& t, const Universe& uni) {
    Report rep;
    rep.command = "identity-transform";
    const Biset id = identity_biset(t->group());
    auto tu = std::make_shared<TransformFunctor>(t, id);
    bool ok = true;
    std::string wit;

    // perm[i]: index in T(X) of the i-th element of (T∘U)(X), relabeled along
    // the canonical iso x |-> [e, x].
    std::vector<std::vector<int>> perms(uni.objects.size());
    for (size_t i = 0; i < uni.objects.size() && ok; ++i) {
        const GSet& x = uni.objects[i];
        const UComposite& comp = tu->composite(x);
        std::vector<int> iota(x.size);
        for (int e = 0; e < x.size; ++e) iota[e] = comp.pair_class(0, e);
        const GMap iota_map = check_gmap(iota, x, comp.hset);
        if (!is_bijective(iota_map)) {
            ok = false;
            wit = obj_tag(static_cast<int>(i)) + ": canonical relabeling is not a bijection";
            break;
        }
        const RingModel& mu = tu->ring(x);
        const RingModel& mt = t->ring(x);
        if (mu.ring.size != mt.ring.size) {
            ok = false;
            wit = obj_tag(static_cast<int>(i)) + ": value ring sizes differ";
            break;
        }
        std::vector<int>& perm = perms[i];
        perm.resize(mu.ring.size);
        std::vector<bool> hit(mu.ring.size, false);
        for (int e = 0; e < mu.ring.size; ++e) {
            perm[e] = t->elem_index(x, t->star(iota_map, mu.elems[e]));
            hit[perm[e]] = true;
        }
        if (std::find(hit.begin(), hit.end(), false) != hit.end()) {
            ok = false;
            wit = obj_tag(static_cast<int>(i)) + ": relabeling not bijective on elements";
            break;
        }
        for (int e = 0; e < mu.ring.size && ok; ++e) {
            if (perm[mu.ring.neg(e)] != mt.ring.neg(perm[e])) ok = false;
            for (int f2 = 0; f2 < mu.ring.size && ok; ++f2)
                if (perm[mu.ring.add(e, f2)] != mt.ring.add(perm[e], perm[f2]) ||
                    perm[mu.ring.mul(e, f2)] != mt.ring.mul(perm[e], perm[f2]))
                    ok = false;
        }
        if (ok &&
            (perm[mu.ring.zero] != mt.ring.zero || perm[mu.ring.one] != mt.ring.one))
            ok = false;
        if (!ok) wit = obj_tag(static_cast<int>(i)) + ": ring tables differ under relabeling";
    }
    rep.add("value-rings-identical", ok, wit);

    if (ok) {
        bool maps_ok = true;
        std::string wm;
        for (const UniverseMap& um : uni.maps) {
            int src_obj = um.src, tgt_obj = um.tgt;
            const auto su = tu->star_table(um.map);
            const auto st = t->star_table(um.map);
            const auto pu = tu->plus_table(um.map);
            const auto pt = t->plus_table(um.map);
            const auto du = tu->dot_table(um.map);
            const auto dt = t->dot_table(um.map);
            for (size_t e = 0; e < su.size(); ++e)
                if (perms[src_obj][su[e]] != st[perms[tgt_obj][e]]) maps_ok = false;
            for (size_t e = 0; e < pu.size(); ++e)
                if (perms[tgt_obj][pu[e]] != pt[perms[src_obj][e]] ||
                    perms[tgt_obj][du[e]] != dt[perms[src_obj][e]])
                    maps_ok = false;
            if (!maps_ok) {
                wm = map_tag(um) + ": structure tables differ under relabeling";
                break;
            }
        }
        rep.add("structure-tables-identical", maps_ok, wm);
    } else {
        rep.add("structure-tables-identical", false, "skipped: value rings already differ");
    }
    return rep;
}

Report check_cor27(const FunctorPtr& t, const IdealPtr& ideal, const Biset& u,
                   const Universe& uni_h, const Universe& uni_g) {
    Report rep;
    rep.command = "check-cor27";
    rep.merge(check_ideal(*t, *ideal, uni_h), "ideal");
    auto tu = transform(t, u);
    auto iu = transformed_ideal(ideal);
    rep.merge(check_ideal(*tu, *iu, uni_g), "transported-ideal");
    auto lhs = transform(quotient(t, ideal), u);
    auto rhs = quotient(tu, iu);
    rep.merge(compare_functors(*lhs, *rhs, uni_g), "quotient-commutes");
    return rep;
}

Report check_cor28(const FunctorPtr& t, const SubfunctorPtr& s, const Biset& u,
                   const Universe& uni_h, const Universe& uni_g) {
    Report rep;
    rep.command = "check-cor28";
    rep.merge(check_subfunctor(*t, *s, uni_h), "subfunctor");
    auto tu = transform(t, u);
    auto su = transformed_subfunctor(s);
    rep.merge(check_subfunctor(*tu, *su, uni_g), "transported-subfunctor");
    auto lhs = transform(localize(t, s), u);
    auto rhs = localize(tu, su);
    rep.merge(compare_functors(*lhs, *rhs, uni_g), "localization-commutes");
    return rep;
}

} // namespace ug
