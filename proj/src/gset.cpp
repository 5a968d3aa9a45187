#include "ug/gset.hpp"

#include <algorithm>

namespace ug {

void validate_gset(const GSet& x) {
    const auto& g = *x.group;
    if (static_cast<int>(x.act_.size()) != g.order * x.size)
        throw NotAGSet("action table size mismatch");
    for (int v : x.act_)
        if (v < 0 || v >= x.size) throw NotAGSet("action value out of range");
    for (int e = 0; e < x.size; ++e)
        if (x.act(0, e) != e)
            throw NotAGSet("identity does not fix element " + std::to_string(e));
    for (int a = 0; a < g.order; ++a)
        for (int b = 0; b < g.order; ++b)
            for (int e = 0; e < x.size; ++e)
                if (x.act(a, x.act(b, e)) != x.act(g.mul(a, b), e))
                    throw NotAGSet("action is not associative at (g=" + std::to_string(a) +
                                   ", g'=" + std::to_string(b) + ", x=" + std::to_string(e) + ")");
}

GSet gset_from_flat(GroupPtr group, int size, std::vector<int> act) {
    GSet x{std::move(group), size, std::move(act)};
    validate_gset(x);
    return x;
}

GSet gset_from_table(GroupPtr group, const std::vector<std::vector<int>>& act) {
    const int order = group->order;
    if (static_cast<int>(act.size()) != order) throw NotAGSet("action table must have |G| rows");
    const int size = act.empty() ? 0 : static_cast<int>(act[0].size());
    std::vector<int> flat;
    flat.reserve(static_cast<size_t>(order) * size);
    for (const auto& row : act) {
        if (static_cast<int>(row.size()) != size) throw NotAGSet("ragged action table");
        flat.insert(flat.end(), row.begin(), row.end());
    }
    return gset_from_flat(std::move(group), size, std::move(flat));
}

GSet empty_gset(GroupPtr group) {
    GSet x;
    x.group = std::move(group);
    x.size = 0;
    return x;
}

GSet point_gset(GroupPtr group) { return trivial_gset(std::move(group), 1); }

GSet trivial_gset(GroupPtr group, int n) {
    GSet x;
    x.size = n;
    x.act_.resize(static_cast<size_t>(group->order) * n);
    for (int g = 0; g < group->order; ++g)
        for (int e = 0; e < n; ++e) x.act_[g * n + e] = e;
    x.group = std::move(group);
    return x;
}

GSet regular_gset(GroupPtr group) {
    GSet x;
    x.size = group->order;
    x.act_ = group->mul_;
    x.group = std::move(group);
    return x;
}

GMap check_gmap(const std::vector<int>& values, const GSet& x, const GSet& y) {
    if (!same_group(x.group, y.group)) throw GroupMismatch("gmap between sets of different groups");
    if (static_cast<int>(values.size()) != x.size) throw ShapeMismatch("gmap value table size mismatch");
    for (int v : values)
        if (v < 0 || v >= y.size) throw ShapeMismatch("gmap value out of range");
    for (int g = 0; g < x.group->order; ++g)
        for (int e = 0; e < x.size; ++e)
            if (values[x.act(g, e)] != y.act(g, values[e]))
                throw NotEquivariant("map not equivariant at (g=" + std::to_string(g) +
                                     ", x=" + std::to_string(e) + ")");
    return GMap{x, y, values};
}

GMap identity_gmap(const GSet& x) {
    std::vector<int> v(x.size);
    for (int i = 0; i < x.size; ++i) v[i] = i;
    return GMap{x, x, std::move(v)};
}

GMap compose(const GMap& g, const GMap& f) {
    if (!(f.target == g.source)) throw ShapeMismatch("composition shape mismatch");
    std::vector<int> v(f.source.size);
    for (int i = 0; i < f.source.size; ++i) v[i] = g.values[f.values[i]];
    return GMap{f.source, g.target, std::move(v)};
}

bool is_bijective(const GMap& f) {
    if (f.source.size != f.target.size) return false;
    std::vector<bool> hit(f.target.size, false);
    for (int v : f.values) {
        if (hit[v]) return false;
        hit[v] = true;
    }
    return true;
}

GMap inverse(const GMap& f) {
    if (!is_bijective(f)) throw ShapeMismatch("inverse of a non-bijective gmap");
    std::vector<int> v(f.target.size);
    for (int i = 0; i < f.source.size; ++i) v[f.values[i]] = i;
    return GMap{f.target, f.source, std::move(v)};
}

Subgroup stabilizer(const GSet& x, int elem) {
    if (elem < 0 || elem >= x.size) throw InputError("stabilizer: element index out of range");
    std::vector<int> m;
    for (int g = 0; g < x.group->order; ++g)
        if (x.act(g, elem) == elem) m.push_back(g);
    return Subgroup{x.group, std::move(m)};
}

std::vector<std::vector<int>> orbits(const GSet& x) {
    std::vector<std::vector<int>> out;
    std::vector<bool> seen(x.size, false);
    for (int e = 0; e < x.size; ++e) {
        if (seen[e]) continue;
        std::vector<int> orb;
        for (int g = 0; g < x.group->order; ++g) {
            int y = x.act(g, e);
            if (!seen[y]) {
                seen[y] = true;
                orb.push_back(y);
            }
        }
        std::sort(orb.begin(), orb.end());
        out.push_back(std::move(orb));
    }
    return out;
}

std::vector<int> orbit_reps(const GSet& x) {
    std::vector<int> reps;
    for (const auto& orb : orbits(x)) reps.push_back(orb.front());
    return reps;
}

std::vector<int> orbit_index(const GSet& x) {
    std::vector<int> idx(x.size, -1);
    auto os = orbits(x);
    for (size_t i = 0; i < os.size(); ++i)
        for (int e : os[i]) idx[e] = static_cast<int>(i);
    return idx;
}

Coproduct coproduct(const GSet& x, const GSet& y) {
    if (!same_group(x.group, y.group)) throw GroupMismatch("coproduct of sets over different groups");
    const int order = x.group->order;
    GSet s;
    s.group = x.group;
    s.size = x.size + y.size;
    s.act_.resize(static_cast<size_t>(order) * s.size);
    for (int g = 0; g < order; ++g) {
        for (int e = 0; e < x.size; ++e) s.act_[g * s.size + e] = x.act(g, e);
        for (int e = 0; e < y.size; ++e) s.act_[g * s.size + x.size + e] = x.size + y.act(g, e);
    }
    std::vector<int> vl(x.size), vr(y.size);
    for (int e = 0; e < x.size; ++e) vl[e] = e;
    for (int e = 0; e < y.size; ++e) vr[e] = x.size + e;
    return Coproduct{s, GMap{x, s, std::move(vl)}, GMap{y, s, std::move(vr)}};
}

int Pullback::pair_index(int x, int y) const {
    auto it = std::lower_bound(pairs.begin(), pairs.end(), std::make_pair(x, y));
    if (it == pairs.end() || *it != std::make_pair(x, y)) return -1;
    return static_cast<int>(it - pairs.begin());
}

Pullback pullback(const GMap& f, const GMap& g) {
    if (!(f.target == g.target)) throw ObjectMismatch("pullback: maps have different targets");
    const GSet& x = f.source;
    const GSet& y = g.source;
    Pullback pb;
    for (int a = 0; a < x.size; ++a)
        for (int b = 0; b < y.size; ++b)
            if (f.values[a] == g.values[b]) pb.pairs.emplace_back(a, b);
    const int n = static_cast<int>(pb.pairs.size());
    const int order = x.group->order;
    pb.p.group = x.group;
    pb.p.size = n;
    pb.p.act_.resize(static_cast<size_t>(order) * n);
    for (int gg = 0; gg < order; ++gg)
        for (int e = 0; e < n; ++e) {
            auto [a, b] = pb.pairs[e];
            int idx = pb.pair_index(x.act(gg, a), y.act(gg, b));
            pb.p.act_[gg * n + e] = idx;
        }
    std::vector<int> vx(n), vy(n);
    for (int e = 0; e < n; ++e) {
        vx[e] = pb.pairs[e].first;
        vy[e] = pb.pairs[e].second;
    }
    pb.to_left = GMap{pb.p, x, std::move(vx)};
    pb.to_right = GMap{pb.p, y, std::move(vy)};
    return pb;
}

CosetSpace coset_space(const GroupPtr& g, const Subgroup& k) {
    if (!same_group(g, k.parent)) throw GroupMismatch("coset_space: subgroup of a different group");
    // Re-validate membership closure to honor the "K not a subgroup" error path.
    subgroup_from_members(g, k.members);
    std::vector<int> coset_of(g->order, -1);
    CosetSpace cs;
    for (int a = 0; a < g->order; ++a) {
        if (coset_of[a] >= 0) continue;
        std::vector<int> coset;
        for (int h : k.members) coset.push_back(g->mul(a, h));
        std::sort(coset.begin(), coset.end());
        int id = static_cast<int>(cs.cosets.size());
        for (int e : coset) coset_of[e] = id;
        cs.cosets.push_back(std::move(coset));
    }
    const int n = static_cast<int>(cs.cosets.size());
    cs.space.group = g;
    cs.space.size = n;
    cs.space.act_.resize(static_cast<size_t>(g->order) * n);
    for (int gg = 0; gg < g->order; ++gg)
        for (int c = 0; c < n; ++c)
            cs.space.act_[gg * n + c] = coset_of[g->mul(gg, cs.cosets[c].front())];
    return cs;
}

GSet transitive_from_subgroup(const GroupPtr& g, const Subgroup& k) {
    return coset_space(g, k).space;
}

namespace {

struct BijectionSearch {
    const GSet& x;
    const GSet& y;
    const std::function<bool(int, int)>& constraint;
    const std::function<bool(const std::vector<int>&)>& visit;
    std::vector<int> asn;
    std::vector<bool> used;

    bool assign_orbit(int e, int t, std::vector<int>& touched) {
        // Propagate g·e -> g·t across the whole orbit of e.
        for (int g = 0; g < x.group->order; ++g) {
            int xe = x.act(g, e);
            int yt = y.act(g, t);
            if (asn[xe] == yt) continue;
            if (asn[xe] != -1 || used[yt]) return false;
            if (constraint && !constraint(xe, yt)) return false;
            asn[xe] = yt;
            used[yt] = true;
            touched.push_back(xe);
        }
        return true;
    }

    void undo(const std::vector<int>& touched) {
        for (int e : touched) {
            used[asn[e]] = false;
            asn[e] = -1;
        }
    }

    bool run(int from) {
        int e = -1;
        for (int i = from; i < x.size; ++i)
            if (asn[i] == -1) {
                e = i;
                break;
            }
        if (e == -1) return visit(asn);
        for (int t = 0; t < y.size; ++t) {
            if (used[t]) continue;
            if (constraint && !constraint(e, t)) continue;
            std::vector<int> touched;
            if (assign_orbit(e, t, touched)) {
                if (run(e + 1)) return true;
            }
            undo(touched);
        }
        return false;
    }
};

} // namespace

bool for_each_equivariant_bijection(const GSet& x, const GSet& y,
                                    const std::function<bool(int, int)>& constraint,
                                    const std::function<bool(const std::vector<int>&)>& visit,
                                    const std::vector<int>* partial) {
    if (!same_group(x.group, y.group)) throw GroupMismatch("bijection search over different groups");
    if (x.size != y.size) return false;
    BijectionSearch s{x, y, constraint, visit, std::vector<int>(x.size, -1),
                      std::vector<bool>(y.size, false)};
    if (partial) {
        for (int e = 0; e < x.size; ++e) {
            int t = (*partial)[e];
            if (t == -1) continue;
            if (s.asn[e] == t) continue;
            if (s.asn[e] != -1 || s.used[t]) return false;
            if (constraint && !constraint(e, t)) return false;
            std::vector<int> touched;
            if (!s.assign_orbit(e, t, touched)) return false;
        }
    }
    return s.run(0);
}

std::optional<GMap> gset_isomorphism(const GSet& x, const GSet& y) {
    if (!same_group(x.group, y.group)) throw GroupMismatch("isomorphism search over different groups");
    if (x.size != y.size) return std::nullopt;
    std::optional<GMap> found;
    for_each_equivariant_bijection(
        x, y, nullptr,
        [&](const std::vector<int>& asn) {
            found = GMap{x, y, asn};
            return true;
        });
    return found;
}

namespace {

void extend_gmaps(const GSet& x, const GSet& y, const std::vector<int>& reps, size_t i,
                  std::vector<int>& values, std::vector<GMap>& out) {
    if (i == reps.size()) {
        out.push_back(GMap{x, y, values});
        return;
    }
    int r = reps[i];
    for (int t = 0; t < y.size; ++t) {
        // Well-defined extension over the orbit needs Stab(r) <= Stab(t).
        bool ok = true;
        for (int g = 0; g < x.group->order && ok; ++g)
            if (x.act(g, r) == r && y.act(g, t) != t) ok = false;
        if (!ok) continue;
        for (int g = 0; g < x.group->order; ++g) values[x.act(g, r)] = y.act(g, t);
        extend_gmaps(x, y, reps, i + 1, values, out);
    }
    for (int g = 0; g < x.group->order; ++g) values[x.act(g, r)] = -1;
}

} // namespace

std::vector<GMap> all_gmaps(const GSet& x, const GSet& y) {
    if (!same_group(x.group, y.group)) throw GroupMismatch("map enumeration over different groups");
    std::vector<GMap> out;
    if (x.size == 0) {
        out.push_back(GMap{x, y, {}});
        return out;
    }
    if (y.size == 0) return out;  // no map from nonempty to empty
    auto reps = orbit_reps(x);
    std::vector<int> values(x.size, -1);
    extend_gmaps(x, y, reps, 0, values, out);
    return out;
}

} // namespace ug
