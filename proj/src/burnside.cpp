#include "ug/burnside.hpp"

#include <algorithm>
#include <random>
#include <string>

#include "ug/exponential.hpp"

namespace ug {

namespace {

// Least (point, sorted members) representative in the orbit of (x, K).
std::pair<int, std::vector<int>> canonical_pair(const GSet& xs, int point,
                                                const std::vector<int>& members) {
    const GroupPtr& g = xs.group;
    std::pair<int, std::vector<int>> best{-1, {}};
    for (int h = 0; h < static_cast<int>(g->order); ++h) {
        std::vector<int> conj(members.size());
        for (size_t i = 0; i < members.size(); ++i)
            conj[i] = g->mul(g->mul(h, members[i]), g->inv(h));
        std::sort(conj.begin(), conj.end());
        std::pair<int, std::vector<int>> cand{xs.act(h, point), std::move(conj)};
        if (best.first < 0 || cand < best) best = std::move(cand);
    }
    return best;
}

std::vector<int> basis_key(const GSet& x) {
    std::vector<int> key;
    key.push_back(x.size);
    key.push_back(static_cast<int>(x.group->order));
    key.insert(key.end(), x.act_.begin(), x.act_.end());
    return key;
}

} // namespace

int BurnsideBasis::index_of(int point, const std::vector<int>& k_members) const {
    const auto canon = canonical_pair(x, point, k_members);
    const auto it = std::lower_bound(classes.begin(), classes.end(), canon);
    if (it == classes.end() || *it != canon)
        throw AlgebraError("pair class not in the Burnside basis");
    return static_cast<int>(it - classes.begin());
}

BurnsideFunctor::BurnsideFunctor(GroupPtr g, long long max_sections)
    : group_(std::move(g)), max_sections_(max_sections) {}

const BurnsideBasis& BurnsideFunctor::basis(const GSet& x) const {
    if (!same_group(x.group, group_)) throw GroupMismatch("G-set over a different group");
    auto key = basis_key(x);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;

    BurnsideBasis b;
    b.x = x;
    const auto subs = all_subgroups(group_);
    for (int point = 0; point < x.size; ++point) {
        const Subgroup stab = stabilizer(x, point);
        for (const Subgroup& k : subs) {
            bool inside = true;
            for (int m : k.members)
                if (!stab.contains(m)) {
                    inside = false;
                    break;
                }
            if (inside) b.classes.push_back(canonical_pair(x, point, k.members));
        }
    }
    std::sort(b.classes.begin(), b.classes.end());
    b.classes.erase(std::unique(b.classes.begin(), b.classes.end()), b.classes.end());
    return cache_.emplace(std::move(key), std::move(b)).first->second;
}

GMap BurnsideFunctor::realize(const GSet& x, const Val& a) const {
    const BurnsideBasis& b = basis(x);
    if (a.size() != b.classes.size()) throw ShapeMismatch("value length does not match basis");
    GSet total = empty_gset(group_);
    std::vector<int> values;
    for (size_t c = 0; c < a.size(); ++c) {
        if (a[c] < 0) throw InputError("Burnside multiplicities must be nonnegative");
        const auto& [point, members] = b.classes[c];
        const Subgroup k = subgroup_from_members(group_, members);
        const CosetSpace cs = coset_space(group_, k);
        std::vector<int> piece_vals(cs.space.size);
        for (int e = 0; e < cs.space.size; ++e)
            piece_vals[e] = x.act(cs.cosets[e].front(), point);
        for (long long copy = 0; copy < a[c]; ++copy) {
            const Coproduct cp = coproduct(total, cs.space);
            std::vector<int> next(cp.sum.size);
            for (int e = 0; e < total.size; ++e) next[cp.in_left(e)] = values[e];
            for (int e = 0; e < cs.space.size; ++e) next[cp.in_right(e)] = piece_vals[e];
            total = cp.sum;
            values = std::move(next);
        }
    }
    return check_gmap(values, total, x);
}

BurnsideFunctor::Val BurnsideFunctor::decompose(const GMap& p) const {
    const BurnsideBasis& b = basis(p.target);
    Val out(b.classes.size(), 0);
    for (int rep : orbit_reps(p.source))
        ++out[b.index_of(p(rep), stabilizer(p.source, rep).members)];
    return out;
}

BurnsideFunctor::Val BurnsideFunctor::star(const GMap& q, const Val& a) const {
    const GMap p = realize(q.target, a);
    const Pullback pb = pullback(p, q);
    return decompose(pb.to_right);
}

BurnsideFunctor::Val BurnsideFunctor::plus(const GMap& q, const Val& a) const {
    return decompose(compose(q, realize(q.source, a)));
}

BurnsideFunctor::Val BurnsideFunctor::dot(const GMap& q, const Val& a) const {
    const GMap p = realize(q.source, a);
    return decompose(dependent_product(q, p, max_sections_).pi);
}

BurnsideFunctor::Val BurnsideFunctor::add(const GSet& x, const Val& a, const Val& b) const {
    (void)basis(x);
    Val out(a.size());
    for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
    return out;
}

BurnsideFunctor::Val BurnsideFunctor::mul(const GSet& x, const Val& a, const Val& b) const {
    const GMap pa = realize(x, a);
    const GMap pb = realize(x, b);
    const Pullback pr = pullback(pa, pb);
    return decompose(compose(pa, pr.to_left));
}

BurnsideFunctor::Val BurnsideFunctor::zero(const GSet& x) const {
    return Val(basis(x).classes.size(), 0);
}

BurnsideFunctor::Val BurnsideFunctor::one(const GSet& x) const {
    return decompose(identity_gmap(x));
}

Report check_semi_axioms(const BurnsideFunctor& bt, const Universe& uni,
                         const SemiAxiomOptions& opts) {
    Report rep;
    rep.command = "check-semi-axioms";
    std::mt19937 rng(opts.seed);
    auto rand_val = [&](const GSet& x) {
        BurnsideFunctor::Val v(bt.basis(x).classes.size());
        for (auto& e : v) e = static_cast<long long>(rng() % (opts.max_entry + 1));
        return v;
    };

    // Commutative-semiring laws on sampled triples, objectwise.
    {
        bool ok = true;
        std::string wit;
        for (size_t i = 0; i < uni.objects.size() && ok; ++i) {
            const GSet& x = uni.objects[i];
            for (int k = 0; k < opts.samples && ok; ++k) {
                const auto a = rand_val(x), b = rand_val(x), c = rand_val(x);
                if (bt.add(x, a, b) != bt.add(x, b, a) || bt.mul(x, a, b) != bt.mul(x, b, a) ||
                    bt.add(x, bt.add(x, a, b), c) != bt.add(x, a, bt.add(x, b, c)) ||
                    bt.mul(x, bt.mul(x, a, b), c) != bt.mul(x, a, bt.mul(x, b, c)) ||
                    bt.mul(x, a, bt.add(x, b, c)) !=
                        bt.add(x, bt.mul(x, a, b), bt.mul(x, a, c)) ||
                    bt.add(x, a, bt.zero(x)) != a || bt.mul(x, a, bt.one(x)) != a ||
                    bt.mul(x, a, bt.zero(x)) != bt.zero(x)) {
                    ok = false;
                    wit = "object#" + std::to_string(i) + ": semiring law fails on sampled values";
                }
            }
        }
        rep.add("semiring-laws", ok, wit);
    }

    // realize/decompose round trip.
    {
        bool ok = true;
        std::string wit;
        for (size_t i = 0; i < uni.objects.size() && ok; ++i) {
            const GSet& x = uni.objects[i];
            for (int k = 0; k < opts.samples && ok; ++k) {
                const auto a = rand_val(x);
                if (bt.decompose(bt.realize(x, a)) != a) {
                    ok = false;
                    wit = "object#" + std::to_string(i) + ": realize/decompose round trip fails";
                }
            }
        }
        rep.add("realize-decompose", ok, wit);
    }

    // Functoriality and the homomorphism laws of the three structure maps.
    {
        std::vector<std::pair<int, int>> pairs;
        for (int i = 0; i < static_cast<int>(uni.maps.size()); ++i)
            for (int j = 0; j < static_cast<int>(uni.maps.size()); ++j)
                if (uni.maps[i].tgt == uni.maps[j].src) pairs.emplace_back(i, j);
        if (static_cast<int>(pairs.size()) > opts.max_pairs) {
            std::vector<std::pair<int, int>> keep;
            for (int i = 0; i < opts.max_pairs; ++i) keep.push_back(pairs[rng() % pairs.size()]);
            pairs = std::move(keep);
        }
        bool ok = true;
        std::string wit;
        for (const auto& [i, j] : pairs) {
            const GMap& f = uni.maps[i].map;
            const GMap& g = uni.maps[j].map;
            const GMap gf = compose(g, f);
            const auto a = rand_val(f.source);
            const auto c = rand_val(g.target);
            // Iterated norms can overflow the section guard; those samples are
            // skipped rather than failed.
            try {
                if (bt.plus(g, bt.plus(f, a)) != bt.plus(gf, a) ||
                    bt.dot(g, bt.dot(f, a)) != bt.dot(gf, a) ||
                    bt.star(f, bt.star(g, c)) != bt.star(gf, c)) {
                    ok = false;
                    wit = "maps " + std::to_string(i) + "," + std::to_string(j) +
                          ": functoriality fails";
                    break;
                }
            } catch (const SizeGuardExceeded&) {
                continue;
            }
            const auto b = rand_val(f.source);
            const auto d = rand_val(f.target);
            const auto e = rand_val(f.target);
            try {
            if (bt.plus(f, bt.add(f.source, a, b)) !=
                    bt.add(f.target, bt.plus(f, a), bt.plus(f, b)) ||
                bt.dot(f, bt.mul(f.source, a, b)) !=
                    bt.mul(f.target, bt.dot(f, a), bt.dot(f, b)) ||
                bt.star(f, bt.mul(f.target, d, e)) !=
                    bt.mul(f.source, bt.star(f, d), bt.star(f, e)) ||
                bt.star(f, bt.add(f.target, d, e)) !=
                    bt.add(f.source, bt.star(f, d), bt.star(f, e))) {
                ok = false;
                wit = "map " + std::to_string(i) + ": structure-map law fails";
                break;
            }
            } catch (const SizeGuardExceeded&) {
                continue;
            }
        }
        rep.add("structure-map-laws", ok, wit);
    }

    // Base change along sampled cospans.
    {
        std::vector<std::pair<int, int>> cospans;
        for (int i = 0; i < static_cast<int>(uni.maps.size()); ++i)
            for (int j = 0; j < static_cast<int>(uni.maps.size()); ++j)
                if (uni.maps[i].tgt == uni.maps[j].tgt) cospans.emplace_back(i, j);
        if (static_cast<int>(cospans.size()) > opts.max_pairs) {
            std::vector<std::pair<int, int>> keep;
            for (int i = 0; i < opts.max_pairs; ++i)
                keep.push_back(cospans[rng() % cospans.size()]);
            cospans = std::move(keep);
        }
        bool ok = true;
        std::string wit;
        for (const auto& [i, j] : cospans) {
            const GMap& f = uni.maps[i].map;
            const GMap& g = uni.maps[j].map;
            const Pullback pb = pullback(f, g);
            const auto a = rand_val(f.source);
            try {
                if (bt.star(g, bt.plus(f, a)) !=
                        bt.plus(pb.to_right, bt.star(pb.to_left, a)) ||
                    bt.star(g, bt.dot(f, a)) !=
                        bt.dot(pb.to_right, bt.star(pb.to_left, a))) {
                    ok = false;
                    wit = "cospan " + std::to_string(i) + "," + std::to_string(j) +
                          ": base change fails";
                    break;
                }
            } catch (const SizeGuardExceeded&) {
                continue;
            }
        }
        rep.add("base-change", ok, wit);
    }

    // Distributive law through canonical exponential diagrams.
    {
        std::vector<std::pair<int, int>> fp;
        for (int i = 0; i < static_cast<int>(uni.maps.size()); ++i)
            for (int j = 0; j < static_cast<int>(uni.maps.size()); ++j)
                if (uni.maps[i].tgt == uni.maps[j].src) fp.emplace_back(i, j);
        if (static_cast<int>(fp.size()) > opts.max_pairs) {
            std::vector<std::pair<int, int>> keep;
            for (int i = 0; i < opts.max_pairs; ++i) keep.push_back(fp[rng() % fp.size()]);
            fp = std::move(keep);
        }
        bool ok = true;
        std::string wit;
        for (const auto& [i, j] : fp) {
            const GMap& p = uni.maps[i].map;  // A -> X
            const GMap& f = uni.maps[j].map;  // X -> Y
            try {
                const ExponentialDiagram ed = dependent_product(f, p);
                const auto a = rand_val(p.source);
                if (bt.dot(f, bt.plus(p, a)) !=
                    bt.plus(ed.pi, bt.dot(ed.rho, bt.star(ed.lam, a)))) {
                    ok = false;
                    wit = "pair " + std::to_string(i) + "," + std::to_string(j) +
                          ": distributive law fails";
                    break;
                }
            } catch (const SizeGuardExceeded&) {
                continue;
            }
        }
        rep.add("distributive-law", ok, wit);
    }

    return rep;
}

} // namespace ug
