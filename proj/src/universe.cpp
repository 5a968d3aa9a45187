#include "ug/universe.hpp"

#include <algorithm>
#include <functional>

namespace ug {

namespace {

GSet multi_coproduct(const GroupPtr& g, const std::vector<GSet>& pieces) {
    GSet out = empty_gset(g);
    for (const GSet& p : pieces) out = coproduct(out, p).sum;
    return out;
}

} // namespace

Universe build_universe(const GroupPtr& g, int max_size) {
    Universe u;
    u.group = g;
    u.max_size = max_size;
    for (const Subgroup& k : subgroup_conjugacy_reps(g)) {
        GSet t = transitive_from_subgroup(g, k);
        if (t.size <= max_size) u.transitive.push_back(std::move(t));
    }
    // Transitive pieces sorted by size (largest subgroup gives the smallest
    // orbit); ties keep the subgroup enumeration order.
    std::stable_sort(u.transitive.begin(), u.transitive.end(),
                     [](const GSet& a, const GSet& b) { return a.size < b.size; });

    // Multisets of pieces with nondecreasing piece index and total size bound;
    // includes the empty multiset (the empty G-set).
    std::vector<int> current;
    auto emit = [&] {
        std::vector<GSet> pieces;
        for (int i : current) pieces.push_back(u.transitive[i]);
        u.objects.push_back(multi_coproduct(g, pieces));
        u.compositions.push_back(current);
    };
    std::function<void(int, int)> rec = [&](int from, int budget) {
        emit();
        for (int i = from; i < static_cast<int>(u.transitive.size()); ++i) {
            if (u.transitive[i].size > budget) continue;
            current.push_back(i);
            rec(i, budget - u.transitive[i].size);
            current.pop_back();
        }
    };
    // emit() inside rec fires once per multiset, including the empty one.
    rec(0, max_size);

    std::vector<int> order(u.objects.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        if (u.objects[a].size != u.objects[b].size) return u.objects[a].size < u.objects[b].size;
        return u.compositions[a] < u.compositions[b];
    });
    std::vector<GSet> objs;
    std::vector<std::vector<int>> comps;
    for (int i : order) {
        objs.push_back(std::move(u.objects[i]));
        comps.push_back(std::move(u.compositions[i]));
    }
    u.objects = std::move(objs);
    u.compositions = std::move(comps);

    for (int s = 0; s < static_cast<int>(u.objects.size()); ++s)
        for (int t = 0; t < static_cast<int>(u.objects.size()); ++t)
            for (GMap& m : all_gmaps(u.objects[s], u.objects[t]))
                u.maps.push_back({s, t, std::move(m)});
    return u;
}

} // namespace ug
