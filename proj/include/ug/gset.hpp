#pragma once

#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "ug/group.hpp"

namespace ug {

// A finite left G-set as an action table. The empty G-set (size 0) is legal.
struct GSet {
    GroupPtr group;
    int size = 0;
    std::vector<int> act_;  // |G| * size, act_[g*size + x] = g·x

    int act(int g, int x) const { return act_[g * size + x]; }
    bool operator==(const GSet& o) const {
        return size == o.size && same_group(group, o.group) && act_ == o.act_;
    }
};

// Validates the two action axioms; throws NotAGSet with a witness.
GSet gset_from_table(GroupPtr group, const std::vector<std::vector<int>>& act);
GSet gset_from_flat(GroupPtr group, int size, std::vector<int> act);
void validate_gset(const GSet& x);

GSet empty_gset(GroupPtr group);
GSet point_gset(GroupPtr group);
GSet trivial_gset(GroupPtr group, int n);  // n fixed points
GSet regular_gset(GroupPtr group);

// An equivariant map between two G-sets.
struct GMap {
    GSet source;
    GSet target;
    std::vector<int> values;

    int operator()(int x) const { return values[x]; }
};

// Validates equivariance; throws NotEquivariant with a witness (g, x).
GMap check_gmap(const std::vector<int>& values, const GSet& x, const GSet& y);
GMap identity_gmap(const GSet& x);
GMap compose(const GMap& g, const GMap& f);  // g after f
bool is_bijective(const GMap& f);
GMap inverse(const GMap& f);

Subgroup stabilizer(const GSet& x, int elem);
std::vector<std::vector<int>> orbits(const GSet& x);
std::vector<int> orbit_reps(const GSet& x);
std::vector<int> orbit_index(const GSet& x);  // element -> orbit number

struct Coproduct {
    GSet sum;
    GMap in_left;
    GMap in_right;
};
Coproduct coproduct(const GSet& x, const GSet& y);

struct Pullback {
    GSet p;                                 // pairs (x,y) with f(x)=g(y), lex order
    GMap to_left;                           // P -> X
    GMap to_right;                          // P -> Y
    std::vector<std::pair<int, int>> pairs; // element -> (x,y)
    int pair_index(int x, int y) const;     // -1 if absent
};
Pullback pullback(const GMap& f, const GMap& g);

// Coset space G/K with left translation; elements ordered by least coset member.
struct CosetSpace {
    GSet space;
    std::vector<std::vector<int>> cosets;  // element -> sorted coset members
};
CosetSpace coset_space(const GroupPtr& g, const Subgroup& k);
GSet transitive_from_subgroup(const GroupPtr& g, const Subgroup& k);

// Exhaustive backtracking over equivariant bijections X -> Y.
// `constraint(x, y)` restricts candidate images; `partial` may pre-assign
// elements (-1 for unassigned). `visit` gets each complete assignment and
// returns true to stop the search.
bool for_each_equivariant_bijection(const GSet& x, const GSet& y,
                                    const std::function<bool(int, int)>& constraint,
                                    const std::function<bool(const std::vector<int>&)>& visit,
                                    const std::vector<int>* partial = nullptr);

std::optional<GMap> gset_isomorphism(const GSet& x, const GSet& y);

// All equivariant maps X -> Y in deterministic (lexicographic) order.
std::vector<GMap> all_gmaps(const GSet& x, const GSet& y);

} // namespace ug
