#pragma once

#include <vector>

#include "ug/gset.hpp"

namespace ug {

// One representative per isomorphism class of G-sets of size <= max_size,
// together with every equivariant map between representatives. Objects are
// coproducts of transitive pieces G/K (K running over conjugacy-class
// representatives of subgroups), listed in a deterministic order.
struct UniverseMap {
    int src = 0;  // object indices
    int tgt = 0;
    GMap map;
};

struct Universe {
    GroupPtr group;
    int max_size = 0;
    std::vector<GSet> objects;                    // sorted by (size, piece list)
    std::vector<std::vector<int>> compositions;   // object -> transitive piece indices
    std::vector<GSet> transitive;                 // the available transitive pieces
    std::vector<UniverseMap> maps;                // grouped by (src, tgt), then lex
};

Universe build_universe(const GroupPtr& g, int max_size);

} // namespace ug
