#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "ug/gset.hpp"

namespace ug {

// One element of the dependent product: a base point y together with a
// section of p over the fiber f^{-1}(y), stored as the chosen A-element for
// each fiber point in ascending order.
struct Section {
    int base = 0;
    std::vector<int> assignment;

    bool operator<(const Section& o) const {
        return std::tie(base, assignment) < std::tie(o.base, o.assignment);
    }
    bool operator==(const Section& o) const {
        return base == o.base && assignment == o.assignment;
    }
};

// The canonical exponential diagram generated by f: X -> Y and p: A -> X.
//
//   X <-p- A <-lam- Z -rho-> Pi -pi-> Y      with Z = X ×_Y Pi
//
struct ExponentialDiagram {
    GMap f;                         // X -> Y
    GMap p;                         // A -> X
    GSet pi_set;                    // Pi_f(A)
    std::vector<Section> sections;  // element i of pi_set is sections[i]
    GMap pi;                        // Pi -> Y
    GSet z;                         // X ×_Y Pi
    GMap z_to_x;                    // Z -> X (pullback projection)
    GMap rho;                       // Z -> Pi (pullback projection)
    GMap lam;                       // Z -> A (evaluation)
    std::vector<std::vector<int>> fibers;  // f^{-1}(y) ascending, per y

    int section_index(const Section& s) const;  // -1 if absent
};

// Enumerates all sections over every y (lexicographic element order),
// computes the induced G-action and the evaluation pentagon.
// Throws SizeGuardExceeded when the section count would exceed max_sections.
ExponentialDiagram dependent_product(const GMap& f, const GMap& p,
                                     long long max_sections = 1000000);

struct PentagonWitness {
    GMap pi_iso;  // candidate Pi -> canonical Pi
    GMap z_iso;   // candidate Z -> canonical Z
};

// Decides whether the pentagon (f, p, pi, lam, rho) is an exponential
// diagram, i.e. isomorphic to the canonical one generated by its f and p.
// Shapes must align and the pentagon must commute (ShapeMismatch otherwise).
std::optional<PentagonWitness> is_exponential_diagram(const GMap& f, const GMap& p,
                                                      const GMap& pi, const GMap& lam,
                                                      const GMap& rho,
                                                      long long max_sections = 1000000);

} // namespace ug
