#pragma once

#include <string>
#include <vector>

#include "ug/exponential.hpp"
#include "ug/gset.hpp"
#include "ug/report.hpp"

namespace ug {

// A finite H-G-biset: left H-action and right G-action with (hu)g = h(ug).
struct Biset {
    GroupPtr hgroup;
    GroupPtr ggroup;
    int size = 0;
    std::vector<int> lact_;  // |H| * size
    std::vector<int> ract_;  // size * |G|

    int lact(int h, int u) const { return lact_[h * size + u]; }
    int ract(int u, int g) const { return ract_[u * static_cast<int>(ggroup->order) + g]; }
};

// Validates both action axioms and the compatibility law; throws
// IncompatibleActions with a witness (h, u, g).
Biset validate_biset(GroupPtr hgroup, GroupPtr ggroup,
                     const std::vector<std::vector<int>>& lact,
                     const std::vector<std::vector<int>>& ract);

Biset identity_biset(const GroupPtr& g);
// U = big as a big-sub biset (left translation, right translation through the
// embedding): composition with U induces G-sets -> H-sets along sub <= big.
Biset induction_biset(const GroupPtr& sub, const GroupPtr& big, const std::vector<int>& embedding);
// U = big as a sub-big biset: composition restricts big-sets to sub-sets.
Biset restriction_biset(const GroupPtr& sub, const GroupPtr& big, const std::vector<int>& embedding);

// How the admissible-pair equivalence relation is read.
// RightOrbit is the adopted reading (u,x) ~ (ug, g^-1 x); InverseReading is the
// alternative (u,x) ~ (ug, gx), kept to document the convention question.
enum class RelationReading { RightOrbit, InverseReading };

// The H-set U∘X: admissible pairs (u,x) with ᵤG <= G_x, modulo the right
// G-orbit relation, with H acting by h[u,x] = [hu,x].
struct UComposite {
    Biset biset;
    GSet source;                           // X over G
    GSet hset;                             // U∘X over H
    std::vector<int> class_of;             // u*|X|+x -> class, -1 if inadmissible
    std::vector<std::pair<int, int>> reps; // class -> lexicographically least pair

    int pair_class(int u, int x) const { return class_of[u * source.size + x]; }
};

// verify = eager well-definedness assertions (H-action independence of
// representatives); throws WellDefinednessFailure on violation.
UComposite u_apply_object(const Biset& u, const GSet& x, bool verify = true,
                          RelationReading reading = RelationReading::RightOrbit);

GMap u_apply_map(const GMap& f, const UComposite& ux, const UComposite& uy, bool verify = true);

// Everything needed to compare the two exponential diagrams for one biset
// and one (f, p) pair.
struct PreservationData {
    ExponentialDiagram ed;   // canonical diagram over G
    UComposite ux, uy, ua, upi, uz;
    GMap uf, up, upi_map, ulam, urho;  // the transported pentagon over H
    ExponentialDiagram hed;  // canonical diagram over H generated by (uf, up)
    GMap phi;                // U∘Pi_f(A) -> Pi_{U∘f}(U∘A)
    GMap psi;                // inverse direction
};

PreservationData build_preservation(const Biset& u, const GMap& f, const GMap& p,
                                    bool verify = true, long long max_sections = 1000000);

GMap phi_map(const Biset& u, const GMap& f, const GMap& p, bool verify = true);
GMap psi_map(const Biset& u, const GMap& f, const GMap& p, bool verify = true);

// Report: (a) the transported pentagon is an exponential diagram, (b) Φ/Ψ are
// mutually inverse H-maps, (c) coproducts and the pullback square of the
// diagram are preserved.
Report check_preservation(const Biset& u, const GMap& f, const GMap& p, bool verify = true,
                          long long max_sections = 1000000);

} // namespace ug
