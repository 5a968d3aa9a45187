#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "ug/biset.hpp"
#include "ug/gset.hpp"
#include "ug/tambara.hpp"

namespace ug {

// A bispan X <-w- A -v-> B -u-> Y; morphisms of the bispan category are
// equivalence classes of these.
struct Bispan {
    GSet x, y;  // source and target objects
    GSet a, b;
    GMap w;  // A -> X
    GMap v;  // A -> B
    GMap u;  // B -> Y
};

// Validates shapes and equivariance of all three legs.
Bispan bispan_from_maps(const GMap& w, const GMap& v, const GMap& u);

Bispan identity_bispan(const GSet& x);

// The three generators: transfer along u, norm along v, restriction along w
// (for w: Y -> X the restriction is a morphism X -> Y).
Bispan gen_T(const GMap& u);
Bispan gen_N(const GMap& v);
Bispan gen_R(const GMap& w);

// Witness for equivalence: isos alpha: A -> A', beta: B -> B' commuting with
// all three legs.
struct BispanEquivalence {
    GMap alpha;
    GMap beta;
};
std::optional<BispanEquivalence> bispans_equivalent(const Bispan& s, const Bispan& t);

// Composition t ∘ s (s: X -> Y first, then t: Y -> Z), built through a
// pullback tower and one canonical exponential diagram.
Bispan compose_bispans(const Bispan& s, const Bispan& t, long long max_sections = 1000000);

// The product of X and Y in the bispan category is the disjoint union; these
// are the two projection morphisms X⊔Y -> X and X⊔Y -> Y.
std::pair<Bispan, Bispan> product_projections(const GSet& x, const GSet& y);

// Legwise composition with an H-G-biset U: every object and every leg of a
// bispan over G is pushed through U∘-, giving a bispan over H.
Bispan apply_biset(const Biset& u, const Bispan& s);

// The map T(X) -> T(Y) realized by the bispan: u_+ ∘ v_. ∘ w*, as an index
// table over the materialized value rings.
std::vector<int> eval_bispan(const TambaraFunctor& t, const Bispan& s);

} // namespace ug
