#pragma once

#include "ug/report.hpp"
#include "ug/tambara.hpp"
#include "ug/universe.hpp"

namespace ug {

struct AxiomOptions {
    unsigned seed = 0;
    int max_ring_full = 40;     // full cubic ring-axiom check up to this size
    int sample_triples = 80;    // sampled associativity/distributivity triples
    int max_pairs = 200;        // cap on composable map pairs / cospans / (f,p) pairs
    int elem_samples = 16;      // sampled elements per checked identity
    int max_elem_full = 40;     // check all elements when the ring is at most this big
    long long max_sections = 1000000;
};

// Verifies the Tambara-functor axioms of T over all objects and maps of the
// universe: ring axioms, functoriality of star/plus/dot, star being a ring
// homomorphism, additivity of plus, multiplicativity of dot, additivity on
// coproducts, base change (Mackey condition), and the distributive law via
// canonical exponential diagrams. Large search spaces are sampled with the
// seeded generator; everything else is exhaustive.
Report check_axioms(const TambaraFunctor& t, const Universe& uni, const AxiomOptions& opts = {});

// Objectwise ideal conditions: additive subgroup, absorbing, and
// closed under f*, f_+, and f_. up to f_.(0) for every universe map.
Report check_ideal(const TambaraFunctor& t, const TamIdeal& ideal, const Universe& uni);
void validate_ideal(const TambaraFunctor& t, const TamIdeal& ideal, const Universe& uni);

// Multiplicative subfunctor conditions: contains 1, closed under
// multiplication, f*, and f_..
Report check_subfunctor(const TambaraFunctor& t, const MultSubfunctor& s, const Universe& uni);
void validate_subfunctor(const TambaraFunctor& t, const MultSubfunctor& s, const Universe& uni);

// Table-level comparison of two functors over the same universe: value rings,
// element enumerations, and all three structure-map tables must coincide.
Report compare_functors(const TambaraFunctor& a, const TambaraFunctor& b, const Universe& uni);

// The identity-biset transform agrees with T itself under the canonical
// relabeling x |-> [e, x].
Report check_identity_transform(const FunctorPtr& t, const Universe& uni);

// I∘U is an ideal of T∘U and (T/I)∘U = (T∘U)/(I∘U), tablewise.
// uni_h is a universe over the left group of U, uni_g over the right group.
Report check_cor27(const FunctorPtr& t, const IdealPtr& ideal, const Biset& u,
                   const Universe& uni_h, const Universe& uni_g);

// S∘U is a multiplicative subfunctor of T∘U and localization
// commutes with the biset transformation, tablewise.
Report check_cor28(const FunctorPtr& t, const SubfunctorPtr& s, const Biset& u,
                   const Universe& uni_h, const Universe& uni_g);

} // namespace ug
