#pragma once

#include <map>
#include <utility>
#include <vector>

#include "ug/gset.hpp"
#include "ug/report.hpp"
#include "ug/universe.hpp"

namespace ug {

// Basis of the Burnside semiring of objects over X: orbits of pairs (x, K)
// with K <= Stab(x), under g·(x, K) = (gx, gKg⁻¹). A basis class stands for
// the iso class of the transitive object G/K -> Gx.
struct BurnsideBasis {
    GSet x;
    // Canonical representatives: least (point, sorted subgroup members) in the
    // pair orbit, listed in increasing order.
    std::vector<std::pair<int, std::vector<int>>> classes;

    int index_of(int point, const std::vector<int>& k_members) const;
};

// The Burnside construction X |-> span-classes of finite objects over X, a
// semi-Tambara functor: values are ℕ-linear combinations of basis classes and
// there is no subtraction. All operations go through concrete realizations.
class BurnsideFunctor {
public:
    using Val = std::vector<long long>;

    explicit BurnsideFunctor(GroupPtr g, long long max_sections = 1000000);
    const GroupPtr& group() const { return group_; }

    const BurnsideBasis& basis(const GSet& x) const;

    // Concrete object over x with the given multiplicities, and its class
    // vector; realize/decompose are mutually inverse on iso classes.
    GMap realize(const GSet& x, const Val& a) const;
    Val decompose(const GMap& p) const;

    Val star(const GMap& q, const Val& a) const;  // pull back along q
    Val plus(const GMap& q, const Val& a) const;  // postcompose with q
    Val dot(const GMap& q, const Val& a) const;   // dependent product along q

    Val add(const GSet& x, const Val& a, const Val& b) const;
    Val mul(const GSet& x, const Val& a, const Val& b) const;
    Val zero(const GSet& x) const;
    Val one(const GSet& x) const;

private:
    GroupPtr group_;
    long long max_sections_;
    mutable std::map<std::vector<int>, BurnsideBasis> cache_;
};

struct SemiAxiomOptions {
    unsigned seed = 0;
    int samples = 25;       // sampled vectors / maps per law
    int max_entry = 1;      // multiplicities are drawn from [0, max_entry]
    int max_pairs = 40;     // cap on composable pairs / cospans
};

// Commutative-semiring laws, functoriality, additivity over coproducts, base
// change, and the distributive law, on seeded random values over the universe.
Report check_semi_axioms(const BurnsideFunctor& bt, const Universe& uni,
                         const SemiAxiomOptions& opts = {});

} // namespace ug
