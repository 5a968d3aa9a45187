#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "ug/biset.hpp"
#include "ug/gset.hpp"
#include "ug/report.hpp"
#include "ug/ring.hpp"

namespace ug {

// Opaque element of a functor value ring; the layout is private to each
// functor instance.
using Elem = std::vector<int>;

struct RingModel {
    TabRing ring;
    std::vector<Elem> elems;  // canonical representatives, deterministic order
    std::map<Elem, int> index;
};

// Evaluatable Tambara functor: X |-> commutative ring T(X) with restriction
// (star), transfer (plus) and norm (dot) along every equivariant map.
// Value rings are materialized lazily and memoized by the action table of X;
// the element-level operations work on arbitrary (also large) G-sets.
class TambaraFunctor {
public:
    explicit TambaraFunctor(GroupPtr g) : group_(std::move(g)) {}
    virtual ~TambaraFunctor() = default;

    const GroupPtr& group() const { return group_; }
    virtual std::string name() const = 0;

    // f: X -> Y. star: T(Y) -> T(X); plus, dot: T(X) -> T(Y).
    virtual Elem star(const GMap& f, const Elem& a) const = 0;
    virtual Elem plus(const GMap& f, const Elem& a) const = 0;
    virtual Elem dot(const GMap& f, const Elem& a) const = 0;

    virtual Elem add(const GSet& x, const Elem& a, const Elem& b) const = 0;
    virtual Elem mul(const GSet& x, const Elem& a, const Elem& b) const = 0;
    virtual Elem neg(const GSet& x, const Elem& a) const = 0;
    virtual Elem zero(const GSet& x) const = 0;
    virtual Elem one(const GSet& x) const = 0;
    virtual bool eq(const GSet& x, const Elem& a, const Elem& b) const = 0;

    // All elements of T(X) (canonical representatives, deterministic order).
    virtual std::vector<Elem> enumerate(const GSet& x) const = 0;

    const RingModel& ring(const GSet& x) const;
    int elem_index(const GSet& x, const Elem& a) const;

    std::vector<int> star_table(const GMap& f) const;
    std::vector<int> plus_table(const GMap& f) const;
    std::vector<int> dot_table(const GMap& f) const;

    // Pointwise protocol: non-null base_ring means T(X) is the ring of
    // invariant functions carrier(X) -> R; localization relies on this shape.
    virtual const TabRing* base_ring() const { return nullptr; }
    virtual GSet carrier(const GSet& x) const;
    virtual std::vector<int> carrier_map(const GMap& f) const;

protected:
    GroupPtr group_;
    mutable std::map<std::vector<int>, RingModel> cache_;
};

using FunctorPtr = std::shared_ptr<TambaraFunctor>;

// T(X) = G-invariant functions X -> R with pointwise ring structure,
// f* = precomposition, f_+ = fiberwise sum, f_. = fiberwise product.
class FixedPointFunctor : public TambaraFunctor {
public:
    FixedPointFunctor(GroupPtr g, TabRing r);
    std::string name() const override;

    Elem star(const GMap& f, const Elem& a) const override;
    Elem plus(const GMap& f, const Elem& a) const override;
    Elem dot(const GMap& f, const Elem& a) const override;
    Elem add(const GSet& x, const Elem& a, const Elem& b) const override;
    Elem mul(const GSet& x, const Elem& a, const Elem& b) const override;
    Elem neg(const GSet& x, const Elem& a) const override;
    Elem zero(const GSet& x) const override;
    Elem one(const GSet& x) const override;
    bool eq(const GSet& x, const Elem& a, const Elem& b) const override;
    std::vector<Elem> enumerate(const GSet& x) const override;

    const TabRing* base_ring() const override { return &r_; }
    GSet carrier(const GSet& x) const override { return x; }
    std::vector<int> carrier_map(const GMap& f) const override { return f.values; }

private:
    TabRing r_;
};

FunctorPtr fixed_point_functor(GroupPtr g, TabRing r);

// (T∘U)(X) = T(U∘X); structure maps are transported through U∘-.
class TransformFunctor : public TambaraFunctor {
public:
    TransformFunctor(FunctorPtr parent, Biset u);
    std::string name() const override;

    const FunctorPtr& parent() const { return parent_; }
    const Biset& biset() const { return u_; }
    const UComposite& composite(const GSet& x) const;
    GMap transported(const GMap& f) const;  // U∘f

    Elem star(const GMap& f, const Elem& a) const override;
    Elem plus(const GMap& f, const Elem& a) const override;
    Elem dot(const GMap& f, const Elem& a) const override;
    Elem add(const GSet& x, const Elem& a, const Elem& b) const override;
    Elem mul(const GSet& x, const Elem& a, const Elem& b) const override;
    Elem neg(const GSet& x, const Elem& a) const override;
    Elem zero(const GSet& x) const override;
    Elem one(const GSet& x) const override;
    bool eq(const GSet& x, const Elem& a, const Elem& b) const override;
    std::vector<Elem> enumerate(const GSet& x) const override;

    const TabRing* base_ring() const override { return parent_->base_ring(); }
    GSet carrier(const GSet& x) const override;
    std::vector<int> carrier_map(const GMap& f) const override;

private:
    FunctorPtr parent_;
    Biset u_;
    mutable std::map<std::vector<int>, UComposite> composites_;
};

FunctorPtr transform(FunctorPtr t, const Biset& u);

// Objectwise ideal of a Tambara functor, given as a membership procedure so
// it is defined on every G-set (also the large intermediate ones).
class TamIdeal {
public:
    virtual ~TamIdeal() = default;
    virtual std::string name() const = 0;
    virtual bool contains(const TambaraFunctor& t, const GSet& x, const Elem& a) const = 0;
};

using IdealPtr = std::shared_ptr<TamIdeal>;

IdealPtr zero_ideal();
IdealPtr full_ideal();
// Invariant functions with all values in the given subset of the base ring.
IdealPtr pointwise_ideal(std::vector<int> subset_values);
// I∘U: member(X) = I(U∘X); usable with a TransformFunctor.
IdealPtr transformed_ideal(IdealPtr base);

class MultSubfunctor {
public:
    virtual ~MultSubfunctor() = default;
    virtual std::string name() const = 0;
    virtual bool contains(const TambaraFunctor& t, const GSet& x, const Elem& a) const = 0;
    // Pointwise subfunctors pick their elements valuewise from a subset of the
    // base ring; that subset is what the localization machinery needs.
    virtual bool pointwise() const { return false; }
    virtual std::vector<int> subset_for(const TabRing& r) const;
};

using SubfunctorPtr = std::shared_ptr<MultSubfunctor>;

SubfunctorPtr ones_subfunctor();
SubfunctorPtr full_mult_subfunctor();
SubfunctorPtr pointwise_subfunctor(std::vector<int> subset_values);
// Multiplicative closure of one base-ring value (e.g. powers of 3).
SubfunctorPtr powers_subfunctor(const TabRing& r, int value);
SubfunctorPtr transformed_subfunctor(SubfunctorPtr base);

// T/I with coset representatives chosen first-in-enumeration-order.
class QuotientFunctor : public TambaraFunctor {
public:
    QuotientFunctor(FunctorPtr parent, IdealPtr ideal);
    std::string name() const override;
    const FunctorPtr& parent() const { return parent_; }
    const IdealPtr& ideal() const { return ideal_; }

    Elem star(const GMap& f, const Elem& a) const override;
    Elem plus(const GMap& f, const Elem& a) const override;
    Elem dot(const GMap& f, const Elem& a) const override;
    Elem add(const GSet& x, const Elem& a, const Elem& b) const override;
    Elem mul(const GSet& x, const Elem& a, const Elem& b) const override;
    Elem neg(const GSet& x, const Elem& a) const override;
    Elem zero(const GSet& x) const override;
    Elem one(const GSet& x) const override;
    bool eq(const GSet& x, const Elem& a, const Elem& b) const override;
    std::vector<Elem> enumerate(const GSet& x) const override;

private:
    FunctorPtr parent_;
    IdealPtr ideal_;
};

FunctorPtr quotient(FunctorPtr t, IdealPtr ideal);

// The fraction field machinery for pointwise functors: the base ring is
// localized by pair-class enumeration and fractions live orbitwise.
struct BaseLocalization {
    TabRing loc;                            // the localized ring S0^-1 R
    std::vector<std::pair<int, int>> reps;  // class -> least (t, s) pair
    std::vector<int> of_pair;               // t*|S0slots|... see cpp
    std::vector<int> from_base;             // r -> class of (r, 1)
    std::vector<int> s0;                    // sorted subset values
    int pair_class(int t, int s) const;     // s must lie in s0
};
BaseLocalization localize_base_ring(const TabRing& r, const std::vector<int>& s0);

class LocalizedFunctor : public TambaraFunctor {
public:
    LocalizedFunctor(FunctorPtr parent, SubfunctorPtr s);
    std::string name() const override;
    const FunctorPtr& parent() const { return parent_; }
    const BaseLocalization& base_localization() const { return base_; }

    Elem star(const GMap& f, const Elem& a) const override;
    Elem plus(const GMap& f, const Elem& a) const override;
    Elem dot(const GMap& f, const Elem& a) const override;
    Elem add(const GSet& x, const Elem& a, const Elem& b) const override;
    Elem mul(const GSet& x, const Elem& a, const Elem& b) const override;
    Elem neg(const GSet& x, const Elem& a) const override;
    Elem zero(const GSet& x) const override;
    Elem one(const GSet& x) const override;
    bool eq(const GSet& x, const Elem& a, const Elem& b) const override;
    std::vector<Elem> enumerate(const GSet& x) const override;

    const TabRing* base_ring() const override { return &base_.loc; }
    GSet carrier(const GSet& x) const override { return parent_->carrier(x); }
    std::vector<int> carrier_map(const GMap& f) const override { return parent_->carrier_map(f); }

    // Fraction t/s of parent pointwise functions (used by tests and I/O).
    Elem fraction(const GSet& x, const Elem& t, const Elem& s) const;

private:
    FunctorPtr parent_;
    SubfunctorPtr s_;
    BaseLocalization base_;
};

FunctorPtr localize(FunctorPtr t, SubfunctorPtr s);

} // namespace ug
