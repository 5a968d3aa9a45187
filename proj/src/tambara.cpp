#include "ug/tambara.hpp"

#include <algorithm>
#include <set>

namespace ug {

namespace {

std::vector<int> cache_key(const GSet& x) {
    std::vector<int> key;
    key.reserve(x.act_.size() + 2);
    key.push_back(x.size);
    key.push_back(static_cast<int>(x.group->order));
    key.insert(key.end(), x.act_.begin(), x.act_.end());
    return key;
}

// Enumerates all invariant assignments orbit-by-orbit (orbit 0 most
// significant), giving a deterministic order shared by every pointwise functor.
std::vector<Elem> enumerate_invariant(const GSet& carrier, int nvalues) {
    const auto orbs = orbits(carrier);
    const int k = static_cast<int>(orbs.size());
    std::vector<Elem> out;
    std::vector<int> choice(k, 0);
    while (true) {
        Elem e(carrier.size, 0);
        for (int i = 0; i < k; ++i)
            for (int c : orbs[i]) e[c] = choice[i];
        out.push_back(std::move(e));
        int pos = k - 1;
        while (pos >= 0 && choice[pos] == nvalues - 1) choice[pos--] = 0;
        if (pos < 0) break;
        ++choice[pos];
    }
    return out;
}

} // namespace

const RingModel& TambaraFunctor::ring(const GSet& x) const {
    auto key = cache_key(x);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;

    RingModel model;
    model.elems = enumerate(x);
    const int n = static_cast<int>(model.elems.size());
    for (int i = 0; i < n; ++i) model.index[model.elems[i]] = i;
    auto index_of = [&](const Elem& a) {
        auto hit = model.index.find(a);
        if (hit != model.index.end()) return hit->second;
        for (int i = 0; i < n; ++i)
            if (eq(x, model.elems[i], a)) return i;
        throw AlgebraError("element not found in value ring");
    };
    model.ring.size = n;
    model.ring.add_.resize(static_cast<size_t>(n) * n);
    model.ring.mul_.resize(static_cast<size_t>(n) * n);
    model.ring.neg_.resize(n);
    model.ring.zero = index_of(zero(x));
    model.ring.one = index_of(one(x));
    for (int i = 0; i < n; ++i) {
        model.ring.neg_[i] = index_of(neg(x, model.elems[i]));
        for (int j = 0; j < n; ++j) {
            model.ring.add_[i * n + j] = index_of(add(x, model.elems[i], model.elems[j]));
            model.ring.mul_[i * n + j] = index_of(mul(x, model.elems[i], model.elems[j]));
        }
    }
    return cache_.emplace(std::move(key), std::move(model)).first->second;
}

int TambaraFunctor::elem_index(const GSet& x, const Elem& a) const {
    const RingModel& model = ring(x);
    auto hit = model.index.find(a);
    if (hit != model.index.end()) return hit->second;
    for (int i = 0; i < model.ring.size; ++i)
        if (eq(x, model.elems[i], a)) return i;
    throw AlgebraError("element not found in value ring");
}

std::vector<int> TambaraFunctor::star_table(const GMap& f) const {
    const RingModel& src = ring(f.target);  // star goes T(Y) -> T(X)
    std::vector<int> out(src.ring.size);
    for (int i = 0; i < src.ring.size; ++i) out[i] = elem_index(f.source, star(f, src.elems[i]));
    return out;
}

std::vector<int> TambaraFunctor::plus_table(const GMap& f) const {
    const RingModel& src = ring(f.source);
    std::vector<int> out(src.ring.size);
    for (int i = 0; i < src.ring.size; ++i) out[i] = elem_index(f.target, plus(f, src.elems[i]));
    return out;
}

std::vector<int> TambaraFunctor::dot_table(const GMap& f) const {
    const RingModel& src = ring(f.source);
    std::vector<int> out(src.ring.size);
    for (int i = 0; i < src.ring.size; ++i) out[i] = elem_index(f.target, dot(f, src.elems[i]));
    return out;
}

GSet TambaraFunctor::carrier(const GSet&) const {
    throw UnsupportedFunctorShape(name() + " has no pointwise carrier");
}

std::vector<int> TambaraFunctor::carrier_map(const GMap&) const {
    throw UnsupportedFunctorShape(name() + " has no pointwise carrier");
}

// ---------------------------------------------------------------------------
// Fixed-point functor

FixedPointFunctor::FixedPointFunctor(GroupPtr g, TabRing r)
    : TambaraFunctor(std::move(g)), r_(std::move(r)) {
    validate_ring(r_);
}

std::string FixedPointFunctor::name() const {
    return "fixed-point(|R|=" + std::to_string(r_.size) + ")";
}

Elem FixedPointFunctor::star(const GMap& f, const Elem& a) const {
    Elem out(f.source.size);
    for (int x = 0; x < f.source.size; ++x) out[x] = a[f(x)];
    return out;
}

Elem FixedPointFunctor::plus(const GMap& f, const Elem& a) const {
    Elem out(f.target.size, r_.zero);
    for (int x = 0; x < f.source.size; ++x) out[f(x)] = r_.add(out[f(x)], a[x]);
    return out;
}

Elem FixedPointFunctor::dot(const GMap& f, const Elem& a) const {
    Elem out(f.target.size, r_.one);
    for (int x = 0; x < f.source.size; ++x) out[f(x)] = r_.mul(out[f(x)], a[x]);
    return out;
}

Elem FixedPointFunctor::add(const GSet& x, const Elem& a, const Elem& b) const {
    Elem out(x.size);
    for (int i = 0; i < x.size; ++i) out[i] = r_.add(a[i], b[i]);
    return out;
}

Elem FixedPointFunctor::mul(const GSet& x, const Elem& a, const Elem& b) const {
    Elem out(x.size);
    for (int i = 0; i < x.size; ++i) out[i] = r_.mul(a[i], b[i]);
    return out;
}

Elem FixedPointFunctor::neg(const GSet& x, const Elem& a) const {
    Elem out(x.size);
    for (int i = 0; i < x.size; ++i) out[i] = r_.neg(a[i]);
    return out;
}

Elem FixedPointFunctor::zero(const GSet& x) const { return Elem(x.size, r_.zero); }
Elem FixedPointFunctor::one(const GSet& x) const { return Elem(x.size, r_.one); }

bool FixedPointFunctor::eq(const GSet&, const Elem& a, const Elem& b) const { return a == b; }

std::vector<Elem> FixedPointFunctor::enumerate(const GSet& x) const {
    return enumerate_invariant(x, r_.size);
}

FunctorPtr fixed_point_functor(GroupPtr g, TabRing r) {
    return std::make_shared<FixedPointFunctor>(std::move(g), std::move(r));
}

// ---------------------------------------------------------------------------
// Biset transformation T∘U

TransformFunctor::TransformFunctor(FunctorPtr parent, Biset u)
    : TambaraFunctor(u.ggroup), parent_(std::move(parent)), u_(std::move(u)) {
    if (!same_group(parent_->group(), u_.hgroup))
        throw GroupMismatch("functor group does not match the left group of the biset");
}

std::string TransformFunctor::name() const { return parent_->name() + "∘U"; }

const UComposite& TransformFunctor::composite(const GSet& x) const {
    auto key = cache_key(x);
    auto it = composites_.find(key);
    if (it != composites_.end()) return it->second;
    return composites_.emplace(std::move(key), u_apply_object(u_, x)).first->second;
}

GMap TransformFunctor::transported(const GMap& f) const {
    return u_apply_map(f, composite(f.source), composite(f.target), false);
}

Elem TransformFunctor::star(const GMap& f, const Elem& a) const {
    return parent_->star(transported(f), a);
}
Elem TransformFunctor::plus(const GMap& f, const Elem& a) const {
    return parent_->plus(transported(f), a);
}
Elem TransformFunctor::dot(const GMap& f, const Elem& a) const {
    return parent_->dot(transported(f), a);
}
Elem TransformFunctor::add(const GSet& x, const Elem& a, const Elem& b) const {
    return parent_->add(composite(x).hset, a, b);
}
Elem TransformFunctor::mul(const GSet& x, const Elem& a, const Elem& b) const {
    return parent_->mul(composite(x).hset, a, b);
}
Elem TransformFunctor::neg(const GSet& x, const Elem& a) const {
    return parent_->neg(composite(x).hset, a);
}
Elem TransformFunctor::zero(const GSet& x) const { return parent_->zero(composite(x).hset); }
Elem TransformFunctor::one(const GSet& x) const { return parent_->one(composite(x).hset); }
bool TransformFunctor::eq(const GSet& x, const Elem& a, const Elem& b) const {
    return parent_->eq(composite(x).hset, a, b);
}
std::vector<Elem> TransformFunctor::enumerate(const GSet& x) const {
    return parent_->enumerate(composite(x).hset);
}

GSet TransformFunctor::carrier(const GSet& x) const { return parent_->carrier(composite(x).hset); }
std::vector<int> TransformFunctor::carrier_map(const GMap& f) const {
    return parent_->carrier_map(transported(f));
}

FunctorPtr transform(FunctorPtr t, const Biset& u) {
    return std::make_shared<TransformFunctor>(std::move(t), u);
}

// ---------------------------------------------------------------------------
// Ideals

namespace {

class ZeroIdeal : public TamIdeal {
public:
    std::string name() const override { return "zero"; }
    bool contains(const TambaraFunctor& t, const GSet& x, const Elem& a) const override {
        return t.eq(x, a, t.zero(x));
    }
};

class FullIdeal : public TamIdeal {
public:
    std::string name() const override { return "full"; }
    bool contains(const TambaraFunctor&, const GSet&, const Elem&) const override { return true; }
};

class PointwiseIdeal : public TamIdeal {
public:
    explicit PointwiseIdeal(std::vector<int> values) : values_(std::move(values)) {
        std::sort(values_.begin(), values_.end());
        values_.erase(std::unique(values_.begin(), values_.end()), values_.end());
    }
    std::string name() const override {
        std::string s = "pointwise{";
        for (size_t i = 0; i < values_.size(); ++i)
            s += (i ? "," : "") + std::to_string(values_[i]);
        return s + "}";
    }
    bool contains(const TambaraFunctor& t, const GSet&, const Elem& a) const override {
        if (!t.base_ring()) throw UnsupportedFunctorShape("pointwise ideal needs a base ring");
        for (int v : a)
            if (!std::binary_search(values_.begin(), values_.end(), v)) return false;
        return true;
    }

private:
    std::vector<int> values_;
};

class TransformedIdeal : public TamIdeal {
public:
    explicit TransformedIdeal(IdealPtr base) : base_(std::move(base)) {}
    std::string name() const override { return base_->name() + "∘U"; }
    bool contains(const TambaraFunctor& t, const GSet& x, const Elem& a) const override {
        const auto* tf = dynamic_cast<const TransformFunctor*>(&t);
        if (!tf) throw UnsupportedFunctorShape("transformed ideal expects a transformed functor");
        return base_->contains(*tf->parent(), tf->composite(x).hset, a);
    }

private:
    IdealPtr base_;
};

} // namespace

IdealPtr zero_ideal() { return std::make_shared<ZeroIdeal>(); }
IdealPtr full_ideal() { return std::make_shared<FullIdeal>(); }
IdealPtr pointwise_ideal(std::vector<int> subset_values) {
    return std::make_shared<PointwiseIdeal>(std::move(subset_values));
}
IdealPtr transformed_ideal(IdealPtr base) {
    return std::make_shared<TransformedIdeal>(std::move(base));
}

// ---------------------------------------------------------------------------
// Multiplicative subfunctors

std::vector<int> MultSubfunctor::subset_for(const TabRing&) const {
    throw UnsupportedFunctorShape("subfunctor " + name() + " is not pointwise");
}

namespace {

class PointwiseSubfunctor : public MultSubfunctor {
public:
    PointwiseSubfunctor(std::string label, std::vector<int> values)
        : label_(std::move(label)), values_(std::move(values)) {
        std::sort(values_.begin(), values_.end());
        values_.erase(std::unique(values_.begin(), values_.end()), values_.end());
    }
    std::string name() const override { return label_; }
    bool pointwise() const override { return true; }
    bool contains(const TambaraFunctor& t, const GSet&, const Elem& a) const override {
        if (!t.base_ring()) throw UnsupportedFunctorShape("pointwise subfunctor needs a base ring");
        for (int v : a)
            if (!std::binary_search(values_.begin(), values_.end(), v)) return false;
        return true;
    }
    std::vector<int> subset_for(const TabRing& r) const override {
        for (int v : values_)
            if (v < 0 || v >= r.size)
                throw InputError("subfunctor value " + std::to_string(v) + " outside the base ring");
        return values_;
    }

private:
    std::string label_;
    std::vector<int> values_;
};

class OnesSubfunctor : public MultSubfunctor {
public:
    std::string name() const override { return "ones"; }
    bool pointwise() const override { return true; }
    bool contains(const TambaraFunctor& t, const GSet& x, const Elem& a) const override {
        return t.eq(x, a, t.one(x));
    }
    std::vector<int> subset_for(const TabRing& r) const override { return {r.one}; }
};

class FullSubfunctor : public MultSubfunctor {
public:
    std::string name() const override { return "full"; }
    bool pointwise() const override { return true; }
    bool contains(const TambaraFunctor&, const GSet&, const Elem&) const override { return true; }
    std::vector<int> subset_for(const TabRing& r) const override {
        std::vector<int> all(r.size);
        for (int i = 0; i < r.size; ++i) all[i] = i;
        return all;
    }
};

class TransformedSubfunctor : public MultSubfunctor {
public:
    explicit TransformedSubfunctor(SubfunctorPtr base) : base_(std::move(base)) {}
    std::string name() const override { return base_->name() + "∘U"; }
    bool pointwise() const override { return base_->pointwise(); }
    bool contains(const TambaraFunctor& t, const GSet& x, const Elem& a) const override {
        const auto* tf = dynamic_cast<const TransformFunctor*>(&t);
        if (!tf)
            throw UnsupportedFunctorShape("transformed subfunctor expects a transformed functor");
        return base_->contains(*tf->parent(), tf->composite(x).hset, a);
    }
    std::vector<int> subset_for(const TabRing& r) const override { return base_->subset_for(r); }

private:
    SubfunctorPtr base_;
};

} // namespace

SubfunctorPtr ones_subfunctor() { return std::make_shared<OnesSubfunctor>(); }
SubfunctorPtr full_mult_subfunctor() { return std::make_shared<FullSubfunctor>(); }
SubfunctorPtr pointwise_subfunctor(std::vector<int> subset_values) {
    std::string label = "pointwise{";
    std::vector<int> sorted = subset_values;
    std::sort(sorted.begin(), sorted.end());
    for (size_t i = 0; i < sorted.size(); ++i) label += (i ? "," : "") + std::to_string(sorted[i]);
    label += "}";
    return std::make_shared<PointwiseSubfunctor>(label, std::move(subset_values));
}

SubfunctorPtr powers_subfunctor(const TabRing& r, int value) {
    if (value < 0 || value >= r.size) throw InputError("powers_subfunctor: value out of range");
    std::set<int> closure = {r.one};
    int p = value;
    while (!closure.count(p)) {
        closure.insert(p);
        p = r.mul(p, value);
    }
    return std::make_shared<PointwiseSubfunctor>(
        "powers(" + std::to_string(value) + ")",
        std::vector<int>(closure.begin(), closure.end()));
}

SubfunctorPtr transformed_subfunctor(SubfunctorPtr base) {
    return std::make_shared<TransformedSubfunctor>(std::move(base));
}

// ---------------------------------------------------------------------------
// Quotient by an ideal

QuotientFunctor::QuotientFunctor(FunctorPtr parent, IdealPtr ideal)
    : TambaraFunctor(parent->group()), parent_(std::move(parent)), ideal_(std::move(ideal)) {}

std::string QuotientFunctor::name() const { return parent_->name() + "/" + ideal_->name(); }

Elem QuotientFunctor::star(const GMap& f, const Elem& a) const { return parent_->star(f, a); }
Elem QuotientFunctor::plus(const GMap& f, const Elem& a) const { return parent_->plus(f, a); }
Elem QuotientFunctor::dot(const GMap& f, const Elem& a) const { return parent_->dot(f, a); }
Elem QuotientFunctor::add(const GSet& x, const Elem& a, const Elem& b) const {
    return parent_->add(x, a, b);
}
Elem QuotientFunctor::mul(const GSet& x, const Elem& a, const Elem& b) const {
    return parent_->mul(x, a, b);
}
Elem QuotientFunctor::neg(const GSet& x, const Elem& a) const { return parent_->neg(x, a); }
Elem QuotientFunctor::zero(const GSet& x) const { return parent_->zero(x); }
Elem QuotientFunctor::one(const GSet& x) const { return parent_->one(x); }

bool QuotientFunctor::eq(const GSet& x, const Elem& a, const Elem& b) const {
    return ideal_->contains(*parent_, x, parent_->add(x, a, parent_->neg(x, b)));
}

std::vector<Elem> QuotientFunctor::enumerate(const GSet& x) const {
    std::vector<Elem> reps;
    for (const Elem& a : parent_->enumerate(x)) {
        bool fresh = true;
        for (const Elem& r : reps)
            if (eq(x, a, r)) {
                fresh = false;
                break;
            }
        if (fresh) reps.push_back(a);
    }
    return reps;
}

FunctorPtr quotient(FunctorPtr t, IdealPtr ideal) {
    return std::make_shared<QuotientFunctor>(std::move(t), std::move(ideal));
}

// ---------------------------------------------------------------------------
// Localization

int BaseLocalization::pair_class(int t, int s) const {
    auto it = std::lower_bound(s0.begin(), s0.end(), s);
    if (it == s0.end() || *it != s)
        throw InputError("denominator " + std::to_string(s) + " not in the multiplicative set");
    return of_pair[t * static_cast<int>(s0.size()) + static_cast<int>(it - s0.begin())];
}

BaseLocalization localize_base_ring(const TabRing& r, const std::vector<int>& s0_values) {
    BaseLocalization b;
    b.s0 = s0_values;
    std::sort(b.s0.begin(), b.s0.end());
    b.s0.erase(std::unique(b.s0.begin(), b.s0.end()), b.s0.end());
    if (b.s0.empty()) throw NotASubfunctor("empty multiplicative set");
    for (int s : b.s0)
        if (s < 0 || s >= r.size) throw NotASubfunctor("multiplicative set value out of range");
    if (!std::binary_search(b.s0.begin(), b.s0.end(), r.one))
        throw NotASubfunctor("multiplicative set does not contain 1");
    for (int s : b.s0)
        for (int t : b.s0)
            if (!std::binary_search(b.s0.begin(), b.s0.end(), r.mul(s, t)))
                throw NotASubfunctor("multiplicative set not closed under product: " +
                                     std::to_string(s) + "*" + std::to_string(t));

    const int m = static_cast<int>(b.s0.size());
    // (t1,s1) ~ (t2,s2)  iff  some s'' in S0 kills t1*s2 - t2*s1.
    auto equivalent = [&](int t1, int s1, int t2, int s2) {
        const int d = r.sub(r.mul(t1, s2), r.mul(t2, s1));
        for (int s : b.s0)
            if (r.mul(s, d) == r.zero) return true;
        return false;
    };
    b.of_pair.assign(static_cast<size_t>(r.size) * m, -1);
    for (int t = 0; t < r.size; ++t)
        for (int si = 0; si < m; ++si) {
            if (b.of_pair[t * m + si] >= 0) continue;
            const int cls = static_cast<int>(b.reps.size());
            b.reps.emplace_back(t, b.s0[si]);
            for (int t2 = t; t2 < r.size; ++t2)
                for (int sj = (t2 == t ? si : 0); sj < m; ++sj)
                    if (b.of_pair[t2 * m + sj] < 0 && equivalent(t, b.s0[si], t2, b.s0[sj]))
                        b.of_pair[t2 * m + sj] = cls;
        }

    const int n = static_cast<int>(b.reps.size());
    b.loc.size = n;
    b.loc.add_.resize(static_cast<size_t>(n) * n);
    b.loc.mul_.resize(static_cast<size_t>(n) * n);
    b.loc.neg_.resize(n);
    for (int i = 0; i < n; ++i) {
        const auto [t1, s1] = b.reps[i];
        b.loc.neg_[i] = b.pair_class(r.neg(t1), s1);
        for (int j = 0; j < n; ++j) {
            const auto [t2, s2] = b.reps[j];
            b.loc.add_[i * n + j] =
                b.pair_class(r.add(r.mul(t1, s2), r.mul(t2, s1)), r.mul(s1, s2));
            b.loc.mul_[i * n + j] = b.pair_class(r.mul(t1, t2), r.mul(s1, s2));
        }
    }
    b.loc.zero = b.pair_class(r.zero, r.one);
    b.loc.one = b.pair_class(r.one, r.one);
    validate_ring(b.loc);
    b.from_base.resize(r.size);
    for (int t = 0; t < r.size; ++t) b.from_base[t] = b.pair_class(t, r.one);
    return b;
}

LocalizedFunctor::LocalizedFunctor(FunctorPtr parent, SubfunctorPtr s)
    : TambaraFunctor(parent->group()), parent_(std::move(parent)), s_(std::move(s)) {
    if (!parent_->base_ring())
        throw UnsupportedFunctorShape("localization needs a pointwise functor");
    if (!s_->pointwise())
        throw UnsupportedFunctorShape("localization needs a pointwise multiplicative subfunctor");
    base_ = localize_base_ring(*parent_->base_ring(), s_->subset_for(*parent_->base_ring()));
}

std::string LocalizedFunctor::name() const { return parent_->name() + "[" + s_->name() + "^-1]"; }

Elem LocalizedFunctor::star(const GMap& f, const Elem& a) const {
    const auto cm = parent_->carrier_map(f);
    Elem out(cm.size());
    for (size_t c = 0; c < cm.size(); ++c) out[c] = a[cm[c]];
    return out;
}

// f_+ of a fraction function: over each fiber, bring everything onto the
// common denominator prod s and sum the cofactor-expanded numerators.
Elem LocalizedFunctor::plus(const GMap& f, const Elem& a) const {
    const TabRing& r = *parent_->base_ring();
    const auto cm = parent_->carrier_map(f);
    const int tgt = parent_->carrier(f.target).size;
    std::vector<std::vector<int>> fibers(tgt);
    for (size_t c = 0; c < cm.size(); ++c) fibers[cm[c]].push_back(static_cast<int>(c));
    Elem out(tgt);
    for (int y = 0; y < tgt; ++y) {
        int num = r.zero, den = r.one;
        for (int c : fibers[y]) {
            const auto [tc, sc] = base_.reps[a[c]];
            // num/den + tc/sc = (num*sc + tc*den) / (den*sc)
            num = r.add(r.mul(num, sc), r.mul(tc, den));
            den = r.mul(den, sc);
        }
        out[y] = base_.pair_class(num, den);
    }
    return out;
}

Elem LocalizedFunctor::dot(const GMap& f, const Elem& a) const {
    const TabRing& r = *parent_->base_ring();
    const auto cm = parent_->carrier_map(f);
    const int tgt = parent_->carrier(f.target).size;
    std::vector<int> num(tgt, r.one), den(tgt, r.one);
    for (size_t c = 0; c < cm.size(); ++c) {
        const auto [tc, sc] = base_.reps[a[c]];
        num[cm[c]] = r.mul(num[cm[c]], tc);
        den[cm[c]] = r.mul(den[cm[c]], sc);
    }
    Elem out(tgt);
    for (int y = 0; y < tgt; ++y) out[y] = base_.pair_class(num[y], den[y]);
    return out;
}

Elem LocalizedFunctor::add(const GSet& x, const Elem& a, const Elem& b) const {
    Elem out(a.size());
    for (size_t i = 0; i < a.size(); ++i) out[i] = base_.loc.add(a[i], b[i]);
    (void)x;
    return out;
}

Elem LocalizedFunctor::mul(const GSet& x, const Elem& a, const Elem& b) const {
    Elem out(a.size());
    for (size_t i = 0; i < a.size(); ++i) out[i] = base_.loc.mul(a[i], b[i]);
    (void)x;
    return out;
}

Elem LocalizedFunctor::neg(const GSet& x, const Elem& a) const {
    Elem out(a.size());
    for (size_t i = 0; i < a.size(); ++i) out[i] = base_.loc.neg(a[i]);
    (void)x;
    return out;
}

Elem LocalizedFunctor::zero(const GSet& x) const {
    return Elem(parent_->carrier(x).size, base_.loc.zero);
}
Elem LocalizedFunctor::one(const GSet& x) const {
    return Elem(parent_->carrier(x).size, base_.loc.one);
}
bool LocalizedFunctor::eq(const GSet&, const Elem& a, const Elem& b) const { return a == b; }

std::vector<Elem> LocalizedFunctor::enumerate(const GSet& x) const {
    return enumerate_invariant(parent_->carrier(x), base_.loc.size);
}

Elem LocalizedFunctor::fraction(const GSet& x, const Elem& t, const Elem& s) const {
    if (!s_->contains(*parent_, x, s))
        throw NotASubfunctor("denominator not in the multiplicative subfunctor");
    Elem out(t.size());
    for (size_t i = 0; i < t.size(); ++i) out[i] = base_.pair_class(t[i], s[i]);
    return out;
}

FunctorPtr localize(FunctorPtr t, SubfunctorPtr s) {
    return std::make_shared<LocalizedFunctor>(std::move(t), std::move(s));
}

} // namespace ug
