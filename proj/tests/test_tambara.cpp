#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>
#include <set>

#include "ug/checks.hpp"
#include "ug/tambara.hpp"

using namespace ug;

namespace {

// Union-find oracle for the localization pair classes, written independently
// of localize_base_ring: (t1,s1) ~ (t2,s2) iff some s'' in S0 kills the
// cross-difference.
int brute_pair_class_count(const TabRing& r, const std::vector<int>& s0) {
    std::vector<std::pair<int, int>> pairs;
    for (int t = 0; t < r.size; ++t)
        for (int s : s0) pairs.emplace_back(t, s);
    const int n = static_cast<int>(pairs.size());
    std::vector<int> parent(n);
    for (int i = 0; i < n; ++i) parent[i] = i;
    std::function<int(int)> find = [&](int i) { return parent[i] == i ? i : parent[i] = find(parent[i]); };
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < i; ++j) {
            auto [t1, s1] = pairs[i];
            auto [t2, s2] = pairs[j];
            bool related = false;
            for (int ss : s0)
                if (r.mul(ss, r.sub(r.mul(t1, s2), r.mul(t2, s1))) == r.zero) related = true;
            if (related) parent[find(i)] = find(j);
        }
    std::set<int> roots;
    for (int i = 0; i < n; ++i) roots.insert(find(i));
    return static_cast<int>(roots.size());
}

// Deliberately broken functor: the norm is replaced by the transfer.
class BadDot : public FixedPointFunctor {
public:
    using FixedPointFunctor::FixedPointFunctor;
    Elem dot(const GMap& f, const Elem& a) const override { return FixedPointFunctor::plus(f, a); }
};

} // namespace

TEST_CASE("value at a point recovers the base ring") {
    const GroupPtr c2 = builtin_group("c2");
    const FunctorPtr t = fixed_point_functor(c2, zmod(4));
    const GSet pt = point_gset(c2);
    const RingModel& m = t->ring(pt);
    CHECK(m.ring == zmod(4));
    CHECK(m.elems.size() == 4);
    // Free orbit: invariant functions on regular C2 are the constants.
    CHECK(t->ring(regular_gset(c2)).elems.size() == 4);
    // Two-orbit trivial set: independent values.
    CHECK(t->ring(trivial_gset(c2, 2)).elems.size() == 16);
}

TEST_CASE("star, transfer and norm formulas on the fold") {
    const GroupPtr c2 = builtin_group("c2");
    const TabRing r = zmod(4);
    const FunctorPtr t = fixed_point_functor(c2, r);
    const GSet x = regular_gset(c2);
    const Coproduct cp = coproduct(x, x);
    const GMap fold = check_gmap({0, 1, 0, 1}, cp.sum, x);
    // An invariant function on X + X: constant c on the first copy, d on the
    // second. Its transfer is the constant c+d, its norm the constant c*d.
    for (int c = 0; c < 4; ++c)
        for (int d = 0; d < 4; ++d) {
            const Elem a = {c, c, d, d};
            CHECK(t->plus(fold, a) == Elem{r.add(c, d), r.add(c, d)});
            CHECK(t->dot(fold, a) == Elem{r.mul(c, d), r.mul(c, d)});
        }
    // Restriction along the fold duplicates.
    CHECK(t->star(fold, Elem{3, 3}) == Elem{3, 3, 3, 3});
}

TEST_CASE("axioms hold for fixed-point functors") {
    for (const char* g : {"c2", "s3"}) {
        const GroupPtr gp = builtin_group(g);
        const Universe uni = build_universe(gp, 3);
        const Report rep = check_axioms(*fixed_point_functor(gp, zmod(4)), uni);
        CHECK(rep.passed());
    }
}

TEST_CASE("a corrupted norm is caught with a witness") {
    const GroupPtr c2 = builtin_group("c2");
    const auto bad = std::make_shared<BadDot>(c2, zmod(4));
    const Universe uni = build_universe(c2, 3);
    const Report rep = check_axioms(*bad, uni);
    CHECK_FALSE(rep.passed());
    bool witnessed = false;
    for (const auto& c : rep.checks)
        if (!c.passed && !c.witness.empty()) witnessed = true;
    CHECK(witnessed);
}

TEST_CASE("quotient by the zero ideal is the identity") {
    const GroupPtr c2 = builtin_group("c2");
    const FunctorPtr t = fixed_point_functor(c2, zmod(4));
    const FunctorPtr q = quotient(t, zero_ideal());
    const Universe uni = build_universe(c2, 3);
    CHECK(compare_functors(*t, *q, uni).passed());
}

TEST_CASE("quotient by the full ideal collapses everything") {
    const GroupPtr c2 = builtin_group("c2");
    const FunctorPtr q = quotient(fixed_point_functor(c2, zmod(4)), full_ideal());
    const Universe uni = build_universe(c2, 3);
    for (const GSet& x : uni.objects) CHECK(q->ring(x).elems.size() == 1);
    CHECK(check_axioms(*q, uni).passed());
}

TEST_CASE("quotient of zmod 4 by multiples of 2") {
    const GroupPtr c2 = builtin_group("c2");
    const FunctorPtr t = fixed_point_functor(c2, zmod(4));
    const IdealPtr i = pointwise_ideal({0, 2});
    const Universe uni = build_universe(c2, 3);
    CHECK(check_ideal(*t, *i, uni).passed());
    const FunctorPtr q = quotient(t, i);
    CHECK(check_axioms(*q, uni).passed());
    // Sizes agree with the mod-2 fixed-point functor on every object.
    const FunctorPtr t2 = fixed_point_functor(c2, zmod(2));
    for (const GSet& x : uni.objects)
        CHECK(q->ring(x).elems.size() == t2->ring(x).elems.size());
    // At the point the quotient ring has characteristic 2.
    const GSet pt = point_gset(c2);
    const Elem one = q->one(pt);
    CHECK(q->eq(pt, q->add(pt, one, one), q->zero(pt)));
}

TEST_CASE("non-ideals are rejected") {
    const GroupPtr c2 = builtin_group("c2");
    const FunctorPtr t = fixed_point_functor(c2, zmod(4));
    const Universe uni = build_universe(c2, 2);
    // {0, 1} is not closed under addition, let alone absorbing.
    const Report rep = check_ideal(*t, *pointwise_ideal({0, 1}), uni);
    CHECK_FALSE(rep.passed());
    CHECK_THROWS_AS(validate_ideal(*t, *pointwise_ideal({0, 1}), uni), NotAnIdeal);
}

TEST_CASE("localization at the ones subfunctor changes nothing") {
    const GroupPtr c2 = builtin_group("c2");
    const FunctorPtr t = fixed_point_functor(c2, zmod(4));
    const FunctorPtr l = localize(t, ones_subfunctor());
    const Universe uni = build_universe(c2, 3);
    const auto* loc = dynamic_cast<const LocalizedFunctor*>(l.get());
    REQUIRE(loc != nullptr);
    CHECK(loc->base_localization().loc.size == 4);
    for (const GSet& x : uni.objects)
        CHECK(l->ring(x).elems.size() == t->ring(x).elems.size());
    CHECK(check_axioms(*l, uni).passed());
}

TEST_CASE("localizing zmod 6 at powers of 3") {
    const GroupPtr s3 = builtin_group("s3");
    const TabRing r = zmod(6);
    const FunctorPtr t = fixed_point_functor(s3, r);
    const SubfunctorPtr s = powers_subfunctor(r, 3);
    const Universe uni = build_universe(s3, 3);
    CHECK(check_subfunctor(*t, *s, uni).passed());
    const FunctorPtr l = localize(t, s);
    // 3 is (1,0) under zmod6 = zmod2 x zmod3; inverting it kills the 3-part.
    const auto* loc = dynamic_cast<const LocalizedFunctor*>(l.get());
    REQUIRE(loc != nullptr);
    CHECK(loc->base_localization().loc.size == 2);
    CHECK(check_axioms(*l, uni).passed());
    // In S0^-1 T the element 3/1 becomes invertible: (3/1)*(t/3) = 1 for some t.
    const GSet pt = point_gset(s3);
    const Elem three = {loc->base_localization().from_base[3]};
    bool invertible = false;
    for (const Elem& e : l->ring(pt).elems)
        if (l->eq(pt, l->mul(pt, three, e), l->one(pt))) invertible = true;
    CHECK(invertible);
}

TEST_CASE("pair-class counts match the union-find oracle") {
    struct Case { int n; std::vector<int> s0; };
    for (const auto& [n, s0] : {Case{6, {1, 3}}, Case{4, {1, 3}}, Case{6, {1, 2, 4}}, Case{4, {0, 1, 2, 3}}}) {
        const TabRing r = zmod(n);
        const BaseLocalization bl = localize_base_ring(r, s0);
        CHECK(bl.loc.size == brute_pair_class_count(r, s0));
        validate_ring(bl.loc);
    }
}

TEST_CASE("non-multiplicative subsets are rejected") {
    const GroupPtr c2 = builtin_group("c2");
    const FunctorPtr t = fixed_point_functor(c2, zmod(6));
    const Universe uni = build_universe(c2, 2);
    // {1, 2} is not closed: 2*2 = 4.
    const Report rep = check_subfunctor(*t, *pointwise_subfunctor({1, 2}), uni);
    CHECK_FALSE(rep.passed());
    CHECK_THROWS_AS(validate_subfunctor(*t, *pointwise_subfunctor({1, 2}), uni), NotASubfunctor);
}

TEST_CASE("transform along the identity biset is the identity") {
    const GroupPtr c2 = builtin_group("c2");
    const FunctorPtr t = fixed_point_functor(c2, zmod(4));
    const Universe uni = build_universe(c2, 3);
    CHECK(check_identity_transform(t, uni).passed());
}

TEST_CASE("transform along induction satisfies the axioms") {
    const GroupPtr c2 = builtin_group("c2");
    const GroupPtr s3 = builtin_group("s3");
    const Biset u = induction_biset(c2, s3, *find_embedding(c2, s3));
    // The parent lives over the left group S3; T∘U lives over C2.
    const FunctorPtr tu = transform(fixed_point_functor(s3, zmod(4)), u);
    const Universe uni = build_universe(c2, 3);
    CHECK(check_axioms(*tu, uni).passed());
}

TEST_CASE("corollary on quotients commuting with transformation") {
    const GroupPtr c2 = builtin_group("c2");
    const GroupPtr s3 = builtin_group("s3");
    const Biset u = induction_biset(c2, s3, *find_embedding(c2, s3));
    const FunctorPtr t = fixed_point_functor(s3, zmod(4));
    const Universe uni_g = build_universe(c2, 3);
    const Universe uni_h = build_universe(s3, 3);
    CHECK(check_cor27(t, pointwise_ideal({0, 2}), u, uni_h, uni_g).passed());
}

TEST_CASE("corollary on localizations commuting with transformation") {
    const GroupPtr c2 = builtin_group("c2");
    const GroupPtr s3 = builtin_group("s3");
    const Biset u = induction_biset(c2, s3, *find_embedding(c2, s3));
    const TabRing r = zmod(6);
    const FunctorPtr t = fixed_point_functor(s3, r);
    const Universe uni_g = build_universe(c2, 3);
    const Universe uni_h = build_universe(s3, 3);
    CHECK(check_cor28(t, powers_subfunctor(r, 3), u, uni_h, uni_g).passed());
}
