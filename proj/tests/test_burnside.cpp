#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ug/burnside.hpp"

using namespace ug;

TEST_CASE("basis over a point lists subgroup conjugacy classes") {
    const GroupPtr c2 = builtin_group("c2");
    const GroupPtr s3 = builtin_group("s3");
    // Over pt the classes are conjugacy classes of subgroups: 2 for C2, 4 for S3.
    CHECK(BurnsideFunctor(c2).basis(point_gset(c2)).classes.size() == 2);
    CHECK(BurnsideFunctor(s3).basis(point_gset(s3)).classes.size() == 4);
    // Over the regular set every stabilizer is trivial: one class per orbit
    // of pairs (x, e), i.e. exactly one.
    CHECK(BurnsideFunctor(s3).basis(regular_gset(s3)).classes.size() == 1);
}

TEST_CASE("realize and decompose are mutually inverse") {
    const GroupPtr s3 = builtin_group("s3");
    const BurnsideFunctor bt(s3);
    const GSet x = coproduct(point_gset(s3), transitive_from_subgroup(s3, all_subgroups(s3)[1])).sum;
    const BurnsideBasis& b = bt.basis(x);
    // Walk over all 0/1/2 vectors of moderate support.
    std::vector<long long> a(b.classes.size(), 0);
    for (size_t i = 0; i < b.classes.size(); ++i) a[i] = static_cast<long long>(i % 3);
    const GMap p = bt.realize(x, a);
    CHECK(bt.decompose(p) == a);
    // And in the other direction: decompose of a hand-made map round-trips.
    const GMap q = bt.realize(x, bt.one(x));
    CHECK(bt.decompose(q) == bt.one(x));
}

TEST_CASE("transfer of one adds the class of the source") {
    const GroupPtr c2 = builtin_group("c2");
    const BurnsideFunctor bt(c2);
    const GSet x = regular_gset(c2);
    const GSet pt = point_gset(c2);
    const GMap f = check_gmap({0, 0}, x, pt);
    // f_+(1 over X) is the class of X itself as an object over pt.
    const BurnsideFunctor::Val v = bt.plus(f, bt.one(x));
    const BurnsideBasis& b = bt.basis(pt);
    BurnsideFunctor::Val expect(b.classes.size(), 0);
    expect[b.index_of(0, {0})] = 1;  // free orbit: trivial stabilizer
    CHECK(v == expect);
}

TEST_CASE("norm along the fold multiplies fiber counts") {
    const GroupPtr c2 = builtin_group("c2");
    const BurnsideFunctor bt(c2);
    const GSet x = regular_gset(c2);
    const GSet pt = point_gset(c2);
    const GMap f = check_gmap({0, 0}, x, pt);
    // The norm of (2 copies of X over X) along f has 2^2 = 4 total points.
    const Coproduct cp = coproduct(x, x);
    const GMap p = check_gmap({0, 1, 0, 1}, cp.sum, x);
    const BurnsideFunctor::Val v = bt.dot(f, bt.decompose(p));
    const GMap realized = bt.realize(pt, v);
    CHECK(realized.source.size == 4);
}

TEST_CASE("star pulls back cardinalities") {
    const GroupPtr c2 = builtin_group("c2");
    const BurnsideFunctor bt(c2);
    const GSet x = regular_gset(c2);
    const GSet pt = point_gset(c2);
    const GMap f = check_gmap({0, 0}, x, pt);
    // Pulling the class of X over pt back along f doubles the points over X.
    const BurnsideFunctor::Val over_pt = bt.plus(f, bt.one(x));
    const BurnsideFunctor::Val pulled = bt.star(f, over_pt);
    CHECK(bt.realize(x, pulled).source.size == 4);
}

TEST_CASE("semiring laws and structure axioms hold") {
    for (const char* name : {"c2", "c3", "s3"}) {
        const GroupPtr g = builtin_group(name);
        const BurnsideFunctor bt(g);
        const Universe uni = build_universe(g, 3);
        const Report rep = check_semi_axioms(bt, uni);
        CHECK(rep.passed());
    }
}
