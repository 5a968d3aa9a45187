#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "ug/gset.hpp"

using namespace ug;

namespace {

// Brute-force oracle: every function source -> target, filtered for
// equivariance. Only usable for tiny sets.
int count_equivariant_maps(const GSet& x, const GSet& y) {
    if (x.size == 0) return 1;
    if (y.size == 0) return 0;
    long long total = 1;
    for (int i = 0; i < x.size; ++i) total *= y.size;
    int count = 0;
    for (long long code = 0; code < total; ++code) {
        long long c = code;
        std::vector<int> vals(x.size);
        for (int i = 0; i < x.size; ++i) {
            vals[i] = static_cast<int>(c % y.size);
            c /= y.size;
        }
        bool ok = true;
        for (int g = 0; g < static_cast<int>(x.group->order) && ok; ++g)
            for (int e = 0; e < x.size && ok; ++e)
                if (vals[x.act(g, e)] != y.act(g, vals[e])) ok = false;
        if (ok) ++count;
    }
    return count;
}

} // namespace

TEST_CASE("gset validation") {
    const GroupPtr c2 = builtin_group("c2");
    CHECK(regular_gset(c2).size == 2);
    CHECK_THROWS_AS(gset_from_table(c2, {{0, 1}, {0, 0}}), NotAGSet);  // not an action
    CHECK_THROWS_AS(gset_from_table(c2, {{1, 0}, {0, 1}}), NotAGSet);  // identity must fix
    CHECK(empty_gset(c2).size == 0);
    validate_gset(empty_gset(c2));
}

TEST_CASE("orbit-stabilizer") {
    const GroupPtr s3 = builtin_group("s3");
    const GSet reg = regular_gset(s3);
    const GSet triv = trivial_gset(s3, 2);
    const Coproduct cp = coproduct(reg, triv);
    for (int e = 0; e < cp.sum.size; ++e) {
        int orbit = 0;
        std::set<int> seen;
        for (int g = 0; g < 6; ++g) seen.insert(cp.sum.act(g, e));
        orbit = static_cast<int>(seen.size());
        CHECK(orbit * stabilizer(cp.sum, e).order() == 6);
    }
    CHECK(orbits(cp.sum).size() == 3);
    CHECK(orbits(reg).size() + orbits(triv).size() == orbits(cp.sum).size());
}

TEST_CASE("coset spaces") {
    const GroupPtr s3 = builtin_group("s3");
    for (const Subgroup& k : all_subgroups(s3)) {
        const GSet t = transitive_from_subgroup(s3, k);
        CHECK(t.size * k.order() == 6);
        CHECK(orbits(t).size() == 1);
        // The stabilizer of some point is conjugate to K.
        CHECK(subgroups_conjugate(stabilizer(t, 0), k));
    }
}

TEST_CASE("pullback symmetry") {
    const GroupPtr c2 = builtin_group("c2");
    const GSet x = regular_gset(c2);
    const GSet y = coproduct(regular_gset(c2), trivial_gset(c2, 1)).sum;
    const GSet pt = point_gset(c2);
    const GMap f = check_gmap({0, 0}, x, pt);
    const GMap g = check_gmap({0, 0, 0}, y, pt);
    const Pullback pfg = pullback(f, g);
    const Pullback pgf = pullback(g, f);
    CHECK(pfg.p.size == 6);
    CHECK(gset_isomorphism(pfg.p, pgf.p).has_value());
    // Pullback projections commute with the cospan.
    for (int e = 0; e < pfg.p.size; ++e)
        CHECK(f(pfg.to_left(e)) == g(pfg.to_right(e)));
}

TEST_CASE("all_gmaps matches brute force") {
    const GroupPtr c2 = builtin_group("c2");
    const GroupPtr s3 = builtin_group("s3");
    std::vector<GSet> xs = {empty_gset(c2), point_gset(c2), regular_gset(c2),
                            coproduct(regular_gset(c2), trivial_gset(c2, 1)).sum};
    for (const GSet& a : xs)
        for (const GSet& b : xs)
            CHECK(static_cast<int>(all_gmaps(a, b).size()) == count_equivariant_maps(a, b));
    std::vector<GSet> ys = {point_gset(s3), transitive_from_subgroup(s3, all_subgroups(s3)[1]),
                            transitive_from_subgroup(s3, all_subgroups(s3)[4])};
    for (const GSet& a : ys)
        for (const GSet& b : ys)
            CHECK(static_cast<int>(all_gmaps(a, b).size()) == count_equivariant_maps(a, b));
}

TEST_CASE("isomorphism detection") {
    const GroupPtr s3 = builtin_group("s3");
    const auto subs = all_subgroups(s3);
    const GSet a = transitive_from_subgroup(s3, subs[1]);
    const GSet b = transitive_from_subgroup(s3, subs[2]);  // conjugate subgroup
    const GSet c = transitive_from_subgroup(s3, subs[4]);  // C3
    CHECK(gset_isomorphism(a, b).has_value());
    CHECK_FALSE(gset_isomorphism(a, c).has_value());
    const auto iso = gset_isomorphism(a, b);
    CHECK(is_bijective(*iso));
}

TEST_CASE("gmap validation and composition") {
    const GroupPtr c2 = builtin_group("c2");
    const GSet reg = regular_gset(c2);
    const GSet pt = point_gset(c2);
    CHECK_THROWS_AS(check_gmap({0, 0}, trivial_gset(c2, 2), reg), NotEquivariant);
    const GMap f = check_gmap({0, 0}, reg, pt);
    const GMap id = identity_gmap(reg);
    CHECK(compose(f, id).values == f.values);
    CHECK(is_bijective(id));
    CHECK_FALSE(is_bijective(f));
    CHECK(inverse(id).values == id.values);
}
