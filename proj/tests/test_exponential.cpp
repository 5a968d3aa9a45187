#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ug/exponential.hpp"
#include "ug/universe.hpp"

using namespace ug;

namespace {

// Independent oracle: the number of sections over y is the product of the
// p-fiber sizes across the f-fiber of y, counted directly from the raw maps.
long long expected_sections_over(const GMap& f, const GMap& p, int y) {
    long long total = 1;
    for (int x = 0; x < f.source.size; ++x) {
        if (f(x) != y) continue;
        long long fiber = 0;
        for (int a = 0; a < p.source.size; ++a)
            if (p(a) == x) ++fiber;
        total *= fiber;
    }
    return total;
}

} // namespace

TEST_CASE("identity case: Pi_f(X) over f is Y") {
    const GroupPtr c2 = builtin_group("c2");
    const GSet x = regular_gset(c2);
    const GSet y = point_gset(c2);
    const GMap f = check_gmap({0, 0}, x, y);
    const ExponentialDiagram ed = dependent_product(f, identity_gmap(x));
    CHECK(ed.pi_set.size == 1);  // one section per y
    CHECK(gset_isomorphism(ed.pi_set, y).has_value());
}

TEST_CASE("empty fiber gives exactly one empty section") {
    const GroupPtr c2 = builtin_group("c2");
    const GSet x = empty_gset(c2);
    const GSet y = trivial_gset(c2, 2);
    const GMap f = check_gmap({}, x, y);
    const GMap p = identity_gmap(x);
    const ExponentialDiagram ed = dependent_product(f, p);
    CHECK(ed.pi_set.size == 2);  // one empty section per y
    for (const Section& s : ed.sections) CHECK(s.assignment.empty());
}

TEST_CASE("c2 fold example has four sections") {
    const GroupPtr c2 = builtin_group("c2");
    const GSet x = regular_gset(c2);
    const GSet pt = point_gset(c2);
    const Coproduct cp = coproduct(x, x);
    const GMap f = check_gmap({0, 0}, x, pt);
    const GMap p = check_gmap({0, 1, 0, 1}, cp.sum, x);  // fold
    const ExponentialDiagram ed = dependent_product(f, p);
    CHECK(ed.pi_set.size == 4);
    // Pentagon commutes: p∘lam = z_to_x and pi∘rho = f∘z_to_x.
    for (int z = 0; z < ed.z.size; ++z) {
        CHECK(ed.p(ed.lam(z)) == ed.z_to_x(z));
        CHECK(ed.pi(ed.rho(z)) == ed.f(ed.z_to_x(z)));
    }
}

TEST_CASE("fiber-count identity across a swept universe") {
    for (const char* name : {"c2", "c3", "s3"}) {
        const Universe uni = build_universe(builtin_group(name), 3);
        for (const UniverseMap& pm : uni.maps)
            for (const UniverseMap& fm : uni.maps) {
                if (pm.tgt != fm.src) continue;
                const ExponentialDiagram ed = dependent_product(fm.map, pm.map);
                for (int y = 0; y < fm.map.target.size; ++y) {
                    long long got = 0;
                    for (int s = 0; s < ed.pi_set.size; ++s)
                        if (ed.pi(s) == y) ++got;
                    CHECK(got == expected_sections_over(fm.map, pm.map, y));
                }
            }
    }
}

TEST_CASE("coproduct fibers multiply out (functoriality probe)") {
    const GroupPtr c2 = builtin_group("c2");
    const GSet x = regular_gset(c2);
    const GSet pt = point_gset(c2);
    const GMap f = check_gmap({0, 0}, x, pt);
    const Coproduct a = coproduct(x, x);             // two lifts per point
    const Coproduct a2 = coproduct(a.sum, x);        // three lifts per point
    const GMap p2 = check_gmap({0, 1, 0, 1, 0, 1}, a2.sum, x);
    const ExponentialDiagram ed = dependent_product(f, p2);
    CHECK(ed.pi_set.size == 9);  // (2+1)^2
}

TEST_CASE("is_exponential_diagram accepts canonical output") {
    const GroupPtr c2 = builtin_group("c2");
    const GSet x = regular_gset(c2);
    const GSet pt = point_gset(c2);
    const Coproduct cp = coproduct(x, x);
    const GMap f = check_gmap({0, 0}, x, pt);
    const GMap p = check_gmap({0, 1, 0, 1}, cp.sum, x);
    const ExponentialDiagram ed = dependent_product(f, p);
    const auto w = is_exponential_diagram(ed.f, ed.p, ed.pi, ed.lam, ed.rho);
    REQUIRE(w.has_value());
    CHECK(is_bijective(w->pi_iso));
    CHECK(is_bijective(w->z_iso));
}

TEST_CASE("is_exponential_diagram accepts a relabeled diagram") {
    const GroupPtr c2 = builtin_group("c2");
    const GSet x = regular_gset(c2);
    const GSet pt = point_gset(c2);
    const Coproduct cp = coproduct(x, x);
    const GMap f = check_gmap({0, 0}, x, pt);
    const GMap p = check_gmap({0, 1, 0, 1}, cp.sum, x);
    const ExponentialDiagram ed = dependent_product(f, p);
    // Relabel Pi by a permutation conjugating the action (swap 0 <-> last).
    const int n = ed.pi_set.size;
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    std::swap(perm[0], perm[n - 1]);
    GSet pi2 = ed.pi_set;
    for (int g = 0; g < 2; ++g)
        for (int i = 0; i < n; ++i) pi2.act_[g * n + i] = perm[ed.pi_set.act(g, perm[i])];
    validate_gset(pi2);
    std::vector<int> pi_vals(n);
    for (int i = 0; i < n; ++i) pi_vals[i] = ed.pi(perm[i]);
    const GMap pi2_map = check_gmap(pi_vals, pi2, pt);
    std::vector<int> rho_vals(ed.z.size);
    for (int z = 0; z < ed.z.size; ++z) rho_vals[z] = perm[ed.rho(z)];
    const GMap rho2 = check_gmap(rho_vals, ed.z, pi2);
    CHECK(is_exponential_diagram(ed.f, ed.p, pi2_map, ed.lam, rho2).has_value());
}

TEST_CASE("is_exponential_diagram rejects a corrupted pentagon") {
    const GroupPtr c2 = builtin_group("c2");
    const GSet x = regular_gset(c2);
    const GSet pt = point_gset(c2);
    const Coproduct cp = coproduct(x, x);
    const GMap f = check_gmap({0, 0}, x, pt);
    const GMap p = check_gmap({0, 1, 0, 1}, cp.sum, x);
    const ExponentialDiagram ed = dependent_product(f, p);
    // Collapse rho onto a single orbit: pentagon breaks or iso search fails.
    const GSet small = point_gset(c2);
    const GMap bad_pi = check_gmap({0}, small, pt);
    const GMap bad_rho = check_gmap(std::vector<int>(ed.z.size, 0), ed.z, small);
    CHECK_FALSE(is_exponential_diagram(ed.f, ed.p, bad_pi, ed.lam, bad_rho).has_value());
}

TEST_CASE("size guard") {
    const GroupPtr c2 = builtin_group("c2");
    const GSet x = regular_gset(c2);
    const GSet pt = point_gset(c2);
    const Coproduct cp = coproduct(x, x);
    const GMap f = check_gmap({0, 0}, x, pt);
    const GMap p = check_gmap({0, 1, 0, 1}, cp.sum, x);
    CHECK_THROWS_AS(dependent_product(f, p, 2), SizeGuardExceeded);
}
