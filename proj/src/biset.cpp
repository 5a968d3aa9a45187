#include "ug/biset.hpp"

#include <algorithm>

namespace ug {

Biset validate_biset(GroupPtr hgroup, GroupPtr ggroup,
                     const std::vector<std::vector<int>>& lact,
                     const std::vector<std::vector<int>>& ract) {
    const int nh = hgroup->order;
    const int ng = ggroup->order;
    if (static_cast<int>(lact.size()) != nh) throw IncompatibleActions("left action needs |H| rows");
    const int n = lact.empty() ? 0 : static_cast<int>(lact[0].size());
    if (static_cast<int>(ract.size()) != n) throw IncompatibleActions("right action needs |U| rows");

    Biset u;
    u.hgroup = std::move(hgroup);
    u.ggroup = std::move(ggroup);
    u.size = n;
    u.lact_.reserve(static_cast<size_t>(nh) * n);
    for (const auto& row : lact) {
        if (static_cast<int>(row.size()) != n) throw IncompatibleActions("ragged left action table");
        for (int v : row) {
            if (v < 0 || v >= n) throw IncompatibleActions("left action value out of range");
            u.lact_.push_back(v);
        }
    }
    u.ract_.reserve(static_cast<size_t>(n) * ng);
    for (const auto& row : ract) {
        if (static_cast<int>(row.size()) != ng) throw IncompatibleActions("right action needs |G| columns");
        for (int v : row) {
            if (v < 0 || v >= n) throw IncompatibleActions("right action value out of range");
            u.ract_.push_back(v);
        }
    }
    const auto& gh = *u.hgroup;
    const auto& gg = *u.ggroup;
    for (int e = 0; e < n; ++e) {
        if (u.lact(0, e) != e) throw IncompatibleActions("left identity fails at u=" + std::to_string(e));
        if (u.ract(e, 0) != e) throw IncompatibleActions("right identity fails at u=" + std::to_string(e));
    }
    for (int a = 0; a < nh; ++a)
        for (int b = 0; b < nh; ++b)
            for (int e = 0; e < n; ++e)
                if (u.lact(a, u.lact(b, e)) != u.lact(gh.mul(a, b), e))
                    throw IncompatibleActions("left action not associative at (h=" + std::to_string(a) +
                                              ", h'=" + std::to_string(b) + ", u=" + std::to_string(e) + ")");
    for (int e = 0; e < n; ++e)
        for (int a = 0; a < ng; ++a)
            for (int b = 0; b < ng; ++b)
                if (u.ract(u.ract(e, a), b) != u.ract(e, gg.mul(a, b)))
                    throw IncompatibleActions("right action not associative at (u=" + std::to_string(e) +
                                              ", g=" + std::to_string(a) + ", g'=" + std::to_string(b) + ")");
    for (int h = 0; h < nh; ++h)
        for (int e = 0; e < n; ++e)
            for (int g = 0; g < ng; ++g)
                if (u.ract(u.lact(h, e), g) != u.lact(h, u.ract(e, g)))
                    throw IncompatibleActions("(hu)g != h(ug) at (h=" + std::to_string(h) +
                                              ", u=" + std::to_string(e) + ", g=" + std::to_string(g) + ")");
    return u;
}

Biset identity_biset(const GroupPtr& g) {
    const int n = g->order;
    std::vector<std::vector<int>> lact(n, std::vector<int>(n)), ract(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            lact[a][b] = g->mul(a, b);
            ract[a][b] = g->mul(a, b);
        }
    return validate_biset(g, g, lact, ract);
}

Biset induction_biset(const GroupPtr& sub, const GroupPtr& big, const std::vector<int>& embedding) {
    const int n = big->order;
    std::vector<std::vector<int>> lact(n, std::vector<int>(n));
    std::vector<std::vector<int>> ract(n, std::vector<int>(sub->order));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) lact[a][b] = big->mul(a, b);
    for (int u = 0; u < n; ++u)
        for (int g = 0; g < sub->order; ++g) ract[u][g] = big->mul(u, embedding[g]);
    return validate_biset(big, sub, lact, ract);
}

Biset restriction_biset(const GroupPtr& sub, const GroupPtr& big, const std::vector<int>& embedding) {
    const int n = big->order;
    std::vector<std::vector<int>> lact(sub->order, std::vector<int>(n));
    std::vector<std::vector<int>> ract(n, std::vector<int>(n));
    for (int h = 0; h < sub->order; ++h)
        for (int u = 0; u < n; ++u) lact[h][u] = big->mul(embedding[h], u);
    for (int u = 0; u < n; ++u)
        for (int g = 0; g < n; ++g) ract[u][g] = big->mul(u, g);
    return validate_biset(sub, big, lact, ract);
}

UComposite u_apply_object(const Biset& u, const GSet& x, bool verify, RelationReading reading) {
    if (!same_group(u.ggroup, x.group)) throw GroupMismatch("u_apply_object: X is not over the right group of U");
    const int nu = u.size;
    const int nx = x.size;
    const int ng = u.ggroup->order;
    const auto& gg = *u.ggroup;

    UComposite uc;
    uc.biset = u;
    uc.source = x;
    uc.class_of.assign(static_cast<size_t>(nu) * std::max(nx, 1), -1);

    // Admissibility: every g fixing u on the right must fix x.
    std::vector<bool> admissible(static_cast<size_t>(nu) * std::max(nx, 1), false);
    for (int uu = 0; uu < nu; ++uu)
        for (int xx = 0; xx < nx; ++xx) {
            bool ok = true;
            for (int g = 0; g < ng && ok; ++g)
                if (u.ract(uu, g) == uu && x.act(g, xx) != xx) ok = false;
            admissible[uu * nx + xx] = ok;
        }

    // Classes: orbits of the right-translation relation, discovered from the
    // lexicographically least member so class reps are canonical.
    for (int uu = 0; uu < nu; ++uu)
        for (int xx = 0; xx < nx; ++xx) {
            const int pi = uu * nx + xx;
            if (!admissible[pi] || uc.class_of[pi] >= 0) continue;
            const int cls = static_cast<int>(uc.reps.size());
            uc.reps.emplace_back(uu, xx);
            std::vector<std::pair<int, int>> stack{{uu, xx}};
            uc.class_of[pi] = cls;
            while (!stack.empty()) {
                auto [cu, cx] = stack.back();
                stack.pop_back();
                for (int g = 0; g < ng; ++g) {
                    int du = u.ract(cu, g);
                    int dx = reading == RelationReading::RightOrbit ? x.act(gg.inv(g), cx)
                                                                    : x.act(g, cx);
                    int di = du * nx + dx;
                    if (!admissible[di]) {
                        if (reading == RelationReading::RightOrbit)
                            throw WellDefinednessFailure(
                                "admissibility is not class-invariant at (u=" + std::to_string(du) +
                                ", x=" + std::to_string(dx) + ")");
                        continue;  // the alternative reading can leave the admissible set
                    }
                    if (uc.class_of[di] < 0) {
                        uc.class_of[di] = cls;
                        stack.emplace_back(du, dx);
                    } else if (uc.class_of[di] != cls) {
                        throw WellDefinednessFailure("relation closure produced overlapping classes");
                    }
                }
            }
        }

    const int n = static_cast<int>(uc.reps.size());
    const int nh = u.hgroup->order;
    uc.hset.group = u.hgroup;
    uc.hset.size = n;
    uc.hset.act_.resize(static_cast<size_t>(nh) * n);
    for (int h = 0; h < nh; ++h)
        for (int c = 0; c < n; ++c) {
            auto [cu, cx] = uc.reps[c];
            int d = uc.class_of[u.lact(h, cu) * nx + cx];
            if (d < 0)
                throw WellDefinednessFailure("H-action left the admissible set at class " +
                                             std::to_string(c));
            uc.hset.act_[h * n + c] = d;
        }
    if (verify) {
        // h[u,x] = [hu,x] must not depend on the representative.
        for (int uu = 0; uu < nu; ++uu)
            for (int xx = 0; xx < nx; ++xx) {
                int c = uc.class_of[uu * nx + xx];
                if (c < 0) continue;
                for (int h = 0; h < nh; ++h) {
                    int d = uc.class_of[u.lact(h, uu) * nx + xx];
                    if (d != uc.hset.act_[h * n + c])
                        throw WellDefinednessFailure(
                            "H-action depends on the representative at (h=" + std::to_string(h) +
                            ", u=" + std::to_string(uu) + ", x=" + std::to_string(xx) + ")");
                }
            }
    }
    validate_gset(uc.hset);
    return uc;
}

GMap u_apply_map(const GMap& f, const UComposite& ux, const UComposite& uy, bool verify) {
    if (!(f.source == ux.source) || !(f.target == uy.source))
        throw ShapeMismatch("u_apply_map: composites do not match the map");
    const int nx = ux.source.size;
    const int n = static_cast<int>(ux.reps.size());
    std::vector<int> values(n, -1);
    for (int c = 0; c < n; ++c) {
        auto [uu, xx] = ux.reps[c];
        int d = uy.pair_class(uu, f.values[xx]);
        if (d < 0)
            throw WellDefinednessFailure("U∘f: image pair inadmissible at class " + std::to_string(c));
        values[c] = d;
    }
    if (verify) {
        for (int uu = 0; uu < ux.biset.size; ++uu)
            for (int xx = 0; xx < nx; ++xx) {
                int c = ux.class_of[uu * nx + xx];
                if (c < 0) continue;
                if (uy.pair_class(uu, f.values[xx]) != values[c])
                    throw WellDefinednessFailure("U∘f depends on the representative at (u=" +
                                                 std::to_string(uu) + ", x=" + std::to_string(xx) + ")");
            }
    }
    return check_gmap(values, ux.hset, uy.hset);
}

namespace {

// The Φ value for one admissible pair (u, pidx) of U∘Pi_f(A):
// ([u,y], τ) with τ([u0,x0]) = [u, σ(g0^-1 x0)] for any g0 with u = u0·g0
// and g0·y = f(x0).
int phi_value(const PreservationData& d, const Biset& u, int uu, int pidx, bool verify) {
    const GSet& x = d.ed.f.source;
    const GSet& y = d.ed.f.target;
    const Section& s = d.ed.sections[pidx];
    const int yy = s.base;
    int b = d.uy.pair_class(uu, yy);
    if (b < 0) throw AlgebraError("internal: base pair [u,y] inadmissible");
    const auto& hfiber = d.hed.fibers[b];
    Section target;
    target.base = b;
    target.assignment.reserve(hfiber.size());
    for (int c0 : hfiber) {
        auto [u0, x0] = d.ux.reps[c0];
        int value = -1;
        for (int g0 = 0; g0 < x.group->order; ++g0) {
            if (u.ract(u0, g0) != uu) continue;
            if (y.act(g0, yy) != d.ed.f.values[x0]) continue;
            int xd = x.act(x.group->inv(g0), x0);  // g0^-1 x0 ∈ f^-1(y)
            const auto& fib = d.ed.fibers[yy];
            auto it = std::lower_bound(fib.begin(), fib.end(), xd);
            if (it == fib.end() || *it != xd) throw AlgebraError("internal: g0^-1 x0 not in fiber");
            int aval = s.assignment[static_cast<int>(it - fib.begin())];
            int vclass = d.ua.pair_class(uu, aval);
            if (vclass < 0) throw AlgebraError("internal: [u, σ(g0^-1 x0)] inadmissible");
            if (value < 0) {
                value = vclass;
                if (!verify) break;
            } else if (value != vclass) {
                throw WellDefinednessFailure("Φ: value depends on the witness g0 at class pair (u=" +
                                             std::to_string(uu) + ", fiber class " + std::to_string(c0) + ")");
            }
        }
        if (value < 0)
            throw NoWitnessG0("Φ: no g0 with u = u0·g0 and g0·y = f(x0) for fiber class " +
                              std::to_string(c0));
        target.assignment.push_back(value);
    }
    int idx = d.hed.section_index(target);
    if (idx < 0) throw AlgebraError("internal: Φ image is not a section of the transported product");
    return idx;
}

// The Ψ value for one element (b, τ) of Pi_{U∘f}(U∘A), evaluated through the
// representative (u, y) of the base class b.
int psi_value(const PreservationData& d, const Biset& u, int uu, int yy, int sidx, bool verify) {
    (void)u;
    const Section& sec = d.hed.sections[sidx];
    const GSet& a = d.ed.p.source;
    const auto& fib = d.ed.fibers[yy];
    const auto& hfiber = d.hed.fibers[sec.base];
    Section target;
    target.base = yy;
    target.assignment.reserve(fib.size());
    for (int xd : fib) {
        int q = d.ux.pair_class(uu, xd);
        if (q < 0)
            throw NoSolution("Ψ: pair [u,x†] is not an element of U∘X (u=" + std::to_string(uu) +
                             ", x=" + std::to_string(xd) + ")");
        auto it = std::lower_bound(hfiber.begin(), hfiber.end(), q);
        if (it == hfiber.end() || *it != q) throw AlgebraError("internal: [u,x†] missing from the fiber");
        int t = sec.assignment[static_cast<int>(it - hfiber.begin())];
        // The unique a with [u,a] = τ([u,x†]); uniqueness needs the right-freeness
        // of U and is re-checked here.
        int found = -1;
        for (int aa = 0; aa < a.size; ++aa) {
            if (d.ua.pair_class(uu, aa) != t) continue;
            if (found >= 0)
                throw WellDefinednessFailure("Ψ: [u,a] = [u,a'] with a != a' (a=" + std::to_string(found) +
                                             ", a'=" + std::to_string(aa) + ")");
            found = aa;
            if (!verify) break;
        }
        if (found < 0)
            throw NoSolution("Ψ: no a with [u,a] = τ([u,x†]) at x=" + std::to_string(xd));
        if (d.ed.p.values[found] != xd)
            throw NoSolution("Ψ: solution violates p∘σ = incl at x=" + std::to_string(xd));
        target.assignment.push_back(found);
    }
    int pidx = d.ed.section_index(target);
    if (pidx < 0) throw AlgebraError("internal: Ψ produced a non-section");
    int cls = d.upi.pair_class(uu, pidx);
    if (cls < 0) throw NoSolution("Ψ: pair [u,(y,σ)] is inadmissible");
    return cls;
}

} // namespace

PreservationData build_preservation(const Biset& u, const GMap& f, const GMap& p, bool verify,
                                    long long max_sections) {
    PreservationData d;
    d.ed = dependent_product(f, p, max_sections);
    d.ux = u_apply_object(u, f.source, verify);
    d.uy = u_apply_object(u, f.target, verify);
    d.ua = u_apply_object(u, p.source, verify);
    d.upi = u_apply_object(u, d.ed.pi_set, verify);
    d.uz = u_apply_object(u, d.ed.z, verify);
    d.uf = u_apply_map(f, d.ux, d.uy, verify);
    d.up = u_apply_map(p, d.ua, d.ux, verify);
    d.upi_map = u_apply_map(d.ed.pi, d.upi, d.uy, verify);
    d.ulam = u_apply_map(d.ed.lam, d.uz, d.ua, verify);
    d.urho = u_apply_map(d.ed.rho, d.uz, d.upi, verify);
    d.hed = dependent_product(d.uf, d.up, max_sections);

    const int nx = d.ed.pi_set.size;
    std::vector<int> phiv(d.upi.hset.size, -1);
    for (int c = 0; c < d.upi.hset.size; ++c) {
        auto [uu, pidx] = d.upi.reps[c];
        phiv[c] = phi_value(d, u, uu, pidx, verify);
        if (verify) {
            for (int u2 = 0; u2 < u.size; ++u2)
                for (int p2 = 0; p2 < nx; ++p2)
                    if (d.upi.class_of[u2 * nx + p2] == c)
                        if (phi_value(d, u, u2, p2, verify) != phiv[c])
                            throw WellDefinednessFailure("Φ depends on the representative at class " +
                                                         std::to_string(c));
        }
    }
    d.phi = check_gmap(phiv, d.upi.hset, d.hed.pi_set);

    const int ny = f.target.size;
    std::vector<int> psiv(d.hed.pi_set.size, -1);
    for (int e = 0; e < d.hed.pi_set.size; ++e) {
        int b = d.hed.sections[e].base;
        auto [uu, yy] = d.uy.reps[b];
        psiv[e] = psi_value(d, u, uu, yy, e, verify);
        if (verify) {
            for (int u2 = 0; u2 < u.size; ++u2)
                for (int y2 = 0; y2 < ny; ++y2)
                    if (d.uy.class_of[u2 * ny + y2] == b)
                        if (psi_value(d, u, u2, y2, e, verify) != psiv[e])
                            throw WellDefinednessFailure("Ψ depends on the base representative at element " +
                                                         std::to_string(e));
        }
    }
    d.psi = check_gmap(psiv, d.hed.pi_set, d.upi.hset);
    return d;
}

GMap phi_map(const Biset& u, const GMap& f, const GMap& p, bool verify) {
    return build_preservation(u, f, p, verify).phi;
}

GMap psi_map(const Biset& u, const GMap& f, const GMap& p, bool verify) {
    return build_preservation(u, f, p, verify).psi;
}

Report check_preservation(const Biset& u, const GMap& f, const GMap& p, bool verify,
                          long long max_sections) {
    Report r;
    r.command = "check-preservation";
    auto d = build_preservation(u, f, p, verify, max_sections);

    bool inv = true;
    std::string witness;
    for (int c = 0; c < d.upi.hset.size && inv; ++c)
        if (d.psi.values[d.phi.values[c]] != c) {
            inv = false;
            witness = "Ψ∘Φ != id at class " + std::to_string(c);
        }
    for (int e = 0; e < d.hed.pi_set.size && inv; ++e)
        if (d.phi.values[d.psi.values[e]] != e) {
            inv = false;
            witness = "Φ∘Ψ != id at element " + std::to_string(e);
        }
    r.add("phi-psi-mutually-inverse", inv, witness);

    auto pentagon = is_exponential_diagram(d.uf, d.up, d.upi_map, d.ulam, d.urho, max_sections);
    r.add("exponential-diagram-preserved", pentagon.has_value(),
          "no isomorphism onto the canonical transported diagram");

    {
        auto cop = coproduct(f.source, f.target);
        auto ucop = u_apply_object(u, cop.sum, verify);
        auto hcop = coproduct(d.ux.hset, d.uy.hset);
        bool ok = gset_isomorphism(ucop.hset, hcop.sum).has_value();
        r.add("coproduct-preserved", ok,
              "U∘(X⊔Y) has " + std::to_string(ucop.hset.size) + " elements, (U∘X)⊔(U∘Y) has " +
                  std::to_string(hcop.sum.size));
    }

    {
        // U∘(X ×_Y Pi) must be the pullback of (U∘f, U∘pi) via the forced map.
        auto uzx = u_apply_map(d.ed.z_to_x, d.uz, d.ux, verify);
        auto pbh = pullback(d.uf, d.upi_map);
        bool ok = d.uz.hset.size == pbh.p.size;
        std::vector<bool> hit(pbh.p.size, false);
        for (int c = 0; c < d.uz.hset.size && ok; ++c) {
            int idx = pbh.pair_index(uzx.values[c], d.urho.values[c]);
            if (idx < 0 || hit[idx]) ok = false;
            else hit[idx] = true;
        }
        r.add("pullback-preserved", ok, "U∘Z does not match the pullback of (U∘f, U∘π)");
    }
    return r;
}

} // namespace ug
