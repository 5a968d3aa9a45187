#include "ug/exponential.hpp"

#include <algorithm>

namespace ug {

int ExponentialDiagram::section_index(const Section& s) const {
    auto it = std::lower_bound(sections.begin(), sections.end(), s);
    if (it == sections.end() || !(*it == s)) return -1;
    return static_cast<int>(it - sections.begin());
}

ExponentialDiagram dependent_product(const GMap& f, const GMap& p, long long max_sections) {
    if (!(p.target == f.source)) throw ShapeMismatch("dependent_product: p must land in the source of f");
    const GSet& x = f.source;
    const GSet& y = f.target;
    const GSet& a = p.source;

    ExponentialDiagram ed;
    ed.f = f;
    ed.p = p;

    ed.fibers.assign(y.size, {});
    for (int e = 0; e < x.size; ++e) ed.fibers[f.values[e]].push_back(e);
    std::vector<std::vector<int>> p_fiber(x.size);
    for (int e = 0; e < a.size; ++e) p_fiber[p.values[e]].push_back(e);

    // Enumerate sections in lexicographic (y, assignment) order via an odometer
    // over the p-fibers of each f-fiber point. An empty f-fiber contributes one
    // empty section; an empty p-fiber kills every section over that y.
    for (int yy = 0; yy < y.size; ++yy) {
        const auto& fib = ed.fibers[yy];
        long long count = 1;
        bool dead = false;
        for (int xx : fib) {
            count *= static_cast<long long>(p_fiber[xx].size());
            if (count == 0) {
                dead = true;
                break;
            }
        }
        if (dead) continue;
        if (static_cast<long long>(ed.sections.size()) + count > max_sections)
            throw SizeGuardExceeded("dependent product would exceed " +
                                    std::to_string(max_sections) + " sections");
        std::vector<size_t> digit(fib.size(), 0);
        while (true) {
            Section s;
            s.base = yy;
            s.assignment.reserve(fib.size());
            for (size_t i = 0; i < fib.size(); ++i) s.assignment.push_back(p_fiber[fib[i]][digit[i]]);
            ed.sections.push_back(std::move(s));
            // advance odometer, last digit fastest
            size_t i = fib.size();
            while (i > 0) {
                --i;
                if (++digit[i] < p_fiber[fib[i]].size()) break;
                digit[i] = 0;
                if (i == 0) goto done_y;
            }
            if (fib.empty()) break;
        }
    done_y:;
    }
    std::sort(ed.sections.begin(), ed.sections.end());

    const int n = static_cast<int>(ed.sections.size());
    const int order = x.group->order;
    ed.pi_set.group = x.group;
    ed.pi_set.size = n;
    ed.pi_set.act_.resize(static_cast<size_t>(order) * n);
    for (int g = 0; g < order; ++g) {
        const int gi = x.group->inv(g);
        for (int e = 0; e < n; ++e) {
            const Section& s = ed.sections[e];
            Section t;
            t.base = y.act(g, s.base);
            const auto& tf = ed.fibers[t.base];
            t.assignment.resize(tf.size());
            for (size_t i = 0; i < tf.size(); ++i) {
                int xp = tf[i];                 // element of f^{-1}(g·y)
                int x0 = x.act(gi, xp);         // back in f^{-1}(y)
                auto it = std::lower_bound(ed.fibers[s.base].begin(), ed.fibers[s.base].end(), x0);
                int pos = static_cast<int>(it - ed.fibers[s.base].begin());
                t.assignment[i] = a.act(g, s.assignment[pos]);  // (ᵍσ)(x') = g·σ(g⁻¹x')
            }
            int idx = ed.section_index(t);
            if (idx < 0)
                throw AlgebraError("internal: G-action left the section set");
            ed.pi_set.act_[g * n + e] = idx;
        }
    }
    validate_gset(ed.pi_set);

    std::vector<int> piv(n);
    for (int e = 0; e < n; ++e) piv[e] = ed.sections[e].base;
    ed.pi = check_gmap(piv, ed.pi_set, y);

    auto pb = pullback(ed.f, ed.pi);
    ed.z = pb.p;
    ed.z_to_x = pb.to_left;
    ed.rho = pb.to_right;

    std::vector<int> lamv(ed.z.size);
    for (int e = 0; e < ed.z.size; ++e) {
        auto [xx, se] = pb.pairs[e];
        const Section& s = ed.sections[se];
        const auto& fib = ed.fibers[s.base];
        auto it = std::lower_bound(fib.begin(), fib.end(), xx);
        lamv[e] = s.assignment[static_cast<int>(it - fib.begin())];  // e(x,(y,σ)) = σ(x)
    }
    ed.lam = check_gmap(lamv, ed.z, a);
    return ed;
}

std::optional<PentagonWitness> is_exponential_diagram(const GMap& f, const GMap& p,
                                                      const GMap& pi, const GMap& lam,
                                                      const GMap& rho, long long max_sections) {
    // Shape checks: f: X->Y, p: A->X, pi: P->Y, lam: Z->A, rho: Z->P.
    if (!(p.target == f.source)) throw ShapeMismatch("pentagon: p must end in the source of f");
    if (!(pi.target == f.target)) throw ShapeMismatch("pentagon: pi must end in the target of f");
    if (!(lam.target == p.source)) throw ShapeMismatch("pentagon: lam must end in the source of p");
    if (!(rho.source == lam.source)) throw ShapeMismatch("pentagon: rho and lam need one source");
    if (!(rho.target == pi.source)) throw ShapeMismatch("pentagon: rho must end in the source of pi");
    // Commutativity: pi∘rho = f∘p∘lam.
    for (int e = 0; e < rho.source.size; ++e)
        if (pi.values[rho.values[e]] != f.values[p.values[lam.values[e]]])
            throw ShapeMismatch("pentagon does not commute at z=" + std::to_string(e));

    auto canon = dependent_product(f, p, max_sections);
    const GSet& cp = canon.pi_set;
    const GSet& pset = pi.source;
    const GSet& zset = rho.source;
    if (pset.size != cp.size || zset.size != canon.z.size) return std::nullopt;

    std::optional<PentagonWitness> witness;
    for_each_equivariant_bijection(
        pset, cp,
        [&](int e, int t) { return pi.values[e] == canon.pi.values[t]; },
        [&](const std::vector<int>& piso) {
            // z_iso is forced: z must go to the canonical pair (p(lam z), piso(rho z)).
            std::vector<int> ziso(zset.size, -1);
            std::vector<bool> used(canon.z.size, false);
            auto pairs_of = [&](int e) {
                return std::make_pair(p.values[lam.values[e]], piso[rho.values[e]]);
            };
            for (int e = 0; e < zset.size; ++e) {
                auto [xx, ss] = pairs_of(e);
                int idx = -1;
                for (int c = 0; c < canon.z.size; ++c)
                    if (canon.z_to_x.values[c] == xx && canon.rho.values[c] == ss) {
                        idx = c;
                        break;
                    }
                if (idx < 0 || used[idx]) return false;  // keep searching piso
                if (canon.lam.values[idx] != lam.values[e]) return false;
                ziso[e] = idx;
                used[idx] = true;
            }
            // Equivariance of the forced map follows from its defining formula,
            // but check it anyway before accepting.
            try {
                witness = PentagonWitness{GMap{pset, cp, piso}, check_gmap(ziso, zset, canon.z)};
            } catch (const NotEquivariant&) {
                return false;
            }
            return true;
        });
    return witness;
}

} // namespace ug
