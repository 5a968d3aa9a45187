#include "ug/bispan.hpp"

#include "ug/exponential.hpp"

namespace ug {

Bispan bispan_from_maps(const GMap& w, const GMap& v, const GMap& u) {
    if (!(w.source == v.source)) throw ObjectMismatch("bispan legs w and v disagree on A");
    if (!(v.target == u.source)) throw ObjectMismatch("bispan legs v and u disagree on B");
    check_gmap(w.values, w.source, w.target);
    check_gmap(v.values, v.source, v.target);
    check_gmap(u.values, u.source, u.target);
    return {w.target, u.target, w.source, v.target, w, v, u};
}

Bispan identity_bispan(const GSet& x) {
    const GMap id = identity_gmap(x);
    return {x, x, x, x, id, id, id};
}

Bispan gen_T(const GMap& u) {
    const GMap id = identity_gmap(u.source);
    return {u.source, u.target, u.source, u.source, id, id, u};
}

Bispan gen_N(const GMap& v) {
    const GMap ida = identity_gmap(v.source);
    const GMap idb = identity_gmap(v.target);
    return {v.source, v.target, v.source, v.target, ida, v, idb};
}

Bispan gen_R(const GMap& w) {
    const GMap id = identity_gmap(w.source);
    return {w.target, w.source, w.source, w.source, w, id, id};
}

std::optional<BispanEquivalence> bispans_equivalent(const Bispan& s, const Bispan& t) {
    if (!(s.x == t.x) || !(s.y == t.y)) return std::nullopt;
    if (s.a.size != t.a.size || s.b.size != t.b.size) return std::nullopt;

    std::optional<BispanEquivalence> found;
    // Outer search over beta: B -> B' with u' ∘ beta = u; inner search over
    // alpha: A -> A' with w' ∘ alpha = w and v' ∘ alpha = beta ∘ v.
    for_each_equivariant_bijection(
        s.b, t.b, [&](int bb, int tb) { return t.u(tb) == s.u(bb); },
        [&](const std::vector<int>& beta) {
            return for_each_equivariant_bijection(
                s.a, t.a,
                [&](int aa, int ta) {
                    return t.w(ta) == s.w(aa) && t.v(ta) == beta[s.v(aa)];
                },
                [&](const std::vector<int>& alpha) {
                    found = BispanEquivalence{check_gmap(alpha, s.a, t.a),
                                              check_gmap(beta, s.b, t.b)};
                    return true;
                });
        });
    return found;
}

Bispan compose_bispans(const Bispan& s, const Bispan& t, long long max_sections) {
    if (!(s.y == t.x)) throw ObjectMismatch("bispan composition: middle objects differ");
    // s: X <-w1- A1 -v1-> B1 -u1-> Y,  t: Y <-w2- A2 -v2-> B2 -u2-> Z.
    const Pullback bp = pullback(s.u, t.w);          // B' = B1 ×_Y A2
    const Pullback ap = pullback(s.v, bp.to_left);   // A' = A1 ×_B1 B'
    const ExponentialDiagram ed =
        dependent_product(t.v, bp.to_right, max_sections);  // Π over B2 from B' -> A2
    // ed.z = A2 ×_B2 Π with ed.lam: Z -> B' and ed.rho: Z -> Π.
    const Pullback fin = pullback(ap.to_right, ed.lam);  // A'' = A' ×_{B'} Z

    const GMap w = compose(s.w, compose(ap.to_left, fin.to_left));
    const GMap v = compose(ed.rho, fin.to_right);
    const GMap u = compose(t.u, ed.pi);
    return bispan_from_maps(w, v, u);
}

std::pair<Bispan, Bispan> product_projections(const GSet& x, const GSet& y) {
    const Coproduct cp = coproduct(x, y);
    return {gen_R(cp.in_left), gen_R(cp.in_right)};
}

Bispan apply_biset(const Biset& u, const Bispan& s) {
    const UComposite ux = u_apply_object(u, s.x);
    const UComposite ua = u_apply_object(u, s.a);
    const UComposite ub = u_apply_object(u, s.b);
    const UComposite uy = u_apply_object(u, s.y);
    return bispan_from_maps(u_apply_map(s.w, ua, ux), u_apply_map(s.v, ua, ub),
                            u_apply_map(s.u, ub, uy));
}

std::vector<int> eval_bispan(const TambaraFunctor& t, const Bispan& s) {
    const RingModel& mx = t.ring(s.x);
    std::vector<int> out(mx.ring.size);
    for (int i = 0; i < mx.ring.size; ++i)
        out[i] = t.elem_index(s.y, t.plus(s.u, t.dot(s.v, t.star(s.w, mx.elems[i]))));
    return out;
}

} // namespace ug
