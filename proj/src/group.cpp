#include "ug/group.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace ug {

bool same_group(const Group& a, const Group& b) {
    return a.order == b.order && a.mul_ == b.mul_;
}

bool Subgroup::contains(int g) const {
    return std::binary_search(members.begin(), members.end(), g);
}

GroupPtr group_from_table(const std::vector<std::vector<int>>& mul) {
    const int n = static_cast<int>(mul.size());
    if (n == 0) throw NotAGroup("empty multiplication table");
    auto g = std::make_shared<Group>();
    g->order = n;
    g->mul_.resize(static_cast<size_t>(n) * n);
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(mul[i].size()) != n)
            throw NotAGroup("multiplication table is not square at row " + std::to_string(i));
        for (int j = 0; j < n; ++j) {
            const int v = mul[i][j];
            if (v < 0 || v >= n)
                throw NotAGroup("table entry out of range at (" + std::to_string(i) + "," +
                                std::to_string(j) + ")");
            g->mul_[i * n + j] = v;
        }
    }
    for (int i = 0; i < n; ++i) {
        if (g->mul(0, i) != i || g->mul(i, 0) != i)
            throw NotAGroup("index 0 is not an identity, witness element " + std::to_string(i));
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                if (g->mul(g->mul(i, j), k) != g->mul(i, g->mul(j, k)))
                    throw NotAGroup("associativity fails at triple (" + std::to_string(i) + "," +
                                    std::to_string(j) + "," + std::to_string(k) + ")");
    g->inv_.assign(n, -1);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j)
            if (g->mul(i, j) == 0) {
                g->inv_[i] = j;
                break;
            }
        if (g->inv_[i] < 0)
            throw NotAGroup("no inverse for element " + std::to_string(i));
    }
    return g;
}

static std::vector<int> compose_perm(const std::vector<int>& a, const std::vector<int>& b) {
    // (a∘b)(x) = a(b(x))
    std::vector<int> r(a.size());
    for (size_t x = 0; x < a.size(); ++x) r[x] = a[b[x]];
    return r;
}

PermGroup perm_group_from_generators(const std::vector<std::vector<int>>& generators, int degree) {
    if (degree < 0) throw InputError("negative degree");
    for (const auto& p : generators) {
        if (static_cast<int>(p.size()) != degree)
            throw InputError("generator degree mismatch");
        std::vector<bool> seen(degree, false);
        for (int v : p) {
            if (v < 0 || v >= degree || seen[v]) throw InputError("generator is not a permutation");
            seen[v] = true;
        }
    }
    std::vector<int> id(degree);
    for (int i = 0; i < degree; ++i) id[i] = i;

    std::vector<std::vector<int>> elems{id};
    std::map<std::vector<int>, int> index{{id, 0}};
    for (size_t i = 0; i < elems.size(); ++i) {
        for (const auto& gen : generators) {
            auto p = compose_perm(gen, elems[i]);
            if (index.emplace(p, static_cast<int>(elems.size())).second) elems.push_back(std::move(p));
        }
    }
    const int n = static_cast<int>(elems.size());
    std::vector<std::vector<int>> mul(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            mul[i][j] = index.at(compose_perm(elems[i], elems[j]));
    PermGroup pg;
    pg.group = group_from_table(mul);
    pg.perms = std::move(elems);
    return pg;
}

GroupPtr group_from_permutations(const std::vector<std::vector<int>>& generators, int degree) {
    return perm_group_from_generators(generators, degree).group;
}

Subgroup subgroup_from_members(GroupPtr g, std::vector<int> members) {
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    Subgroup k{std::move(g), std::move(members)};
    if (k.members.empty() || k.members.front() != 0)
        throw NotASubgroup("subgroup must contain the identity");
    for (int a : k.members) {
        if (a < 0 || a >= k.parent->order) throw NotASubgroup("member out of range");
        if (!k.contains(k.parent->inv(a)))
            throw NotASubgroup("not closed under inverse at " + std::to_string(a));
        for (int b : k.members)
            if (!k.contains(k.parent->mul(a, b)))
                throw NotASubgroup("not closed under multiplication at (" + std::to_string(a) +
                                   "," + std::to_string(b) + ")");
    }
    return k;
}

Subgroup subgroup_closure(const GroupPtr& g, const std::vector<int>& generators) {
    std::set<int> m{0};
    std::vector<int> stack{0};
    for (int x : generators) {
        if (x < 0 || x >= g->order) throw InputError("generator out of range");
        if (m.insert(x).second) stack.push_back(x);
    }
    while (!stack.empty()) {
        int a = stack.back();
        stack.pop_back();
        std::vector<int> cur(m.begin(), m.end());
        for (int b : cur) {
            for (int c : {g->mul(a, b), g->mul(b, a), g->inv(a)})
                if (m.insert(c).second) stack.push_back(c);
        }
    }
    return Subgroup{g, std::vector<int>(m.begin(), m.end())};
}

Subgroup trivial_subgroup(const GroupPtr& g) { return Subgroup{g, {0}}; }

Subgroup full_subgroup(const GroupPtr& g) {
    std::vector<int> all(g->order);
    for (int i = 0; i < g->order; ++i) all[i] = i;
    return Subgroup{g, all};
}

std::vector<Subgroup> all_subgroups(const GroupPtr& g) {
    // Desk scale: close every subset of generators found so far.  We simply
    // collect closures of all subsets via incremental extension.
    std::set<std::vector<int>> found;
    found.insert({0});
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<std::vector<int>> cur(found.begin(), found.end());
        for (const auto& m : cur) {
            for (int x = 1; x < g->order; ++x) {
                std::vector<int> gens = m;
                gens.push_back(x);
                auto k = subgroup_closure(g, gens);
                if (found.insert(k.members).second) grew = true;
            }
        }
    }
    std::vector<Subgroup> out;
    out.reserve(found.size());
    for (const auto& m : found) out.push_back(Subgroup{g, m});
    std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
        if (a.members.size() != b.members.size()) return a.members.size() < b.members.size();
        return a.members < b.members;
    });
    return out;
}

Subgroup conjugate_subgroup(const Subgroup& k, int g) {
    const auto& G = *k.parent;
    std::vector<int> m;
    m.reserve(k.members.size());
    for (int a : k.members) m.push_back(G.mul(G.mul(g, a), G.inv(g)));
    std::sort(m.begin(), m.end());
    return Subgroup{k.parent, std::move(m)};
}

bool subgroups_conjugate(const Subgroup& a, const Subgroup& b) {
    if (!same_group(a.parent, b.parent)) throw GroupMismatch("subgroups of different groups");
    if (a.members.size() != b.members.size()) return false;
    for (int g = 0; g < a.parent->order; ++g)
        if (conjugate_subgroup(a, g).members == b.members) return true;
    return false;
}

std::vector<Subgroup> subgroup_conjugacy_reps(const GroupPtr& g) {
    auto subs = all_subgroups(g);
    std::vector<Subgroup> reps;
    for (const auto& k : subs) {
        bool seen = false;
        for (const auto& r : reps)
            if (subgroups_conjugate(r, k)) {
                seen = true;
                break;
            }
        if (!seen) reps.push_back(k);
    }
    return reps;
}

namespace {

bool extend_embedding(const Group& g, const Group& h, std::vector<int>& img, int next) {
    const int n = g.order;
    if (next == n) return true;
    for (int cand = 0; cand < h.order; ++cand) {
        bool used = false;
        for (int i = 0; i < next; ++i)
            if (img[i] == cand) {
                used = true;
                break;
            }
        if (used) continue;
        img[next] = cand;
        bool ok = true;
        for (int i = 0; i <= next && ok; ++i) {
            for (int j = 0; j <= next && ok; ++j) {
                int prod = g.mul(i, j);
                if (prod <= next && h.mul(img[i], img[j]) != img[prod]) ok = false;
                // If the product lands outside the assigned prefix we check later.
            }
        }
        if (ok && extend_embedding(g, h, img, next + 1)) return true;
    }
    img[next] = -1;
    return false;
}

} // namespace

std::optional<std::vector<int>> find_embedding(const GroupPtr& g, const GroupPtr& h) {
    if (g->order > h->order || h->order % g->order != 0) return std::nullopt;
    std::vector<int> img(g->order, -1);
    img[0] = 0;
    if (!extend_embedding(*g, *h, img, 1)) return std::nullopt;
    // Final full consistency check (the prefix test above is partial).
    for (int i = 0; i < g->order; ++i)
        for (int j = 0; j < g->order; ++j)
            if (h->mul(img[i], img[j]) != img[g->mul(i, j)])
                throw AlgebraError("internal: embedding search produced a non-homomorphism");
    return img;
}

bool is_builtin_group_name(const std::string& name) {
    return name == "trivial" || name == "c2" || name == "c3" || name == "c4" || name == "v4" ||
           name == "s3" || name == "c6";
}

GroupPtr builtin_group(const std::string& name) {
    if (name == "trivial") return group_from_permutations({}, 1);
    if (name == "c2") return group_from_permutations({{1, 0}}, 2);
    if (name == "c3") return group_from_permutations({{1, 2, 0}}, 3);
    if (name == "c4") return group_from_permutations({{1, 2, 3, 0}}, 4);
    if (name == "v4") return group_from_permutations({{1, 0, 2, 3}, {0, 1, 3, 2}}, 4);
    if (name == "s3") return group_from_permutations({{1, 0, 2}, {1, 2, 0}}, 3);
    if (name == "c6") return group_from_permutations({{1, 2, 3, 4, 5, 0}}, 6);
    throw InputError("unknown builtin group: " + name);
}

} // namespace ug
