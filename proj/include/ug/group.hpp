#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ug/error.hpp"

namespace ug {

// A finite group given by its full multiplication table. Elements are dense
// indices 0..order-1 and the identity is always index 0.
struct Group {
    int order = 0;
    std::vector<int> mul_;  // order*order, row-major: mul_[i*order+j] = i*j
    std::vector<int> inv_;

    int mul(int i, int j) const { return mul_[i * order + j]; }
    int inv(int i) const { return inv_[i]; }
};

using GroupPtr = std::shared_ptr<const Group>;

// Two groups are interchangeable iff their tables coincide.
bool same_group(const Group& a, const Group& b);
inline bool same_group(const GroupPtr& a, const GroupPtr& b) {
    return a.get() == b.get() || same_group(*a, *b);
}

// Validates the table (associativity, identity at index 0, inverses) and
// throws NotAGroup with a witness on failure.
GroupPtr group_from_table(const std::vector<std::vector<int>>& mul);

// Closure of permutation generators on {0..degree-1} under composition.
// Element 0 is the identity permutation; the rest follow breadth-first
// discovery order, so the numbering is reproducible.
GroupPtr group_from_permutations(const std::vector<std::vector<int>>& generators, int degree);

// The permutation realizing each element when the group was built from
// permutations; empty for table-built groups.
struct PermGroup {
    GroupPtr group;
    std::vector<std::vector<int>> perms;  // perms[i] is the permutation of element i
};
PermGroup perm_group_from_generators(const std::vector<std::vector<int>>& generators, int degree);

struct Subgroup {
    GroupPtr parent;
    std::vector<int> members;  // sorted, contains 0

    int order() const { return static_cast<int>(members.size()); }
    bool contains(int g) const;
};

// Checks closure under mul and inv; throws NotASubgroup otherwise.
Subgroup subgroup_from_members(GroupPtr g, std::vector<int> members);
Subgroup subgroup_closure(const GroupPtr& g, const std::vector<int>& generators);
Subgroup trivial_subgroup(const GroupPtr& g);
Subgroup full_subgroup(const GroupPtr& g);

// All subgroups, sorted by (order, members lexicographically).
std::vector<Subgroup> all_subgroups(const GroupPtr& g);

// One representative per conjugacy class, in the order of all_subgroups.
std::vector<Subgroup> subgroup_conjugacy_reps(const GroupPtr& g);

Subgroup conjugate_subgroup(const Subgroup& k, int g);
bool subgroups_conjugate(const Subgroup& a, const Subgroup& b);

// Lexicographically least injective homomorphism table g -> h, if any.
std::optional<std::vector<int>> find_embedding(const GroupPtr& g, const GroupPtr& h);

// Built-in groups: trivial, c2, c3, c4, v4, s3, c6 (permutation realizations).
GroupPtr builtin_group(const std::string& name);
bool is_builtin_group_name(const std::string& name);

} // namespace ug
