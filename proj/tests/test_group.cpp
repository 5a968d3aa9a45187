#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ug/group.hpp"

using namespace ug;

TEST_CASE("group table validation") {
    // C2 is fine.
    CHECK(group_from_table({{0, 1}, {1, 0}})->order == 2);
    // Identity must be element 0.
    CHECK_THROWS_AS(group_from_table({{1, 0}, {0, 1}}), NotAGroup);
    // Broken associativity (a latin square that is not a group would need
    // order 5+; this table simply has a wrong entry).
    CHECK_THROWS_AS(group_from_table({{0, 1}, {1, 1}}), NotAGroup);
    CHECK_THROWS_AS(group_from_table({{0, 1}, {1, 2}}), NotAGroup);
}

TEST_CASE("permutation closure") {
    // S3 from a transposition and a 3-cycle.
    const GroupPtr s3 = group_from_permutations({{1, 0, 2}, {1, 2, 0}}, 3);
    CHECK(s3->order == 6);
    // Identity is element 0.
    for (int i = 0; i < 6; ++i) {
        CHECK(s3->mul(0, i) == i);
        CHECK(s3->mul(i, s3->inv(i)) == 0);
    }
    const GroupPtr c6 = group_from_permutations({{1, 2, 3, 4, 5, 0}}, 6);
    CHECK(c6->order == 6);
    // C6 is abelian, S3 is not.
    bool abelian = true;
    for (int a = 0; a < 6; ++a)
        for (int b = 0; b < 6; ++b)
            if (s3->mul(a, b) != s3->mul(b, a)) abelian = false;
    CHECK_FALSE(abelian);
}

TEST_CASE("subgroups of s3") {
    const GroupPtr s3 = builtin_group("s3");
    const auto subs = all_subgroups(s3);
    CHECK(subs.size() == 6);  // e, three C2s, one C3, S3
    std::vector<int> orders;
    for (const auto& s : subs) orders.push_back(s.order());
    CHECK(orders == std::vector<int>{1, 2, 2, 2, 3, 6});
    // Four conjugacy classes: e, C2, C3, S3.
    CHECK(subgroup_conjugacy_reps(s3).size() == 4);
    // The three C2s are pairwise conjugate.
    CHECK(subgroups_conjugate(subs[1], subs[2]));
    CHECK(subgroups_conjugate(subs[2], subs[3]));
    CHECK_FALSE(subgroups_conjugate(subs[1], subs[4]));
}

TEST_CASE("subgroup validation") {
    const GroupPtr s3 = builtin_group("s3");
    CHECK_THROWS_AS(subgroup_from_members(s3, {0, 1, 2}), NotASubgroup);
    const Subgroup k = subgroup_closure(s3, {1});
    CHECK(k.order() == 2);
}

TEST_CASE("embeddings") {
    const GroupPtr c2 = builtin_group("c2");
    const GroupPtr c3 = builtin_group("c3");
    const GroupPtr s3 = builtin_group("s3");
    const GroupPtr c6 = builtin_group("c6");
    CHECK(find_embedding(c2, s3).has_value());
    CHECK(find_embedding(c3, s3).has_value());
    CHECK(find_embedding(c2, c6).has_value());
    CHECK(find_embedding(c3, c6).has_value());
    CHECK_FALSE(find_embedding(s3, c6).has_value());  // same order, not isomorphic
    CHECK_FALSE(find_embedding(c3, c2).has_value());
    // An embedding is an injective homomorphism.
    const auto emb = *find_embedding(c3, s3);
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b)
            CHECK(emb[c3->mul(a, b)] == s3->mul(emb[a], emb[b]));
}

TEST_CASE("builtin groups") {
    for (const char* name : {"trivial", "c2", "c3", "c4", "v4", "s3", "c6"})
        CHECK(is_builtin_group_name(name));
    CHECK_FALSE(is_builtin_group_name("c7"));
    CHECK(builtin_group("trivial")->order == 1);
    CHECK(builtin_group("v4")->order == 4);
    // v4: every element is an involution.
    const GroupPtr v4 = builtin_group("v4");
    for (int i = 0; i < 4; ++i) CHECK(v4->mul(i, i) == 0);
    CHECK_THROWS_AS(builtin_group("nope"), InputError);
}
